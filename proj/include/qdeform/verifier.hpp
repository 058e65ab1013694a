#pragma once

#include <utility>
#include <vector>

#include "qdeform/rep_builder.hpp"

namespace qdeform {

/// Ladder residual obtained under one reading of an ambiguous right-hand
/// side; verify_relations records both readings for V1 and V2.
struct ConventionResidual {
    RhsConvention convention;
    double residual_ladder = 0.0;

    friend bool operator==(const ConventionResidual&, const ConventionResidual&) = default;
};

struct VerificationReport {
    // Frobenius norms relative to operand scale (max(1, ||H|| ||E+-||) for
    // the grading residuals, max(1, ||E+|| ||E-||) for the ladder residual).
    double residual_H_Eplus = 0.0;
    double residual_H_Eminus = 0.0;
    double residual_ladder = 0.0;
    RhsConvention rhs_convention_used;
    // 1 when the representation did not close inside the window and the
    // corrupted last ladder-commutator row was dropped; 0 for closed modules.
    int boundary_rows_excluded = 0;
    bool hermiticity_applicable = false;
    std::vector<std::pair<int, Complex>> radicand_violations;  // (depth n, radicand)
    std::vector<ConventionResidual> convention_residuals;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Checks the structural invariants of a RepMatrices value: H diagonal,
/// E+ strictly superdiagonal, E- strictly subdiagonal, matching transpose
/// entries, and matrix entries consistent with the carried bond radicands.
/// Throws std::invalid_argument on violation.
void validate_structure(const RepMatrices& rep);

/// Relative Frobenius residual of [E+,E-] - diag(rhs) under the given
/// convention. For ladder matrices the commutator is exactly diagonal with
/// entries R_{n+1} - R_n, so the check is evaluated in the radicand domain,
/// where integer and bracket identities cancel exactly. Sets
/// *rows_excluded to 1 when the truncation boundary row was dropped.
double ladder_residual(const RepMatrices& rep, const RhsConvention& conv, int* rows_excluded);

/// Full check of the variant's defining relations. Reports, never throws,
/// on large residuals.
VerificationReport verify_relations(const RepMatrices& rep,
                                    const RhsConvention& conv = RhsConvention{});

/// Depths whose stored coupling is not real non-negative (negative radicand),
/// i.e. where E+ = (E-)^dagger fails entrywise. Defined for real parameters
/// only; raises NotApplicableError otherwise.
std::vector<std::pair<int, Complex>> hermiticity_report(const RepMatrices& rep);

/// Builds V1 and V2 at (j, params, N), measures the ladder residual under
/// both readings of each ambiguous right-hand side, and returns the pair
/// that passes (residual <= 1e-8). Ties prefer the literal reading
/// (POverQ, H). Raises UnresolvedConventionError when neither reading of
/// some axis passes.
RhsConvention resolve_convention(HighestWeight j, const Params& params, int N);

}  // namespace qdeform
