#pragma once

#include <string>
#include <utility>

#include "qdeform/reducibility.hpp"
#include "qdeform/verifier.hpp"

namespace qdeform {

// --- text forms -----------------------------------------------------------
//
// Complex numbers serialise as two-element arrays [re, im]; matrices as
// row-major nested arrays of those pairs. All floating-point output is
// printed with 17 significant digits so that parse(serialize(x)) == x
// exactly. Keys appear in the fixed order documented in the README.

std::string to_string(DeformationVariant v);
DeformationVariant variant_from_string(const std::string& s);

std::string to_string(V1Orientation o);
V1Orientation v1_orientation_from_string(const std::string& s);

std::string to_string(V2BracketArg a);
V2BracketArg v2_bracket_arg_from_string(const std::string& s);

/// %.17g, the shortest fixed policy that round-trips binary64.
std::string fmt_double(double v);

/// Accepts "1.5", "1.5+0.2i", "-0.2i", "2i", "1e-3-2.5e-2i" and the bare
/// units "i", "+i", "-i". Throws std::invalid_argument on anything else.
Complex parse_complex(const std::string& text);

/// Half-integer in fraction ("3/2") or decimal ("1.5", "2") form; returns
/// the doubled value. Rejects thirds and anything else off the half-integer
/// lattice with std::invalid_argument.
int parse_half_integer_doubled(const std::string& text);

// --- JSON ------------------------------------------------------------------

std::string to_json(const RepMatrices& rep);
std::string to_json(const VerificationReport& report);
std::string to_json(const RootScanResult& scan);
std::string to_json(const LocusSolution& sol);
/// {"value": [re, im]} for the bracket subcommand.
std::string bracket_value_json(const Complex& value);

RepMatrices rep_matrices_from_json(const std::string& text);
VerificationReport verification_report_from_json(const std::string& text);
RootScanResult root_scan_from_json(const std::string& text);
LocusSolution locus_solution_from_json(const std::string& text);
Complex bracket_value_from_json(const std::string& text);

bool operator==(const RepMatrices& a, const RepMatrices& b);

// --- parameter-space scan ----------------------------------------------------

enum class ScanQuantity {
    RootCount,          // number of integer roots of f in 1..n_max
    MinAbsFAtIntegers,  // min over n of |f(n)| / max(|term1|, |term2|, 1)
    RadicandViolations  // count of negative V2 bond radicands within depth N
};

std::string to_string(ScanQuantity q);
ScanQuantity scan_quantity_from_string(const std::string& s);

struct ScanGrid {
    double p_lo = 0.0, p_hi = 0.0;
    int p_steps = 0;
    double q_lo = 0.0, q_hi = 0.0;
    int q_steps = 0;
    ScanQuantity quantity = ScanQuantity::RootCount;
};

/// Evaluates the quantity for the V2 family over the grid and emits CSV with
/// header "p,q,<quantity>", rows in p-major order. Cells are independent and
/// keyed by grid index, so the output is byte-identical for any thread
/// count. Cells whose evaluation raises a domain error print as "nan".
std::string run_scan_csv(const ScanGrid& grid, HighestWeight j, int n_max, int N, double tol,
                         int threads);

}  // namespace qdeform
