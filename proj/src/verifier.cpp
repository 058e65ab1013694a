#include "qdeform/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qdeform {

namespace {

constexpr double kConventionPassTol = 1e-8;

bool params_are_real(const RepMatrices& rep) {
    switch (rep.variant) {
        case DeformationVariant::Classical:
            return true;
        case DeformationVariant::OneParamQ:
            return rep.params.q.imag() == 0.0;
        case DeformationVariant::TwoParamV1:
        case DeformationVariant::TwoParamV2:
            return rep.params.q.imag() == 0.0 && rep.params.p.imag() == 0.0;
    }
    return false;
}

// Bond product entering the ladder commutator at bond k; 0 past the window.
Complex bond_product(const RepMatrices& rep, int k) {
    if (k <= 0 || k >= rep.dim()) return Complex{0.0, 0.0};
    return rep.bond_radicands[static_cast<std::size_t>(k)];
}

std::vector<std::pair<int, Complex>> scan_radicand_signs(const RepMatrices& rep) {
    std::vector<std::pair<int, Complex>> violations;
    for (int k = 1; k <= rep.truncation_depth; ++k) {
        const Complex r = rep.bond_radicands[static_cast<std::size_t>(k)];
        if (r.imag() != 0.0 || r.real() < 0.0) {
            violations.emplace_back(k - 1, r);
        }
    }
    return violations;
}

}  // namespace

void validate_structure(const RepMatrices& rep) {
    const int dim = rep.dim();
    if (rep.truncation_depth < 0 || rep.H.rows() != dim || rep.H.cols() != dim ||
        rep.Eplus.rows() != dim || rep.Eplus.cols() != dim || rep.Eminus.rows() != dim ||
        rep.Eminus.cols() != dim || rep.bond_radicands.size() != static_cast<std::size_t>(dim)) {
        throw std::invalid_argument("RepMatrices: inconsistent dimensions");
    }
    if (rep.closed_at && (*rep.closed_at < 0 || *rep.closed_at > rep.truncation_depth)) {
        throw std::invalid_argument("RepMatrices: closure depth outside the window");
    }
    const Complex zero{0.0, 0.0};
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            if (r != c && rep.H(r, c) != zero) {
                throw std::invalid_argument("RepMatrices: H is not diagonal");
            }
            if (c != r + 1 && rep.Eplus(r, c) != zero) {
                throw std::invalid_argument("RepMatrices: E+ has support off the superdiagonal");
            }
            if (r != c + 1 && rep.Eminus(r, c) != zero) {
                throw std::invalid_argument("RepMatrices: E- has support off the subdiagonal");
            }
        }
    }
    for (int k = 1; k <= rep.truncation_depth; ++k) {
        const Complex c = rep.Eplus(k - 1, k);
        if (c != rep.Eminus(k, k - 1)) {
            throw std::invalid_argument("RepMatrices: E+/E- bond entries disagree");
        }
        const Complex r = rep.bond_radicands[static_cast<std::size_t>(k)];
        if (std::abs(c * c - r) > 1e-12 * std::max(1.0, std::abs(r))) {
            throw std::invalid_argument("RepMatrices: bond radicand inconsistent with entries");
        }
    }
}

double ladder_residual(const RepMatrices& rep, const RhsConvention& conv, int* rows_excluded) {
    const int N = rep.truncation_depth;
    int last;  // last depth included in the check
    int excluded;
    if (rep.closed_at) {
        last = *rep.closed_at;
        excluded = 0;
    } else {
        last = N - 1;
        excluded = 1;
    }
    if (rows_excluded != nullptr) *rows_excluded = excluded;

    double sumsq = 0.0;
    for (int n = 0; n <= last; ++n) {
        const double m = 0.5 * static_cast<double>(rep.j.two_j - 2 * n);
        const Complex rhs = commutator_rhs(rep.variant, conv, rep.j, m, rep.params);
        const Complex diag = bond_product(rep, n + 1) - bond_product(rep, n);
        sumsq += std::norm(diag - rhs);
    }
    const double scale = std::max(1.0, rep.Eplus.norm() * rep.Eminus.norm());
    return std::sqrt(sumsq) / scale;
}

VerificationReport verify_relations(const RepMatrices& rep, const RhsConvention& conv) {
    validate_structure(rep);

    VerificationReport report;
    report.rhs_convention_used = conv;

    // Weight grading: for diagonal H the commutator acts entrywise, so the
    // residual of [H, E+-] -+ E+- factors through the weight differences.
    const double h_norm = rep.H.norm();
    double plus_sq = 0.0;
    double minus_sq = 0.0;
    for (int k = 1; k <= rep.truncation_depth; ++k) {
        const Complex dh = rep.H(k - 1, k - 1) - rep.H(k, k);
        plus_sq += std::norm((dh - Complex{1.0, 0.0}) * rep.Eplus(k - 1, k));
        minus_sq += std::norm((Complex{1.0, 0.0} - dh) * rep.Eminus(k, k - 1));
    }
    report.residual_H_Eplus = std::sqrt(plus_sq) / std::max(1.0, h_norm * rep.Eplus.norm());
    report.residual_H_Eminus = std::sqrt(minus_sq) / std::max(1.0, h_norm * rep.Eminus.norm());

    report.residual_ladder = ladder_residual(rep, conv, &report.boundary_rows_excluded);

    if (rep.variant == DeformationVariant::TwoParamV1) {
        for (const auto orientation : {V1Orientation::POverQ, V1Orientation::QOverP}) {
            RhsConvention c = conv;
            c.v1_exponent_orientation = orientation;
            report.convention_residuals.push_back({c, ladder_residual(rep, c, nullptr)});
        }
    } else if (rep.variant == DeformationVariant::TwoParamV2) {
        for (const auto arg : {V2BracketArg::H, V2BracketArg::TwoH}) {
            RhsConvention c = conv;
            c.v2_bracket_argument = arg;
            report.convention_residuals.push_back({c, ladder_residual(rep, c, nullptr)});
        }
    }

    report.hermiticity_applicable = params_are_real(rep);
    if (report.hermiticity_applicable) {
        report.radicand_violations = scan_radicand_signs(rep);
    }
    return report;
}

std::vector<std::pair<int, Complex>> hermiticity_report(const RepMatrices& rep) {
    if (!params_are_real(rep)) {
        throw NotApplicableError("hermiticity_report: parameters are not real");
    }
    return scan_radicand_signs(rep);
}

RhsConvention resolve_convention(HighestWeight j, const Params& params, int N) {
    RhsConvention resolved;

    {
        const RepMatrices rep = build_rep(DeformationVariant::TwoParamV1, j, params, N);
        const double r_literal =
            ladder_residual(rep, {V1Orientation::POverQ, V2BracketArg::TwoH}, nullptr);
        const double r_flipped =
            ladder_residual(rep, {V1Orientation::QOverP, V2BracketArg::TwoH}, nullptr);
        if (r_literal <= kConventionPassTol) {
            resolved.v1_exponent_orientation = V1Orientation::POverQ;
        } else if (r_flipped <= kConventionPassTol) {
            resolved.v1_exponent_orientation = V1Orientation::QOverP;
        } else {
            throw UnresolvedConventionError(
                "resolve_convention: neither exponent orientation satisfies the V1 commutator "
                "(residuals " +
                std::to_string(r_literal) + ", " + std::to_string(r_flipped) + ")");
        }
    }
    {
        const RepMatrices rep = build_rep(DeformationVariant::TwoParamV2, j, params, N);
        const double r_literal =
            ladder_residual(rep, {V1Orientation::POverQ, V2BracketArg::H}, nullptr);
        const double r_doubled =
            ladder_residual(rep, {V1Orientation::POverQ, V2BracketArg::TwoH}, nullptr);
        if (r_literal <= kConventionPassTol) {
            resolved.v2_bracket_argument = V2BracketArg::H;
        } else if (r_doubled <= kConventionPassTol) {
            resolved.v2_bracket_argument = V2BracketArg::TwoH;
        } else {
            throw UnresolvedConventionError(
                "resolve_convention: neither bracket argument satisfies the V2 commutator "
                "(residuals " +
                std::to_string(r_literal) + ", " + std::to_string(r_doubled) + ")");
        }
    }
    return resolved;
}

}  // namespace qdeform
