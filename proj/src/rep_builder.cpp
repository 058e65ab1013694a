#include "qdeform/rep_builder.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace qdeform {

namespace {

Complex v2_radicand(HighestWeight j, int k, const Params& params) {
    const Complex& p = params.p;
    const Complex& q = params.q;
    if (p == Complex{0.0, 0.0} || q == Complex{0.0, 0.0}) {
        throw DegenerateParameterError("V2 radicand: p, q must be non-zero");
    }
    const Complex a{static_cast<double>(j.two_j - k + 1), 0.0};
    const Complex kk{static_cast<double>(k), 0.0};

    if (p == q) {
        // q^A [k]_q - q^{-A} [k]_q factorises: radicand = [A]_q [k]_q.
        return q_bracket(a, q) * q_bracket(kk, q);
    }
    if (p * q == Complex{1.0, 0.0}) {
        // Numerator and denominator vanish identically on p q = 1; the
        // quotient is the derivative of t^A [k]_t at t = q.
        return a * cpow(q, a - Complex{1.0, 0.0}) * q_bracket(kk, q) +
               cpow(q, a) * q_bracket_dq(kk, q);
    }
    const Complex denom = q - Complex{1.0, 0.0} / p;
    if (std::abs(denom) < kDenominatorGuard) {
        throw IllConditionedError("V2 radicand: |q - p^{-1}| below guard band");
    }
    return (cpow(q, a) * q_bracket(kk, q) - cpow(p, -a) * q_bracket(kk, p)) / denom;
}

}  // namespace

Complex bond_radicand(DeformationVariant variant, HighestWeight j, int k, const Params& params) {
    if (j.two_j < 0) throw std::invalid_argument("bond_radicand: negative 2j");
    if (k < 0) throw std::invalid_argument("bond_radicand: negative bond index");
    if (k == 0) return Complex{0.0, 0.0};

    const double a = static_cast<double>(j.two_j - k + 1);
    switch (variant) {
        case DeformationVariant::Classical:
            return Complex{static_cast<double>(k) * a, 0.0};
        case DeformationVariant::OneParamQ:
            return q_bracket(Complex{static_cast<double>(k), 0.0}, params.q) *
                   q_bracket(Complex{a, 0.0}, params.q);
        case DeformationVariant::TwoParamV1:
            return pq_bracket(Complex{static_cast<double>(k), 0.0}, params.p, params.q) *
                   pq_bracket(Complex{a, 0.0}, params.p, params.q);
        case DeformationVariant::TwoParamV2:
            return v2_radicand(j, k, params);
    }
    throw std::logic_error("bond_radicand: unknown variant");
}

Complex raise_coeff(DeformationVariant variant, HighestWeight j, double m, const Params& params) {
    const int n = depth_of(j, m);
    return std::sqrt(bond_radicand(variant, j, n, params));
}

Complex lower_coeff(DeformationVariant variant, HighestWeight j, double m, const Params& params) {
    const int n = depth_of(j, m);
    return std::sqrt(bond_radicand(variant, j, n + 1, params));
}

RepMatrices build_rep(DeformationVariant variant, HighestWeight j, const Params& params, int N) {
    if (j.two_j < 0) throw std::invalid_argument("build_rep: negative 2j");
    if (N < 0) throw std::invalid_argument("build_rep: truncation depth must be >= 0");

    RepMatrices rep;
    rep.variant = variant;
    rep.params = params;
    rep.j = j;
    rep.truncation_depth = N;

    const int dim = N + 1;
    rep.H = Eigen::MatrixXcd::Zero(dim, dim);
    rep.Eplus = Eigen::MatrixXcd::Zero(dim, dim);
    rep.Eminus = Eigen::MatrixXcd::Zero(dim, dim);
    rep.bond_radicands.assign(static_cast<std::size_t>(dim), Complex{0.0, 0.0});

    for (int n = 0; n < dim; ++n) {
        rep.H(n, n) = Complex{0.5 * static_cast<double>(j.two_j - 2 * n), 0.0};
    }
    for (int k = 1; k <= N; ++k) {
        const Complex r = bond_radicand(variant, j, k, params);
        if (r == Complex{0.0, 0.0}) {
            // E- annihilates the depth k-1 state; everything below is
            // unreachable from the highest weight.
            rep.closed_at = k - 1;
            break;
        }
        const Complex c = std::sqrt(r);
        rep.bond_radicands[static_cast<std::size_t>(k)] = r;
        rep.Eplus(k - 1, k) = c;
        rep.Eminus(k, k - 1) = c;
    }
    if (!rep.closed_at) {
        // Probe the first coupling outside the window: when it vanishes the
        // module ends exactly at depth N and the truncation drops nothing.
        try {
            if (bond_radicand(variant, j, N + 1, params) == Complex{0.0, 0.0}) {
                rep.closed_at = N;
            }
        } catch (const Error&) {
            // Not decidable beyond the window; leave the rep marked as open.
        }
    }
    return rep;
}

Complex monomial_norm(DeformationVariant variant, HighestWeight j, int n, const Params& params) {
    if (n < 0) throw std::invalid_argument("monomial_norm: depth must be >= 0");
    Complex norm{1.0, 0.0};
    for (int k = 1; k <= n; ++k) {
        const Complex r = bond_radicand(variant, j, k, params);
        if (r == Complex{0.0, 0.0}) {
            throw ZeroNormError("monomial_norm: descent path coefficient vanishes at depth " +
                                std::to_string(k - 1) + "; depth " + std::to_string(n) +
                                " is not reachable");
        }
        norm *= std::sqrt(r);
    }
    detail::ensure_finite(norm, "monomial_norm");
    return norm;
}

Complex normalization_coeff(DeformationVariant variant, HighestWeight j, int n,
                            const Params& params) {
    return Complex{1.0, 0.0} / monomial_norm(variant, j, n, params);
}

}  // namespace qdeform
