#pragma once

#include <complex>

#include "qdeform/errors.hpp"

namespace qdeform {

using Complex = std::complex<double>;

/// Deformation parameters. `p` is ignored by the classical and one-parameter
/// variants. q = 1 and p*q = 1 are accepted and handled by closed-form
/// analytic limits; q = 0, q = -1 and p = 0 are rejected.
struct Params {
    Complex q{1.0, 0.0};
    Complex p{1.0, 0.0};

    friend bool operator==(const Params&, const Params&) = default;
};

/// Below this, |q - q^{-1}| (or |q - p^{-1}|) leaves no significant digits
/// in the bracket quotient and evaluation refuses with IllConditionedError.
/// Exactly-singular inputs never reach this test; they take the limit paths.
inline constexpr double kDenominatorGuard = 1e-8;

/// base^exponent on the principal branch. Integer real exponents are
/// evaluated by repeated multiplication (exact for exponent 0 and 1, no
/// branch-cut surprises for negative real bases); everything else goes
/// through exp(exponent * Log base).
Complex cpow(const Complex& base, const Complex& exponent);

/// One-parameter bracket [x]_q = (q^x - q^{-x}) / (q - q^{-1}).
///
/// q = 1 returns the analytic limit x. q = 0 and q = -1 raise
/// DegenerateParameterError; q within the guard band of the singular locus
/// raises IllConditionedError.
Complex q_bracket(const Complex& x, const Complex& q);

/// Two-parameter bracket [x]_pq = (q^x - p^{-x}) / (q - p^{-1}).
///
/// p = q delegates to q_bracket (the reduction is exact, not approximate);
/// p*q = 1 returns the analytic limit x * q^{x-1}.
Complex pq_bracket(const Complex& x, const Complex& p, const Complex& q);

/// d[x]_q / dq. Needed for the p*q = 1 limit of the V2 matrix-element
/// radicand, which is a divided difference collapsing onto a derivative.
/// Returns 0 at q = 1 (the bracket is stationary there).
Complex q_bracket_dq(const Complex& x, const Complex& q);

namespace detail {
/// Throws OverflowError when v has a non-finite component.
void ensure_finite(const Complex& v, const char* what);
/// Throws std::invalid_argument when an input has a non-finite component.
void require_finite(const Complex& v, const char* what);
}  // namespace detail

}  // namespace qdeform
