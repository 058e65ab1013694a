#include "qdeform/deformed_numbers.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace qdeform {

namespace detail {

void ensure_finite(const Complex& v, const char* what) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw OverflowError(std::string(what) + " left the range of double precision");
    }
}

void require_finite(const Complex& v, const char* what) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw std::invalid_argument(std::string(what) + " must be finite");
    }
}

namespace {

bool is_small_integer(const Complex& e, std::int64_t& out) {
    if (e.imag() != 0.0) return false;
    const double r = e.real();
    if (r != std::nearbyint(r)) return false;
    if (std::abs(r) > 1e9) return false;
    out = static_cast<std::int64_t>(r);
    return true;
}

Complex pow_uint(Complex base, std::uint64_t n) {
    Complex acc{1.0, 0.0};
    while (n != 0) {
        if (n & 1u) acc *= base;
        base *= base;
        n >>= 1u;
    }
    return acc;
}

}  // namespace
}  // namespace detail

Complex cpow(const Complex& base, const Complex& exponent) {
    detail::require_finite(base, "cpow base");
    detail::require_finite(exponent, "cpow exponent");

    std::int64_t n = 0;
    if (detail::is_small_integer(exponent, n)) {
        if (n == 0) return Complex{1.0, 0.0};
        if (base == Complex{0.0, 0.0}) {
            if (n > 0) return Complex{0.0, 0.0};
            throw std::domain_error("cpow: zero base with negative exponent");
        }
        Complex r = detail::pow_uint(base, static_cast<std::uint64_t>(n < 0 ? -n : n));
        if (n < 0) r = Complex{1.0, 0.0} / r;
        detail::ensure_finite(r, "integer power");
        return r;
    }
    if (base == Complex{0.0, 0.0}) {
        throw std::domain_error("cpow: zero base with non-integer exponent");
    }
    const Complex r = std::pow(base, exponent);
    detail::ensure_finite(r, "complex power");
    return r;
}

Complex q_bracket(const Complex& x, const Complex& q) {
    detail::require_finite(x, "bracket argument");
    detail::require_finite(q, "deformation parameter q");

    if (q == Complex{0.0, 0.0}) {
        throw DegenerateParameterError("q_bracket: q = 0");
    }
    if (q == Complex{-1.0, 0.0}) {
        // The q -> -1 limit depends on the parity of the exponent; there is
        // no single analytic value to return.
        throw DegenerateParameterError("q_bracket: q = -1");
    }
    if (q == Complex{1.0, 0.0}) {
        return x;  // analytic limit
    }
    const Complex denom = q - Complex{1.0, 0.0} / q;
    if (std::abs(denom) < kDenominatorGuard) {
        throw IllConditionedError("q_bracket: |q - q^{-1}| below guard band");
    }
    const Complex r = (cpow(q, x) - cpow(q, -x)) / denom;
    detail::ensure_finite(r, "q_bracket");
    return r;
}

Complex pq_bracket(const Complex& x, const Complex& p, const Complex& q) {
    detail::require_finite(x, "bracket argument");
    detail::require_finite(p, "deformation parameter p");
    detail::require_finite(q, "deformation parameter q");

    if (p == Complex{0.0, 0.0}) {
        throw DegenerateParameterError("pq_bracket: p = 0");
    }
    if (q == Complex{0.0, 0.0}) {
        throw DegenerateParameterError("pq_bracket: q = 0");
    }
    if (p == q) {
        return q_bracket(x, q);  // exact reduction, same arithmetic path
    }
    if (p * q == Complex{1.0, 0.0}) {
        // Numerator and denominator both vanish identically on this locus;
        // the divided difference collapses to d(t^x)/dt at t = q.
        const Complex r = x * cpow(q, x - Complex{1.0, 0.0});
        detail::ensure_finite(r, "pq_bracket limit");
        return r;
    }
    const Complex denom = q - Complex{1.0, 0.0} / p;
    if (std::abs(denom) < kDenominatorGuard) {
        throw IllConditionedError("pq_bracket: |q - p^{-1}| below guard band");
    }
    const Complex r = (cpow(q, x) - cpow(p, -x)) / denom;
    detail::ensure_finite(r, "pq_bracket");
    return r;
}

Complex q_bracket_dq(const Complex& x, const Complex& q) {
    detail::require_finite(x, "bracket argument");
    detail::require_finite(q, "deformation parameter q");

    if (q == Complex{0.0, 0.0}) {
        throw DegenerateParameterError("q_bracket_dq: q = 0");
    }
    if (q == Complex{-1.0, 0.0}) {
        throw DegenerateParameterError("q_bracket_dq: q = -1");
    }
    if (q == Complex{1.0, 0.0}) {
        return Complex{0.0, 0.0};  // [x]_q is stationary at q = 1
    }
    const Complex qinv = Complex{1.0, 0.0} / q;
    const Complex denom = q - qinv;
    if (std::abs(denom) < kDenominatorGuard) {
        throw IllConditionedError("q_bracket_dq: |q - q^{-1}| below guard band");
    }
    const Complex one{1.0, 0.0};
    const Complex num = x * (cpow(q, x - one) + cpow(q, -x - one)) * denom -
                        (cpow(q, x) - cpow(q, -x)) * (one + qinv * qinv);
    const Complex r = num / (denom * denom);
    detail::ensure_finite(r, "q_bracket_dq");
    return r;
}

}  // namespace qdeform
