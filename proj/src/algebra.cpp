#include "qdeform/algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qdeform {

HighestWeight highest_weight_from_two_j(int two_j) {
    if (two_j < 0) {
        throw std::invalid_argument("highest weight: 2j must be non-negative, got " +
                                    std::to_string(two_j));
    }
    return HighestWeight{two_j};
}

int depth_of(HighestWeight j, double m) {
    const double two_m = 2.0 * m;
    if (!std::isfinite(two_m) || two_m != std::nearbyint(two_m)) {
        throw std::invalid_argument("weight m must be a half-integer");
    }
    const long long tm = static_cast<long long>(two_m);
    if (((static_cast<long long>(j.two_j) - tm) & 1LL) != 0) {
        throw std::invalid_argument("weight m must differ from j by an integer");
    }
    const long long n2 = static_cast<long long>(j.two_j) - tm;
    if (n2 < 0) {
        throw std::invalid_argument("weight m lies above the highest weight j");
    }
    return static_cast<int>(n2 / 2);
}

Complex commutator_rhs(DeformationVariant variant, const RhsConvention& conv,
                       HighestWeight j, double m, const Params& params) {
    const int n = depth_of(j, m);
    const double two_m = static_cast<double>(j.two_j - 2 * n);  // exact

    switch (variant) {
        case DeformationVariant::Classical:
            return Complex{two_m, 0.0};
        case DeformationVariant::OneParamQ:
            return q_bracket(Complex{two_m, 0.0}, params.q);
        case DeformationVariant::TwoParamV1: {
            if (params.q == Complex{0.0, 0.0} || params.p == Complex{0.0, 0.0}) {
                throw DegenerateParameterError("commutator_rhs: p, q must be non-zero");
            }
            const Complex r = conv.v1_exponent_orientation == V1Orientation::POverQ
                                  ? params.p / params.q
                                  : params.q / params.p;
            return cpow(r, Complex{static_cast<double>(n), 0.0}) *
                   pq_bracket(Complex{two_m, 0.0}, params.p, params.q);
        }
        case DeformationVariant::TwoParamV2: {
            const double arg = conv.v2_bracket_argument == V2BracketArg::TwoH ? two_m : 0.5 * two_m;
            return pq_bracket(Complex{arg, 0.0}, params.p, params.q);
        }
    }
    throw std::logic_error("commutator_rhs: unknown variant");
}

double weight_rule(double m, int direction) {
    if (direction != 1 && direction != -1) {
        throw std::invalid_argument("weight_rule: direction must be +1 or -1");
    }
    return m + static_cast<double>(direction);
}

}  // namespace qdeform
