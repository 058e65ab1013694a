#pragma once

#include "qdeform/deformed_numbers.hpp"

namespace qdeform {

/// The four algebras handled by this library: sl(2) and three deformations.
enum class DeformationVariant {
    Classical,   // [E+,E-] = 2H
    OneParamQ,   // [E+,E-] = [2H]_q
    TwoParamV1,  // [E+,E-] = r^{J-H} [2H]_pq, r an orientation of p/q
    TwoParamV2,  // [E+,E-] = [H]_pq or [2H]_pq, see RhsConvention
};

enum class V1Orientation { POverQ, QOverP };
enum class V2BracketArg { H, TwoH };

/// Which reading of the two ambiguous ladder-commutator right-hand sides is
/// in force. The defaults are the readings the residual experiments single
/// out; the literal readings (POverQ, H) remain selectable so that the
/// verifier can measure both.
struct RhsConvention {
    V1Orientation v1_exponent_orientation = V1Orientation::QOverP;
    V2BracketArg v2_bracket_argument = V2BracketArg::TwoH;

    static RhsConvention literal() { return {V1Orientation::POverQ, V2BracketArg::H}; }

    friend bool operator==(const RhsConvention&, const RhsConvention&) = default;
};

/// Non-negative half-integer highest weight, stored as 2j to keep all depth
/// and exponent arithmetic in exact integers.
struct HighestWeight {
    int two_j = 0;

    double j() const { return 0.5 * static_cast<double>(two_j); }

    friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
};

/// Validating constructor; throws std::invalid_argument for negative 2j.
HighestWeight highest_weight_from_two_j(int two_j);

/// Number of lowering steps from the highest weight: n with m = j - n.
/// Throws std::invalid_argument unless m is a half-integer of the same
/// parity as j with n >= 0.
int depth_of(HighestWeight j, double m);

/// Eigenvalue of the ladder-commutator right-hand side on |j, m>:
///   Classical -> 2m, OneParamQ -> [2m]_q,
///   TwoParamV1 -> r^{j-m} [2m]_pq with r = p/q or q/p per conv,
///   TwoParamV2 -> [m]_pq or [2m]_pq per conv.
Complex commutator_rhs(DeformationVariant variant, const RhsConvention& conv,
                       HighestWeight j, double m, const Params& params);

/// H-eigenvalue reached from m by one application of E+ (direction +1) or
/// E- (direction -1): m +/- 1 in all four variants.
double weight_rule(double m, int direction);

}  // namespace qdeform
