#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "qdeform/algebra.hpp"

namespace qdeform {

/// Truncated ladder matrices of H, E+, E- on the highest-weight module,
/// in the depth basis n = 0..N (m = j - n).
///
/// The coupling between depths k-1 and k ("bond k") carries one shared
/// radicand R_k; the stored matrix entries are its principal square root:
///   Eplus(k-1, k) = Eminus(k, k-1) = sqrt(R_k).
/// The radicands are kept alongside the matrices: they are the quantities
/// in which the defining relations cancel exactly, and the sign scan of the
/// hermiticity report reads them directly.
///
/// If some bond radicand vanishes exactly the module closes there:
/// `closed_at = d` means E- annihilates the depth-d state, depths 0..d form
/// the whole module, and every deeper coupling is zero (those basis slots
/// are unreachable padding). Otherwise the single coupling from depth N to
/// N+1 is dropped at the truncation boundary.
struct RepMatrices {
    DeformationVariant variant = DeformationVariant::Classical;
    Params params;
    HighestWeight j;
    int truncation_depth = 0;  // N; basis has N+1 states
    std::optional<int> closed_at;

    Eigen::MatrixXcd H;
    Eigen::MatrixXcd Eplus;
    Eigen::MatrixXcd Eminus;
    std::vector<Complex> bond_radicands;  // size N+1, index k = 1..N; [0] = 0

    int dim() const { return truncation_depth + 1; }
};

/// Radicand shared by the two matrix elements across bond k (between depths
/// k-1 and k). k = 0 denotes the nonexistent bond above the highest weight
/// and yields 0. Per variant, with A = 2j - k + 1:
///   Classical:  k * A
///   OneParamQ:  [k]_q [A]_q
///   TwoParamV1: [k]_pq [A]_pq
///   TwoParamV2: (q^A [k]_q - p^{-A} [k]_p) / (q - p^{-1})
/// For V2, p = q uses the exact factorisation [A]_q [k]_q and p*q = 1 the
/// divided-difference limit A q^{A-1} [k]_q + q^A d[k]_q/dq.
Complex bond_radicand(DeformationVariant variant, HighestWeight j, int k, const Params& params);

/// Coefficient of |j, m+1> in E+ |j, m> (principal square root of the bond
/// radicand at bond n = j - m; zero at m = j).
Complex raise_coeff(DeformationVariant variant, HighestWeight j, double m, const Params& params);

/// Coefficient of |j, m-1> in E- |j, m> (bond n + 1). Descends below m = -j
/// for TwoParamV2; vanishes there for the other variants.
Complex lower_coeff(DeformationVariant variant, HighestWeight j, double m, const Params& params);

/// Builds the truncated representation matrices. Deterministic; couplings
/// beyond an exactly vanishing bond are zero (module closure).
RepMatrices build_rep(DeformationVariant variant, HighestWeight j, const Params& params, int N);

/// ||(E-)^n |j,j>||, the product of the n lowering coefficients along the
/// descent path. Raises ZeroNormError when a path coefficient vanishes at or
/// before depth n (the state is not reachable). n = 0 gives 1.
Complex monomial_norm(DeformationVariant variant, HighestWeight j, int n, const Params& params);

/// Reciprocal of monomial_norm: the coefficient that normalises
/// (E-)^n |j,j> to a unit state.
Complex normalization_coeff(DeformationVariant variant, HighestWeight j, int n,
                            const Params& params);

}  // namespace qdeform
