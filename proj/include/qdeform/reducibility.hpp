#pragma once

#include <utility>
#include <vector>

#include "qdeform/rep_builder.hpp"

namespace qdeform {

/// Result of scanning the truncation function f at integer depths.
struct RootScanResult {
    HighestWeight j;
    Params params;
    int n_max = 0;
    double tol = 0.0;
    std::vector<int> roots;                          // n with f(n) ~ 0
    std::vector<std::pair<int, Complex>> f_values;   // (n, f(n)) for n = 1..n_max
    std::vector<int> subrep_dims;                    // root + 1 for each root

    friend bool operator==(const RootScanResult&, const RootScanResult&) = default;
};

/// Parameter value on which f(target_n) vanishes, found by a bracketed
/// one-dimensional solve in p at fixed real q.
struct LocusSolution {
    int target_n = 0;
    HighestWeight j;
    double q = 0.0;
    double p = 0.0;
    double residual = 0.0;  // |f(target_n)| at the solution
    int iterations = 0;

    friend bool operator==(const LocusSolution&, const LocusSolution&) = default;
};

/// Truncation function f(x) = q^{2j-x} [x+1]_q - p^{x-2j} [x+1]_p.
/// Its positive integer roots are exactly the depths at which the V2
/// lowering coefficient vanishes: (lower_coeff at depth x)^2 (q - p^{-1})
/// equals f(x) identically.
Complex f_eval(double x, HighestWeight j, const Complex& p, const Complex& q);

/// The two terms of f separately, for relative root tolerances (both grow
/// exponentially in x, so an absolute tolerance would mislabel).
std::pair<Complex, Complex> f_terms(double x, HighestWeight j, const Complex& p,
                                    const Complex& q);

/// Evaluates f at n = 1..n_max and declares n a root when
/// |f(n)| <= tol * max(|term1|, |term2|, 1).
RootScanResult integer_roots(HighestWeight j, const Params& params, int n_max, double tol);

/// Finds real p > 0 in the bracket with |f(target_n)| <= tol, at fixed real
/// q > 0, by bisection with Illinois-damped secant refinement. Raises
/// NoSignChangeError when f(target_n) has constant sign on the bracket and
/// MaxIterationsError when the tolerance is not met in max_iter steps.
LocusSolution locus_solve(int target_n, HighestWeight j, double q,
                          std::pair<double, double> p_bracket, double tol, int max_iter);

/// Restriction of H, E+, E- to depths 0..root_n. Requires the bond radicand
/// below depth root_n to vanish within tolerance (relative to the largest
/// bond radicand in the window); the block is then an invariant subspace of
/// dimension root_n + 1. Raises NotARootError otherwise.
RepMatrices extract_subrep(const RepMatrices& rep, int root_n, double tol = 1e-9);

}  // namespace qdeform
