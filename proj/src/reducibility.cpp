#include "qdeform/reducibility.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qdeform {

std::pair<Complex, Complex> f_terms(double x, HighestWeight j, const Complex& p,
                                    const Complex& q) {
    if (!std::isfinite(x)) throw std::invalid_argument("f_terms: x must be finite");
    const double two_j = static_cast<double>(j.two_j);
    const Complex one_arg{x + 1.0, 0.0};
    const Complex t1 = cpow(q, Complex{two_j - x, 0.0}) * q_bracket(one_arg, q);
    const Complex t2 = cpow(p, Complex{x - two_j, 0.0}) * q_bracket(one_arg, p);
    return {t1, t2};
}

Complex f_eval(double x, HighestWeight j, const Complex& p, const Complex& q) {
    const auto [t1, t2] = f_terms(x, j, p, q);
    const Complex r = t1 - t2;
    detail::ensure_finite(r, "f_eval");
    return r;
}

RootScanResult integer_roots(HighestWeight j, const Params& params, int n_max, double tol) {
    if (n_max < 1) throw std::invalid_argument("integer_roots: n_max must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("integer_roots: tol must be positive");

    RootScanResult result;
    result.j = j;
    result.params = params;
    result.n_max = n_max;
    result.tol = tol;
    result.f_values.reserve(static_cast<std::size_t>(n_max));

    for (int n = 1; n <= n_max; ++n) {
        const auto [t1, t2] = f_terms(static_cast<double>(n), j, params.p, params.q);
        const Complex f = t1 - t2;
        result.f_values.emplace_back(n, f);
        const double scale = std::max({std::abs(t1), std::abs(t2), 1.0});
        if (std::abs(f) <= tol * scale) {
            result.roots.push_back(n);
            result.subrep_dims.push_back(n + 1);
        }
    }
    return result;
}

LocusSolution locus_solve(int target_n, HighestWeight j, double q,
                          std::pair<double, double> p_bracket, double tol, int max_iter) {
    if (target_n < 1) throw std::invalid_argument("locus_solve: target_n must be >= 1");
    if (!(q > 0.0) || !std::isfinite(q)) {
        throw std::invalid_argument("locus_solve: q must be a positive real");
    }
    double lo = p_bracket.first;
    double hi = p_bracket.second;
    if (!(0.0 < lo) || !(lo < hi) || !std::isfinite(hi)) {
        throw std::invalid_argument("locus_solve: bracket must satisfy 0 < lo < hi");
    }
    if (!(tol > 0.0)) throw std::invalid_argument("locus_solve: tol must be positive");
    if (max_iter < 1) throw std::invalid_argument("locus_solve: max_iter must be >= 1");

    const auto g = [&](double p) {
        // Real parameters keep every intermediate exactly real.
        return f_eval(static_cast<double>(target_n), j, Complex{p, 0.0}, Complex{q, 0.0}).real();
    };

    LocusSolution sol;
    sol.target_n = target_n;
    sol.j = j;
    sol.q = q;

    double glo = g(lo);
    if (std::abs(glo) <= tol) {
        sol.p = lo;
        sol.residual = std::abs(glo);
        return sol;
    }
    double ghi = g(hi);
    if (std::abs(ghi) <= tol) {
        sol.p = hi;
        sol.residual = std::abs(ghi);
        return sol;
    }
    if ((glo > 0.0) == (ghi > 0.0)) {
        throw NoSignChangeError("locus_solve: f(target_n) has constant sign on the bracket [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }

    // Illinois-damped false position: secant step on the bracket endpoints,
    // with the retained endpoint's value halved to avoid stagnation.
    int side = 0;
    for (int iter = 1; iter <= max_iter; ++iter) {
        double x = hi - ghi * (hi - lo) / (ghi - glo);
        if (!std::isfinite(x) || x <= lo || x >= hi) {
            x = 0.5 * (lo + hi);
        }
        const double gx = g(x);
        sol.iterations = iter;
        if (std::abs(gx) <= tol) {
            sol.p = x;
            sol.residual = std::abs(gx);
            return sol;
        }
        if ((gx > 0.0) == (glo > 0.0)) {
            lo = x;
            glo = gx;
            if (side == -1) ghi *= 0.5;
            side = -1;
        } else {
            hi = x;
            ghi = gx;
            if (side == 1) glo *= 0.5;
            side = 1;
        }
    }
    throw MaxIterationsError("locus_solve: no convergence to |f| <= " + std::to_string(tol) +
                             " within " + std::to_string(max_iter) + " iterations");
}

RepMatrices extract_subrep(const RepMatrices& rep, int root_n, double tol) {
    if (root_n < 1 || root_n >= rep.truncation_depth + 1) {
        throw std::invalid_argument("extract_subrep: root_n must satisfy 1 <= root_n <= N");
    }
    if (!(tol > 0.0)) throw std::invalid_argument("extract_subrep: tol must be positive");

    // The coupling to be severed must already be negligible next to the
    // largest coupling in the window, otherwise the block is not invariant.
    double scale = 1.0;
    for (const Complex& r : rep.bond_radicands) scale = std::max(scale, std::abs(r));
    const Complex severed = root_n + 1 <= rep.truncation_depth
                                ? rep.bond_radicands[static_cast<std::size_t>(root_n + 1)]
                                : Complex{0.0, 0.0};
    if (std::abs(severed) > tol * scale) {
        throw NotARootError("extract_subrep: lowering coefficient at depth " +
                            std::to_string(root_n) + " does not vanish (radicand magnitude " +
                            std::to_string(std::abs(severed)) + ")");
    }

    RepMatrices sub;
    sub.variant = rep.variant;
    sub.params = rep.params;
    sub.j = rep.j;
    sub.truncation_depth = root_n;
    const int dim = root_n + 1;
    sub.H = rep.H.topLeftCorner(dim, dim);
    sub.Eplus = rep.Eplus.topLeftCorner(dim, dim);
    sub.Eminus = rep.Eminus.topLeftCorner(dim, dim);
    sub.bond_radicands.assign(rep.bond_radicands.begin(), rep.bond_radicands.begin() + dim);
    sub.closed_at = rep.closed_at && *rep.closed_at < root_n ? *rep.closed_at : root_n;
    return sub;
}

}  // namespace qdeform
