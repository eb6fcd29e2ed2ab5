#include "supermod/hciso.hpp"

namespace supermod {

bool is_W_invariant(const WeylGroup& w, const SymPoly& phi) {
    for (const auto& g : w.gens) {
        // (phi o s)(x) = phi(s x): substitute x_i := sum_j s(i,j) y_j.
        if (!(phi.subst_linear(g) == phi)) return false;
    }
    return true;
}

bool in_I_h(const SuperRootSystem& sys, const WeylGroup& w, const SymPoly& phi) {
    if (!is_W_invariant(w, phi)) throw std::invalid_argument("polynomial is not W-invariant");
    const size_t d = sys.gram.rows();

    // One representative per W-orbit suffices for a W-invariant phi:
    // phi(lambda + t w(a)) = phi(w^-1 lambda + t a) on the mapped hyperplane.
    std::vector<Root> reps;
    std::set<Weight> seen;
    for (const auto& alpha : sys.roots) {
        if (!sys.is_isotropic(alpha) || seen.count(alpha.w)) continue;
        reps.push_back(alpha);
        for (const auto& x : weyl_orbit(w, alpha.w)) seen.insert(x);
    }

    for (const auto& alpha : reps) {
        // <alpha>-perp: nullspace of the covector x -> (x, alpha).
        Mat cov(1, d);
        for (size_t j = 0; j < d; ++j) cov(0, j) = sys.pairing(unit_weight(d, j), alpha.w);
        auto perp = nullspace(cov);
        // lambda(u, t) = sum u_k v_k + t*alpha: d x (perp+1) substitution
        Mat t0(d, perp.size() + 1), t1(d, perp.size() + 1);
        for (size_t k = 0; k < perp.size(); ++k)
            for (size_t i = 0; i < d; ++i) {
                t0(i, k) = perp[k][i];
                t1(i, k) = perp[k][i];
            }
        for (size_t i = 0; i < d; ++i) t1(i, perp.size()) = alpha.w[i];
        SymPoly diff = phi.subst_linear(t1) - phi.subst_linear(t0);
        if (!diff.is_zero()) return false;
    }
    return true;
}

SymPoly g_polynomial(const SuperRootSystem& sys) {
    const size_t d = sys.gram.rows();
    SymPoly g = SymPoly::constant(d, 1);
    for (const auto& alpha : sys.roots) {
        if (!sys.is_isotropic(alpha)) continue;
        std::vector<Rational> cov(d);
        for (size_t j = 0; j < d; ++j) cov[j] = sys.pairing(unit_weight(d, j), alpha.w);
        g = g * SymPoly::linear(cov);
    }
    return g;
}

bool is_typical(const SuperRootSystem& sys, const Weight& lambda_plus_rho) {
    for (const auto& alpha : sys.roots)
        if (sys.is_isotropic(alpha) && sys.pairing(lambda_plus_rho, alpha.w) == 0) return false;
    return true;
}

bool linkage(const SuperRootSystem& sys, const WeylGroup& w, const Weight& rho, const Weight& lambda,
             const Weight& mu) {
    Weight shifted = lambda + rho;
    if (!is_typical(sys, shifted))
        throw AtypicalWeightError("linkage requires a typical highest weight");
    auto orbit = weyl_orbit(w, shifted);
    return orbit.count(mu + rho) != 0;
}

SymPoly orbit_power_sum(const WeylGroup& w, const Weight& seed, int d) {
    const size_t n = w.dim;
    SymPoly p(n);
    for (const auto& v : weyl_orbit(w, seed)) {
        std::vector<Rational> cov(v.c.begin(), v.c.end());
        SymPoly lin = SymPoly::linear(cov);
        SymPoly pw = SymPoly::constant(n, 1);
        for (int k = 0; k < d; ++k) pw = pw * lin;
        p = p + pw;
    }
    return p;
}

} // namespace supermod
