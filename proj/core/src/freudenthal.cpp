#include "supermod/hwmod.hpp"

#include "supermod/weylgroup.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace supermod {

namespace {

// One irreducible component of the compact root system: its simple roots and
// the positive roots supported on them.
struct CompactFactor {
    std::vector<Root> simple;
    std::vector<Root> positive;
    Weight rho_k; // half sum of `positive`
};

std::vector<CompactFactor> compact_factors(const HermitianPair& pair, const PositiveSystem& p) {
    auto simples = compact_simple_roots(pair, p);
    auto pk = compact_part(pair, p);
    const auto& sys = *pair.sys;

    // Connected components of the simple-root graph (edges: nonzero pairing).
    std::vector<int> comp(simples.size(), -1);
    int ncomp = 0;
    for (size_t i = 0; i < simples.size(); ++i) {
        if (comp[i] >= 0) continue;
        std::vector<size_t> stack{i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            size_t a = stack.back();
            stack.pop_back();
            for (size_t b = 0; b < simples.size(); ++b) {
                if (comp[b] >= 0) continue;
                if (sys.pairing(simples[a].w, simples[b].w) != 0) {
                    comp[b] = ncomp;
                    stack.push_back(b);
                }
            }
        }
        ++ncomp;
    }

    std::vector<CompactFactor> factors(ncomp);
    for (size_t i = 0; i < simples.size(); ++i) factors[comp[i]].simple.push_back(simples[i]);

    // Assign each positive compact root to the factor carrying its support.
    for (auto& f : factors) {
        Mat m(sys.gram.rows(), f.simple.size());
        for (size_t j = 0; j < f.simple.size(); ++j)
            for (size_t i = 0; i < sys.gram.rows(); ++i) m(i, j) = f.simple[j].w[i];
        for (const auto& r : pk) {
            auto sol = solve(m, r.w.c);
            if (!sol) continue;
            Weight recon(sys.gram.rows());
            for (size_t j = 0; j < sol->size(); ++j) recon += (*sol)[j] * f.simple[j].w;
            if (recon == r.w) f.positive.push_back(r);
        }
        Weight rk(sys.gram.rows());
        Rational h = rat(1, 2);
        for (const auto& r : f.positive) rk += h * r.w;
        f.rho_k = rk;
    }

    size_t assigned = 0;
    for (auto& f : factors) assigned += f.positive.size();
    if (assigned != pk.size()) throw std::logic_error("compact root unassigned to a factor");
    return factors;
}

// Freudenthal recursion for one factor, absolute weights. Returns the drop
// multiset {lambda - mu : mu in supp F} with multiplicities.
std::map<Weight, long long> factor_drops(const SuperRootSystem& sys, const CompactFactor& f,
                                         const Weight& lambda) {
    const size_t d = sys.gram.rows();
    const size_t r = f.simple.size();

    // Antidominant representative bounds the support height.
    Weight lmin = lambda;
    bool moved = true;
    while (moved) {
        moved = false;
        for (const auto& a : f.simple) {
            Rational v = sys.coroot_pair(lmin, sys.root(a.w));
            if (v > 0) {
                lmin = lmin - v * a.w;
                moved = true;
            }
        }
    }
    // height of lambda - lmin over the factor simples
    Mat m(d, r);
    for (size_t j = 0; j < r; ++j)
        for (size_t i = 0; i < d; ++i) m(i, j) = f.simple[j].w[i];
    auto top = solve(m, (lambda - lmin).c);
    if (!top) throw std::logic_error("antidominant drop not in factor lattice");
    long long hmax = 0;
    for (const auto& x : *top) hmax += rat_to_long(x);

    // Enumerate dominant candidates lambda - sum c_i alpha_i with sum c <= hmax.
    std::vector<std::pair<Weight, long long>> dominant; // (weight, height)
    std::vector<long long> c(r, 0);
    std::function<void(size_t, long long)> enumerate = [&](size_t i, long long used) {
        if (i == r) {
            Weight mu = lambda;
            for (size_t j = 0; j < r; ++j) mu -= rat(c[j]) * f.simple[j].w;
            bool dom = true;
            for (const auto& a : f.simple)
                if (sys.coroot_pair(mu, sys.root(a.w)) < 0) {
                    dom = false;
                    break;
                }
            if (dom) dominant.push_back({mu, used});
            return;
        }
        for (long long k = 0; used + k <= hmax; ++k) {
            c[i] = k;
            enumerate(i + 1, used + k);
        }
        c[i] = 0;
    };
    enumerate(0, 0);
    std::sort(dominant.begin(), dominant.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });

    WeylGroup wk = weyl_group_from_roots(sys, f.simple);

    std::map<Weight, long long> mult; // over all weights (orbit-filled)
    Weight lr = lambda + f.rho_k;
    Rational lr2 = sys.pairing(lr, lr);

    for (const auto& [mu, h] : dominant) {
        long long mmu;
        if (h == 0) {
            mmu = 1;
        } else {
            Rational rhs = 0;
            for (const auto& a : f.positive) {
                Weight nu = mu + a.w;
                while (true) {
                    auto it = mult.find(nu);
                    if (it == mult.end()) {
                        // may still be a not-yet-filled dominant weight of lower height; all
                        // lower heights are orbit-filled already, so absent means zero
                        break;
                    }
                    rhs += Rational(static_cast<long>(it->second)) * sys.pairing(nu, a.w);
                    nu += a.w;
                }
            }
            Weight mr = mu + f.rho_k;
            Rational denom = lr2 - sys.pairing(mr, mr);
            if (denom == 0) throw std::logic_error("Freudenthal denominator vanished");
            Rational v = 2 * rhs / denom;
            v.canonicalize();
            if (!rat_is_integer(v) || v < 0) throw std::logic_error("non-integral Freudenthal multiplicity");
            mmu = rat_to_long(v);
        }
        if (mmu == 0) continue;
        for (const auto& w : weyl_orbit(wk, mu)) mult[w] = mmu;
    }

    std::map<Weight, long long> drops;
    for (const auto& [mu, m2] : mult) drops[lambda - mu] += m2;
    return drops;
}

} // namespace

KModule build_k_module(const HighestWeight& hw) {
    const auto& sys = *hw.pair.sys;
    KModule f;
    f.highest = hw.lambda;

    auto factors = compact_factors(hw.pair, hw.P);
    std::map<Weight, long long> drops;
    drops[Weight(hw.lambda.dim())] = 1;
    for (const auto& fac : factors) {
        auto fd = factor_drops(sys, fac, hw.lambda);
        std::map<Weight, long long> next;
        for (const auto& [d1, m1] : drops)
            for (const auto& [d2, m2] : fd) next[d1 + d2] += m1 * m2;
        drops = std::move(next);
    }
    for (const auto& [d, m] : drops) {
        f.mult[hw.lambda - d] = m;
        f.dim += m;
    }

    Rational expected = weyl_dimension(hw.pair, hw.P, hw.lambda);
    if (expected != Rational(static_cast<long>(f.dim)))
        throw std::logic_error("Freudenthal dimension disagrees with the Weyl formula");
    return f;
}

Rational weyl_dimension(const HermitianPair& pair, const PositiveSystem& p, const Weight& lambda) {
    const auto& sys = *pair.sys;
    Weight rk = rho_k0(pair, p);
    Rational dim = 1;
    for (const auto& a : compact_part(pair, p)) {
        Rational denom = sys.pairing(rk, a.w);
        if (denom == 0) throw std::logic_error("Weyl dimension formula: rho_k not regular");
        dim *= sys.pairing(lambda + rk, a.w) / denom;
        dim.canonicalize();
    }
    return dim;
}

} // namespace supermod
