#include "supermod/hwmod.hpp"

#include "supermod/weylgroup.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace supermod {

Weight rho(const PositiveSystem& p) {
    Weight r(p.sys->gram.rows());
    Rational h = rat(1, 2);
    for (const auto& a : p.roots) r += (a.odd ? -h : h) * a.w;
    return r;
}

Weight rho0(const PositiveSystem& p) {
    Weight r(p.sys->gram.rows());
    Rational h = rat(1, 2);
    for (const auto& a : p.roots)
        if (!a.odd) r += h * a.w;
    return r;
}

Weight rho_k0(const HermitianPair& pair, const PositiveSystem& p) {
    Weight r(p.sys->gram.rows());
    Rational h = rat(1, 2);
    for (const auto& a : compact_part(pair, p)) r += h * a.w;
    return r;
}

Weight rho_n0(const HermitianPair& pair, const PositiveSystem& p) {
    Weight r(p.sys->gram.rows());
    Rational h = rat(1, 2);
    for (const auto& a : noncompact_even_part(pair, p)) r += h * a.w;
    return r;
}

bool is_k_dominant_integral(const HermitianPair& pair, const PositiveSystem& p, const Weight& lambda) {
    for (const auto& a : compact_part(pair, p)) {
        Rational v = p.sys->coroot_pair(lambda, a);
        if (!rat_is_integer(v) || v < 0) return false;
    }
    return true;
}

HighestWeight::HighestWeight(HermitianPair pair_, PositiveSystem p_, Weight lambda_)
    : pair(std::move(pair_)), P(std::move(p_)), lambda(std::move(lambda_)) {
    if (lambda.dim() != pair.sys->gram.rows())
        throw std::invalid_argument("highest weight has wrong dimension");
    if (!is_k_dominant_integral(pair, P, lambda))
        throw std::invalid_argument("lambda(H_alpha) must be a nonnegative integer on P_k");
}

bool check_irreducibility_criterion(const HighestWeight& hw) {
    Weight shifted = hw.lambda + rho(hw.P);
    const auto& sys = *hw.pair.sys;
    for (const auto& g : hw.P.roots) {
        if (hw.pair.is_compact(g.w)) continue;
        Rational v = sys.coroot_pair(shifted, g);
        if (sys.is_isotropic(g)) {
            if (!(v < 0)) return false;
        } else if (v > 0) {
            return false;
        }
    }
    return true;
}

HeightMap::HeightMap(const SimpleSystem& simple) : simple_(simple) {
    if (simple.roots.empty()) throw std::invalid_argument("empty simple system");
    const size_t d = simple.roots[0].w.dim();
    Mat s(d, simple.size());
    for (size_t j = 0; j < simple.size(); ++j)
        for (size_t i = 0; i < d; ++i) s(i, j) = simple.roots[j].w[i];
    reduced_ = s;
    pivots_ = rref(reduced_);
    if (pivots_.size() != simple.size())
        throw std::invalid_argument("simple roots are not linearly independent");
    // Record which rows of the RREF carry each pivot; expansion solves by
    // eliminating against the reduced system each time.
    pseudo_ = s;
}

std::vector<Rational> HeightMap::expand(const Weight& drop) const {
    auto sol = solve(pseudo_, drop.c);
    if (!sol) throw std::domain_error("drop is not in the span of the simple roots: " + drop.str());
    // consistency: residual must vanish (solve already guarantees it)
    return *sol;
}

long long HeightMap::height(const Weight& drop) const {
    auto c = expand(drop);
    Rational s = 0;
    for (const auto& x : c) {
        if (!rat_is_integer(x) || x < 0)
            throw std::domain_error("drop is not a nonnegative integral combination: " + drop.str());
        s += x;
    }
    return rat_to_long(s);
}

namespace {

// Truncated "drop polynomials": maps drop-weight -> coefficient, all drops of
// height <= bound. Multiplication truncates by height.
using DropPoly = std::map<Weight, long long>;

DropPoly drop_mul(const DropPoly& a, const DropPoly& b, const HeightMap& hm, long long bound) {
    DropPoly r;
    for (const auto& [da, ca] : a)
        for (const auto& [db, cb] : b) {
            Weight d = da + db;
            if (hm.height(d) > bound) continue;
            r[d] += ca * cb;
        }
    for (auto it = r.begin(); it != r.end();)
        it = (it->second == 0) ? r.erase(it) : std::next(it);
    return r;
}

// Geometric series 1/(1 - e^{-eta}) truncated.
DropPoly geometric(const Weight& eta, const HeightMap& hm, long long bound) {
    DropPoly r;
    long long h = hm.height(eta);
    if (h <= 0) throw std::logic_error("positive root with nonpositive height");
    Weight acc(eta.dim());
    for (long long k = 0; k * h <= bound; ++k) {
        r[acc] = 1;
        acc += eta;
    }
    return r;
}

} // namespace

FormalCharacter character_formula(const HighestWeight& hw, long long depth) {
    if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
    if (!is_admissible(hw.pair, hw.P)) throw std::invalid_argument("character requires an admissible system");
    const auto& sys = *hw.pair.sys;
    HeightMap hm(simple_roots(hw.P));

    // Compact Weyl group; reflections in the compact simple roots.
    WeylGroup wk = weyl_group_from_roots(sys, compact_simple_roots(hw.pair, hw.P));

    Weight lr0 = hw.lambda + rho0(hw.P);
    DropPoly numerator;
    for (size_t i = 0; i < wk.order(); ++i) {
        Weight img = wk.elements[i].apply(lr0);
        Weight drop = lr0 - img;
        if (hm.height(drop) > depth) continue;
        numerator[drop] += wk.signs[i];
    }

    DropPoly acc = numerator;
    for (const auto& eta : hw.P.roots) {
        if (eta.odd) continue;
        acc = drop_mul(acc, geometric(eta.w, hm, depth), hm, depth);
    }
    for (const auto& eta : noncompact_odd_part(hw.pair, hw.P)) {
        DropPoly odd;
        odd[Weight(eta.w.dim())] = 1;
        if (hm.height(eta.w) <= depth) odd[eta.w] = 1;
        acc = drop_mul(acc, odd, hm, depth);
    }

    FormalCharacter ch;
    ch.base = hw.lambda;
    ch.height_bound = depth;
    ch.simple_basis = hm.simple();
    for (const auto& [drop, c] : acc)
        if (c != 0) ch.terms[hw.lambda - drop] = c;
    return ch;
}

FormalCharacter character_bruteforce(const HighestWeight& hw, long long depth) {
    if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
    HeightMap hm(simple_roots(hw.P));

    // ch U(p_0^-) * ch wedge(p_1^-), as truncated drop series.
    DropPoly acc;
    acc[Weight(hw.lambda.dim())] = 1;
    for (const auto& eta : noncompact_even_part(hw.pair, hw.P))
        acc = drop_mul(acc, geometric(eta.w, hm, depth), hm, depth);
    for (const auto& eta : noncompact_odd_part(hw.pair, hw.P)) {
        DropPoly odd;
        odd[Weight(eta.w.dim())] = 1;
        if (hm.height(eta.w) <= depth) odd[eta.w] = 1;
        acc = drop_mul(acc, odd, hm, depth);
    }

    // Convolve with the k-module weights.
    KModule f = build_k_module(hw);
    DropPoly fdrops;
    for (const auto& [mu, m] : f.mult) {
        Weight drop = hw.lambda - mu;
        if (hm.height(drop) <= depth) fdrops[drop] += m;
    }
    acc = drop_mul(acc, fdrops, hm, depth);

    FormalCharacter ch;
    ch.base = hw.lambda;
    ch.height_bound = depth;
    ch.simple_basis = hm.simple();
    for (const auto& [drop, c] : acc)
        if (c != 0) ch.terms[hw.lambda - drop] = c;
    return ch;
}

nlohmann::json character_to_json(const FormalCharacter& ch) {
    nlohmann::json j;
    j["base"] = weight_to_json(ch.base);
    j["heightBound"] = ch.height_bound;
    HeightMap hm(ch.simple_basis);
    // terms sorted by (height, lex): map order is lex; sort explicitly.
    std::vector<std::pair<long long, Weight>> keys;
    for (const auto& [mu, c] : ch.terms) keys.push_back({hm.height(ch.base - mu), mu});
    std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [h, mu] : keys)
        terms.push_back({{"mu", weight_to_json(mu)}, {"mult", ch.terms.at(mu)}});
    j["terms"] = terms;
    return j;
}

} // namespace supermod
