#include "supermod/possys.hpp"

#include "supermod/linineq.hpp"
#include "supermod/weylgroup.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace supermod {

void PositiveSystem::rebuild_index() {
    index_.clear();
    for (const auto& r : roots) index_.insert(r.w);
}

bool is_abstract_positive(const SuperRootSystem& sys, const std::vector<Root>& p) {
    std::set<Weight> in;
    for (const auto& r : p) {
        if (!sys.contains(r.w)) throw std::invalid_argument("element is not a root: " + r.w.str());
        in.insert(r.w);
    }
    if (in.size() != p.size()) return false;
    for (const auto& r : p)
        if (in.count(-r.w)) return false; // P and -P intersect
    if (2 * in.size() != sys.roots.size()) return false; // P and -P must exhaust Delta
    for (const auto& a : p)
        for (const auto& b : p) {
            Weight s = a.w + b.w;
            if (sys.contains(s) && !in.count(s)) return false;
        }
    return true;
}

PositiveSystem make_positive_system(std::shared_ptr<const SuperRootSystem> sys, std::vector<Root> roots) {
    if (!is_abstract_positive(*sys, roots)) throw std::invalid_argument("not an abstract positive system");
    PositiveSystem p;
    p.sys = std::move(sys);
    std::sort(roots.begin(), roots.end());
    p.roots = std::move(roots);
    p.rebuild_index();
    return p;
}

PositiveSystem positive_system_from_simple(std::shared_ptr<const SuperRootSystem> sys, const SimpleSystem& simple) {
    std::set<Weight> gen;
    for (const auto& r : simple.roots) {
        if (!sys->contains(r.w)) throw std::invalid_argument("simple root not in system: " + r.w.str());
        gen.insert(r.w);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Weight> cur(gen.begin(), gen.end());
        for (const auto& a : cur)
            for (const auto& b : cur) {
                Weight s = a + b;
                if (sys->contains(s) && !gen.count(s)) {
                    gen.insert(s);
                    grew = true;
                }
            }
    }
    std::vector<Root> roots;
    for (const auto& w : gen) roots.push_back(sys->root(w));
    return make_positive_system(std::move(sys), std::move(roots));
}

std::vector<Rational> positivity_functional(const PositiveSystem& p) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : p.roots) rows.push_back(r.w.c);
    auto witness = fm_strict_witness(rows);
    if (!witness)
        throw std::logic_error("no positivity functional exists; system is not a positive system");
    return *witness;
}

Rational eval_functional(const std::vector<Rational>& ell, const Weight& w) {
    if (ell.size() != w.dim()) throw std::invalid_argument("functional dimension mismatch");
    Rational s = 0;
    for (size_t i = 0; i < ell.size(); ++i) s += ell[i] * w[i];
    return s;
}

namespace {

// Indecomposable elements of a set of roots under addition within the set.
std::vector<Root> indecomposables(const std::vector<Root>& set) {
    std::set<Weight> in;
    for (const auto& r : set) in.insert(r.w);
    std::vector<Root> out;
    for (const auto& a : set) {
        bool decomposable = false;
        for (const auto& b : set) {
            if (decomposable) break;
            Weight rest = a.w - b.w;
            if (!rest.is_zero() && in.count(rest)) decomposable = true;
        }
        if (!decomposable) out.push_back(a);
    }
    return out;
}

} // namespace

SimpleSystem simple_roots(const PositiveSystem& p) {
    return SimpleSystem{indecomposables(p.roots)};
}

PositiveSystem positive_system_from_functional(std::shared_ptr<const SuperRootSystem> sys,
                                               const std::vector<Rational>& ell) {
    std::vector<Root> pos;
    for (const auto& r : sys->roots) {
        Rational v = eval_functional(ell, r.w);
        if (v == 0) throw std::invalid_argument("functional vanishes on root " + r.w.str());
        if (v > 0) pos.push_back(r);
    }
    return make_positive_system(std::move(sys), std::move(pos));
}

// ---------------------------------------------------------------------------

std::vector<std::string> legal_form_keys(const Family& f) {
    switch (f.kind) {
        case FamilyKind::A: return {"su"};
        case FamilyKind::B: return f.m == 0 ? std::vector<std::string>{"sp"}
                                            : std::vector<std::string>{"so2", "so-compact"};
        case FamilyKind::C: return {"so2"};
        case FamilyKind::D: return {"so2", "so-star", "so-compact"};
        case FamilyKind::D21: return {"sl2x3", "sl2su2su2"};
        case FamilyKind::F4: return {"sl2so7", "su2so25"};
        case FamilyKind::G3: return {"sl2g2"};
    }
    return {};
}

HermitianPair build_hermitian_pair(const Family& f, const std::string& key, int p, int q, int r, int s) {
    auto legal = legal_form_keys(f);
    if (std::find(legal.begin(), legal.end(), key) == legal.end())
        throw std::invalid_argument("real form " + key + " does not extend to " + f.name());

    HermitianPair hp;
    hp.family = f;
    hp.form_key = key;
    hp.sys = shared_root_system(f);

    auto add_pm = [&hp](const Weight& w) {
        hp.compact.insert(w);
        hp.compact.insert(-w);
    };

    switch (f.kind) {
        case FamilyKind::A: {
            const int M = f.m + 1, N = f.n + 1;
            if (p < 0 || q < 0 || r < 0 || s < 0 || p + q != M || r + s != N)
                throw std::invalid_argument("A-family splitting requires p+q = m+1, r+s = n+1, entries >= 0");
            hp.p = p; hp.q = q; hp.r = r; hp.s = s;
            hp.form_label = "su(" + std::to_string(p) + "," + std::to_string(q) + ")+su(" +
                            std::to_string(r) + "," + std::to_string(s) + ")+u(1)";
            // epsilon blocks [1..p], [p+1..M]; delta blocks [1..r], [r+1..N]
            for (int i = 1; i <= M; ++i)
                for (int j = i + 1; j <= M; ++j)
                    if ((i <= p) == (j <= p)) add_pm(f.eps(i) - f.eps(j));
            for (int i = 1; i <= N; ++i)
                for (int j = i + 1; j <= N; ++j)
                    if ((i <= r) == (j <= r)) add_pm(f.del(i) - f.del(j));
            break;
        }
        case FamilyKind::B: {
            if (f.m == 0) {
                hp.form_label = "sp(" + std::to_string(f.n) + ",R)";
            } else if (key == "so2") {
                hp.form_label = "so(2," + std::to_string(2 * f.m - 1) + ")+sp(" + std::to_string(f.n) + ",R)";
                for (int i = 2; i <= f.m; ++i) {
                    add_pm(f.eps(i));
                    for (int j = i + 1; j <= f.m; ++j) {
                        add_pm(f.eps(i) - f.eps(j));
                        add_pm(f.eps(i) + f.eps(j));
                    }
                }
            } else { // so-compact
                hp.form_label = "so(" + std::to_string(2 * f.m + 1) + ")+sp(" + std::to_string(f.n) + ",R)";
                for (int i = 1; i <= f.m; ++i) {
                    add_pm(f.eps(i));
                    for (int j = i + 1; j <= f.m; ++j) {
                        add_pm(f.eps(i) - f.eps(j));
                        add_pm(f.eps(i) + f.eps(j));
                    }
                }
            }
            for (int i = 1; i <= f.n; ++i)
                for (int j = i + 1; j <= f.n; ++j) add_pm(f.del(i) - f.del(j));
            break;
        }
        case FamilyKind::C: {
            hp.form_label = "so(2)+sp(" + std::to_string(f.n - 1) + ",R)";
            for (int i = 1; i <= f.n - 1; ++i)
                for (int j = i + 1; j <= f.n - 1; ++j) add_pm(f.del(i) - f.del(j));
            break;
        }
        case FamilyKind::D: {
            if (key == "so2") {
                hp.form_label = "so(2," + std::to_string(2 * f.m - 2) + ")+sp(" + std::to_string(f.n) + ",R)";
                for (int i = 2; i <= f.m; ++i)
                    for (int j = i + 1; j <= f.m; ++j) {
                        add_pm(f.eps(i) - f.eps(j));
                        add_pm(f.eps(i) + f.eps(j));
                    }
            } else if (key == "so-star") {
                hp.form_label = "so*(" + std::to_string(2 * f.m) + ")+sp(" + std::to_string(f.n) + ",R)";
                for (int i = 1; i <= f.m; ++i)
                    for (int j = i + 1; j <= f.m; ++j) add_pm(f.eps(i) - f.eps(j));
            } else { // so-compact
                hp.form_label = "so(" + std::to_string(2 * f.m) + ")+sp(" + std::to_string(f.n) + ",R)";
                for (int i = 1; i <= f.m; ++i)
                    for (int j = i + 1; j <= f.m; ++j) {
                        add_pm(f.eps(i) - f.eps(j));
                        add_pm(f.eps(i) + f.eps(j));
                    }
            }
            for (int i = 1; i <= f.n; ++i)
                for (int j = i + 1; j <= f.n; ++j) add_pm(f.del(i) - f.del(j));
            break;
        }
        case FamilyKind::D21: {
            if (key == "sl2x3") {
                hp.form_label = "sl(2,R)^3";
            } else {
                hp.form_label = "sl(2,R)+su(2)+su(2)";
                add_pm(rat(2) * f.eps(2));
                add_pm(rat(2) * f.eps(3));
            }
            break;
        }
        case FamilyKind::F4: {
            if (key == "sl2so7") {
                hp.form_label = "sl(2,R)+so(7)";
                for (int i = 1; i <= 3; ++i) {
                    add_pm(f.eps(i));
                    for (int j = i + 1; j <= 3; ++j) {
                        add_pm(f.eps(i) - f.eps(j));
                        add_pm(f.eps(i) + f.eps(j));
                    }
                }
            } else { // su2so25: compact part so(5) in the (eps2, eps3)-plane
                hp.form_label = "su(2)+so(2,5)";
                add_pm(f.eps(2));
                add_pm(f.eps(3));
                add_pm(f.eps(2) - f.eps(3));
                add_pm(f.eps(2) + f.eps(3));
            }
            break;
        }
        case FamilyKind::G3: {
            hp.form_label = "sl(2,R)+G2";
            for (int i = 1; i <= 3; ++i) add_pm(f.eps(i));
            add_pm(f.eps(1) - f.eps(2));
            add_pm(f.eps(1) - f.eps(3));
            add_pm(f.eps(2) - f.eps(3));
            break;
        }
    }

    for (const auto& w : hp.compact) {
        if (!hp.sys->contains(w) || hp.sys->root(w).odd)
            throw std::logic_error("compact set contains a non-root or odd root");
    }
    return hp;
}

SimpleSystem distinguished_simple_system(const Family& f) {
    std::vector<Weight> pi;
    switch (f.kind) {
        case FamilyKind::A: {
            const int M = f.m + 1, N = f.n + 1;
            for (int i = 1; i < M; ++i) pi.push_back(f.eps(i) - f.eps(i + 1));
            pi.push_back(f.eps(M) - f.del(1));
            for (int j = 1; j < N; ++j) pi.push_back(f.del(j) - f.del(j + 1));
            break;
        }
        case FamilyKind::B: {
            for (int i = 1; i < f.m; ++i) pi.push_back(f.eps(i) - f.eps(i + 1));
            if (f.m >= 1) pi.push_back(f.eps(f.m));
            for (int j = 1; j < f.n; ++j) pi.push_back(f.del(j) - f.del(j + 1));
            if (f.m >= 1)
                pi.push_back(f.del(f.n) - f.eps(1));
            else
                pi.push_back(f.del(f.n));
            break;
        }
        case FamilyKind::C: {
            pi.push_back(f.eps(1) - f.del(1));
            for (int j = 1; j < f.n - 1; ++j) pi.push_back(f.del(j) - f.del(j + 1));
            pi.push_back(rat(2) * f.del(f.n - 1));
            break;
        }
        case FamilyKind::D: {
            for (int i = 1; i < f.m; ++i) pi.push_back(f.eps(i) - f.eps(i + 1));
            pi.push_back(f.eps(f.m - 1) + f.eps(f.m));
            for (int j = 1; j < f.n; ++j) pi.push_back(f.del(j) - f.del(j + 1));
            pi.push_back(f.del(f.n) - f.eps(1));
            break;
        }
        case FamilyKind::D21: {
            pi.push_back(f.eps(1) + f.eps(2) + f.eps(3));
            pi.push_back(rat(-2) * f.eps(2));
            pi.push_back(rat(-2) * f.eps(3));
            break;
        }
        case FamilyKind::F4: {
            Rational h = rat(1, 2);
            pi.push_back(h * (f.eps(1) + f.eps(2) + f.eps(3) + f.del(1)));
            pi.push_back(-f.eps(1));
            pi.push_back(f.eps(1) - f.eps(2));
            pi.push_back(f.eps(2) - f.eps(3));
            break;
        }
        case FamilyKind::G3: {
            pi.push_back(f.del(1) + f.eps(1));
            pi.push_back(f.eps(2));
            pi.push_back(f.eps(3) - f.eps(2));
            break;
        }
    }
    auto sys = build_root_system(f);
    SimpleSystem s;
    for (const auto& w : pi) s.roots.push_back(sys.root(w));
    return s;
}

PositiveSystem distinguished_positive_system(const HermitianPair& pair) {
    return positive_system_from_simple(pair.sys, distinguished_simple_system(pair.family));
}

Mat f4_weyl_adjustment(const HermitianPair& pair) {
    if (pair.family.kind != FamilyKind::F4)
        throw std::invalid_argument("Weyl adjustment applies to F(4) only");
    const Family& f = pair.family;
    const auto& sys = *pair.sys;

    PositiveSystem p = distinguished_positive_system(pair);
    std::vector<Root> evens;
    for (const auto& r : p.roots)
        if (!r.odd) evens.push_back(r);
    std::vector<Root> pi0 = indecomposables(evens);

    // Target: even simple system whose so(7)-part ordering makes eps_1
    // dominant (leads to the admissible even system for so(2,5)).
    std::set<Weight> target{f.eps(3), f.eps(1) - f.eps(2), f.eps(2) - f.eps(3), f.del(1)};

    // W(B3) x W(A1), generated by reflections in a basis of the even system.
    std::vector<Root> gens{sys.root(f.eps(1) - f.eps(2)), sys.root(f.eps(2) - f.eps(3)),
                           sys.root(f.eps(3)), sys.root(f.del(1))};
    WeylGroup w = weyl_group_from_roots(sys, gens);

    std::vector<Mat> hits;
    for (const auto& el : w.elements) {
        std::set<Weight> image;
        for (const auto& r : pi0) image.insert(el.apply(r.w));
        if (image == target) hits.push_back(el);
    }
    if (hits.size() != 1) throw std::logic_error("F(4) Weyl adjustment is not unique");
    return hits[0];
}

PositiveSystem standard_admissible_system(const HermitianPair& pair) {
    PositiveSystem p = distinguished_positive_system(pair);
    if (pair.family.kind == FamilyKind::F4 && pair.form_key == "su2so25") {
        Mat w = f4_weyl_adjustment(pair);
        std::vector<Root> mapped;
        for (const auto& r : p.roots) mapped.push_back(pair.sys->root(w.apply(r.w)));
        return make_positive_system(pair.sys, std::move(mapped));
    }
    return p;
}

std::vector<Root> compact_part(const HermitianPair& pair, const PositiveSystem& p) {
    std::vector<Root> out;
    for (const auto& r : p.roots)
        if (pair.is_compact(r.w)) out.push_back(r);
    return out;
}

std::vector<Root> noncompact_even_part(const HermitianPair& pair, const PositiveSystem& p) {
    std::vector<Root> out;
    for (const auto& r : p.roots)
        if (!r.odd && !pair.is_compact(r.w)) out.push_back(r);
    return out;
}

std::vector<Root> noncompact_odd_part(const HermitianPair&, const PositiveSystem& p) {
    std::vector<Root> out;
    for (const auto& r : p.roots)
        if (r.odd) out.push_back(r);
    return out;
}

bool is_admissible(const HermitianPair& pair, const PositiveSystem& p) {
    const auto& sys = *pair.sys;
    std::vector<Root> pn = noncompact_even_part(pair, p);
    for (const auto& r : noncompact_odd_part(pair, p)) pn.push_back(r);

    // (1) compact alpha (either sign) + noncompact beta in P stays a
    //     noncompact member of P.
    for (const auto& aw : pair.compact)
        for (const auto& b : pn) {
            Weight s = aw + b.w;
            if (!sys.contains(s)) continue;
            if (!p.contains(s) || pair.is_compact(s)) return false;
        }
    // (2) sums of noncompact members of P stay noncompact members of P.
    for (const auto& b : pn)
        for (const auto& c : pn) {
            Weight s = b.w + c.w;
            if (!sys.contains(s)) continue;
            if (!p.contains(s) || pair.is_compact(s)) return false;
        }
    return true;
}

std::vector<PositiveSystem> enumerate_positive_systems(std::shared_ptr<const SuperRootSystem> sysp,
                                                       size_t budget) {
    const auto& sys = *sysp;
    // One representative per +/- pair, in lex order.
    std::vector<Weight> reps;
    for (const auto& r : sys.roots)
        if (-r.w < r.w) reps.push_back(r.w);

    std::vector<PositiveSystem> found;
    std::set<Weight> chosen;
    size_t nodes = 0;

    std::function<void(size_t)> dfs = [&](size_t i) {
        if (++nodes > budget) throw std::runtime_error("enumeration budget exceeded");
        if (i == reps.size()) {
            std::vector<Root> roots;
            for (const auto& w : chosen) roots.push_back(sys.root(w));
            if (is_abstract_positive(sys, roots)) found.push_back(make_positive_system(sysp, std::move(roots)));
            return;
        }
        for (const Weight& cand : {reps[i], -reps[i]}) {
            // closure pruning: a sum already forced into -P is fatal
            bool ok = true;
            for (const auto& a : chosen) {
                Weight s = a + cand;
                if (sys.contains(s) && chosen.count(-s)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                chosen.insert(cand);
                dfs(i + 1);
                chosen.erase(cand);
            }
        }
    };
    dfs(0);
    std::sort(found.begin(), found.end(),
              [](const PositiveSystem& a, const PositiveSystem& b) { return a.roots < b.roots; });
    return found;
}

std::vector<PositiveSystem> enumerate_admissible(const HermitianPair& pair, size_t budget) {
    std::vector<PositiveSystem> found;
    for (auto& p : enumerate_positive_systems(pair.sys, budget))
        if (is_admissible(pair, p)) found.push_back(std::move(p));
    return found;
}

PositiveSystem flip_noncompact(const HermitianPair& pair, const PositiveSystem& p) {
    if (!is_admissible(pair, p)) throw std::invalid_argument("flip requires an admissible system");
    std::vector<Root> roots;
    for (const auto& r : p.roots)
        roots.push_back(pair.is_compact(r.w) ? r : pair.sys->root(-r.w));
    return make_positive_system(pair.sys, std::move(roots));
}

namespace {

// Maximal weights of `part` under raising by positive compact roots.
std::vector<Weight> maximal_weights(const HermitianPair& pair, const PositiveSystem& p,
                                    const std::vector<Root>& part) {
    std::set<Weight> in;
    for (const auto& r : part) in.insert(r.w);
    std::vector<Weight> out;
    for (const auto& r : part) {
        bool maximal = true;
        for (const auto& a : compact_part(pair, p)) {
            if (in.count(r.w + a.w)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(r.w);
    }
    return out;
}

} // namespace

int count_p1_components(const HermitianPair& pair, const PositiveSystem& p) {
    if (!is_admissible(pair, p)) throw std::invalid_argument("component count requires an admissible system");
    return static_cast<int>(maximal_weights(pair, p, noncompact_odd_part(pair, p)).size());
}

std::vector<Weight> p0_plus_highest_weights(const HermitianPair& pair, const PositiveSystem& p) {
    return maximal_weights(pair, p, noncompact_even_part(pair, p));
}

std::vector<Root> compact_simple_roots(const HermitianPair& pair, const PositiveSystem& p) {
    return indecomposables(compact_part(pair, p));
}

SimpleSystemFacts simple_system_facts(const HermitianPair& pair, const PositiveSystem& p) {
    if (!is_admissible(pair, p)) throw std::invalid_argument("simple system facts require an admissible system");
    SimpleSystemFacts facts;

    std::vector<Root> evens;
    for (const auto& r : p.roots)
        if (!r.odd) evens.push_back(r);

    std::vector<Root> s = indecomposables(p.roots);
    std::vector<Root> s0 = indecomposables(evens);

    for (const auto& r : s)
        if (pair.is_compact(r.w)) facts.s_compact.push_back(r);
    for (const auto& r : s0) {
        if (pair.is_compact(r.w))
            facts.s0_compact.push_back(r);
        else
            facts.s0_noncompact.push_back(r);
    }
    facts.compact_simples_match = facts.s_compact == facts.s0_compact;

    // P_0^- = P_k join -P_{n,0}; its simple system should be the compact
    // simples together with the negated highest weights of p_0^+.
    facts.beta_prime = maximal_weights(pair, p, noncompact_even_part(pair, p));
    std::vector<Root> p0_minus;
    for (const auto& r : evens)
        p0_minus.push_back(pair.is_compact(r.w) ? r : pair.sys->root(-r.w));
    std::vector<Root> s0_minus = indecomposables(p0_minus);

    std::set<Weight> expected;
    for (const auto& r : facts.s0_compact) expected.insert(r.w);
    for (const auto& b : facts.beta_prime) expected.insert(-b);
    std::set<Weight> actual;
    for (const auto& r : s0_minus) actual.insert(r.w);
    facts.flipped_simples_match = expected == actual;

    // Each beta' = beta + nonnegative integral combination of compact simples.
    facts.shifts_are_nonneg_integral = facts.beta_prime.size() == facts.s0_noncompact.size();
    const size_t d = pair.sys->gram.rows();
    for (const auto& bp : facts.beta_prime) {
        if (!facts.shifts_are_nonneg_integral) break;
        bool matched = false;
        for (const auto& beta : facts.s0_noncompact) {
            Weight diff = bp - beta.w;
            if (facts.s0_compact.empty()) {
                if (diff.is_zero()) matched = true;
                continue;
            }
            Mat a(d, facts.s0_compact.size());
            for (size_t j = 0; j < facts.s0_compact.size(); ++j)
                for (size_t i = 0; i < d; ++i) a(i, j) = facts.s0_compact[j].w[i];
            auto sol = solve(a, diff.c);
            if (!sol) continue;
            // verify residual and nonneg integrality
            bool good = true;
            Weight recon(d);
            for (size_t j = 0; j < sol->size(); ++j) {
                if ((*sol)[j] < 0 || !rat_is_integer((*sol)[j])) good = false;
                recon += (*sol)[j] * facts.s0_compact[j].w;
            }
            if (good && recon == diff) {
                matched = true;
                break;
            }
        }
        if (!matched) facts.shifts_are_nonneg_integral = false;
    }
    return facts;
}

nlohmann::json positive_system_report(const HermitianPair& pair, const PositiveSystem& p) {
    auto roots_json = [](const std::vector<Root>& rs) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& r : rs) a.push_back(weight_to_json(r.w));
        return a;
    };
    nlohmann::json j;
    j["family"] = pair.family.name();
    j["form"] = pair.form_label;
    j["P_k"] = roots_json(compact_part(pair, p));
    j["P_n0"] = roots_json(noncompact_even_part(pair, p));
    j["P_n1"] = roots_json(noncompact_odd_part(pair, p));
    bool adm = is_admissible(pair, p);
    j["admissible"] = adm;
    if (adm) j["components_p1"] = count_p1_components(pair, p);
    return j;
}

} // namespace supermod
