#include <doctest.h>

#include "supermod/hwmod.hpp"
#include "supermod/possys.hpp"
#include "supermod/weylgroup.hpp"

#include <set>

#include "golden_tables.hpp"

using namespace supermod;
using golden::golden_matches;
using golden::GoldenSplit;
using golden::golden_A;
using golden::golden_B;
using golden::golden_B0;
using golden::golden_C;
using golden::golden_D_so2;
using golden::golden_D_sostar;
using golden::wset;

namespace {

void check_golden(const HermitianPair& pair, const PositiveSystem& p, const GoldenSplit& g) {
    CAPTURE(pair.family.name());
    CAPTURE(pair.form_label);
    CHECK(golden::wset(compact_part(pair, p)) == g.pk);
    CHECK(golden::wset(noncompact_even_part(pair, p)) == g.pn0);
    CHECK(golden::wset(noncompact_odd_part(pair, p)) == g.pn1);
}

std::vector<HermitianPair> small_pair_sample() {
    std::vector<HermitianPair> ps;
    ps.push_back(build_hermitian_pair(Family::A(1, 0), "su", 1, 1, 1, 0));
    ps.push_back(build_hermitian_pair(Family::A(2, 1), "su", 2, 1, 1, 1));
    ps.push_back(build_hermitian_pair(Family::A(2, 1), "su", 2, 1, 2, 0));
    ps.push_back(build_hermitian_pair(Family::B(0, 1), "sp"));
    ps.push_back(build_hermitian_pair(Family::B(0, 2), "sp"));
    ps.push_back(build_hermitian_pair(Family::B(2, 1), "so2"));
    ps.push_back(build_hermitian_pair(Family::B(2, 1), "so-compact"));
    ps.push_back(build_hermitian_pair(Family::C(2), "so2"));
    ps.push_back(build_hermitian_pair(Family::C(3), "so2"));
    ps.push_back(build_hermitian_pair(Family::D(2, 1), "so2"));
    ps.push_back(build_hermitian_pair(Family::D(3, 1), "so2"));
    ps.push_back(build_hermitian_pair(Family::D(3, 1), "so-star"));
    ps.push_back(build_hermitian_pair(Family::D(2, 1), "so-compact"));
    ps.push_back(build_hermitian_pair(Family::D21(rat(1, 2)), "sl2x3"));
    ps.push_back(build_hermitian_pair(Family::D21(rat(1, 2)), "sl2su2su2"));
    ps.push_back(build_hermitian_pair(Family::F4(), "sl2so7"));
    ps.push_back(build_hermitian_pair(Family::F4(), "su2so25"));
    ps.push_back(build_hermitian_pair(Family::G3(), "sl2g2"));
    return ps;
}

} // namespace

TEST_SUITE("possys") {

TEST_CASE("abstract positivity") {
    Family f = Family::A(1, 0);
    auto sys = shared_root_system(f);
    std::vector<Root> good{sys->root(f.eps(1) - f.eps(2)), sys->root(f.eps(1) - f.del(1)),
                           sys->root(f.eps(2) - f.del(1))};
    CHECK(is_abstract_positive(*sys, good));
    CHECK(is_abstract_positive(*sys, {sys->root(f.eps(2) - f.eps(1)), sys->root(f.del(1) - f.eps(1)),
                                      sys->root(f.del(1) - f.eps(2))}));
    CHECK_FALSE(is_abstract_positive(*sys, sys->roots));               // P and -P intersect
    CHECK_FALSE(is_abstract_positive(*sys, {good[0], good[1]}));       // does not exhaust
    // negating only the odd simple root breaks closure:
    // (e1-e2) + (e2-d1) = e1-d1 would have to be positive
    std::vector<Root> flipped{sys->root(f.eps(1) - f.eps(2)), sys->root(f.del(1) - f.eps(1)),
                              sys->root(f.eps(2) - f.del(1))};
    CHECK_FALSE(is_abstract_positive(*sys, flipped));
    Root notroot{f.eps(1) + f.eps(2), false};
    CHECK_THROWS_AS(is_abstract_positive(*sys, {notroot}), std::invalid_argument);
}

TEST_CASE("positivity functional") {
    auto pair = build_hermitian_pair(Family::A(1, 0), "su", 1, 1, 1, 0);
    auto p = standard_admissible_system(pair);
    auto ell = positivity_functional(p);
    for (const auto& r : p.roots) CHECK(eval_functional(ell, r.w) > 0);
    // the documented witness works too
    std::vector<Rational> spec_ell{rat(2), rat(1), rat(0)};
    for (const auto& r : p.roots) CHECK(eval_functional(spec_ell, r.w) > 0);
    // sign symmetry: -ell certifies -P
    auto flipped = make_positive_system(pair.sys, [&] {
        std::vector<Root> neg;
        for (const auto& r : p.roots) neg.push_back(pair.sys->root(-r.w));
        return neg;
    }());
    std::vector<Rational> nell;
    for (const auto& x : ell) nell.push_back(-x);
    for (const auto& r : flipped.roots) CHECK(eval_functional(nell, r.w) > 0);
}

TEST_CASE("every abstract positive system admits a witness at small rank") {
    for (const auto& f : {Family::A(1, 0), Family::B(0, 1), Family::B(0, 2), Family::C(2)}) {
        CAPTURE(f.name());
        auto sys = shared_root_system(f);
        auto all = enumerate_positive_systems(sys);
        CHECK(!all.empty());
        for (const auto& p : all) {
            auto ell = positivity_functional(p);
            for (const auto& r : p.roots) CHECK(eval_functional(ell, r.w) > 0);
            // and conversely the witness regenerates the same system
            CHECK(positive_system_from_functional(sys, ell) == p);
        }
    }
}

TEST_CASE("simple roots") {
    {
        auto pair = build_hermitian_pair(Family::A(1, 0), "su", 1, 1, 1, 0);
        auto p = standard_admissible_system(pair);
        Family f = pair.family;
        auto s = simple_roots(p);
        CHECK(wset(s.roots) == std::set<Weight>{f.eps(1) - f.eps(2), f.eps(2) - f.del(1)});
        // regeneration
        CHECK(positive_system_from_simple(pair.sys, s) == p);
    }
    {
        auto pair = build_hermitian_pair(Family::B(0, 1), "sp");
        auto p = standard_admissible_system(pair);
        auto s = simple_roots(p);
        CHECK(wset(s.roots) == std::set<Weight>{pair.family.del(1)});
    }
    {
        Family f = Family::F4();
        auto pair = build_hermitian_pair(f, "sl2so7");
        auto p = distinguished_positive_system(pair);
        auto s = simple_roots(p);
        Rational h = rat(1, 2);
        std::set<Weight> expected{h * (f.eps(1) + f.eps(2) + f.eps(3) + f.del(1)), -f.eps(1),
                                  f.eps(1) - f.eps(2), f.eps(2) - f.eps(3)};
        CHECK(wset(s.roots) == expected);
    }
}

TEST_CASE("hermitian pair construction") {
    {
        auto pair = build_hermitian_pair(Family::B(2, 1), "so2");
        Family f = pair.family;
        CHECK(pair.compact == std::set<Weight>{f.eps(2), -f.eps(2)});
    }
    {
        auto pair = build_hermitian_pair(Family::D21(rat(1, 2)), "sl2x3");
        CHECK(pair.compact.empty());
    }
    {
        auto pair = build_hermitian_pair(Family::G3(), "sl2g2");
        CHECK(pair.compact.size() == 12);
    }
    // bracket closure and negation closure of the compact set
    for (const auto& pair : small_pair_sample()) {
        CAPTURE(pair.form_label);
        for (const auto& a : pair.compact) {
            CHECK(pair.compact.count(-a));
            for (const auto& b : pair.compact) {
                Weight s = a + b;
                if (pair.sys->contains(s)) CHECK(pair.compact.count(s));
            }
        }
        for (const auto& r : pair.sys->odd_roots()) CHECK_FALSE(pair.is_compact(r.w));
    }
    CHECK_THROWS_AS(build_hermitian_pair(Family::B(2, 1), "so-star"), std::invalid_argument);
    CHECK_THROWS_AS(build_hermitian_pair(Family::A(1, 0), "su", 3, -1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_hermitian_pair(Family::A(1, 0), "su", 1, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("golden tables for the parametrized families") {
    // A-family, all splittings with family parameters <= 3
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n) {
            if (m == n) continue;
            Family f = Family::A(m, n);
            for (int p = 0; p <= m + 1; ++p)
                for (int r = 0; r <= n + 1; ++r) {
                    auto pair = build_hermitian_pair(f, "su", p, m + 1 - p, r, n + 1 - r);
                    auto sys = standard_admissible_system(pair);
                    check_golden(pair, sys, golden_A(f, p, r));
                }
        }
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            Family f = Family::B(m, n);
            auto pair = build_hermitian_pair(f, "so2");
            check_golden(pair, standard_admissible_system(pair), golden_B(f));
        }
    for (int n = 1; n <= 3; ++n) {
        Family f = Family::B(0, n);
        auto pair = build_hermitian_pair(f, "sp");
        check_golden(pair, standard_admissible_system(pair), golden_B0(f));
    }
    for (int n = 2; n <= 3; ++n) {
        Family f = Family::C(n);
        auto pair = build_hermitian_pair(f, "so2");
        check_golden(pair, standard_admissible_system(pair), golden_C(f));
    }
    for (int m = 2; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            Family f = Family::D(m, n);
            auto p1 = build_hermitian_pair(f, "so2");
            check_golden(p1, standard_admissible_system(p1), golden_D_so2(f));
            auto p2 = build_hermitian_pair(f, "so-star");
            check_golden(p2, standard_admissible_system(p2), golden_D_sostar(f));
        }
}

TEST_CASE("golden tables for the exceptional families") {
    { // D(2,1;alpha), both forms share the same positive roots
        Family f = Family::D21(rat(1, 2));
        GoldenSplit g;
        g.pn0 = {rat(2) * f.eps(1), rat(-2) * f.eps(2), rat(-2) * f.eps(3)};
        for (int s2 : {1, -1})
            for (int s3 : {1, -1}) g.pn1.insert(f.eps(1) + rat(s2) * f.eps(2) + rat(s3) * f.eps(3));
        auto pair = build_hermitian_pair(f, "sl2x3");
        check_golden(pair, standard_admissible_system(pair), g);

        GoldenSplit g2 = g;
        g2.pk = {rat(-2) * f.eps(2), rat(-2) * f.eps(3)};
        g2.pn0 = {rat(2) * f.eps(1)};
        auto pair2 = build_hermitian_pair(f, "sl2su2su2");
        check_golden(pair2, standard_admissible_system(pair2), g2);
    }
    { // F(4), sl(2,R)+so(7)
        Family f = Family::F4();
        GoldenSplit g;
        for (int i = 1; i <= 3; ++i) g.pk.insert(-f.eps(i));
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j) {
                g.pk.insert(f.eps(i) - f.eps(j));
                g.pk.insert(-f.eps(i) - f.eps(j));
            }
        g.pn0 = {f.del(1)};
        Rational h = rat(1, 2);
        for (int s1 : {1, -1})
            for (int s2 : {1, -1})
                for (int s3 : {1, -1})
                    g.pn1.insert(h * (rat(s1) * f.eps(1) + rat(s2) * f.eps(2) + rat(s3) * f.eps(3) + f.del(1)));
        auto pair = build_hermitian_pair(f, "sl2so7");
        check_golden(pair, standard_admissible_system(pair), g);
    }
    { // F(4), su(2)+so(2,5): the Weyl-transformed printed lists
        Family f = Family::F4();
        GoldenSplit g;
        g.pk = {f.eps(2), f.eps(3), f.eps(2) - f.eps(3), f.eps(2) + f.eps(3)};
        g.pn0 = {f.del(1), f.eps(1), f.eps(1) - f.eps(2), f.eps(1) + f.eps(2), f.eps(1) - f.eps(3),
                 f.eps(1) + f.eps(3)};
        Rational h = rat(1, 2);
        for (int s1 : {1, -1})
            for (int s2 : {1, -1})
                for (int s3 : {1, -1})
                    g.pn1.insert(h * (rat(s1) * f.eps(1) + rat(s2) * f.eps(2) + rat(s3) * f.eps(3) + f.del(1)));
        auto pair = build_hermitian_pair(f, "su2so25");
        check_golden(pair, standard_admissible_system(pair), g);
    }
    { // G(3)
        Family f = Family::G3();
        GoldenSplit g;
        g.pk = {-f.eps(1), f.eps(2), f.eps(3), f.eps(3) - f.eps(2), f.eps(2) - f.eps(1), f.eps(3) - f.eps(1)};
        g.pn0 = {rat(2) * f.del(1)};
        g.pn1 = {f.del(1)};
        for (int i = 1; i <= 3; ++i) {
            g.pn1.insert(f.del(1) + f.eps(i));
            g.pn1.insert(f.del(1) - f.eps(i));
        }
        auto pair = build_hermitian_pair(f, "sl2g2");
        check_golden(pair, standard_admissible_system(pair), g);
    }
}

TEST_CASE("admissibility") {
    for (const auto& pair : small_pair_sample()) {
        CAPTURE(pair.family.name());
        CAPTURE(pair.form_label);
        CHECK(is_admissible(pair, standard_admissible_system(pair)));
    }
    // the untransformed F(4)/su(2)+so(2,5) system is not admissible
    auto f4b = build_hermitian_pair(Family::F4(), "su2so25");
    CHECK_FALSE(is_admissible(f4b, distinguished_positive_system(f4b)));
    CHECK(is_admissible(f4b, standard_admissible_system(f4b)));
    // and the Weyl adjustment is computed, not hard-coded
    Mat w = f4_weyl_adjustment(f4b);
    CHECK(det(w) != 0);

    // a sign flip of one noncompact root generally breaks admissibility
    auto pair = build_hermitian_pair(Family::A(2, 1), "su", 2, 1, 1, 1);
    auto p = standard_admissible_system(pair);
    bool found_breaking_flip = false;
    for (const auto& r : p.roots) {
        if (pair.is_compact(r.w)) continue;
        std::vector<Root> flipped;
        for (const auto& x : p.roots)
            flipped.push_back(x.w == r.w ? pair.sys->root(-x.w) : x);
        if (!is_abstract_positive(*pair.sys, flipped)) continue;
        if (!is_admissible(pair, make_positive_system(pair.sys, flipped))) found_breaking_flip = true;
    }
    CHECK(found_breaking_flip);
}

TEST_CASE("enumerate admissible systems") {
    {
        auto pair = build_hermitian_pair(Family::A(1, 0), "su", 1, 1, 1, 0);
        auto all = enumerate_admissible(pair);
        CHECK(all.size() == 6); // brute-force count for sl(2|1), no compact roots
        for (const auto& p : all) {
            CHECK(is_admissible(pair, p));
            // closed under the noncompact sign flip
            auto flipped = flip_noncompact(pair, p);
            CHECK(std::find(all.begin(), all.end(), flipped) != all.end());
        }
        auto std_p = standard_admissible_system(pair);
        CHECK(std::find(all.begin(), all.end(), std_p) != all.end());
    }
    {
        auto pair = build_hermitian_pair(Family::B(0, 1), "sp");
        auto all = enumerate_admissible(pair);
        CHECK(all.size() == 2);
    }
    // nonempty for every legal pair at small rank
    for (const auto& pair : small_pair_sample()) {
        if (pair.sys->roots.size() > 24) continue; // keep the unit run fast
        CAPTURE(pair.form_label);
        CHECK(!enumerate_admissible(pair).empty());
    }
    // closure under the noncompact flip on a pair with compact roots
    for (const auto& key : {std::pair<Family, std::string>{Family::B(2, 1), "so2"},
                            {Family::D21(rat(1, 2)), "sl2su2su2"}}) {
        auto pair2 = build_hermitian_pair(key.first, key.second);
        auto all2 = enumerate_admissible(pair2);
        CHECK(!all2.empty());
        for (const auto& p2 : all2)
            CHECK(std::find(all2.begin(), all2.end(), flip_noncompact(pair2, p2)) != all2.end());
    }
    // budget guard
    auto pair = build_hermitian_pair(Family::B(2, 1), "so2");
    CHECK_THROWS_AS(enumerate_admissible(pair, 5), std::runtime_error);
}

TEST_CASE("flip noncompact") {
    {
        auto pair = build_hermitian_pair(Family::B(0, 1), "sp");
        Family f = pair.family;
        auto p = standard_admissible_system(pair);
        auto flipped = flip_noncompact(pair, p);
        CHECK(wset(flipped.roots) == std::set<Weight>{rat(-2) * f.del(1), -f.del(1)});
        CHECK(flip_noncompact(pair, flipped) == p);
    }
    for (const auto& pair : small_pair_sample()) {
        auto p = standard_admissible_system(pair);
        auto pm = flip_noncompact(pair, p);
        CHECK(is_abstract_positive(*pair.sys, pm.roots));
        CHECK(flip_noncompact(pair, pm) == p);
        // P^- keeps the compact part pointwise
        CHECK(wset(compact_part(pair, pm)) == wset(compact_part(pair, p)));
    }
    // -s0(P) = P^- for s0 the longest element of W_k
    for (const auto& key : {std::pair<Family, std::string>{Family::B(2, 1), "so2"},
                            {Family::A(2, 1), "su"},
                            {Family::D(3, 1), "so2"}}) {
        auto pair = key.first.kind == FamilyKind::A ? build_hermitian_pair(key.first, key.second, 2, 1, 1, 1)
                                                    : build_hermitian_pair(key.first, key.second);
        auto p = standard_admissible_system(pair);
        auto pm = flip_noncompact(pair, p);
        WeylGroup wk = weyl_group_from_roots(*pair.sys, compact_simple_roots(pair, p));
        std::set<Weight> pkset = wset(compact_part(pair, p));
        bool found = false;
        for (const auto& el : wk.elements) {
            std::set<Weight> img;
            for (const auto& w : pkset) img.insert(el.apply(w));
            std::set<Weight> neg;
            for (const auto& w : pkset) neg.insert(-w);
            if (img != neg) continue;
            // this is s0; check -s0(P) == P^-
            std::set<Weight> minus_s0_p;
            for (const auto& r : p.roots) minus_s0_p.insert(-el.apply(r.w));
            CHECK(minus_s0_p == wset(pm.roots));
            found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("operations reject non-admissible systems") {
    auto f4b = build_hermitian_pair(Family::F4(), "su2so25");
    auto bad = distinguished_positive_system(f4b);
    CHECK_THROWS_AS(flip_noncompact(f4b, bad), std::invalid_argument);
    CHECK_THROWS_AS(count_p1_components(f4b, bad), std::invalid_argument);
    CHECK_THROWS_AS(simple_system_facts(f4b, bad), std::invalid_argument);
}

TEST_CASE("p1 component counts") {
    auto count = [](const HermitianPair& pair) {
        return count_p1_components(pair, standard_admissible_system(pair));
    };
    CHECK(count(build_hermitian_pair(Family::A(2, 1), "su", 2, 1, 1, 1)) == 4);
    CHECK(count(build_hermitian_pair(Family::A(2, 1), "su", 2, 1, 2, 0)) == 2);
    CHECK(count(build_hermitian_pair(Family::A(1, 0), "su", 1, 1, 1, 0)) == 2);
    CHECK(count(build_hermitian_pair(Family::C(2), "so2")) == 2);
    CHECK(count(build_hermitian_pair(Family::C(3), "so2")) == 2);
    CHECK(count(build_hermitian_pair(Family::D21(rat(1, 2)), "sl2x3")) == 4);
    CHECK(count(build_hermitian_pair(Family::D21(rat(1, 2)), "sl2su2su2")) == 1);
    CHECK(count(build_hermitian_pair(Family::F4(), "sl2so7")) == 1);
    CHECK(count(build_hermitian_pair(Family::G3(), "sl2g2")) == 1);
    // first-row forms: compact orthogonal factor
    CHECK(count(build_hermitian_pair(Family::B(0, 2), "sp")) == 1);
    CHECK(count(build_hermitian_pair(Family::B(2, 1), "so-compact")) == 1);
    CHECK(count(build_hermitian_pair(Family::D(2, 1), "so-compact")) == 1);
    CHECK(count(build_hermitian_pair(Family::D(3, 1), "so-compact")) == 1);
    // second-row forms
    CHECK(count(build_hermitian_pair(Family::B(2, 1), "so2")) == 3);
    CHECK(count(build_hermitian_pair(Family::B(3, 2), "so2")) == 3);
    CHECK(count(build_hermitian_pair(Family::D(3, 1), "so2")) == 3);
    CHECK(count(build_hermitian_pair(Family::D(2, 1), "so2")) == 4); // so(2,2) degenerates
    CHECK(count(build_hermitian_pair(Family::D(3, 1), "so-star")) == 2);
    // F(4)/su(2)+so(2,5): the printed P_k tables force two spin components
    // (the table's value 1 would need the delta-sl2 compact, contradicting
    // P_n0 containing delta); see the acceptance suite for the discussion.
    CHECK(count(build_hermitian_pair(Family::F4(), "su2so25")) == 2);
}

TEST_CASE("simple system facts") {
    for (const auto& key : {std::pair<Family, std::string>{Family::B(2, 1), "so2"},
                            {Family::D(3, 1), "so2"},
                            {Family::G3(), "sl2g2"}}) {
        auto pair = build_hermitian_pair(key.first, key.second);
        auto p = standard_admissible_system(pair);
        auto facts = simple_system_facts(pair, p);
        CAPTURE(pair.form_label);
        CHECK(facts.compact_simples_match);
        CHECK(facts.flipped_simples_match);
        CHECK(facts.shifts_are_nonneg_integral);
    }
    {
        auto pair = build_hermitian_pair(Family::A(2, 1), "su", 2, 1, 2, 0);
        auto facts = simple_system_facts(pair, standard_admissible_system(pair));
        CHECK(facts.all());
    }
    { // no compact roots: clause (a) vacuous, flip is the full negation
        auto pair = build_hermitian_pair(Family::A(1, 0), "su", 1, 1, 1, 0);
        auto facts = simple_system_facts(pair, standard_admissible_system(pair));
        CHECK(facts.s_compact.empty());
        CHECK(facts.all());
    }
}

TEST_CASE("report json") {
    auto pair = build_hermitian_pair(Family::B(0, 1), "sp");
    auto rep = positive_system_report(pair, standard_admissible_system(pair));
    CHECK(rep.at("admissible").get<bool>());
    CHECK(rep.at("components_p1").get<int>() == 1);
    CHECK(rep.at("P_n1").size() == 1);
}

} // TEST_SUITE
