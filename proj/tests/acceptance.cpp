// Acceptance suite: one pass/fail line per criterion, exit status = number of
// failed criteria. Each criterion states its tolerance inline; everything is
// exact arithmetic, so "tolerance" means set equality or integer equality
// throughout, plus the stated wall-clock budgets.

#include "golden_tables.hpp"

#include "supermod/hciso.hpp"
#include "supermod/hwmod.hpp"
#include "supermod/pbw.hpp"
#include "supermod/possys.hpp"
#include "supermod/realize.hpp"
#include "supermod/verify.hpp"
#include "supermod/weylgroup.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace supermod;
using golden::golden_matches;

namespace {

int failures = 0;
std::set<int> selected; // empty: run everything

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<std::string()>& body) {
    if (!selected.empty() && !selected.count(number)) return;
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;
    try {
        detail = body();
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_seconds > 0 && secs > budget_seconds) {
        pass = false;
        detail += " [exceeded " + std::to_string(budget_seconds) + " s budget]";
    }
    std::ostringstream line;
    line << (pass ? "[PASS] " : "[FAIL] ") << number << ". " << name << " -- " << detail << " ("
         << static_cast<long>(secs * 1000) << " ms)";
    std::cout << line.str() << std::endl;
    if (!pass) ++failures;
}

struct Fail : std::runtime_error {
    explicit Fail(const std::string& s) : std::runtime_error(s) {}
};

} // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
    criterion(1, "Golden root tables (set equality, < 1 s per case)", 0, [] {
        int cases = 0;
        auto t0 = std::chrono::steady_clock::now();
        double worst = 0;
        auto timed = [&](const HermitianPair& pair, const golden::GoldenSplit& g) {
            auto c0 = std::chrono::steady_clock::now();
            auto p = standard_admissible_system(pair);
            if (!golden_matches(pair, p, g))
                throw Fail("table mismatch for " + pair.family.name() + " / " + pair.form_label);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - c0).count();
            worst = std::max(worst, secs);
            if (secs > 1.0) throw Fail("case exceeded 1 s: " + pair.family.name());
            ++cases;
        };
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n) {
                if (m == n) continue;
                Family f = Family::A(m, n);
                for (int p = 0; p <= m + 1; ++p)
                    for (int r = 0; r <= n + 1; ++r)
                        timed(build_hermitian_pair(f, "su", p, m + 1 - p, r, n + 1 - r),
                              golden::golden_A(f, p, r));
            }
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 3; ++n)
                timed(build_hermitian_pair(Family::B(m, n), "so2"), golden::golden_B(Family::B(m, n)));
        for (int n = 1; n <= 3; ++n)
            timed(build_hermitian_pair(Family::B(0, n), "sp"), golden::golden_B0(Family::B(0, n)));
        for (int n = 2; n <= 3; ++n)
            timed(build_hermitian_pair(Family::C(n), "so2"), golden::golden_C(Family::C(n)));
        for (int m = 2; m <= 3; ++m)
            for (int n = 1; n <= 3; ++n) {
                timed(build_hermitian_pair(Family::D(m, n), "so2"), golden::golden_D_so2(Family::D(m, n)));
                timed(build_hermitian_pair(Family::D(m, n), "so-star"),
                      golden::golden_D_sostar(Family::D(m, n)));
            }
        double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream os;
        os << cases << " cases, worst " << static_cast<long>(worst * 1000) << " ms, total "
           << static_cast<long>(total * 1000) << " ms";
        return os.str();
    });

    criterion(2, "Admissibility of the constructed systems (< 5 s)", 5.0, [] {
        int checked = 0;
        for (const auto& f :
             {Family::A(1, 0), Family::A(2, 1), Family::A(3, 2), Family::B(0, 1), Family::B(0, 3),
              Family::B(2, 1), Family::B(3, 3), Family::C(2), Family::C(3), Family::D(2, 1), Family::D(3, 2),
              Family::D21(rat(1, 2)), Family::D21(rat(-3)), Family::F4(), Family::G3()}) {
            for (const auto& key : legal_form_keys(f)) {
                HermitianPair pair = f.kind == FamilyKind::A
                                         ? build_hermitian_pair(f, key, f.m, 1, f.n, 1)
                                         : build_hermitian_pair(f, key);
                if (!is_admissible(pair, standard_admissible_system(pair)))
                    throw Fail("standard system not admissible: " + f.name() + " / " + pair.form_label);
                ++checked;
            }
        }
        // F(4)/su(2)+so(2,5): the untransformed distinguished system is not
        // suitable; after the computed Weyl element it is admissible.
        auto f4b = build_hermitian_pair(Family::F4(), "su2so25");
        if (is_admissible(f4b, distinguished_positive_system(f4b)))
            throw Fail("untransformed F(4) system unexpectedly admissible");
        Mat w = f4_weyl_adjustment(f4b); // computed by orbit search, throws unless unique
        auto transformed = standard_admissible_system(f4b);
        if (!is_admissible(f4b, transformed)) throw Fail("Weyl-adjusted F(4) system not admissible");
        std::ostringstream os;
        os << checked << " systems admissible; F(4) adjustment verified (w unique in W(B3)xW(A1))";
        return os.str();
    });

    criterion(3, "Component table of p_1^+ (exact integers)", 0, [] {
        auto count = [](const HermitianPair& pair) {
            return count_p1_components(pair, standard_admissible_system(pair));
        };
        struct Row {
            HermitianPair pair;
            int expected;
            const char* label;
        };
        std::vector<Row> rows;
        rows.push_back({build_hermitian_pair(Family::A(2, 1), "su", 2, 1, 1, 1), 4, "sl(3|2) su(2,1)+su(1,1)"});
        rows.push_back({build_hermitian_pair(Family::A(2, 1), "su", 2, 1, 2, 0), 2, "sl(3|2) su(2,1)+su(2)"});
        rows.push_back({build_hermitian_pair(Family::C(2), "so2"), 2, "C(2)"});
        rows.push_back({build_hermitian_pair(Family::D21(rat(1, 2)), "sl2x3"), 4, "D(2,1;a) sl2R^3"});
        rows.push_back({build_hermitian_pair(Family::D21(rat(1, 2)), "sl2su2su2"), 1, "D(2,1;a) su2^2+sl2R"});
        rows.push_back({build_hermitian_pair(Family::F4(), "sl2so7"), 1, "F(4) sl2R+so(7)"});
        rows.push_back({build_hermitian_pair(Family::F4(), "su2so25"), 1, "F(4) su(2)+so(2,5)"});
        rows.push_back({build_hermitian_pair(Family::G3(), "sl2g2"), 1, "G(3)"});
        rows.push_back({build_hermitian_pair(Family::B(0, 2), "sp"), 1, "B row 1: sp(n,R)"});
        rows.push_back({build_hermitian_pair(Family::B(2, 1), "so-compact"), 1, "B row 1: so(2m+1)+sp(n,R)"});
        rows.push_back({build_hermitian_pair(Family::D(2, 1), "so-compact"), 1, "D row 1: so(2m)+sp(n,R)"});
        rows.push_back({build_hermitian_pair(Family::D(3, 1), "so-compact"), 1, "D row 1: so(2m)+sp(n,R)"});
        std::ostringstream bad;
        int ok = 0;
        for (const auto& row : rows) {
            int got = count(row.pair);
            if (got == row.expected) {
                ++ok;
            } else {
                bad << " [" << row.label << ": table says " << row.expected << ", computed " << got << "]";
            }
        }
        if (ok != static_cast<int>(rows.size()))
            throw Fail(std::to_string(ok) + "/" + std::to_string(rows.size()) + " rows match;" + bad.str() +
                       " -- the printed P_k tables for F(4)/su(2)+so(2,5) exclude delta, which forces the"
                       " two spin components 1/2(+-e1+e2+e3+delta); the table value 1 would require the"
                       " delta-sl2 compact, contradicting P_n0 owning delta (see the decisions ledger)");
        return std::to_string(ok) + "/" + std::to_string(rows.size()) + " rows match";
    });

    criterion(4, "Character oracle equivalence, >= 50 randomized instances (< 60 s)", 60.0, [] {
        std::mt19937 rng(424242);
        std::vector<HermitianPair> pairs;
        pairs.push_back(build_hermitian_pair(Family::A(1, 0), "su", 1, 1, 1, 0));
        pairs.push_back(build_hermitian_pair(Family::A(1, 0), "su", 2, 0, 1, 0));
        pairs.push_back(build_hermitian_pair(Family::A(2, 1), "su", 2, 1, 1, 1));
        pairs.push_back(build_hermitian_pair(Family::A(2, 1), "su", 1, 2, 2, 0));
        pairs.push_back(build_hermitian_pair(Family::B(0, 1), "sp"));
        pairs.push_back(build_hermitian_pair(Family::B(0, 2), "sp"));
        pairs.push_back(build_hermitian_pair(Family::B(2, 1), "so2"));
        pairs.push_back(build_hermitian_pair(Family::B(2, 1), "so-compact"));
        pairs.push_back(build_hermitian_pair(Family::C(2), "so2"));
        int instances = 0;
        for (const auto& pair : pairs) {
            auto systems = enumerate_admissible(pair);
            if (systems.empty()) throw Fail("no admissible systems for " + pair.form_label);
            for (int t = 0; t < 6; ++t) {
                const auto& p = systems[rng() % systems.size()];
                Weight lam(pair.family.basis_dim());
                for (int tries = 0;; ++tries) {
                    for (size_t i = 0; i < lam.dim(); ++i) lam[i] = rat(static_cast<long>(rng() % 7) - 3);
                    if (is_k_dominant_integral(pair, p, lam)) break;
                    if (tries > 2000) throw Fail("no dominant integral sample for " + pair.form_label);
                }
                long long depth = 1 + static_cast<long long>(rng() % 6);
                HighestWeight hw(pair, p, lam);
                if (!(character_formula(hw, depth) == character_bruteforce(hw, depth)))
                    throw Fail("character mismatch: " + pair.form_label + " lambda=" + lam.str());
                ++instances;
            }
        }
        if (instances < 50) throw Fail("only " + std::to_string(instances) + " instances");
        return std::to_string(instances) + " instances, integer-exact agreement";
    });

    criterion(5, "Weyl numerator identity, >= 20 dominant weights (exact)", 0, [] {
        std::mt19937 rng(99);
        std::vector<HermitianPair> pairs;
        pairs.push_back(build_hermitian_pair(Family::B(2, 1), "so2"));
        pairs.push_back(build_hermitian_pair(Family::B(3, 2), "so2"));
        pairs.push_back(build_hermitian_pair(Family::A(2, 1), "su", 2, 1, 1, 1));
        pairs.push_back(build_hermitian_pair(Family::A(2, 0), "su", 3, 0, 1, 0));
        pairs.push_back(build_hermitian_pair(Family::D(3, 1), "so2"));
        int done = 0;
        for (const auto& pair : pairs) {
            auto p = standard_admissible_system(pair);
            int here = 0;
            for (int t = 0; t < 60 && here < 5; ++t) {
                Weight lam(pair.family.basis_dim());
                for (size_t i = 0; i < lam.dim(); ++i) lam[i] = rat(static_cast<long>(rng() % 5) - 2);
                if (!is_k_dominant_integral(pair, p, lam)) continue;
                if (!weyl_numerator_identity_holds(pair, p, lam))
                    throw Fail("numerator identity fails: " + pair.form_label + " " + lam.str());
                ++here;
                ++done;
            }
        }
        if (done < 20) throw Fail("only " + std::to_string(done) + " weights");
        return std::to_string(done) + " dominant weights, exact equality";
    });

    criterion(6, "Irreducibility desk verification to depth 8 (< 5 min)", 300.0, [] {
        int empty_scans = 0;
        auto expect_empty = [&](const HermitianPair& pair, const Weight& lam) {
            auto p = standard_admissible_system(pair);
            HighestWeight hw(pair, p, lam);
            if (!check_irreducibility_criterion(hw)) throw Fail("criterion should hold at " + lam.str());
            if (!find_singular_vectors(hw, 8).empty())
                throw Fail("singular vector despite the criterion at " + lam.str());
            ++empty_scans;
        };
        expect_empty(build_hermitian_pair(Family::B(0, 1), "sp"), Weight{rat(-2)});
        expect_empty(build_hermitian_pair(Family::B(0, 1), "sp"), Weight{rat(-1, 2)});
        expect_empty(build_hermitian_pair(Family::B(0, 2), "sp"), Weight{rat(-2), rat(-2)});
        expect_empty(build_hermitian_pair(Family::B(0, 2), "sp"), Weight{rat(-3), rat(-4)});
        expect_empty(build_hermitian_pair(Family::A(1, 0), "su", 1, 1, 1, 0), Weight{rat(-2), rat(0), rat(-1)});
        expect_empty(build_hermitian_pair(Family::A(2, 1), "su", 2, 1, 1, 1),
                     Weight{rat(0), rat(0), rat(6), rat(-8), rat(-6)});

        int walls = 0;
        auto expect_wall = [&](const HermitianPair& pair, const Weight& lam, bool check_linkage) {
            auto p = standard_admissible_system(pair);
            HighestWeight hw(pair, p, lam);
            if (check_irreducibility_criterion(hw)) throw Fail("expected a violating weight " + lam.str());
            auto svs = find_singular_vectors(hw, 8);
            if (svs.empty()) throw Fail("no singular vector at the wall " + lam.str());
            if (check_linkage) {
                WeylGroup w = even_weyl_group(*pair.sys);
                for (const auto& sv : svs)
                    if (!linkage(*pair.sys, w, rho(p), lam, sv.mu))
                        throw Fail("singular weight not linked at " + lam.str());
            }
            ++walls;
        };
        // odd-root walls of osp(1|2): 2(lambda+rho, delta)/(delta,delta) odd
        expect_wall(build_hermitian_pair(Family::B(0, 1), "sp"), Weight{rat(0)}, true);
        expect_wall(build_hermitian_pair(Family::B(0, 1), "sp"), Weight{rat(1)}, true);
        expect_wall(build_hermitian_pair(Family::B(0, 1), "sp"), Weight{rat(2)}, true);
        // osp(1|4) wall with a nontrivial compact factor
        expect_wall(build_hermitian_pair(Family::B(0, 2), "sp"), Weight{rat(1), rat(0)}, true);
        // sl(2|1): even sl2 wall (typical), and an isotropic (atypical) wall
        expect_wall(build_hermitian_pair(Family::A(1, 0), "su", 1, 1, 1, 0), Weight{rat(1), rat(0), rat(5)},
                    true);
        expect_wall(build_hermitian_pair(Family::A(1, 0), "su", 1, 1, 1, 0), Weight{rat(3), rat(1), rat(-1)},
                    false); // atypical: linkage hypothesis does not apply
        // sl(3|2): noncompact simple wall
        expect_wall(build_hermitian_pair(Family::A(2, 1), "su", 2, 1, 1, 1),
                    Weight{rat(0), rat(0), rat(0), rat(5), rat(3)}, true);
        std::ostringstream os;
        os << empty_scans << " criterion weights scan empty to depth 8; " << walls
           << " violating weights produce singular vectors (linked when typical)";
        return os.str();
    });

    criterion(7, "Kac-Gorelik membership (exact symbolic)", 0, [] {
        std::mt19937 rng(7);
        int passed = 0;
        for (const auto& fam : {Family::A(1, 0), Family::A(2, 1)}) {
            auto sys = build_root_system(fam);
            WeylGroup w = even_weyl_group(sys);
            SymPoly g = g_polynomial(sys);
            const size_t d = fam.basis_dim();
            int quota = fam.kind == FamilyKind::A && fam.m == 1 ? 6 : 5;
            for (int t = 0; t < quota; ++t) {
                Weight seed(d);
                for (size_t i = 0; i < d; ++i) seed[i] = rat(static_cast<long>(rng() % 5) - 2);
                int deg = 1 + static_cast<int>(rng() % (fam.m == 1 ? 4 : 2));
                SymPoly psi = orbit_power_sum(w, seed, deg);
                SymPoly phi = SymPoly::constant(d, rat(static_cast<long>(rng() % 9) - 4)) + g * psi;
                if (!in_I_h(sys, w, phi)) throw Fail("c + g*psi rejected for " + fam.name());
                ++passed;
            }
        }
        // The source tables pin in_I_h((lambda,lambda)) == false for A(1,0).
        // The gram square is beta(Casimir) + (rho,rho), hence genuinely inside
        // I(h): its translation increment 2t(lambda,alpha) + t^2(alpha,alpha)
        // vanishes identically on lambda in alpha-perp for isotropic alpha.
        auto sys = build_root_system(Family::A(1, 0));
        WeylGroup w = even_weyl_group(sys);
        SymPoly gram2(3);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) {
                if (sys.gram(i, j) == 0) continue;
                std::vector<int> e(3, 0);
                e[i] += 1;
                e[j] += 1;
                gram2.add_term(e, sys.gram(i, j));
            }
        bool inIh = in_I_h(sys, w, gram2);
        if (inIh)
            throw Fail(std::to_string(passed) +
                       " random c+g*psi pass, but the pinned expectation in_I_h((lambda,lambda)) == false is"
                       " unattainable: (lambda,lambda) = beta(quadratic Casimir) + (rho,rho) lies in I(h)"
                       " and the implemented symbolic test correctly returns true (see the decisions ledger)");
        return std::to_string(passed) + " invariants confirmed";
    });

    criterion(8, "Structural invariants (exact)", 0, [] {
        // Prop-style items (1)-(8) at small rank, realized families
        std::vector<Family> fams{Family::A(1, 0), Family::A(2, 1), Family::B(0, 2), Family::B(1, 1),
                                 Family::C(2)};
        for (const auto& f : fams) {
            auto alg = realize_algebra(f);
            auto sys = build_root_system(f);
            // (1)+(2): g = h + sum g_alpha with one vector per root
            if (alg.dim() != alg.cartan_dim + sys.roots.size()) throw Fail("decomposition fails " + f.name());
            auto sc = structure_constants(alg); // validates (3) internally
            // (5): str-form orthogonality
            for (size_t i = alg.cartan_dim; i < alg.dim(); ++i)
                for (size_t j = alg.cartan_dim; j < alg.dim(); ++j) {
                    bool opposite = (alg.weight[i] + alg.weight[j]).is_zero();
                    Rational v = str_form(alg.basis[i], alg.basis[j]);
                    if (opposite ? v == 0 : v != 0) throw Fail("str-form orthogonality fails " + f.name());
                }
            // super-Jacobi on all basis triples (p+q <= 5)
            for (size_t i = 0; i < alg.dim(); ++i)
                for (size_t j = 0; j < alg.dim(); ++j)
                    for (size_t k = 0; k < alg.dim(); ++k) {
                        SuperMatrix lhs =
                            supercommutator(alg.basis[i], supercommutator(alg.basis[j], alg.basis[k]));
                        SuperMatrix rhs =
                            supercommutator(supercommutator(alg.basis[i], alg.basis[j]), alg.basis[k]);
                        SuperMatrix t = supercommutator(alg.basis[j], supercommutator(alg.basis[i], alg.basis[k]));
                        rhs = (alg.parity[i] && alg.parity[j]) ? rhs - t : rhs + t;
                        if (!(lhs.a - rhs.a).is_zero()) throw Fail("super-Jacobi fails " + f.name());
                    }
            (void)sc;
        }
        // (4)+(7)+(8) on every buildable family at small rank
        for (const auto& f : {Family::A(2, 1), Family::B(2, 2), Family::C(3), Family::D(2, 2),
                              Family::D21(rat(2, 3)), Family::F4(), Family::G3()}) {
            auto sys = build_root_system(f);
            if (det(sys.gram) == 0) throw Fail("degenerate form " + f.name());
            WeylGroup w = even_weyl_group(sys);
            for (const auto& g : w.gens) {
                // W-invariance of the form: S^T G S == G
                Mat gt = g.transpose() * sys.gram * g;
                if (!(gt == sys.gram)) throw Fail("form not W-invariant " + f.name());
            }
            for (const auto& r : sys.roots) {
                if (!sys.contains(-r.w)) throw Fail("negation closure fails " + f.name());
                for (int k = -3; k <= 3; ++k) {
                    if (k == 0 || k == 1 || k == -1) continue;
                    bool in = sys.contains(rat(k) * r.w);
                    bool predicted = r.odd && sys.pairing(r.w, r.w) != 0 && (k == 2 || k == -2);
                    if (in != predicted) throw Fail("doubling law fails " + f.name());
                }
            }
        }
        // Borel dimension criterion for the standard systems of realized families
        for (const auto& f : {Family::A(1, 0), Family::A(2, 1), Family::B(0, 2), Family::B(2, 1), Family::C(2),
                              Family::D(2, 1)}) {
            auto key = legal_form_keys(f).front();
            auto pair = f.kind == FamilyKind::A ? build_hermitian_pair(f, key, f.m, 1, f.n, 1)
                                                : build_hermitian_pair(f, key);
            auto p = standard_admissible_system(pair);
            if (!borel_dimension_check(f, p.roots)) throw Fail("Borel dimension fails " + f.name());
            std::vector<Root> missing(p.roots.begin(), p.roots.end() - 1);
            if (borel_dimension_check(f, missing)) throw Fail("Borel dimension accepts a defective set");
        }
        return std::string("items (1)-(8), super-Jacobi (p+q <= 5), Borel dimension checks");
    });

    int total = selected.empty() ? 8 : static_cast<int>(selected.size());
    std::cout << (total - failures) << "/" << total << " criteria passed" << std::endl;
    return failures;
}
