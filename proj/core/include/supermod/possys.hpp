#pragma once

#include "supermod/linalg.hpp"
#include "supermod/rootsys.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace supermod {

struct SimpleSystem {
    std::vector<Root> roots; // ordered
    size_t size() const { return roots.size(); }
};

struct PositiveSystem {
    std::shared_ptr<const SuperRootSystem> sys;
    std::vector<Root> roots; // sorted lex

    bool contains(const Weight& w) const { return index_.count(w) != 0; }
    size_t size() const { return roots.size(); }
    void rebuild_index();

    friend bool operator==(const PositiveSystem& a, const PositiveSystem& b) { return a.roots == b.roots; }

private:
    std::set<Weight> index_;
};

// The three defining conditions: P and -P disjoint, P together with -P
// exhausts Delta, and closure under root sums.
bool is_abstract_positive(const SuperRootSystem& sys, const std::vector<Root>& p);

// Validates abstract positivity.
PositiveSystem make_positive_system(std::shared_ptr<const SuperRootSystem> sys, std::vector<Root> roots);

// Closure-generates the positive system spanned by a simple system.
PositiveSystem positive_system_from_simple(std::shared_ptr<const SuperRootSystem> sys, const SimpleSystem& simple);

// Rational functional (coordinate covector) strictly positive on P, found by
// exact Fourier-Motzkin. Throws std::logic_error if infeasible (cannot happen
// for a genuine positive system).
std::vector<Rational> positivity_functional(const PositiveSystem& p);

Rational eval_functional(const std::vector<Rational>& ell, const Weight& w);

// The indecomposable elements of P, in lex order.
SimpleSystem simple_roots(const PositiveSystem& p);

// Positive system cut out by a generic functional: {a : ell(a) > 0}.
// Throws if ell vanishes on some root.
PositiveSystem positive_system_from_functional(std::shared_ptr<const SuperRootSystem> sys,
                                               const std::vector<Rational>& ell);

// ---------------------------------------------------------------------------
// Hermitian pairs: compact/noncompact classification per real form.

// Canonical form keys per family (value in parentheses is the printed label):
//   A:  "su"         su(p,q)+su(r,s)+u(1), p+q = m+1, r+s = n+1
//   B:  "so2"        so(2,2m-1)+sp(n,R)     [m >= 1]
//       "so-compact" so(2m+1)+sp(n,R)       [m >= 1]
//   B0: "sp"         sp(n,R)                [m = 0]
//   C:  "so2"        so(2)+sp(n-1,R)
//   D:  "so2"        so(2,2m-2)+sp(n,R)
//       "so-star"    so*(2m)+sp(n,R)
//       "so-compact" so(2m)+sp(n,R)
//   D21: "sl2x3"     sl(2,R)^3
//        "sl2su2su2" sl(2,R)+su(2)+su(2)
//   F4: "sl2so7"     sl(2,R)+so(7)
//       "su2so25"    su(2)+so(2,5)
//   G3: "sl2g2"      sl(2,R)+G2(compact)
struct HermitianPair {
    Family family;
    std::string form_key;
    std::string form_label;
    int p = -1, q = -1, r = -1, s = -1; // A-family splitting
    std::shared_ptr<const SuperRootSystem> sys;
    std::set<Weight> compact; // negation-closed set of even roots

    bool is_compact(const Weight& w) const { return compact.count(w) != 0; }
};

std::vector<std::string> legal_form_keys(const Family& f);
HermitianPair build_hermitian_pair(const Family& f, const std::string& form_key,
                                   int p = -1, int q = -1, int r = -1, int s = -1);

// The distinguished simple system (one per family, independent of the form).
SimpleSystem distinguished_simple_system(const Family& f);

// The positive system generated by the distinguished simple system.
PositiveSystem distinguished_positive_system(const HermitianPair& pair);

// The standard admissible system of the pair. Equals the distinguished one
// except for F(4)/su(2)+so(2,5), where the distinguished system is not
// admissible and the Weyl-transformed system is returned instead.
PositiveSystem standard_admissible_system(const HermitianPair& pair);

// F(4) only: the unique Weyl group element (as a matrix on coordinates)
// carrying the distinguished even simple system to the admissible one,
// found by search over W(B3) x W(A1).
Mat f4_weyl_adjustment(const HermitianPair& pair);

// Splits of a positive system by compactness/parity.
std::vector<Root> compact_part(const HermitianPair& pair, const PositiveSystem& p);      // P_k
std::vector<Root> noncompact_even_part(const HermitianPair& pair, const PositiveSystem& p); // P_{n,0}
std::vector<Root> noncompact_odd_part(const HermitianPair& pair, const PositiveSystem& p);  // P_{n,1}

bool is_admissible(const HermitianPair& pair, const PositiveSystem& p);

// All abstract positive systems, by exhaustive sign-assignment search with
// closure pruning. Throws std::runtime_error when the node budget is hit.
std::vector<PositiveSystem> enumerate_positive_systems(std::shared_ptr<const SuperRootSystem> sys,
                                                       size_t budget = 2'000'000);

// The admissible ones among them.
std::vector<PositiveSystem> enumerate_admissible(const HermitianPair& pair, size_t budget = 2'000'000);

// P^- = P_k union -P_n. Requires admissibility.
PositiveSystem flip_noncompact(const HermitianPair& pair, const PositiveSystem& p);

// Number of irreducible k-components of p_1^+: counts weights of P_{n,1}
// that cannot be raised by a positive compact root inside P_{n,1}.
int count_p1_components(const HermitianPair& pair, const PositiveSystem& p);

// Highest weights of the k-module p_0^+ (maximal elements of P_{n,0}).
std::vector<Weight> p0_plus_highest_weights(const HermitianPair& pair, const PositiveSystem& p);

// Indecomposable elements of P_k within P_k (the compact simple roots).
std::vector<Root> compact_simple_roots(const HermitianPair& pair, const PositiveSystem& p);

struct SimpleSystemFacts {
    bool compact_simples_match = false;   // compact roots of S equal those of S_0
    bool flipped_simples_match = false;   // simples of P_0^- are {alpha_i} + {-beta'_j}
    bool shifts_are_nonneg_integral = false; // beta'_j = beta_j + nonneg integer combo of compact simples
    std::vector<Root> s_compact;          // compact simples of S
    std::vector<Root> s0_compact;         // compact simples of S_0
    std::vector<Root> s0_noncompact;      // noncompact simples of S_0 (the beta_i)
    std::vector<Weight> beta_prime;       // highest weights of p_0^+
    bool all() const { return compact_simples_match && flipped_simples_match && shifts_are_nonneg_integral; }
};

SimpleSystemFacts simple_system_facts(const HermitianPair& pair, const PositiveSystem& p);

nlohmann::json positive_system_report(const HermitianPair& pair, const PositiveSystem& p);

} // namespace supermod
