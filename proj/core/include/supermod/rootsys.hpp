#pragma once

#include "supermod/linalg.hpp"
#include "supermod/weight.hpp"

#include <json.hpp>

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace supermod {

enum class FamilyKind { A, B, C, D, D21, F4, G3 };

// Basic classical families. Parameter conventions:
//   A(m,n) = sl(m+1|n+1), m != n          (epsilon_1..m+1, delta_1..n+1)
//   B(m,n) = osp(2m+1|2n), m >= 0, n >= 1 (epsilon_1..m,   delta_1..n)
//   C(n)   = osp(2|2n-2),  n >= 2         (epsilon,        delta_1..n-1)
//   D(m,n) = osp(2m|2n),   m >= 2, n >= 1 (epsilon_1..m,   delta_1..n)
//   D(2,1;alpha), alpha rational, not in {0,-1}   (epsilon_1..3)
//   F(4)                                  (epsilon_1..3, delta)
//   G(3)  with epsilon_3 := -epsilon_1-epsilon_2 eliminated (epsilon_1..2, delta)
struct Family {
    FamilyKind kind;
    int m = 0, n = 0;
    Rational alpha;

    static Family A(int m, int n);
    static Family B(int m, int n);
    static Family C(int n);
    static Family D(int m, int n);
    static Family D21(const Rational& alpha);
    static Family F4();
    static Family G3();

    int eps_count() const;
    int delta_count() const;
    int basis_dim() const { return eps_count() + delta_count(); }
    bool has_realization() const { return kind == FamilyKind::A || kind == FamilyKind::B ||
                                          kind == FamilyKind::C || kind == FamilyKind::D; }
    std::string name() const;

    friend bool operator==(const Family& a, const Family& b) {
        return a.kind == b.kind && a.m == b.m && a.n == b.n && a.alpha == b.alpha;
    }

    Weight eps(int i) const; // 1-based
    Weight del(int j) const; // 1-based
};

struct Root {
    Weight w;
    bool odd = false;

    friend bool operator==(const Root& a, const Root& b) { return a.w == b.w && a.odd == b.odd; }
    friend bool operator<(const Root& a, const Root& b) { return a.w < b.w; }
};

struct SuperRootSystem {
    Family family;
    Mat gram;
    std::vector<Root> roots; // sorted lex by coordinates

    bool contains(const Weight& w) const { return index_.count(w) != 0; }
    const Root& root(const Weight& w) const;

    Rational pairing(const Weight& a, const Weight& b) const;
    // lambda(H_gamma): 2(lambda,gamma)/(gamma,gamma) for non-isotropic gamma,
    // (lambda,gamma) for isotropic gamma. Throws if gamma is not a root.
    Rational coroot_pair(const Weight& lambda, const Root& gamma) const;
    bool is_isotropic(const Root& gamma) const;

    std::vector<Root> even_roots() const;
    std::vector<Root> odd_roots() const;

    void rebuild_index();

private:
    std::map<Weight, size_t> index_;
};

SuperRootSystem build_root_system(const Family& f);
std::shared_ptr<const SuperRootSystem> shared_root_system(const Family& f);

// G(3) weights may be given in the redundant 4-coordinate form
// (e1,e2,e3,delta); this folds e3 away via e1+e2+e3 = 0.
Weight g3_normalize(const Weight& w);

nlohmann::json family_to_json(const Family& f);
Family family_from_json(const nlohmann::json& j);
nlohmann::json weight_to_json(const Weight& w);
Weight weight_from_json(const nlohmann::json& j);
nlohmann::json root_system_to_json(const SuperRootSystem& s);
SuperRootSystem root_system_from_json(const nlohmann::json& j);

} // namespace supermod
