#include "supermod/rootsys.hpp"

#include <algorithm>
#include <stdexcept>

namespace supermod {

Family Family::A(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("A(m,n) requires m,n >= 0");
    if (m == n) throw std::invalid_argument("A(n,n) is not in the supported list");
    return Family{FamilyKind::A, m, n, 0};
}

Family Family::B(int m, int n) {
    if (m < 0 || n < 1) throw std::invalid_argument("B(m,n) requires m >= 0, n >= 1");
    return Family{FamilyKind::B, m, n, 0};
}

Family Family::C(int n) {
    if (n < 2) throw std::invalid_argument("C(n) requires n >= 2");
    return Family{FamilyKind::C, 0, n, 0};
}

Family Family::D(int m, int n) {
    if (m < 2 || n < 1) throw std::invalid_argument("D(m,n) requires m >= 2, n >= 1");
    return Family{FamilyKind::D, m, n, 0};
}

Family Family::D21(const Rational& alpha) {
    if (alpha == 0 || alpha == -1) throw std::invalid_argument("D(2,1;alpha) requires alpha not in {0,-1}");
    return Family{FamilyKind::D21, 0, 0, alpha};
}

Family Family::F4() { return Family{FamilyKind::F4, 0, 0, 0}; }
Family Family::G3() { return Family{FamilyKind::G3, 0, 0, 0}; }

int Family::eps_count() const {
    switch (kind) {
        case FamilyKind::A: return m + 1;
        case FamilyKind::B: return m;
        case FamilyKind::C: return 1;
        case FamilyKind::D: return m;
        case FamilyKind::D21: return 3;
        case FamilyKind::F4: return 3;
        case FamilyKind::G3: return 2;
    }
    return 0;
}

int Family::delta_count() const {
    switch (kind) {
        case FamilyKind::A: return n + 1;
        case FamilyKind::B: return n;
        case FamilyKind::C: return n - 1;
        case FamilyKind::D: return n;
        case FamilyKind::D21: return 0;
        case FamilyKind::F4: return 1;
        case FamilyKind::G3: return 1;
    }
    return 0;
}

std::string Family::name() const {
    switch (kind) {
        case FamilyKind::A: return "A(" + std::to_string(m) + "," + std::to_string(n) + ")";
        case FamilyKind::B: return "B(" + std::to_string(m) + "," + std::to_string(n) + ")";
        case FamilyKind::C: return "C(" + std::to_string(n) + ")";
        case FamilyKind::D: return "D(" + std::to_string(m) + "," + std::to_string(n) + ")";
        case FamilyKind::D21: return "D(2,1;" + rat_str(alpha) + ")";
        case FamilyKind::F4: return "F(4)";
        case FamilyKind::G3: return "G(3)";
    }
    return "?";
}

Weight Family::eps(int i) const {
    if (kind == FamilyKind::G3) {
        // epsilon_3 = -epsilon_1 - epsilon_2 in the 2-dimensional quotient.
        Weight w(basis_dim());
        if (i == 3) {
            w[0] = -1;
            w[1] = -1;
        } else {
            w[i - 1] = 1;
        }
        return w;
    }
    if (i < 1 || i > eps_count()) throw std::invalid_argument("eps index out of range");
    return unit_weight(basis_dim(), i - 1);
}

Weight Family::del(int j) const {
    if (j < 1 || j > delta_count()) throw std::invalid_argument("delta index out of range");
    return unit_weight(basis_dim(), eps_count() + j - 1);
}

const Root& SuperRootSystem::root(const Weight& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) throw std::invalid_argument("not a root: " + w.str());
    return roots[it->second];
}

Rational SuperRootSystem::pairing(const Weight& a, const Weight& b) const {
    if (a.dim() != gram.rows() || b.dim() != gram.rows())
        throw std::invalid_argument("weight dimension does not match family basis");
    Rational s = 0;
    for (size_t i = 0; i < a.dim(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.dim(); ++j)
            if (b[j] != 0 && gram(i, j) != 0) s += a[i] * b[j] * gram(i, j);
    }
    return s;
}

Rational SuperRootSystem::coroot_pair(const Weight& lambda, const Root& gamma) const {
    const Root& g = root(gamma.w); // validates membership
    Rational nn = pairing(g.w, g.w);
    if (nn == 0) return pairing(lambda, g.w);
    Rational r = 2 * pairing(lambda, g.w) / nn;
    r.canonicalize();
    return r;
}

bool SuperRootSystem::is_isotropic(const Root& gamma) const {
    const Root& g = root(gamma.w);
    return pairing(g.w, g.w) == 0;
}

std::vector<Root> SuperRootSystem::even_roots() const {
    std::vector<Root> r;
    for (const auto& x : roots)
        if (!x.odd) r.push_back(x);
    return r;
}

std::vector<Root> SuperRootSystem::odd_roots() const {
    std::vector<Root> r;
    for (const auto& x : roots)
        if (x.odd) r.push_back(x);
    return r;
}

void SuperRootSystem::rebuild_index() {
    index_.clear();
    for (size_t i = 0; i < roots.size(); ++i) index_[roots[i].w] = i;
    if (index_.size() != roots.size()) throw std::logic_error("duplicate roots in system");
}

namespace {

void add_pm(std::vector<Root>& out, const Weight& w, bool odd) {
    out.push_back({w, odd});
    out.push_back({-w, odd});
}

Mat diag_gram(const std::vector<Rational>& d) {
    Mat g(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) g(i, i) = d[i];
    return g;
}

} // namespace

SuperRootSystem build_root_system(const Family& f) {
    SuperRootSystem s;
    s.family = f;
    std::vector<Root> roots;
    const int me = f.eps_count(), nd = f.delta_count();

    switch (f.kind) {
        case FamilyKind::A: {
            std::vector<Rational> d(me + nd, 1);
            for (int j = 0; j < nd; ++j) d[me + j] = -1;
            s.gram = diag_gram(d);
            for (int i = 1; i <= me; ++i)
                for (int j = i + 1; j <= me; ++j) add_pm(roots, f.eps(i) - f.eps(j), false);
            for (int i = 1; i <= nd; ++i)
                for (int j = i + 1; j <= nd; ++j) add_pm(roots, f.del(i) - f.del(j), false);
            for (int i = 1; i <= me; ++i)
                for (int j = 1; j <= nd; ++j) add_pm(roots, f.eps(i) - f.del(j), true);
            break;
        }
        case FamilyKind::B: {
            std::vector<Rational> d(me + nd, 1);
            for (int j = 0; j < nd; ++j) d[me + j] = -1;
            s.gram = diag_gram(d);
            for (int i = 1; i <= me; ++i) {
                add_pm(roots, f.eps(i), false);
                for (int j = i + 1; j <= me; ++j) {
                    add_pm(roots, f.eps(i) - f.eps(j), false);
                    add_pm(roots, f.eps(i) + f.eps(j), false);
                }
            }
            for (int i = 1; i <= nd; ++i) {
                add_pm(roots, rat(2) * f.del(i), false);
                for (int j = i + 1; j <= nd; ++j) {
                    add_pm(roots, f.del(i) - f.del(j), false);
                    add_pm(roots, f.del(i) + f.del(j), false);
                }
            }
            for (int i = 1; i <= nd; ++i) {
                add_pm(roots, f.del(i), true);
                for (int j = 1; j <= me; ++j) {
                    add_pm(roots, f.del(i) - f.eps(j), true);
                    add_pm(roots, f.del(i) + f.eps(j), true);
                }
            }
            break;
        }
        case FamilyKind::C: {
            std::vector<Rational> d(me + nd, 1);
            for (int j = 0; j < nd; ++j) d[me + j] = -1;
            s.gram = diag_gram(d);
            for (int i = 1; i <= nd; ++i) {
                add_pm(roots, rat(2) * f.del(i), false);
                for (int j = i + 1; j <= nd; ++j) {
                    add_pm(roots, f.del(i) - f.del(j), false);
                    add_pm(roots, f.del(i) + f.del(j), false);
                }
            }
            for (int j = 1; j <= nd; ++j) {
                add_pm(roots, f.eps(1) - f.del(j), true);
                add_pm(roots, f.eps(1) + f.del(j), true);
            }
            break;
        }
        case FamilyKind::D: {
            std::vector<Rational> d(me + nd, 1);
            for (int j = 0; j < nd; ++j) d[me + j] = -1;
            s.gram = diag_gram(d);
            for (int i = 1; i <= me; ++i)
                for (int j = i + 1; j <= me; ++j) {
                    add_pm(roots, f.eps(i) - f.eps(j), false);
                    add_pm(roots, f.eps(i) + f.eps(j), false);
                }
            for (int i = 1; i <= nd; ++i) {
                add_pm(roots, rat(2) * f.del(i), false);
                for (int j = i + 1; j <= nd; ++j) {
                    add_pm(roots, f.del(i) - f.del(j), false);
                    add_pm(roots, f.del(i) + f.del(j), false);
                }
            }
            for (int i = 1; i <= nd; ++i)
                for (int j = 1; j <= me; ++j) {
                    add_pm(roots, f.del(i) - f.eps(j), true);
                    add_pm(roots, f.del(i) + f.eps(j), true);
                }
            break;
        }
        case FamilyKind::D21: {
            s.gram = diag_gram({-(1 + f.alpha), 1, f.alpha});
            for (int i = 1; i <= 3; ++i) add_pm(roots, rat(2) * f.eps(i), false);
            for (int s2 : {1, -1})
                for (int s3 : {1, -1})
                    add_pm(roots, f.eps(1) + rat(s2) * f.eps(2) + rat(s3) * f.eps(3), true);
            break;
        }
        case FamilyKind::F4: {
            s.gram = diag_gram({1, 1, 1, -3});
            for (int i = 1; i <= 3; ++i) {
                add_pm(roots, f.eps(i), false);
                for (int j = i + 1; j <= 3; ++j) {
                    add_pm(roots, f.eps(i) - f.eps(j), false);
                    add_pm(roots, f.eps(i) + f.eps(j), false);
                }
            }
            add_pm(roots, f.del(1), false);
            Rational h = rat(1, 2);
            for (int s2 : {1, -1})
                for (int s3 : {1, -1})
                    for (int sd : {1, -1})
                        add_pm(roots,
                               h * (f.eps(1) + rat(s2) * f.eps(2) + rat(s3) * f.eps(3) + rat(sd) * f.del(1)), true);
            break;
        }
        case FamilyKind::G3: {
            Mat g(3, 3);
            g(0, 0) = 2; g(0, 1) = -1;
            g(1, 0) = -1; g(1, 1) = 2;
            g(2, 2) = -2;
            s.gram = g;
            for (int i = 1; i <= 3; ++i) add_pm(roots, f.eps(i), false);
            add_pm(roots, f.eps(1) - f.eps(2), false);
            add_pm(roots, f.eps(1) - f.eps(3), false);
            add_pm(roots, f.eps(2) - f.eps(3), false);
            add_pm(roots, rat(2) * f.del(1), false);
            roots.push_back({f.del(1), true});
            roots.push_back({-f.del(1), true});
            for (int i = 1; i <= 3; ++i) {
                add_pm(roots, f.del(1) - f.eps(i), true);
                add_pm(roots, f.del(1) + f.eps(i), true);
            }
            break;
        }
    }

    std::sort(roots.begin(), roots.end());
    s.roots = std::move(roots);
    s.rebuild_index();
    if (det(s.gram) == 0) throw std::logic_error("degenerate invariant form for " + f.name());
    for (const auto& r : s.roots)
        if (r.w.is_zero()) throw std::logic_error("zero root");
    return s;
}

std::shared_ptr<const SuperRootSystem> shared_root_system(const Family& f) {
    return std::make_shared<const SuperRootSystem>(build_root_system(f));
}

Weight g3_normalize(const Weight& w) {
    if (w.dim() == 3) return w;
    if (w.dim() != 4) throw std::invalid_argument("G(3) weights have 3 or 4 coordinates");
    // (a1,a2,a3,b) with e3 = -e1-e2  ->  (a1-a3, a2-a3, b)
    return Weight{w[0] - w[2], w[1] - w[2], w[3]};
}

nlohmann::json family_to_json(const Family& f) {
    nlohmann::json j;
    switch (f.kind) {
        case FamilyKind::A: j["family"] = "A"; j["params"] = {f.m, f.n}; break;
        case FamilyKind::B: j["family"] = "B"; j["params"] = {f.m, f.n}; break;
        case FamilyKind::C: j["family"] = "C"; j["params"] = {f.n}; break;
        case FamilyKind::D: j["family"] = "D"; j["params"] = {f.m, f.n}; break;
        case FamilyKind::D21:
            j["family"] = "D21a";
            j["params"] = nlohmann::json::array();
            j["alpha"] = rat_str(f.alpha);
            break;
        case FamilyKind::F4: j["family"] = "F4"; j["params"] = nlohmann::json::array(); break;
        case FamilyKind::G3: j["family"] = "G3"; j["params"] = nlohmann::json::array(); break;
    }
    return j;
}

Family family_from_json(const nlohmann::json& j) {
    const std::string k = j.at("family").get<std::string>();
    if (k == "A") return Family::A(j.at("params")[0], j.at("params")[1]);
    if (k == "B") return Family::B(j.at("params")[0], j.at("params")[1]);
    if (k == "C") return Family::C(j.at("params")[0]);
    if (k == "D") return Family::D(j.at("params")[0], j.at("params")[1]);
    if (k == "D21a") return Family::D21(rat_parse(j.at("alpha").get<std::string>()));
    if (k == "F4") return Family::F4();
    if (k == "G3") return Family::G3();
    throw std::invalid_argument("unknown family tag: " + k);
}

nlohmann::json weight_to_json(const Weight& w) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : w.c) a.push_back(rat_str(x));
    return a;
}

Weight weight_from_json(const nlohmann::json& j) {
    Weight w(j.size());
    for (size_t i = 0; i < j.size(); ++i) w[i] = rat_parse(j[i].get<std::string>());
    return w;
}

nlohmann::json root_system_to_json(const SuperRootSystem& s) {
    nlohmann::json j = family_to_json(s.family);
    nlohmann::json gram = nlohmann::json::array();
    for (size_t i = 0; i < s.gram.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t k = 0; k < s.gram.cols(); ++k) row.push_back(rat_str(s.gram(i, k)));
        gram.push_back(row);
    }
    j["gram"] = gram;
    nlohmann::json roots = nlohmann::json::array();
    for (const auto& r : s.roots)
        roots.push_back({{"coords", weight_to_json(r.w)}, {"parity", r.odd ? "odd" : "even"}});
    j["roots"] = roots;
    return j;
}

SuperRootSystem root_system_from_json(const nlohmann::json& j) {
    SuperRootSystem s;
    s.family = family_from_json(j);
    const auto& gram = j.at("gram");
    s.gram = Mat(gram.size(), gram.size());
    for (size_t i = 0; i < gram.size(); ++i)
        for (size_t k = 0; k < gram[i].size(); ++k)
            s.gram(i, k) = rat_parse(gram[i][k].get<std::string>());
    for (const auto& r : j.at("roots"))
        s.roots.push_back({weight_from_json(r.at("coords")), r.at("parity").get<std::string>() == "odd"});
    std::sort(s.roots.begin(), s.roots.end());
    s.rebuild_index();
    return s;
}

} // namespace supermod
