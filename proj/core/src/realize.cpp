#include "supermod/realize.hpp"

#include <algorithm>
#include <stdexcept>

namespace supermod {

namespace {

Mat unit(size_t n, size_t a, size_t b) {
    Mat m(n, n);
    m(a, b) = 1;
    return m;
}

// Weight of a matrix supported on a single ad-h eigenspace; throws if the
// support mixes weights.
Weight matrix_weight(const Mat& m, const std::vector<Weight>& poswt, size_t dim) {
    bool seen = false;
    Weight w(dim);
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) {
            if (m(r, c) == 0) continue;
            Weight cand = poswt[r] - poswt[c];
            if (!seen) {
                w = cand;
                seen = true;
            } else if (!(cand == w)) {
                throw std::logic_error("basis element is not an ad-h eigenvector");
            }
        }
    if (!seen) throw std::logic_error("zero basis element");
    return w;
}

bool is_diagonal(const Mat& m) {
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c)
            if (r != c && m(r, c) != 0) return false;
    return true;
}

// Scalar c with y = c*x, if any.
std::optional<Rational> proportionality(const Mat& x, const Mat& y) {
    Rational c = 0;
    bool found = false;
    for (size_t r = 0; r < x.rows() && !found; ++r)
        for (size_t col = 0; col < x.cols() && !found; ++col)
            if (x(r, col) != 0) {
                c = y(r, col) / x(r, col);
                c.canonicalize();
                found = true;
            }
    if (!found) return std::nullopt; // x = 0
    Mat diff = y - c * x;
    if (!diff.is_zero()) return std::nullopt;
    return c;
}

} // namespace

const SuperMatrix& MatrixAlgebra::root_vector(const Weight& alpha) const {
    auto it = root_index.find(alpha);
    if (it == root_index.end()) throw std::invalid_argument("no root vector for " + alpha.str());
    return basis[it->second];
}

Rational MatrixAlgebra::eval_on_diagonal(const Weight& w, const SuperMatrix& h) const {
    if (!is_diagonal(h.a)) throw std::invalid_argument("evaluation requires a diagonal element");
    // position_weight[k] tells which coordinate functional slot k carries;
    // sum d_k * w(coordinate at k) over slots carrying +/- a basis functional.
    // Coordinates may repeat across slots (e.g. +eps_i and -eps_i), so walk
    // coordinates instead: w(h) = sum_i w_i * (value of functional i on h).
    Rational v = 0;
    const size_t d = w.dim();
    for (size_t i = 0; i < d; ++i) {
        if (w[i] == 0) continue;
        // find a slot whose position weight is exactly +- the i-th unit
        bool done = false;
        for (size_t k = 0; k < position_weight.size() && !done; ++k) {
            const Weight& pw = position_weight[k];
            if (pw.is_zero()) continue;
            // pw = unit_i ?
            bool plus = true, minus = true;
            for (size_t j = 0; j < d; ++j) {
                Rational want = (j == i) ? 1 : 0;
                if (pw[j] != want) plus = false;
                if (pw[j] != -want) minus = false;
            }
            if (plus) {
                v += w[i] * h.a(k, k);
                done = true;
            } else if (minus) {
                v += w[i] * (-h.a(k, k));
                done = true;
            }
        }
        if (!done) throw std::logic_error("coordinate functional not carried by any diagonal slot");
    }
    return v;
}

SuperMatrix MatrixAlgebra::coroot_element(const SuperRootSystem& sys, const Root& alpha) const {
    // Solve beta(H) = coroot_pair(beta, alpha) for H in the Cartan span,
    // using every root beta as a constraint.
    Mat rows(sys.roots.size(), cartan_dim);
    std::vector<Rational> rhs(sys.roots.size());
    for (size_t r = 0; r < sys.roots.size(); ++r) {
        for (size_t k = 0; k < cartan_dim; ++k) rows(r, k) = eval_on_diagonal(sys.roots[r].w, basis[k]);
        rhs[r] = sys.coroot_pair(sys.roots[r].w, alpha);
    }
    auto sol = solve(rows, rhs);
    if (!sol) throw std::logic_error("coroot element has no realization");
    SuperMatrix h(p, q);
    for (size_t k = 0; k < cartan_dim; ++k) h = h + (*sol)[k] * basis[k];
    return h;
}

MatrixAlgebra realize_algebra(const Family& f) {
    if (!f.has_realization())
        throw std::invalid_argument(f.name() + " has no supermatrix realization in scope");

    MatrixAlgebra alg;
    alg.family = f;
    const size_t dimw = f.basis_dim();

    std::vector<SuperMatrix> cartan, rootvecs;

    if (f.kind == FamilyKind::A) {
        const size_t M = f.m + 1, N = f.n + 1;
        alg.p = M;
        alg.q = N;
        const size_t T = M + N;
        alg.position_weight.assign(T, Weight(dimw));
        for (size_t k = 0; k < M; ++k) alg.position_weight[k] = f.eps(static_cast<int>(k) + 1);
        for (size_t k = 0; k < N; ++k) alg.position_weight[M + k] = f.del(static_cast<int>(k) + 1);

        for (size_t i = 0; i + 1 < M; ++i) cartan.emplace_back(M, N, unit(T, i, i) - unit(T, i + 1, i + 1));
        cartan.emplace_back(M, N, unit(T, M - 1, M - 1) + unit(T, M, M)); // str = 1 - 1 = 0
        for (size_t j = 0; j + 1 < N; ++j)
            cartan.emplace_back(M, N, unit(T, M + j, M + j) - unit(T, M + j + 1, M + j + 1));
        for (size_t a = 0; a < T; ++a)
            for (size_t b = 0; b < T; ++b)
                if (a != b) rootvecs.emplace_back(M, N, unit(T, a, b));
    } else {
        // osp(M|2n): G0 symmetric on the even block, G1 symplectic on the odd one.
        size_t M = 0, n2 = 0; // n2 = n of sp(2n)
        int me = f.eps_count(), nd = f.delta_count();
        switch (f.kind) {
            case FamilyKind::B: M = 2 * f.m + 1; n2 = f.n; break;
            case FamilyKind::C: M = 2; n2 = f.n - 1; break;
            case FamilyKind::D: M = 2 * f.m; n2 = f.n; break;
            default: break;
        }
        const size_t T = M + 2 * n2;
        alg.p = M;
        alg.q = 2 * n2;
        alg.position_weight.assign(T, Weight(dimw));
        for (int k = 0; k < me; ++k) {
            alg.position_weight[k] = f.eps(k + 1);
            alg.position_weight[me + k] = -f.eps(k + 1);
        }
        // odd M leaves the final even slot at weight zero
        for (int k = 0; k < nd; ++k) {
            alg.position_weight[M + k] = f.del(k + 1);
            alg.position_weight[M + nd + k] = -f.del(k + 1);
        }

        Mat g0(M, M);
        for (int k = 0; k < me; ++k) {
            g0(k, me + k) = 1;
            g0(me + k, k) = 1;
        }
        if (M == 2 * static_cast<size_t>(me) + 1) g0(M - 1, M - 1) = 1;
        Mat g1(2 * n2, 2 * n2);
        for (size_t k = 0; k < n2; ++k) {
            g1(k, n2 + k) = 1;
            g1(n2 + k, k) = -1;
        }

        auto embed_even = [&](const Mat& a, const Mat& d) {
            SuperMatrix x(M, 2 * n2);
            for (size_t i = 0; i < M; ++i)
                for (size_t j = 0; j < M; ++j) x.a(i, j) = a(i, j);
            for (size_t i = 0; i < 2 * n2; ++i)
                for (size_t j = 0; j < 2 * n2; ++j) x.a(M + i, M + j) = d(i, j);
            return x;
        };

        std::vector<SuperMatrix> evens;
        // so(M): A - G0 A^T G0 ... basis from E_ab - G0 E_ba G0
        for (size_t a = 0; a < M; ++a)
            for (size_t b = 0; b < M; ++b) {
                Mat cand = unit(M, a, b) - g0 * unit(M, b, a) * g0;
                if (cand.is_zero()) continue;
                bool dup = false;
                for (const auto& e : evens) {
                    Mat sub(M, M);
                    for (size_t i = 0; i < M; ++i)
                        for (size_t j = 0; j < M; ++j) sub(i, j) = e.a(i, j);
                    if (proportionality(sub, cand)) {
                        dup = true;
                        break;
                    }
                }
                if (!dup) evens.push_back(embed_even(cand, Mat(2 * n2, 2 * n2)));
            }
        if (evens.size() != M * (M - 1) / 2) throw std::logic_error("so-part dimension mismatch");
        const size_t so_dim = evens.size();
        // sp(2n): D = G1 D^T G1; basis from E_ab + G1 E_ba G1
        for (size_t a = 0; a < 2 * n2; ++a)
            for (size_t b = 0; b < 2 * n2; ++b) {
                Mat cand = unit(2 * n2, a, b) + g1 * unit(2 * n2, b, a) * g1;
                if (cand.is_zero()) continue;
                bool dup = false;
                for (size_t k = so_dim; k < evens.size(); ++k) {
                    Mat sub(2 * n2, 2 * n2);
                    for (size_t i = 0; i < 2 * n2; ++i)
                        for (size_t j = 0; j < 2 * n2; ++j) sub(i, j) = evens[k].a(M + i, M + j);
                    if (proportionality(sub, cand)) {
                        dup = true;
                        break;
                    }
                }
                if (!dup) evens.push_back(embed_even(Mat(M, M), cand));
            }
        if (evens.size() - so_dim != n2 * (2 * n2 + 1)) throw std::logic_error("sp-part dimension mismatch");

        std::vector<SuperMatrix> odds;
        for (size_t i = 0; i < M; ++i)
            for (size_t j = 0; j < 2 * n2; ++j) {
                Mat b(M, 2 * n2);
                b(i, j) = 1;
                Mat c = Rational(-1) * (g1 * b.transpose() * g0);
                SuperMatrix x(M, 2 * n2);
                for (size_t r = 0; r < M; ++r)
                    for (size_t s2 = 0; s2 < 2 * n2; ++s2) x.a(r, M + s2) = b(r, s2);
                for (size_t r = 0; r < 2 * n2; ++r)
                    for (size_t s2 = 0; s2 < M; ++s2) x.a(M + r, s2) = c(r, s2);
                odds.push_back(x);
            }

        for (auto& x : evens) {
            Weight w = matrix_weight(x.a, alg.position_weight, dimw);
            if (w.is_zero())
                cartan.push_back(x);
            else
                rootvecs.push_back(x);
        }
        for (auto& x : odds) rootvecs.push_back(x);
    }

    // Assemble: Cartan first, then root vectors sorted by weight.
    alg.cartan_dim = cartan.size();
    std::vector<std::pair<Weight, SuperMatrix>> tagged;
    for (auto& x : rootvecs) tagged.emplace_back(matrix_weight(x.a, alg.position_weight, dimw), x);
    std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    for (auto& h : cartan) {
        if (!is_diagonal(h.a)) throw std::logic_error("non-diagonal Cartan element");
        alg.basis.push_back(h);
        alg.weight.push_back(Weight(dimw));
        alg.parity.push_back(0);
    }
    for (auto& [w, x] : tagged) {
        alg.root_index[w] = alg.basis.size();
        alg.weight.push_back(w);
        alg.parity.push_back(x.parity());
        alg.basis.push_back(x);
    }
    if (alg.root_index.size() + alg.cartan_dim != alg.basis.size())
        throw std::logic_error("dim g_alpha != 1 for some root");

    // Cross-check the root set against the combinatorial construction.
    SuperRootSystem sys = build_root_system(f);
    if (sys.roots.size() != alg.root_index.size()) throw std::logic_error("root count mismatch");
    for (const auto& r : sys.roots) {
        auto it = alg.root_index.find(r.w);
        if (it == alg.root_index.end()) throw std::logic_error("missing root vector for " + r.w.str());
        if (alg.parity[it->second] != (r.odd ? 1 : 0)) throw std::logic_error("parity mismatch at " + r.w.str());
    }
    return alg;
}

StructureConstants structure_constants(const MatrixAlgebra& alg) {
    StructureConstants sc;
    sc.dim = alg.dim();
    sc.table.assign(sc.dim, std::vector<std::vector<std::pair<size_t, Rational>>>(sc.dim));

    const size_t T = alg.p + alg.q;
    // Diagonal solver for Cartan parts.
    Mat cart(T, alg.cartan_dim);
    for (size_t k = 0; k < alg.cartan_dim; ++k)
        for (size_t d = 0; d < T; ++d) cart(d, k) = alg.basis[k].a(d, d);

    for (size_t i = 0; i < sc.dim; ++i)
        for (size_t j = 0; j < sc.dim; ++j) {
            SuperMatrix z = supercommutator(alg.basis[i], alg.basis[j]);
            if (z.a.is_zero()) continue;
            Weight w = alg.weight[i] + alg.weight[j];
            if (w.is_zero()) {
                if (!is_diagonal(z.a)) throw std::logic_error("zero-weight bracket is not diagonal");
                std::vector<Rational> rhs(T);
                for (size_t d = 0; d < T; ++d) rhs[d] = z.a(d, d);
                auto sol = solve(cart, rhs);
                if (!sol) throw std::logic_error("bracket not in Cartan span");
                for (size_t k = 0; k < alg.cartan_dim; ++k)
                    if ((*sol)[k] != 0) sc.table[i][j].push_back({k, (*sol)[k]});
                // verify residual exactly
                SuperMatrix recon(alg.p, alg.q);
                for (auto& [k, c] : sc.table[i][j]) recon = recon + c * alg.basis[k];
                if (!(recon.a - z.a).is_zero()) throw std::logic_error("Cartan expansion mismatch");
            } else {
                auto it = alg.root_index.find(w);
                if (it == alg.root_index.end())
                    throw std::logic_error("bracket lands outside the root decomposition");
                auto c = proportionality(alg.basis[it->second].a, z.a);
                if (!c) throw std::logic_error("bracket is not proportional to the root vector");
                if (*c != 0) sc.table[i][j].push_back({it->second, *c});
            }
        }
    return sc;
}

ChevalleyGenerators chevalley_generators(const MatrixAlgebra& alg, const SuperRootSystem& sys,
                                         const SimpleSystem& simple) {
    ChevalleyGenerators g;
    for (const auto& a : simple.roots) {
        SuperMatrix e = alg.root_vector(a.w);
        SuperMatrix fv = alg.root_vector(-a.w);
        SuperMatrix h = alg.coroot_element(sys, a);
        SuperMatrix z = supercommutator(e, fv);
        if (!is_diagonal(z.a)) throw std::logic_error("[e,f] is not in the Cartan");
        auto c = proportionality(z.a, h.a);
        if (!c || *c == 0) throw std::logic_error("[e,f] is not proportional to the coroot");
        g.e.push_back(*c * e);
        g.f.push_back(fv);
        g.h.push_back(h);
    }
    return g;
}

Mat cartan_matrix(const SuperRootSystem& sys, const SimpleSystem& simple) {
    const size_t r = simple.size();
    // linear independence
    Mat m(sys.gram.rows(), r);
    for (size_t j = 0; j < r; ++j)
        for (size_t i = 0; i < sys.gram.rows(); ++i) m(i, j) = simple.roots[j].w[i];
    if (rank(m) != r) throw std::invalid_argument("simple system is not linearly independent");

    Mat a(r, r);
    for (size_t i = 0; i < r; ++i) {
        Integer lcm = 1;
        for (size_t j = 0; j < r; ++j) {
            a(i, j) = sys.coroot_pair(simple.roots[j].w, sys.root(simple.roots[i].w));
            Integer g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), a(i, j).get_den().get_mpz_t());
            lcm = lcm / g * a(i, j).get_den();
        }
        if (lcm != 1)
            for (size_t j = 0; j < r; ++j) {
                a(i, j) *= Rational(lcm);
                a(i, j).canonicalize();
            }
    }
    if (det(a) == 0) throw std::logic_error("Cartan matrix is singular");
    return a;
}

bool borel_dimension_check(const Family& f, const std::vector<Root>& roots) {
    MatrixAlgebra alg = realize_algebra(f);
    size_t lhs = alg.cartan_dim + roots.size();
    return 2 * lhs == alg.dim() + alg.cartan_dim;
}

nlohmann::json structure_constants_to_json(const StructureConstants& sc) {
    nlohmann::json out = nlohmann::json::array();
    for (size_t i = 0; i < sc.dim; ++i)
        for (size_t j = 0; j < sc.dim; ++j) {
            if (sc.table[i][j].empty()) continue;
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& [k, c] : sc.table[i][j])
                terms.push_back({{"idx", k}, {"coeff", rat_str(c)}});
            out.push_back({{"a", i}, {"b", j}, {"out", terms}});
        }
    return out;
}

} // namespace supermod
