#include "supermod/pbw.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace supermod {

AlgebraModel::AlgebraModel(const Family& f) : alg(realize_algebra(f)), sc(structure_constants(alg)) {
    const size_t d = f.basis_dim();
    cartan_eval = Mat(alg.cartan_dim, d);
    for (size_t k = 0; k < alg.cartan_dim; ++k)
        for (size_t i = 0; i < d; ++i)
            cartan_eval(k, i) = alg.eval_on_diagonal(unit_weight(d, i), alg.basis[k]);
}

Rational AlgebraModel::eval_weight(const Weight& w, size_t cartan_idx) const {
    Rational v = 0;
    for (size_t i = 0; i < w.dim(); ++i)
        if (w[i] != 0) v += w[i] * cartan_eval(cartan_idx, i);
    return v;
}

std::shared_ptr<const AlgebraModel> shared_algebra_model(const Family& f) {
    return std::make_shared<const AlgebraModel>(f);
}

ModuleSlice::ModuleSlice(std::shared_ptr<const AlgebraModel> model, BaseModule base,
                         std::vector<size_t> lowering, std::vector<GenClass> cls, HeightMap hmap,
                         long long depth)
    : model_(std::move(model)),
      base_(std::move(base)),
      lowering_(std::move(lowering)),
      class_(std::move(cls)),
      hmap_(std::move(hmap)),
      depth_(depth) {
    const auto& alg = model_->alg;
    // PBW order: ascending (height of the positive root, lex of coordinates).
    for (size_t g : lowering_) gen_ht_[g] = hmap_.height(-alg.weight[g]);
    std::sort(lowering_.begin(), lowering_.end(), [&](size_t a, size_t b) {
        if (gen_ht_[a] != gen_ht_[b]) return gen_ht_[a] < gen_ht_[b];
        return -alg.weight[a] < -alg.weight[b];
    });
    pbw_rank_.assign(alg.dim(), static_cast<size_t>(-1));
    for (size_t r = 0; r < lowering_.size(); ++r) pbw_rank_[lowering_[r]] = r;

    // Enumerate monomials of height <= depth.
    std::vector<std::vector<size_t>> monos;
    std::vector<size_t> cur;
    std::function<void(size_t, long long)> rec = [&](size_t i, long long used) {
        if (i == lowering_.size()) {
            monos.push_back(cur);
            return;
        }
        size_t g = lowering_[i];
        long long h = gen_ht_[g];
        bool odd = model_->alg.parity[g] == 1;
        rec(i + 1, used); // exponent 0
        long long u = used;
        size_t pushed = 0;
        for (int e = 1;; ++e) {
            u += h;
            if (u > depth_) break;
            cur.push_back(g);
            ++pushed;
            rec(i + 1, u);
            if (odd) break;
        }
        for (size_t k = 0; k < pushed; ++k) cur.pop_back();
    };
    rec(0, 0);

    for (const auto& m : monos) {
        Weight mw(model_->alg.family.basis_dim());
        for (size_t g : m) mw += model_->alg.weight[g];
        for (int f = 0; f < base_.dim; ++f) {
            BasisElt e{m, f};
            size_t idx = basis_.size();
            index_[{m, f}] = idx;
            basis_.push_back(e);
            Weight w = base_.wt[f] + mw;
            wt_.push_back(w);
            by_weight_[w].push_back(idx);
        }
    }
}

size_t ModuleSlice::index_of(const BasisElt& e) const {
    auto it = index_.find({e.mono, e.f});
    if (it == index_.end()) throw std::out_of_range("basis element outside slice");
    return it->second;
}

long long ModuleSlice::mono_height(const std::vector<size_t>& mono) const {
    long long h = 0;
    for (size_t g : mono) h += gen_ht_.at(g);
    return h;
}

ModuleSlice::MonoVec ModuleSlice::insert(size_t gen, const std::vector<size_t>& mono) {
    auto key = std::make_pair(gen, mono);
    auto cached = insert_cache_.find(key);
    if (cached != insert_cache_.end()) return cached->second;

    const auto& alg = model_->alg;
    MonoVec res;
    if (mono.empty()) {
        res[{gen}] = 1;
    } else {
        size_t y = mono[0];
        std::vector<size_t> rest(mono.begin() + 1, mono.end());
        if (pbw_rank_[gen] < pbw_rank_[y]) {
            std::vector<size_t> m2;
            m2.reserve(mono.size() + 1);
            m2.push_back(gen);
            m2.insert(m2.end(), mono.begin(), mono.end());
            res[std::move(m2)] = 1;
        } else if (gen == y && alg.parity[gen] == 0) {
            std::vector<size_t> m2;
            m2.reserve(mono.size() + 1);
            m2.push_back(gen);
            m2.insert(m2.end(), mono.begin(), mono.end());
            res[std::move(m2)] = 1;
        } else if (gen == y) {
            // odd square: x*x = (1/2)[x,x]
            for (const auto& [k, c] : model_->sc.bracket(gen, gen)) {
                Rational half = c / 2;
                for (auto& [n, cc] : insert(k, rest)) {
                    res[n] += half * cc;
                    if (res[n] == 0) res.erase(n);
                }
            }
        } else {
            // gen after y: gen*y = sign*y*gen + [gen,y]
            Rational sign = (alg.parity[gen] == 1 && alg.parity[y] == 1) ? -1 : 1;
            for (auto& [n, c] : insert(gen, rest)) {
                for (auto& [n2, c2] : insert(y, n)) {
                    Rational v = sign * c * c2;
                    res[n2] += v;
                    if (res[n2] == 0) res.erase(n2);
                }
            }
            for (const auto& [k, c] : model_->sc.bracket(gen, y)) {
                if (pbw_rank_[k] == static_cast<size_t>(-1))
                    throw std::logic_error("bracket of lowering generators left the subalgebra");
                for (auto& [n, cc] : insert(k, rest)) {
                    res[n] += c * cc;
                    if (res[n] == 0) res.erase(n);
                }
            }
        }
    }
    insert_cache_[key] = res;
    return res;
}

ModuleSlice::Vec ModuleSlice::base_apply(size_t gen, int f) {
    Vec res;
    const auto& alg = model_->alg;
    if (gen < alg.cartan_dim) {
        Rational v = model_->eval_weight(base_.wt[f], gen);
        if (v != 0) res[index_of({{}, f})] = v;
        return res;
    }
    switch (class_[gen]) {
        case GenClass::Lowering:
            if (gen_ht_.at(gen) <= depth_) res[index_of({{gen}, f})] = 1;
            break;
        case GenClass::BaseAction: {
            auto it = base_.action.find(gen);
            if (it == base_.action.end()) throw std::logic_error("missing base action matrix");
            for (int j = 0; j < base_.dim; ++j)
                if (it->second(j, f) != 0) res[index_of({{}, j})] = it->second(j, f);
            break;
        }
        case GenClass::Annihilates:
            break;
        case GenClass::Cartan:
            throw std::logic_error("cartan index misclassified");
    }
    return res;
}

ModuleSlice::Vec ModuleSlice::apply_term(size_t gen, const std::vector<size_t>& mono, int f) {
    auto key = std::make_tuple(gen, mono, f);
    auto cached = apply_cache_.find(key);
    if (cached != apply_cache_.end()) return cached->second;

    const auto& alg = model_->alg;
    Vec res;
    if (mono.empty()) {
        res = base_apply(gen, f);
    } else if (gen >= alg.cartan_dim && class_[gen] == GenClass::Lowering) {
        for (auto& [n, c] : insert(gen, mono)) {
            if (mono_height(n) > depth_) continue;
            res[index_of({n, f})] += c;
        }
        for (auto it = res.begin(); it != res.end();)
            it = (it->second == 0) ? res.erase(it) : std::next(it);
    } else {
        size_t y = mono[0];
        std::vector<size_t> rest(mono.begin() + 1, mono.end());
        // [gen, y] against the remainder
        for (const auto& [k, c] : model_->sc.bracket(gen, y))
            for (auto& [i, cc] : apply_term(k, rest, f)) {
                res[i] += c * cc;
                if (res[i] == 0) res.erase(i);
            }
        // sign * y * (gen . rest)
        Rational sign = (alg.parity[gen] == 1 && alg.parity[y] == 1) ? -1 : 1;
        for (auto& [i, c] : apply_term(gen, rest, f)) {
            const BasisElt& e = basis_[i];
            for (auto& [n, c2] : insert(y, e.mono)) {
                if (mono_height(n) > depth_) continue;
                size_t j = index_of({n, e.f});
                res[j] += sign * c * c2;
                if (res[j] == 0) res.erase(j);
            }
        }
    }
    apply_cache_[key] = res;
    return res;
}

ModuleSlice::Vec ModuleSlice::apply(size_t gen, size_t basis_idx) {
    const BasisElt& e = basis_[basis_idx];
    return apply_term(gen, e.mono, e.f);
}

ModuleSlice::Vec ModuleSlice::apply(size_t gen, const Vec& v) {
    Vec res;
    for (const auto& [i, c] : v)
        for (auto& [j, c2] : apply(gen, i)) {
            res[j] += c * c2;
            if (res[j] == 0) res.erase(j);
        }
    return res;
}

namespace {

std::vector<GenClass> classify_for_pair(const AlgebraModel& model, const HermitianPair& pair,
                                        const PositiveSystem& p) {
    const auto& alg = model.alg;
    std::vector<GenClass> cls(alg.dim(), GenClass::Cartan);
    for (size_t i = alg.cartan_dim; i < alg.dim(); ++i) {
        const Weight& w = alg.weight[i];
        if (pair.is_compact(w)) {
            cls[i] = GenClass::BaseAction;
        } else if (p.contains(w)) {
            cls[i] = GenClass::Annihilates; // p^+
        } else {
            cls[i] = GenClass::Lowering; // p^-
        }
    }
    return cls;
}

} // namespace

std::vector<size_t> pair_compact_indices(const MatrixAlgebra& alg, const HermitianPair& pair) {
    std::vector<size_t> out;
    for (size_t i = alg.cartan_dim; i < alg.dim(); ++i)
        if (pair.is_compact(alg.weight[i])) out.push_back(i);
    return out;
}

BaseModule build_f_model(std::shared_ptr<const AlgebraModel> model, const HighestWeight& hw) {
    const auto& alg = model->alg;
    const auto& sys = *hw.pair.sys;
    auto ksimple = compact_simple_roots(hw.pair, hw.P);

    BaseModule base;
    base.dim = 1;
    base.wt = {hw.lambda};
    base.has_matrices = false;
    if (ksimple.empty()) return base;

    // k-Verma slice: lowering = negatives of P_k, raising annihilates.
    std::vector<size_t> lowering;
    std::vector<GenClass> cls(alg.dim(), GenClass::Cartan);
    auto pk = compact_part(hw.pair, hw.P);
    std::set<Weight> pkset;
    for (const auto& r : pk) pkset.insert(r.w);
    for (size_t i = alg.cartan_dim; i < alg.dim(); ++i) {
        const Weight& w = alg.weight[i];
        if (pkset.count(w)) {
            cls[i] = GenClass::Annihilates;
        } else if (pkset.count(-w)) {
            cls[i] = GenClass::Lowering;
            lowering.push_back(i);
        } else {
            cls[i] = GenClass::Annihilates; // outside k; never reached
        }
    }

    HeightMap khm{SimpleSystem{ksimple}};
    // Height of lambda minus its antidominant conjugate bounds supp(F).
    Weight lmin = hw.lambda;
    bool moved = true;
    while (moved) {
        moved = false;
        for (const auto& a : ksimple) {
            Rational v = sys.coroot_pair(lmin, a);
            if (v > 0) {
                lmin = lmin - v * a.w;
                moved = true;
            }
        }
    }
    long long hmax = khm.height(hw.lambda - lmin);

    ModuleSlice verma(model, base, lowering, cls, khm, hmax);

    // Singular vectors of the k-Verma slice.
    std::vector<size_t> raising;
    for (const auto& a : ksimple) raising.push_back(alg.root_index.at(a.w));

    std::map<Weight, RowSpan> nspace;
    std::vector<std::pair<Weight, std::vector<Rational>>> queue;
    auto local = [&](const Weight& w, const ModuleSlice::Vec& v) {
        const auto& ids = verma.by_weight().at(w);
        std::vector<Rational> out(ids.size());
        for (size_t k = 0; k < ids.size(); ++k) {
            auto it = v.find(ids[k]);
            if (it != v.end()) out[k] = it->second;
        }
        return out;
    };

    for (const auto& [mu, ids] : verma.by_weight()) {
        if (mu == hw.lambda) continue;
        // stack the raising actions
        size_t nrows = 0;
        std::vector<Mat> mats;
        for (size_t e : raising) {
            Weight target = mu + alg.weight[e];
            size_t tdim = verma.by_weight().count(target) ? verma.by_weight().at(target).size() : 0;
            Mat m(tdim, ids.size());
            if (tdim) {
                const auto& tids = verma.by_weight().at(target);
                std::map<size_t, size_t> tpos;
                for (size_t k = 0; k < tids.size(); ++k) tpos[tids[k]] = k;
                for (size_t c = 0; c < ids.size(); ++c)
                    for (auto& [j, v] : verma.apply(e, ids[c])) m(tpos.at(j), c) = v;
            }
            mats.push_back(m);
            nrows += tdim;
        }
        Mat stacked(nrows, ids.size());
        size_t at = 0;
        for (const auto& m : mats) {
            for (size_t r2 = 0; r2 < m.rows(); ++r2)
                for (size_t c = 0; c < m.cols(); ++c) stacked(at + r2, c) = m(r2, c);
            at += m.rows();
        }
        for (auto& x : nullspace(stacked)) queue.push_back({mu, x});
    }

    // Generate N = U(n_k^-) . (singular vectors) inside the slice.
    std::vector<size_t> lowering_simple;
    for (const auto& a : ksimple) lowering_simple.push_back(alg.root_index.at(-a.w));
    size_t head = 0;
    auto ensure_span = [&](const Weight& w) -> RowSpan& {
        auto it = nspace.find(w);
        if (it == nspace.end())
            it = nspace.emplace(w, RowSpan(verma.by_weight().at(w).size())).first;
        return it->second;
    };
    std::vector<std::pair<Weight, std::vector<Rational>>> work = std::move(queue);
    for (auto& [w, v] : work)
        ensure_span(w).add(v);
    // BFS through lowerings
    std::vector<std::pair<Weight, std::vector<Rational>>> frontier;
    for (auto& [w, span] : nspace)
        for (auto& row : span.rows()) frontier.push_back({w, row});
    while (head < frontier.size()) {
        auto [w, row] = frontier[head++];
        const auto& ids = verma.by_weight().at(w);
        ModuleSlice::Vec v;
        for (size_t k = 0; k < ids.size(); ++k)
            if (row[k] != 0) v[ids[k]] = row[k];
        for (size_t fgen : lowering_simple) {
            ModuleSlice::Vec img = verma.apply(fgen, v);
            if (img.empty()) continue;
            Weight tw = w + alg.weight[fgen];
            long long ht = khm.height(hw.lambda - tw);
            if (ht > hmax) continue;
            auto lrow = local(tw, img);
            auto copy = lrow;
            if (ensure_span(tw).add(std::move(lrow))) frontier.push_back({tw, copy});
        }
    }

    // Quotient F = V/N, validated against Freudenthal.
    KModule km = build_k_module(hw);
    BaseModule f;
    f.has_matrices = true;
    f.dim = 0;
    std::map<Weight, std::vector<size_t>> free_cols;  // weight -> local free columns
    std::map<std::pair<Weight, size_t>, int> gindex;  // (weight, local col) -> F index
    for (const auto& [w, ids] : verma.by_weight()) {
        size_t nrank = nspace.count(w) ? nspace.at(w).rank() : 0;
        long long fdim = static_cast<long long>(ids.size()) - static_cast<long long>(nrank);
        long long expected = km.mult.count(w) ? km.mult.at(w) : 0;
        if (fdim != expected) throw std::logic_error("k-Verma quotient disagrees with Freudenthal at " + w.str());
        if (fdim == 0) continue;
        std::vector<bool> pivot(ids.size(), false);
        if (nspace.count(w))
            for (size_t pc : nspace.at(w).pivots()) pivot[pc] = true;
        for (size_t c = 0; c < ids.size(); ++c) {
            if (pivot[c]) continue;
            gindex[{w, c}] = f.dim;
            free_cols[w].push_back(c);
            f.wt.push_back(w);
            ++f.dim;
        }
    }

    // Action matrices for every compact root vector.
    std::vector<size_t> kroots;
    for (const auto& rw : pair_compact_indices(alg, hw.pair)) kroots.push_back(rw);
    for (size_t z : kroots) {
        Mat m(f.dim, f.dim);
        for (const auto& [w, cols] : free_cols) {
            const auto& ids = verma.by_weight().at(w);
            for (size_t c : cols) {
                int col_index = gindex.at({w, c});
                ModuleSlice::Vec img = verma.apply(z, ids[c]);
                if (img.empty()) continue;
                Weight tw = w + alg.weight[z];
                if (!verma.by_weight().count(tw)) {
                    // weight escapes the slice: must already be outside supp(F)
                    long long expected = km.mult.count(tw) ? km.mult.at(tw) : 0;
                    if (expected != 0) throw std::logic_error("F action leaves the k-Verma slice");
                    continue;
                }
                auto lrow = local(tw, img);
                if (nspace.count(tw)) nspace.at(tw).reduce(lrow);
                // residual lives on free columns
                const auto& tids = verma.by_weight().at(tw);
                for (size_t tc = 0; tc < tids.size(); ++tc) {
                    if (lrow[tc] == 0) continue;
                    auto it = gindex.find({tw, tc});
                    if (it == gindex.end()) throw std::logic_error("pivot residue in quotient action");
                    m(it->second, col_index) = lrow[tc];
                }
            }
        }
        f.action[z] = m;
    }
    return f;
}

ModuleSlice build_module_slice(std::shared_ptr<const AlgebraModel> model, const HighestWeight& hw,
                               long long depth) {
    BaseModule f = build_f_model(model, hw);
    std::vector<GenClass> cls = classify_for_pair(*model, hw.pair, hw.P);
    std::vector<size_t> lowering;
    for (size_t i = model->alg.cartan_dim; i < model->dim(); ++i)
        if (cls[i] == GenClass::Lowering) lowering.push_back(i);
    return ModuleSlice(model, std::move(f), std::move(lowering), std::move(cls),
                       HeightMap(simple_roots(hw.P)), depth);
}

std::vector<SingularVector> find_singular_vectors(ModuleSlice& slice, const HighestWeight& hw) {
    const auto& alg = slice.model().alg;
    std::vector<size_t> raising;
    for (const auto& a : simple_roots(hw.P).roots) raising.push_back(alg.root_index.at(a.w));

    std::vector<SingularVector> out;
    for (const auto& [mu, ids] : slice.by_weight()) {
        if (mu == hw.lambda) continue;
        size_t nrows = 0;
        std::vector<Mat> mats;
        for (size_t e : raising) {
            Weight target = mu + alg.weight[e];
            size_t tdim = slice.by_weight().count(target) ? slice.by_weight().at(target).size() : 0;
            Mat m(tdim, ids.size());
            if (tdim) {
                const auto& tids = slice.by_weight().at(target);
                std::map<size_t, size_t> tpos;
                for (size_t k = 0; k < tids.size(); ++k) tpos[tids[k]] = k;
                for (size_t c = 0; c < ids.size(); ++c)
                    for (auto& [j, v] : slice.apply(e, ids[c])) m(tpos.at(j), c) = v;
            }
            mats.push_back(m);
            nrows += tdim;
        }
        Mat stacked(nrows, ids.size());
        size_t at = 0;
        for (const auto& m : mats) {
            for (size_t r2 = 0; r2 < m.rows(); ++r2)
                for (size_t c = 0; c < m.cols(); ++c) stacked(at + r2, c) = m(r2, c);
            at += m.rows();
        }
        for (auto& x : nullspace(stacked)) {
            SingularVector sv;
            sv.mu = mu;
            for (size_t k = 0; k < ids.size(); ++k)
                if (x[k] != 0) sv.vec[ids[k]] = x[k];
            out.push_back(std::move(sv));
        }
    }
    std::sort(out.begin(), out.end(), [](const SingularVector& a, const SingularVector& b) {
        return a.mu < b.mu;
    });
    return out;
}

std::vector<SingularVector> find_singular_vectors(const HighestWeight& hw, long long depth) {
    if (!hw.pair.family.has_realization())
        throw std::invalid_argument("singular vector search needs a supermatrix realization");
    auto model = shared_algebra_model(hw.pair.family);
    ModuleSlice slice = build_module_slice(model, hw, depth);
    return find_singular_vectors(slice, hw);
}

bool is_hc_module_slice(ModuleSlice& slice) {
    const auto& alg = slice.model().alg;
    // extremal vector: empty monomial at the base index of top weight
    int top = -1;
    for (int f = 0; f < slice.base().dim; ++f) {
        bool is_top = true;
        for (int g = 0; g < slice.base().dim; ++g)
            if (slice.base().wt[f] < slice.base().wt[g]) is_top = false;
        if (is_top) {
            top = f;
            break;
        }
    }
    if (top < 0) return false;
    size_t start;
    try {
        start = slice.index_of({{}, top});
    } catch (const std::out_of_range&) {
        return false;
    }

    // k-generators: cartan plus every compact root vector (both signs).
    std::vector<size_t> kgens;
    for (size_t i = alg.cartan_dim; i < alg.dim(); ++i)
        if (slice.base().action.count(i)) kgens.push_back(i);
    if (kgens.empty()) return slice.base().dim == 1; // trivial k-module slot

    std::map<Weight, RowSpan> span;
    std::vector<std::pair<Weight, std::vector<Rational>>> frontier;
    auto local = [&](const Weight& w, const ModuleSlice::Vec& v) {
        const auto& ids = slice.by_weight().at(w);
        std::vector<Rational> out(ids.size());
        for (size_t k = 0; k < ids.size(); ++k) {
            auto it = v.find(ids[k]);
            if (it != v.end()) out[k] = it->second;
        }
        return out;
    };
    Weight w0 = slice.weight_of(start);
    span.emplace(w0, RowSpan(slice.by_weight().at(w0).size()));
    {
        std::vector<Rational> row(slice.by_weight().at(w0).size());
        const auto& ids = slice.by_weight().at(w0);
        for (size_t k = 0; k < ids.size(); ++k) row[k] = (ids[k] == start) ? 1 : 0;
        span.at(w0).add(row);
        frontier.push_back({w0, row});
    }
    size_t head = 0;
    long long total = 1;
    while (head < frontier.size()) {
        auto [w, row] = frontier[head++];
        const auto& ids = slice.by_weight().at(w);
        ModuleSlice::Vec v;
        for (size_t k = 0; k < ids.size(); ++k)
            if (row[k] != 0) v[ids[k]] = row[k];
        for (size_t z : kgens) {
            ModuleSlice::Vec img = slice.apply(z, v);
            if (img.empty()) continue;
            // image must stay inside 1 (x) F: monomial parts empty
            Weight tw(w.dim());
            bool first = true;
            for (auto& [i, c] : img) {
                if (!slice.basis()[i].mono.empty()) return false;
                if (first) {
                    tw = slice.weight_of(i);
                    first = false;
                }
            }
            auto it = span.find(tw);
            if (it == span.end()) it = span.emplace(tw, RowSpan(slice.by_weight().at(tw).size())).first;
            auto lrow = local(tw, img);
            auto copy = lrow;
            if (it->second.add(std::move(lrow))) {
                frontier.push_back({tw, copy});
                ++total;
            }
        }
    }
    return total == slice.base().dim;
}

nlohmann::json singular_vectors_to_json(const ModuleSlice& slice, const std::vector<SingularVector>& svs) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& sv : svs) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [i, c] : sv.vec) {
            const auto& e = slice.basis()[i];
            nlohmann::json mono = nlohmann::json::array();
            for (size_t g : e.mono) mono.push_back(weight_to_json(slice.model().alg.weight[g]));
            terms.push_back({{"monomial", mono}, {"f_index", e.f}, {"coeff", rat_str(c)}});
        }
        out.push_back({{"mu", weight_to_json(sv.mu)}, {"components", terms}});
    }
    return out;
}

} // namespace supermod
