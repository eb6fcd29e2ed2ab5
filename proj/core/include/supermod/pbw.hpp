#pragma once

#include "supermod/hwmod.hpp"
#include "supermod/possys.hpp"
#include "supermod/realize.hpp"

#include <map>
#include <memory>
#include <vector>

namespace supermod {

// Bracket-table view of a realized algebra, indexed like MatrixAlgebra.basis.
struct AlgebraModel {
    MatrixAlgebra alg;
    StructureConstants sc;
    // beta(h_k) for every coordinate functional: eval(w, k) = sum_i w_i * cartan_eval(k,i)
    Mat cartan_eval; // cartan_dim x coord_dim

    explicit AlgebraModel(const Family& f);
    size_t dim() const { return alg.dim(); }
    Rational eval_weight(const Weight& w, size_t cartan_idx) const;
};

std::shared_ptr<const AlgebraModel> shared_algebra_model(const Family& f);

// The classification of basis elements relative to a slice configuration.
enum class GenClass { Lowering, Cartan, BaseAction, Annihilates };

// The finite-dimensional module in the rightmost tensor slot. Either the
// one-dimensional bottom of a Verma-type module (compact raising vectors act
// by zero) or an explicit quotient model with matrices.
struct BaseModule {
    int dim = 1;
    std::vector<Weight> wt;                 // absolute weight per basis vector
    std::map<size_t, Mat> action;           // algebra index -> dim x dim matrix
    bool has_matrices = false;              // false: Verma bottom (only wt[0])
};

// Weight-graded slice of U(p^-) tensor F, with exact generator actions
// computed by PBW straightening through the structure constants.
class ModuleSlice {
public:
    // Generic constructor: `lowering` lists the PBW generators (algebra
    // indices of negative root vectors), `classify` assigns every non-Cartan,
    // non-lowering root vector to BaseAction or Annihilates.
    ModuleSlice(std::shared_ptr<const AlgebraModel> model, BaseModule base, std::vector<size_t> lowering,
                std::vector<GenClass> cls, HeightMap hmap, long long depth);

    struct BasisElt {
        std::vector<size_t> mono; // PBW-ordered algebra indices (repeats allowed for even gens)
        int f = 0;
    };

    using Vec = std::map<size_t, Rational>; // slice coordinates

    size_t dim() const { return basis_.size(); }
    const std::vector<BasisElt>& basis() const { return basis_; }
    const Weight& weight_of(size_t i) const { return wt_[i]; }
    const std::map<Weight, std::vector<size_t>>& by_weight() const { return by_weight_; }
    long long depth() const { return depth_; }
    const AlgebraModel& model() const { return *model_; }
    const HeightMap& heights() const { return hmap_; }
    BaseModule& base() { return base_; }
    const BaseModule& base() const { return base_; }
    const std::vector<size_t>& lowering() const { return lowering_; }

    size_t index_of(const BasisElt& e) const;
    // Action of the basis element with algebra index `gen` on slice vectors.
    Vec apply(size_t gen, size_t basis_idx);
    Vec apply(size_t gen, const Vec& v);

private:
    std::shared_ptr<const AlgebraModel> model_;
    BaseModule base_;
    std::vector<size_t> lowering_;
    std::vector<GenClass> class_;
    std::vector<size_t> pbw_rank_; // position of each lowering gen in PBW order
    std::map<size_t, long long> gen_ht_;
    HeightMap hmap_;
    long long depth_;

    std::vector<BasisElt> basis_;
    std::vector<Weight> wt_;
    std::map<Weight, std::vector<size_t>> by_weight_;
    std::map<std::pair<std::vector<size_t>, int>, size_t> index_;

    // straightening caches
    using MonoVec = std::map<std::vector<size_t>, Rational>;
    std::map<std::pair<size_t, std::vector<size_t>>, MonoVec> insert_cache_;
    std::map<std::tuple<size_t, std::vector<size_t>, int>, Vec> apply_cache_;

    MonoVec insert(size_t gen, const std::vector<size_t>& mono);
    Vec apply_term(size_t gen, const std::vector<size_t>& mono, int f);
    Vec base_apply(size_t gen, int f);
    long long mono_height(const std::vector<size_t>& mono) const;
};

// U^lambda slice to the given depth (PBW monomials of height <= depth over
// the negative noncompact root vectors, tensored with the full k-module).
ModuleSlice build_module_slice(std::shared_ptr<const AlgebraModel> model, const HighestWeight& hw,
                               long long depth);

struct SingularVector {
    Weight mu;
    ModuleSlice::Vec vec;
};

// All singular vectors with height(lambda - mu) <= depth: exact nullspaces of
// the stacked simple-raising actions, weight space by weight space.
std::vector<SingularVector> find_singular_vectors(const HighestWeight& hw, long long depth);
std::vector<SingularVector> find_singular_vectors(ModuleSlice& slice, const HighestWeight& hw);

// Verifies that U(k).(1 tensor f^lambda) is finite-dimensional and exhausts
// the k-module slot (dimension dim F), witnessing k-irreducibility.
bool is_hc_module_slice(ModuleSlice& slice);

// Explicit model of the irreducible k-module F_lambda as a quotient of the
// k-Verma slice; validates weight dimensions against Freudenthal.
BaseModule build_f_model(std::shared_ptr<const AlgebraModel> model, const HighestWeight& hw);

// Algebra indices of the compact root vectors of a pair.
std::vector<size_t> pair_compact_indices(const MatrixAlgebra& alg, const HermitianPair& pair);

nlohmann::json singular_vectors_to_json(const ModuleSlice& slice, const std::vector<SingularVector>& svs);

} // namespace supermod
