#pragma once

#include "supermod/possys.hpp"
#include "supermod/rootsys.hpp"
#include "supermod/supermatrix.hpp"

#include <json.hpp>

#include <map>
#include <vector>

namespace supermod {

// Supermatrix model of a realizable family (A/B/C/D): weight-graded basis
// with the Cartan first, one root vector per root.
struct MatrixAlgebra {
    Family family;
    size_t p = 0, q = 0;               // block sizes
    std::vector<SuperMatrix> basis;    // [0..cartan_dim) Cartan, then root vectors
    size_t cartan_dim = 0;
    std::vector<Weight> weight;        // ad-weight per basis element (zero on the Cartan)
    std::vector<int> parity;           // 0/1 per basis element
    std::map<Weight, size_t> root_index;
    std::vector<Weight> position_weight; // functional carried by each diagonal slot

    size_t dim() const { return basis.size(); }
    const SuperMatrix& root_vector(const Weight& alpha) const;
    // Evaluation of a coordinate functional on a diagonal algebra element.
    Rational eval_on_diagonal(const Weight& w, const SuperMatrix& h) const;
    // The element H in the Cartan span with beta(H) = coroot_pair(beta, alpha)
    // for every root beta (the realized coroot; h_alpha itself when alpha is
    // isotropic).
    SuperMatrix coroot_element(const SuperRootSystem& sys, const Root& alpha) const;
};

MatrixAlgebra realize_algebra(const Family& f);

// Bracket table over the basis of a MatrixAlgebra; entry (i,j) lists the
// expansion of [b_i, b_j]. Construction validates one-dimensionality of the
// root spaces and bracket closure.
struct StructureConstants {
    size_t dim = 0;
    std::vector<std::vector<std::vector<std::pair<size_t, Rational>>>> table;

    const std::vector<std::pair<size_t, Rational>>& bracket(size_t i, size_t j) const { return table[i][j]; }
};

StructureConstants structure_constants(const MatrixAlgebra& alg);

// Chevalley-style generators for a simple system: e_i, f_i scaled so that
// [e_i, f_i] equals the realized coroot of alpha_i.
struct ChevalleyGenerators {
    std::vector<SuperMatrix> e, f, h;
};
ChevalleyGenerators chevalley_generators(const MatrixAlgebra& alg, const SuperRootSystem& sys,
                                         const SimpleSystem& simple);

// Integral Cartan matrix a_ij = alpha_j(H_i) with rows cleared of
// denominators (never reduced further).
Mat cartan_matrix(const SuperRootSystem& sys, const SimpleSystem& simple);

// dim(h + span of the given root spaces) == (dim g + dim h)/2, evaluated in
// the realization; true exactly when the roots form a genuine positive system.
bool borel_dimension_check(const Family& f, const std::vector<Root>& roots);

nlohmann::json structure_constants_to_json(const StructureConstants& sc);

} // namespace supermod
