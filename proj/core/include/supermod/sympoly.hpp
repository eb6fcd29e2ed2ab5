#pragma once

#include "supermod/linalg.hpp"
#include "supermod/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace supermod {

// Sparse multivariate polynomial over the rationals, canonical sorted-monomial
// form (no zero coefficients stored).
struct SymPoly {
    size_t nvars = 0;
    std::map<std::vector<int>, Rational> terms;

    SymPoly() = default;
    explicit SymPoly(size_t n) : nvars(n) {}

    static SymPoly constant(size_t n, const Rational& c);
    static SymPoly variable(size_t n, size_t i);
    // Linear form sum_i c_i x_i.
    static SymPoly linear(const std::vector<Rational>& c);

    bool is_zero() const { return terms.empty(); }
    int degree() const;

    void add_term(std::vector<int> exp, const Rational& c);

    friend SymPoly operator+(const SymPoly& a, const SymPoly& b);
    friend SymPoly operator-(const SymPoly& a, const SymPoly& b);
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    friend SymPoly operator*(const Rational& s, const SymPoly& a);
    friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.nvars == b.nvars && a.terms == b.terms; }

    Rational eval(const std::vector<Rational>& x) const;

    // Substitute x_i := sum_j t(i,j) y_j; the result lives in t.cols() variables.
    SymPoly subst_linear(const Mat& t) const;

    std::string str() const;
};

} // namespace supermod
