#pragma once

#include "supermod/rational.hpp"
#include "supermod/weight.hpp"

#include <optional>
#include <vector>

namespace supermod {

// Dense matrix of exact rationals. Small sizes only; everything is exact.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t r, size_t c) : rows_(r), cols_(c), a_(r * c) {}

    static Mat identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    const Rational& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    Rational& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    friend Mat operator*(const Rational& s, const Mat& m);
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator<(const Mat& o) const; // lexicographic, for canonical containers

    Mat transpose() const;
    bool is_zero() const;

    Weight apply(const Weight& v) const; // matrix * column vector

    std::string str() const;

private:
    size_t rows_, cols_;
    std::vector<Rational> a_;
};

// Fraction-free (Bareiss) determinant.
Rational det(const Mat& m);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<size_t> rref(Mat& m);

size_t rank(const Mat& m);

// Solves A x = b exactly. Empty optional when inconsistent. If the system is
// underdetermined, free variables are set to zero.
std::optional<std::vector<Rational>> solve(const Mat& a, const std::vector<Rational>& b);

// Basis of the right nullspace of A, via fraction-free elimination on the
// denominator-cleared integer matrix.
std::vector<std::vector<Rational>> nullspace(const Mat& a);

// Incremental exact row space: used to grow spans vector-by-vector.
class RowSpan {
public:
    explicit RowSpan(size_t dim) : dim_(dim) {}
    size_t dim() const { return dim_; }
    size_t rank() const { return rows_.size(); }
    // Returns true if v was independent (and got added).
    bool add(std::vector<Rational> v);
    bool contains(std::vector<Rational> v) const;
    // Reduces v modulo the span (eliminating pivot coordinates).
    void reduce(std::vector<Rational>& v) const;
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

private:
    size_t dim_;
    std::vector<std::vector<Rational>> rows_; // reduced: each has leading 1 at pivots_[k], zeros in other pivot cols
    std::vector<size_t> pivots_;
};

} // namespace supermod
