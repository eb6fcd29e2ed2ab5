#pragma once

#include "supermod/linalg.hpp"

namespace supermod {

// Element of gl(p|q) with the block convention: rows/cols 1..p are even,
// p+1..p+q odd. Even elements are block-diagonal, odd ones block-off-diagonal.
struct SuperMatrix {
    size_t p = 0, q = 0;
    Mat a;

    SuperMatrix() = default;
    SuperMatrix(size_t p_, size_t q_) : p(p_), q(q_), a(p_ + q_, p_ + q_) {}
    SuperMatrix(size_t p_, size_t q_, Mat m) : p(p_), q(q_), a(std::move(m)) {}

    size_t size() const { return p + q; }
    bool block_even(size_t i, size_t j) const { return (i < p) == (j < p); }

    bool is_even() const;  // supported on diagonal blocks only
    bool is_odd() const;   // supported on off-diagonal blocks only
    bool is_homogeneous() const { return is_even() || is_odd(); }
    // 0 for even, 1 for odd; throws on mixed parity. Zero counts as even.
    int parity() const;

    friend SuperMatrix operator+(const SuperMatrix& x, const SuperMatrix& y);
    friend SuperMatrix operator-(const SuperMatrix& x, const SuperMatrix& y);
    friend SuperMatrix operator*(const Rational& s, const SuperMatrix& x);
    friend bool operator==(const SuperMatrix& x, const SuperMatrix& y) { return x.p == y.p && x.a == y.a; }
};

// str(x) = tr(A) - tr(D).
Rational supertrace(const SuperMatrix& x);

// str(xy), the invariant form of the realization.
Rational str_form(const SuperMatrix& x, const SuperMatrix& y);

// [x,y] = xy - (-1)^{|x||y|} yx for homogeneous x, y.
SuperMatrix supercommutator(const SuperMatrix& x, const SuperMatrix& y);

} // namespace supermod
