#include "supermod/supermatrix.hpp"

#include <stdexcept>

namespace supermod {

bool SuperMatrix::is_even() const {
    for (size_t i = 0; i < size(); ++i)
        for (size_t j = 0; j < size(); ++j)
            if (!block_even(i, j) && a(i, j) != 0) return false;
    return true;
}

bool SuperMatrix::is_odd() const {
    for (size_t i = 0; i < size(); ++i)
        for (size_t j = 0; j < size(); ++j)
            if (block_even(i, j) && a(i, j) != 0) return false;
    return true;
}

int SuperMatrix::parity() const {
    if (is_even()) return 0;
    if (is_odd()) return 1;
    throw std::invalid_argument("supermatrix is not homogeneous");
}

SuperMatrix operator+(const SuperMatrix& x, const SuperMatrix& y) {
    if (x.p != y.p || x.q != y.q) throw std::invalid_argument("block size mismatch");
    return SuperMatrix(x.p, x.q, x.a + y.a);
}

SuperMatrix operator-(const SuperMatrix& x, const SuperMatrix& y) {
    if (x.p != y.p || x.q != y.q) throw std::invalid_argument("block size mismatch");
    return SuperMatrix(x.p, x.q, x.a - y.a);
}

SuperMatrix operator*(const Rational& s, const SuperMatrix& x) { return SuperMatrix(x.p, x.q, s * x.a); }

Rational supertrace(const SuperMatrix& x) {
    Rational t = 0;
    for (size_t i = 0; i < x.size(); ++i) t += (i < x.p) ? x.a(i, i) : -x.a(i, i);
    return t;
}

Rational str_form(const SuperMatrix& x, const SuperMatrix& y) {
    if (x.p != y.p || x.q != y.q) throw std::invalid_argument("block size mismatch");
    Rational t = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        Rational d = 0;
        for (size_t k = 0; k < x.size(); ++k)
            if (x.a(i, k) != 0 && y.a(k, i) != 0) d += x.a(i, k) * y.a(k, i);
        t += (i < x.p) ? d : -d;
    }
    return t;
}

SuperMatrix supercommutator(const SuperMatrix& x, const SuperMatrix& y) {
    if (x.p != y.p || x.q != y.q) throw std::invalid_argument("block size mismatch");
    int px = x.parity(), py = y.parity();
    Mat xy = x.a * y.a;
    Mat yx = y.a * x.a;
    return SuperMatrix(x.p, x.q, (px && py) ? xy + yx : xy - yx);
}

} // namespace supermod
