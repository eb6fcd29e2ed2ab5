#include "supermod/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace supermod {

Weight operator+(const Weight& a, const Weight& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("weight dimension mismatch");
    Weight r(a.dim());
    for (size_t i = 0; i < a.dim(); ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

Weight operator-(const Weight& a, const Weight& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("weight dimension mismatch");
    Weight r(a.dim());
    for (size_t i = 0; i < a.dim(); ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

Weight operator-(const Weight& a) {
    Weight r(a.dim());
    for (size_t i = 0; i < a.dim(); ++i) r.c[i] = -a.c[i];
    return r;
}

Weight operator*(const Rational& s, const Weight& a) {
    Weight r(a.dim());
    for (size_t i = 0; i < a.dim(); ++i) r.c[i] = s * a.c[i];
    return r;
}

Weight& Weight::operator+=(const Weight& b) { return *this = *this + b; }
Weight& Weight::operator-=(const Weight& b) { return *this = *this - b; }

bool operator<(const Weight& a, const Weight& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (size_t i = 0; i < a.dim(); ++i) {
        int c = cmp(a.c[i], b.c[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string Weight::str() const {
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ", ";
        s += rat_str(c[i]);
    }
    return s + ")";
}

Weight unit_weight(size_t dim, size_t i) {
    Weight w(dim);
    w[i] = 1;
    return w;
}

Mat Mat::identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Mat r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Rational& x = (*this)(i, k);
            if (x == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                if (o(k, j) == 0) continue;
                r(i, j) += x * o(k, j);
            }
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff shape mismatch");
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Mat Mat::operator-() const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

Mat operator*(const Rational& s, const Mat& m) {
    Mat r(m.rows_, m.cols_);
    for (size_t i = 0; i < m.a_.size(); ++i) r.a_[i] = s * m.a_[i];
    return r;
}

bool Mat::operator<(const Mat& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    for (size_t i = 0; i < a_.size(); ++i) {
        int c = cmp(a_[i], o.a_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

Weight Mat::apply(const Weight& v) const {
    if (v.dim() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
    Weight r(rows_);
    for (size_t i = 0; i < rows_; ++i) {
        Rational s = 0;
        for (size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0 && v[j] != 0) s += (*this)(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

std::string Mat::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << rat_str((*this)(i, j));
        }
        os << "]\n";
    }
    return os.str();
}

namespace {

// Clears denominators row by row, yielding an integer matrix with the same
// row-wise proportionality (nullspace and rank preserved).
std::vector<std::vector<Integer>> to_integer_rows(const Mat& m) {
    std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (size_t j = 0; j < m.cols(); ++j) {
            const Integer& d = m(i, j).get_den();
            Integer g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
            l = l / g * d;
        }
        for (size_t j = 0; j < m.cols(); ++j) {
            Rational v = m(i, j) * Rational(l);
            v.canonicalize();
            rows[i][j] = v.get_num();
        }
    }
    return rows;
}

// Bareiss fraction-free forward elimination on integer rows. Returns pivot
// (row, col) pairs in elimination order; rows are permuted in place.
std::vector<std::pair<size_t, size_t>> bareiss(std::vector<std::vector<Integer>>& a) {
    const size_t nr = a.size();
    const size_t nc = nr ? a[0].size() : 0;
    std::vector<std::pair<size_t, size_t>> pivots;
    Integer prev = 1;
    size_t row = 0;
    for (size_t col = 0; col < nc && row < nr; ++col) {
        size_t piv = row;
        while (piv < nr && a[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(a[piv], a[row]);
        for (size_t i = row + 1; i < nr; ++i) {
            for (size_t j = col + 1; j < nc; ++j) {
                Integer t = a[i][j] * a[row][col] - a[i][col] * a[row][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[row][col];
        pivots.emplace_back(row, col);
        ++row;
    }
    return pivots;
}

} // namespace

Rational det(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (m.rows() == 0) return 1;
    auto rows = to_integer_rows(m);
    // Track the row scalings so the integer determinant can be rescaled back.
    Rational scale = 1;
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j) != 0) {
                scale *= Rational(rows[i][j]) / m(i, j);
                break;
            }
        }
        // all-zero row: determinant is zero regardless of scale
    }
    size_t swaps = 0;
    auto a = rows;
    const size_t n = a.size();
    Integer prev = 1;
    for (size_t col = 0, row = 0; col < n && row < n; ++col, ++row) {
        size_t piv = row;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != row) {
            std::swap(a[piv], a[row]);
            ++swaps;
        }
        for (size_t i = row + 1; i < n; ++i) {
            for (size_t j = col + 1; j < n; ++j) {
                Integer t = a[i][j] * a[row][col] - a[i][col] * a[row][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[row][col];
    }
    Rational d = Rational(a[n - 1][n - 1]) / scale;
    d.canonicalize();
    return (swaps % 2) ? Rational(-d) : d;
}

std::vector<size_t> rref(Mat& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t piv = row;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        Rational inv = 1 / m(row, col);
        for (size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Rational f = m(i, col);
            for (size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t rank(const Mat& m) {
    Mat c = m;
    return rref(c).size();
}

std::optional<std::vector<Rational>> solve(const Mat& a, const std::vector<Rational>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve shape mismatch");
    Mat aug(a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt; // row [0..0 | 1]
    std::vector<Rational> x(a.cols());
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, a.cols());
    return x;
}

std::vector<std::vector<Rational>> nullspace(const Mat& a) {
    const size_t nc = a.cols();
    if (a.rows() == 0) {
        std::vector<std::vector<Rational>> basis;
        for (size_t j = 0; j < nc; ++j) {
            std::vector<Rational> x(nc);
            x[j] = 1;
            basis.push_back(std::move(x));
        }
        return basis;
    }
    auto rows = to_integer_rows(a);
    auto pivots = bareiss(rows);
    std::vector<bool> is_pivot(nc, false);
    for (auto& [r, c] : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (size_t free_col = 0; free_col < nc; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> x(nc);
        x[free_col] = 1;
        // Back-substitute through the echelon rows (pivots in increasing col order).
        for (size_t k = pivots.size(); k-- > 0;) {
            auto [pr, pc] = pivots[k];
            Rational s = 0;
            for (size_t j = pc + 1; j < nc; ++j)
                if (rows[pr][j] != 0 && x[j] != 0) s += Rational(rows[pr][j]) * x[j];
            x[pc] = -s / Rational(rows[pr][pc]);
            x[pc].canonicalize();
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

bool RowSpan::add(std::vector<Rational> v) {
    if (v.size() != dim_) throw std::invalid_argument("RowSpan dimension mismatch");
    reduce(v);
    size_t lead = dim_;
    for (size_t j = 0; j < dim_; ++j)
        if (v[j] != 0) {
            lead = j;
            break;
        }
    if (lead == dim_) return false;
    Rational inv = 1 / v[lead];
    for (auto& x : v) x *= inv;
    // Eliminate the new pivot from existing rows to keep full reduction.
    for (size_t k = 0; k < rows_.size(); ++k) {
        if (rows_[k][lead] == 0) continue;
        Rational f = rows_[k][lead];
        for (size_t j = 0; j < dim_; ++j) rows_[k][j] -= f * v[j];
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, lead);
    return true;
}

void RowSpan::reduce(std::vector<Rational>& v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
        const Rational& f = v[pivots_[k]];
        if (f == 0) continue;
        Rational c = f;
        for (size_t j = 0; j < dim_; ++j)
            if (rows_[k][j] != 0) v[j] -= c * rows_[k][j];
    }
}

bool RowSpan::contains(std::vector<Rational> v) const {
    reduce(v);
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

} // namespace supermod
