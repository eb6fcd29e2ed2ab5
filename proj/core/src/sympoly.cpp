#include "supermod/sympoly.hpp"

#include <sstream>
#include <stdexcept>

namespace supermod {

SymPoly SymPoly::constant(size_t n, const Rational& c) {
    SymPoly p(n);
    if (c != 0) p.terms[std::vector<int>(n, 0)] = c;
    return p;
}

SymPoly SymPoly::variable(size_t n, size_t i) {
    SymPoly p(n);
    std::vector<int> e(n, 0);
    e[i] = 1;
    p.terms[e] = 1;
    return p;
}

SymPoly SymPoly::linear(const std::vector<Rational>& c) {
    SymPoly p(c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        std::vector<int> e(c.size(), 0);
        e[i] = 1;
        p.terms[e] = c[i];
    }
    return p;
}

int SymPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

void SymPoly::add_term(std::vector<int> exp, const Rational& c) {
    if (c == 0) return;
    auto it = terms.find(exp);
    if (it == terms.end()) {
        terms.emplace(std::move(exp), c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

SymPoly operator+(const SymPoly& a, const SymPoly& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("polynomial arity mismatch");
    SymPoly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
}

SymPoly operator-(const SymPoly& a, const SymPoly& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("polynomial arity mismatch");
    SymPoly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, -c);
    return r;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("polynomial arity mismatch");
    SymPoly r(a.nvars);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            std::vector<int> e(a.nvars);
            for (size_t i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
            r.add_term(std::move(e), ca * cb);
        }
    return r;
}

SymPoly operator*(const Rational& s, const SymPoly& a) {
    SymPoly r(a.nvars);
    if (s == 0) return r;
    for (const auto& [e, c] : a.terms) r.terms[e] = s * c;
    return r;
}

Rational SymPoly::eval(const std::vector<Rational>& x) const {
    if (x.size() != nvars) throw std::invalid_argument("evaluation arity mismatch");
    Rational total = 0;
    for (const auto& [e, c] : terms) {
        Rational t = c;
        for (size_t i = 0; i < nvars; ++i)
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        total += t;
    }
    return total;
}

SymPoly SymPoly::subst_linear(const Mat& t) const {
    if (t.rows() != nvars) throw std::invalid_argument("substitution shape mismatch");
    const size_t m = t.cols();
    // images of the variables, with cached powers
    std::vector<SymPoly> image;
    for (size_t i = 0; i < nvars; ++i) {
        std::vector<Rational> row(m);
        for (size_t j = 0; j < m; ++j) row[j] = t(i, j);
        image.push_back(SymPoly::linear(row));
    }
    std::vector<std::vector<SymPoly>> powers(nvars); // powers[i][k] = image[i]^k

    SymPoly out(m);
    for (const auto& [e, c] : terms) {
        SymPoly term = SymPoly::constant(m, c);
        for (size_t i = 0; i < nvars; ++i) {
            if (e[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(SymPoly::constant(m, 1));
            while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * image[i]);
            term = term * pw[e[i]];
        }
        out = out + term;
    }
    return out;
}

std::string SymPoly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(c);
        for (size_t i = 0; i < nvars; ++i) {
            if (e[i] == 0) continue;
            os << "*x" << i;
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

} // namespace supermod
