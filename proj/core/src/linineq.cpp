#include "supermod/linineq.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace supermod {

namespace {

// Scale to a primitive integer vector (for deduplication).
std::vector<Rational> normalize_row(const std::vector<Rational>& r) {
    Integer l = 1;
    for (const auto& x : r) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
        l = l / g * x.get_den();
    }
    std::vector<Rational> out(r.size());
    Integer g = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        Rational v = r[i] * Rational(l);
        v.canonicalize();
        out[i] = v;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num().get_mpz_t());
    }
    if (g > 1)
        for (auto& v : out) {
            v /= Rational(g);
            v.canonicalize();
        }
    return out;
}

} // namespace

std::optional<std::vector<Rational>> fm_strict_witness(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return std::vector<Rational>{};
    const size_t n = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != n) throw std::invalid_argument("inconsistent row sizes");

    // levels[k] holds the system over variables x_0..x_k.
    std::vector<std::vector<std::vector<Rational>>> levels(n);
    {
        std::set<std::vector<Rational>> dedup;
        for (auto& r : rows) dedup.insert(normalize_row(r));
        levels[n - 1].assign(dedup.begin(), dedup.end());
    }

    for (size_t k = n - 1; k > 0; --k) {
        std::set<std::vector<Rational>> next;
        std::vector<const std::vector<Rational>*> pos, neg;
        for (const auto& r : levels[k]) {
            if (r[k] > 0)
                pos.push_back(&r);
            else if (r[k] < 0)
                neg.push_back(&r);
            else {
                std::vector<Rational> t(r.begin(), r.begin() + k);
                next.insert(normalize_row(t));
            }
        }
        for (const auto* p : pos)
            for (const auto* q : neg) {
                // (-q_k) * p + p_k * q eliminates x_k; both are > 0 rows.
                std::vector<Rational> t(k);
                for (size_t j = 0; j < k; ++j) t[j] = (-(*q)[k]) * (*p)[j] + (*p)[k] * (*q)[j];
                next.insert(normalize_row(t));
            }
        levels[k - 1].assign(next.begin(), next.end());
    }

    // Feasibility at the single-variable level, then back-substitution.
    std::vector<Rational> x(n);
    for (size_t k = 0; k < n; ++k) {
        bool has_lower = false, has_upper = false;
        Rational lo = 0, hi = 0;
        bool infeasible_row = false;
        for (const auto& r : levels[k]) {
            Rational s = 0;
            for (size_t j = 0; j < k; ++j) s += r[j] * x[j];
            if (r[k] > 0) {
                Rational bound = -s / r[k]; // x_k > bound
                if (!has_lower || bound > lo) lo = bound;
                has_lower = true;
            } else if (r[k] < 0) {
                Rational bound = -s / r[k]; // x_k < bound
                if (!has_upper || bound < hi) hi = bound;
                has_upper = true;
            } else if (s <= 0) {
                infeasible_row = true; // constant row demands s > 0
            }
        }
        if (infeasible_row) return std::nullopt;
        if (has_lower && has_upper) {
            if (!(lo < hi)) return std::nullopt;
            x[k] = (lo + hi) / 2;
        } else if (has_lower) {
            x[k] = lo + 1;
        } else if (has_upper) {
            x[k] = hi - 1;
        } else {
            x[k] = 0;
        }
        x[k].canonicalize();
    }
    return x;
}

} // namespace supermod
