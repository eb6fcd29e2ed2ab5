#pragma once

#include "supermod/rational.hpp"

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace supermod {

// Element of h* in a family-fixed coordinate basis (epsilon coordinates first,
// then delta coordinates). Immutable value semantics throughout.
struct Weight {
    std::vector<Rational> c;

    Weight() = default;
    explicit Weight(size_t dim) : c(dim) {}
    Weight(std::initializer_list<Rational> xs) : c(xs) {}
    explicit Weight(std::vector<Rational> xs) : c(std::move(xs)) {}

    size_t dim() const { return c.size(); }
    const Rational& operator[](size_t i) const { return c[i]; }
    Rational& operator[](size_t i) { return c[i]; }

    bool is_zero() const {
        for (const auto& x : c)
            if (x != 0) return false;
        return true;
    }

    friend Weight operator+(const Weight& a, const Weight& b);
    friend Weight operator-(const Weight& a, const Weight& b);
    friend Weight operator-(const Weight& a);
    friend Weight operator*(const Rational& s, const Weight& a);
    Weight& operator+=(const Weight& b);
    Weight& operator-=(const Weight& b);

    friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
    // Lexicographic; used for deterministic orderings and map keys.
    friend bool operator<(const Weight& a, const Weight& b);

    std::string str() const; // "(3, -1/2, 0)"
};

// Unit coordinate vector.
Weight unit_weight(size_t dim, size_t i);

} // namespace supermod
