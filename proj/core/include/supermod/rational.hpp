#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace supermod {

// All scalars in the library are exact rationals. mpq_class keeps values in
// lowest terms with a positive denominator once canonicalized; every routine
// here returns canonical values.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "p/q", with optional sign. Throws on malformed input.
Rational rat_parse(const std::string& s);

// Canonical "p" / "p/q" rendering, e.g. "3", "-1/2".
std::string rat_str(const Rational& x);

inline bool rat_is_integer(const Rational& x) { return x.get_den() == 1; }

// Exact conversion to long; throws if not an integer or out of range.
long rat_to_long(const Rational& x);

} // namespace supermod
