#include "supermod/rational.hpp"

namespace supermod {

Rational rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw std::invalid_argument("malformed rational literal: " + s);
    }
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

long rat_to_long(const Rational& x) {
    if (!rat_is_integer(x)) throw std::domain_error("rational is not an integer: " + rat_str(x));
    if (!x.get_num().fits_slong_p()) throw std::domain_error("integer out of range: " + rat_str(x));
    return x.get_num().get_si();
}

} // namespace supermod
