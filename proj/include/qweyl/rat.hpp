#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qweyl {

// Exact rational scalar. GMP keeps mpq_class canonical (reduced, positive
// denominator) as long as values are built through arithmetic or through
// the helpers below.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0)
        throw std::domain_error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Rat& r) {
    if (!is_integer(r))
        throw std::domain_error("to_long: not an integer: " + r.get_str());
    if (!r.get_num().fits_slong_p())
        throw std::domain_error("to_long: out of range");
    return r.get_num().get_si();
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Parses "n" or "n/d" with optional sign.
inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

inline long lcm_long(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return std::lcm(a, b);
}

} // namespace qweyl
