#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace fano {

/// Exact rational scalar. All arithmetic keeps values canonical
/// (gcd(num, den) = 1, den > 0); zero is 0/1.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p" or "p/q" with optional leading sign.
inline Rat rat_parse(const std::string& s) {
    mpq_class r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace fano
