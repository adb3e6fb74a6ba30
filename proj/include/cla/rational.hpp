#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace cla {

// Exact rational scalar. All arithmetic in the library is over Q; nothing
// is ever rounded. mpq_class keeps values canonical (lowest terms, positive
// denominator) under arithmetic; constructors from p/q pairs go through
// rat() below so they are canonicalized too.
using Rat = mpq_class;

inline Rat rat(long p, long q = 1) {
    if (q == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(p, q);
    r.canonicalize();
    return r;
}

// Serialized as "p" or "p/q" (canonical form, denominator omitted when 1).
inline std::string to_string(const Rat& r) { return r.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

}  // namespace cla
