#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace moperad {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "num/den" or "num".
inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// r^k for integer k (k < 0 requires r != 0).
inline Rat rat_pow(const Rat& r, long k) {
    if (k == 0) return Rat(1);
    Rat base = k > 0 ? r : Rat(1) / r;
    long e = k > 0 ? k : -k;
    Rat acc(1);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace moperad
