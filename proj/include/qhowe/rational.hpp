#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace qhowe {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

/// 2^e for possibly negative e, as an exact rational.
inline Rat pow2(long e) {
    Rat r = 1;
    if (e >= 0) {
        for (long i = 0; i < e; ++i) r *= 2;
    } else {
        for (long i = 0; i < -e; ++i) r /= 2;
    }
    return r;
}

} // namespace qhowe
