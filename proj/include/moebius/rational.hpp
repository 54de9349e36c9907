#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mg {

// Exact rational arithmetic. GMP does the heavy lifting; everything in this
// project that touches a number goes through Rat, never double.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// "p/q" with the "/q" part omitted for integers. This is the wire format for
// every rational in JSON/CSV output.
inline std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat parse_rat(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

inline Rat rat_pow(const Rat& base, unsigned e) {
    Rat r(1);
    Rat b = base;
    unsigned k = e;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

inline long rat_floor(const Rat& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    if (!f.fits_slong_p()) throw std::overflow_error("rat_floor overflow");
    return f.get_si();
}

}  // namespace mg
