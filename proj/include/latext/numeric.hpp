#pragma once
// Exact integer/rational scalars and small arithmetic helpers shared by all modules.

#include <gmpxx.h>
#include <cstdint>
#include <vector>

namespace latext {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcdz(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// gcd over a range; empty or all-zero input yields 0
inline Int gcd_all(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) {
        g = gcdz(g, x);
        if (g == 1) break;
    }
    return g;
}

// floor division
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// ceiling division
inline Int cdiv(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
    Rat r = 1;
    Rat b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Int floor_rat(const Rat& q) { return fdiv(q.get_num(), q.get_den()); }
inline Int ceil_rat(const Rat& q) { return cdiv(q.get_num(), q.get_den()); }

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

// largest k >= 0 with k*k <= a (a >= 0)
inline Int isqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool fits_slong(const Int& a) { return a.fits_slong_p(); }

}  // namespace latext
