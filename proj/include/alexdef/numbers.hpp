#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace alexdef {

using Int = mpz_class;
using Rat = mpq_class;

inline bool coeff_is_zero(const Int& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const Rat& c) { return sgn(c) == 0; }

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

/// Euclidean remainder normalized into [0, m) for m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q);

/// Parses "3", "-3", "3/4". Throws precondition_error on malformed input.
Rat parse_rat(const std::string& s);

} // namespace alexdef
