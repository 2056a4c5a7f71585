#pragma once

#include <gmpxx.h>

#include "poly27.hpp"
#include "../exact/sparse_matrix.hpp"

namespace trifocal {

// Scale to integer coefficients with gcd 1 and a positive leading coefficient.
inline Poly27<Rational> primitive(const Poly27<Rational>& f) {
    if (f.is_zero()) return f;
    mpz_class l = 1, g = 0;
    for (const auto& [m, c] : f.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    for (const auto& [m, c] : f.terms()) {
        mpz_class n = c.num() * (l / c.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    mpq_class s(l, g);
    s.canonicalize();
    if (f.leading().second.sign() < 0) s = -s;
    return f.scaled(Rational(s));
}

inline bool has_integer_coefficients(const Poly27<Rational>& f) {
    for (const auto& [m, c] : f.terms())
        if (!c.is_integer()) return false;
    return true;
}

inline std::uint32_t residue(const Rational& c, std::uint64_t p) {
    return static_cast<std::uint32_t>(to_fp(c, p).value());
}

}  // namespace trifocal
