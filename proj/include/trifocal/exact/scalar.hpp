#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "prime_field.hpp"
#include "rational.hpp"

namespace trifocal {

template <class F>
concept ExactField = std::regular<F> && requires(F a, const F& b) {
    { a + b } -> std::same_as<F>;
    { a - b } -> std::same_as<F>;
    { a * b } -> std::same_as<F>;
    { a / b } -> std::same_as<F>;
    { -a } -> std::same_as<F>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.to_string() } -> std::same_as<std::string>;
};

// The integer n in the field of `like`.
inline Rational scalar_like(long long n, const Rational&) { return Rational(n); }
inline Fp scalar_like(long long n, const Fp& like) { return Fp(n, like.modulus()); }

inline std::string field_name(const Rational&) { return "Q"; }
inline std::string field_name(const Fp& x) { return "F_" + std::to_string(x.modulus()); }

inline bool same_field(const Rational&, const Rational&) { return true; }
inline bool same_field(const Fp& a, const Fp& b) { return a.modulus() == b.modulus(); }

inline Fp to_fp(const Rational& q, std::uint64_t p) {
    mpz_class n = q.num() % static_cast<unsigned long>(p);
    mpz_class d = q.den() % static_cast<unsigned long>(p);
    if (d == 0) throw std::domain_error("denominator divisible by p = " + std::to_string(p));
    return Fp(n.get_si(), p) / Fp(d.get_si(), p);
}

template <class To>
To convert(const Rational& q, const To& like);
template <>
inline Rational convert<Rational>(const Rational& q, const Rational&) { return q; }
template <>
inline Fp convert<Fp>(const Rational& q, const Fp& like) { return to_fp(q, like.modulus()); }

}  // namespace trifocal
