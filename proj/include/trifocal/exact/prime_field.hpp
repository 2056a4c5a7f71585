#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace trifocal {

inline constexpr std::uint64_t kDefaultPrime = 101;
inline constexpr std::uint64_t kSecondPrime = 32003;
inline constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    if (nr == 0) throw std::domain_error("division by zero in F_" + std::to_string(p));
    while (nr) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw std::domain_error("non-invertible residue");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

// Residue mod a runtime prime p < 2^31. Every element carries its modulus;
// mixing moduli throws.
class Fp {
public:
    Fp() = default;
    Fp(long long n, std::uint64_t p = kDefaultPrime) : p_(p) {
        if (p < 2 || p > kMaxPrime) throw std::invalid_argument("prime out of range: " + std::to_string(p));
        long long r = n % static_cast<long long>(p);
        v_ = static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(p) : r);
    }
    static Fp raw(std::uint64_t v, std::uint64_t p) { Fp x; x.v_ = v; x.p_ = p; return x; }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    std::string to_string() const { return std::to_string(v_); }

    Fp operator-() const { return raw(v_ ? p_ - v_ : 0, p_); }
    Fp& operator+=(const Fp& o) { check(o); v_ += o.v_; if (v_ >= p_) v_ -= p_; return *this; }
    Fp& operator-=(const Fp& o) { check(o); v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_; return *this; }
    Fp& operator*=(const Fp& o) { check(o); v_ = v_ * o.v_ % p_; return *this; }
    Fp& operator/=(const Fp& o) { check(o); v_ = v_ * inv_mod(o.v_, p_) % p_; return *this; }
    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.p_ == b.p_ && a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.v_; }

    Fp inverse() const { return raw(inv_mod(v_, p_), p_); }

private:
    void check(const Fp& o) const {
        if (o.p_ != p_)
            throw std::invalid_argument("prime field mismatch: F_" + std::to_string(p_) + " vs F_" +
                                        std::to_string(o.p_));
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = kDefaultPrime;
};

}  // namespace trifocal
