#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trifocal {

// Arbitrary-precision rational, always canonical (lowest terms, positive denominator).
class Rational {
public:
    Rational() = default;
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(static_cast<long>(n)) { static_assert(sizeof(long) == sizeof(long long)); }
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "n" or "p/q" with optional sign.
    static Rational parse(std::string_view s) {
        std::string t(s);
        auto slash = t.find('/');
        try {
            if (slash == std::string::npos) return Rational(mpz_class(strip_plus(t)));
            mpz_class num(strip_plus(t.substr(0, slash)));
            mpz_class den(strip_plus(t.substr(slash + 1)));
            if (den == 0) throw std::domain_error("rational with zero denominator");
            return Rational(mpq_class(num, den));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("malformed rational: '" + t + "'");
        }
    }

    const mpq_class& value() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string to_string() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_), raw_tag{}); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

    Rational inverse() const { return Rational(1) / *this; }

private:
    struct raw_tag {};
    Rational(mpq_class q, raw_tag) : v_(std::move(q)) {}
    static std::string strip_plus(std::string s) {
        while (!s.empty() && s.front() == ' ') s.erase(s.begin());
        while (!s.empty() && s.back() == ' ') s.pop_back();
        if (!s.empty() && s.front() == '+') s.erase(s.begin());
        if (s.empty()) throw std::invalid_argument("empty");
        return s;
    }

    mpq_class v_;
};

}  // namespace trifocal
