#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "poly27.hpp"

namespace trifocal {

// Integer-coefficient polynomial prepared for repeated exact evaluation.
class CompiledPoly {
public:
    explicit CompiledPoly(const Poly27<Rational>& f) : source_(&f) {
        for (const auto& [m, c] : f.terms()) {
            Term t;
            t.small = c.is_integer() && c.num().fits_slong_p();
            t.coeff = t.small ? c.num().get_si() : 0;
            for (int v = 0; v < kVars; ++v)
                if (m[v]) t.factors.push_back({static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(m[v])});
            terms_.push_back(std::move(t));
        }
    }
    struct Term {
        long coeff = 0;
        bool small = false;
        std::vector<std::array<std::uint8_t, 2>> factors;
    };
    const std::vector<Term>& terms() const { return terms_; }
    const Poly27<Rational>& source() const { return *source_; }

private:
    const Poly27<Rational>* source_;
    std::vector<Term> terms_;
};

// Integer point with exact powers cached; evaluation uses 128-bit arithmetic with
// overflow detection and falls back to GMP.
class IntegerPoint {
public:
    static std::optional<IntegerPoint> from(const Tensor333<Rational>& t, int max_degree = 9) {
        IntegerPoint p;
        p.source_ = t;
        for (int v = 0; v < kVars; ++v) {
            const auto& x = t[static_cast<std::size_t>(v)];
            if (!x.is_integer() || !x.num().fits_slong_p()) return std::nullopt;
            __int128 acc = 1;
            bool ok = true;
            p.pow_[v].assign(static_cast<std::size_t>(max_degree) + 1, 0);
            p.ok_[v].assign(static_cast<std::size_t>(max_degree) + 1, 1);
            for (int e = 0; e <= max_degree; ++e) {
                p.pow_[v][static_cast<std::size_t>(e)] = acc;
                p.ok_[v][static_cast<std::size_t>(e)] = ok;
                __int128 next;
                if (ok && __builtin_mul_overflow(acc, static_cast<__int128>(x.num().get_si()), &next)) ok = false;
                acc = ok ? next : 0;
            }
        }
        return p;
    }

    Rational evaluate(const CompiledPoly& f) const {
        __int128 total = 0;
        for (const auto& t : f.terms()) {
            if (!t.small) return trifocal::evaluate(f.source(), source_);
            __int128 term = t.coeff;
            for (const auto& [v, e] : t.factors) {
                if (e >= pow_[v].size() || !ok_[v][e] || __builtin_mul_overflow(term, pow_[v][e], &term))
                    return trifocal::evaluate(f.source(), source_);
            }
            if (__builtin_add_overflow(total, term, &total)) return trifocal::evaluate(f.source(), source_);
        }
        return from_int128(total);
    }
    bool vanishes(const CompiledPoly& f) const { return evaluate(f).is_zero(); }

private:
    static Rational from_int128(__int128 x) {
        bool neg = x < 0;
        unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
        mpz_class hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u & ~0ull));
        mpz_class r = (hi << 64) + lo;
        return Rational(neg ? mpz_class(-r) : r);
    }

    Tensor333<Rational> source_;
    std::array<std::vector<__int128>, kVars> pow_;
    std::array<std::vector<char>, kVars> ok_;
};

}  // namespace trifocal
