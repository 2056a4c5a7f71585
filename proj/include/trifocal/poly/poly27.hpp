#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monomial.hpp"

namespace trifocal {

// Sparse polynomial in the 27 coordinates T_ijk. No zero coefficients are stored;
// terms iterate in increasing monomial order.
template <ExactField F = Rational>
class Poly27 {
public:
    using Terms = std::map<Monomial27, F>;

    Poly27() = default;
    static Poly27 variable(int v, const F& zero = F{}) {
        Poly27 p;
        p.add_term(Monomial27::variable(v), scalar_like(1, zero));
        return p;
    }
    static Poly27 var(int i, int j, int k, const F& zero = F{}) { return variable(var_index(i, j, k), zero); }
    static Poly27 constant(const F& c) {
        Poly27 p;
        p.add_term(Monomial27(), c);
        return p;
    }
    static Poly27 monomial(const Monomial27& m, const F& c) {
        Poly27 p;
        p.add_term(m, c);
        return p;
    }

    void add_term(const Monomial27& m, const F& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    const Terms& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }
    F coefficient(const Monomial27& m, const F& zero = F{}) const {
        auto it = t_.find(m);
        return it == t_.end() ? scalar_like(0, zero) : it->second;
    }
    const std::pair<const Monomial27, F>& leading() const {
        if (t_.empty()) throw std::logic_error("leading term of zero polynomial");
        return *t_.rbegin();
    }

    // Degree of a homogeneous polynomial; nullopt for zero or inhomogeneous input.
    std::optional<int> degree() const {
        if (t_.empty()) return std::nullopt;
        int d = t_.begin()->first.degree();
        if (t_.rbegin()->first.degree() != d) return std::nullopt;
        return d;
    }
    // Common weight of all terms; nullopt when not weight-homogeneous.
    std::optional<Weight> weight() const {
        if (t_.empty()) return std::nullopt;
        Weight w = weight_of(t_.begin()->first);
        for (const auto& [m, c] : t_)
            if (weight_of(m) != w) return std::nullopt;
        return w;
    }

    Poly27 operator-() const {
        Poly27 r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    Poly27& operator+=(const Poly27& o) {
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    Poly27& operator-=(const Poly27& o) {
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    friend Poly27 operator+(Poly27 a, const Poly27& b) { return a += b; }
    friend Poly27 operator-(Poly27 a, const Poly27& b) { return a -= b; }
    friend Poly27 operator*(const Poly27& a, const Poly27& b) {
        Poly27 r;
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Poly27 scaled(const F& s) const {
        if (s.is_zero()) return {};
        Poly27 r = *this;
        for (auto& [m, c] : r.t_) c *= s;
        return r;
    }
    Poly27 times_monomial(const Monomial27& x) const {
        Poly27 r;
        for (const auto& [m, c] : t_) r.t_.emplace_hint(r.t_.end(), m * x, c);
        return r;
    }
    friend bool operator==(const Poly27& a, const Poly27& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Poly27& a, const Poly27& b) { return !(a == b); }

private:
    Terms t_;
};

template <ExactField F>
Poly27<F> multiply(const Poly27<F>& f, const Poly27<F>& g) { return f * g; }

template <ExactField F>
Poly27<F> derivative(const Poly27<F>& f, int v) {
    if (v < 0 || v >= kVars) throw std::invalid_argument("variable index out of range");
    Poly27<F> r;
    for (const auto& [m, c] : f.terms()) {
        int e = m[v];
        if (!e) continue;
        Monomial27 q = m;
        q.divide_variable(v);
        r.add_term(q, c * scalar_like(e, c));
    }
    return r;
}

template <ExactField F>
F evaluate(const Poly27<F>& f, const Tensor333<F>& t) {
    F total = t.scalar(0);
    for (const auto& [m, c] : f.terms()) {
        if (!same_field(c, t[0])) throw std::invalid_argument("field mismatch between polynomial and tensor");
        F term = c;
        for (int v = 0; v < kVars && !term.is_zero(); ++v)
            for (int e = m[v]; e > 0; --e) term *= t[static_cast<std::size_t>(v)];
        total += term;
    }
    return total;
}

template <ExactField To>
Poly27<To> to_field(const Poly27<Rational>& f, const To& like) {
    Poly27<To> r;
    for (const auto& [m, c] : f.terms()) r.add_term(m, convert(c, like));
    return r;
}

}  // namespace trifocal
