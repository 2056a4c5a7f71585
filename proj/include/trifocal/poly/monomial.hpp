#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "../tensor/tensor.hpp"

namespace trifocal {

inline constexpr int kVars = 27;

inline constexpr int var_index(int i, int j, int k) { return 9 * i + 3 * j + k; }
inline constexpr std::array<int, 3> var_triple(int v) { return {v / 9, (v / 3) % 3, v % 3}; }

// Exponent vector over T_ijk, variable index 9i+3j+k (0-based).
class Monomial27 {
public:
    Monomial27() { e_.fill(0); }
    static Monomial27 variable(int v) {
        Monomial27 m;
        m.e_[static_cast<std::size_t>(v)] = 1;
        m.deg_ = 1;
        return m;
    }
    static Monomial27 from_exponents(const std::array<int, kVars>& ex) {
        Monomial27 m;
        for (int v = 0; v < kVars; ++v) {
            if (ex[v] < 0 || ex[v] > 255) throw std::invalid_argument("exponent out of range");
            m.e_[v] = static_cast<std::uint8_t>(ex[v]);
            m.deg_ += ex[v];
        }
        return m;
    }

    int operator[](int v) const { return e_[static_cast<std::size_t>(v)]; }
    int degree() const { return deg_; }
    const std::uint8_t* data() const { return e_.data(); }

    void multiply_variable(int v, int times = 1) {
        e_[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(e_[static_cast<std::size_t>(v)] + times);
        deg_ += times;
    }
    void divide_variable(int v) {
        if (e_[static_cast<std::size_t>(v)] == 0) throw std::logic_error("divide_variable on absent variable");
        --e_[static_cast<std::size_t>(v)];
        --deg_;
    }
    friend Monomial27 operator*(Monomial27 a, const Monomial27& b) {
        for (int v = 0; v < kVars; ++v) a.e_[v] = static_cast<std::uint8_t>(a.e_[v] + b.e_[v]);
        a.deg_ += b.deg_;
        return a;
    }
    friend bool operator==(const Monomial27& a, const Monomial27& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial27& a, const Monomial27& b) { return !(a == b); }

    // Graded lexicographic with T_111 the largest variable.
    friend bool operator<(const Monomial27& a, const Monomial27& b) {
        if (a.deg_ != b.deg_) return a.deg_ < b.deg_;
        return a.e_ < b.e_;
    }

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto x : e_) h = (h ^ x) * 1099511628211ull;
        return static_cast<std::size_t>(h);
    }

private:
    std::array<std::uint8_t, kVars> e_;
    int deg_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial27& m) const { return m.hash(); }
};

// Index contents of a monomial per factor: w[axis][index].
struct Weight {
    std::array<std::array<int, 3>, 3> w{};

    const std::array<int, 3>& operator[](Axis a) const { return w[static_cast<std::size_t>(a)]; }
    std::array<int, 3>& operator[](Axis a) { return w[static_cast<std::size_t>(a)]; }
    int degree() const { return w[0][0] + w[0][1] + w[0][2]; }
    bool consistent() const {
        for (const auto& v : w)
            for (int x : v)
                if (x < 0) return false;
        int d = degree();
        return w[1][0] + w[1][1] + w[1][2] == d && w[2][0] + w[2][1] + w[2][2] == d;
    }
    bool dominant() const {
        for (const auto& v : w)
            if (v[0] < v[1] || v[1] < v[2]) return false;
        return true;
    }
    friend Weight operator+(Weight a, const Weight& b) {
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) a.w[x][y] += b.w[x][y];
        return a;
    }
    friend Weight operator-(Weight a, const Weight& b) {
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) a.w[x][y] -= b.w[x][y];
        return a;
    }
    friend bool operator==(const Weight&, const Weight&) = default;
    friend bool operator<(const Weight& a, const Weight& b) { return a.w < b.w; }

    // 4 bits per content; valid for degree <= 15.
    std::uint64_t key() const {
        std::uint64_t k = 0;
        for (const auto& v : w)
            for (int x : v) k = (k << 4) | static_cast<std::uint64_t>(x & 15);
        return k;
    }
    std::string to_string() const {
        std::string s = "(";
        for (int x = 0; x < 3; ++x) {
            if (x) s += ",";
            s += "(" + std::to_string(w[x][0]) + "," + std::to_string(w[x][1]) + "," + std::to_string(w[x][2]) + ")";
        }
        return s + ")";
    }
};

inline Weight weight_of(const Monomial27& m) {
    Weight w;
    for (int v = 0; v < kVars; ++v) {
        int e = m[v];
        if (!e) continue;
        auto [i, j, k] = var_triple(v);
        w.w[0][i] += e;
        w.w[1][j] += e;
        w.w[2][k] += e;
    }
    return w;
}

namespace detail {
inline void enumerate_weight(int v, std::array<int, 3>& ra, std::array<int, 3>& rb, std::array<int, 3>& rc,
                             int left, std::array<int, kVars>& ex, std::vector<Monomial27>& out) {
    if (left == 0) {
        out.push_back(Monomial27::from_exponents(ex));
        return;
    }
    if (v == kVars) return;
    auto [i, j, k] = var_triple(v);
    int cap = std::min({ra[i], rb[j], rc[k], left});
    for (int e = cap; e >= 0; --e) {
        ra[i] -= e; rb[j] -= e; rc[k] -= e;
        ex[v] = e;
        enumerate_weight(v + 1, ra, rb, rc, left - e, ex, out);
        ex[v] = 0;
        ra[i] += e; rb[j] += e; rc[k] += e;
    }
}
inline void enumerate_degree(int v, int left, std::array<int, kVars>& ex, std::vector<Monomial27>& out) {
    if (v == kVars - 1) {
        ex[v] = left;
        out.push_back(Monomial27::from_exponents(ex));
        ex[v] = 0;
        return;
    }
    for (int e = left; e >= 0; --e) {
        ex[v] = e;
        enumerate_degree(v + 1, left - e, ex, out);
    }
    ex[v] = 0;
}
}  // namespace detail

// All monomials of degree d with the given index contents, in decreasing monomial order.
inline std::vector<Monomial27> weight_space_basis(int d, const Weight& w) {
    if (!w.consistent() || w.degree() != d) throw std::invalid_argument("inconsistent weight " + w.to_string());
    std::vector<Monomial27> out;
    auto ra = w.w[0], rb = w.w[1], rc = w.w[2];
    std::array<int, kVars> ex{};
    detail::enumerate_weight(0, ra, rb, rc, d, ex, out);
    return out;
}

// All monomials of degree d, in decreasing monomial order.
inline std::vector<Monomial27> monomials_of_degree(int d) {
    std::vector<Monomial27> out;
    if (d < 0) return out;
    std::array<int, kVars> ex{};
    detail::enumerate_degree(0, d, ex, out);
    return out;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// dim S^d(C^27).
inline std::uint64_t ambient_dim(int d) { return d < 0 ? 0 : binomial(26 + static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(d)); }

}  // namespace trifocal
