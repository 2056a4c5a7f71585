#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "../exact/dense_matrix.hpp"
#include "ternary_form.hpp"

namespace trifocal {

enum class Axis { A = 0, B = 1, C = 2 };
inline constexpr std::array<Axis, 3> kAxes = {Axis::A, Axis::B, Axis::C};

inline char axis_name(Axis a) { return "ABC"[static_cast<int>(a)]; }
inline Axis parse_axis(char c) {
    switch (c) {
        case 'A': case 'a': return Axis::A;
        case 'B': case 'b': return Axis::B;
        case 'C': case 'c': return Axis::C;
    }
    throw std::invalid_argument(std::string("unknown axis '") + c + "'");
}

// T[i][j][k], indices 0-based; i indexes A*, j indexes B*, k indexes C.
// Coordinates a_ij = T[i][j][0], b_ij = T[i][j][1], c_ij = T[i][j][2].
template <ExactField F>
class Tensor333 {
public:
    Tensor333() : Tensor333(F{}) {}
    explicit Tensor333(const F& zero) { e_.fill(scalar_like(0, zero)); }

    static std::size_t flat(std::size_t i, std::size_t j, std::size_t k) { return 9 * i + 3 * j + k; }

    F& operator()(std::size_t i, std::size_t j, std::size_t k) { return e_[flat(i, j, k)]; }
    const F& operator()(std::size_t i, std::size_t j, std::size_t k) const { return e_[flat(i, j, k)]; }
    F& operator[](std::size_t v) { return e_[v]; }
    const F& operator[](std::size_t v) const { return e_[v]; }
    F scalar(long long n) const { return scalar_like(n, e_[0]); }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }
    friend bool operator==(const Tensor333& a, const Tensor333& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Tensor333& a, const Tensor333& b) { return !(a == b); }
    friend Tensor333 operator+(Tensor333 a, const Tensor333& b) {
        for (std::size_t v = 0; v < 27; ++v) a.e_[v] += b.e_[v];
        return a;
    }
    friend Tensor333 operator-(Tensor333 a, const Tensor333& b) {
        for (std::size_t v = 0; v < 27; ++v) a.e_[v] -= b.e_[v];
        return a;
    }
    Tensor333 scaled(const F& s) const {
        Tensor333 r = *this;
        for (auto& x : r.e_) x *= s;
        return r;
    }

    static Tensor333 outer(const std::vector<F>& u, const std::vector<F>& v, const std::vector<F>& w) {
        if (u.size() != 3 || v.size() != 3 || w.size() != 3) throw std::invalid_argument("outer needs 3-vectors");
        Tensor333 t(u[0]);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t k = 0; k < 3; ++k) t(i, j, k) = u[i] * v[j] * w[k];
        return t;
    }
    // Sum of unit tensors e_i x e_j x e_k with the given coefficient.
    static Tensor333 from_terms(const std::vector<std::array<int, 4>>& terms, const F& zero = F{}) {
        Tensor333 t(zero);
        for (const auto& [i, j, k, c] : terms) {
            if (i < 0 || i > 2 || j < 0 || j > 2 || k < 0 || k > 2) throw std::invalid_argument("term index out of range");
            t(i, j, k) += scalar_like(c, zero);
        }
        return t;
    }

private:
    std::array<F, 27> e_;
};

inline void check_index(std::size_t idx) {
    if (idx > 2) throw std::invalid_argument("slice index out of range: " + std::to_string(idx));
}

// A: W_i = (T_ijk)_{jk};  B: Y_j = (T_ijk)_{ik};  C: Z_k = (T_ijk)_{ij}.
template <ExactField F>
DenseMatrix<F> slice(const Tensor333<F>& t, Axis axis, std::size_t idx) {
    check_index(idx);
    DenseMatrix<F> m(3, 3, t.scalar(0));
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) {
            switch (axis) {
                case Axis::A: m(r, c) = t(idx, r, c); break;
                case Axis::B: m(r, c) = t(r, idx, c); break;
                case Axis::C: m(r, c) = t(r, c, idx); break;
            }
        }
    return m;
}

// Mode unfolding: rows indexed by `axis`, columns by the remaining two indices
// in (i,j,k) order, the first of them major. A = (Y1|Y2|Y3), B = (W1|W2|W3),
// C = (W1^T|W2^T|W3^T).
template <ExactField F>
DenseMatrix<F> flattening(const Tensor333<F>& t, Axis axis) {
    DenseMatrix<F> m(3, 9, t.scalar(0));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) {
                switch (axis) {
                    case Axis::A: m(i, 3 * j + k) = t(i, j, k); break;
                    case Axis::B: m(j, 3 * i + k) = t(i, j, k); break;
                    case Axis::C: m(k, 3 * i + j) = t(i, j, k); break;
                }
            }
    return m;
}

struct RankTriple {
    int a = 0, b = 0, c = 0;
    int operator[](Axis x) const { return x == Axis::A ? a : x == Axis::B ? b : c; }
    friend bool operator==(const RankTriple&, const RankTriple&) = default;
    std::string to_string() const {
        return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    }
};

template <ExactField F>
RankTriple frank(const Tensor333<F>& t) {
    return {static_cast<int>(rank(flattening(t, Axis::A))), static_cast<int>(rank(flattening(t, Axis::B))),
            static_cast<int>(rank(flattening(t, Axis::C)))};
}

// 3x3 matrix of linear forms sum_s x_s * coeff[s].
template <ExactField F>
struct Pencil {
    std::array<DenseMatrix<F>, 3> coeff;

    TernaryForm<F> entry(std::size_t r, std::size_t c) const {
        return TernaryForm<F>::linear(coeff[0](r, c), coeff[1](r, c), coeff[2](r, c));
    }
    bool is_zero() const { return coeff[0].is_zero() && coeff[1].is_zero() && coeff[2].is_zero(); }
    TernaryForm<F> minor(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
        if (rs.size() == 1) return entry(rs[0], cs[0]);
        if (rs.size() == 2)
            return entry(rs[0], cs[0]) * entry(rs[1], cs[1]) - entry(rs[0], cs[1]) * entry(rs[1], cs[0]);
        TernaryForm<F> d;
        for (std::size_t c = 0; c < 3; ++c) {
            std::vector<std::size_t> rr{rs[1], rs[2]}, cc;
            for (std::size_t x = 0; x < 3; ++x)
                if (x != c) cc.push_back(cs[x]);
            auto term = entry(rs[0], cs[c]) * minor(rr, cc);
            d = c % 2 ? d - term : d + term;
        }
        return d;
    }
    TernaryForm<F> determinant() const { return minor({0, 1, 2}, {0, 1, 2}); }
};

// A: (j,k) entry sum_i x_i T_ijk;  B: (i,k) entry sum_j x_j T_ijk;  C: (i,j) entry sum_k x_k T_ijk.
template <ExactField F>
Pencil<F> pencil(const Tensor333<F>& t, Axis axis) {
    return {{slice(t, axis, 0), slice(t, axis, 1), slice(t, axis, 2)}};
}

// Generic rank of a pencil: largest minor size that is not identically zero.
template <ExactField F>
int pencil_rank(const Pencil<F>& p) {
    if (!p.determinant().is_zero()) return 3;
    static const std::vector<std::vector<std::size_t>> pairs = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& rs : pairs)
        for (const auto& cs : pairs)
            if (!p.minor(rs, cs).is_zero()) return 2;
    return p.is_zero() ? 0 : 1;
}

template <ExactField F>
RankTriple prank(const Tensor333<F>& t) {
    return {pencil_rank(pencil(t, Axis::A)), pencil_rank(pencil(t, Axis::B)), pencil_rank(pencil(t, Axis::C))};
}

template <ExactField F>
struct GroupElement {
    DenseMatrix<F> gA, gB, gC;

    static GroupElement identity(const F& zero = F{}) {
        return {DenseMatrix<F>::identity(3, zero), DenseMatrix<F>::identity(3, zero), DenseMatrix<F>::identity(3, zero)};
    }
    const DenseMatrix<F>& factor(Axis a) const { return a == Axis::A ? gA : a == Axis::B ? gB : gC; }
    bool invertible() const { return !det(gA).is_zero() && !det(gB).is_zero() && !det(gC).is_zero(); }
    friend GroupElement operator*(const GroupElement& g, const GroupElement& h) {
        return {g.gA * h.gA, g.gB * h.gB, g.gC * h.gC};
    }
};

// The same linear map without the invertibility check; used for limits of group elements.
template <ExactField F>
Tensor333<F> act_unchecked(const GroupElement<F>& g, const Tensor333<F>& t) {
    Tensor333<F> s1(t.scalar(0)), s2(t.scalar(0)), s3(t.scalar(0));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                for (std::size_t x = 0; x < 3; ++x) s1(i, j, k) += g.gA(i, x) * t(x, j, k);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                for (std::size_t x = 0; x < 3; ++x) s2(i, j, k) += g.gB(j, x) * s1(i, x, k);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                for (std::size_t x = 0; x < 3; ++x) s3(i, j, k) += g.gC(k, x) * s2(i, j, x);
    return s3;
}

// T'_ijk = sum gA[i][i'] gB[j][j'] gC[k][k'] T_i'j'k'.  act(g*h, t) = act(g, act(h, t)).
template <ExactField F>
Tensor333<F> act(const GroupElement<F>& g, const Tensor333<F>& t) {
    for (Axis a : kAxes) {
        const auto& m = g.factor(a);
        if (m.rows() != 3 || m.cols() != 3) throw std::invalid_argument("group factor must be 3x3");
    }
    if (!g.invertible()) throw std::invalid_argument("singular group element");
    return act_unchecked(g, t);
}

// w_k = sum_ij T_ijk u_i v_j.
template <ExactField F>
std::vector<F> contract(const Tensor333<F>& t, const std::vector<F>& u, const std::vector<F>& v) {
    if (u.size() != 3 || v.size() != 3) throw std::invalid_argument("contract needs 3-vectors");
    std::vector<F> w(3, t.scalar(0));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) w[k] += t(i, j, k) * u[i] * v[j];
    return w;
}

// Factor permutation: result(x_{perm[0]}, x_{perm[1]}, x_{perm[2]}) = t(x_0, x_1, x_2),
// i.e. old factor s becomes new factor perm[s]. perm = {1,2,0} is a->b->c->a.
template <ExactField F>
Tensor333<F> permute_factors(const Tensor333<F>& t, const std::array<int, 3>& perm) {
    std::array<bool, 3> seen{};
    for (int p : perm) {
        if (p < 0 || p > 2 || seen[p]) throw std::invalid_argument("not a permutation of the factors");
        seen[p] = true;
    }
    Tensor333<F> r(t.scalar(0));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) {
                std::array<std::size_t, 3> src{i, j, k}, dst{};
                for (int s = 0; s < 3; ++s) dst[perm[s]] = src[s];
                r(dst[0], dst[1], dst[2]) = t(i, j, k);
            }
    return r;
}

inline constexpr std::array<int, 3> kCyclicABC = {1, 2, 0};

template <ExactField F>
DenseMatrix<F> random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound, const F& zero) {
    std::uniform_int_distribution<int> d(-bound, bound);
    DenseMatrix<F> m(r, c, scalar_like(0, zero));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = scalar_like(d(rng), zero);
    return m;
}

inline constexpr int kGroupEntryBound = 5;

// Invertible triple with entries in [-bound, bound]; singular draws are redrawn.
template <ExactField F>
GroupElement<F> random_group_element(std::mt19937_64& rng, const F& zero = F{}, int bound = kGroupEntryBound) {
    auto draw = [&] {
        for (int attempt = 0; attempt < 1000; ++attempt) {
            auto m = random_int_matrix(rng, 3, 3, bound, zero);
            if (!det(m).is_zero()) return m;
        }
        throw std::runtime_error("could not draw an invertible matrix");
    };
    GroupElement<F> g;
    g.gA = draw();
    g.gB = draw();
    g.gC = draw();
    return g;
}

template <ExactField F>
Tensor333<F> random_orbit_point(const Tensor333<F>& nf, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return act(random_group_element(rng, nf.scalar(0)), nf);
}

template <ExactField F>
Tensor333<F> random_tensor(std::mt19937_64& rng, int bound, const F& zero = F{}) {
    std::uniform_int_distribution<int> d(-bound, bound);
    Tensor333<F> t(zero);
    for (std::size_t v = 0; v < 27; ++v) t[v] = scalar_like(d(rng), zero);
    return t;
}

template <ExactField F>
Tensor333<F> assemble_from_slices(const std::array<DenseMatrix<F>, 3>& s, Axis axis) {
    Tensor333<F> t(s[0].zero());
    for (std::size_t idx = 0; idx < 3; ++idx)
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) {
                switch (axis) {
                    case Axis::A: t(idx, r, c) = s[idx](r, c); break;
                    case Axis::B: t(r, idx, c) = s[idx](r, c); break;
                    case Axis::C: t(r, c, idx) = s[idx](r, c); break;
                }
            }
    return t;
}

template <ExactField To>
Tensor333<To> to_field(const Tensor333<Rational>& t, const To& like) {
    Tensor333<To> r(scalar_like(0, like));
    for (std::size_t v = 0; v < 27; ++v) r[v] = convert(t[v], like);
    return r;
}

}  // namespace trifocal
