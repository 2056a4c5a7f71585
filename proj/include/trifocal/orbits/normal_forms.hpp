#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "../tensor/tensor.hpp"

namespace trifocal {

// Nurmiev triple ijk (1<=i<=3, 4<=j<=6, 7<=k<=9) stands for e_i ⊗ e_{j-3} ⊗ e_{k-6}.
inline Tensor333<Rational> decode_nurmiev(const std::vector<int>& triples) {
    Tensor333<Rational> t;
    for (int code : triples) {
        int i = code / 100, j = (code / 10) % 10, k = code % 10;
        if (code < 100 || code > 999 || i < 1 || i > 3 || j < 4 || j > 6 || k < 7 || k > 9)
            throw std::invalid_argument("invalid Nurmiev triple " + std::to_string(code));
        t(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 4), static_cast<std::size_t>(k - 7)) += Rational(1);
    }
    return t;
}

// Slice form of a general trifocal tensor: C-slices Z1, Z2, Z3 with
// Z1 = e12*(-1) + e31, Z2 = e22*(-1) + e32, Z3 = e32*(-1) + e33.
inline Tensor333<Rational> trifocal_slice_form() {
    return Tensor333<Rational>::from_terms({{0, 1, 0, -1}, {2, 0, 0, 1}, {1, 1, 1, -1}, {2, 1, 1, 1}, {2, 1, 2, -1}, {2, 2, 2, 1}});
}

// a1⊗b2⊗c1 + a3⊗b1⊗c1 + a2⊗b2⊗c2 + a3⊗b3⊗c3 (orbit 11'').
inline Tensor333<Rational> trifocal_normal_form() {
    return Tensor333<Rational>::from_terms({{0, 1, 0, 1}, {2, 0, 0, 1}, {1, 1, 1, 1}, {2, 2, 2, 1}});
}

inline Tensor333<Rational> orbit11() { return decode_nurmiev({149, 167, 248, 357}); }

// λ · sum ε_ijk a_i⊗b_j⊗c_k.
inline Tensor333<Rational> f_tensor(const Rational& lambda = Rational(1)) {
    Tensor333<Rational> t;
    for (int i = 0; i < 3; ++i) {
        t(static_cast<std::size_t>(i), static_cast<std::size_t>((i + 1) % 3), static_cast<std::size_t>((i + 2) % 3)) = lambda;
        t(static_cast<std::size_t>(i), static_cast<std::size_t>((i + 2) % 3), static_cast<std::size_t>((i + 1) % 3)) = -lambda;
    }
    return t;
}

// a1⊗(b1⊗c2 + b2⊗c1) + a2⊗(b1⊗c3 + b3⊗c1).
inline Tensor333<Rational> orbit17() {
    return Tensor333<Rational>::from_terms({{0, 0, 1, 1}, {0, 1, 0, 1}, {1, 0, 2, 1}, {1, 2, 0, 1}});
}

// a1⊗(b1⊗c1 + b2⊗c2) + a2⊗(b1⊗c2 + b2⊗c3).
inline Tensor333<Rational> orbit18() {
    return Tensor333<Rational>::from_terms({{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 2, 1}});
}

// Primes apply the cyclic factor permutation a->b->c->a once per prime.
inline Tensor333<Rational> primed(const Tensor333<Rational>& t, int primes) {
    Tensor333<Rational> r = t;
    for (int i = 0; i < primes; ++i) r = permute_factors(r, kCyclicABC);
    return r;
}

// Random tensor supported on a random p×q×r coordinate block, then moved by a random group element.
inline Tensor333<Rational> sub_generic(int p, int q, int r, std::uint64_t seed, int bound = 5) {
    if (p < 0 || p > 3 || q < 0 || q > 3 || r < 0 || r > 3) throw std::invalid_argument("block sizes must lie in 0..3");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(-bound, bound);
    Tensor333<Rational> t;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j)
            for (int k = 0; k < r; ++k) t(static_cast<std::size_t>(i), static_cast<std::size_t>(j), static_cast<std::size_t>(k)) = Rational(d(rng));
    return act(random_group_element(rng, Rational(0)), t);
}

}  // namespace trifocal
