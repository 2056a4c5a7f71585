#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "partition.hpp"

namespace trifocal {

inline constexpr int kMaxLabelDegree = 9;

inline std::int64_t factorial(int n) {
    std::int64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// z_ρ = prod_k k^{m_k} m_k!; the class of cycle type ρ has d!/z_ρ elements.
inline std::int64_t centralizer_order(const Partition& rho) {
    std::map<int, int> mult;
    for (int x : rho.parts()) ++mult[x];
    std::int64_t z = 1;
    for (auto [k, m] : mult) {
        for (int i = 0; i < m; ++i) z *= k;
        z *= factorial(m);
    }
    return z;
}

inline std::int64_t class_size(const Partition& rho) { return factorial(rho.size()) / centralizer_order(rho); }

namespace detail {
// Murnaghan-Nakayama on beta-sets: remove rim hooks of the successive cycle lengths.
inline std::int64_t mn_rec(std::vector<int> beta, const std::vector<int>& rho, std::size_t at) {
    if (at == rho.size()) return 1;
    const int r = rho[at];
    std::int64_t total = 0;
    for (std::size_t idx = 0; idx < beta.size(); ++idx) {
        const int b = beta[idx];
        const int nb = b - r;
        if (nb < 0) continue;
        bool clash = false;
        int between = 0;
        for (int x : beta) {
            if (x == nb) clash = true;
            if (x > nb && x < b) ++between;
        }
        if (clash) continue;
        std::vector<int> next = beta;
        next[idx] = nb;
        std::int64_t sub = mn_rec(next, rho, at + 1);
        total += (between % 2 ? -sub : sub);
    }
    return total;
}
}  // namespace detail

inline std::int64_t mn_character(const Partition& lambda, const Partition& cls) {
    if (lambda.size() != cls.size()) throw std::invalid_argument("character: partitions of different sizes");
    const int n = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (n - 1 - i);
    return detail::mn_rec(beta, cls.parts(), 0);
}

inline std::int64_t kronecker(const IsotypicLabel& l) {
    const int d = l.degree();
    if (d > kMaxLabelDegree) throw std::invalid_argument("kronecker: degree above the supported bound");
    if (d == 0) return 1;
    std::int64_t sum = 0;
    for (const auto& rho : partitions(d))
        sum += class_size(rho) * mn_character(l.lambda, rho) * mn_character(l.mu, rho) * mn_character(l.nu, rho);
    std::int64_t df = factorial(d);
    if (sum % df != 0 || sum < 0) throw std::logic_error("kronecker: character sum not a nonnegative multiple of d!");
    return sum / df;
}

// Dimension of the GL(3) irreducible with highest weight λ.
inline std::int64_t weyl_dim(const Partition& lambda) {
    if (lambda.length() > 3) throw std::invalid_argument("weyl_dim: more than 3 parts");
    auto l = lambda.padded3();
    std::int64_t num = 1, den = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            num *= l[i] - l[j] + j - i;
            den *= j - i;
        }
    return num / den;
}

inline std::int64_t weyl_dim(const IsotypicLabel& l) { return weyl_dim(l.lambda) * weyl_dim(l.mu) * weyl_dim(l.nu); }

}  // namespace trifocal
