#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <memory>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "../exact/dense_matrix.hpp"
#include "../exact/sparse_matrix.hpp"
#include "../poly/integral.hpp"
#include "../poly/operators.hpp"
#include "characters.hpp"

namespace trifocal {

class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Large prime for internal rank certificates; results never depend on it.
inline constexpr std::uint64_t kCertificatePrime = 2147483647;
inline constexpr std::uint64_t kFallbackPrime = 1000003;

struct HWSpace {
    IsotypicLabel label;
    std::vector<Poly27<Rational>> basis;
    std::size_t weight_space_dim = 0;
};

struct HWOptions {
    std::uint64_t seed = 1;
    bool certify = true;
};

namespace detail {

struct Filling {
    std::vector<int> row;  // row index per tableau position
    int sign;
};

// Column-antisymmetrized fillings of the column-reading tableau of λ.
inline std::vector<Filling> column_fillings(const Partition& lambda) {
    std::vector<Filling> out{{{}, 1}};
    const Partition columns = lambda.conjugate();
    for (int len : columns.parts()) {
        std::vector<int> perm(static_cast<std::size_t>(len));
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<Filling> next;
        do {
            int inv = 0;
            for (int a = 0; a < len; ++a)
                for (int b = a + 1; b < len; ++b)
                    if (perm[a] > perm[b]) ++inv;
            for (const auto& f : out) {
                Filling g = f;
                g.row.insert(g.row.end(), perm.begin(), perm.end());
                g.sign *= inv % 2 ? -1 : 1;
                next.push_back(std::move(g));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        out = std::move(next);
    }
    return out;
}

// Image in S^d of u_λ ⊗ σ·u_μ ⊗ τ·u_ν; a highest weight vector of weight (λ,μ,ν).
inline Poly27<Rational> symmetrized(const std::vector<Filling>& fa, const std::vector<Filling>& fb,
                                    const std::vector<Filling>& fc, const std::vector<int>& sigma,
                                    const std::vector<int>& tau) {
    std::unordered_map<Monomial27, long long, MonomialHash> acc;
    const std::size_t d = sigma.size();
    for (const auto& a : fa)
        for (const auto& b : fb)
            for (const auto& c : fc) {
                Monomial27 m;
                for (std::size_t p = 0; p < d; ++p)
                    m.multiply_variable(var_index(a.row[p], b.row[static_cast<std::size_t>(sigma[p])],
                                                  c.row[static_cast<std::size_t>(tau[p])]));
                acc[m] += a.sign * b.sign * c.sign;
            }
    Poly27<Rational> f;
    for (const auto& [m, c] : acc)
        if (c) f.add_term(m, Rational(c));
    return f;
}

struct WeightIndex {
    std::vector<Monomial27> monomials;
    std::unordered_map<Monomial27, std::uint32_t, MonomialHash> index;

    explicit WeightIndex(std::vector<Monomial27> ms) : monomials(std::move(ms)) {
        for (std::uint32_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
    }
    ModRow row_of(const Poly27<Rational>& f, std::uint64_t p) const {
        ModRow r;
        for (const auto& [m, c] : f.terms()) {
            auto it = index.find(m);
            if (it == index.end()) throw std::logic_error("term outside the weight space");
            std::uint32_t v = residue(c, p);
            if (v) r.emplace_back(it->second, v);
        }
        return r;
    }
};

// Rank of the six raising operators on the weight space, capped at `cap`.
inline std::size_t raising_rank(const Weight& w, const WeightIndex& src, std::uint64_t p, std::size_t cap) {
    std::vector<ModRow> rows(src.monomials.size());
    std::uint32_t offset = 0;
    for (const auto& op : raising_ops()) {
        Weight tw = shifted(w, op);
        if (!tw.consistent()) continue;
        WeightIndex dst(weight_space_basis(w.degree(), tw));
        for (std::size_t s = 0; s < src.monomials.size(); ++s) {
            auto img = apply(op, Poly27<Rational>::monomial(src.monomials[s], Rational(1)));
            for (const auto& [m, c] : img.terms()) rows[s].emplace_back(offset + dst.index.at(m), residue(c, p));
        }
        offset += static_cast<std::uint32_t>(dst.monomials.size());
    }
    return sparse_rank_mod_p(std::move(rows), offset, p, cap);
}

// Reduced row echelon form over Q of the coefficient vectors, rows made primitive.
inline std::vector<Poly27<Rational>> canonical_basis(const std::vector<Poly27<Rational>>& fs, const WeightIndex& wi) {
    if (fs.empty()) return {};
    DenseMatrix<Rational> m(fs.size(), wi.monomials.size());
    for (std::size_t r = 0; r < fs.size(); ++r)
        for (const auto& [mono, c] : fs[r].terms()) m(r, wi.index.at(mono)) = c;
    auto e = rref(m);
    std::vector<Poly27<Rational>> out;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        Poly27<Rational> f;
        for (std::size_t c = 0; c < wi.monomials.size(); ++c) f.add_term(wi.monomials[c], e.reduced(r, c));
        out.push_back(primitive(f));
    }
    return out;
}

}  // namespace detail

// Highest weight vectors of weight (λ,μ,ν) in degree-d polynomials. Candidates are
// Young-symmetrized products of column determinants; the dimension is certified
// against the kernel of the raising operators on the weight space.
inline HWSpace hw_space(const IsotypicLabel& l, const HWOptions& opt = {}) {
    const int d = l.degree();
    if (d < 1 || d > kMaxLabelDegree) throw std::invalid_argument("hw_space: degree must be in 1..9");
    if (l.lambda.length() > 3 || l.mu.length() > 3 || l.nu.length() > 3)
        throw std::invalid_argument("hw_space: partitions need at most 3 parts");
    const Weight w = l.weight();
    detail::WeightIndex wi(weight_space_basis(d, w));
    const std::size_t N = wi.monomials.size();
    const auto m = static_cast<std::size_t>(kronecker(l));

    std::vector<Poly27<Rational>> found;
    if (m > 0) {
        auto fa = detail::column_fillings(l.lambda), fb = detail::column_fillings(l.mu), fc = detail::column_fillings(l.nu);
        std::seed_seq seq{opt.seed, static_cast<std::uint64_t>(w.key())};
        std::mt19937_64 rng(seq);
        std::vector<int> sigma(static_cast<std::size_t>(d)), tau(static_cast<std::size_t>(d));
        std::iota(sigma.begin(), sigma.end(), 0);
        std::iota(tau.begin(), tau.end(), 0);
        IncrementalEchelon ech(N, kCertificatePrime);
        const std::size_t max_tries = 64 + 64 * m;
        for (std::size_t t = 0; t < max_tries && found.size() < m; ++t) {
            if (t > 0) {
                std::shuffle(sigma.begin(), sigma.end(), rng);
                std::shuffle(tau.begin(), tau.end(), rng);
            }
            auto f = detail::symmetrized(fa, fb, fc, sigma, tau);
            if (f.is_zero()) continue;
            if (ech.insert(wi.row_of(f, kCertificatePrime))) found.push_back(std::move(f));
        }
        if (found.size() != m)
            throw InternalConsistencyError("hw_space " + l.to_string() + ": found " + std::to_string(found.size()) +
                                           " independent vectors, Kronecker coefficient is " + std::to_string(m));
        for (const auto& f : found)
            if (!is_highest_weight(f))
                throw InternalConsistencyError("hw_space " + l.to_string() + ": symmetrized vector not raising-annihilated");
    }
    if (opt.certify) {
        // rank <= N - m holds over Q because the m vectors lie in the kernel.
        std::size_t want = N - m;
        std::size_t r = detail::raising_rank(w, wi, kCertificatePrime, want);
        if (r != want) r = detail::raising_rank(w, wi, kFallbackPrime, want);
        if (r != want)
            throw InternalConsistencyError("hw_space " + l.to_string() + ": raising kernel has dimension " +
                                           std::to_string(N - r) + ", Kronecker coefficient is " + std::to_string(m));
    }
    return {l, detail::canonical_basis(found, wi), N};
}

// Dimension of the joint kernel of the raising operators on the weight space of l, mod p.
inline std::size_t raising_kernel_dim(const IsotypicLabel& l, std::uint64_t p = kCertificatePrime) {
    const Weight w = l.weight();
    detail::WeightIndex wi(weight_space_basis(l.degree(), w));
    return wi.monomials.size() - detail::raising_rank(w, wi, p, static_cast<std::size_t>(-1));
}

// Basis of the G-module generated by a highest weight vector, closed under the six
// lowering operators; elements are weight vectors with primitive integer coefficients.
inline std::vector<Poly27<Rational>> module_span(const Poly27<Rational>& h) {
    auto w0 = h.weight();
    if (!w0 || !h.degree()) throw std::invalid_argument("module_span: input is not a homogeneous weight vector");
    if (!w0->dominant() || !is_highest_weight(h)) throw std::invalid_argument("module_span: input is not a highest weight vector");
    const auto expected = static_cast<std::size_t>(weyl_dim(label_of(*w0)));
    const int d = *h.degree();

    struct Block {
        detail::WeightIndex wi;
        IncrementalEchelon ech;
    };
    std::unordered_map<std::uint64_t, std::unique_ptr<Block>> blocks;
    auto block_of = [&](const Weight& w) -> Block& {
        auto& b = blocks[w.key()];
        if (!b) {
            detail::WeightIndex wi(weight_space_basis(d, w));
            std::size_t n = wi.monomials.size();
            b = std::make_unique<Block>(Block{std::move(wi), IncrementalEchelon(n, kCertificatePrime)});
        }
        return *b;
    };

    std::vector<Poly27<Rational>> basis;
    std::vector<Weight> weights;
    auto top = primitive(h);
    block_of(*w0).ech.insert(block_of(*w0).wi.row_of(top, kCertificatePrime));
    basis.push_back(top);
    weights.push_back(*w0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (const auto& op : lowering_ops()) {
            auto g = apply(op, basis[i]);
            if (g.is_zero()) continue;
            Weight w = shifted(weights[i], op);
            Block& b = block_of(w);
            if (!b.ech.insert(b.wi.row_of(g, kCertificatePrime))) continue;
            basis.push_back(primitive(g));
            weights.push_back(w);
            if (basis.size() > expected)
                throw InternalConsistencyError("module_span: closure exceeds the Weyl dimension " + std::to_string(expected));
        }
    }
    if (basis.size() != expected)
        throw InternalConsistencyError("module_span: closure has dimension " + std::to_string(basis.size()) +
                                       ", Weyl dimension is " + std::to_string(expected));
    return basis;
}

}  // namespace trifocal
