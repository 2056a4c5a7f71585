#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "dense_matrix.hpp"

namespace trifocal {

template <ExactField F>
struct SparseEntry {
    std::size_t row, col;
    F value;
};

template <ExactField F>
class SparseMatrix {
public:
    SparseMatrix(std::size_t rows, std::size_t cols, std::vector<SparseEntry<F>> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        e_.erase(std::remove_if(e_.begin(), e_.end(), [](const SparseEntry<F>& x) { return x.value.is_zero(); }),
                 e_.end());
        std::sort(e_.begin(), e_.end(),
                  [](const auto& a, const auto& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (e_[i].row >= rows_ || e_[i].col >= cols_) throw std::out_of_range("sparse entry out of range");
            if (i && e_[i].row == e_[i - 1].row && e_[i].col == e_[i - 1].col)
                throw std::invalid_argument("duplicate sparse entry");
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const { return e_.size(); }
    const std::vector<SparseEntry<F>>& entries() const { return e_; }

    DenseMatrix<F> to_dense(const F& zero = F{}) const {
        DenseMatrix<F> d(rows_, cols_, e_.empty() ? zero : scalar_like(0, e_.front().value));
        for (const auto& x : e_) d(x.row, x.col) = x.value;
        return d;
    }
    SparseMatrix transpose() const {
        std::vector<SparseEntry<F>> t;
        t.reserve(e_.size());
        for (const auto& x : e_) t.push_back({x.col, x.row, x.value});
        return SparseMatrix(cols_, rows_, std::move(t));
    }

private:
    std::size_t rows_, cols_;
    std::vector<SparseEntry<F>> e_;
};

// Row of residues mod p, sorted by column, no zeros.
using ModRow = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// Row echelon basis over F_p grown one sparse row at a time. Incoming rows are
// reduced against the stored pivots with a dense accumulator swept in column order.
class IncrementalEchelon {
public:
    IncrementalEchelon(std::size_t ncols, std::uint64_t p)
        : p_(p), pivot_of_(ncols, -1), acc_(ncols, 0), queued_(ncols, 0) {}

    std::size_t rank() const { return basis_.size(); }
    std::size_t cols() const { return pivot_of_.size(); }

    // True when the row is independent of the rows inserted so far.
    bool insert(const ModRow& r) {
        for (const auto& [c, v] : r) {
            acc_[c] = (acc_[c] + v) % p_;
            if (!queued_[c]) { queued_[c] = 1; heap_.push(c); }
        }
        bool found = false;
        ModRow fresh;
        while (!heap_.empty()) {
            std::uint32_t c = heap_.top();
            heap_.pop();
            queued_[c] = 0;
            std::uint64_t a = acc_[c];
            acc_[c] = 0;
            if (a == 0) continue;
            if (!found && pivot_of_[c] >= 0) {
                const ModRow& b = basis_[static_cast<std::size_t>(pivot_of_[c])];
                std::uint64_t f = p_ - a;
                for (std::size_t k = 1; k < b.size(); ++k) {
                    auto [bc, bv] = b[k];
                    acc_[bc] = (acc_[bc] + f * bv) % p_;
                    if (!queued_[bc]) { queued_[bc] = 1; heap_.push(bc); }
                }
                continue;
            }
            found = true;
            fresh.emplace_back(c, static_cast<std::uint32_t>(a));
        }
        if (!found) return false;
        std::uint64_t inv = inv_mod(fresh.front().second, p_);
        for (auto& e : fresh) e.second = static_cast<std::uint32_t>(e.second * inv % p_);
        pivot_of_[fresh.front().first] = static_cast<std::int64_t>(basis_.size());
        basis_.push_back(std::move(fresh));
        return true;
    }

private:
    std::uint64_t p_;
    std::vector<std::int64_t> pivot_of_;
    std::vector<ModRow> basis_;
    std::vector<std::uint64_t> acc_;
    std::vector<char> queued_;
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap_;
};

// Rank mod p of a list of sparse rows. Columns are relabelled by increasing
// occupancy and rows are fed shortest first (static Markowitz ordering).
// Stops early once `stop_at` is reached.
inline std::size_t sparse_rank_mod_p(std::vector<ModRow> rows, std::size_t ncols, std::uint64_t p,
                                     std::size_t stop_at = static_cast<std::size_t>(-1)) {
    if (ncols == 0 || rows.empty()) return 0;
    std::vector<std::uint32_t> count(ncols, 0);
    for (const auto& r : rows)
        for (const auto& [c, v] : r) ++count[c];
    std::vector<std::uint32_t> order(ncols), relabel(ncols);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return count[a] < count[b]; });
    for (std::uint32_t i = 0; i < ncols; ++i) relabel[order[i]] = i;
    for (auto& r : rows)
        for (auto& e : r) e.first = relabel[e.first];
    std::stable_sort(rows.begin(), rows.end(), [](const ModRow& a, const ModRow& b) { return a.size() < b.size(); });

    const std::size_t limit = std::min({stop_at, ncols, rows.size()});
    IncrementalEchelon ech(ncols, p);
    for (const auto& r : rows) {
        if (ech.rank() >= limit) break;
        ech.insert(r);
    }
    return ech.rank();
}

inline std::size_t sparse_rank(const SparseMatrix<Fp>& m) {
    if (m.nnz() == 0) return 0;
    const std::uint64_t p = m.entries().front().value.modulus();
    std::vector<ModRow> rows(m.rows());
    for (const auto& e : m.entries()) {
        if (e.value.modulus() != p) throw std::invalid_argument("prime field mismatch in sparse matrix");
        rows[e.row].emplace_back(static_cast<std::uint32_t>(e.col), static_cast<std::uint32_t>(e.value.value()));
    }
    return sparse_rank_mod_p(std::move(rows), m.cols(), p);
}

inline constexpr std::size_t kRationalSparseLimit = 250 * 250;

// Exact over Q only for small inputs; large rational systems must be reduced mod p.
inline std::size_t sparse_rank(const SparseMatrix<Rational>& m) {
    if (m.rows() * m.cols() > kRationalSparseLimit)
        throw std::invalid_argument("sparse_rank over Q refused for a " + std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()) + " matrix: use prime field");
    return rank(m.to_dense());
}

}  // namespace trifocal
