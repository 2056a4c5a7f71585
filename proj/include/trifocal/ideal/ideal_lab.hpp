#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "../exact/dense_matrix.hpp"
#include "../exact/sparse_matrix.hpp"
#include "../orbits/normal_forms.hpp"
#include "../poly/fast_eval.hpp"
#include "../poly/integral.hpp"
#include "../rep/hw.hpp"

namespace trifocal {

inline constexpr int kDefaultDegreeCap = 6;
inline constexpr int kStretchDegreeCap = 7;

class DegreeCapExceeded : public std::runtime_error {
public:
    DegreeCapExceeded(int degree, int cap, std::uint64_t rows, std::uint64_t cols)
        : std::runtime_error("degree " + std::to_string(degree) + " exceeds the cap " + std::to_string(cap) + " (" +
                             (rows ? "about " + std::to_string(rows) + " product rows over " : std::string()) +
                             std::to_string(cols) + " monomials)"),
          rows_estimate(rows), cols_estimate(cols) {}
    std::uint64_t rows_estimate, cols_estimate;
};

// Homogeneous weight vectors, linearly independent within each degree.
class GradedGeneratorSet {
public:
    GradedGeneratorSet() = default;
    explicit GradedGeneratorSet(std::map<int, std::vector<Poly27<Rational>>> by_degree) {
        for (auto& [d, fs] : by_degree) add(d, std::move(fs));
    }

    // All-or-nothing: a rejected batch leaves the set unchanged.
    void add(int d, std::vector<Poly27<Rational>> fs) {
        if (d < 1) throw std::invalid_argument("generator degree must be positive");
        std::vector<Weight> ws;
        for (const auto& f : fs) {
            if (f.is_zero()) throw std::invalid_argument("zero generator in degree " + std::to_string(d));
            if (f.degree() != d) throw std::invalid_argument("generator is not homogeneous of degree " + std::to_string(d));
            auto w = f.weight();
            if (!w) throw std::invalid_argument("generator is not a weight vector");
            ws.push_back(*w);
        }
        auto it = gens_.find(d);
        std::vector<Poly27<Rational>> slot = it == gens_.end() ? std::vector<Poly27<Rational>>{} : it->second;
        slot.insert(slot.end(), std::make_move_iterator(fs.begin()), std::make_move_iterator(fs.end()));
        if (!independent(slot))
            throw std::invalid_argument("generators of degree " + std::to_string(d) + " are linearly dependent");
        gens_[d] = std::move(slot);
        auto& wd = weights_[d];
        wd.insert(wd.end(), ws.begin(), ws.end());
    }

    const std::map<int, std::vector<Poly27<Rational>>>& by_degree() const { return gens_; }
    const std::vector<Weight>& weights(int d) const { return weights_.at(d); }
    std::size_t count(int d) const {
        auto it = gens_.find(d);
        return it == gens_.end() ? 0 : it->second.size();
    }
    std::size_t total() const {
        std::size_t n = 0;
        for (const auto& [d, fs] : gens_) n += fs.size();
        return n;
    }
    bool empty() const { return total() == 0; }

private:
    static bool independent(const std::vector<Poly27<Rational>>& fs) {
        std::unordered_map<Monomial27, std::uint32_t, MonomialHash> index;
        std::vector<ModRow> rows;
        for (const auto& f : fs) {
            ModRow r;
            for (const auto& [m, c] : f.terms()) {
                auto [it, fresh] = index.emplace(m, static_cast<std::uint32_t>(index.size()));
                std::uint32_t v = residue(c, kCertificatePrime);
                if (v) r.emplace_back(it->second, v);
            }
            std::sort(r.begin(), r.end());
            rows.push_back(std::move(r));
        }
        return sparse_rank_mod_p(std::move(rows), index.size(), kCertificatePrime) == fs.size();
    }

    std::map<int, std::vector<Poly27<Rational>>> gens_;
    std::map<int, std::vector<Weight>> weights_;
};

struct IdealOptions {
    std::uint64_t prime = kDefaultPrime;
    std::uint64_t seed = 1;
    int oversample = 2;
    int degree_cap = kDefaultDegreeCap;
    int max_retries = 3;
    std::function<void(const std::string&)> progress;
};

inline void report_progress(const IdealOptions& opt, const std::string& msg) {
    if (opt.progress) opt.progress(msg);
}

inline std::uint64_t product_rows_estimate(const GradedGeneratorSet& g, int d) {
    std::uint64_t n = 0;
    for (const auto& [e, fs] : g.by_degree())
        if (e <= d) n += fs.size() * ambient_dim(d - e);
    return n;
}

inline void check_degree_cap(const GradedGeneratorSet& g, int d, const IdealOptions& opt) {
    if (opt.degree_cap > kStretchDegreeCap)
        throw std::invalid_argument("degree cap above " + std::to_string(kStretchDegreeCap) + " is not supported");
    if (d > opt.degree_cap) throw DegreeCapExceeded(d, opt.degree_cap, product_rows_estimate(g, d), ambient_dim(d));
}

namespace detail {

// One weight block: products (generator, multiplier monomial) landing in a fixed weight.
struct ProductRef {
    int degree;
    std::uint32_t gen;
    Monomial27 mult;
};

inline ModRow product_row(const Poly27<Rational>& h, const Monomial27& mult,
                          std::unordered_map<Monomial27, std::uint32_t, MonomialHash>& index, std::uint64_t p) {
    ModRow r;
    for (const auto& [m, c] : h.terms()) {
        std::uint32_t v = residue(c, p);
        if (!v) continue;
        auto [it, fresh] = index.emplace(m * mult, static_cast<std::uint32_t>(index.size()));
        r.emplace_back(it->second, v);
    }
    std::sort(r.begin(), r.end());
    return r;
}

inline std::size_t block_rank(const GradedGeneratorSet& g, const std::vector<ProductRef>& refs, std::uint64_t p) {
    std::unordered_map<Monomial27, std::uint32_t, MonomialHash> index;
    std::vector<ModRow> rows;
    rows.reserve(refs.size());
    for (const auto& r : refs) rows.push_back(product_row(g.by_degree().at(r.degree)[r.gen], r.mult, index, p));
    return sparse_rank_mod_p(std::move(rows), index.size(), p);
}

// Rows spanning the weight-w part of the degree-d slice of the ideal.
inline std::vector<ProductRef> products_in_weight(const GradedGeneratorSet& g, int d, const Weight& w) {
    std::vector<ProductRef> out;
    for (const auto& [e, fs] : g.by_degree()) {
        if (e > d) continue;
        const auto& ws = g.weights(e);
        for (std::uint32_t i = 0; i < fs.size(); ++i) {
            Weight rest = w - ws[i];
            if (!rest.consistent() || rest.degree() != d - e) continue;
            for (const auto& m : weight_space_basis(d - e, rest)) out.push_back({e, i, m});
        }
    }
    return out;
}

}  // namespace detail

// dim <g>_d over F_p, summed over independent weight blocks.
inline std::size_t ideal_dim_in_degree(const GradedGeneratorSet& g, int d, const IdealOptions& opt = {}) {
    if (d < 0) return 0;
    check_degree_cap(g, d, opt);
    std::unordered_map<std::uint64_t, std::vector<detail::ProductRef>> blocks;
    for (const auto& [e, fs] : g.by_degree()) {
        if (e > d) continue;
        const auto& ws = g.weights(e);
        for (const auto& m : monomials_of_degree(d - e)) {
            const Weight wm = weight_of(m);
            for (std::uint32_t i = 0; i < fs.size(); ++i) blocks[(ws[i] + wm).key()].push_back({e, i, m});
        }
    }
    std::vector<std::uint64_t> keys;
    keys.reserve(blocks.size());
    for (const auto& [k, v] : blocks) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    std::size_t total = 0;
    for (auto k : keys) {
        auto& refs = blocks[k];
        total += detail::block_rank(g, refs, opt.prime);
        std::vector<detail::ProductRef>().swap(refs);
    }
    return total;
}

// Same dimension from one unblocked matrix; for cross-checking small degrees.
inline std::size_t ideal_dim_unblocked(const GradedGeneratorSet& g, int d, const IdealOptions& opt = {}) {
    if (d < 0) return 0;
    check_degree_cap(g, d, opt);
    std::vector<detail::ProductRef> all;
    for (const auto& [e, fs] : g.by_degree()) {
        if (e > d) continue;
        for (const auto& m : monomials_of_degree(d - e))
            for (std::uint32_t i = 0; i < fs.size(); ++i) all.push_back({e, i, m});
    }
    return detail::block_rank(g, all, opt.prime);
}

inline std::uint64_t hilbert_quotient(const GradedGeneratorSet& g, int d, const IdealOptions& opt = {}) {
    if (d < 0) return 0;
    return ambient_dim(d) - ideal_dim_in_degree(g, d, opt);
}

// True iff h lies in the span of monomial × generator products of its weight.
inline bool minimal_generator_test(const Poly27<Rational>& h, const GradedGeneratorSet& g, const IdealOptions& opt = {}) {
    auto d = h.degree();
    auto w = h.weight();
    if (!d || !w) throw std::invalid_argument("minimal_generator_test: h must be a homogeneous weight vector");
    if (h.is_zero()) return true;
    auto refs = detail::products_in_weight(g, *d, *w);
    std::unordered_map<Monomial27, std::uint32_t, MonomialHash> index;
    for (const auto& m : weight_space_basis(*d, *w)) index.emplace(m, static_cast<std::uint32_t>(index.size()));
    IncrementalEchelon ech(index.size(), opt.prime);
    for (const auto& r : refs) ech.insert(detail::product_row(g.by_degree().at(r.degree)[r.gen], r.mult, index, opt.prime));
    std::vector<ModRow> probe{detail::product_row(h, Monomial27{}, index, opt.prime)};
    if (probe.front().empty()) return true;
    return !ech.insert(probe.front());
}

// ---- vanishing on the trifocal variety ----

// Exact integer points of the trifocal variety: random group translates of the slice form.
class TrifocalPointSource {
public:
    explicit TrifocalPointSource(std::uint64_t seed, Tensor333<Rational> base = trifocal_slice_form())
        : next_(seed * 1000003ull + 17), base_(std::move(base)) {}
    Tensor333<Rational> next() { return random_orbit_point(base_, next_++); }
    std::vector<Tensor333<Rational>> batch(std::size_t n) {
        std::vector<Tensor333<Rational>> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) out.push_back(next());
        return out;
    }

private:
    std::uint64_t next_;
    Tensor333<Rational> base_;
};

struct VanishingReport {
    IsotypicLabel label;
    std::size_t kronecker = 0;
    std::size_t ideal_multiplicity = 0;
    std::vector<Poly27<Rational>> certificate;
    std::size_t points_used = 0;
    int attempts = 0;
};

namespace detail {

inline DenseMatrix<Rational> evaluation_matrix(const std::vector<CompiledPoly>& fs, const std::vector<Tensor333<Rational>>& pts,
                                               int max_degree) {
    DenseMatrix<Rational> m(pts.size(), fs.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        auto ip = IntegerPoint::from(pts[i], max_degree);
        for (std::size_t j = 0; j < fs.size(); ++j)
            m(i, j) = ip ? ip->evaluate(fs[j]) : evaluate(fs[j].source(), pts[i]);
    }
    return m;
}

}  // namespace detail

// Kernel of the (oversample·m)×m evaluation matrix, re-verified on `fresh` points.
// Returns nullopt when a certificate fails to vanish on the fresh batch.
inline std::optional<VanishingReport> vanishing_subspace(const HWSpace& h, const std::vector<Tensor333<Rational>>& points,
                                                         const std::vector<Tensor333<Rational>>& fresh) {
    VanishingReport rep{h.label, h.basis.size(), 0, {}, points.size() + fresh.size(), 1};
    if (h.basis.empty()) return rep;
    if (points.size() < h.basis.size()) throw std::invalid_argument("vanishing_subspace: need at least dim(h) points");
    const int d = h.label.degree();
    std::vector<CompiledPoly> comp;
    comp.reserve(h.basis.size());
    for (const auto& f : h.basis) comp.emplace_back(f);
    auto ker = kernel_basis(detail::evaluation_matrix(comp, points, d));
    for (const auto& v : ker) {
        Poly27<Rational> f;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) f += h.basis[j].scaled(v[j]);
        rep.certificate.push_back(primitive(f));
    }
    std::vector<CompiledPoly> cert;
    for (const auto& f : rep.certificate) cert.emplace_back(f);
    auto check = detail::evaluation_matrix(cert, fresh, d);
    for (std::size_t i = 0; i < check.rows(); ++i)
        for (std::size_t j = 0; j < check.cols(); ++j)
            if (!check(i, j).is_zero()) return std::nullopt;
    rep.ideal_multiplicity = rep.certificate.size();
    return rep;
}

// Samples oversample·m points plus a fresh batch, retrying with new points on disagreement.
inline VanishingReport vanishing_subspace(const HWSpace& h, const IdealOptions& opt = {}) {
    TrifocalPointSource src(opt.seed ^ (h.label.weight().key() * 0x9e3779b97f4a7c15ull));
    const std::size_t m = h.basis.size();
    const std::size_t n = std::max<std::size_t>(1, static_cast<std::size_t>(opt.oversample) * m);
    for (int attempt = 1; attempt <= opt.max_retries; ++attempt) {
        auto pts = src.batch(n);
        auto fresh = src.batch(std::max<std::size_t>(8, n));
        if (auto rep = vanishing_subspace(h, pts, fresh)) {
            rep->attempts = attempt;
            return *rep;
        }
    }
    throw InternalConsistencyError("vanishing_subspace " + h.label.to_string() + ": kernel did not survive re-verification after " +
                                   std::to_string(opt.max_retries) + " attempts");
}

// ---- generator discovery ----

struct DiscoveredModule {
    IsotypicLabel label;
    Poly27<Rational> highest_weight;
    std::size_t dimension = 0;
};

struct DegreeDiscovery {
    int degree = 0;
    std::vector<VanishingReport> vanishing;  // labels with a nonzero vanishing multiplicity
    std::vector<DiscoveredModule> modules;   // new minimal generator modules
    std::vector<Poly27<Rational>> generators;
    std::size_t labels_scanned = 0;
};

struct Inventory {
    GradedGeneratorSet generators;
    std::vector<DegreeDiscovery> degrees;
    std::map<int, std::size_t> counts() const {
        std::map<int, std::size_t> c;
        for (const auto& dd : degrees)
            if (!dd.generators.empty()) c[dd.degree] = dd.generators.size();
        return c;
    }
};

// New minimal generators of degree d given all generators of lower degree.
inline DegreeDiscovery discover_degree(const GradedGeneratorSet& lower, int d, const IdealOptions& opt = {}) {
    check_degree_cap(lower, d, opt);
    if (d > kMaxLabelDegree) throw std::invalid_argument("discover_degree: degree too large");
    DegreeDiscovery out;
    out.degree = d;
    for (const auto& l : labels_of_degree(d)) {
        if (kronecker(l) == 0) continue;
        ++out.labels_scanned;
        auto hw = hw_space(l, {opt.seed, true});
        auto rep = vanishing_subspace(hw, opt);
        if (rep.ideal_multiplicity == 0) continue;
        report_progress(opt, "degree " + std::to_string(d) + " " + l.to_string() + ": " +
                                 std::to_string(rep.ideal_multiplicity) + "/" + std::to_string(rep.kronecker) + " vanish");

        const Weight w = l.weight();
        std::unordered_map<Monomial27, std::uint32_t, MonomialHash> index;
        for (const auto& m : weight_space_basis(d, w)) index.emplace(m, static_cast<std::uint32_t>(index.size()));
        IncrementalEchelon ech(index.size(), opt.prime);
        for (const auto& r : detail::products_in_weight(lower, d, w))
            ech.insert(detail::product_row(lower.by_degree().at(r.degree)[r.gen], r.mult, index, opt.prime));
        for (const auto& c : rep.certificate) {
            if (!ech.insert(detail::product_row(c, Monomial27{}, index, opt.prime))) continue;
            auto span = module_span(c);
            out.modules.push_back({l, c, span.size()});
            for (auto& f : span) out.generators.push_back(std::move(f));
        }
        out.vanishing.push_back(std::move(rep));
    }
    return out;
}

// Minimal generators of the ideal of the trifocal variety through degree `max_degree`.
inline Inventory discover(int max_degree, const IdealOptions& opt = {}) {
    Inventory inv;
    for (int d = 1; d <= max_degree; ++d) {
        report_progress(opt, "scanning degree " + std::to_string(d));
        auto dd = discover_degree(inv.generators, d, opt);
        if (!dd.generators.empty()) inv.generators.add(d, dd.generators);
        inv.degrees.push_back(std::move(dd));
    }
    return inv;
}

// ---- graded non-zero-divisor test ----

struct NzdRow {
    int degree;
    std::uint64_t h_j, h_jf, predicted;
};

struct NzdReport {
    bool nonzerodivisor = true;
    std::optional<int> failing_degree;
    std::vector<NzdRow> table;
};

// f is a non-zero-divisor on R/J through degree cap iff H_{J+f}(d) = H_J(d) - H_J(d-e) for all d <= cap.
inline NzdReport graded_nonzerodivisor_check(const GradedGeneratorSet& g, const Poly27<Rational>& f, int cap,
                                             const IdealOptions& opt = {}) {
    auto e = f.degree();
    if (f.is_zero() || !e || !f.weight()) throw std::invalid_argument("nzd check: f must be a nonzero homogeneous weight vector");
    check_degree_cap(g, cap, opt);
    GradedGeneratorSet gf = g;
    gf.add(*e, {f});
    NzdReport rep;
    std::vector<std::uint64_t> hj;
    for (int d = 0; d <= cap; ++d) {
        hj.push_back(hilbert_quotient(g, d, opt));
        const std::uint64_t prev = d >= *e ? hj[static_cast<std::size_t>(d - *e)] : 0;
        const std::uint64_t hjf = hilbert_quotient(gf, d, opt);
        rep.table.push_back({d, hj.back(), hjf, hj.back() - prev});
        report_progress(opt, "nzd degree " + std::to_string(d) + ": " + std::to_string(hjf) + " vs " +
                                 std::to_string(hj.back() - prev));
        if (hjf != hj.back() - prev && rep.nonzerodivisor) {
            rep.nonzerodivisor = false;
            rep.failing_degree = d;
        }
    }
    return rep;
}

}  // namespace trifocal
