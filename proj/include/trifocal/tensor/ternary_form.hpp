#pragma once

#include <array>
#include <map>
#include <string>

#include "../exact/scalar.hpp"

namespace trifocal {

// Polynomial in x1, x2, x3 with exact coefficients; entries of a pencil matrix.
template <ExactField F>
class TernaryForm {
public:
    using Exponent = std::array<int, 3>;

    TernaryForm() = default;
    static TernaryForm linear(const F& c1, const F& c2, const F& c3) {
        TernaryForm f;
        f.add_term({1, 0, 0}, c1);
        f.add_term({0, 1, 0}, c2);
        f.add_term({0, 0, 1}, c3);
        return f;
    }

    void add_term(const Exponent& e, const F& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    bool is_zero() const { return t_.empty(); }
    const std::map<Exponent, F>& terms() const { return t_; }
    F coefficient(const Exponent& e, const F& zero) const {
        auto it = t_.find(e);
        return it == t_.end() ? zero : it->second;
    }

    friend TernaryForm operator+(TernaryForm a, const TernaryForm& b) {
        for (const auto& [e, c] : b.t_) a.add_term(e, c);
        return a;
    }
    friend TernaryForm operator-(TernaryForm a, const TernaryForm& b) {
        for (const auto& [e, c] : b.t_) a.add_term(e, -c);
        return a;
    }
    friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
        TernaryForm r;
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        return r;
    }
    friend bool operator==(const TernaryForm& a, const TernaryForm& b) { return a.t_ == b.t_; }

    std::string to_string() const {
        if (t_.empty()) return "0";
        std::string s;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            if (!s.empty()) s += " + ";
            s += "(" + it->second.to_string() + ")";
            for (int v = 0; v < 3; ++v)
                if (it->first[v]) s += "*x" + std::to_string(v + 1) + (it->first[v] > 1 ? "^" + std::to_string(it->first[v]) : "");
        }
        return s;
    }

private:
    std::map<Exponent, F> t_;
};

}  // namespace trifocal
