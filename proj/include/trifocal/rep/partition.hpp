#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "../poly/monomial.hpp"

namespace trifocal {

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : p_(std::move(parts)) {
        p_.erase(std::remove(p_.begin(), p_.end(), 0), p_.end());
        for (std::size_t i = 0; i < p_.size(); ++i) {
            if (p_[i] < 0) throw std::invalid_argument("negative part");
            if (i && p_[i] > p_[i - 1]) throw std::invalid_argument("parts must be weakly decreasing");
        }
    }
    // Compact digit string such as "221"; parts must be single digits.
    static Partition parse(const std::string& s) {
        std::vector<int> v;
        for (char ch : s) {
            if (ch == ',' || ch == ' ' || ch == '(' || ch == ')') continue;
            if (ch < '0' || ch > '9') throw std::invalid_argument("bad partition '" + s + "'");
            v.push_back(ch - '0');
        }
        return Partition(v);
    }

    const std::vector<int>& parts() const { return p_; }
    int size() const { return std::accumulate(p_.begin(), p_.end(), 0); }
    int length() const { return static_cast<int>(p_.size()); }
    int operator[](std::size_t i) const { return i < p_.size() ? p_[i] : 0; }
    std::array<int, 3> padded3() const {
        if (p_.size() > 3) throw std::invalid_argument("more than 3 parts");
        return {(*this)[0], (*this)[1], (*this)[2]};
    }
    Partition conjugate() const {
        std::vector<int> c;
        for (int k = 1; !p_.empty() && k <= p_.front(); ++k)
            c.push_back(static_cast<int>(std::count_if(p_.begin(), p_.end(), [k](int x) { return x >= k; })));
        return Partition(c);
    }
    std::string to_string() const {
        std::string s;
        for (int x : p_) s += x < 10 ? std::to_string(x) : "[" + std::to_string(x) + "]";
        return s.empty() ? "0" : s;
    }
    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.p_ <=> b.p_; }

private:
    std::vector<int> p_;
};

// Partitions of d with at most max_parts parts, in decreasing lex order.
inline std::vector<Partition> partitions(int d, int max_parts = -1) {
    std::vector<Partition> out;
    if (max_parts < 0) max_parts = d;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_parts) return;
        for (int x = std::min(left, cap); x >= 1; --x) {
            cur.push_back(x);
            rec(left - x, x);
            cur.pop_back();
        }
    };
    rec(d, d);
    return out;
}

struct IsotypicLabel {
    Partition lambda, mu, nu;

    IsotypicLabel() = default;
    IsotypicLabel(Partition l, Partition m, Partition n) : lambda(std::move(l)), mu(std::move(m)), nu(std::move(n)) {
        if (lambda.size() != mu.size() || mu.size() != nu.size())
            throw std::invalid_argument("label partitions have different sizes");
    }
    static IsotypicLabel parse(const std::string& a, const std::string& b, const std::string& c) {
        return {Partition::parse(a), Partition::parse(b), Partition::parse(c)};
    }
    int degree() const { return lambda.size(); }
    const Partition& operator[](Axis a) const { return a == Axis::A ? lambda : a == Axis::B ? mu : nu; }
    Weight weight() const { return Weight{{lambda.padded3(), mu.padded3(), nu.padded3()}}; }
    std::string to_string() const {
        return "(" + lambda.to_string() + "," + mu.to_string() + "," + nu.to_string() + ")";
    }
    friend bool operator==(const IsotypicLabel&, const IsotypicLabel&) = default;
    friend auto operator<=>(const IsotypicLabel&, const IsotypicLabel&) = default;
};

inline IsotypicLabel label_of(const Weight& w) {
    if (!w.dominant()) throw std::invalid_argument("weight is not dominant: " + w.to_string());
    return {Partition({w.w[0][0], w.w[0][1], w.w[0][2]}), Partition({w.w[1][0], w.w[1][1], w.w[1][2]}),
            Partition({w.w[2][0], w.w[2][1], w.w[2][2]})};
}

// All labels (λ,μ,ν) of degree d with at most 3 parts each.
inline std::vector<IsotypicLabel> labels_of_degree(int d) {
    auto ps = partitions(d, 3);
    std::vector<IsotypicLabel> out;
    for (const auto& a : ps)
        for (const auto& b : ps)
            for (const auto& c : ps) out.emplace_back(a, b, c);
    return out;
}

}  // namespace trifocal
