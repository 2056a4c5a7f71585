#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "poly27.hpp"

namespace trifocal {

// "c*T_i_j_k^e*..." with 1-based indices, terms in decreasing monomial order.
inline std::string to_text(const Poly27<Rational>& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c.sign() < 0 ? -c : c;
        s += s.empty() ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
        std::string body;
        for (int v = 0; v < kVars; ++v) {
            if (!m[v]) continue;
            auto [i, j, k] = var_triple(v);
            if (!body.empty()) body += "*";
            body += "T_" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "_" + std::to_string(k + 1);
            if (m[v] > 1) body += "^" + std::to_string(m[v]);
        }
        if (body.empty()) s += a.to_string();
        else if (a == Rational(1)) s += body;
        else s += a.to_string() + "*" + body;
    }
    return s;
}

namespace detail {
class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    Poly27<Rational> parse() {
        Poly27<Rational> f;
        skip();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [m, c] = term();
            f.add_term(m, sign < 0 ? -c : c);
            skip();
        }
        return f;
    }

private:
    std::pair<Monomial27, Rational> term() {
        Rational c(1);
        bool have = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = number();
            have = true;
            skip();
            if (peek() == '*') { ++pos_; skip(); }
        }
        Monomial27 m;
        bool any = false;
        while (!at_end() && is_var_start(peek())) {
            auto [v, e] = factor();
            m.multiply_variable(v, e);
            any = true;
            skip();
            if (peek() == '*') { ++pos_; skip(); }
        }
        if (!have && !any) fail("expected a term");
        return {m, c};
    }
    Rational number() {
        std::size_t b = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (peek() == '/') {
            ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("bad fraction");
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        return Rational::parse(s_.substr(b, pos_ - b));
    }
    static bool is_var_start(char ch) { return ch == 'T' || ch == 'a' || ch == 'b' || ch == 'c'; }
    int digit() {
        char ch = peek();
        if (ch < '1' || ch > '3') fail("index must be 1, 2 or 3");
        ++pos_;
        return ch - '1';
    }
    std::pair<int, int> factor() {
        int v;
        char ch = peek();
        ++pos_;
        if (ch == 'T') {
            expect('_');
            int i = digit();
            expect('_');
            int j = digit();
            expect('_');
            int k = digit();
            v = var_index(i, j, k);
        } else {
            if (peek() == '_') ++pos_;
            bool brace = peek() == '{';
            if (brace) ++pos_;
            int i = digit();
            int j = digit();
            if (brace) expect('}');
            v = var_index(i, j, ch - 'a');
        }
        int e = 1;
        skip();
        if (peek() == '^') {
            ++pos_;
            bool brace = peek() == '{';
            if (brace) ++pos_;
            std::size_t b = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (b == pos_) fail("missing exponent");
            e = std::stoi(std::string(s_.substr(b, pos_ - b)));
            if (brace) expect('}');
        }
        return {v, e};
    }
    void expect(char ch) {
        if (peek() != ch) fail(std::string("expected '") + ch + "'");
        ++pos_;
    }
    void skip() {
        while (!at_end()) {
            char ch = s_[pos_];
            if (std::isspace(static_cast<unsigned char>(ch)) || ch == '\\') ++pos_;
            else break;
        }
    }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    bool at_end() const { return pos_ >= s_.size(); }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};
}  // namespace detail

// Accepts the T_i_j_k form and the a_{ij}/b_{ij}/c_{ij} letter form.
inline Poly27<Rational> parse_poly(std::string_view s) { return detail::PolyParser(s).parse(); }

inline Poly27<Rational> load_poly(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream body;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        body << line << '\n';
    }
    return parse_poly(body.str());
}

// [{"c": "3", "m": [[i,j,k,e], ...]}, ...] with 1-based indices.
inline nlohmann::json to_json(const Poly27<Rational>& f) {
    nlohmann::json out = nlohmann::json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        nlohmann::json m = nlohmann::json::array();
        for (int v = 0; v < kVars; ++v)
            if (it->first[v]) {
                auto [i, j, k] = var_triple(v);
                m.push_back({i + 1, j + 1, k + 1, it->first[v]});
            }
        out.push_back({{"c", it->second.to_string()}, {"m", m}});
    }
    return out;
}

inline Poly27<Rational> poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be a list of terms");
    Poly27<Rational> f;
    for (const auto& t : j) {
        Rational c = t.at("c").is_string() ? Rational::parse(t.at("c").get<std::string>())
                                           : Rational(t.at("c").get<long long>());
        Monomial27 m;
        for (const auto& x : t.at("m")) {
            int i = x.at(0).get<int>() - 1, jj = x.at(1).get<int>() - 1, k = x.at(2).get<int>() - 1, e = x.at(3).get<int>();
            if (i < 0 || i > 2 || jj < 0 || jj > 2 || k < 0 || k > 2 || e < 0) throw std::invalid_argument("bad monomial entry");
            m.multiply_variable(var_index(i, jj, k), e);
        }
        f.add_term(m, c);
    }
    return f;
}

}  // namespace trifocal
