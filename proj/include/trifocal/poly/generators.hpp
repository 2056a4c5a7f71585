#pragma once

#include <array>
#include <map>
#include <vector>

#include "operators.hpp"

namespace trifocal {

// Exponents (α,β,γ) of the ten cubic monomials x1^α x2^β x3^γ, in decreasing lex order.
inline const std::array<std::array<int, 3>, 10>& cubic_slots() {
    static const std::array<std::array<int, 3>, 10> s = {{{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
                                                         {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}}};
    return s;
}

// The ten coefficients of det(x1 S1 + x2 S2 + x3 S3) for the symbolic slices along `axis`.
inline std::vector<Poly27<Rational>> m3_generators(Axis axis) {
    auto entry = [axis](int slot, int r, int c) {
        switch (axis) {
            case Axis::A: return var_index(slot, r, c);
            case Axis::B: return var_index(r, slot, c);
            default: return var_index(r, c, slot);
        }
    };
    static const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    static const std::array<int, 6> sign = {1, -1, -1, 1, 1, -1};
    std::map<std::array<int, 3>, Poly27<Rational>> coeff;
    for (int p = 0; p < 6; ++p)
        for (int s0 = 0; s0 < 3; ++s0)
            for (int s1 = 0; s1 < 3; ++s1)
                for (int s2 = 0; s2 < 3; ++s2) {
                    std::array<int, 3> ex{};
                    ++ex[s0]; ++ex[s1]; ++ex[s2];
                    Monomial27 m = Monomial27::variable(entry(s0, 0, perms[p][0])) *
                                   Monomial27::variable(entry(s1, 1, perms[p][1])) *
                                   Monomial27::variable(entry(s2, 2, perms[p][2]));
                    coeff[ex].add_term(m, Rational(sign[p]));
                }
    std::vector<Poly27<Rational>> out;
    for (const auto& slot : cubic_slots()) out.push_back(coeff[slot]);
    return out;
}

// All thirty cubics over the three axes (A, then B, then C).
inline std::vector<Poly27<Rational>> s3_m3() {
    std::vector<Poly27<Rational>> out;
    for (Axis a : kAxes)
        for (auto& f : m3_generators(a)) out.push_back(std::move(f));
    return out;
}

// det [[a11,a12,a13],[b11,b12,b13],[c11,c12,c13]] with a_ij = T_ij1, b_ij = T_ij2, c_ij = T_ij3.
inline Poly27<Rational> determinant_witness() {
    Poly27<Rational> f;
    static const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    static const std::array<int, 6> sign = {1, -1, -1, 1, 1, -1};
    for (int p = 0; p < 6; ++p) {
        Monomial27 m;
        for (int row = 0; row < 3; ++row) m.multiply_variable(var_index(0, perms[p][row], row));
        f.add_term(m, Rational(sign[p]));
    }
    return f;
}

}  // namespace trifocal
