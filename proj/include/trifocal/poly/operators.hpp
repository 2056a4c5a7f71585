#pragma once

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "poly27.hpp"

namespace trifocal {

inline int replace_index(int v, Axis axis, int to) {
    auto t = var_triple(v);
    t[static_cast<std::size_t>(axis)] = to;
    return var_index(t[0], t[1], t[2]);
}

// E_rs of the chosen factor acting as a derivation: sum over the other two
// indices of T_{..r..} * d/dT_{..s..}. Moves one unit of weight from s to r.
template <ExactField F>
Poly27<F> polarize(Axis axis, int r, int s, const Poly27<F>& f) {
    if (r == s || r < 0 || r > 2 || s < 0 || s > 2) throw std::invalid_argument("polarization needs distinct indices in 0..2");
    Poly27<F> out;
    for (const auto& [m, c] : f.terms()) {
        for (int v = 0; v < kVars; ++v) {
            int e = m[v];
            if (!e || var_triple(v)[static_cast<std::size_t>(axis)] != s) continue;
            Monomial27 q = m;
            q.divide_variable(v);
            q.multiply_variable(replace_index(v, axis, r));
            out.add_term(q, c * scalar_like(e, c));
        }
    }
    return out;
}

// Lowering: r > s (weight moves to a larger index). T_111 -> T_211 under lower(A,1,0).
template <ExactField F>
Poly27<F> lower(Axis axis, int r, int s, const Poly27<F>& f) {
    if (r <= s) throw std::invalid_argument("lower needs r > s");
    return polarize(axis, r, s, f);
}

// Raising: r < s.
template <ExactField F>
Poly27<F> raise(Axis axis, int r, int s, const Poly27<F>& f) {
    if (r >= s) throw std::invalid_argument("raise needs r < s");
    return polarize(axis, r, s, f);
}

struct RootOp {
    Axis axis;
    int r, s;
};

// Simple-root operators E_01, E_12 per factor.
inline const std::array<RootOp, 6>& raising_ops() {
    static const std::array<RootOp, 6> ops = {{{Axis::A, 0, 1}, {Axis::A, 1, 2}, {Axis::B, 0, 1},
                                               {Axis::B, 1, 2}, {Axis::C, 0, 1}, {Axis::C, 1, 2}}};
    return ops;
}
inline const std::array<RootOp, 6>& lowering_ops() {
    static const std::array<RootOp, 6> ops = {{{Axis::A, 1, 0}, {Axis::A, 2, 1}, {Axis::B, 1, 0},
                                               {Axis::B, 2, 1}, {Axis::C, 1, 0}, {Axis::C, 2, 1}}};
    return ops;
}

template <ExactField F>
Poly27<F> apply(const RootOp& op, const Poly27<F>& f) { return polarize(op.axis, op.r, op.s, f); }

template <ExactField F>
bool is_highest_weight(const Poly27<F>& f) {
    for (const auto& op : raising_ops())
        if (!apply(op, f).is_zero()) return false;
    return true;
}

inline Weight shifted(Weight w, const RootOp& op) {
    auto& v = w.w[static_cast<std::size_t>(op.axis)];
    ++v[static_cast<std::size_t>(op.r)];
    --v[static_cast<std::size_t>(op.s)];
    return w;
}

}  // namespace trifocal
