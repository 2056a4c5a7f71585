#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "../ideal/generator_modules.hpp"
#include "../poly/generators.hpp"
#include "normal_forms.hpp"

namespace trifocal {

inline constexpr int kCodimSub233 = 7;
inline constexpr int kCodimTrifocal = 8;
inline constexpr int kCodimPRank222 = 10;

struct NormalForm {
    std::string name;
    std::string description;
    Tensor333<Rational> tensor;
};

inline std::vector<NormalForm> catalog(std::uint64_t seed = 1) {
    return {
        {"trifocal-11''", "a1b2c1 + a3b1c1 + a2b2c2 + a3b3c3", trifocal_normal_form()},
        {"trifocal-slices", "general trifocal tensor in slice form", trifocal_slice_form()},
        {"11", "Nurmiev 149 167 248 357", orbit11()},
        {"17", "a1(b1c2 + b2c1) + a2(b1c3 + b3c1)", orbit17()},
        {"17'", "orbit 17 after a->b->c->a", primed(orbit17(), 1)},
        {"17''", "orbit 17 after a->b->c->a twice", primed(orbit17(), 2)},
        {"18", "a1(b1c1 + b2c2) + a2(b1c2 + b2c3)", orbit18()},
        {"18'", "orbit 18 after a->b->c->a", primed(orbit18(), 1)},
        {"18''", "orbit 18 after a->b->c->a twice", primed(orbit18(), 2)},
        {"F", "sum of eps_ijk a_i b_j c_k (lambda = 1)", f_tensor()},
        {"Sub233-generic", "random 2x3x3 block moved by a random group element", sub_generic(2, 3, 3, seed)},
        {"Sub323-generic", "random 3x2x3 block moved by a random group element", sub_generic(3, 2, 3, seed + 1)},
        {"Sub332-generic", "random 3x3x2 block moved by a random group element", sub_generic(3, 3, 2, seed + 2)},
    };
}

inline bool all_vanish(const std::vector<Poly27<Rational>>& fs, const Tensor333<Rational>& t) {
    for (const auto& f : fs)
        if (!evaluate(f, t).is_zero()) return false;
    return true;
}

struct Signature {
    RankTriple frank, prank;
    std::array<bool, 3> m3_vanishing{};
    bool high_degree = false;  // m5 and m6 fields are filled
    bool m5_vanishing = false;
    std::vector<std::pair<IsotypicLabel, bool>> m6_vanishing;
};

// Exact invariants of t. With high_degree, also the vanishing of each degree-5 and degree-6 generator module.
inline Signature signature(const Tensor333<Rational>& t, bool high_degree = true) {
    Signature s;
    s.frank = frank(t);
    s.prank = prank(t);
    for (Axis a : kAxes) s.m3_vanishing[static_cast<std::size_t>(a)] = all_vanish(m3_generators(a), t);
    if (high_degree) {
        s.high_degree = true;
        s.m5_vanishing = true;
        for (const auto& m : generator_modules()) {
            if (m.label.degree() == 5 && !module_vanishes(m, t)) s.m5_vanishing = false;
            if (m.label.degree() == 6) s.m6_vanishing.emplace_back(m.label, module_vanishes(m, t));
        }
    }
    return s;
}

enum class Component { NotInVM3, Sub233, Sub323, PRank222, Trifocal };

inline std::string component_name(Component c) {
    switch (c) {
        case Component::NotInVM3: return "NotInVM3";
        case Component::Sub233: return "Sub233";
        case Component::Sub323: return "Sub323";
        case Component::PRank222: return "PRank222";
        case Component::Trifocal: return "Trifocal";
    }
    return "?";
}

// Priority on overlaps: NotInVM3, Sub233, Sub323, PRank222, Trifocal.
inline Component classify_component(const Tensor333<Rational>& t) {
    if (!all_vanish(m3_generators(Axis::C), t)) return Component::NotInVM3;
    const auto fr = frank(t);
    if (fr.a < 3) return Component::Sub233;
    if (fr.b < 3) return Component::Sub323;
    const auto pr = prank(t);
    if (pr.a <= 2 && pr.b <= 2 && pr.c <= 2) return Component::PRank222;
    return Component::Trifocal;
}

struct TrifocalVerdict {
    bool trifocal = false;
    std::string reason;
    RankTriple prank, frank;
};

// P-Rank exactly (3,3,2) (any order when permutation_tolerant), then F-Rank exactly (3,3,3).
inline TrifocalVerdict is_trifocal(const Tensor333<Rational>& t, bool permutation_tolerant = false,
                                   std::optional<std::uint64_t> coordinate_seed = std::nullopt) {
    Tensor333<Rational> u = t;
    if (coordinate_seed) {
        std::mt19937_64 rng(*coordinate_seed);
        u = act(random_group_element(rng, Rational(0)), t);
    }
    TrifocalVerdict v;
    v.prank = prank(u);
    std::array<int, 3> p{v.prank.a, v.prank.b, v.prank.c};
    std::array<int, 3> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    const std::string pr = "P-Rank " + v.prank.to_string();
    if (sorted == std::array<int, 3>{2, 3, 3}) {
        if (!permutation_tolerant && p != std::array<int, 3>{3, 3, 2}) {
            v.reason = pr + ", not (3,3,2) in this order";
            return v;
        }
    } else {
        const bool low = sorted[0] <= 2 && sorted[1] <= 3 && sorted[2] <= 3;
        v.reason = low ? pr + ", too low" : pr;
        return v;
    }
    v.frank = frank(u);
    if (!(v.frank == RankTriple{3, 3, 3})) {
        v.reason = "F-Rank " + v.frank.to_string() + ", too low";
        return v;
    }
    v.trifocal = true;
    v.reason = "P-Rank " + v.prank.to_string() + ", F-Rank (3,3,3)";
    return v;
}

// ---- degenerations ----

namespace detail {

using UPoly = std::vector<Rational>;  // coefficients, lowest degree first

inline void trim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline UPoly poly_mod(UPoly a, const UPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational q = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        trim(a);
    }
    return a;
}

inline UPoly poly_gcd(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace detail

// True iff some nonzero x in span(a1,a2) and y in span(b1,b2) satisfy t(x,y,.) = 0.
// The condition holds on the whole closure of the F orbit.
inline bool has_isotropic_pair(const Tensor333<Rational>& t) {
    // Rows y = b1, b2 of the 2x3 matrix sum_i x_i t(i,j,k); x = (s,1) or (1,0).
    auto minors_at_infinity = [&] {
        for (std::size_t k1 = 0; k1 < 3; ++k1)
            for (std::size_t k2 = k1 + 1; k2 < 3; ++k2)
                if (!(t(0, 0, k1) * t(0, 1, k2) - t(0, 0, k2) * t(0, 1, k1)).is_zero()) return false;
        return true;
    };
    if (minors_at_infinity()) return true;
    detail::UPoly g;
    for (std::size_t k1 = 0; k1 < 3; ++k1)
        for (std::size_t k2 = k1 + 1; k2 < 3; ++k2) {
            // entry(j,k) = s*t(0,j,k) + t(1,j,k)
            const Rational p0 = t(1, 0, k1), p1 = t(0, 0, k1), q0 = t(1, 1, k2), q1 = t(0, 1, k2);
            const Rational r0 = t(1, 0, k2), r1 = t(0, 0, k2), w0 = t(1, 1, k1), w1 = t(0, 1, k1);
            detail::UPoly m{p0 * q0 - r0 * w0, p0 * q1 + p1 * q0 - r0 * w1 - r1 * w0, p1 * q1 - r1 * w1};
            g = detail::poly_gcd(g, m);
        }
    return g.size() != 1;
}

enum class DegenerationTarget { Orbit17, Orbit18, FInSub233 };

inline std::string target_name(DegenerationTarget t) {
    switch (t) {
        case DegenerationTarget::Orbit17: return "orbit17";
        case DegenerationTarget::Orbit18: return "orbit18";
        case DegenerationTarget::FInSub233: return "F-in-Sub233";
    }
    return "?";
}

struct DegenerationReport {
    DegenerationTarget target;
    bool holds = false;
    std::vector<std::string> steps;
    std::string reason;
};

namespace detail {

inline DenseMatrix<Rational> mat3(std::initializer_list<int> v) {
    std::vector<int> e(v);
    DenseMatrix<Rational> m(3, 3);
    for (std::size_t i = 0; i < 9; ++i) m(i / 3, i % 3) = Rational(e[i]);
    return m;
}

inline GroupElement<Rational> on_axis(Axis a, const DenseMatrix<Rational>& g) {
    auto e = GroupElement<Rational>::identity(Rational(0));
    (a == Axis::A ? e.gA : a == Axis::B ? e.gB : e.gC) = g;
    return e;
}

inline bool in_f_class(const Tensor333<Rational>& t) {
    return prank(t) == RankTriple{2, 2, 2} && frank(t) == RankTriple{3, 3, 3} && all_vanish(s3_m3(), t);
}

inline DegenerationReport replay_orbit17() {
    DegenerationReport r{DegenerationTarget::Orbit17, false, {}, {}};
    const auto F = f_tensor();
    // b1 -> -b1 on the representative.
    const auto target = act(on_axis(Axis::B, mat3({-1, 0, 0, 0, 1, 0, 0, 0, 1})), orbit17());
    auto gA = [](int z) { return mat3({0, 0, -1, 0, 1, 0, z, 0, 0}); };
    auto member = [&](int z) { return act_unchecked(on_axis(Axis::A, gA(z)), F); };
    for (int z : {1, 2, -3}) {
        const auto g = on_axis(Axis::A, gA(z));
        if (!g.invertible() || !in_f_class(act(g, F))) {
            r.reason = "family member at z=" + std::to_string(z) + " is not in the F orbit class";
            return r;
        }
    }
    r.steps.push_back("family gA(z) = [[0,0,-1],[0,1,0],[z,0,0]] acting on F: invertible and in the F class for z = 1, 2, -3");
    const auto f0 = member(0), f1 = member(1);
    for (int z : {2, -3, 5})
        if (!(member(z) == f0 + (f1 - f0).scaled(Rational(z)))) {
            r.reason = "family is not affine in z";
            return r;
        }
    r.steps.push_back("family entries are affine in z; the limit z -> 0 is the value at z = 0");
    if (!(f0 == target)) {
        r.reason = "limit differs from the sign-adjusted orbit 17 representative";
        return r;
    }
    r.steps.push_back("limit equals orbit 17 with b1 -> -b1");
    r.holds = true;
    r.reason = "orbit 17 lies in the closure of the F orbit";
    return r;
}

inline DegenerationReport replay_orbit18() {
    DegenerationReport r{DegenerationTarget::Orbit18, false, {}, {}};
    const auto F = f_tensor();
    // Skew pencil [[0,x,-y],[-x,0,z],[y,-z,0]] with x = a1, y = -a2, z = a3.
    const auto skew = act(on_axis(Axis::A, mat3({0, 0, 1, 0, -1, 0, 1, 0, 0})), F);
    const auto expected = Tensor333<Rational>::from_terms(
        {{2, 1, 2, 1}, {1, 2, 0, -1}, {0, 0, 1, 1}, {2, 2, 1, -1}, {1, 0, 2, 1}, {0, 1, 0, -1}});
    if (!(skew == expected)) {
        r.reason = "substituted skew normal form is not a translate of F";
        return r;
    }
    r.steps.push_back("x = a1, -y = a2, z = a3 in the skew normal form: a translate of F");
    const auto limit = act_unchecked(on_axis(Axis::B, mat3({1, 0, 0, 0, 0, 0, 0, 0, 1})), skew);
    r.steps.push_back("b2 -> 0 limit: pencil [[0,a1,a2],[0,0,0],[-a2,-a3,0]] lies in the closure");
    r.steps.push_back("next step scales row 3 by -a1/a2 and sets z = a2^2/a1: neither is a linear change of coordinates");
    if (!has_isotropic_pair(limit) || !has_isotropic_pair(skew)) {
        r.reason = "isotropic pair missing on the F orbit closure";
        return r;
    }
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i)
        if (!has_isotropic_pair(act(random_group_element(rng, Rational(0)), F))) {
            r.reason = "isotropic pair missing on a random F translate";
            return r;
        }
    r.steps.push_back("every sampled F translate has nonzero x in <a1,a2>, y in <b1,b2> with T(x,y,.) = 0 (closed condition)");
    if (!has_isotropic_pair(orbit18())) {
        r.reason = "orbit 18 has no isotropic pair in <a1,a2> x <b1,b2>, so it is not in the closure of the F orbit";
        return r;
    }
    r.holds = true;
    r.reason = "no obstruction found";
    return r;
}

}  // namespace detail

inline DegenerationReport degeneration_check(DegenerationTarget target) {
    switch (target) {
        case DegenerationTarget::Orbit17: return detail::replay_orbit17();
        case DegenerationTarget::Orbit18: return detail::replay_orbit18();
        case DegenerationTarget::FInSub233: {
            DegenerationReport r{target, false, {}, {}};
            const auto fr = frank(f_tensor());
            r.steps.push_back("closure of Sub233 has A-flattening rank <= 2; F has F-Rank " + fr.to_string());
            r.holds = fr.a <= 2;
            r.reason = r.holds ? "no obstruction found" : "F-Rank obstruction: F is not in the closure of Sub233";
            return r;
        }
    }
    return {target, false, {}, "unknown target"};
}

}  // namespace trifocal
