#include <gtest/gtest.h>

#include <random>

#include <trifocal/orbits/normal_forms.hpp>
#include <trifocal/tensor/tensor.hpp>

using namespace trifocal;

using QT = Tensor333<Rational>;
using QMat = DenseMatrix<Rational>;
using QVec = std::vector<Rational>;

namespace {

QVec random_vec(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-4, 4);
    return {Rational(d(rng)), Rational(d(rng)), Rational(d(rng))};
}

Rational dot(const QVec& a, const QVec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

}  // namespace

TEST(Slice, NormalFormC1) {
    auto z1 = slice(trifocal_slice_form(), Axis::C, 0);
    QMat expect(3, 3);
    expect(0, 1) = Rational(-1);
    expect(2, 0) = Rational(1);
    EXPECT_EQ(z1, expect);
}

TEST(Slice, ZeroAndRankOne) {
    for (Axis a : kAxes)
        for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(slice(QT{}, a, i).is_zero());
    EXPECT_THROW(slice(QT{}, Axis::A, 3), std::invalid_argument);
    std::mt19937_64 rng(1);
    auto u = random_vec(rng), v = random_vec(rng), w = random_vec(rng);
    auto t = QT::outer(u, v, w);
    for (std::size_t i = 0; i < 3; ++i) {
        auto s = slice(t, Axis::A, i);
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(s(j, k), u[i] * v[j] * w[k]);
    }
}

TEST(Flattening, Examples) {
    EXPECT_TRUE(flattening(QT{}, Axis::B).is_zero());
    // C-axis rows hold Z1, Z2, Z3 entry by entry.
    auto fc = flattening(trifocal_slice_form(), Axis::C);
    for (std::size_t k = 0; k < 3; ++k) {
        auto z = slice(trifocal_slice_form(), Axis::C, k);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(fc(k, 3 * i + j), z(i, j));
    }
    // F: rows e23 - e32, e31 - e13, e12 - e21 in 3x3 block coordinates.
    auto fa = flattening(f_tensor(), Axis::A);
    QMat expect(3, 9);
    auto e = [](int r, int c) { return static_cast<std::size_t>(3 * (r - 1) + (c - 1)); };
    expect(0, e(2, 3)) = 1; expect(0, e(3, 2)) = -1;
    expect(1, e(3, 1)) = 1; expect(1, e(1, 3)) = -1;
    expect(2, e(1, 2)) = 1; expect(2, e(2, 1)) = -1;
    EXPECT_EQ(fa, expect);
    EXPECT_EQ(rank(fa), 3u);
}

TEST(Ranks, NormalFormsAndZero) {
    EXPECT_EQ(frank(trifocal_slice_form()), (RankTriple{3, 3, 3}));
    EXPECT_EQ(prank(trifocal_slice_form()), (RankTriple{3, 3, 2}));
    EXPECT_EQ(prank(trifocal_normal_form()), (RankTriple{3, 3, 2}));
    EXPECT_EQ(frank(QT{}), (RankTriple{0, 0, 0}));
    EXPECT_EQ(prank(QT{}), (RankTriple{0, 0, 0}));
    EXPECT_EQ(prank(f_tensor()), (RankTriple{2, 2, 2}));
    EXPECT_EQ(frank(sub_generic(2, 3, 3, 4)), (RankTriple{2, 3, 3}));
}

TEST(Pencil, NormalFormCAndSkewF) {
    // C pencil of the slice form: [[0, -x1, 0], [0, -x2, 0], [x1, x2 - x3, x3]] is congruent to the stated form;
    // check its entries directly.
    auto p = pencil(trifocal_slice_form(), Axis::C);
    EXPECT_EQ(p.entry(0, 1), TernaryForm<Rational>::linear(-1, 0, 0));
    EXPECT_EQ(p.entry(2, 0), TernaryForm<Rational>::linear(1, 0, 0));
    EXPECT_EQ(p.entry(2, 1), TernaryForm<Rational>::linear(0, 1, -1));
    EXPECT_TRUE(p.determinant().is_zero());
    // F pencil is skew-symmetric with independent entries.
    auto q = pencil(f_tensor(), Axis::A);
    for (std::size_t r = 0; r < 3; ++r) {
        EXPECT_TRUE(q.entry(r, r).is_zero());
        for (std::size_t c = 0; c < 3; ++c) EXPECT_EQ(q.entry(r, c) + q.entry(c, r), TernaryForm<Rational>{});
    }
    EXPECT_EQ(q.entry(1, 2), TernaryForm<Rational>::linear(1, 0, 0));
    EXPECT_TRUE(pencil(QT{}, Axis::B).is_zero());
}

TEST(Pencil, PRankCMatchesDeterminantCoefficients) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 60; ++t) {
        QT x = t % 3 == 0 ? random_orbit_point(trifocal_slice_form(), rng()) : random_tensor(rng, 2, Rational(0));
        auto d = pencil(x, Axis::C).determinant();
        EXPECT_EQ(prank(x).c < 3, d.is_zero());
    }
}

TEST(Action, IdentityScalingAndComposition) {
    std::mt19937_64 rng(3);
    QT t = random_tensor(rng, 3, Rational(0));
    EXPECT_EQ(act(GroupElement<Rational>::identity(), t), t);
    GroupElement<Rational> s{QMat::identity(3).scaled(2), QMat::identity(3).scaled(3), QMat::identity(3).scaled(Rational(-1, 5))};
    EXPECT_EQ(act(s, t), t.scaled(Rational(-6, 5)));
    for (int i = 0; i < 10; ++i) {
        auto g = random_group_element(rng, Rational(0)), h = random_group_element(rng, Rational(0));
        EXPECT_EQ(act(g * h, t), act(g, act(h, t)));
    }
    GroupElement<Rational> singular{QMat(3, 3), QMat::identity(3), QMat::identity(3)};
    EXPECT_THROW(act(singular, t), std::invalid_argument);
}

TEST(Action, RanksAreInvariant) {
    std::mt19937_64 rng(4);
    for (const QT& nf : {trifocal_slice_form(), f_tensor(), orbit17(), orbit18(), sub_generic(2, 3, 3, 9)}) {
        const auto fr = frank(nf), pr = prank(nf);
        for (int i = 0; i < 100; ++i) {
            auto x = act(random_group_element(rng, Rational(0)), nf);
            EXPECT_EQ(frank(x), fr);
            EXPECT_EQ(prank(x), pr);
        }
    }
}

TEST(Contract, Examples) {
    std::mt19937_64 rng(5);
    QT t = random_tensor(rng, 3, Rational(0));
    QVec zero(3, Rational(0));
    EXPECT_EQ(contract(t, zero, random_vec(rng)), zero);
    auto u = random_vec(rng), v = random_vec(rng), w = random_vec(rng), u2 = random_vec(rng), v2 = random_vec(rng);
    auto r = contract(QT::outer(u, v, w), u2, v2);
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(r[k], dot(u, u2) * dot(v, v2) * w[k]);
}

TEST(Contract, Equivariance) {
    // contract(g.t, u, v) = gC contract(t, gA^T u, gB^T v)
    std::mt19937_64 rng(6);
    for (int i = 0; i < 30; ++i) {
        QT t = random_tensor(rng, 3, Rational(0));
        auto g = random_group_element(rng, Rational(0));
        auto u = random_vec(rng), v = random_vec(rng);
        EXPECT_EQ(contract(act(g, t), u, v), g.gC * contract(t, g.gA.transpose() * u, g.gB.transpose() * v));
    }
}

TEST(RandomOrbitPoint, Determinism) {
    auto a = random_orbit_point(trifocal_slice_form(), 42), b = random_orbit_point(trifocal_slice_form(), 42);
    EXPECT_EQ(a, b);
    EXPECT_EQ(prank(a), (RankTriple{3, 3, 2}));
    EXPECT_TRUE(random_orbit_point(QT{}, 42).is_zero());
}

TEST(Slices, RoundTrip) {
    std::mt19937_64 rng(7);
    QT t = random_tensor(rng, 5, Rational(0));
    for (Axis a : kAxes) {
        std::array<QMat, 3> s{slice(t, a, 0), slice(t, a, 1), slice(t, a, 2)};
        EXPECT_EQ(assemble_from_slices(s, a), t);
        auto p = pencil(t, a);
        EXPECT_EQ(assemble_from_slices(p.coeff, a), t);
    }
}

TEST(PermuteFactors, CyclicThriceIsIdentity) {
    std::mt19937_64 rng(8);
    QT t = random_tensor(rng, 5, Rational(0));
    QT c = permute_factors(permute_factors(permute_factors(t, kCyclicABC), kCyclicABC), kCyclicABC);
    EXPECT_EQ(c, t);
    QT once = permute_factors(t, kCyclicABC);
    EXPECT_EQ(once(2, 0, 1), t(0, 1, 2));
    EXPECT_EQ(frank(primed(orbit17(), 1)), (RankTriple{3, 2, 3}));
    EXPECT_THROW(permute_factors(t, {0, 0, 1}), std::invalid_argument);
}
