#include <gtest/gtest.h>

#include <random>

#include <trifocal/ideal/generator_modules.hpp>
#include <trifocal/orbits/normal_forms.hpp>
#include <trifocal/poly/generators.hpp>

using namespace trifocal;

using QP = Poly27<Rational>;

namespace {

GradedGeneratorSet m3_set() { return GradedGeneratorSet({{3, m3_generators(Axis::C)}}); }

std::uint64_t choose(std::uint64_t n, std::uint64_t k) { return binomial(n, k); }

}  // namespace

TEST(GeneratorSet, Validation) {
    GradedGeneratorSet g;
    EXPECT_THROW(g.add(2, {QP::var(0, 0, 0)}), std::invalid_argument);
    EXPECT_THROW(g.add(1, {QP::var(0, 0, 0) + QP::var(1, 1, 1)}), std::invalid_argument);
    EXPECT_THROW(g.add(1, {QP::var(0, 0, 0), QP::var(0, 0, 0).scaled(Rational(2))}), std::invalid_argument);
    EXPECT_THROW(g.add(1, {QP{}}), std::invalid_argument);
    g.add(1, {QP::var(0, 0, 0)});
    EXPECT_EQ(g.count(1), 1u);
    EXPECT_EQ(g.total(), 1u);
}

TEST(IdealDim, BlockedMatchesUnblocked) {
    auto g = m3_set();
    for (int d = 0; d <= 4; ++d) EXPECT_EQ(ideal_dim_in_degree(g, d), ideal_dim_unblocked(g, d)) << d;
    std::mt19937_64 rng(3);
    std::vector<QP> quads;
    for (int i = 0; i < 6; ++i) {
        Monomial27 m;
        m.multiply_variable(static_cast<int>(rng() % kVars));
        m.multiply_variable(static_cast<int>(rng() % kVars));
        quads.push_back(QP::monomial(m, Rational(1)));
    }
    std::sort(quads.begin(), quads.end(), [](const QP& a, const QP& b) { return a.leading().first < b.leading().first; });
    quads.erase(std::unique(quads.begin(), quads.end()), quads.end());
    GradedGeneratorSet q({{2, quads}});
    for (int d = 2; d <= 4; ++d) EXPECT_EQ(ideal_dim_in_degree(q, d), ideal_dim_unblocked(q, d)) << d;
}

TEST(IdealDim, CubicIdealDimensions) {
    auto g = m3_set();
    EXPECT_EQ(ideal_dim_in_degree(g, 2), 0u);
    EXPECT_EQ(ideal_dim_in_degree(g, 3), 10u);
    EXPECT_EQ(ideal_dim_in_degree(g, 4), 270u);
    EXPECT_EQ(ideal_dim_in_degree(g, 5), 3780u);
}

TEST(IdealDim, LinearIdealHasPolynomialRingQuotient) {
    GradedGeneratorSet g({{1, {QP::var(2, 1, 0)}}});
    for (int d = 0; d <= 4; ++d) EXPECT_EQ(hilbert_quotient(g, d), choose(25 + d, d)) << d;
}

TEST(IdealDim, MonotoneInGenerators) {
    auto base = m3_set();
    auto more = base;
    more.add(3, {determinant_witness()});
    for (int d = 3; d <= 4; ++d) EXPECT_GE(ideal_dim_in_degree(more, d), ideal_dim_in_degree(base, d));
    EXPECT_EQ(ideal_dim_in_degree(more, 3), 11u);
}

TEST(DegreeCap, RefusesAboveCap) {
    auto g = m3_set();
    EXPECT_THROW(check_degree_cap(g, 7, {}), DegreeCapExceeded);
    IdealOptions stretch;
    stretch.degree_cap = kStretchDegreeCap;
    EXPECT_NO_THROW(check_degree_cap(g, 7, stretch));
    stretch.degree_cap = 8;
    EXPECT_THROW(check_degree_cap(g, 8, stretch), std::invalid_argument);
    try {
        check_degree_cap(g, 7, {});
    } catch (const DegreeCapExceeded& e) {
        EXPECT_EQ(e.rows_estimate, 10 * ambient_dim(4));
        EXPECT_EQ(e.cols_estimate, ambient_dim(7));
    }
}

TEST(MinimalGenerator, Membership) {
    auto g = m3_set();
    auto m3 = m3_generators(Axis::C);
    QP prod = m3[0] * QP::var(0, 0, 0);
    EXPECT_TRUE(minimal_generator_test(prod, g));
    auto h = hw_space(IsotypicLabel::parse("221", "221", "311")).basis.at(0);
    EXPECT_FALSE(minimal_generator_test(h, g));
    EXPECT_THROW(minimal_generator_test(QP::var(0, 0, 0) + QP::var(0, 0, 0) * QP::var(1, 1, 1), g), std::invalid_argument);
}

TEST(Vanishing, DegreeThreeLabels) {
    IdealOptions opt;
    auto m3 = vanishing_subspace(hw_space(IsotypicLabel::parse("111", "111", "3")), opt);
    EXPECT_EQ(m3.ideal_multiplicity, 1u);
    EXPECT_EQ(m3.kronecker, 1u);
    auto f = vanishing_subspace(hw_space(IsotypicLabel::parse("3", "111", "111")), opt);
    EXPECT_EQ(f.ideal_multiplicity, 0u);
    auto adj = vanishing_subspace(hw_space(IsotypicLabel::parse("21", "21", "21")), opt);
    EXPECT_EQ(adj.ideal_multiplicity, 0u);
}

TEST(Vanishing, FreshBatchRejectsWrongKernel) {
    // Kernel computed on points of the zero tensor vanishes trivially and must fail re-verification.
    auto h = hw_space(IsotypicLabel::parse("3", "111", "111"));
    std::vector<Tensor333<Rational>> zeros(4);
    TrifocalPointSource src(5);
    auto fresh = src.batch(8);
    EXPECT_FALSE(vanishing_subspace(h, zeros, fresh).has_value());
    auto pts = src.batch(2);
    EXPECT_TRUE(vanishing_subspace(h, pts, fresh).has_value());
}

TEST(Discover, ThroughDegreeFive) {
    auto inv = discover(5);
    EXPECT_EQ(inv.counts(), (std::map<int, std::size_t>{{3, 10}, {5, 81}}));
    ASSERT_EQ(inv.degrees.size(), 5u);
    std::vector<IsotypicLabel> found;
    for (const auto& m : inv.degrees[4].modules) found.push_back(m.label);
    std::sort(found.begin(), found.end());
    std::vector<IsotypicLabel> want = generator_module_labels().at(5);
    std::sort(want.begin(), want.end());
    EXPECT_EQ(found, want);
    EXPECT_EQ(hilbert_quotient(inv.generators, 5), 166050u);
}

TEST(Discover, RespectsCap) {
    IdealOptions opt;
    opt.degree_cap = 4;
    EXPECT_THROW(discover(5, opt), DegreeCapExceeded);
}

TEST(Nzd, ToyZeroDivisor) {
    GradedGeneratorSet j({{2, {QP::var(0, 0, 0) * QP::var(0, 0, 1)}}});
    auto rep = graded_nonzerodivisor_check(j, QP::var(0, 0, 0), 3);
    EXPECT_FALSE(rep.nonzerodivisor);
    ASSERT_TRUE(rep.failing_degree.has_value());
    EXPECT_EQ(*rep.failing_degree, 2);
}

TEST(Nzd, RegularElementOnMonomialIdeal) {
    GradedGeneratorSet j({{2, {QP::var(1, 1, 1) * QP::var(2, 2, 2)}}});
    auto rep = graded_nonzerodivisor_check(j, QP::var(0, 0, 0), 4);
    EXPECT_TRUE(rep.nonzerodivisor);
    EXPECT_EQ(rep.table.size(), 5u);
    for (const auto& row : rep.table) EXPECT_EQ(row.h_jf, row.predicted);
}

TEST(Nzd, HilbertSeriesPrimeIndependentThroughFour) {
    auto g = m3_set();
    IdealOptions big;
    big.prime = kSecondPrime;
    for (int d = 0; d <= 4; ++d) EXPECT_EQ(hilbert_quotient(g, d), hilbert_quotient(g, d, big));
}

TEST(GeneratorModules, LowDegreeModulesVanishOnTrifocalPoints) {
    auto m = generator_module(IsotypicLabel::parse("111", "111", "3"));
    EXPECT_EQ(m.basis.size(), 10u);
    TrifocalPointSource src(77);
    for (int i = 0; i < 20; ++i) EXPECT_TRUE(module_vanishes(m, src.next()));
    EXPECT_TRUE(module_vanishes(m, f_tensor()));
    EXPECT_FALSE(module_vanishes(m, orbit11()));
}
