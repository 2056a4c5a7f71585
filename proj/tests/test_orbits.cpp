#include <gtest/gtest.h>

#include <random>

#include <trifocal/camera/camera.hpp>
#include <trifocal/orbits/orbits.hpp>

using namespace trifocal;

using QT = Tensor333<Rational>;

namespace {

const NormalForm& entry(const std::vector<NormalForm>& cat, const std::string& name) {
    for (const auto& nf : cat)
        if (nf.name == name) return nf;
    throw std::out_of_range(name);
}

bool m6_nonzero(const Signature& s, const char* a, const char* b, const char* c) {
    auto l = IsotypicLabel::parse(a, b, c);
    for (const auto& [label, vanishes] : s.m6_vanishing)
        if (label == l) return !vanishes;
    throw std::out_of_range(l.to_string());
}

}  // namespace

TEST(NormalForms, NurmievDecoding) {
    QT t = decode_nurmiev({149});
    EXPECT_EQ(t(0, 0, 2), Rational(1));
    EXPECT_THROW(decode_nurmiev({419}), std::invalid_argument);
    EXPECT_THROW(decode_nurmiev({1490}), std::invalid_argument);
    EXPECT_THROW(decode_nurmiev({137}), std::invalid_argument);
}

TEST(NormalForms, OrbitElevenIsAPermutedTrifocalTensor) {
    auto s = is_trifocal(orbit11());
    EXPECT_FALSE(s.trifocal);
    EXPECT_EQ(s.prank, (RankTriple{2, 3, 3}));
    EXPECT_TRUE(is_trifocal(orbit11(), true).trifocal);
    EXPECT_TRUE(is_trifocal(primed(orbit11(), 2)).trifocal);
}

TEST(Catalog, LowDegreeSignatures) {
    auto cat = catalog();
    EXPECT_EQ(cat.size(), 13u);
    auto sig = [&](const std::string& n) { return signature(entry(cat, n).tensor, false); };

    auto t = sig("trifocal-11''");
    EXPECT_EQ(t.frank, (RankTriple{3, 3, 3}));
    EXPECT_EQ(t.prank, (RankTriple{3, 3, 2}));
    EXPECT_EQ(t.m3_vanishing, (std::array<bool, 3>{false, false, true}));

    auto f = sig("F");
    EXPECT_EQ(f.prank, (RankTriple{2, 2, 2}));
    EXPECT_EQ(f.m3_vanishing, (std::array<bool, 3>{true, true, true}));

    EXPECT_EQ(sig("Sub233-generic").frank.a, 2);
    EXPECT_EQ(sig("Sub323-generic").frank.b, 2);
    EXPECT_EQ(sig("Sub332-generic").frank.c, 2);
    EXPECT_EQ(sig("17").frank, (RankTriple{2, 3, 3}));
    EXPECT_EQ(sig("18").frank, (RankTriple{2, 2, 3}));
}

TEST(Catalog, Components) {
    auto cat = catalog();
    EXPECT_EQ(classify_component(entry(cat, "trifocal-11''").tensor), Component::Trifocal);
    EXPECT_EQ(classify_component(entry(cat, "trifocal-slices").tensor), Component::Trifocal);
    EXPECT_EQ(classify_component(entry(cat, "F").tensor), Component::PRank222);
    EXPECT_EQ(classify_component(entry(cat, "11").tensor), Component::NotInVM3);
    EXPECT_EQ(classify_component(entry(cat, "Sub233-generic").tensor), Component::Sub233);
    EXPECT_EQ(classify_component(entry(cat, "Sub323-generic").tensor), Component::Sub323);
    EXPECT_EQ(classify_component(entry(cat, "Sub332-generic").tensor), Component::NotInVM3);
    EXPECT_EQ(component_name(Component::PRank222), "PRank222");
}

TEST(Classify, GroupInvariant) {
    std::mt19937_64 rng(4);
    for (const auto& nf : catalog()) {
        const auto c = classify_component(nf.tensor);
        for (int i = 0; i < 10; ++i)
            EXPECT_EQ(classify_component(act(random_group_element(rng, Rational(0)), nf.tensor)), c) << nf.name;
    }
}

TEST(IsTrifocal, CamerasAccepted) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        auto v = is_trifocal(trifocal_from_cameras(random_camera_triple<Rational>(rng)));
        EXPECT_TRUE(v.trifocal) << v.reason;
        EXPECT_EQ(v.reason, "P-Rank (3,3,2), F-Rank (3,3,3)");
    }
}

TEST(IsTrifocal, RejectionsAndReasons) {
    EXPECT_EQ(is_trifocal(f_tensor()).reason, "P-Rank (2,2,2), too low");
    EXPECT_EQ(is_trifocal(sub_generic(2, 3, 3, 3)).reason, "P-Rank (3,2,2), too low");
    EXPECT_EQ(is_trifocal(sub_generic(3, 2, 2, 3)).reason, "P-Rank (2,2,2), too low");
    auto v = is_trifocal(primed(trifocal_normal_form(), 1));
    EXPECT_FALSE(v.trifocal);
    EXPECT_NE(v.reason.find("not (3,3,2) in this order"), std::string::npos);
    std::mt19937_64 rng(6);
    for (int i = 0; i < 50; ++i) {
        auto r = is_trifocal(random_tensor(rng, 5, Rational(0)));
        EXPECT_FALSE(r.trifocal);
        EXPECT_EQ(r.reason, "P-Rank (3,3,3)");
    }
    auto sub = is_trifocal(sub_generic(2, 3, 3, 8));
    EXPECT_FALSE(sub.trifocal);
}

TEST(IsTrifocal, CoordinateChangeInvariant) {
    for (const auto& nf : catalog())
        for (std::uint64_t s = 1; s <= 5; ++s) EXPECT_EQ(is_trifocal(nf.tensor, false, s).trifocal, is_trifocal(nf.tensor).trifocal) << nf.name;
}

TEST(Isotropic, PairsOnFAndOrbit18) {
    EXPECT_TRUE(has_isotropic_pair(f_tensor()));
    EXPECT_TRUE(has_isotropic_pair(orbit17()));
    EXPECT_FALSE(has_isotropic_pair(orbit18()));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10; ++i) {
        GroupElement<Rational> g{DenseMatrix<Rational>::identity(3), DenseMatrix<Rational>::identity(3),
                                 random_group_element(rng, Rational(0)).gC};
        EXPECT_FALSE(has_isotropic_pair(act(g, orbit18())));
    }
}

TEST(Degeneration, Reports) {
    auto r17 = degeneration_check(DegenerationTarget::Orbit17);
    EXPECT_TRUE(r17.holds) << r17.reason;
    EXPECT_FALSE(r17.steps.empty());
    auto r18 = degeneration_check(DegenerationTarget::Orbit18);
    EXPECT_FALSE(r18.holds);
    EXPECT_NE(r18.reason.find("isotropic"), std::string::npos);
    auto rs = degeneration_check(DegenerationTarget::FInSub233);
    EXPECT_FALSE(rs.holds);
    EXPECT_EQ(target_name(DegenerationTarget::FInSub233), "F-in-Sub233");
}

TEST(HighDegree, FSeparatedByDegreeFive) {
    auto s = signature(f_tensor());
    EXPECT_FALSE(s.m5_vanishing);
    auto t = signature(trifocal_normal_form());
    EXPECT_TRUE(t.m5_vanishing);
    for (const auto& [l, v] : t.m6_vanishing) EXPECT_TRUE(v) << l.to_string();
}

TEST(HighDegree, SeventeenAndEighteenSeparatedByDegreeSix) {
    auto s17 = signature(orbit17());
    EXPECT_TRUE(s17.m5_vanishing);
    EXPECT_TRUE(m6_nonzero(s17, "33", "222", "411"));
    auto s17p = signature(primed(orbit17(), 1));
    EXPECT_TRUE(m6_nonzero(s17p, "222", "33", "411"));
    for (int k = 0; k < 3; ++k) {
        auto s = signature(primed(orbit18(), k));
        bool any = false;
        for (const auto& [l, v] : s.m6_vanishing) any = any || !v;
        EXPECT_TRUE(any) << "18 primed " << k;
    }
    EXPECT_TRUE(m6_nonzero(signature(orbit18()), "33", "33", "222"));
    EXPECT_TRUE(m6_nonzero(signature(primed(orbit18(), 1)), "222", "33", "33"));
}
