#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace boxworld;

TEST(Chsh, PrBoxReachesFour) {
    const SystemSpec sys = systems::gbits(2);
    StateVector pr = pr_box_state();
    EXPECT_EQ(chsh_value(pr), 4);
    EXPECT_EQ(evaluate(sys, chsh_functional(), pr), 4);
    EXPECT_EQ(correlator(pr, 1, 1), -1);
    EXPECT_EQ(correlator(pr, 0, 1), 1);
}

TEST(Chsh, UniformAndProductStates) {
    const SystemSpec sys = systems::gbits(2);
    EXPECT_EQ(chsh_value(uniform_state(sys)), 0);
    auto s = product_state({local_pure_state(sys.site(0), {0, 0}), local_pure_state(sys.site(1), {0, 0})});
    EXPECT_EQ(chsh_value(s), 2);
}

TEST(Chsh, FunctionalMatchesCorrelatorForm) {
    const SystemSpec sys = systems::gbits(2);
    auto vrep = enumerate_vertices(sys);
    for (int trial = 0; trial < 20; ++trial) {
        StateVector s = boxworld::testing::random_vertex_mixture(vrep.vertices);
        EXPECT_EQ(evaluate(sys, chsh_functional(), s), chsh_value(s));
    }
}

TEST(Chsh, VertexMaxima) {
    const SystemSpec sys = systems::gbits(2);
    auto vrep = enumerate_vertices(sys);
    std::vector<bool> pure;
    for (auto c : vrep.classes) pure.push_back(c == VertexClass::pure_product);
    EXPECT_EQ(max_over_vertices(sys, chsh_functional(), vrep, &pure).value, 2);
    auto best = max_over_vertices(sys, chsh_functional(), vrep);
    EXPECT_EQ(best.value, 4);
    EXPECT_EQ(vrep.classes[best.index], VertexClass::non_local);
    for (const auto& v : vrep.vertices) EXPECT_LE(abs(chsh_value(v)), 4);
}

TEST(Chsh, EveryFamilyMemberHasTheSameBounds) {
    const SystemSpec sys = systems::gbits(2);
    auto vrep = enumerate_vertices(sys);
    std::vector<bool> pure;
    for (auto c : vrep.classes) pure.push_back(c == VertexClass::pure_product);
    auto family = chsh_family();
    ASSERT_EQ(family.size(), 8u);
    for (const auto& f : family) {
        EXPECT_EQ(max_over_vertices(sys, f, vrep, &pure).value, 2);
        EXPECT_EQ(max_over_vertices(sys, f, vrep).value, 4);
    }
}

TEST(Chsh, FamilyValuesAreInvariantUnderReversibleMaps) {
    const SystemSpec sys = systems::gbits(2);
    EffectCatalog cat(sys);
    auto vrep = enumerate_vertices(cat);
    auto family = chsh_family();
    std::vector<EffectCoeffs> effects;
    for (const auto& f : family) effects.push_back(functional_effect(sys, f));
    auto values = [&](const StateVector& s) {
        std::vector<Rational> out;
        for (const auto& e : effects) out.push_back(evaluate(e, s));
        std::sort(out.begin(), out.end());
        return out;
    };
    const TransformGroup group = trivial_group(cat);
    for (const auto& t : group.elements())
        for (const auto& v : vrep.vertices) ASSERT_EQ(values(t.apply(v)), values(v));
}

TEST(Chsh, RejectsWrongSystems) {
    EXPECT_THROW(chsh_value(uniform_state(systems::gbits(1))), Error);
    EXPECT_THROW(correlator(pr_box_state(), 2, 0), Error);
    BellFunctional f;
    f.set({0, 2}, {0, 0}, 1);
    EXPECT_THROW(functional_effect(systems::gbits(2), f), Error);
}
