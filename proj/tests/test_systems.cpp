#include <gtest/gtest.h>

#include "hchain/systems/systems.hpp"

using namespace hchain;
using namespace hchain::systems;

TEST(Systems, ClassicalIntegrals) {
  for (auto f : {Family::q, Family::c}) {
    auto s = classical_system(f);
    EXPECT_TRUE(exact::poisson_bracket(s.gens.H, s.gens.A).is_zero()) << family_name(f);
    EXPECT_TRUE(exact::poisson_bracket(s.gens.H, s.gens.B).is_zero()) << family_name(f);
    EXPECT_FALSE(exact::poisson_bracket(s.gens.A, s.gens.B).is_zero()) << family_name(f);
  }
}

TEST(Systems, QuantumIntegrals) {
  for (auto f : {Family::q, Family::c}) {
    auto s = quantum_system(f);
    EXPECT_TRUE(weyl::commutator(s.gens.H, s.gens.A).is_zero()) << family_name(f);
    auto hb = weyl::commutator(s.gens.H, s.gens.B);
    EXPECT_TRUE(hb.is_zero()) << family_name(f) << " " << hb.size() << " " << hb.to_string().substr(0, 400);
    EXPECT_FALSE(weyl::commutator(s.gens.A, s.gens.B).is_zero()) << family_name(f);
  }
}

TEST(Systems, QuantumReducesToClassical) {
  for (auto f : {Family::q, Family::c}) {
    auto q = classical_limit(quantum_system(f));
    auto c = classical_system(f);
    EXPECT_EQ(q.H, c.gens.H);
    EXPECT_EQ(q.A, c.gens.A);
    EXPECT_EQ(q.B, c.gens.B) << (q.B - c.gens.B).to_string();
  }
}
