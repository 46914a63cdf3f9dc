#include <gtest/gtest.h>

#include <random>

#include "hchain/oscillator/block.hpp"

namespace {

using namespace hchain;
using namespace hchain::oscillator;

Poly g(const char* s) { return exact::parse(s, generic_table()); }

// first relation: (Delta A)^2 = beta (A(y+1) + A(y)) + delta
// second: a A^3 + alpha A^2 + 2 beta A b + gamma A + delta b + epsilon = 0
void expect_realization_relations(const Realization& r, const RatFunc& beta, const RatFunc& delta) {
  RatFunc dA = shift(r.A, 1) - r.A;
  EXPECT_EQ(dA * dA, beta * (shift(r.A, 1) + r.A) + delta);
  RatFunc A = r.A;
  RatFunc second = RatFunc(g("a")) * A * A * A + RatFunc(g("alpha")) * A * A + RatFunc(g("2")) * beta * A * r.b +
                   RatFunc(g("gamma")) * A + delta * r.b + RatFunc(g("epsilon"));
  EXPECT_TRUE(second.is_zero());
}

TEST(Realization, BetaZeroSolvesDiagonalRelations) {
  expect_realization_relations(cubic_beta_zero(), RatFunc(Poly(generic_table())), RatFunc(g("sd^2")));
}

TEST(Realization, BetaNonzeroSolvesDiagonalRelations) {
  expect_realization_relations(cubic_beta_nonzero(), RatFunc(g("beta")), RatFunc(g("delta")));
}

TEST(StructureFunction, CubicBetaZeroMatchesPublished) {
  auto s = solve_structure_function(cubic_relations_beta_zero());
  EXPECT_TRUE(s.consistent);
  EXPECT_EQ(as_laurent(s.phi), printed_cubic_beta_zero());
  EXPECT_TRUE(check_relations(cubic_relations_beta_zero(), RatFunc(printed_cubic_beta_zero())).holds());
}

TEST(StructureFunction, QuadraticMatchesPublished) {
  auto s = solve_structure_function(quadratic_relations());
  EXPECT_TRUE(s.consistent);
  EXPECT_EQ(as_laurent(s.phi), printed_quadratic());
}

TEST(StructureFunction, QuadraticWithPublishedCasimirSignIsInconsistent) {
  EXPECT_FALSE(solve_structure_function(quadratic_relations(CasimirForm::published)).consistent);
}

TEST(StructureFunction, BetaNonzeroPublishedRelationsAreInconsistent) {
  EXPECT_FALSE(solve_structure_function(cubic_relations_beta_nonzero(CasimirForm::published)).consistent);
}

TEST(StructureFunction, BetaNonzeroDerivedRelationsAreConsistent) {
  EXPECT_TRUE(solve_structure_function(cubic_relations_beta_nonzero(CasimirForm::derived)).consistent);
}

TEST(StructureFunction, PublishedBetaNonzeroPolynomialFailsBothForms) {
  for (auto reading : {LinearReading::as_printed, LinearReading::leading_sign_distributes}) {
    RatFunc phi(printed_cubic_beta_nonzero(reading));
    EXPECT_EQ(phi.num().max_exponent(generic_table()->index("y")), 14);
    for (auto form : {CasimirForm::published, CasimirForm::derived})
      EXPECT_FALSE(check_relations(cubic_relations_beta_nonzero(form), phi).holds());
  }
}

// With every constant but beta and K set to zero, b = 0 and the product
// Phi(y) rho(y-1) is fixed by the relations.
TEST(StructureFunction, BetaNonzeroCasimirOnlySlice) {
  auto t = generic_table();
  std::map<std::string, Poly> zero;
  for (const char* n : {"a", "alpha", "gamma", "delta", "epsilon", "mu", "nu", "xi", "zeta"}) zero[n] = Poly(t);
  auto r = cubic_relations_beta_nonzero(CasimirForm::derived);
  for (auto* f : {&r.bc_next, &r.bc_here, &r.bc_rhs, &r.cas_next, &r.cas_here, &r.cas_rhs})
    *f = f->substitute(zero, t);
  auto s = solve_structure_function(r);
  ASSERT_TRUE(s.consistent);
  RatFunc rho_prev = shift(cubic_beta_nonzero().rho, -1);
  EXPECT_EQ(s.phi * rho_prev, RatFunc(g("-K"), g("4*beta^2*y*(y - 1)")));
}

TEST(StructureFunction, PublishedBetaNonzeroIsTheUnshiftedCramerSolution) {
  // Each single-constant slice of the published polynomial equals the
  // Phi(y) component of the published relations solved as if Phi(y) and
  // Phi(y+1) were independent.
  auto t = generic_table();
  const std::vector<std::string> all{"a", "alpha", "gamma", "delta", "epsilon", "mu", "nu", "xi", "zeta", "K"};
  Poly printed = printed_cubic_beta_nonzero(LinearReading::as_printed);
  auto rel = cubic_relations_beta_nonzero(CasimirForm::published);
  for (const auto& keep : all) {
    std::map<std::string, Poly> zero;
    for (const auto& n : all)
      if (n != keep) zero[n] = Poly(t);
    auto r = rel;
    for (auto* f : {&r.bc_next, &r.bc_here, &r.bc_rhs, &r.cas_next, &r.cas_here, &r.cas_rhs})
      *f = f->substitute(zero, t);
    auto s = solve_structure_function(r);
    EXPECT_EQ(s.phi, RatFunc(printed.substitute(zero, t))) << keep;
    if (keep != "delta") {
      EXPECT_FALSE(s.consistent) << keep;
    }
  }
}

// Randomized: the beta = 0 solution satisfies both relations pointwise.
TEST(StructureFunction, BetaZeroRelationsHoldAtRandomPoints) {
  auto t = generic_table();
  auto rel = cubic_relations_beta_zero();
  Poly phi = printed_cubic_beta_zero();
  Poly next = shift(phi, 1);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<exact::Scalar> v(t->size());
    for (auto& x : v) {
      x = exact::Scalar(num(rng), den(rng));
      x.canonicalize();
    }
    v[t->index("sd")] = exact::Scalar(std::abs(num(rng)) + 1, den(rng));
    v[t->index("sd")].canonicalize();
    auto ev = [&](const RatFunc& f) -> exact::Scalar { return f.num().evaluate_exact(v) / f.den().evaluate_exact(v); };
    auto p = phi.evaluate_exact(v), q = next.evaluate_exact(v);
    EXPECT_EQ(ev(rel.bc_next) * q + ev(rel.bc_here) * p, ev(rel.bc_rhs));
    EXPECT_EQ(ev(rel.cas_next) * q + ev(rel.cas_here) * p, ev(rel.cas_rhs));
  }
}

class Block : public ::testing::TestWithParam<Family> {};

TEST_P(Block, StructureFunctionMatchesPublishedFactors) {
  auto b = block_structure(GetParam());
  EXPECT_TRUE(b.relations_consistent);
  EXPECT_TRUE(b.step_consistent);
  EXPECT_EQ(b.phi, b.factored());
}

TEST_P(Block, FactorsAreLinearInY) {
  auto b = block_structure(GetParam());
  auto yi = b.vars->index("y");
  for (const auto* group : {&b.lower, &b.upper})
    for (const auto& f : *group) EXPECT_EQ(f.max_exponent(yi), 1);
  EXPECT_FALSE(b.prefactor.depends_on(yi));
}

INSTANTIATE_TEST_SUITE_P(Families, Block, ::testing::Values(Family::q, Family::c),
                         [](const auto& info) { return info.param == Family::q ? "q" : "c"; });

}  // namespace
