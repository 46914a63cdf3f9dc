#include <gtest/gtest.h>

#include "hchain/numeric/json_io.hpp"
#include "hchain/systems/systems.hpp"

namespace {

using namespace hchain;
using namespace hchain::numeric;
using exact::Scalar;

const std::map<std::string, double> kC{{"kappa", 0.5}, {"kappa1", 0.375}, {"kappa2", 0.375}, {"r", 0.0}};
const std::map<std::string, double> kQ{{"lambda", 0.5}, {"lambda1", 0.375}, {"lambda2", 0.375}, {"s", 0.0}};
const std::vector<double> kStart{1.1, 0.7, 0.3, -0.4};

std::vector<std::pair<std::string, Poly>> triple(const systems::ClassicalSystem& s) {
  return {{"H", s.gens.H}, {"A", s.gens.A}, {"B", s.gens.B}};
}

TEST(Integrator, SplitsKineticAndPotential) {
  auto s = systems::classical_system(systems::Family::c);
  auto sh = split(s.gens.H);
  EXPECT_EQ(sh.kinetic + sh.potential, s.gens.H);
  EXPECT_THROW(split(s.gens.B), std::invalid_argument);
}

// Strang splitting is second order: halving the step quarters the drift.
TEST(Integrator, DriftIsSecondOrder) {
  for (auto f : {systems::Family::c, systems::Family::q}) {
    auto s = systems::classical_system(f);
    const auto& p = f == systems::Family::c ? kC : kQ;
    IntegratorSettings a, b;
    a.step = 1e-3;
    b.step = 5e-4;
    a.horizon = b.horizon = 5;
    auto ra = integrate_and_check(s.gens.H, triple(s), p, kStart, a);
    auto rb = integrate_and_check(s.gens.H, triple(s), p, kStart, b);
    for (std::size_t i = 0; i < 3; ++i) {
      double ratio = ra.drift[i] / rb.drift[i];
      EXPECT_GT(ratio, 3.5) << ra.names[i];
      EXPECT_LT(ratio, 4.5) << ra.names[i];
    }
  }
}

TEST(Integrator, FourthOrderComposition) {
  auto s = systems::classical_system(systems::Family::c);
  IntegratorSettings a, b;
  a.order = b.order = 4;
  a.step = 1e-2;
  b.step = 5e-3;
  auto ra = integrate_and_check(s.gens.H, triple(s), kC, kStart, a);
  auto rb = integrate_and_check(s.gens.H, triple(s), kC, kStart, b);
  EXPECT_GT(ra.drift_of("B") / rb.drift_of("B"), 12.0);
  a.order = 3;
  EXPECT_THROW(integrate_and_check(s.gens.H, triple(s), kC, kStart, a), std::invalid_argument);
}

TEST(Integrator, PerturbedIntegralDrifts) {
  auto s = systems::classical_system(systems::Family::c);
  Poly B = s.gens.B;
  B.add_term(B.terms().begin()->first, B.terms().begin()->second / 10);
  IntegratorSettings cfg;
  cfg.step = 1e-3;
  auto r = integrate_and_check(s.gens.H, {{"B", s.gens.B}, {"B perturbed", B}}, kC, kStart, cfg);
  EXPECT_LT(r.drift_of("B"), 1e-6);
  EXPECT_GT(r.drift_of("B perturbed"), 1e-2);
}

TEST(Integrator, AngularMomentumOfIsotropicSystem) {
  auto s = systems::classical_system(systems::Family::q);
  std::map<std::string, double> iso{{"lambda", 0.5}, {"lambda1", 0.0}, {"lambda2", 0.0}, {"s", 0.0}};
  auto J = exact::parse("q1*pq2 - q2*pq1", s.vars);
  IntegratorSettings cfg;
  cfg.step = 1e-3;
  auto r = integrate_and_check(s.gens.H, {{"J3", J}}, iso, kStart, cfg);
  EXPECT_LT(r.drift_of("J3"), 1e-12);
}

TEST(Integrator, SingularityFloor) {
  auto s = systems::classical_system(systems::Family::c);
  IntegratorSettings cfg;
  cfg.step = 1e-3;
  cfg.floor = 0.6;
  EXPECT_THROW(integrate_and_check(s.gens.H, triple(s), kC, kStart, cfg), SingularityApproach);
  EXPECT_THROW(integrate_and_check(s.gens.H, triple(s), {{"kappa", 0.5}}, kStart, cfg), std::invalid_argument);
}

TEST(Oracle, AxisLadder) {
  EXPECT_EQ(axis_energy(2, 3, Scalar(1, 2)), 15);
  auto o = chain_spectrum_oracle(ChainLabel::c112, {Scalar(1, 2), Scalar(1, 2), Scalar(1, 2)}, 12);
  ASSERT_FALSE(o.levels.empty());
  EXPECT_EQ(o.levels.front().energy, 6);
  EXPECT_EQ(o.levels.front().multiplicity, 1u);
  // 2(n1 + n2) + 4 n3 = 2: two states
  EXPECT_EQ(o.find(8)->multiplicity, 2u);
  EXPECT_FALSE(o.contains(7));
}

TEST(Oracle, GroundStateMatchesLadder) {
  std::vector<Scalar> mu{Scalar(1, 2), Scalar(1, 2), Scalar(1, 2), Scalar(1, 2)};
  auto tab = spectrum::enumerate(spectrum::ladder(ChainLabel::c112), mu, 0);
  auto o = chain_spectrum_oracle(ChainLabel::c112, mu, 20);
  EXPECT_EQ(tab.rows[0].energies.back(), o.levels.front().energy);
}

class OracleContainment : public ::testing::TestWithParam<ChainLabel> {};

// Every ladder level with top label up to 4 is a separable level, for
// several points of the positivity domain.
TEST_P(OracleContainment, LadderLevelsAppearInOracle) {
  const std::vector<std::vector<Scalar>> sets{{Scalar(1, 2), Scalar(1, 2), Scalar(1, 2), Scalar(1, 2)},
                                              {Scalar(1, 3), Scalar(2), Scalar(3, 4), Scalar(5, 7)},
                                              {Scalar(-1, 2), Scalar(-1, 3), Scalar(1, 5), Scalar(9, 4)}};
  for (const auto& combo : spectrum::branch_combinations(GetParam())) {
    auto lad = spectrum::ladder(GetParam(), combo);
    for (const auto& mu : sets) {
      auto tab = spectrum::enumerate(lad, mu, 4);
      Scalar top = 0;
      for (const auto& r : tab.rows) top = std::max(top, r.energies.back());
      auto c = check_containment(tab, chain_spectrum_oracle(GetParam(), mu, top));
      EXPECT_TRUE(c.holds());
      EXPECT_EQ(c.joint_found, c.rows);
    }
  }
}

// Each branch combination covers a parity class of the axis quanta; all
// of them together give every separable state exactly once.
TEST_P(OracleContainment, BranchUnionIsComplete) {
  std::vector<Scalar> mu{Scalar(1, 2), Scalar(1, 3), Scalar(3, 4), Scalar(1, 5)};
  auto c = check_completeness(GetParam(), mu, 60);
  EXPECT_TRUE(c.bijective());
  EXPECT_GT(c.oracle_states, 10u);
  std::size_t total = 0;
  for (const auto& b : c.branches) {
    total += b.states;
    EXPECT_GT(b.states, 0u);
    EXPECT_EQ(b.outside_link, 0u);
    EXPECT_LT(b.states, c.oracle_states);
  }
  EXPECT_EQ(total, c.oracle_states);
}

INSTANTIATE_TEST_SUITE_P(Chains, OracleContainment,
                         ::testing::Values(ChainLabel::c112, ChainLabel::c122, ChainLabel::c124, ChainLabel::c1248),
                         [](const auto& info) { return "c" + std::to_string(static_cast<int>(info.param)); });

TEST(Oracle, PrintedBranchOf112HasEvenSecondQuantum) {
  std::vector<Scalar> mu{Scalar(1, 2), Scalar(1, 2), Scalar(1, 2)};
  auto c = check_completeness(ChainLabel::c112, mu, 30);
  ASSERT_EQ(c.branches.size(), 2u);
  EXPECT_EQ(c.branches[1].branches, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(c.branches[1].pattern(), "n1 any, n2 even, n3 any");
  EXPECT_EQ(c.branches[0].pattern(), "n1 any, n2 odd, n3 any");
}

TEST(Grid, AgreesWithAnalyticLadder) {
  for (double omega : {1.0, 2.0, 8.0})
    for (double nu : {0.5, 1.5, 2.25}) {
      auto r = radial_oracle({omega, nu, 1.0});
      EXPECT_EQ(r.grid.points, 201u);
      EXPECT_LT(r.max_error(), 1e-4) << omega << " " << nu;
    }
  EXPECT_THROW(radial_oracle({1.0, 0.25, 1.0}), std::invalid_argument);
}

TEST(Grid, SecondOrderConvergence) {
  RadialProblem p{1.0, 1.5, 1.0};
  GridSettings g;
  g.length = 8.0;
  g.eps = 1e-3;
  auto exact = analytic_levels(p, 3);
  g.points = 101;
  double e1 = std::abs(grid_levels(p, 3, g)[0] - exact[0]);
  g.points = 201;
  double e2 = std::abs(grid_levels(p, 3, g)[0] - exact[0]);
  EXPECT_NEAR(e1 / e2, 4.0, 0.3);
}

TEST(Action, IntegralsCommuteOnTestFunctions) {
  auto c = systems::quantum_system(systems::Family::c);
  auto q = systems::quantum_system(systems::Family::q);
  std::map<std::string, double> pc{{"kappa", 0.5}, {"kappa1", 0.375}, {"kappa2", 0.3}, {"r", 0.1}, {"H", 0}, {"hbar", 0.7}};
  std::map<std::string, double> pq{{"lambda", 0.5}, {"lambda1", 0.375}, {"lambda2", 0.3}, {"s", 0.1}, {"H", 0}, {"hbar", 0.7}};
  auto pts = sample_points(2, 20, 5);
  auto rc = quantum_action_check(c.gens.H, {{"A", c.gens.A}, {"B", c.gens.B}}, exact::parse("x1^3*x2^2", c.vars), pc, pts);
  EXPECT_LT(rc.worst(), 1e-12);
  auto rq = quantum_action_check(q.gens.H, {{"A", q.gens.A}, {"B", q.gens.B}}, exact::parse("q1^2*q2", q.vars), pq, pts);
  EXPECT_LT(rq.worst(), 1e-12);
}

TEST(Action, NegativeControls) {
  auto c = systems::quantum_system(systems::Family::c);
  auto q = systems::quantum_system(systems::Family::q);
  std::map<std::string, double> pc{{"kappa", 0.5}, {"kappa1", 0.375}, {"kappa2", 0.3}, {"r", 0.1}, {"H", 0}, {"hbar", 0.7}};
  std::map<std::string, double> pq{{"lambda", 0.5}, {"lambda1", 0.375}, {"lambda2", 0.3}, {"s", 0.1}, {"H", 0}, {"hbar", 0.7}};
  auto pts = sample_points(2, 20, 5);
  auto B = q.gens.B;
  B.add_term(B.terms().begin()->first, B.terms().begin()->second / 10);
  auto rq = quantum_action_check(q.gens.H, {{"B perturbed", B}}, exact::parse("q1^2*q2", q.vars), pq, pts);
  EXPECT_GT(rq.worst(), 1e-3);
  auto rc = quantum_action_check(c.gens.H, {{"B as printed", systems::quantum_c_b1_as_printed(c.vars)}},
                                 exact::parse("x1^3*x2^2", c.vars), pc, pts);
  EXPECT_GT(rc.worst(), 1e-3);
}

TEST(Action, ApplyMatchesDerivative) {
  auto q = systems::quantum_system(systems::Family::q);
  auto t = q.vars;
  auto op = exact::parse<weyl::NormalOrderedProduct>("q1*pq1", t);
  EXPECT_EQ(apply(op, exact::parse("q1^3", t)), exact::parse("-3*I*hbar*q1^3", t));
}

TEST(Json, ReportsAreDeterministic) {
  auto s = systems::classical_system(systems::Family::q);
  IntegratorSettings cfg;
  cfg.step = 1e-2;
  cfg.horizon = 1;
  auto a = to_json(integrate_and_check(s.gens.H, triple(s), kQ, kStart, cfg)).dump();
  auto b = to_json(integrate_and_check(s.gens.H, triple(s), kQ, kStart, cfg)).dump();
  EXPECT_EQ(a, b);
  auto j = to_json(check_completeness(ChainLabel::c122, {Scalar(1, 2), Scalar(1, 2), Scalar(1, 2)}, 20));
  EXPECT_TRUE(j["bijective"].get<bool>());
  EXPECT_EQ(fixed(0.1234567890123).dump(), "0.123456789");
}

}  // namespace
