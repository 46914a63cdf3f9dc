#include <gtest/gtest.h>

#include "hchain/fit/reference.hpp"

using namespace hchain;
using namespace hchain::fit;
using exact::Scalar;
using systems::Family;

namespace {

struct Fitted {
  systems::ClassicalSystem cs;
  systems::QuantumSystem qs;
  TripleAlgebraFit classical, quantum;
};

const Fitted& fitted(Family f) {
  static std::map<Family, Fitted> cache;
  auto it = cache.find(f);
  if (it == cache.end()) {
    Fitted x{systems::classical_system(f), systems::quantum_system(f), {}, {}};
    x.classical = fit_ternary(x.cs.gens, algebra_of(f), Regime::classical);
    x.quantum = fit_ternary(x.qs.gens, algebra_of(f), Regime::quantum);
    it = cache.emplace(f, std::move(x)).first;
  }
  return it->second;
}

Poly hbar_coefficient(const Poly& p, int k) {
  return p.coefficient(static_cast<std::size_t>(p.vars()->hbar()), k);
}

class FitBoth : public ::testing::TestWithParam<Family> {};

}  // namespace

TEST_P(FitBoth, QuantumConstantsMatchPublished) {
  for (const auto& c : compare_constants(fitted(GetParam()).quantum, GetParam()))
    EXPECT_TRUE(c.match()) << c.name << ": computed " << c.computed << ", printed " << c.printed;
}

TEST_P(FitBoth, ConstantsAreReal) {
  for (const auto* fit : {&fitted(GetParam()).classical, &fitted(GetParam()).quantum})
    for (const auto& [name, v] : fit->constants) EXPECT_TRUE(v.imag_part().is_zero()) << name;
}

TEST_P(FitBoth, QuantumConstantsReduceToClassical) {
  const auto& x = fitted(GetParam());
  for (const auto& [name, qv] : x.quantum.constants) {
    EXPECT_TRUE(hbar_coefficient(qv, 0).is_zero()) << name;
    EXPECT_EQ(hbar_coefficient(qv, 2), -x.classical[name]) << name;
  }
}

TEST_P(FitBoth, ConstantDegreesInH) {
  const auto& x = fitted(GetParam());
  const auto hi = x.classical.vars->index("H");
  std::map<std::string, int> bound;
  if (GetParam() == Family::q)
    bound = {{"alpha", 0}, {"beta", 0}, {"gamma", 0}, {"a", 0}, {"delta", 1},
             {"epsilon", 1}, {"zeta", 2}, {"d", 1}, {"z", 2}};
  else
    bound = {{"a", 0},  {"beta", 0}, {"alpha", 1}, {"gamma", 2}, {"delta", 1},
             {"epsilon", 3}, {"mu", 1}, {"nu", 2}, {"xi", 3}, {"zeta", 4}};
  for (const auto* fit : {&x.classical, &x.quantum})
    for (const auto& [name, v] : fit->constants)
      if (!v.is_zero()) EXPECT_LE(v.max_exponent(hi), bound.at(name)) << name;
}

TEST_P(FitBoth, ClassicalCasimirMatchesPublished) {
  const auto& x = fitted(GetParam());
  auto k = build_casimir(x.classical, x.cs.gens);
  auto cmp = compare_casimir(k.k_in_H, Regime::classical, GetParam());
  EXPECT_TRUE(cmp.match()) << cmp.computed << " vs " << cmp.printed;
  for (const auto& ki : k.k) EXPECT_FALSE(ki.has_phase_dependence());
}

TEST_P(FitBoth, QuantumCasimirMatchesPublished) {
  const auto& x = fitted(GetParam());
  auto k = build_casimir(x.quantum, x.qs.gens);
  auto cmp = compare_casimir(k.k_in_H, Regime::quantum, GetParam());
  EXPECT_TRUE(cmp.match()) << cmp.computed << " vs " << cmp.printed;
  auto kc = build_casimir(x.classical, x.cs.gens);
  EXPECT_EQ(hbar_coefficient(k.k_in_H, 2), -kc.k_in_H);
}

TEST_P(FitBoth, RegenerationIdentities) {
  auto r = regeneration_check(fitted(GetParam()).classical);
  EXPECT_TRUE(r.dK_dC);
  EXPECT_TRUE(r.dK_dA);
  EXPECT_TRUE(r.dK_dB);
}

TEST_P(FitBoth, GeneratingFunctionIdentity) {
  const auto& x = fitted(GetParam());
  auto k = build_casimir(x.classical, x.cs.gens);
  auto h = generating_function(x.cs);
  auto C = exact::poisson_bracket(x.cs.gens.A, x.cs.gens.B);
  EXPECT_EQ(k.K, C * C - Scalar(2) * h);
}

INSTANTIATE_TEST_SUITE_P(Systems, FitBoth, ::testing::Values(Family::q, Family::c),
                         [](const auto& info) { return info.param == Family::q ? "q" : "c"; });

TEST(Fit, QuadraticConstantTermVariants) {
  // The two printed k0 forms agree once the expansion point is accounted for:
  // the second one is the constant term in powers of (H - s).
  const auto& x = fitted(Family::q);
  auto k = build_casimir(x.classical, x.cs.gens).k_in_H;
  const auto& t = x.classical.vars;
  auto in_shifted = k.substitute({{"H", exact::parse("H + s", t)}}, t);
  auto k0_shifted = in_shifted.coefficient(t->index("H"), 0);
  const auto& ref = reference_values(Family::q);
  EXPECT_EQ(k.coefficient(t->index("H"), 0), exact::parse("128*lambda*lambda1*lambda2 - 32*lambda1*s^2", t));
  EXPECT_EQ(k0_shifted, exact::parse(ref.classical_k0_alternative, t));
}

TEST(Fit, CubicQuantumConstantTermFactor) {
  const auto& x = fitted(Family::c);
  auto k = build_casimir(x.quantum, x.qs.gens).k_in_H;
  const auto& t = x.quantum.vars;
  auto k0 = k.substitute({{"H", exact::parse("r", t)}}, t);
  auto r0 = k0.coefficient(t->index("r"), 0);
  EXPECT_EQ(r0, exact::parse("4*kappa^2*hbar^2*(8*kappa1 - 35*hbar^2)*(8*kappa1 - 3*hbar^2)*(8*kappa2 - 3*hbar^2)", t));
}

TEST(Fit, ClassicalCubicHasNonzeroLeadingConstant) {
  const auto& x = fitted(Family::c);
  EXPECT_TRUE(x.classical["beta"].is_zero());
  EXPECT_FALSE(x.classical["a"].is_zero());
}

TEST(Fit, GeneratingFunctionWithoutShiftOrKappa2HasNoConstant) {
  auto cs = systems::classical_system(Family::c);
  Poly zero(cs.vars);
  auto h = generating_function(cs).substitute({{"kappa2", zero}, {"r", zero}}, cs.vars);
  ASSERT_FALSE(h.is_zero());
  for (const auto& [m, c] : h.terms()) {
    bool phase = false;
    for (std::size_t i = 0; i < cs.vars->size(); ++i) phase = phase || (m.e[i] && cs.vars->is_phase(i));
    EXPECT_TRUE(phase);
  }
}

TEST(Fit, WrongFamilyIsInconsistent) {
  auto cs = systems::classical_system(Family::c);
  EXPECT_THROW(fit_ternary(cs.gens, AlgebraFamily::quadratic, Regime::classical), InconsistentFit);
}

TEST(Fit, VerbatimCubicIntegralFailsToCommute) {
  auto qs = systems::quantum_system(Family::c);
  auto printed = systems::quantum_c_b1_as_printed(qs.vars);
  auto residual = weyl::commutator(qs.gens.H, printed);
  EXPECT_FALSE(residual.is_zero());
  EXPECT_EQ(residual, weyl::commutator(qs.gens.H, systems::quantum_c_b1_correction(qs.vars)) * Scalar(-1));
}

TEST(Fit, NonCentralCasimirIsReported) {
  const auto& x = fitted(Family::q);
  TripleAlgebraFit broken = x.quantum;
  for (auto& [n, v] : broken.constants)
    if (n == "zeta") v = v + Poly::constant(v.vars(), 1);
  EXPECT_THROW(build_casimir(broken, x.qs.gens), CentralityViolation);
}
