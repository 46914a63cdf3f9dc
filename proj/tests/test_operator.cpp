#include <gtest/gtest.h>

#include "hchain/exact/parse.hpp"
#include "hchain/systems/systems.hpp"
#include "hchain/weyl/json_io.hpp"
#include "hchain/weyl/properties.hpp"

using namespace hchain;
using exact::Scalar;
using weyl::DiffOperator;

namespace {

exact::VarTablePtr table() {
  return exact::VarTable::Builder().phase({"x1", "x2"}, {"p1", "p2"}).params({"k"}).hbar("hbar").imaginary("I").build();
}

DiffOperator op(const char* s) { return exact::parse<weyl::NormalOrderedProduct>(s, table()); }

}  // namespace

TEST(Operator, CanonicalCommutator) {
  auto t = table();
  auto x = DiffOperator::symbol(t, "x1");
  auto p = DiffOperator::symbol(t, "p1");
  EXPECT_EQ(p * x - x * p, exact::parse<weyl::NormalOrderedProduct>("-I*hbar", t));
  EXPECT_EQ(weyl::commutator(x, p), exact::parse<weyl::NormalOrderedProduct>("I*hbar", t));
  EXPECT_TRUE(weyl::commutator(x, DiffOperator::symbol(t, "p2")).is_zero());
}

TEST(Operator, LaurentOrdering) {
  auto t = table();
  auto p = DiffOperator::symbol(t, "p1");
  auto xm2 = DiffOperator::symbol(t, "x1", -2);
  // p x^-2 = x^-2 p + 2 i hbar x^-3
  EXPECT_EQ(p * xm2, exact::parse<weyl::NormalOrderedProduct>("x1^-2*p1 + 2*I*hbar*x1^-3", t));
}

TEST(Operator, ClassicalLimitOfCommutator) {
  auto t = table();
  auto f = op("x1^2*p1 + k*x2^-2");
  auto g = op("p1^2 + x1*p2");
  auto pb = weyl::classical_part(weyl::commutator(f, g), 1);
  auto F = weyl::symbol_of(f), G = weyl::symbol_of(g);
  exact::Poly br(t);
  for (std::size_t k = 0; k < 2; ++k) {
    auto xi = t->positions()[k], pi = t->momenta()[k];
    br += F.derivative(xi) * G.derivative(pi) - F.derivative(pi) * G.derivative(xi);
  }
  EXPECT_EQ(pb, br);
}

namespace {

// (x^-2) d^2 x acting on x^3 and x^-1, compared with its normal form.
TEST(Operator, NormalFormActsLikeTheProduct) {
  auto t = table();
  auto lhs = op("x1^-2") * op("p1^2") * op("x1");
  for (const char* f : {"x1^3", "x1^-1"}) {
    auto g = exact::parse(f, t);
    auto direct = weyl::apply(op("x1^-2"), weyl::apply(op("p1^2"), weyl::apply(op("x1"), g)));
    EXPECT_EQ(weyl::apply(lhs, g), direct) << f;
  }
}

TEST(Operator, DerivativePastPosition) {
  // d x = x d + 1 with p = -i hbar d: p x = x p - i hbar
  EXPECT_EQ(op("p1") * op("x1"), op("x1*p1 - I*hbar"));
}

TEST(Operator, SelfCommutatorVanishes) {
  auto t = table();
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    auto a = exact::random_poly<DiffOperator>(t, rng);
    EXPECT_TRUE(weyl::commutator(a, a).is_zero());
  }
}

TEST(Operator, SymmetrizedProducts) {
  auto a = op("x1^2"), b = op("p1");
  EXPECT_EQ(weyl::anticommutator(a, b), a * b + b * a);
  EXPECT_EQ(weyl::sym_aab(a, b), a * a * b + a * b * a + b * a * a);
  EXPECT_EQ(weyl::sym_aaab(a, b), a * a * a * b + a * a * b * a + a * b * a * a + b * a * a * a);
}

TEST(Operator, JsonRoundTrip) {
  auto q = systems::quantum_system(systems::Family::c);
  EXPECT_EQ(weyl::operator_from_json(weyl::to_json(q.gens.B)), q.gens.B);
}

TEST(Properties, Operators) {
  for (const auto& r : weyl::operator_properties(100, 77)) {
    EXPECT_EQ(r.cases, 100u) << r.name;
    EXPECT_TRUE(r.holds()) << r.name << " first failure at case " << r.first_failure.value_or(0);
  }
}

}  // namespace
