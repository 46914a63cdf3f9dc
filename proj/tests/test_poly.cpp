#include <gtest/gtest.h>

#include "hchain/exact/json_io.hpp"
#include "hchain/exact/parse.hpp"
#include "hchain/exact/properties.hpp"
#include "hchain/exact/reduce.hpp"
#include "hchain/systems/systems.hpp"

using namespace hchain;
using exact::Poly;
using exact::Scalar;

namespace {

exact::VarTablePtr small() { return exact::VarTable::Builder().phase({"x1"}, {"p1"}).params({"a"}).build(); }

// Bracket from first principles: every term pair differentiated by hand.
Poly naive_bracket(const Poly& f, const Poly& g) {
  const auto& t = f.vars();
  Poly r(t);
  for (const auto& [mf, cf] : f.terms())
    for (const auto& [mg, cg] : g.terms())
      for (auto xi : t->positions()) {
        auto pi = static_cast<std::size_t>(t->conjugate(xi));
        auto piece = [&](const exact::Monomial& dx_of, const Scalar& cx, const exact::Monomial& dp_of,
                         const Scalar& cp, int sign) {
          int ex = dx_of.e[xi], ep = dp_of.e[pi];
          if (ex == 0 || ep == 0) return;
          exact::Monomial m = dx_of + dp_of;
          m.e[xi] = static_cast<std::int16_t>(m.e[xi] - 1);
          m.e[pi] = static_cast<std::int16_t>(m.e[pi] - 1);
          r.add_term(m, cx * cp * ex * ep * sign);
        };
        piece(mf, cf, mg, cg, 1);
        piece(mg, cg, mf, cf, -1);
      }
  return r;
}

}  // namespace

TEST(Poly, ParseRoundTrip) {
  auto t = small();
  auto p = exact::parse("1/2*(p1^2 + a*x1^-2) - 3*a", t);
  EXPECT_EQ(exact::parse(p.to_string(), t), p);
}

TEST(Poly, ScalarsAreCanonical) {
  auto t = small();
  EXPECT_EQ(exact::parse("2/4*x1", t), exact::parse("1/2*x1", t));
  EXPECT_EQ(exact::parse("x1 - x1", t).size(), 0u);
  Scalar c = exact::parse("-6/8", t).constant_value();
  EXPECT_EQ(c.get_num(), -3);
  EXPECT_EQ(c.get_den(), 4);
}

TEST(Poly, LaurentDerivative) {
  auto t = small();
  EXPECT_EQ(exact::parse("x1^-2", t).derivative("x1"), exact::parse("-2*x1^-3", t));
  EXPECT_TRUE(exact::parse("a^2", t).derivative("x1").is_zero());
}

TEST(Poly, NegativeMomentumPowersAreRejected) {
  EXPECT_ANY_THROW(exact::parse("p1^-1", small()));
}

TEST(Poisson, CanonicalPair) {
  auto t = small();
  EXPECT_EQ(exact::poisson_bracket(Poly::symbol(t, "x1"), Poly::symbol(t, "p1")), Poly::constant(t, 1));
}

TEST(Poisson, MismatchedTables) {
  auto t = small();
  auto u = exact::VarTable::Builder().phase({"y"}, {"py"}).build();
  EXPECT_THROW(exact::poisson_bracket(Poly::symbol(t, "x1"), Poly::symbol(u, "py")), exact::StructuralError);
}

TEST(Poisson, QSystemIntegral) {
  auto s = systems::classical_system(systems::Family::q);
  EXPECT_TRUE(exact::poisson_bracket(s.gens.H, s.gens.A).is_zero());
}

TEST(Poisson, CSystemBracketAgainstNaiveRoutine) {
  auto s = systems::classical_system(systems::Family::c);
  auto t = s.vars;
  std::map<std::string, Poly> at{{"kappa", Poly::constant(t, 1)},
                                 {"kappa1", Poly::constant(t, 2)},
                                 {"kappa2", Poly::constant(t, 3)},
                                 {"r", Poly(t)}};
  Poly A = s.gens.A.substitute(at, t), B = s.gens.B.substitute(at, t);
  Poly C = exact::poisson_bracket(A, B);
  EXPECT_FALSE(C.is_zero());
  EXPECT_EQ(C, naive_bracket(A, B));
}

TEST(Substitute, RenameAndNonLaurentError) {
  auto t = exact::VarTable::Builder().phase({"x", "y"}, {"px", "py"}).build();
  EXPECT_EQ(exact::parse("x^2", t).substitute({{"x", Poly::symbol(t, "y")}}, t), exact::parse("y^2", t));
  EXPECT_THROW(exact::parse("x^-1", t).substitute({{"x", exact::parse("x + y", t)}}, t),
               exact::UnsupportedSubstitution);
  EXPECT_EQ(exact::parse("x^-2", t).substitute({{"x", exact::parse("2*y", t)}}, t), exact::parse("1/4*y^-2", t));
}

TEST(Division, SquareOfHamiltonian) {
  auto s = systems::classical_system(systems::Family::q);
  exact::PhaseOrder ord(s.vars);
  auto r = exact::poly_div_in(s.gens.H * s.gens.H, {s.gens.H}, ord);
  EXPECT_EQ(r.quotients[0], s.gens.H);
  EXPECT_TRUE(r.remainder.is_zero());
}

TEST(Json, CanonicalRoundTrip) {
  auto s = systems::classical_system(systems::Family::c);
  auto j = exact::to_json(s.gens.B);
  EXPECT_EQ(exact::poly_from_json(j), s.gens.B);
  EXPECT_EQ(exact::to_json(exact::poly_from_json(j)).dump(), j.dump());
}

// Randomized identities, 100 cases each.
TEST(Properties, PoissonBracket) {
  for (const auto& r : exact::poisson_properties(100, 20240611)) {
    EXPECT_EQ(r.cases, 100u) << r.name;
    EXPECT_TRUE(r.holds()) << r.name << " first failure at case " << r.first_failure.value_or(0);
  }
}

TEST(Properties, NaiveBracketAgreesOnRandomPairs) {
  auto t = exact::property_table();
  auto r = exact::run_property("naive bracket", 100, 99, [&](std::mt19937_64& rng) {
    Poly f = exact::random_poly(t, rng), g = exact::random_poly(t, rng);
    return exact::poisson_bracket(f, g) == naive_bracket(f, g);
  });
  EXPECT_TRUE(r.holds());
}

TEST(Properties, RunnerDetectsFalseIdentity) {
  auto t = exact::property_table();
  auto r = exact::run_property("bracket is symmetric", 100, 5, [&](std::mt19937_64& rng) {
    Poly f = exact::random_poly(t, rng), g = exact::random_poly(t, rng);
    return exact::poisson_bracket(f, g) == exact::poisson_bracket(g, f);
  });
  EXPECT_FALSE(r.holds());
  EXPECT_GT(r.failures, 90u);
}
