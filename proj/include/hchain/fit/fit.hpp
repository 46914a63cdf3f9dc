#pragma once

#include <array>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hchain/exact/reduce.hpp"
#include "hchain/systems/systems.hpp"

namespace hchain::fit {

using exact::InconsistentFit;
using exact::PhaseOrder;
using exact::Poly;
using exact::Scalar;
using exact::VarTablePtr;
using systems::Family;
using systems::Regime;
using systems::Triple;

enum class AlgebraFamily { quadratic, cubic };

inline const char* algebra_name(AlgebraFamily f) { return f == AlgebraFamily::quadratic ? "quadratic" : "cubic"; }

/// Sum over distinct orderings; in a commutative ring these reduce to
/// multiplicities (2ab, 3a^2 b, 4a^3 b).
template <class P>
P sym2(const P& a, const P& b) {
  return a * b + b * a;
}
template <class P>
P sym_aab(const P& a, const P& b) {
  return a * a * b + a * b * a + b * a * a;
}
template <class P>
P sym_abb(const P& a, const P& b) {
  return a * b * b + b * a * b + b * b * a;
}
template <class P>
P sym_aaab(const P& a, const P& b) {
  P a2 = a * a;
  return a2 * a * b + a2 * b * a + a * b * a2 + b * a2 * a;
}

/// Mean of all distinct words in j copies of a and k copies of b.
template <class P>
P sym_words(const P& a, const P& b, int j, int k) {
  const auto& vars = a.vars();
  std::vector<std::vector<P>> w(static_cast<std::size_t>(j + 1), std::vector<P>(static_cast<std::size_t>(k + 1)));
  for (int s = 0; s <= j; ++s)
    for (int r = 0; r <= k; ++r) {
      auto& cell = w[static_cast<std::size_t>(s)][static_cast<std::size_t>(r)];
      if (s == 0 && r == 0) {
        cell = P::constant(vars, 1);
        continue;
      }
      cell = P(vars);
      if (s > 0) cell += w[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(r)] * a;
      if (r > 0) cell += w[static_cast<std::size_t>(s)][static_cast<std::size_t>(r - 1)] * b;
    }
  mpz_class words;
  mpz_bin_uiui(words.get_mpz_t(), static_cast<unsigned long>(j + k), static_cast<unsigned long>(j));
  return w[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] * Scalar(mpz_class(1), words);
}

/// Replaces the spare symbol H in a parameter expression by the generator.
template <class P>
P at_hamiltonian(const Poly& c, const P& H) {
  const auto& vars = H.vars();
  const auto hi = vars->index("H");
  P out(vars);
  if (c.is_zero()) return out;
  P hp = P::constant(vars, 1);
  int top = c.max_exponent(hi);
  for (int i = 0; i <= top; ++i) {
    Poly ci = c.coefficient(hi, i);
    if (!ci.is_zero()) out += ci.template recast<typename P::product_type>() * hp;
    if (i < top) hp = hp * H;
  }
  return out;
}

struct TripleAlgebraFit {
  AlgebraFamily family = AlgebraFamily::cubic;
  Regime regime = Regime::classical;
  VarTablePtr vars;
  PhaseOrder order;
  std::vector<std::pair<std::string, Poly>> constants;

  const Poly& operator[](const std::string& n) const {
    for (const auto& [k, v] : constants)
      if (k == n) return v;
    throw exact::StructuralError("no structure constant '" + n + "'");
  }
  bool has(const std::string& n) const {
    for (const auto& [k, v] : constants)
      if (k == n) return true;
    return false;
  }
};

inline AlgebraFamily algebra_of(Family f) { return f == Family::q ? AlgebraFamily::quadratic : AlgebraFamily::cubic; }

namespace detail {

using Coeffs = std::map<std::pair<int, int>, Poly>;

/// Expansion of f as sum over (j,k) of c_jk(H) S(j,k), with S the normalized
/// symmetrized words in A and B; coefficients as polynomials in the symbol H.
template <class P>
Coeffs expand(const P& f, const Triple<P>& g, const PhaseOrder& ord) {
  const auto& vars = f.vars();
  std::map<std::pair<int, int>, P> words;
  std::vector<P> hpow{P::constant(vars, 1)};
  auto basis = [&](int i, int j, int k) -> P {
    auto key = std::make_pair(j, k);
    auto it = words.find(key);
    if (it == words.end()) it = words.emplace(key, sym_words(g.A, g.B, j, k)).first;
    while (static_cast<int>(hpow.size()) <= i) hpow.push_back(hpow.back() * g.H);
    return hpow[static_cast<std::size_t>(i)] * it->second;
  };
  auto raw = exact::expand_in_generators<P>(f, {g.H, g.A, g.B}, ord, basis);
  Coeffs out;
  Poly Hs = Poly::symbol(vars, "H");
  for (const auto& [idx, c] : raw) {
    auto key = std::make_pair(idx[1], idx[2]);
    auto it = out.find(key);
    if (it == out.end()) it = out.emplace(key, Poly(vars)).first;
    it->second += c.template recast<exact::CommutativeProduct>() * Hs.pow(static_cast<unsigned>(idx[0]));
  }
  return out;
}

inline Poly take(Coeffs& c, int j, int k) {
  auto it = c.find({j, k});
  if (it == c.end()) return Poly();
  Poly v = it->second;
  c.erase(it);
  return v;
}

inline void require_empty(const Coeffs& c, const char* which) {
  if (c.empty()) return;
  std::string r;
  for (const auto& [k, v] : c)
    r += "S(" + std::to_string(k.first) + "," + std::to_string(k.second) + "): " + v.to_string() + "; ";
  throw InconsistentFit(std::string("terms outside the ansatz in ") + which, r);
}

inline void require_equal(const Poly& a, const Poly& b, const std::string& name) {
  if (a != b) throw InconsistentFit("inconsistent value for " + name, (a - b).to_string());
}

inline Poly or_zero(const Poly& p, const VarTablePtr& t) { return p.vars() ? p : Poly(t); }

}  // namespace detail

/// Right-hand sides of the ansatz, assembled from fitted constants.
template <class P>
std::pair<P, P> ansatz(const TripleAlgebraFit& fit, const Triple<P>& g) {
  auto c = [&](const char* n) { return at_hamiltonian<P>(fit[n], g.H); };
  const P& A = g.A;
  const P& B = g.B;
  if (fit.family == AlgebraFamily::quadratic) {
    P r1 = c("alpha") * A * A + c("beta") * B * B + c("gamma") * sym2(A, B) + c("delta") * A + c("epsilon") * B +
           c("zeta");
    P r2 = c("a") * A * A - c("gamma") * B * B - c("alpha") * sym2(A, B) + c("d") * A - c("delta") * B + c("z");
    return {r1, r2};
  }
  P r1 = c("a") * A * A * A + c("alpha") * A * A + c("beta") * sym2(A, B) + c("gamma") * A + c("delta") * B +
         c("epsilon");
  P r2 = c("mu") * A * A * A + c("nu") * A * A - c("beta") * B * B - c("a") * sym_aab(A, B) -
         c("alpha") * sym2(A, B) + c("xi") * A - c("gamma") * B + c("zeta");
  return {r1, r2};
}

/// Bracket used by the regime: Poisson bracket or commutator.
template <class P>
P bracket(const P& f, const P& g) {
  if constexpr (std::is_same_v<P, Poly>)
    return exact::poisson_bracket(f, g);
  else
    return weyl::commutator(f, g);
}

/// Fits the structure constants of the ternary algebra generated by (A, B)
/// over the Hamiltonian H. Throws InconsistentFit when the double brackets
/// leave the ansatz or shared constants disagree.
template <class P>
TripleAlgebraFit fit_ternary(const Triple<P>& g, AlgebraFamily family, Regime regime) {
  auto ord = exact::independent_order(std::vector<P>{g.H, g.A, g.B});
  if (!ord) throw exact::StructuralError("generators have dependent leading monomials");
  const auto& vars = g.H.vars();
  P C = bracket(g.A, g.B);
  P D1 = bracket(g.A, C);
  P D2 = bracket(g.B, C);
  auto c1 = detail::expand(D1, g, *ord);
  auto c2 = detail::expand(D2, g, *ord);
  TripleAlgebraFit fit{family, regime, vars, *ord, {}};
  auto z = [&](const Poly& p) { return detail::or_zero(p, vars); };
  if (family == AlgebraFamily::quadratic) {
    Poly alpha = z(detail::take(c1, 2, 0)), beta = z(detail::take(c1, 0, 2));
    Poly gamma = z(detail::take(c1, 1, 1)) * Scalar(1, 2), delta = z(detail::take(c1, 1, 0));
    Poly epsilon = z(detail::take(c1, 0, 1)), zeta = z(detail::take(c1, 0, 0));
    detail::require_empty(c1, "[A,C]");
    Poly a = z(detail::take(c2, 2, 0));
    detail::require_equal(-z(detail::take(c2, 0, 2)), gamma, "gamma");
    detail::require_equal(z(detail::take(c2, 1, 1)) * Scalar(-1, 2), alpha, "alpha");
    Poly d = z(detail::take(c2, 1, 0));
    detail::require_equal(-z(detail::take(c2, 0, 1)), delta, "delta");
    Poly zz = z(detail::take(c2, 0, 0));
    detail::require_empty(c2, "[B,C]");
    fit.constants = {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}, {"delta", delta}, {"epsilon", epsilon},
                     {"zeta", zeta},   {"a", a},       {"d", d},         {"z", zz}};
  } else {
    Poly a = z(detail::take(c1, 3, 0)), alpha = z(detail::take(c1, 2, 0));
    Poly beta = z(detail::take(c1, 1, 1)) * Scalar(1, 2), gamma = z(detail::take(c1, 1, 0));
    Poly delta = z(detail::take(c1, 0, 1)), epsilon = z(detail::take(c1, 0, 0));
    detail::require_empty(c1, "[A,C]");
    Poly mu = z(detail::take(c2, 3, 0)), nu = z(detail::take(c2, 2, 0));
    detail::require_equal(-z(detail::take(c2, 0, 2)), beta, "beta");
    detail::require_equal(z(detail::take(c2, 2, 1)) * Scalar(-1, 3), a, "a");
    detail::require_equal(z(detail::take(c2, 1, 1)) * Scalar(-1, 2), alpha, "alpha");
    Poly xi = z(detail::take(c2, 1, 0));
    detail::require_equal(-z(detail::take(c2, 0, 1)), gamma, "gamma");
    Poly zeta = z(detail::take(c2, 0, 0));
    detail::require_empty(c2, "[B,C]");
    fit.constants = {{"a", a},         {"alpha", alpha}, {"beta", beta}, {"gamma", gamma}, {"delta", delta},
                     {"epsilon", epsilon}, {"mu", mu},   {"nu", nu},     {"xi", xi},       {"zeta", zeta}};
  }
  auto [r1, r2] = ansatz(fit, g);
  if (r1 != D1) throw InconsistentFit("ansatz residual in first relation", (D1 - r1).to_string());
  if (r2 != D2) throw InconsistentFit("ansatz residual in second relation", (D2 - r2).to_string());
  return fit;
}

}  // namespace hchain::fit
