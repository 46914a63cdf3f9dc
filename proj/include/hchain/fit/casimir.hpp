#pragma once

#include "hchain/fit/fit.hpp"

namespace hchain::fit {

class CentralityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class P>
struct CasimirResult {
  P K;
  /// K = sum_i k[i] H^i, coefficients free of phase variables.
  std::vector<Poly> k;
  /// Sum of k_i H^i with H as the spare symbol.
  Poly k_in_H;
};

/// Casimir assembled from the closed formula of the family and regime, with
/// every constant evaluated at the Hamiltonian.
template <class P>
P casimir_expression(const TripleAlgebraFit& fit, const Triple<P>& g) {
  auto c = [&](const char* n) { return at_hamiltonian<P>(fit[n], g.H); };
  const P& A = g.A;
  const P& B = g.B;
  const P C = bracket(A, B);
  const auto& vars = A.vars();
  auto num = [&](long n, long d = 1) { return P::constant(vars, Scalar(n, d)); };
  const bool quantum = fit.regime == Regime::quantum;
  if (fit.family == AlgebraFamily::quadratic) {
    P a = c("a"), al = c("alpha"), be = c("beta"), ga = c("gamma"), de = c("delta"), ep = c("epsilon"),
      ze = c("zeta"), d = c("d"), z = c("z");
    if (!quantum) {
      return C * C + num(2, 3) * a * A * A * A - num(2, 3) * al * sym_aab(A, B) - num(2, 3) * ga * sym_abb(A, B) -
             de * sym2(A, B) + d * A * A - ep * B * B + num(2) * z * A - num(2) * ze * B -
             num(2, 3) * be * B * B * B;
    }
    P A2 = A * A, B2 = B * B;
    return C * C - al * sym2(A2, B) - ga * sym2(A, B2) + (al * ga - de + num(1, 3) * a * be) * sym2(A, B) -
           num(2, 3) * be * B2 * B + (ga * ga - ep - num(1, 3) * al * be) * B2 +
           (ga * de - num(2) * ze + num(1, 3) * be * d) * B + num(2, 3) * a * A2 * A +
           (d + num(1, 3) * a * ga + al * al) * A2 + (num(1, 3) * a * ep + al * de + num(2) * z) * A;
  }
  P a = c("a"), al = c("alpha"), be = c("beta"), ga = c("gamma"), de = c("delta"), ep = c("epsilon"), mu = c("mu"),
    nu = c("nu"), xi = c("xi"), ze = c("zeta");
  if (!quantum) {
    return C * C - num(1, 2) * a * sym_aaab(A, B) - num(2, 3) * al * sym_aab(A, B) - num(2, 3) * be * sym_abb(A, B) -
           ga * sym2(A, B) + num(2, 3) * nu * A * A * A - de * B * B + num(1, 2) * mu * A * A * A * A -
           num(2) * ep * B + xi * A * A + num(2) * ze * A;
  }
  P A2 = A * A;
  return C * C - num(1, 2) * a * sym_aaab(A, B) - num(2, 3) * al * sym_aab(A, B) - num(2, 3) * be * sym_abb(A, B) +
         (num(2, 3) * be * be - de) * B * B +
         num(1, 6) * (num(2) * al * be - num(6) * ga + a * (be * be - num(3) * de)) * sym2(A, B) +
         num(1, 6) * (num(4) * be * ga - num(2) * al * de + a * be * de - num(12) * ep) * B +
         num(1, 2) * (num(3) * a * a + mu) * A2 * A2 +
         (num(2) * a * al - num(1, 2) * a * a * be + be * mu + num(2, 3) * nu) * A2 * A +
         num(1, 6) *
             (num(4) * al * al - a * al * be + num(6) * a * ga + a * a * (be * be - num(3) * de) - be * be * mu +
              num(3) * de * mu + num(4) * be * nu + num(6) * xi) *
             A2 +
         num(1, 6) *
             (num(4) * al * ga + a * be * ga - num(2) * a * al * de + a * a * be * de + num(12) * ze -
              be * de * mu + num(2) * de * nu + num(2) * be * xi) *
             A;
}

/// Builds K, checks it brackets to zero with A and B, and reduces it to a
/// polynomial in H.
template <class P>
CasimirResult<P> build_casimir(const TripleAlgebraFit& fit, const Triple<P>& g) {
  CasimirResult<P> r;
  r.K = casimir_expression(fit, g);
  P ka = bracket(r.K, g.A);
  if (!ka.is_zero()) throw CentralityViolation("[K,A] = " + ka.to_string());
  P kb = bracket(r.K, g.B);
  if (!kb.is_zero()) throw CentralityViolation("[K,B] = " + kb.to_string());
  auto ks = exact::h_adic(r.K, g.H, fit.order);
  const auto& vars = g.H.vars();
  r.k_in_H = Poly(vars);
  Poly Hs = Poly::symbol(vars, "H");
  for (std::size_t i = 0; i < ks.size(); ++i) {
    r.k.push_back(ks[i].template recast<exact::CommutativeProduct>());
    r.k_in_H += r.k.back() * Hs.pow(static_cast<unsigned>(i));
  }
  return r;
}

struct RegenerationCheck {
  bool dK_dC = false;  // {A,B} = 1/2 dK/dC
  bool dK_dA = false;  // {B,{A,B}} = 1/2 dK/dA
  bool dK_dB = false;  // {{A,B},A} = 1/2 dK/dB
  bool all() const { return dK_dC && dK_dA && dK_dB; }
};

/// Table with the parameters of the fit plus formal commuting symbols A, B, C.
inline VarTablePtr formal_table(const VarTablePtr& system) {
  std::vector<std::string> params;
  for (auto i : system->params())
    if (static_cast<int>(i) != system->hbar() && static_cast<int>(i) != system->imaginary())
      params.push_back(system->name(i));
  for (const char* s : {"A", "B", "C"}) params.emplace_back(s);
  return exact::VarTable::Builder().params(params).hbar("hbar").imaginary("I").build();
}

/// Classical Casimir regenerates the algebra through its partial derivatives,
/// checked in the free commutative ring over A, B, C.
inline RegenerationCheck regeneration_check(const TripleAlgebraFit& fit) {
  auto t = formal_table(fit.vars);
  TripleAlgebraFit formal = fit;
  formal.vars = t;
  for (auto& [n, v] : formal.constants) v = v.rebase(t);
  formal.regime = Regime::classical;
  Poly A = Poly::symbol(t, "A"), B = Poly::symbol(t, "B"), C = Poly::symbol(t, "C"), H = Poly::symbol(t, "H");
  // K with C as a free symbol: same formula, bracket replaced by the symbol
  auto c = [&](const char* n) { return formal[n]; };
  Poly K(t);
  if (fit.family == AlgebraFamily::quadratic) {
    K = C * C + Scalar(2, 3) * c("a") * A * A * A - Scalar(2) * c("alpha") * A * A * B -
        Scalar(2) * c("gamma") * A * B * B - Scalar(2) * c("delta") * A * B + c("d") * A * A -
        c("epsilon") * B * B + Scalar(2) * c("z") * A - Scalar(2) * c("zeta") * B -
        Scalar(2, 3) * c("beta") * B * B * B;
  } else {
    K = C * C - Scalar(2) * c("a") * A * A * A * B - Scalar(2) * c("alpha") * A * A * B -
        Scalar(2) * c("beta") * A * B * B - Scalar(2) * c("gamma") * A * B + Scalar(2, 3) * c("nu") * A * A * A -
        c("delta") * B * B + Scalar(1, 2) * c("mu") * A * A * A * A - Scalar(2) * c("epsilon") * B +
        c("xi") * A * A + Scalar(2) * c("zeta") * A;
  }
  Triple<Poly> formal_gens{H, A, B};
  // ansatz with H kept symbolic: at_hamiltonian(H -> H) is the identity
  auto [d1, d2] = ansatz(formal, formal_gens);
  RegenerationCheck r;
  r.dK_dC = K.derivative("C") * Scalar(1, 2) == C;
  r.dK_dA = K.derivative("A") * Scalar(1, 2) == d2;
  r.dK_dB = K.derivative("B") * Scalar(1, 2) == -d1;
  return r;
}

/// Generating function h with K = C^2 - 2h, from the closed forms of the
/// q- and c-systems.
inline Poly generating_function(const systems::ClassicalSystem& s) {
  const auto& t = s.vars;
  const Poly& H = s.gens.H;
  const Poly& A = s.gens.A;
  const Poly& B = s.gens.B;
  auto p = [&](const char* src) { return exact::parse(src, t); };
  if (s.family == Family::c) {
    Poly r = p("r");
    Poly Ar = A - r, Hr = H - r;
    return Scalar(16, 3) * Hr * sym_aab(Ar, B) + p("32*kappa*kappa1") * sym2(Ar, B) - Scalar(4) * sym_aaab(Ar, B) -
           p("64*kappa2") * Ar.pow(4) + p("512*kappa*kappa1*kappa2") * Ar * Ar - p("16*kappa") * B * B -
           p("64*kappa*kappa1") * Hr * B - p("512*kappa*kappa1*kappa2*r^2") + p("64*kappa2*r^4");
  }
  Poly sv = p("s");
  Poly As = A - sv, Hs = H - sv;
  return Scalar(-8, 3) * sym_aab(As, B) + Scalar(4) * Hs * sym2(As, B) - p("4*lambda") * B * B -
         p("16*(lambda1 + lambda2)") * As * As + p("32*lambda2") * Hs * As + p("32*lambda2*s") * Hs +
         p("16*(lambda1 + lambda2)*s^2");
}

}  // namespace hchain::fit
