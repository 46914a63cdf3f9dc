#pragma once

#include <string>
#include <vector>

#include "hchain/exact/parse.hpp"
#include "hchain/exact/ratfunc.hpp"
#include "hchain/oscillator/beta_nonzero_reference.hpp"

namespace hchain::oscillator {

using exact::Poly;
using exact::RatFunc;
using exact::Scalar;
using exact::VarTablePtr;

/// Symbols of the deformed oscillator realization. y stands for N + u;
/// sd and se are square roots of delta and epsilon.
inline VarTablePtr generic_table() {
  static const VarTablePtr t = exact::VarTable::Builder()
                                   .params({"y", "K", "a", "alpha", "gamma", "delta", "epsilon", "mu", "nu", "xi",
                                            "zeta", "d", "z"})
                                   .laurent_params({"beta", "sd", "se"})
                                   .build();
  return t;
}

/// Diagonal data of a realization: A(N), b(N), rho(N) as functions of y.
struct Realization {
  RatFunc A, b, rho;
};

inline RatFunc shift(const RatFunc& f, int k) {
  const auto& t = f.num().vars();
  Poly y = Poly::symbol(t, "y") + Scalar(k);
  return f.substitute({{"y", y}}, t);
}

inline Poly shift(const Poly& f, int k) {
  const auto& t = f.vars();
  return f.substitute({{"y", Poly::symbol(t, "y") + Scalar(k)}}, t);
}

/// Cubic algebra with beta = 0: A = sd y, delta = sd^2.
inline Realization cubic_beta_zero() {
  auto t = generic_table();
  auto p = [&](const char* s) { return exact::parse(s, t); };
  return {p("sd*y"), p("-gamma*y/sd - alpha*y^2 - a*sd*y^3 - epsilon/sd^2"), p("1/(24*sd^4)")};
}

/// Cubic algebra with beta != 0.
inline Realization cubic_beta_nonzero() {
  auto t = generic_table();
  auto p = [&](const char* s) { return exact::parse(s, t); };
  Poly w = p("(1 - 4*y^2)*beta^2 + 4*delta");
  Poly bden = p("128*(1 - 4*y^2)*beta^5");
  Poly bnum = p("8*alpha*beta") * w * w - p("a") * w * w * w -
              p("64*beta^2*((1 - 4*y^2)*beta^2*gamma + 4*gamma*delta - 8*beta*epsilon)");
  Poly y1 = p("y + 1");
  Poly rden = (Scalar(12) * y1.pow(4) + Scalar(6) * y1.pow(3) - Scalar(10) * y1 * y1 - Scalar(5) * y1) *
              p("2^17*beta^10*(2*y + 1)^2");
  return {p("beta/2*(y^2 - 1/4) - delta/(2*beta)"), RatFunc(bnum, bden), RatFunc(Poly::constant(t, 1), rden)};
}

/// Form of the Casimir relation. Cubic: the published one omits the terms
/// -/+ (2 beta/3) Delta A that the diagonal part of beta {A,B,B} contributes
/// to the Phi coefficients, and carries -3 a alpha beta where the Casimir
/// itself has -a alpha beta. Both coincide when beta = 0.
/// Quadratic: the published Casimir has +2 zeta B in place of -2 zeta B.
enum class CasimirForm { published, derived };

/// Two relations linear in Phi(y) and Phi(y+1):
///   bc_next Phi(y+1) + bc_here Phi(y) = bc_rhs
///   cas_next Phi(y+1) + cas_here Phi(y) = cas_rhs
struct LinearRelations {
  RatFunc bc_next, bc_here, bc_rhs;
  RatFunc cas_next, cas_here, cas_rhs;
};


/// Relations of the cubic algebra. delta is passed explicitly so that the
/// beta = 0 case can use sd^2.
inline LinearRelations cubic_relations(const Realization& r, const Poly& beta, const Poly& delta,
                                       CasimirForm form = CasimirForm::derived) {
  auto t = generic_table();
  auto s = [&](const char* n) { return RatFunc(exact::parse(n, t)); };
  auto c = [&](const Scalar& v) { return RatFunc(Poly::constant(t, v)); };
  const RatFunc &A = r.A, &b = r.b, &rho = r.rho;
  RatFunc be(beta), de(delta);
  RatFunc a = s("a"), al = s("alpha"), ga = s("gamma"), ep = s("epsilon"), mu = s("mu"), nu = s("nu"),
          xi = s("xi"), ze = s("zeta"), K = s("K");
  RatFunc dA = shift(A, 1) - A;
  RatFunc dA_prev = A - shift(A, -1);
  RatFunc rho_prev = shift(rho, -1);
  RatFunc half_be = be * Scalar(1, 2);
  LinearRelations out;
  out.bc_next = c(2) * (dA + half_be) * rho;
  out.bc_here = c(-2) * (dA_prev - half_be) * rho_prev;
  RatFunc A2 = A * A;
  out.bc_rhs = mu * A2 * A + nu * A2 - c(3) * a * A2 * b - be * b * b - c(2) * al * A * b + xi * A - ga * b + ze;
  RatFunc base = c(Scalar(2, 3)) * be * be - de - c(2) * be * A;
  const bool derived = form == CasimirForm::derived;
  RatFunc tilt = derived ? c(Scalar(2, 3)) * be : c(0);
  out.cas_next = (base - dA * dA - tilt * dA) * rho;
  out.cas_here = (base - dA_prev * dA_prev + tilt * dA_prev) * rho_prev;
  RatFunc aab = c(derived ? 1 : 3);
  RatFunc S = c(-2) * a * A2 * A * b - c(2) * al * A2 * b - c(2) * be * A * b * b +
              c(Scalar(1, 3)) * (c(2) * al * be - c(6) * ga + a * (be * be - c(3) * de)) * A * b +
              (c(Scalar(2, 3)) * be * be - de) * b * b +
              (c(2) * a * al - c(Scalar(1, 2)) * a * a * be + be * mu + c(Scalar(2, 3)) * nu) * A2 * A +
              c(Scalar(1, 6)) *
                  (c(4) * al * al - aab * a * al * be + c(6) * a * ga + a * a * (be * be - c(3) * de) -
                   be * be * mu + c(3) * de * mu + c(4) * be * nu + c(6) * xi) *
                  A2 +
              c(Scalar(1, 6)) * (c(4) * be * ga - c(2) * al * de + a * be * de - c(12) * ep) * b +
              c(Scalar(1, 2)) * (c(3) * a * a + mu) * A2 * A2 +
              c(Scalar(1, 6)) *
                  (c(4) * al * ga + a * be * ga - c(2) * a * al * de + a * a * be * de + c(12) * ze -
                   be * de * mu + c(2) * de * nu + c(2) * be * xi) *
                  A;
  out.cas_rhs = K - S;
  return out;
}

inline LinearRelations cubic_relations_beta_zero() {
  auto t = generic_table();
  return cubic_relations(cubic_beta_zero(), Poly(t), exact::parse("sd^2", t));
}

inline LinearRelations cubic_relations_beta_nonzero(CasimirForm form = CasimirForm::derived) {
  auto t = generic_table();
  return cubic_relations(cubic_beta_nonzero(), Poly::symbol(t, "beta"), Poly::symbol(t, "delta"), form);
}

/// Quadratic algebra with beta = gamma = 0 and rho = 1: A = se y,
/// diagonal part g = -(alpha A^2 + delta A + zeta)/epsilon, epsilon = se^2.
inline LinearRelations quadratic_relations(CasimirForm form = CasimirForm::derived) {
  auto t = generic_table();
  auto p = [&](const char* s) { return exact::parse(s, t); };
  Poly A = p("se*y");
  Poly g = -(p("alpha") * A * A + p("delta") * A + p("zeta")) * p("1/se^2");
  Poly al = p("alpha"), de = p("delta"), ze = p("zeta"), a = p("a"), d = p("d"), z = p("z"), ep = p("se^2");
  LinearRelations out;
  out.bc_next = p("2*se");
  out.bc_here = p("-2*se");
  out.bc_rhs = a * A * A - Scalar(2) * al * A * g + d * A - de * g + z;
  out.cas_next = -Scalar(2) * ep;
  out.cas_here = -Scalar(2) * ep;
  Poly S = -Scalar(2) * al * A * A * g - Scalar(2) * de * A * g - ep * g * g +
           Scalar(form == CasimirForm::derived ? -2 : 2) * ze * g +
           Scalar(2, 3) * a * A * A * A + (d + al * al) * A * A + (Scalar(1, 3) * a * ep + al * de + Scalar(2) * z) * A;
  out.cas_rhs = p("K") - S;
  return out;
}

struct StructureSolution {
  RatFunc phi;
  RatFunc phi_next;
  /// phi_next equals phi with y shifted by one.
  bool consistent = false;
};

/// Solves the two relations for Phi(y) and Phi(y+1) and checks that the
/// pair is a shift of one function.
inline StructureSolution solve_structure_function(const LinearRelations& r) {
  RatFunc det = r.bc_next * r.cas_here - r.bc_here * r.cas_next;
  if (det.is_zero()) throw exact::StructuralError("relations do not determine the structure function");
  StructureSolution s;
  s.phi = (r.bc_next * r.cas_rhs - r.cas_next * r.bc_rhs) / det;
  s.phi_next = (r.bc_rhs * r.cas_here - r.bc_here * r.cas_rhs) / det;
  s.consistent = shift(s.phi, 1) == s.phi_next;
  return s;
}

/// Laurent polynomial of a quotient with single-term denominator.
inline Poly as_laurent(const RatFunc& f) { return f.num() * f.den().monomial_inverse("denominator"); }

struct RelationCheck {
  Poly bc_residual;
  Poly cas_residual;
  bool holds() const { return bc_residual.is_zero() && cas_residual.is_zero(); }
};

/// Residual numerators of both relations for a candidate Phi.
inline RelationCheck check_relations(const LinearRelations& r, const RatFunc& phi) {
  RatFunc next = shift(phi, 1);
  return {(r.bc_next * next + r.bc_here * phi).residual(r.bc_rhs),
          (r.cas_next * next + r.cas_here * phi).residual(r.cas_rhs)};
}

/// Published general structure function of the cubic algebra with beta = 0.
inline Poly printed_cubic_beta_zero() {
  return exact::parse(
      "-6*sd^2*K + 6*a^2*sd^6*y^6 + (12*a*alpha*sd^5 - 18*a^2*sd^6)*y^5"
      " + 3*sd^4*(5*a^2*sd^2 + 2*alpha^2 - 10*alpha*a*sd + 4*a*gamma + sd^2*mu)*y^4"
      " + 2*sd^3*(-6*alpha^2*sd + 2*alpha*(5*a*sd^2 + 3*gamma) + 6*a*(epsilon - 2*gamma*sd) - 3*sd^3*mu"
      " + 2*sd^2*nu)*y^3"
      " + 3*sd^2*(-a^2*sd^4 + 2*alpha^2*sd^2 - 6*alpha*gamma*sd + 4*a*gamma*sd^2 - 6*a*sd*epsilon"
      " + 4*alpha*epsilon + 2*gamma^2 - 2*sd^3*nu + sd^4*mu + 2*sd^2*xi)*y^2"
      " + 2*sd*(a*sd^2*(3*epsilon - alpha*sd^2) + 3*gamma*(alpha*sd^2 + 2*epsilon) - 6*alpha*sd*epsilon"
      " - 3*gamma^2*sd - 3*sd^3*xi + sd^4*nu + 6*sd^2*zeta)*y"
      " + 2*alpha*sd^2*epsilon - 6*gamma*sd*epsilon - 6*sd^3*zeta + 6*epsilon^2",
      generic_table());
}

/// Published general structure function of the quadratic algebra, read with
/// its brackets as printed.
inline Poly printed_quadratic() {
  return exact::parse(
      "1/4*(-K/se^2 - z/se - delta*zeta/se^3 + zeta^2/se^4)"
      " - 1/12*(3*d - a*se - 3*alpha*delta/se + 3*delta^2/se^2 - 6*z/se + 6*alpha*zeta/se^2"
      " - 6*delta*zeta/se^3)*y"
      " + 1/4*(alpha^2 + d - a*se - 3*alpha*delta/se + delta^2/se^2 + 2*alpha*zeta/se^2)*y^2"
      " - 1/6*(3*alpha^2 - a*se - 3*alpha*delta/se)*y^3 + 1/4*alpha^2*y^4",
      generic_table());
}

/// Readings of the published linear coefficient for beta != 0: the minus
/// sign in front of its first piece applies to that piece only, or to all
/// five.
enum class LinearReading { as_printed, leading_sign_distributes };

inline Poly printed_cubic_beta_nonzero(LinearReading reading) {
  auto t = generic_table();
  Poly y = Poly::symbol(t, "y");
  Poly phi = exact::parse(reference::kTerm, t) * Poly::symbol(t, "K");
  for (std::size_t k = 0; k < reference::kCoefficients.size(); ++k) {
    if (k == 1) continue;
    phi += exact::parse(reference::kCoefficients[k], t) * y.pow(static_cast<unsigned>(k));
  }
  Poly lin = exact::parse(reference::kLinearPieces[0], t);
  for (std::size_t i = 1; i < reference::kLinearPieces.size(); ++i) {
    Poly piece = exact::parse(reference::kLinearPieces[i], t);
    lin += reading == LinearReading::as_printed ? piece : -piece;
  }
  return phi + lin * y;
}

}  // namespace hchain::oscillator
