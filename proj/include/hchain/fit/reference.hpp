#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hchain/fit/casimir.hpp"

namespace hchain::fit {

/// Published closed forms, written in the block symbols with H for the
/// Hamiltonian.
struct ReferenceValues {
  std::vector<std::pair<std::string, std::string>> quantum_constants;
  std::string quantum_casimir;
  /// Classical Casimir as a polynomial in H (all printed k_i).
  std::string classical_casimir;
  /// Alternative printed constant term for the classical Casimir, if any.
  std::string classical_k0_alternative;
};

inline const ReferenceValues& reference_values(Family f) {
  static const ReferenceValues q{
      {{"alpha", "8*hbar^2"},
       {"beta", "0"},
       {"gamma", "0"},
       {"delta", "-8*hbar^2*(H - s) - 16*hbar^2*s"},
       {"epsilon", "8*hbar^2*lambda"},
       {"zeta", "8*hbar^2*(H - s)*s + 8*hbar^2*s^2 + 4*hbar^4*lambda"},
       {"a", "0"},
       {"d", "-32*hbar^2*(lambda1 + lambda2) + 16*hbar^4"},
       {"z", "8*(4*hbar^2*lambda2 - hbar^4)*(H - s) + 8*(4*hbar^2*(lambda1 + lambda2) - 2*hbar^4)*s"}},
      "4*(8*hbar^2*lambda2 - 3*hbar^4)*(H - s)^2"
      " - 16*(8*hbar^2*lambda*lambda1*lambda2 - 3*hbar^4*lambda*(lambda1 + lambda2) + hbar^6*lambda)"
      " + (64*hbar^2*lambda2 - 80*hbar^4)*(H - s)*s + (32*hbar^2*(lambda1 + lambda2) - 80*hbar^4)*s^2",
      "-32*lambda2*H^2 + 128*lambda*lambda1*lambda2 - 32*lambda1*s^2",
      "128*lambda*lambda1*lambda2 - 32*(lambda1 + lambda2)*s^2"};
  static const ReferenceValues c{
      {{"a", "16*hbar^2"},
       {"alpha", "-16*hbar^2*(H - r) - 48*hbar^2*r"},
       {"gamma", "32*hbar^2*(H - r)*r - 64*hbar^2*kappa*kappa1 + 48*hbar^2*r^2 + 88*hbar^4*kappa"},
       {"beta", "0"},
       {"delta", "32*hbar^2*kappa"},
       {"mu", "-256*hbar^2*kappa2 + 352*hbar^4"},
       {"epsilon",
        "-8*(2*hbar^2*r^2 - 8*hbar^2*kappa*kappa1 + 3*hbar^4*kappa)*(H - r)"
        " - 16*hbar^2*r^3 + 64*hbar^2*kappa*kappa1*r - 88*hbar^4*kappa*r"},
       {"nu", "-352*hbar^4*(H - r) + 96*r*(8*hbar^2*kappa2 - 11*hbar^4)"},
       {"xi",
        "64*hbar^4*(H - r)^2 + 704*hbar^4*r*(H - r) - 96*(8*hbar^2*kappa2 - 11*hbar^4)*r^2"
        " + 16*kappa*(64*hbar^2*kappa1*kappa2 - 8*hbar^4*(5*kappa1 + 11*kappa2) + 31*hbar^6)"},
       {"zeta",
        "-64*hbar^4*(H - r)^2*r + 16*(24*hbar^4*kappa*kappa1 - 22*hbar^4*r^2 - 9*hbar^6*kappa)*(H - r)"
        " + 32*(8*hbar^2*kappa2 - 11*hbar^4)*r^3"
        " - 16*kappa*(64*hbar^2*kappa1*kappa2 - 8*hbar^4*(5*kappa1 + 11*kappa2) + 31*hbar^6)*r"}},
      "-64/3*(11*hbar^4*r^2 - 8*hbar^4*kappa*kappa1 + 3*hbar^6*kappa)*(H - r)^2"
      " - 32/3*(70*hbar^4*r^3 - 136*hbar^4*kappa*kappa1*r + 211*hbar^6*kappa*r)*(H - r)"
      " + 16*(8*hbar^2*kappa2 - 35*hbar^4)*r^4"
      " - 16*kappa*(64*hbar^2*kappa1*kappa2 - 8*hbar^4*(13*kappa1 + 43*kappa2) + 215*hbar^6)*r^2"
      " + 4*kappa^2*hbar^2*(8*kappa1 - 35*hbar^2)*(8*kappa1 - 3*hbar^2)*(8*kappa2 - 3*hbar^2)",
      "-128*kappa2*(r^2 - 4*kappa*kappa1)^2",
      ""};
  return f == Family::q ? q : c;
}

struct Comparison {
  std::string name;
  Poly computed;
  Poly printed;
  bool match() const { return computed == printed; }
};

/// Fitted quantum constants against the published values.
inline std::vector<Comparison> compare_constants(const TripleAlgebraFit& fit, Family f) {
  std::vector<Comparison> out;
  for (const auto& [name, src] : reference_values(f).quantum_constants)
    out.push_back({name, fit[name], exact::parse(src, fit.vars)});
  return out;
}

/// Reduced Casimir against the published value for the regime.
inline Comparison compare_casimir(const Poly& k_in_H, Regime regime, Family f) {
  const auto& ref = reference_values(f);
  const auto& src = regime == Regime::quantum ? ref.quantum_casimir : ref.classical_casimir;
  return {"K", k_in_H, exact::parse(src, k_in_H.vars())};
}

}  // namespace hchain::fit
