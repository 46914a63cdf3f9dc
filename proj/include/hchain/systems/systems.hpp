#pragma once

#include <string>
#include <vector>

#include "hchain/exact/parse.hpp"
#include "hchain/exact/poisson.hpp"
#include "hchain/weyl/operator.hpp"

namespace hchain::systems {

using exact::Poly;
using exact::VarTablePtr;
using weyl::DiffOperator;

enum class Family { q, c };
enum class Regime { classical, quantum };

inline const char* family_name(Family f) { return f == Family::q ? "q-system" : "c-system"; }
inline const char* regime_name(Regime r) { return r == Regime::classical ? "classical" : "quantum"; }

/// Symbol names of a two-dimensional building block.
struct BlockSymbols {
  std::string x1, x2, p1, p2;
  std::string coupling, coupling1, coupling2, shift;
};

inline const BlockSymbols& block_symbols(Family f) {
  static const BlockSymbols q{"q1", "q2", "pq1", "pq2", "lambda", "lambda1", "lambda2", "s"};
  static const BlockSymbols c{"x1", "x2", "p1", "p2", "kappa", "kappa1", "kappa2", "r"};
  return f == Family::q ? q : c;
}

/// Table of a building block. "H" is a spare parameter standing for the
/// Hamiltonian inside structure constants and Casimir reductions.
inline VarTablePtr block_table(Family f) {
  const auto& s = block_symbols(f);
  return exact::VarTable::Builder()
      .phase({s.x1, s.x2}, {s.p1, s.p2})
      .params({s.coupling, s.coupling1, s.coupling2, s.shift, "H"})
      .hbar("hbar")
      .imaginary("I")
      .build();
}

template <class P>
struct Triple {
  P H, A, B;
};

struct ClassicalSystem {
  Family family;
  VarTablePtr vars;
  Triple<Poly> gens;
};

struct QuantumSystem {
  Family family;
  VarTablePtr vars;
  Triple<DiffOperator> gens;
};

inline ClassicalSystem classical_system(Family f) {
  auto t = block_table(f);
  ClassicalSystem s{f, t, {}};
  if (f == Family::c) {
    s.gens.H = exact::parse(
        "1/2*(p1^2 + p2^2) + kappa*(x1^2 + 4*x2^2) + kappa1*x1^-2 + kappa2*x2^-2 + r", t);
    s.gens.A = exact::parse("1/2*p1^2 + kappa*x1^2 + kappa1*x1^-2 + r", t);
    Poly J = exact::parse("x1*p2 - x2*p1", t);
    s.gens.B = exact::parse("p1^2", t) * J * J +
               exact::parse(
                   "(2*kappa2*x1^2*x2^-2 + 4*kappa1*x2^2*x1^-2 - 4*kappa*x1^2*x2^2)*p1^2"
                   " + (4*kappa*x1^3*x2 - 4*kappa1*x2*x1^-1)*p1*p2"
                   " + 4*x2^2*(kappa*x1^4 - kappa1)^2*x1^-4",
                   t);
  } else {
    s.gens.H = exact::parse(
        "1/2*(pq1^2 + pq2^2) + lambda*(q1^2 + q2^2) + lambda1*q1^-2 + lambda2*q2^-2 + s", t);
    s.gens.A = exact::parse("1/2*pq2^2 + lambda*q2^2 + lambda2*q2^-2 + s", t);
    s.gens.B = exact::parse("(q1*pq2 - q2*pq1)^2 + 2*lambda1*q2^2*q1^-2 + 2*lambda2*q1^2*q2^-2", t);
  }
  return s;
}

/// Quantum c-system integral exactly as printed. It misses commuting with
/// the Hamiltonian by -1/2 [H, hbar^2 kappa2 x2^-2]; quantum_system adds that
/// term back.
inline DiffOperator quantum_c_b1_as_printed(const VarTablePtr& t) {
  using weyl::NormalOrderedProduct;
  auto op = [&](const char* src) { return exact::parse<NormalOrderedProduct>(src, t); };
  DiffOperator J = op("x1*p2 - x2*p1");
  DiffOperator p1 = op("p1"), p1sq = op("p1^2");
  DiffOperator half_pj = weyl::anticommutator(p1, J) * exact::Scalar(1, 2);
  DiffOperator x1sq = op("x1^2");
  DiffOperator Q = weyl::anticommutator(op("x1^3"), op("p1*p2")) * exact::Scalar(-1, 2) +
                   op("x2") * weyl::anticommutator(x1sq, p1sq) * exact::Scalar(1, 2) + op("kappa1*x2") -
                   op("kappa*x2*x1^4");
  DiffOperator w = op("4*x2*(kappa1 - kappa*x1^4)*x1^-4");
  return half_pj * half_pj + op("kappa2*x2^-2") * weyl::anticommutator(x1sq, p1sq) +
         weyl::anticommutator(Q, w) * exact::Scalar(1, 2) +
         op("hbar^2/2*(2*kappa2*x2^-2 - 4*kappa*x1^2 + 4*kappa1*(x1^2 + 8*x2^2)*x1^-4)");
}

/// Correction making the printed c-system integral commute with H.
inline DiffOperator quantum_c_b1_correction(const VarTablePtr& t) {
  return exact::parse<weyl::NormalOrderedProduct>("hbar^2/2*kappa2*x2^-2", t);
}

inline QuantumSystem quantum_system(Family f) {
  auto t = block_table(f);
  using weyl::NormalOrderedProduct;
  auto op = [&](const char* src) { return exact::parse<NormalOrderedProduct>(src, t); };
  QuantumSystem s{f, t, {}};
  if (f == Family::c) {
    s.gens.H = op("1/2*(p1^2 + p2^2) + kappa*(x1^2 + 4*x2^2) + kappa1*x1^-2 + kappa2*x2^-2 + r");
    s.gens.A = op("1/2*p1^2 + kappa*x1^2 + kappa1*x1^-2 + r");
    s.gens.B = quantum_c_b1_as_printed(t) + quantum_c_b1_correction(t);
  } else {
    s.gens.H = op("1/2*(pq1^2 + pq2^2) + lambda*(q1^2 + q2^2) + lambda1*q1^-2 + lambda2*q2^-2 + s");
    s.gens.A = op("1/2*pq2^2 + lambda*q2^2 + lambda2*q2^-2 + s");
    DiffOperator J = op("q1*pq2 - q2*pq1");
    s.gens.B = J * J + op("2*lambda1*q2^2*q1^-2 + 2*lambda2*q1^2*q2^-2");
  }
  return s;
}

/// Quantum triple with every operator replaced by its leading symbol.
inline Triple<Poly> classical_limit(const QuantumSystem& s) {
  return {weyl::classical_part(s.gens.H, 0), weyl::classical_part(s.gens.A, 0), weyl::classical_part(s.gens.B, 0)};
}

}  // namespace hchain::systems
