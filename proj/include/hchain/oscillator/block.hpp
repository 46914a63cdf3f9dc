#pragma once

#include <string>
#include <vector>

#include "hchain/fit/casimir.hpp"
#include "hchain/oscillator/realization.hpp"

namespace hchain::oscillator {

using systems::Family;

/// Block couplings, the Hamiltonian value H, y = N + u and the frequencies
/// with coupling = nu^2/2 and coupling_i = hbar^2 (nu_i^2 - 1/4)/2.
inline VarTablePtr block_structure_table(Family f) {
  const auto& s = systems::block_symbols(f);
  return exact::VarTable::Builder()
      .params({s.coupling, s.coupling1, s.coupling2, s.shift, "H", "y", "nu1", "nu2"})
      .laurent_params({"hbar", "nu"})
      .hbar("hbar")
      .imaginary("I")
      .build();
}

inline std::map<std::string, Poly> frequency_substitution(Family f, const VarTablePtr& t) {
  const auto& s = systems::block_symbols(f);
  auto p = [&](const char* src) { return exact::parse(src, t); };
  return {{s.coupling, p("nu^2/2")},
          {s.coupling1, p("hbar^2*(nu1^2 - 1/4)/2")},
          {s.coupling2, p("hbar^2*(nu2^2 - 1/4)/2")}};
}

/// Structure function of a quantum block as a polynomial in y.
/// Factored form: prefactor * prod(lower) * prod(upper), where the lower
/// factors carry the shift symbol (r or s) and the upper ones H.
struct BlockStructure {
  Family family;
  VarTablePtr vars;
  /// A = step * y.
  Poly step;
  Poly phi;
  Poly prefactor;
  std::vector<Poly> lower, upper;
  /// Fitted delta (c) or epsilon (q) equals step^2.
  bool step_consistent = false;
  /// The two realization relations determine one shift-consistent Phi.
  bool relations_consistent = false;

  Poly factored() const {
    Poly r = prefactor;
    for (const auto& f : lower) r *= f;
    for (const auto& f : upper) r *= f;
    return r;
  }
};

/// Published factored form of the block structure function.
inline void set_printed_factors(BlockStructure& b) {
  auto p = [&](const char* src) { return exact::parse(src, b.vars); };
  if (b.family == Family::c) {
    b.prefactor = p("3*2^9*hbar^4");
    b.lower = {p("hbar*nu*(4*y - 1 - nu1) - r"), p("hbar*nu*(4*y - 3 - nu1) - r"), p("hbar*nu*(4*y - 1 + nu1) - r"),
               p("hbar*nu*(4*y - 3 + nu1) - r")};
    b.upper = {p("2*hbar*nu*(2*y - 1 + nu2) - H"), p("2*hbar*nu*(2*y - 1 - nu2) - H")};
  } else {
    b.prefactor = p("1/nu^4");
    b.lower = {p("hbar*nu*(2*y - 1 + nu2) - s"), p("hbar*nu*(2*y - 1 - nu2) - s")};
    b.upper = {p("hbar*nu*(2*y - 1 + nu1) - H"), p("hbar*nu*(2*y - 1 - nu1) - H")};
  }
}

/// Derives the structure function of the quantum q- or c-system from its
/// fitted algebra and Casimir.
inline BlockStructure block_structure(Family f) {
  auto qs = systems::quantum_system(f);
  auto alg = fit::fit_ternary(qs.gens, fit::algebra_of(f), systems::Regime::quantum);
  auto cas = fit::build_casimir(alg, qs.gens);
  BlockStructure b{f, block_structure_table(f), {}, {}, {}, {}, {}};
  const auto& t = b.vars;
  auto rep = frequency_substitution(f, t);
  const bool cubic = f == Family::c;
  b.step = exact::parse(cubic ? "4*hbar*nu" : "2*hbar*nu", t);
  auto sol = solve_structure_function(cubic ? cubic_relations_beta_zero() : quadratic_relations());
  b.relations_consistent = sol.consistent;
  Poly generic = as_laurent(sol.phi);
  std::map<std::string, Poly> bind;
  for (const auto& [name, v] : alg.constants) bind[name] = v.rebase(t);
  bind["K"] = cas.k_in_H.rebase(t);
  bind[cubic ? "sd" : "se"] = b.step;
  bind["y"] = Poly::symbol(t, "y");
  b.phi = generic.substitute(bind, t).substitute(rep, t);
  Poly squared = alg[cubic ? "delta" : "epsilon"].rebase(t).substitute(rep, t);
  b.step_consistent = squared == b.step * b.step;
  set_printed_factors(b);
  return b;
}

}  // namespace hchain::oscillator
