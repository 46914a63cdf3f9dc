#pragma once

#include "hchain/exact/poly.hpp"

namespace hchain::exact {

/// Canonical bracket sum_k (df/dx_k dg/dp_k - df/dp_k dg/dx_k).
inline Poly poisson_bracket(const Poly& f, const Poly& g) {
  if (!f.same_table(g)) throw StructuralError("poisson_bracket: expressions over different symbol tables");
  const auto& t = f.vars() ? f.vars() : g.vars();
  Poly r(t);
  if (f.is_zero() || g.is_zero()) return r;
  for (auto xi : t->positions()) {
    auto pi = static_cast<std::size_t>(t->conjugate(xi));
    Poly fx = f.derivative(xi);
    Poly gp = g.derivative(pi);
    if (!fx.is_zero() && !gp.is_zero()) r += fx * gp;
    Poly fp = f.derivative(pi);
    Poly gx = g.derivative(xi);
    if (!fp.is_zero() && !gx.is_zero()) r -= fp * gx;
  }
  return r;
}

}  // namespace hchain::exact
