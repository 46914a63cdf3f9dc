#pragma once

#include <stdexcept>

#include "hchain/weyl/operator.hpp"

namespace hchain::weyl {

/// op f for a function f of the positions: each term c x^a p^b acts as
/// c x^a (-i hbar)^|b| d^b f.
inline exact::Poly apply(const DiffOperator& op, const exact::Poly& f) {
  const auto& t = op.vars();
  for (auto i : t->momenta())
    if (f.depends_on(i)) throw std::invalid_argument("test function depends on a momentum");
  const exact::Poly minus_i_hbar = exact::Poly::symbol(t, t->name(static_cast<std::size_t>(t->imaginary()))) *
                                   exact::Poly::symbol(t, t->name(static_cast<std::size_t>(t->hbar()))) *
                                   exact::Scalar(-1);
  exact::Poly out(t);
  for (const auto& [m, c] : op.terms()) {
    exact::Poly d = f;
    exact::Monomial left = m;
    int order = 0;
    for (auto pi : t->momenta()) {
      auto xi = static_cast<std::size_t>(t->conjugate(pi));
      for (int k = 0; k < m.e[pi]; ++k) d = d.derivative(xi);
      order += m.e[pi];
      left.e[pi] = 0;
    }
    if (d.is_zero()) continue;
    out += exact::Poly::term(t, left, c) * minus_i_hbar.pow(static_cast<unsigned>(order)) * d;
  }
  return out;
}

/// Rebuilds f from its terms as products (coefficient x^a) * p^b.
inline DiffOperator normal_order(const DiffOperator& f) {
  const auto& t = f.vars();
  DiffOperator out(t);
  for (const auto& [m, c] : f.terms()) {
    exact::Monomial left = m, right;
    for (auto pi : t->momenta()) {
      right.e[pi] = m.e[pi];
      left.e[pi] = 0;
    }
    out += DiffOperator::term(t, left, c) * DiffOperator::term(t, right, 1);
  }
  return out;
}

}  // namespace hchain::weyl
