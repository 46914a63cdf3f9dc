#pragma once

#include <random>

#include "hchain/exact/poly.hpp"

namespace hchain::exact {

/// Bounds for random test polynomials.
struct RandomShape {
  int terms = 4;
  int min_position = -2, max_position = 2;
  int max_momentum = 2;
  int max_param = 1;
  int max_numerator = 9, max_denominator = 4;
  bool use_params = true;
};

inline Scalar random_scalar(std::mt19937_64& rng, const RandomShape& s) {
  std::uniform_int_distribution<int> num(-s.max_numerator, s.max_numerator), den(1, s.max_denominator);
  int n = 0;
  while (n == 0) n = num(rng);
  Scalar c(n, den(rng));
  c.canonicalize();
  return c;
}

/// Random sparse polynomial over the table. The imaginary unit and hbar
/// are never used.
template <class P = Poly>
P random_poly(const VarTablePtr& t, std::mt19937_64& rng, const RandomShape& s = {}) {
  std::uniform_int_distribution<int> pos(s.min_position, s.max_position), mom(0, s.max_momentum),
      par(0, s.max_param);
  P out(t);
  for (int k = 0; k < s.terms; ++k) {
    Monomial m;
    for (auto i : t->positions()) m.e[i] = static_cast<std::int16_t>(pos(rng));
    for (auto i : t->momenta()) m.e[i] = static_cast<std::int16_t>(mom(rng));
    if (s.use_params)
      for (auto i : t->params())
        if (static_cast<int>(i) != t->imaginary() && static_cast<int>(i) != t->hbar())
          m.e[i] = static_cast<std::int16_t>(par(rng));
    out.add_term(m, random_scalar(rng, s));
  }
  return out;
}

}  // namespace hchain::exact
