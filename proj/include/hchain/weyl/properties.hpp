#pragma once

#include <vector>

#include "hchain/exact/poisson.hpp"
#include "hchain/exact/parse.hpp"
#include "hchain/exact/properties.hpp"
#include "hchain/weyl/apply.hpp"

namespace hchain::weyl {

using exact::PropertyResult;

namespace detail {

/// x_k^e or p_k as an operator.
inline DiffOperator random_letter(const exact::VarTablePtr& t, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> axis(0, static_cast<int>(t->positions().size()) - 1), kind(0, 2),
      power(-2, 2);
  auto k = static_cast<std::size_t>(axis(rng));
  if (kind(rng) == 0) return DiffOperator::symbol(t, t->name(t->momenta()[k]));
  int e = 0;
  while (e == 0) e = power(rng);
  return DiffOperator::symbol(t, t->name(t->positions()[k]), e);
}

}  // namespace detail

inline std::vector<PropertyResult> operator_properties(std::size_t cases, std::uint64_t seed) {
  auto t = exact::property_table();
  exact::RandomShape s;
  s.terms = 3;
  s.max_momentum = 2;
  auto gen = [&](std::mt19937_64& rng) { return exact::random_poly<DiffOperator>(t, rng, s); };
  std::vector<PropertyResult> out;
  out.push_back(exact::run_property("operator antisymmetry", cases, seed, [&](std::mt19937_64& rng) {
    DiffOperator f = gen(rng), g = gen(rng);
    return commutator(f, g) == -commutator(g, f);
  }));
  out.push_back(exact::run_property("operator Jacobi identity", cases, seed + 1000, [&](std::mt19937_64& rng) {
    DiffOperator f = gen(rng), g = gen(rng), h = gen(rng);
    return (commutator(f, commutator(g, h)) + commutator(g, commutator(h, f)) + commutator(h, commutator(f, g)))
        .is_zero();
  }));
  out.push_back(exact::run_property("operator Leibniz rule", cases, seed + 2000, [&](std::mt19937_64& rng) {
    DiffOperator f = gen(rng), g = gen(rng), h = gen(rng);
    return commutator(f, g * h) == commutator(f, g) * h + g * commutator(f, h);
  }));
  // A random word of letters is normal ordered by multiplication; ordering
  // it again changes nothing, and both act on a test function like the
  // letters applied one after another.
  out.push_back(exact::run_property("normal-ordering idempotence", cases, seed + 3000, [&](std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(2, 5);
    std::vector<DiffOperator> letters;
    for (int i = len(rng); i > 0; --i) letters.push_back(detail::random_letter(t, rng));
    DiffOperator w = DiffOperator::constant(t, 1);
    for (const auto& l : letters) w = w * l;
    DiffOperator once = normal_order(w);
    if (once != w || normal_order(once) != once) return false;
    exact::Poly f = exact::parse("x1^3*x2^-1 + a*x1^-2*x2^2", t);
    exact::Poly seq = f;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) seq = apply(*it, seq);
    return apply(w, f) == seq;
  }));
  out.push_back(exact::run_property("classical limit of commutators", cases, seed + 4000, [&](std::mt19937_64& rng) {
    DiffOperator f = gen(rng), g = gen(rng);
    return classical_part(commutator(f, g), 1) == exact::poisson_bracket(symbol_of(f), symbol_of(g));
  }));
  return out;
}

}  // namespace hchain::weyl
