#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>

#include "hchain/exact/poisson.hpp"
#include "hchain/exact/random.hpp"

namespace hchain::exact {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::optional<std::size_t> first_failure;

  bool holds() const { return cases > 0 && failures == 0; }
};

/// Runs check(rng) on independent streams seeded from seed + case index.
inline PropertyResult run_property(const std::string& name, std::size_t cases, std::uint64_t seed,
                                   const std::function<bool(std::mt19937_64&)>& check) {
  PropertyResult r{name, 0, 0, std::nullopt};
  for (std::size_t i = 0; i < cases; ++i) {
    std::mt19937_64 rng(seed + i);
    ++r.cases;
    if (!check(rng)) {
      ++r.failures;
      if (!r.first_failure) r.first_failure = i;
    }
  }
  return r;
}

inline VarTablePtr property_table() {
  return VarTable::Builder()
      .phase({"x1", "x2"}, {"p1", "p2"})
      .params({"a", "b"})
      .hbar("hbar")
      .imaginary("I")
      .build();
}

inline std::vector<PropertyResult> poisson_properties(std::size_t cases, std::uint64_t seed) {
  auto t = property_table();
  RandomShape s;
  s.terms = 3;
  auto gen = [&](std::mt19937_64& rng) { return random_poly(t, rng, s); };
  std::vector<PropertyResult> out;
  out.push_back(run_property("Poisson antisymmetry", cases, seed, [&](std::mt19937_64& rng) {
    Poly f = gen(rng), g = gen(rng);
    return poisson_bracket(f, g) == -poisson_bracket(g, f);
  }));
  out.push_back(run_property("Poisson Jacobi identity", cases, seed + 1000, [&](std::mt19937_64& rng) {
    Poly f = gen(rng), g = gen(rng), h = gen(rng);
    return (poisson_bracket(f, poisson_bracket(g, h)) + poisson_bracket(g, poisson_bracket(h, f)) +
            poisson_bracket(h, poisson_bracket(f, g)))
        .is_zero();
  }));
  out.push_back(run_property("Poisson Leibniz rule", cases, seed + 2000, [&](std::mt19937_64& rng) {
    Poly f = gen(rng), g = gen(rng), h = gen(rng);
    return poisson_bracket(f, g * h) == poisson_bracket(f, g) * h + g * poisson_bracket(f, h);
  }));
  out.push_back(run_property("parameters are central", cases, seed + 3000, [&](std::mt19937_64& rng) {
    Poly f = gen(rng);
    return poisson_bracket(f, Poly::symbol(t, "a")).is_zero() && poisson_bracket(f, Poly::symbol(t, "b")).is_zero();
  }));
  out.push_back(run_property("ring axioms", cases, seed + 4000, [&](std::mt19937_64& rng) {
    Poly f = gen(rng), g = gen(rng), h = gen(rng);
    return (f * g) * h == f * (g * h) && f * (g + h) == f * g + f * h && f * g == g * f && (f - f).is_zero();
  }));
  return out;
}

}  // namespace hchain::exact
