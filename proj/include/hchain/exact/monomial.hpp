#pragma once

#include <array>
#include <cstdint>
#include <functional>

#include "hchain/exact/var_table.hpp"

namespace hchain::exact {

/// Exponent vector over a VarTable. Unused trailing slots stay zero.
struct Monomial {
  std::array<std::int16_t, kMaxVars> e{};

  int degree() const {
    int d = 0;
    for (auto v : e) d += v;
    return d;
  }
  bool is_one() const {
    for (auto v : e)
      if (v != 0) return false;
    return true;
  }
  Monomial operator+(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::int16_t>(e[i] + o.e[i]);
    return r;
  }
  Monomial operator-(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::int16_t>(e[i] - o.e[i]);
    return r;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

/// Graded lexicographic order over the table order; the map's last element
/// is the graded-lex leading term.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : m.e) {
      h ^= static_cast<std::uint16_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace hchain::exact
