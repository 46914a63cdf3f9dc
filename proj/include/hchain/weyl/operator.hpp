#pragma once

#include <vector>

#include "hchain/exact/poly.hpp"

namespace hchain::weyl {

using exact::Monomial;
using exact::Scalar;
using exact::VarTable;
using exact::VarTablePtr;

/// Product of normal-ordered monomials x^a p^b with p = -i hbar d/dx.
///
/// Moving p^b past x^c uses
///   p^b x^c = sum_j C(b,j) (-i hbar)^j ff(c,j) x^(c-j) p^(b-j)
/// where ff is the falling factorial, valid for negative c as well.
struct NormalOrderedProduct {
  static void multiply(const VarTable& t, const Monomial& a, const Scalar& ca, const Monomial& b,
                       const Scalar& cb, exact::detail::Accumulator& out) {
    const auto moms = t.momenta();
    Monomial base = a + b;
    Scalar c0 = ca * cb;
    // pairs where the left momentum meets a nonzero right position power
    std::vector<std::size_t> active;
    for (auto pi : moms) {
      auto xi = static_cast<std::size_t>(t.conjugate(pi));
      if (a.e[pi] > 0 && b.e[xi] != 0) active.push_back(pi);
    }
    if (active.empty()) {
      exact::detail::reduce_imaginary(t, base, c0);
      exact::detail::accumulate(out, base, c0);
      return;
    }
    if (t.hbar() < 0 || t.imaginary() < 0)
      throw exact::StructuralError("operator product needs hbar and imaginary symbols in the table");
    const auto ih = static_cast<std::size_t>(t.imaginary());
    const auto hh = static_cast<std::size_t>(t.hbar());
    expand(t, a, b, active, 0, base, c0, ih, hh, out);
  }

 private:
  static void expand(const VarTable& t, const Monomial& a, const Monomial& b, const std::vector<std::size_t>& active,
                     std::size_t k, const Monomial& m, const Scalar& c, std::size_t ih, std::size_t hh,
                     exact::detail::Accumulator& out) {
    if (k == active.size()) {
      Monomial mm = m;
      Scalar cc = c;
      exact::detail::reduce_imaginary(t, mm, cc);
      exact::detail::accumulate(out, mm, cc);
      return;
    }
    const std::size_t pi = active[k];
    const auto xi = static_cast<std::size_t>(t.conjugate(pi));
    const int bpow = a.e[pi];
    const int cpow = b.e[xi];
    Scalar binom = 1;
    Scalar ff = 1;
    for (int j = 0; j <= bpow; ++j) {
      if (j > 0) {
        binom = binom * (bpow - j + 1) / j;
        ff *= (cpow - j + 1);
        if (ff == 0) break;
      }
      Monomial n = m;
      n.e[xi] = static_cast<std::int16_t>(n.e[xi] - j);
      n.e[pi] = static_cast<std::int16_t>(n.e[pi] - j);
      n.e[ih] = static_cast<std::int16_t>(n.e[ih] + j);
      n.e[hh] = static_cast<std::int16_t>(n.e[hh] + j);
      Scalar cc = c * binom * ff;
      if (j % 2) cc = -cc;
      expand(t, a, b, active, k + 1, n, cc, ih, hh, out);
    }
  }
};

/// Differential operator in normal order (positions left of momenta).
using DiffOperator = exact::BasicPoly<NormalOrderedProduct>;

inline DiffOperator commutator(const DiffOperator& f, const DiffOperator& g) { return f * g - g * f; }

/// Sum over the distinct orderings of the operand multiset, e.g.
/// {A,A,B} = AAB + ABA + BAA and {A,B} = AB + BA.
inline DiffOperator anticommutator(const DiffOperator& a, const DiffOperator& b) { return a * b + b * a; }

inline DiffOperator sym_aab(const DiffOperator& a, const DiffOperator& b) {
  return a * a * b + a * b * a + b * a * a;
}

inline DiffOperator sym_abb(const DiffOperator& a, const DiffOperator& b) {
  return a * b * b + b * a * b + b * b * a;
}

inline DiffOperator sym_aaab(const DiffOperator& a, const DiffOperator& b) {
  DiffOperator a2 = a * a;
  return a2 * a * b + a2 * b * a + a * b * a2 + b * a2 * a;
}

/// Normalized symmetrization of j copies of a and k copies of b: the mean of
/// all distinct words. Equals a^j b^k when the operands commute.
inline DiffOperator sym_words(const DiffOperator& a, const DiffOperator& b, int j, int k) {
  const auto& vars = a.vars() ? a.vars() : b.vars();
  if (j == 0 && k == 0) return DiffOperator::constant(vars, 1);
  // dynamic programming over prefixes: W[j][k] = sum of all words
  std::vector<std::vector<DiffOperator>> w(static_cast<std::size_t>(j + 1),
                                           std::vector<DiffOperator>(static_cast<std::size_t>(k + 1)));
  w[0][0] = DiffOperator::constant(vars, 1);
  for (int s = 0; s <= j; ++s)
    for (int r = 0; r <= k; ++r) {
      if (s == 0 && r == 0) continue;
      DiffOperator acc(vars);
      if (s > 0) acc += w[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(r)] * a;
      if (r > 0) acc += w[static_cast<std::size_t>(s)][static_cast<std::size_t>(r - 1)] * b;
      w[static_cast<std::size_t>(s)][static_cast<std::size_t>(r)] = std::move(acc);
    }
  mpz_class words;
  mpz_bin_uiui(words.get_mpz_t(), static_cast<unsigned long>(j + k), static_cast<unsigned long>(j));
  return w[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] * Scalar(mpz_class(1), words);
}

/// Formal adjoint: coefficients conjugated (I -> -I) and factor order reversed,
/// so x^a p^b maps to p^b x^a.
inline DiffOperator adjoint(const DiffOperator& f) {
  const auto& t = f.vars();
  DiffOperator r(t);
  if (f.is_zero()) return r;
  const int ih = t->imaginary();
  const auto moms = t->momenta();
  for (const auto& [m, c] : f.terms()) {
    Monomial pm, rest = m;
    for (auto pi : moms) {
      pm.e[pi] = m.e[pi];
      rest.e[pi] = 0;
    }
    Scalar cc = c;
    if (ih >= 0 && m.e[static_cast<std::size_t>(ih)] % 2) cc = -cc;
    r += DiffOperator::term(t, pm, 1) * DiffOperator::term(t, rest, cc);
  }
  return r;
}

/// Commutative reinterpretation of the stored normal-ordered symbol.
inline exact::Poly symbol_of(const DiffOperator& f) { return f.recast<exact::CommutativeProduct>(); }

/// Normal-ordered operator whose symbol is the given polynomial.
inline DiffOperator from_symbol(const exact::Poly& p) { return p.recast<NormalOrderedProduct>(); }

/// hbar -> 0 image of (-i/hbar)^s times f: keeps the terms carrying exactly
/// hbar^s and i^s, then strips both. For s = 0 this is the leading symbol and
/// for s = 1 applied to [F,G] it yields the Poisson bracket {F,G}.
inline exact::Poly classical_part(const DiffOperator& f, int s) {
  const auto& t = f.vars();
  const auto ih = static_cast<std::size_t>(t->imaginary());
  const auto hh = static_cast<std::size_t>(t->hbar());
  exact::Poly r(t);
  for (const auto& [m, c] : f.terms()) {
    if (m.e[hh] != s) continue;
    int ipow = m.e[ih];
    // (-i)^s * i^ipow must be real and equal to +-1
    int total = ipow + 3 * s;
    if (total % 2) continue;
    Monomial n = m;
    n.e[hh] = 0;
    n.e[ih] = 0;
    Scalar cc = c;
    if ((total / 2) % 2) cc = -cc;
    r.add_term(n, cc);
  }
  return r;
}

/// Lowest hbar power present in f (0 for the zero operator).
inline int min_hbar_power(const DiffOperator& f) {
  if (f.is_zero()) return 0;
  return f.min_exponent(static_cast<std::size_t>(f.vars()->hbar()));
}

}  // namespace hchain::weyl
