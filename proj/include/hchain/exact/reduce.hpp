#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "hchain/exact/poly.hpp"

namespace hchain::exact {

/// Raised when an expression does not lie in the requested subalgebra; the
/// unreduced part is carried as text.
class InconsistentFit : public std::runtime_error {
 public:
  InconsistentFit(const std::string& what, std::string residual)
      : std::runtime_error(what + ": residual " + residual), residual_(std::move(residual)) {}
  const std::string& residual() const { return residual_; }

 private:
  std::string residual_;
};

/// Term order on phase-space monomials, parameters treated as coefficients:
/// total momentum degree, then momenta lexicographically in the given
/// priority, then positions lexicographically.
class PhaseOrder {
 public:
  PhaseOrder() = default;
  PhaseOrder(const VarTablePtr& t, std::vector<std::size_t> momentum_priority)
      : mom_(std::move(momentum_priority)), pos_(t->positions()) {}
  explicit PhaseOrder(const VarTablePtr& t) : PhaseOrder(t, t->momenta()) {}

  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = 0, db = 0;
    for (auto i : mom_) {
      da += a.e[i];
      db += b.e[i];
    }
    if (da != db) return da < db;
    for (auto i : mom_)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    for (auto i : pos_)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
  }
  int momentum_degree(const Monomial& m) const {
    int d = 0;
    for (auto i : mom_) d += m.e[i];
    return d;
  }
  const std::vector<std::size_t>& momentum_priority() const { return mom_; }
  const std::vector<std::size_t>& positions() const { return pos_; }

 private:
  std::vector<std::size_t> mom_;
  std::vector<std::size_t> pos_;
};

template <class P>
using PhaseTerms = std::map<Monomial, P, PhaseOrder>;

/// Splits f into phase monomial -> parameter coefficient.
template <class P>
PhaseTerms<P> by_phase(const P& f, const PhaseOrder& ord) {
  PhaseTerms<P> out(ord);
  const auto& t = *f.vars();
  for (const auto& [m, c] : f.terms()) {
    Monomial ph, pa;
    for (std::size_t i = 0; i < t.size(); ++i) (t.is_phase(i) ? ph : pa).e[i] = m.e[i];
    auto it = out.find(ph);
    if (it == out.end()) it = out.emplace(ph, P(f.vars())).first;
    it->second.add_term(pa, c);
  }
  return out;
}

template <class P>
std::pair<Monomial, P> leading_phase_term(const P& f, const PhaseOrder& ord) {
  auto split = by_phase(f, ord);
  if (split.empty()) throw StructuralError("leading term of zero");
  auto it = std::prev(split.end());
  return {it->first, it->second};
}

namespace detail {

inline bool momentum_divides(const PhaseOrder& ord, const Monomial& d, const Monomial& m) {
  for (auto i : ord.momentum_priority())
    if (d.e[i] > m.e[i]) return false;
  return true;
}

template <class P>
Scalar numeric_leading_coefficient(const P& c, const char* what) {
  if (!c.is_constant() || c.is_zero())
    throw StructuralError(std::string(what) + " must have a rational leading coefficient, got " + c.to_string());
  return c.constant_value();
}

}  // namespace detail

template <class P>
struct DivisionResult {
  std::vector<P> quotients;
  P remainder;
};

/// Multivariate division f = sum q_i basis_i + remainder in the phase order,
/// coefficients in the parameter ring. Each basis element needs a rational
/// leading coefficient. Positions are Laurent, so only momentum exponents
/// decide divisibility.
template <class P>
DivisionResult<P> poly_div_in(const P& f, const std::vector<P>& basis, const PhaseOrder& ord,
                              std::size_t max_steps = 200000) {
  DivisionResult<P> r;
  const auto& vars = f.vars();
  std::vector<std::pair<Monomial, Scalar>> leads;
  for (const auto& b : basis) {
    if (b.is_zero()) throw StructuralError("zero basis element in division");
    auto [m, c] = leading_phase_term(b, ord);
    leads.emplace_back(m, detail::numeric_leading_coefficient(c, "division basis element"));
    r.quotients.emplace_back(vars);
  }
  r.remainder = P(vars);
  P rest = f;
  for (std::size_t step = 0; !rest.is_zero(); ++step) {
    if (step >= max_steps) throw InconsistentFit("division did not terminate", rest.to_string());
    auto [m, c] = leading_phase_term(rest, ord);
    bool divided = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!detail::momentum_divides(ord, leads[i].first, m)) continue;
      P q = P::term(vars, m - leads[i].first, 1) * c * (Scalar(1) / leads[i].second);
      r.quotients[i] += q;
      rest -= q * basis[i];
      divided = true;
      break;
    }
    if (!divided) {
      P lt = P::term(vars, m, 1) * c;
      r.remainder += lt;
      rest -= lt;
    }
  }
  return r;
}

/// Coefficients c_i, free of phase variables, with f = sum_i c_i h^i.
template <class P>
std::vector<P> h_adic(const P& f, const P& h, const PhaseOrder& ord) {
  std::vector<P> out;
  P rest = f;
  while (!rest.is_zero()) {
    auto d = poly_div_in(rest, std::vector<P>{h}, ord);
    if (d.remainder.has_phase_dependence())
      throw InconsistentFit("expression is not a polynomial in the given element", d.remainder.to_string());
    out.push_back(d.remainder);
    rest = d.quotients[0];
    if (out.size() > 64) throw InconsistentFit("h-adic expansion did not terminate", rest.to_string());
  }
  return out;
}

/// Rebuilds sum_i c_i X^i where X is the named symbol of the table.
template <class P>
P from_h_adic(const std::vector<P>& coeffs, const VarTablePtr& vars, const std::string& symbol) {
  P r(vars);
  P x = P::symbol(vars, symbol);
  P xp = P::constant(vars, 1);
  for (const auto& c : coeffs) {
    r += c * xp;
    xp = xp * x;
  }
  return r;
}

/// Chooses a momentum priority under which the leading monomials of the
/// generators are linearly independent, trying permutations in a fixed order.
template <class P>
std::optional<PhaseOrder> independent_order(const std::vector<P>& gens) {
  const auto& vars = gens.front().vars();
  auto moms = vars->momenta();
  std::sort(moms.begin(), moms.end());
  do {
    PhaseOrder ord(vars, moms);
    std::vector<std::vector<Scalar>> rows;
    for (const auto& g : gens) {
      auto m = leading_phase_term(g, ord).first;
      std::vector<Scalar> row;
      for (std::size_t i = 0; i < vars->size(); ++i)
        if (vars->is_phase(i)) row.emplace_back(m.e[i]);
      rows.push_back(std::move(row));
    }
    // rank by elimination
    std::size_t rank = 0, ncol = rows.empty() ? 0 : rows[0].size();
    for (std::size_t col = 0; col < ncol && rank < rows.size(); ++col) {
      std::size_t piv = rank;
      while (piv < rows.size() && rows[piv][col] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[rank]);
      for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
        if (r2 == rank || rows[r2][col] == 0) continue;
        Scalar f = rows[r2][col] / rows[rank][col];
        for (std::size_t c2 = 0; c2 < ncol; ++c2) rows[r2][c2] -= f * rows[rank][c2];
      }
      ++rank;
    }
    if (rank == gens.size()) return ord;
  } while (std::next_permutation(moms.begin(), moms.end()));
  return std::nullopt;
}

/// Expansion of f in the commutative subalgebra generated by three elements
/// g0, g1, g2 with independent leading monomials. basis(i, j, k) must return
/// an element whose leading monomial is i*LM(g0) + j*LM(g1) + k*LM(g2).
/// Returns (i, j, k) -> parameter coefficient.
template <class P>
std::map<std::array<int, 3>, P> expand_in_generators(const P& f, const std::array<P, 3>& gens, const PhaseOrder& ord,
                                                     const std::function<P(int, int, int)>& basis,
                                                     std::size_t max_steps = 20000) {
  const auto& vars = f.vars();
  std::array<Monomial, 3> lm;
  std::array<int, 3> deg{};
  for (std::size_t g = 0; g < 3; ++g) {
    lm[g] = leading_phase_term(gens[g], ord).first;
    deg[g] = ord.momentum_degree(lm[g]);
    if (deg[g] <= 0) throw StructuralError("generator without momentum dependence");
  }
  auto solve = [&](const Monomial& m) -> std::optional<std::array<int, 3>> {
    int dm = ord.momentum_degree(m);
    for (int k = 0; k * deg[2] <= dm; ++k)
      for (int j = 0; j * deg[1] + k * deg[2] <= dm; ++j) {
        int rem = dm - j * deg[1] - k * deg[2];
        if (rem % deg[0]) continue;
        int i = rem / deg[0];
        bool ok = true;
        for (std::size_t v = 0; v < vars->size() && ok; ++v) {
          if (!vars->is_phase(v)) continue;
          ok = m.e[v] == i * lm[0].e[v] + j * lm[1].e[v] + k * lm[2].e[v];
        }
        if (ok) return std::array<int, 3>{i, j, k};
      }
    return std::nullopt;
  };
  std::map<std::array<int, 3>, P> cache;
  auto element = [&](const std::array<int, 3>& idx) -> const P& {
    auto it = cache.find(idx);
    if (it == cache.end()) it = cache.emplace(idx, basis(idx[0], idx[1], idx[2])).first;
    return it->second;
  };
  std::map<std::array<int, 3>, P> out;
  P rest = f;
  for (std::size_t step = 0; !rest.is_zero(); ++step) {
    if (step >= max_steps) throw InconsistentFit("subalgebra expansion did not terminate", rest.to_string());
    auto [m, c] = leading_phase_term(rest, ord);
    auto idx = solve(m);
    if (!idx) throw InconsistentFit("expression leaves the subalgebra", rest.to_string());
    const P& e = element(*idx);
    auto [em, ec] = leading_phase_term(e, ord);
    Scalar lc = detail::numeric_leading_coefficient(ec, "subalgebra basis element");
    P coeff = c * (Scalar(1) / lc);
    auto it = out.find(*idx);
    if (it == out.end()) it = out.emplace(*idx, P(vars)).first;
    it->second += coeff;
    if (it->second.is_zero()) out.erase(it);
    rest -= coeff * e;
  }
  return out;
}

}  // namespace hchain::exact
