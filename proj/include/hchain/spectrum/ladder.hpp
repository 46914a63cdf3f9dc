#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hchain/oscillator/block.hpp"
#include "hchain/systems/chains.hpp"

namespace hchain::spectrum {

using exact::Poly;
using exact::Scalar;
using exact::VarTablePtr;
using systems::ChainLabel;
using systems::Family;

/// Ladder symbols. m, q, p, l are the chain quantum numbers n_1..n_4; X is
/// the position on a link's ladder, T its top, Y = u + X, E the upper
/// Hamiltonian value of a link.
inline VarTablePtr ladder_table() {
  static const VarTablePtr t = exact::VarTable::Builder()
                                   .params({"mu1", "mu2", "mu3", "mu4", "m", "q", "p", "l", "X", "T", "Y", "E"})
                                   .laurent_params({"hbar", "mu"})
                                   .hbar("hbar")
                                   .build();
  return t;
}

inline Poly lsym(const std::string& n) { return Poly::symbol(ladder_table(), n); }
inline Poly lparse(const std::string& s) { return exact::parse(s, ladder_table()); }

inline const std::array<std::string, 4>& label_names() {
  static const std::array<std::string, 4> n{"m", "q", "p", "l"};
  return n;
}
inline const std::array<std::string, 4>& mu_names() {
  static const std::array<std::string, 4> n{"mu1", "mu2", "mu3", "mu4"};
  return n;
}

class NoPositiveBranch : public exact::StructuralError {
 public:
  using exact::StructuralError::StructuralError;
};

class DomainViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Values used to order roots and test admissibility: mu_i = 1/2, 1/3, 1/5,
/// 1/7 and hbar = mu = 1, every label zero.
inline const std::vector<Scalar>& reference_point() {
  static const std::vector<Scalar> v = [] {
    auto t = ladder_table();
    std::vector<Scalar> r(t->size());
    r[t->index("mu1")] = Scalar(1, 2);
    r[t->index("mu2")] = Scalar(1, 3);
    r[t->index("mu3")] = Scalar(1, 5);
    r[t->index("mu4")] = Scalar(1, 7);
    r[t->index("hbar")] = 1;
    r[t->index("mu")] = 1;
    return r;
  }();
  return v;
}

inline Scalar at_reference(const Poly& p) { return p.evaluate_exact(reference_point()); }

/// Condition form > 0 on the mu_i.
struct Bound {
  Poly form;

  std::vector<std::string> variables() const {
    std::vector<std::string> out;
    for (const auto& n : mu_names())
      if (form.depends_on(n)) out.push_back(n);
    return out;
  }
  /// Every mu_i enters with a nonnegative coefficient.
  bool upward() const {
    auto t = form.vars();
    for (const auto& n : mu_names()) {
      Poly c = form.coefficient(t->index(n), 1);
      if (!c.is_constant() || c.constant_value() < 0) return false;
    }
    return true;
  }
  /// mu_i > value when exactly one mu_i enters with a positive coefficient.
  std::optional<std::pair<std::string, Scalar>> single() const {
    auto vs = variables();
    if (vs.size() != 1) return std::nullopt;
    auto i = form.vars()->index(vs[0]);
    Scalar c = form.coefficient(i, 1).constant_value();
    if (c <= 0) return std::nullopt;
    Scalar v = -form.coefficient(i, 0).constant_value() / c;
    return std::make_pair(vs[0], v);
  }
  std::string to_string() const {
    if (auto s = single()) return s->first + " > " + s->second.get_str();
    return form.to_string() + " > 0";
  }
};

/// Removes the common factor hbar^a mu^b of all terms. Throws if the terms
/// carry different powers.
inline Poly strip_units(const Poly& f) {
  if (f.is_zero()) return f;
  auto t = f.vars();
  auto h = t->index("hbar"), u = t->index("mu");
  const auto& first = f.terms().begin()->first;
  for (const auto& [m, c] : f.terms())
    if (m.e[h] != first.e[h] || m.e[u] != first.e[u])
      throw exact::StructuralError("factor is not homogeneous in hbar*mu: " + f.to_string());
  exact::Monomial inv;
  inv.e[h] = static_cast<std::int16_t>(-first.e[h]);
  inv.e[u] = static_cast<std::int16_t>(-first.e[u]);
  return f * Poly::term(t, inv, 1);
}

/// Sign analysis of one affine factor over 1 <= X <= T.
struct FactorSign {
  Poly factor;  // units removed, oriented to be positive
  bool negated = false;
  Bound corner;  // oriented factor at X = T = 1
};

inline std::optional<FactorSign> analyze_factor(const Poly& raw) {
  Poly g = strip_units(raw);
  auto t = g.vars();
  for (const auto& n : label_names())
    if (g.depends_on(n)) throw exact::StructuralError("link factor depends on lower quantum numbers: " + g.to_string());
  auto xi = t->index("X"), ti = t->index("T");
  if (g.max_exponent(xi) > 1 || g.max_exponent(ti) > 1)
    throw exact::StructuralError("link factor is not affine: " + g.to_string());
  Poly ca = g.coefficient(xi, 1), cb = g.coefficient(ti, 1);
  if (!ca.is_constant() || !cb.is_constant())
    throw exact::StructuralError("link factor mixes X and T with parameters: " + g.to_string());
  Scalar a = ca.constant_value(), b = cb.constant_value();
  Poly rest = g.coefficient(xi, 0).coefficient(ti, 0);
  int sign = 0;
  if (a == 0 && b == 0) {
    Scalar r = at_reference(rest);
    sign = r > 0 ? 1 : (r < 0 ? -1 : 0);
  } else if (b >= 0 && a + b >= 0) {
    sign = 1;
  } else if (b <= 0 && a + b <= 0) {
    sign = -1;
  }
  if (sign == 0) return std::nullopt;
  Scalar s(sign);
  Poly corner = (rest + Scalar(a + b)) * s;
  return FactorSign{g * s, sign < 0, Bound{corner}};
}

enum class BranchRule { max_root, printed };

struct Candidate {
  Poly root;
  Scalar at_reference;
  bool admissible = false;
  std::vector<Bound> bounds;
};

/// One link after solving Phi(0) = Phi(T + 1) = 0.
struct LinkSolution {
  std::size_t index = 0;  // block A is H_index
  Family family = Family::q;
  Poly step;
  std::vector<Candidate> lower;  // roots in Y, descending at the reference point
  std::vector<Candidate> upper;  // E as a function of T, for the chosen lower root
  std::size_t lower_choice = 0, upper_choice = 0;
  Poly root;        // Y at X = 0
  Poly energy;      // H_index in the chain labels
  Poly top_energy;  // H_(index+1) as a function of T
  Poly top;         // T in the chain labels
  Poly prefactor;
  Poly phi;  // in X and T
  std::vector<FactorSign> factors;
  std::vector<Bound> bounds;

  /// Root in units of 2 hbar mu per unit of the block A.
  Poly root_in_h() const { return root * strip_units(step) * Scalar(1, 2); }

  /// phi as a single term times primitive integer factors.
  std::string factored() const;
};

/// Scales an integer-valued affine form to coprime integer coefficients.
inline Poly primitive(const Poly& f) {
  mpz_class l = 1, g = 0;
  for (const auto& [m, c] : f.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [m, c] : f.terms()) {
    mpz_class n = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (g == 0) return f;
  return f * Scalar(l, g);
}

inline std::string LinkSolution::factored() const {
  Poly prod = Poly::constant(phi.vars(), 1);
  std::string body;
  for (const auto& f : factors) {
    Poly p = primitive(f.factor);
    prod *= p;
    body += "*(" + p.to_string() + ")";
  }
  const auto& [pm, pc] = *phi.terms().rbegin();
  const auto& [qm, qc] = *prod.terms().rbegin();
  Poly unit = Poly::term(phi.vars(), pm - qm, pc / qc);
  if (unit * prod != phi) throw exact::StructuralError("structure function does not factor over its roots");
  return unit.to_string() + body;
}

namespace detail {

inline const oscillator::BlockStructure& block(Family f) {
  static const oscillator::BlockStructure q = oscillator::block_structure(Family::q);
  static const oscillator::BlockStructure c = oscillator::block_structure(Family::c);
  return f == Family::q ? q : c;
}

inline std::string binding(const systems::ChainLink& link, const std::string& from) {
  for (const auto& [f, to] : link.bindings)
    if (f == from) return to;
  throw exact::StructuralError("chain link has no binding for " + from);
}

/// nu = sqrt(2 coupling) with coupling = c k and k = mu^2/2.
inline Poly frequency(const std::string& coupling) {
  std::size_t star = coupling.find('*');
  long c = star == std::string::npos ? 1 : std::stol(coupling.substr(0, star));
  long r = 1;
  while (r * r < c) ++r;
  if (r * r != c) throw exact::StructuralError("coupling " + coupling + " is not a square multiple of k");
  return lsym("mu") * Scalar(r);
}

inline Poly singular_frequency(const std::string& coupling) {
  if (coupling.size() != 2 || coupling[0] != 'k') throw exact::StructuralError("unexpected coupling " + coupling);
  return lsym(std::string("mu") + coupling[1]);
}

struct LinkFactors {
  Poly step, prefactor;
  std::vector<Poly> lower, upper;
};

inline LinkFactors link_factors(const systems::ChainLink& link, const Poly& lower_energy) {
  const auto& b = block(link.family);
  const auto& s = systems::block_symbols(link.family);
  auto t = ladder_table();
  std::map<std::string, Poly> bind{{"nu", frequency(binding(link, s.coupling))},
                                   {"nu1", singular_frequency(binding(link, s.coupling1))},
                                   {"nu2", singular_frequency(binding(link, s.coupling2))},
                                   {"y", lsym("Y")},
                                   {"H", lsym("E")},
                                   {s.shift, lower_energy}};
  LinkFactors out;
  out.step = b.step.substitute(bind, t);
  out.prefactor = b.prefactor.substitute(bind, t);
  for (const auto& f : b.lower) out.lower.push_back(f.substitute(bind, t));
  for (const auto& f : b.upper) out.upper.push_back(f.substitute(bind, t));
  return out;
}

inline Poly solve_linear(const Poly& f, const std::string& var) {
  auto i = f.vars()->index(var);
  if (f.max_exponent(i) != 1) throw exact::StructuralError("factor is not linear in " + var);
  return -f.coefficient(i, 0) * f.coefficient(i, 1).monomial_inverse(var + " coefficient");
}

struct BranchAnalysis {
  bool admissible = false;
  Poly phi;
  std::vector<FactorSign> factors;
  std::vector<Bound> bounds;
};

inline BranchAnalysis analyze_branch(const LinkFactors& lf, const Poly& root, const Poly& upper_root) {
  auto t = ladder_table();
  Poly y = root + lsym("X");
  Poly e = upper_root.substitute({{"Y", root + lsym("T") + Scalar(1)}}, t);
  BranchAnalysis out;
  out.phi = lf.prefactor;
  bool ok = true;
  int negated = 0;
  auto take = [&](const Poly& f) {
    Poly g = f.substitute({{"Y", y}, {"E", e}}, t);
    out.phi *= g;
    auto s = analyze_factor(g);
    if (!s) {
      ok = false;
      return;
    }
    negated += s->negated ? 1 : 0;
    out.factors.push_back(*s);
  };
  for (const auto& f : lf.lower) take(f);
  for (const auto& f : lf.upper) take(f);
  if (!lf.prefactor.is_single_term() || lf.prefactor.terms().begin()->second < 0) ok = false;
  if (negated % 2) ok = false;
  for (const auto& fs : out.factors) {
    const Bound& b = fs.corner;
    if (b.variables().empty()) {
      if (b.form.constant_value() <= 0) ok = false;
      continue;
    }
    if (!b.upward() || at_reference(b.form) <= 0) ok = false;
    bool seen = std::any_of(out.bounds.begin(), out.bounds.end(), [&](const Bound& o) { return o.form == b.form; });
    if (!seen) out.bounds.push_back(b);
  }
  out.admissible = ok;
  return out;
}

inline std::vector<Candidate> sorted_roots(const std::vector<Poly>& factors, const std::string& var) {
  std::vector<Candidate> out;
  for (const auto& f : factors) {
    Poly r = solve_linear(f, var);
    out.push_back({r, at_reference(r), false, {}});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Candidate& a, const Candidate& b) { return a.at_reference > b.at_reference; });
  return out;
}

/// x_i = n_i - n_(i-1), with n_0 = 0.
inline Poly label_step(std::size_t i) {
  Poly x = lsym(label_names()[i - 1]);
  if (i > 1) x -= lsym(label_names()[i - 2]);
  return x;
}

}  // namespace detail

/// Solves one link. lower_energy is the value bound to the block's shift
/// symbol (0 or the previous Hamiltonian). choose picks among the admissible
/// lower roots, given how many there are.
inline LinkSolution solve_boundary(const systems::ChainLink& link, std::size_t index, const Poly& lower_energy,
                                   const std::function<std::size_t(std::size_t)>& choose) {
  auto lf = detail::link_factors(link, lower_energy);
  LinkSolution out;
  out.index = index;
  out.family = link.family;
  out.step = lf.step;
  out.prefactor = lf.prefactor;
  out.lower = detail::sorted_roots(lf.lower, "Y");
  auto uppers = detail::sorted_roots(lf.upper, "E");
  std::vector<std::size_t> admissible;
  for (std::size_t i = 0; i < out.lower.size(); ++i) {
    for (const auto& u : uppers) {
      auto a = detail::analyze_branch(lf, out.lower[i].root, u.root);
      if (a.admissible) {
        out.lower[i].admissible = true;
        out.lower[i].bounds = a.bounds;
        admissible.push_back(i);
        break;
      }
    }
  }
  if (admissible.empty())
    throw NoPositiveBranch("link " + std::to_string(index) + ": no root gives a positive structure function");
  std::size_t pick = choose(admissible.size());
  if (pick >= admissible.size()) throw NoPositiveBranch("link " + std::to_string(index) + ": branch index out of range");
  out.lower_choice = admissible[pick];
  out.root = out.lower[out.lower_choice].root;
  out.upper = uppers;
  bool found = false;
  for (std::size_t j = 0; j < out.upper.size(); ++j) {
    auto a = detail::analyze_branch(lf, out.root, out.upper[j].root);
    out.upper[j].admissible = a.admissible;
    out.upper[j].bounds = a.bounds;
    if (a.admissible && !found) {
      found = true;
      out.upper_choice = j;
      out.phi = a.phi;
      out.factors = a.factors;
      out.bounds = a.bounds;
    }
  }
  auto t = ladder_table();
  out.energy = out.step * (out.root + detail::label_step(index));
  out.top_energy = out.upper[out.upper_choice].root.substitute({{"Y", out.root + lsym("T") + Scalar(1)}}, t);
  return out;
}

struct SpectrumLadder {
  ChainLabel chain = ChainLabel::c112;
  std::vector<std::string> labels;
  std::vector<Poly> energies;  // H_1..H_n
  std::vector<LinkSolution> links;
  std::map<std::string, Scalar> lower_bounds;  // mu_i > value
  std::vector<Bound> other_bounds;
  std::vector<std::size_t> branches;  // index among admissible lower roots, per link
};

/// Branch indices used by the printed ladders, counted among admissible
/// lower roots in descending order. No single rule reproduces them: the
/// second c-link of (1,1,2) takes the lower of its two roots, every other
/// link the largest.
inline std::vector<std::size_t> printed_branches(ChainLabel c) {
  switch (c) {
    case ChainLabel::c112:
      return {0, 1};
    case ChainLabel::c122:
    case ChainLabel::c124:
      return {0, 0};
    default:
      return {0, 0, 0};
  }
}

/// Ladder with explicit branch indices.
inline SpectrumLadder ladder(ChainLabel c, const std::vector<std::size_t>& branches) {
  auto links = systems::chain_links(c);
  if (branches.size() != links.size()) throw std::invalid_argument("one branch index per link is required");
  auto t = ladder_table();
  SpectrumLadder out;
  out.chain = c;
  out.branches = branches;
  const std::size_t n = links.size() + 1;
  for (std::size_t i = 0; i < n; ++i) out.labels.push_back(label_names()[i]);
  for (std::size_t k = 0; k < links.size(); ++k) {
    const auto& link = links[k];
    std::string shift = detail::binding(link, systems::block_symbols(link.family).shift);
    Poly lower = shift == "0" ? Poly(t) : out.energies.at(static_cast<std::size_t>(shift[1] - '1'));
    auto sol = solve_boundary(link, link.lower, lower, [&](std::size_t) { return branches[k]; });
    out.energies.push_back(sol.energy);
    out.links.push_back(std::move(sol));
  }
  // Tops: the last link's is n_n - n_(n-2); inner ones follow from matching
  // the link's upper root with the next Hamiltonian.
  auto& last = out.links.back();
  last.top = lsym(label_names()[n - 1]) - lsym(label_names()[n - 3]);
  out.energies.push_back(last.top_energy.substitute({{"T", last.top}}, t));
  for (std::size_t k = 0; k + 1 < out.links.size(); ++k) {
    auto& l = out.links[k];
    auto ti = t->index("T");
    Poly slope = l.top_energy.coefficient(ti, 1);
    l.top = (out.energies[k + 1] - l.top_energy.coefficient(ti, 0)) * slope.monomial_inverse("top slope");
    for (const auto& name : {"hbar", "mu", "mu1", "mu2", "mu3", "mu4"})
      if (l.top.depends_on(name))
        throw exact::StructuralError("link " + std::to_string(k + 1) + " top is not an integer label: " +
                                     l.top.to_string());
  }
  for (const auto& l : out.links) {
    for (const auto& b : l.bounds) {
      if (auto s = b.single()) {
        auto it = out.lower_bounds.find(s->first);
        if (it == out.lower_bounds.end() || it->second < s->second) out.lower_bounds[s->first] = s->second;
      } else if (std::none_of(out.other_bounds.begin(), out.other_bounds.end(),
                              [&](const Bound& o) { return o.form == b.form; })) {
        out.other_bounds.push_back(b);
      }
    }
  }
  return out;
}

inline SpectrumLadder ladder(ChainLabel c, BranchRule rule = BranchRule::printed) {
  if (rule == BranchRule::printed) return ladder(c, printed_branches(c));
  return ladder(c, std::vector<std::size_t>(systems::chain_links(c).size(), 0));
}

/// Number of admissible lower roots of each link for the given earlier
/// choices; used to walk every branch combination.
inline std::vector<std::vector<std::size_t>> branch_combinations(ChainLabel c) {
  std::vector<std::vector<std::size_t>> out;
  auto links = systems::chain_links(c);
  std::function<void(std::vector<std::size_t>)> walk = [&](std::vector<std::size_t> prefix) {
    if (prefix.size() == links.size()) {
      out.push_back(prefix);
      return;
    }
    // Count admissible roots of the next link under the prefix.
    auto t = ladder_table();
    std::vector<Poly> energies;
    std::size_t count = 0;
    for (std::size_t k = 0; k <= prefix.size(); ++k) {
      const auto& link = links[k];
      std::string shift = detail::binding(link, systems::block_symbols(link.family).shift);
      Poly lower = shift == "0" ? Poly(t) : energies.at(static_cast<std::size_t>(shift[1] - '1'));
      auto sol = solve_boundary(link, link.lower, lower, [&](std::size_t n) {
        if (k == prefix.size()) count = n;
        return k < prefix.size() ? prefix[k] : 0;
      });
      energies.push_back(sol.energy);
    }
    for (std::size_t i = 0; i < count; ++i) {
      auto next = prefix;
      next.push_back(i);
      walk(next);
    }
  };
  walk({});
  return out;
}

/// Whether every quantum-number tuple with 0 <= m <= q <= ... gives inner
/// link tops with T >= X, i.e. T - X has nonnegative integer coefficients in
/// the steps n_i - n_(i-1).
inline bool tops_fit_lattice(const SpectrumLadder& l) {
  auto t = ladder_table();
  std::map<std::string, Poly> steps;
  Poly acc(t);
  for (std::size_t i = 0; i < l.labels.size(); ++i) {
    acc += lsym(l.labels[i]);
    steps[l.labels[i]] = acc;
  }
  for (std::size_t k = 0; k < l.links.size(); ++k) {
    Poly gap = (l.links[k].top - detail::label_step(k + 1)).substitute(steps, t);
    for (const auto& [m, c] : gap.terms())
      if (c < 0 || c.get_den() != 1) return false;
  }
  return true;
}

}  // namespace hchain::spectrum
