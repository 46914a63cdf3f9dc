#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hchain/systems/systems.hpp"

namespace hchain::systems {

enum class ChainLabel { c112, c122, c124, c1248 };

inline const std::vector<ChainLabel>& all_chains() {
  static const std::vector<ChainLabel> v{ChainLabel::c112, ChainLabel::c122, ChainLabel::c124, ChainLabel::c1248};
  return v;
}

inline std::string chain_name(ChainLabel c) {
  switch (c) {
    case ChainLabel::c112:
      return "1,1,2";
    case ChainLabel::c122:
      return "1,2,2";
    case ChainLabel::c124:
      return "1,2,4";
    default:
      return "1,2,4,8";
  }
}

/// Accepts "1,1,2", "112", "(1,1,2)" and similar spellings.
inline std::optional<ChainLabel> parse_chain(std::string s) {
  std::string digits;
  for (char ch : s)
    if (ch >= '0' && ch <= '9') digits += ch;
  if (digits == "112") return ChainLabel::c112;
  if (digits == "122") return ChainLabel::c122;
  if (digits == "124") return ChainLabel::c124;
  if (digits == "1248") return ChainLabel::c1248;
  return std::nullopt;
}

/// Axis frequencies a_i of the last Hamiltonian.
inline std::vector<int> chain_axes(ChainLabel c) {
  switch (c) {
    case ChainLabel::c112:
      return {1, 1, 2};
    case ChainLabel::c122:
      return {1, 2, 2};
    case ChainLabel::c124:
      return {1, 2, 4};
    default:
      return {1, 2, 4, 8};
  }
}

/// One building block of a chain. Bindings are written in chain symbols;
/// "H<i>" stands for the i-th chain Hamiltonian (1-based).
struct ChainLink {
  Family family;
  std::vector<std::pair<std::string, std::string>> bindings;
  std::size_t upper;  // block Hamiltonian is H_upper
  std::size_t lower;  // block A is H_lower
};

inline std::vector<ChainLink> chain_links(ChainLabel c) {
  using B = std::vector<std::pair<std::string, std::string>>;
  ChainLink q112{Family::q,
                 B{{"q1", "y"}, {"q2", "x"}, {"pq1", "py"}, {"pq2", "px"}, {"lambda", "k"}, {"lambda1", "k2"},
                   {"lambda2", "k1"}, {"s", "0"}},
                 2, 1};
  ChainLink c112{Family::c,
                 B{{"x1", "y"}, {"x2", "z"}, {"p1", "py"}, {"p2", "pz"}, {"kappa", "k"}, {"kappa1", "k2"},
                   {"kappa2", "k3"}, {"r", "H1"}},
                 3, 2};
  ChainLink c122a{Family::c,
                  B{{"x1", "x"}, {"x2", "y"}, {"p1", "px"}, {"p2", "py"}, {"kappa", "k"}, {"kappa1", "k1"},
                    {"kappa2", "k2"}, {"r", "0"}},
                  2, 1};
  ChainLink q122{Family::q,
                 B{{"q1", "z"}, {"q2", "y"}, {"pq1", "pz"}, {"pq2", "py"}, {"lambda", "4*k"}, {"lambda1", "k3"},
                   {"lambda2", "k2"}, {"s", "H1"}},
                 3, 2};
  ChainLink c124b{Family::c,
                  B{{"x1", "y"}, {"x2", "z"}, {"p1", "py"}, {"p2", "pz"}, {"kappa", "4*k"}, {"kappa1", "k2"},
                    {"kappa2", "k3"}, {"r", "H1"}},
                  3, 2};
  ChainLink c1248{Family::c,
                  B{{"x1", "z"}, {"x2", "u"}, {"p1", "pz"}, {"p2", "pu"}, {"kappa", "16*k"}, {"kappa1", "k3"},
                    {"kappa2", "k4"}, {"r", "H2"}},
                  4, 3};
  switch (c) {
    case ChainLabel::c112:
      return {q112, c112};
    case ChainLabel::c122:
      return {c122a, q122};
    case ChainLabel::c124:
      return {c122a, c124b};
    default:
      return {c122a, c124b, c1248};
  }
}

inline VarTablePtr chain_table(ChainLabel c) {
  std::size_t n = chain_axes(c).size();
  static const char* pos[] = {"x", "y", "z", "u"};
  static const char* mom[] = {"px", "py", "pz", "pu"};
  std::vector<std::string> xs, ps, params{"k"};
  for (std::size_t i = 0; i < n; ++i) {
    xs.emplace_back(pos[i]);
    ps.emplace_back(mom[i]);
    params.push_back("k" + std::to_string(i + 1));
  }
  return exact::VarTable::Builder().phase(xs, ps).params(params).hbar("hbar").imaginary("I").build();
}

/// Closed form of the n-th chain Hamiltonian, used to check the links.
inline std::string chain_hamiltonian_source(ChainLabel c, std::size_t n) {
  static const char* pos[] = {"x", "y", "z", "u"};
  static const char* mom[] = {"px", "py", "pz", "pu"};
  auto axes = chain_axes(c);
  std::string kin, pot, sw;
  for (std::size_t i = 0; i < n; ++i) {
    int a = axes[i];
    std::string idx = std::to_string(i + 1);
    kin += (i ? " + " : "") + std::string("1/2*") + mom[i] + "^2";
    pot += (i ? " + " : "") + std::to_string(a * a) + "*k*" + pos[i] + "^2";
    sw += " + k" + idx + "*" + pos[i] + "^-2";
  }
  return kin + " + " + pot + sw;
}

template <class P>
struct ChainMembers {
  std::vector<P> hamiltonians;
  std::vector<P> link_integrals;  // B of each link, in link order
};

template <class P>
struct ChainDef {
  ChainLabel label;
  VarTablePtr vars;
  std::vector<ChainLink> links;
  ChainMembers<P> members;
  /// Block triple of each link after substitution: (H_upper, H_lower, B).
  std::vector<Triple<P>> link_triples;
  /// Substitution maps from block to chain symbols, one per link.
  std::vector<std::map<std::string, P>> link_bindings;
};

namespace detail {

template <class P>
std::map<std::string, P> resolve_bindings(const ChainLink& link, const VarTablePtr& t, const std::vector<P>& hs) {
  std::map<std::string, P> out;
  for (const auto& [from, to] : link.bindings) {
    if (to.size() == 2 && to[0] == 'H') {
      out.emplace(from, hs.at(static_cast<std::size_t>(to[1] - '1')));
    } else {
      out.emplace(from, exact::parse<typename P::product_type>(to, t));
    }
  }
  return out;
}

template <class P>
ChainDef<P> build(ChainLabel c, const Triple<P>& qgen, const Triple<P>& cgen) {
  ChainDef<P> def{c, chain_table(c), chain_links(c), {}, {}, {}};
  const auto& t = def.vars;
  auto& hs = def.members.hamiltonians;
  hs.push_back(exact::parse<typename P::product_type>(chain_hamiltonian_source(c, 1), t));
  for (const auto& link : def.links) {
    const Triple<P>& g = link.family == Family::q ? qgen : cgen;
    auto b = resolve_bindings(link, t, hs);
    Triple<P> sub{g.H.substitute(b, t), g.A.substitute(b, t), g.B.substitute(b, t)};
    if (sub.A != hs.at(link.lower - 1))
      throw exact::StructuralError("chain " + chain_name(c) + ": link A does not reproduce H" +
                                   std::to_string(link.lower));
    auto expected = exact::parse<typename P::product_type>(chain_hamiltonian_source(c, link.upper), t);
    if (sub.H != expected)
      throw exact::StructuralError("chain " + chain_name(c) + ": link Hamiltonian does not reproduce H" +
                                   std::to_string(link.upper));
    hs.push_back(sub.H);
    def.members.link_integrals.push_back(sub.B);
    def.link_triples.push_back(sub);
    def.link_bindings.push_back(std::move(b));
  }
  return def;
}

}  // namespace detail

/// Classical chain obtained by substituting each link into the generic
/// block systems; every member is checked against its closed form.
inline ChainDef<Poly> build_chain(ChainLabel c) {
  return detail::build(c, classical_system(Family::q).gens, classical_system(Family::c).gens);
}

/// Quantum chain, same links applied to the operator systems.
inline ChainDef<DiffOperator> build_quantum_chain(ChainLabel c) {
  return detail::build(c, quantum_system(Family::q).gens, quantum_system(Family::c).gens);
}

template <class P>
P chain_bracket(const P& f, const P& g) {
  if constexpr (std::is_same_v<P, Poly>)
    return exact::poisson_bracket(f, g);
  else
    return weyl::commutator(f, g);
}

template <class P>
struct IntegralSet {
  std::vector<std::string> names;
  std::vector<P> integrals;
  /// brackets[i][j] = {I_i, I_j}
  std::vector<std::vector<P>> brackets;
};

/// H_1..H_n followed by the link integrals, with all pairwise brackets.
template <class P>
IntegralSet<P> chain_integral_set(const ChainDef<P>& def) {
  IntegralSet<P> s;
  for (std::size_t i = 0; i < def.members.hamiltonians.size(); ++i) {
    s.names.push_back("H" + std::to_string(i + 1));
    s.integrals.push_back(def.members.hamiltonians[i]);
  }
  for (std::size_t i = 0; i < def.members.link_integrals.size(); ++i) {
    s.names.push_back("B" + std::to_string(i + 1));
    s.integrals.push_back(def.members.link_integrals[i]);
  }
  const std::size_t n = s.integrals.size();
  s.brackets.assign(n, std::vector<P>(n, P(def.vars)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      s.brackets[i][j] = chain_bracket(s.integrals[i], s.integrals[j]);
      s.brackets[j][i] = -s.brackets[i][j];
    }
  return s;
}

/// Rank of a rational matrix by exact elimination.
inline std::size_t exact_rank(std::vector<std::vector<exact::Scalar>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      exact::Scalar f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Rank of the Jacobian of the integrals with respect to the phase variables
/// at random rational points (positions and momenta in [1/2, 5/2], parameters
/// in [1, 3]). Returns one rank per point.
inline std::vector<std::size_t> jacobian_ranks(const std::vector<Poly>& integrals, const VarTablePtr& t,
                                               unsigned points, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 60);
  std::vector<std::size_t> phase;
  for (std::size_t i = 0; i < t->size(); ++i)
    if (t->is_phase(i)) phase.push_back(i);
  std::vector<std::vector<Poly>> grads;
  for (const auto& f : integrals) {
    std::vector<Poly> g;
    for (auto v : phase) g.push_back(f.derivative(v));
    grads.push_back(std::move(g));
  }
  std::vector<std::size_t> ranks;
  for (unsigned k = 0; k < points; ++k) {
    std::vector<exact::Scalar> values(t->size());
    for (std::size_t i = 0; i < t->size(); ++i) {
      if (static_cast<int>(i) == t->imaginary()) continue;
      exact::Scalar v(num(rng), 24);
      values[i] = t->is_phase(i) ? exact::Scalar(v / 2 + exact::Scalar(1, 2)) : exact::Scalar(v + 1);
      values[i].canonicalize();
    }
    std::vector<std::vector<exact::Scalar>> m;
    for (const auto& g : grads) {
      std::vector<exact::Scalar> row;
      for (const auto& d : g) row.push_back(d.evaluate_exact(values));
      m.push_back(std::move(row));
    }
    ranks.push_back(exact_rank(std::move(m)));
  }
  return ranks;
}

}  // namespace hchain::systems
