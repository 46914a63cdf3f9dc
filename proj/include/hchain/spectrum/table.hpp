#pragma once

#include <functional>
#include <iomanip>
#include <json.hpp>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hchain/spectrum/ladder.hpp"

namespace hchain::spectrum {

using json = nlohmann::ordered_json;

struct SpectrumRow {
  std::vector<long> labels;       // n_1..n_k
  std::vector<Scalar> energies;   // H_i / (hbar mu)
  std::vector<Scalar> phi;        // Phi of each link at its position, hbar = mu = 1
};

struct SpectrumTable {
  ChainLabel chain = ChainLabel::c112;
  std::vector<std::string> labels;
  std::vector<std::size_t> branches;
  std::vector<Scalar> mu;  // mu_1..mu_k
  long bound = 0;
  std::vector<SpectrumRow> rows;
  /// Top energy -> number of rows sharing it, ascending.
  std::map<Scalar, std::size_t> degeneracy;
};

/// Point of the ladder table with hbar = mu = 1.
inline std::vector<Scalar> ladder_point(const std::vector<Scalar>& mu) {
  auto t = ladder_table();
  std::vector<Scalar> v(t->size());
  v[t->index("hbar")] = 1;
  v[t->index("mu")] = 1;
  for (std::size_t i = 0; i < mu.size() && i < mu_names().size(); ++i) v[t->index(mu_names()[i])] = mu[i];
  return v;
}

inline void check_domain(const SpectrumLadder& l, const std::vector<Scalar>& mu) {
  if (mu.size() < l.labels.size())
    throw std::invalid_argument("chain " + systems::chain_name(l.chain) + " needs " +
                                std::to_string(l.labels.size()) + " singular parameters");
  auto v = ladder_point(mu);
  for (const auto& [name, low] : l.lower_bounds) {
    Scalar x = v[ladder_table()->index(name)];
    if (!(x > low)) throw DomainViolation(name + " = " + x.get_str() + " violates " + name + " > " + low.get_str());
  }
  for (const auto& b : l.other_bounds)
    if (!(b.form.evaluate_exact(v) > 0)) throw DomainViolation("parameters violate " + b.to_string());
}

/// All tuples 0 <= n_1 <= ... <= n_k <= bound with exact energies. Phi is
/// checked at every interior point of every link and at both boundaries.
inline SpectrumTable enumerate(const SpectrumLadder& l, const std::vector<Scalar>& mu, long bound) {
  check_domain(l, mu);
  auto t = ladder_table();
  SpectrumTable out;
  out.chain = l.chain;
  out.labels = l.labels;
  out.branches = l.branches;
  out.mu.assign(mu.begin(), mu.begin() + static_cast<long>(l.labels.size()));
  out.bound = bound;
  const std::size_t k = l.labels.size();
  auto xi = t->index("X"), ti = t->index("T");
  std::vector<long> n(k, 0);
  std::function<void(std::size_t, long)> walk = [&](std::size_t depth, long from) {
    if (depth == k) {
      auto v = ladder_point(mu);
      for (std::size_t i = 0; i < k; ++i) v[t->index(l.labels[i])] = n[i];
      SpectrumRow row;
      row.labels = n;
      for (const auto& e : l.energies) row.energies.push_back(e.evaluate_exact(v));
      for (std::size_t j = 0; j < l.links.size(); ++j) {
        const auto& link = l.links[j];
        Scalar top = link.top.evaluate_exact(v);
        Scalar x = n[j] - (j ? n[j - 1] : 0);
        if (top.get_den() != 1 || top < x)
          throw exact::StructuralError("link " + std::to_string(j + 1) + " top is off the lattice");
        auto phi_at = [&](const Scalar& pos) -> Scalar {
          auto w = v;
          w[xi] = pos;
          w[ti] = top;
          return link.phi.evaluate_exact(w);
        };
        if (phi_at(0) != 0 || phi_at(top + 1) != 0)
          throw exact::StructuralError("structure function does not vanish at the ladder ends");
        for (long s = 1; s <= top.get_num().get_si(); ++s)
          if (!(phi_at(s) > 0))
            throw exact::StructuralError("structure function is not positive inside link " + std::to_string(j + 1));
        row.phi.push_back(phi_at(x));
      }
      out.degeneracy[row.energies.back()] += 1;
      out.rows.push_back(std::move(row));
      return;
    }
    for (long i = from; i <= bound; ++i) {
      n[depth] = i;
      walk(depth + 1, i);
    }
  };
  walk(0, 0);
  return out;
}

inline std::string to_csv(const SpectrumTable& tab) {
  std::ostringstream os;
  for (const auto& n : tab.labels) os << n << ",";
  for (std::size_t i = 0; i < tab.labels.size(); ++i) os << "H" << i + 1 << ",";
  for (std::size_t i = 0; i + 1 < tab.labels.size(); ++i) os << "Phi" << i + 1 << (i + 2 < tab.labels.size() ? "," : "");
  os << "\n";
  for (const auto& r : tab.rows) {
    for (auto n : r.labels) os << n << ",";
    for (const auto& e : r.energies) os << e.get_str() << ",";
    for (std::size_t i = 0; i < r.phi.size(); ++i) os << r.phi[i].get_str() << (i + 1 < r.phi.size() ? "," : "");
    os << "\n";
  }
  return os.str();
}

inline json to_json(const SpectrumTable& tab) {
  json j;
  j["chain"] = systems::chain_name(tab.chain);
  j["units"] = "hbar*mu";
  j["labels"] = tab.labels;
  j["branches"] = tab.branches;
  json mu = json::object();
  for (std::size_t i = 0; i < tab.mu.size(); ++i) mu[mu_names()[i]] = tab.mu[i].get_str();
  j["mu"] = mu;
  j["bound"] = tab.bound;
  json rows = json::array();
  for (const auto& r : tab.rows) {
    json row;
    row["n"] = r.labels;
    json e = json::array(), p = json::array();
    for (const auto& x : r.energies) e.push_back(x.get_str());
    for (const auto& x : r.phi) p.push_back(x.get_str());
    row["H"] = e;
    row["Phi"] = p;
    rows.push_back(row);
  }
  j["rows"] = rows;
  json deg = json::array();
  for (const auto& [e, c] : tab.degeneracy) deg.push_back({{"energy", e.get_str()}, {"count", c}});
  j["degeneracy"] = deg;
  return j;
}

/// Level diagram of the top Hamiltonian: one line per distinct energy,
/// labelled with its value and multiplicity.
inline std::string to_svg(const SpectrumTable& tab) {
  const int width = 360, top = 30, bottom = 30, height = 480;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  os << "<text x=\"10\" y=\"18\" font-family=\"monospace\" font-size=\"12\">(" << systems::chain_name(tab.chain)
     << ") H" << tab.labels.size() << " / hbar mu</text>\n";
  if (!tab.degeneracy.empty()) {
    double lo = tab.degeneracy.begin()->first.get_d(), hi = tab.degeneracy.rbegin()->first.get_d();
    double span = hi > lo ? hi - lo : 1.0;
    os << std::fixed << std::setprecision(2);
    for (const auto& [e, c] : tab.degeneracy) {
      double y = height - bottom - (e.get_d() - lo) / span * (height - top - bottom);
      os << "<line x1=\"40\" x2=\"200\" y1=\"" << y << "\" y2=\"" << y << "\" stroke=\"black\"/>\n";
      os << "<text x=\"210\" y=\"" << y + 4 << "\" font-family=\"monospace\" font-size=\"10\">" << e.get_str()
         << " (" << c << ")</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace hchain::spectrum
