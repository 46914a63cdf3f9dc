#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <map>
#include <sstream>

#include "hchain/numeric/json_io.hpp"
#include "hchain/report/verify.hpp"

namespace {

using namespace hchain;
using exact::Poly;
using exact::Scalar;
using report::json;

constexpr int kPass = 0, kFail = 1, kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string config;
  std::string chain, system;
  std::string mu = "1", hbar = "1";
  std::array<std::string, 4> mui{"1/2", "1/3", "1/5", "1/7"};
  long bound = 3;
  std::string format;
  std::string out;
  unsigned long seed = 20261016;
  std::string branches;
  bool oracle = false;
  bool plot = false;
  std::string cutoff = "40";
  // integrator
  double step = 1e-4, horizon = 10, floor = 1e-3;
  std::optional<double> tolerance;
  int order = 2;
  std::vector<std::string> params;
  std::vector<double> state;
  // radial grid
  double omega = 1, nu = 0.5;
  std::size_t points = 201, count = 3;
  double eps = 0, length = 0;
};

/// "3", "-2/7", ".5", "1.25e-1" as exact rationals.
Scalar parse_rational(std::string s) {
  auto bad = [&] { return UsageError("not a number: '" + s + "'"); };
  if (s.empty()) throw bad();
  if (s.find('/') != std::string::npos) {
    Scalar q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw bad();
    q.canonicalize();
    return q;
  }
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
  mpz_class num = 0, den = 1;
  bool digits = false;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i, digits = true) num = num * 10 + (s[i] - '0');
  if (i < s.size() && s[i] == '.')
    for (++i; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i, digits = true) {
      num = num * 10 + (s[i] - '0');
      den *= 10;
    }
  if (!digits) throw bad();
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    long e = 0;
    try {
      std::size_t used = 0;
      e = std::stol(s.substr(i + 1), &used);
      if (i + 1 + used != s.size()) throw bad();
    } catch (const std::logic_error&) {
      throw bad();
    }
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(e)));
    if (e > 0) num *= p;
    else den *= p;
    i = s.size();
  }
  if (i != s.size()) throw bad();
  Scalar q(neg ? -num : num, den);
  q.canonicalize();
  return q;
}

/// Config values override flags. Keys are the long flag names.
void apply_config(Options& o) {
  if (o.config.empty()) return;
  std::ifstream in(o.config);
  if (!in) throw UsageError("cannot read config file " + o.config);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("config file is not JSON: " + std::string(e.what()));
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  auto text = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  const std::map<std::string, std::function<void(const json&)>> keys{
      {"chain", [&](const json& v) { o.chain = text(v); }},
      {"system", [&](const json& v) { o.system = text(v); }},
      {"mu", [&](const json& v) { o.mu = text(v); }},
      {"mu1", [&](const json& v) { o.mui[0] = text(v); }},
      {"mu2", [&](const json& v) { o.mui[1] = text(v); }},
      {"mu3", [&](const json& v) { o.mui[2] = text(v); }},
      {"mu4", [&](const json& v) { o.mui[3] = text(v); }},
      {"hbar", [&](const json& v) { o.hbar = text(v); }},
      {"bound", [&](const json& v) { o.bound = v.get<long>(); }},
      {"format", [&](const json& v) { o.format = v.get<std::string>(); }},
      {"out", [&](const json& v) { o.out = v.get<std::string>(); }},
      {"seed", [&](const json& v) { o.seed = v.get<unsigned long>(); }},
      {"branches", [&](const json& v) { o.branches = text(v); }},
      {"oracle", [&](const json& v) { o.oracle = v.get<bool>(); }},
      {"plot", [&](const json& v) { o.plot = v.get<bool>(); }},
      {"cutoff", [&](const json& v) { o.cutoff = text(v); }},
      {"step", [&](const json& v) { o.step = v.get<double>(); }},
      {"horizon", [&](const json& v) { o.horizon = v.get<double>(); }},
      {"floor", [&](const json& v) { o.floor = v.get<double>(); }},
      {"tolerance", [&](const json& v) { o.tolerance = v.get<double>(); }},
      {"order", [&](const json& v) { o.order = v.get<int>(); }},
      {"param", [&](const json& v) { o.params = v.get<std::vector<std::string>>(); }},
      {"state", [&](const json& v) { o.state = v.get<std::vector<double>>(); }},
      {"omega", [&](const json& v) { o.omega = v.get<double>(); }},
      {"nu", [&](const json& v) { o.nu = v.get<double>(); }},
      {"points", [&](const json& v) { o.points = v.get<std::size_t>(); }},
      {"count", [&](const json& v) { o.count = v.get<std::size_t>(); }},
      {"eps", [&](const json& v) { o.eps = v.get<double>(); }},
      {"L", [&](const json& v) { o.length = v.get<double>(); }},
  };
  for (const auto& [k, v] : j.items()) {
    auto it = keys.find(k);
    if (it == keys.end()) throw UsageError("unknown config key '" + k + "'");
    try {
      it->second(v);
    } catch (const json::exception&) {
      throw UsageError("config key '" + k + "' has the wrong type");
    }
  }
}

systems::ChainLabel require_chain(const Options& o) {
  if (o.chain.empty()) throw UsageError("--chain is required");
  auto c = systems::parse_chain(o.chain);
  if (!c) throw UsageError("unknown chain '" + o.chain + "' (expected 1,1,2 1,2,2 1,2,4 or 1,2,4,8)");
  return *c;
}

report::SystemSelector require_system(const Options& o) {
  if (o.system.empty()) throw UsageError("--system is required");
  auto s = report::parse_system(o.system);
  if (!s) throw UsageError("unknown system '" + o.system + "' (expected q, c, q-classical, c-quantum, ...)");
  return *s;
}

std::string require_format(const Options& o, const std::string& fallback, std::initializer_list<const char*> allowed) {
  std::string f = o.format.empty() ? fallback : o.format;
  for (const char* a : allowed)
    if (f == a) return f;
  throw UsageError("format '" + f + "' is not available for this command");
}

std::vector<Scalar> mu_values(const Options& o) {
  std::vector<Scalar> mu;
  for (const auto& s : o.mui) mu.push_back(parse_rational(s));
  return mu;
}

/// Writes to DIR/name when --out is set, else to stdout.
void emit(const Options& o, const std::string& name, const std::string& body) {
  if (o.out.empty()) {
    std::cout << body;
    return;
  }
  std::filesystem::create_directories(o.out);
  auto path = std::filesystem::path(o.out) / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << body;
  std::cerr << "wrote " << path.string() << "\n";
}

std::string slug(std::string s) {
  for (auto& c : s)
    if (c == ',') c = '-';
  return s;
}

int finish(const Options& o, const report::Manifest& m, const std::vector<report::Section>& sections,
           const std::string& stem) {
  auto fmt = require_format(o, "json", {"json", "md"});
  std::string body = fmt == "json" ? report::document(m, sections).dump(2) + "\n" : report::markdown(m, sections);
  emit(o, stem + "." + fmt, body);
  auto s = report::summarize(sections);
  if (!s.passed()) {
    std::cerr << "check failed: " << *s.first_failure << "\n";
    return kFail;
  }
  return kPass;
}

report::Manifest manifest(const std::string& command, const std::string& selector, const Options& o) {
  report::Manifest m{command, selector, json::object(), o.seed};
  return m;
}

int cmd_verify(const Options& o) {
  if (o.chain.empty() == o.system.empty()) throw UsageError("verify needs exactly one of --chain or --system");
  std::vector<std::function<report::Section()>> jobs;
  std::string selector;
  if (!o.chain.empty()) {
    auto c = require_chain(o);
    selector = "chain " + systems::chain_name(c);
    jobs = report::chain_jobs(c, o.seed);
  } else {
    auto s = require_system(o);
    selector = "system " + o.system;
    jobs = report::system_jobs(s);
  }
  require_format(o, "json", {"json", "md"});
  auto m = manifest("verify", selector, o);
  return finish(o, m, report::run_parallel(jobs), "verify-" + slug(o.chain.empty() ? o.system : o.chain));
}

int cmd_parts(const Options& o, const std::string& command, unsigned parts) {
  auto s = require_system(o);
  require_format(o, "json", {"json", "md"});
  auto m = manifest(command, "system " + o.system, o);
  return finish(o, m, report::run_parallel(report::system_jobs(s, parts)), command + "-" + o.system);
}

int cmd_report(const Options& o) {
  require_format(o, "md", {"json", "md"});
  Options x = o;
  if (x.format.empty()) x.format = "md";
  auto m = manifest("report", "all", o);
  return finish(x, m, report::run_parallel(report::report_jobs(o.seed)), "report");
}

std::vector<std::size_t> branch_indices(const Options& o, systems::ChainLabel c) {
  if (o.branches.empty()) return spectrum::printed_branches(c);
  std::vector<std::size_t> out;
  std::stringstream ss(o.branches);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(tok, &used);
      if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::logic_error&) {
      throw UsageError("bad branch index '" + tok + "'");
    }
  }
  return out;
}

int cmd_spectrum(const Options& o) {
  auto c = require_chain(o);
  auto fmt = require_format(o, "csv", {"csv", "json", "svg"});
  if (o.bound < 0) throw UsageError("--bound must be nonnegative");
  if (o.plot && o.out.empty()) throw UsageError("--plot needs --out");
  auto mu = mu_values(o);
  Scalar scale = parse_rational(o.mu), hbar = parse_rational(o.hbar);
  if (!(scale > 0) || !(hbar > 0)) throw UsageError("--mu and --hbar must be positive");
  auto branches = branch_indices(o, c);
  std::optional<spectrum::SpectrumLadder> lad;
  try {
    lad = spectrum::ladder(c, branches);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  auto m = manifest("spectrum", "chain " + systems::chain_name(c), o);
  const std::size_t k = lad->labels.size();
  for (std::size_t i = 0; i < k; ++i) m.parameters[spectrum::mu_names()[i]] = mu[i].get_str();
  m.parameters["mu"] = scale.get_str();
  m.parameters["hbar"] = hbar.get_str();
  m.parameters["bound"] = o.bound;
  m.parameters["branches"] = branches;
  m.parameters["oracle"] = o.oracle;

  spectrum::SpectrumTable tab;
  try {
    tab = spectrum::enumerate(*lad, mu, o.bound);
  } catch (const spectrum::DomainViolation& e) {
    json b = json::object();
    for (const auto& [n, v] : lad->lower_bounds) b[n] = "> " + v.get_str();
    for (const auto& x : lad->other_bounds) b[x.form.to_string()] = "> 0";
    json rep{{"manifest", report::to_json(m)}, {"domain_violation", e.what()}, {"bounds", b}};
    std::cout << rep.dump(2) << "\n";
    std::cerr << "domain violation: " << e.what() << "\n";
    return kFail;
  }

  std::vector<std::string> oracle_column;
  bool all_match = true;
  if (o.oracle) {
    Scalar top = 0;
    for (const auto& r : tab.rows) top = std::max(top, r.energies.back());
    auto orc = numeric::chain_spectrum_oracle(c, mu, top);
    for (const auto& r : tab.rows) {
      bool ok = orc.contains(r.energies.back()) && numeric::separable_quanta(c, r.energies, mu).has_value();
      all_match = all_match && ok;
      oracle_column.push_back(ok ? "match" : "missing");
    }
  }
  const std::string stem = "spectrum-" + slug(systems::chain_name(c));
  std::string body;
  if (fmt == "csv") {
    std::ostringstream os;
    os << "# manifest " << report::to_json(m).dump() << "\n";
    os << "# energies in units of hbar*mu = " << Scalar(hbar * scale).get_str() << "\n";
    std::istringstream csv(spectrum::to_csv(tab));
    std::string line;
    std::size_t row = 0;
    bool header = true;
    while (std::getline(csv, line)) {
      os << line;
      if (o.oracle) os << "," << (header ? std::string("oracle") : oracle_column[row++]);
      os << "\n";
      header = false;
    }
    body = os.str();
  } else if (fmt == "json") {
    json j = spectrum::to_json(tab);
    j["hbar_mu"] = Scalar(hbar * scale).get_str();
    if (o.oracle) {
      for (std::size_t i = 0; i < oracle_column.size(); ++i) j["rows"][i]["oracle"] = oracle_column[i];
      j["oracle_all_match"] = all_match;
    }
    body = json{{"manifest", report::to_json(m)}, {"spectrum", j}}.dump(2) + "\n";
  } else {
    body = "<!-- manifest " + report::to_json(m).dump() + " -->\n" + spectrum::to_svg(tab);
  }
  emit(o, stem + "." + fmt, body);
  if (o.plot && fmt != "svg") emit(o, stem + ".svg", "<!-- manifest " + report::to_json(m).dump() + " -->\n" + spectrum::to_svg(tab));
  if (!all_match) {
    std::cerr << "check failed: oracle comparison\n";
    return kFail;
  }
  return kPass;
}

int cmd_simulate(const Options& o) {
  require_format(o, "json", {"json", "md"});
  if (o.chain.empty() == o.system.empty()) throw UsageError("simulate needs exactly one of --chain or --system");
  Poly H;
  std::vector<std::pair<std::string, Poly>> integrals;
  exact::VarTablePtr t;
  std::string selector, stem;
  if (!o.system.empty()) {
    auto sel = require_system(o);
    if (sel.regimes.size() != 1 || sel.regimes[0] != systems::Regime::classical) {
      if (o.system.size() != 1) throw UsageError("simulate integrates classical systems only");
    }
    auto cs = systems::classical_system(sel.family);
    t = cs.vars;
    H = cs.gens.H;
    integrals = {{"H", cs.gens.H}, {"A", cs.gens.A}, {"B", cs.gens.B}};
    selector = "system " + report::system_name(sel.family, systems::Regime::classical);
    stem = "simulate-" + report::system_name(sel.family, systems::Regime::classical);
  } else {
    auto c = require_chain(o);
    auto def = systems::build_chain(c);
    t = def.vars;
    auto set = systems::chain_integral_set(def);
    H = def.members.hamiltonians.back();
    for (std::size_t i = 0; i < set.integrals.size(); ++i) integrals.emplace_back(set.names[i], set.integrals[i]);
    selector = "chain " + systems::chain_name(c);
    stem = "simulate-" + slug(systems::chain_name(c));
  }
  auto params = numeric::generic_couplings(t);
  for (const auto& kv : o.params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("--param expects name=value, got '" + kv + "'");
    std::string name = kv.substr(0, eq);
    if (!params.count(name)) throw UsageError("unknown parameter '" + name + "'");
    params[name] = parse_rational(kv.substr(eq + 1)).get_d();
  }
  std::vector<double> z = o.state;
  const std::size_t n = t->positions().size();
  if (z.empty()) z = numeric::generic_state(n);
  if (z.size() != 2 * n) throw UsageError("--state needs " + std::to_string(2 * n) + " values (positions, then momenta)");
  if (o.order != 2 && o.order != 4) throw UsageError("--order must be 2 or 4");
  if (!(o.step > 0) || !(o.horizon > 0)) throw UsageError("--step and --horizon must be positive");
  numeric::IntegratorSettings a{o.step, o.horizon, o.floor, o.order}, b = a;
  b.step = a.step / 2;
  auto fa = std::async(std::launch::async, [&] { return numeric::integrate_and_check(H, integrals, params, z, a); });
  auto fb = std::async(std::launch::async, [&] { return numeric::integrate_and_check(H, integrals, params, z, b); });
  auto ra = fa.get(), rb = fb.get();
  const double tol = o.tolerance.value_or(1e-9);

  report::Section s;
  s.title = "trajectory " + selector;
  json conv = json::object();
  bool reduces = true;
  for (std::size_t i = 0; i < ra.names.size(); ++i) {
    double ratio = rb.drift[i] > 0 ? ra.drift[i] / rb.drift[i] : INFINITY;
    conv[ra.names[i]] = numeric::fixed(ratio);
    reduces = reduces && ratio >= 3.0;
  }
  std::ostringstream d;
  d << "max relative drift " << numeric::fixed(ra.max_drift()).dump() << " against " << tol;
  s.checks.push_back({"relative drift below tolerance", ra.max_drift() < tol, d.str()});
  s.checks.push_back({"halving the step reduces every drift at least 3x", reduces, ""});
  json pj = json::object();
  for (const auto& [k, v] : params) pj[k] = numeric::fixed(v);
  s.data["parameters"] = pj;
  s.data["tolerance"] = numeric::fixed(tol);
  s.data["run"] = numeric::to_json(ra);
  s.data["halved"] = numeric::to_json(rb);
  s.data["drift_ratio"] = conv;
  auto m = manifest("simulate", selector, o);
  m.parameters = {{"step", numeric::fixed(o.step)}, {"horizon", numeric::fixed(o.horizon)}, {"order", o.order},
                  {"floor", numeric::fixed(o.floor)}, {"tolerance", numeric::fixed(tol)}, {"couplings", pj},
                  {"state", numeric::fixed(z)}};
  return finish(o, m, {s}, stem);
}

int cmd_oracle(const Options& o) {
  require_format(o, "json", {"json", "md"});
  numeric::RadialProblem p{o.omega, o.nu, parse_rational(o.hbar).get_d()};
  numeric::GridSettings g;
  g.points = o.points;
  g.eps = o.eps;
  g.length = o.length;
  const double tol = o.tolerance.value_or(1e-4);
  auto m = manifest("oracle", o.chain.empty() ? "radial" : "chain " + o.chain, o);
  m.parameters = {{"omega", numeric::fixed(o.omega)}, {"nu", numeric::fixed(o.nu)}, {"hbar", o.hbar},
                  {"points", o.points},                 {"eps", numeric::fixed(o.eps)}, {"L", numeric::fixed(o.length)},
                  {"count", o.count},                   {"tolerance", numeric::fixed(tol)}};
  numeric::RadialOracle r;
  try {
    r = numeric::radial_oracle(p, o.count, g);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<report::Section> sections;
  report::Section rs;
  rs.title = "radial grid";
  std::ostringstream d;
  d << "max relative error " << numeric::fixed(r.max_error()).dump() << " against " << tol;
  rs.checks.push_back({"grid levels agree with the analytic ladder", r.max_error() < tol, d.str()});
  rs.data = numeric::to_json(r);
  sections.push_back(rs);
  if (!o.chain.empty()) {
    auto c = require_chain(o);
    auto mu = mu_values(o);
    Scalar cutoff = parse_rational(o.cutoff);
    for (std::size_t i = 0; i < 4; ++i) m.parameters[spectrum::mu_names()[i]] = mu[i].get_str();
    m.parameters["cutoff"] = cutoff.get_str();
    m.parameters["bound"] = o.bound;
    report::Section cs;
    cs.title = "separable oracle (" + systems::chain_name(c) + ")";
    bool contained = true;
    json per = json::array();
    try {
      for (const auto& combo : spectrum::branch_combinations(c)) {
        auto tab = spectrum::enumerate(spectrum::ladder(c, combo), mu, o.bound);
        Scalar top = 0;
        for (const auto& row : tab.rows) top = std::max(top, row.energies.back());
        auto cc = numeric::check_containment(tab, numeric::chain_spectrum_oracle(c, mu, top));
        contained = contained && cc.holds() && cc.joint_found == cc.rows;
        json e = numeric::to_json(cc);
        e["branches"] = combo;
        per.push_back(e);
      }
    } catch (const spectrum::DomainViolation& e) {
      std::cerr << "domain violation: " << e.what() << "\n";
      return kFail;
    }
    cs.checks.push_back({"every ladder level is a separable level", contained, ""});
    auto comp = numeric::check_completeness(c, mu, cutoff);
    cs.checks.push_back({"branch union is a bijection onto the separable states", comp.bijective(), ""});
    cs.data["containment"] = per;
    cs.data["completeness"] = numeric::to_json(comp);
    cs.data["oracle"] = numeric::to_json(numeric::chain_spectrum_oracle(c, mu, cutoff));
    sections.push_back(cs);
  }
  return finish(o, m, sections, "oracle");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of superintegrable Hamiltonian chains"};
  app.set_version_flag("--version", std::string(report::kVersion));
  app.require_subcommand(1);
  Options o;
  app.add_option("--config", o.config, "JSON file whose keys override the flags")->check(CLI::ExistingFile);

  auto common = [&](CLI::App* s) {
    s->add_option("--format", o.format, "json, csv, svg or md");
    s->add_option("--out", o.out, "output directory (default: stdout)");
    s->add_option("--seed", o.seed, "seed for sampled points");
  };
  auto mus = [&](CLI::App* s) {
    s->add_option("--mu", o.mu, "oscillator frequency (energies are in units of hbar*mu)");
    for (std::size_t i = 0; i < 4; ++i)
      s->add_option("--mu" + std::to_string(i + 1), o.mui[i], "singular parameter mu" + std::to_string(i + 1));
    s->add_option("--hbar", o.hbar, "Planck constant");
  };

  auto* verify = app.add_subcommand("verify", "all exact checks for a system or a chain");
  verify->add_option("--chain", o.chain, "chain label, e.g. 1,1,2");
  verify->add_option("--system", o.system, "q, c, q-classical, c-quantum, ...");
  common(verify);

  auto* fitc = app.add_subcommand("fit", "structure constants of the ternary algebra");
  fitc->add_option("--system", o.system, "q, c, q-classical, c-quantum, ...");
  common(fitc);

  auto* cas = app.add_subcommand("casimir", "Casimir reduction and generating function");
  cas->add_option("--system", o.system, "q, c, q-classical, c-quantum, ...");
  common(cas);

  auto* spec = app.add_subcommand("spectrum", "ladder spectrum table of a chain");
  spec->add_option("--chain", o.chain, "chain label");
  mus(spec);
  spec->add_option("--bound", o.bound, "largest quantum number");
  spec->add_option("--branches", o.branches, "branch index per link, e.g. 0,1");
  spec->add_flag("--oracle", o.oracle, "compare every row with the separable spectrum");
  spec->add_flag("--plot", o.plot, "also write an SVG level diagram");
  common(spec);

  auto* sim = app.add_subcommand("simulate", "symplectic trajectory and drift of the integrals");
  sim->add_option("--system", o.system, "q or c (classical)");
  sim->add_option("--chain", o.chain, "chain label");
  sim->add_option("--param", o.params, "coupling override name=value");
  sim->add_option("--state", o.state, "initial positions then momenta");
  sim->add_option("--step", o.step, "time step");
  sim->add_option("--horizon", o.horizon, "integration time");
  sim->add_option("--order", o.order, "2 (Strang) or 4 (triple jump)");
  sim->add_option("--floor", o.floor, "smallest allowed distance to a singular plane");
  sim->add_option("--tolerance", o.tolerance, "largest allowed relative drift");
  common(sim);

  auto* orc = app.add_subcommand("oracle", "grid check of the 1D ladder and the separable oracle");
  orc->add_option("--omega", o.omega, "frequency of the radial problem");
  orc->add_option("--nu", o.nu, "index of the radial problem (>= 1/2)");
  orc->add_option("--points", o.points, "grid points");
  orc->add_option("--eps", o.eps, "left end in oscillator lengths");
  orc->add_option("--L", o.length, "right end in oscillator lengths (0 = convergence study)");
  orc->add_option("--count", o.count, "number of levels");
  orc->add_option("--tolerance", o.tolerance, "largest allowed relative error");
  orc->add_option("--chain", o.chain, "also check a chain against the separable spectrum");
  orc->add_option("--cutoff", o.cutoff, "energy cutoff for the completeness check (hbar*mu)");
  orc->add_option("--bound", o.bound, "largest quantum number for containment");
  mus(orc);
  common(orc);

  auto* rep = app.add_subcommand("report", "consolidated findings");
  common(rep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    apply_config(o);
    if (verify->parsed()) return cmd_verify(o);
    if (fitc->parsed()) return cmd_parts(o, "fit", report::algebra);
    if (cas->parsed()) return cmd_parts(o, "casimir", report::casimir);
    if (spec->parsed()) return cmd_spectrum(o);
    if (sim->parsed()) return cmd_simulate(o);
    if (orc->parsed()) return cmd_oracle(o);
    return cmd_report(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kFail;
  }
}
