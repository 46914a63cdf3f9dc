#pragma once

#include <cstdlib>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hchain::report {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

/// Exact check: passes iff a residual vanishes or a construction succeeds.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Our exact result next to a reference value. kind is "comparison" or
/// "resolution" (a question the reference values leave open or state
/// inconsistently).
struct Finding {
  std::string item;
  std::string printed;
  std::string derived;
  bool match = false;
  std::string kind = "comparison";
  std::string note;
};

inline Finding comparison(std::string item, std::string printed, std::string derived, bool match) {
  return {std::move(item), std::move(printed), std::move(derived), match, "comparison", ""};
}

struct Section {
  std::string title;
  std::vector<Check> checks;
  std::vector<Finding> findings;
  json data = json::object();

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }
};

struct Manifest {
  std::string command;
  std::string selector;
  json parameters = json::object();
  unsigned long seed = 0;

  /// SOURCE_DATE_EPOCH when set, so that reruns stay byte-identical.
  static json timestamp() {
    const char* e = std::getenv("SOURCE_DATE_EPOCH");
    return e && *e ? json(std::string(e)) : json(nullptr);
  }
};

inline json to_json(const Manifest& m) {
  return {{"tool", "hchain"},     {"version", kVersion},  {"command", m.command},
          {"selector", m.selector}, {"parameters", m.parameters}, {"seed", m.seed},
          {"timestamp", Manifest::timestamp()}};
}

inline json to_json(const Check& c) {
  json j{{"name", c.name}, {"passed", c.passed}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

inline json to_json(const Finding& f) {
  json j{{"item", f.item}, {"kind", f.kind}, {"printed", f.printed}, {"derived", f.derived}, {"match", f.match}};
  if (!f.note.empty()) j["note"] = f.note;
  return j;
}

inline json to_json(const Section& s) {
  json checks = json::array(), findings = json::array();
  for (const auto& c : s.checks) checks.push_back(to_json(c));
  for (const auto& f : s.findings) findings.push_back(to_json(f));
  json j{{"title", s.title}, {"passed", s.passed()}, {"checks", checks}, {"findings", findings}};
  if (!s.data.empty()) j["data"] = s.data;
  return j;
}

struct Summary {
  std::size_t checks = 0, exact_failures = 0, findings = 0, discrepancies = 0;
  std::optional<std::string> first_failure;
  bool passed() const { return exact_failures == 0; }
};

inline Summary summarize(const std::vector<Section>& sections) {
  Summary s;
  for (const auto& sec : sections) {
    s.checks += sec.checks.size();
    for (const auto& c : sec.checks)
      if (!c.passed) {
        ++s.exact_failures;
        if (!s.first_failure) s.first_failure = sec.title + ": " + c.name;
      }
    s.findings += sec.findings.size();
    for (const auto& f : sec.findings)
      if (!f.match) ++s.discrepancies;
  }
  return s;
}

/// Exact failures and discrepancies are listed apart; only the former fail.
inline json document(const Manifest& m, const std::vector<Section>& sections) {
  auto s = summarize(sections);
  json failures = json::array(), discrepancies = json::array(), secs = json::array();
  for (const auto& sec : sections) {
    for (const auto& c : sec.checks)
      if (!c.passed) failures.push_back({{"section", sec.title}, {"check", c.name}, {"detail", c.detail}});
    for (const auto& f : sec.findings)
      if (!f.match) discrepancies.push_back({{"section", sec.title}, {"item", f.item}});
    secs.push_back(to_json(sec));
  }
  return {{"manifest", to_json(m)},
          {"summary",
           {{"passed", s.passed()},
            {"checks", s.checks},
            {"exact_failures", s.exact_failures},
            {"findings", s.findings},
            {"reference_discrepancies", s.discrepancies}}},
          {"exact_failures", failures},
          {"reference_discrepancies", discrepancies},
          {"sections", secs}};
}

namespace detail {

inline std::string cell(const std::string& s) {
  std::string out;
  for (char c : s) out += c == '|' ? std::string("\\|") : std::string(1, c);
  return out.size() > 160 ? out.substr(0, 157) + "..." : out;
}

}  // namespace detail

inline std::string markdown(const Manifest& m, const std::vector<Section>& sections) {
  auto s = summarize(sections);
  std::ostringstream os;
  os << "# hchain " << m.command << (m.selector.empty() ? "" : " " + m.selector) << "\n\n";
  os << "```json\n" << to_json(m).dump(2) << "\n```\n\n";
  os << "Exact checks: " << s.checks - s.exact_failures << "/" << s.checks << " passed. ";
  os << "Reference values: " << s.findings - s.discrepancies << "/" << s.findings << " reproduced.\n\n";
  os << "## Exact failures\n\n";
  if (s.exact_failures == 0) os << "None.\n\n";
  for (const auto& sec : sections)
    for (const auto& c : sec.checks)
      if (!c.passed) os << "- " << sec.title << ": " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
  if (s.exact_failures) os << "\n";
  os << "## Discrepancies with reference values\n\n";
  if (s.discrepancies == 0) os << "None.\n\n";
  for (const auto& sec : sections)
    for (const auto& f : sec.findings)
      if (!f.match) os << "- " << sec.title << ": " << f.item << "\n";
  if (s.discrepancies) os << "\n";
  for (const auto& sec : sections) {
    os << "## " << sec.title << "\n\n";
    if (!sec.checks.empty()) {
      os << "| check | result |\n|---|---|\n";
      for (const auto& c : sec.checks) os << "| " << detail::cell(c.name) << " | " << (c.passed ? "pass" : "FAIL") << " |\n";
      os << "\n";
    }
    if (!sec.findings.empty()) {
      os << "| item | reference | derived | agrees |\n|---|---|---|---|\n";
      for (const auto& f : sec.findings)
        os << "| " << detail::cell(f.item) << " | " << detail::cell(f.printed) << " | " << detail::cell(f.derived)
           << " | " << (f.match ? "yes" : "no") << " |\n";
      os << "\n";
      for (const auto& f : sec.findings)
        if (!f.note.empty()) os << "- " << f.item << ": " << f.note << "\n";
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace hchain::report
