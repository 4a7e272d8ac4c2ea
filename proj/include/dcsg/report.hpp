#pragma once

// Report type for the command-line front end: the construction outcome
// together with its inputs, with canonical JSON serialization and the
// I_b(start,len) text rendering.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "dcsg/closure.hpp"
#include "dcsg/semigroup.hpp"

namespace dcsg {

struct ClosureReport {
  DcSemigroup semigroup;
  std::vector<std::string> elements;  // canonical decimal
  ExponentSet exponents;
  int case_id = 0;
  std::optional<Exponent> d;
  std::optional<Exponent> t;
};

inline ClosureReport make_closure_report(const std::vector<BigUint>& xs,
                                         Base base) {
  ConstructionTrace trace;
  DcSemigroup g = smallest_dc_semigroup(xs, base, &trace);
  ClosureReport report{std::move(g), {}, exponent_set(xs, base),
                       trace.case_id, trace.d,  trace.t};
  report.elements.reserve(xs.size());
  for (const BigUint& x : xs) {
    report.elements.push_back(x.str());
  }
  return report;
}

inline bool equals(const ClosureReport& a, const ClosureReport& b) {
  return equals(a.semigroup, b.semigroup) && a.elements == b.elements &&
         a.exponents == b.exponents && a.case_id == b.case_id && a.d == b.d &&
         a.t == b.t;
}

namespace detail {

inline std::string case_label(int case_id) {
  switch (case_id) {
    case 1: return "1";
    case 2: return "2";
    case 3: return "3";
    default: return "empty";
  }
}

inline int case_id_from_label(const std::string& label) {
  if (label == "1") return 1;
  if (label == "2") return 2;
  if (label == "3") return 3;
  if (label == "empty") return 0;
  throw std::invalid_argument("unknown case label: " + label);
}

inline nlohmann::json optional_to_json(const std::optional<Exponent>& v) {
  if (v) {
    return *v;
  }
  return nullptr;
}

inline std::optional<Exponent> optional_from_json(const nlohmann::json& j) {
  if (j.is_null()) {
    return std::nullopt;
  }
  return j.get<Exponent>();
}

}  // namespace detail

// Canonical machine-readable form: nlohmann::json keeps keys sorted and
// dump() is deterministic, so parse-then-reserialize is byte-identical.
inline std::string to_json_string(const ClosureReport& report) {
  nlohmann::json j;
  j["base"] = report.semigroup.base().value();
  j["elements"] = report.elements;
  j["exponents"] = report.exponents;
  nlohmann::json runs = nlohmann::json::array();
  for (const DigitInterval& run : report.semigroup.runs()) {
    runs.push_back({{"start", run.start()}, {"len", run.len()}});
  }
  j["runs"] = std::move(runs);
  j["tail"] = detail::optional_to_json(report.semigroup.tail());
  j["case"] = detail::case_label(report.case_id);
  j["d"] = detail::optional_to_json(report.d);
  j["t"] = detail::optional_to_json(report.t);
  return j.dump();
}

inline ClosureReport report_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const Base base(j.at("base").get<std::int64_t>());
  std::vector<DigitInterval> runs;
  for (const nlohmann::json& run : j.at("runs")) {
    runs.emplace_back(run.at("start").get<Exponent>(),
                      run.at("len").get<Exponent>());
  }
  ClosureReport report{
      normalize(base, std::move(runs),
                detail::optional_from_json(j.at("tail"))),
      j.at("elements").get<std::vector<std::string>>(),
      j.at("exponents").get<ExponentSet>(),
      detail::case_id_from_label(j.at("case").get<std::string>()),
      detail::optional_from_json(j.at("d")),
      detail::optional_from_json(j.at("t"))};
  return report;
}

// Text rendering in the (start, length) convention: I_b(i,k) covers the
// integers whose base-b digit count lies in [i+1, i+k].
inline std::string render_text(const DcSemigroup& g, bool ascii = false) {
  const std::string cup = ascii ? " U " : " ∪ ";
  const std::string b = std::to_string(g.base().value());
  if (g.tail() && *g.tail() == 0) {
    return "N*";  // canonical form of the full set has no runs
  }
  if (g.runs().empty() && !g.tail()) {
    return ascii ? "(empty)" : "∅";
  }
  std::string out;
  for (const DigitInterval& run : g.runs()) {
    if (!out.empty()) {
      out += cup;
    }
    out += "I_" + b + "(" + std::to_string(run.start()) + "," +
           std::to_string(run.len()) + ")";
  }
  if (g.tail()) {
    if (!out.empty()) {
      out += cup;
    }
    out += "I_" + b + "(" + std::to_string(*g.tail()) + ",+inf)";
  }
  return out;
}

}  // namespace dcsg
