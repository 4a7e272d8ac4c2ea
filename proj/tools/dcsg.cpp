// Command-line front end: compute digit-closed multiplicative closures,
// answer membership queries, and run the oracle verification sweeps.
//
// Exit codes: 0 success (and "member"/"no mismatches"), 1 negative result
// (non-member, or mismatches found by verify), 2 usage or domain errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "dcsg/dcsg.hpp"

namespace {

using dcsg::Base;
using dcsg::BigUint;
using dcsg::Exponent;
using dcsg::ExponentSet;

BigUint parse_decimal(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty number");
  }
  for (const char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
      throw std::invalid_argument("not a decimal integer: '" + text + "'");
    }
  }
  BigUint x(text);
  if (x == 0) {
    throw std::domain_error("elements must be positive integers, got '" +
                            text + "'");
  }
  return x;
}

std::vector<BigUint> parse_elements(const std::vector<std::string>& texts) {
  std::vector<BigUint> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) {
    out.push_back(parse_decimal(t));
  }
  return out;
}

std::string format_exponents(const ExponentSet& set) {
  std::string out = "{";
  for (Exponent e : set) {
    if (out.size() > 1) {
      out += ",";
    }
    out += std::to_string(e);
  }
  return out + "}";
}

int run_closure(std::int64_t base_value, const std::vector<std::string>& texts,
                bool json, bool ascii) {
  const Base base(base_value);
  const auto report = dcsg::make_closure_report(parse_elements(texts), base);
  if (json) {
    std::cout << dcsg::to_json_string(report) << "\n";
  } else {
    std::cout << dcsg::render_text(report.semigroup, ascii) << "\n";
  }
  return 0;
}

int run_member(std::int64_t base_value, const std::vector<std::string>& values,
               bool json) {
  if (values.size() < 2) {
    throw std::invalid_argument(
        "member needs at least one element and the query as last argument");
  }
  const Base base(base_value);
  const std::vector<std::string> element_texts(values.begin(),
                                               values.end() - 1);
  const BigUint query = parse_decimal(values.back());
  const auto semigroup =
      dcsg::smallest_dc_semigroup(parse_elements(element_texts), base);
  const bool is_member = dcsg::member(semigroup, query);
  if (json) {
    nlohmann::json j;
    j["base"] = base_value;
    j["elements"] = element_texts;
    j["member"] = is_member;
    j["query"] = values.back();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (is_member ? "yes" : "no") << "\n";
  }
  return is_member ? 0 : 1;
}

struct SweepCounters {
  long long cases = 0;
  long long mismatches = 0;
};

// Exhaustive construction-vs-index-oracle sweep over every nonempty
// exponent subset of {0..max_exp}, generators materialized as powers.
SweepCounters sweep_against_index_oracle(std::int64_t base_lo,
                                         std::int64_t base_hi,
                                         Exponent max_exp, Exponent bound,
                                         std::ostream& out) {
  SweepCounters counters;
  for (std::int64_t b = base_lo; b <= base_hi; ++b) {
    const Base base(b);
    const unsigned long mask_end = 1ul << (max_exp + 1);
    for (unsigned long mask = 1; mask < mask_end; ++mask) {
      ExponentSet J;
      std::vector<BigUint> generators;
      for (Exponent j = 0; j <= max_exp; ++j) {
        if (mask & (1ul << j)) {
          J.insert(j);
          BigUint p = 1;
          for (Exponent i = 0; i < j; ++i) {
            p *= b;
          }
          generators.push_back(std::move(p));
        }
      }
      const auto constructed = dcsg::smallest_dc_semigroup(generators, base);
      const auto report =
          dcsg::compare(constructed, dcsg::index_closure(J, base, bound));
      ++counters.cases;
      if (!report.match) {
        ++counters.mismatches;
        out << "mismatch: base=" << b << " J=" << format_exponents(J)
            << " construction-only="
            << format_exponents(report.only_in_semigroup)
            << " oracle-only=" << format_exponents(report.only_in_reference)
            << "\n";
      }
    }
  }
  return counters;
}

// Cross-check at tiny scale that assumes nothing about the exponent rule:
// integer-level closure vs index-level closure vs the construction, for
// generator sets of size <= 3 drawn from {b^j, b^j + 1 : j <= 4}.  Fixed
// bound 10 keeps the state inside the integer oracle's resource guard.
SweepCounters cross_check_integer_oracle(std::int64_t b, std::ostream& out) {
  constexpr Exponent kCrossBound = 10;
  const Base base(b);
  std::vector<BigUint> pool;
  for (Exponent j = 0; j <= 4; ++j) {
    BigUint p = 1;
    for (Exponent i = 0; i < j; ++i) {
      p *= b;
    }
    pool.push_back(p);
    pool.push_back(p + 1);
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  SweepCounters counters;
  const unsigned mask_end = 1u << pool.size();
  for (unsigned mask = 1; mask < mask_end; ++mask) {
    if (std::popcount(mask) > 3) {
      continue;
    }
    std::vector<BigUint> generators;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (mask & (1u << i)) {
        generators.push_back(pool[i]);
      }
    }
    const auto by_integers = dcsg::integer_closure(generators, base, kCrossBound);
    const auto by_indices = dcsg::index_closure(
        dcsg::exponent_set(generators, base), base, kCrossBound);
    const auto constructed = dcsg::exponents_upto(
        dcsg::smallest_dc_semigroup(generators, base), kCrossBound);
    ++counters.cases;
    if (by_integers.present != by_indices.present ||
        by_indices.present != constructed) {
      ++counters.mismatches;
      out << "mismatch: base=" << b
          << " integer=" << format_exponents(by_integers.present)
          << " index=" << format_exponents(by_indices.present)
          << " construction=" << format_exponents(constructed) << "\n";
    }
  }
  return counters;
}

int run_verify(std::int64_t base_lo, std::int64_t base_hi, Exponent max_exp,
               Exponent bound, bool json) {
  if (base_lo < 2 || base_hi < base_lo) {
    throw std::invalid_argument("base range must satisfy 2 <= lo <= hi");
  }
  if (base_hi - base_lo > 99) {
    throw std::invalid_argument("base range capped at 100 bases per sweep");
  }
  if (max_exp < 0 || max_exp > 12) {
    throw std::invalid_argument("--max-exp must be in 0..12");
  }
  if (bound <= max_exp || bound > 10000) {
    throw std::invalid_argument("--bound must exceed --max-exp and stay <= 10000");
  }

  std::ostream& out = std::cout;
  const auto sweep =
      sweep_against_index_oracle(base_lo, base_hi, max_exp, bound, out);
  long long total_mismatches = sweep.mismatches;

  nlohmann::json cross = nlohmann::json::array();
  std::vector<std::pair<std::int64_t, SweepCounters>> cross_results;
  for (std::int64_t b = std::max<std::int64_t>(base_lo, 2);
       b <= std::min<std::int64_t>(base_hi, 3); ++b) {
    const auto counters = cross_check_integer_oracle(b, out);
    cross_results.emplace_back(b, counters);
    total_mismatches += counters.mismatches;
  }

  if (json) {
    nlohmann::json j;
    j["bases"] = {{"hi", base_hi}, {"lo", base_lo}};
    j["bound"] = bound;
    j["cases"] = sweep.cases;
    j["max_exp"] = max_exp;
    j["mismatches"] = sweep.mismatches;
    for (const auto& [b, counters] : cross_results) {
      cross.push_back({{"base", b},
                       {"cases", counters.cases},
                       {"mismatches", counters.mismatches}});
    }
    j["integer_cross_checks"] = std::move(cross);
    out << j.dump() << "\n";
  } else {
    out << "construction vs index oracle: " << sweep.cases << " cases, "
        << sweep.mismatches << " mismatches\n";
    for (const auto& [b, counters] : cross_results) {
      out << "integer cross-check (base " << b << "): " << counters.cases
          << " cases, " << counters.mismatches << " mismatches\n";
    }
  }
  return total_mismatches == 0 ? 0 : 1;
}

std::pair<std::int64_t, std::int64_t> parse_base_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const std::int64_t single = std::stoll(text);
      return {single, single};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse base range '" + text +
                                "' (expected lo..hi)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Smallest multiplicative semigroups of positive integers closed under "
      "the base-b digit count.\n"
      "Intervals print as I_b(start,len): the integers whose base-b digit "
      "count lies in [start+1, start+len]; I_b(t,+inf) is every integer "
      "with more than t base-b digits."};
  app.require_subcommand(1);

  std::int64_t base_value = 10;
  bool json = false;
  bool ascii = false;

  std::vector<std::string> closure_elements;
  auto* closure_cmd = app.add_subcommand(
      "closure",
      "Print the smallest digit-closed multiplicative semigroup containing "
      "the given decimal integers.");
  closure_cmd->add_option("--base", base_value,
                          "radix for digit semantics (inputs stay decimal)");
  closure_cmd->add_flag("--json", json,
                        "print the machine-readable report instead of text");
  closure_cmd->add_flag("--ascii", ascii, "ASCII-only text output");
  closure_cmd->add_option("elements", closure_elements,
                          "decimal integers >= 1")
      ->required();

  std::vector<std::string> member_values;
  auto* member_cmd = app.add_subcommand(
      "member",
      "Decide whether the last integer lies in the semigroup generated by "
      "the preceding ones (exit 0 yes, 1 no).");
  member_cmd->add_option("--base", base_value,
                         "radix for digit semantics (inputs stay decimal)");
  member_cmd->add_flag("--json", json, "machine-readable verdict");
  member_cmd->add_option("values", member_values,
                         "generator elements followed by the query")
      ->required();

  std::string bases_range = "2..5";
  Exponent max_exp = 6;
  Exponent bound = 60;
  auto* verify_cmd = app.add_subcommand(
      "verify",
      "Check the construction against the brute-force oracles over every "
      "nonempty exponent subset of {0..max-exp}.");
  verify_cmd->add_option("--bases", bases_range, "base range, e.g. 2..5");
  verify_cmd->add_option("--base", base_value,
                         "single base (shorthand for --bases b..b)");
  verify_cmd->add_option("--max-exp", max_exp,
                         "largest generator exponent in the sweep (0..12)");
  verify_cmd->add_option("--bound", bound,
                         "exponent cutoff for the oracle comparison");
  verify_cmd->add_flag("--json", json, "machine-readable sweep report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (closure_cmd->parsed()) {
      return run_closure(base_value, closure_elements, json, ascii);
    }
    if (member_cmd->parsed()) {
      return run_member(base_value, member_values, json);
    }
    auto [lo, hi] = parse_base_range(bases_range);
    if (!verify_cmd->get_option("--base")->empty()) {
      lo = hi = base_value;
    }
    return run_verify(lo, hi, max_exp, bound, json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
