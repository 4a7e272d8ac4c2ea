#pragma once

// Two brute-force closures for checking the construction, plus a report
// comparing a constructed semigroup against either of them.
//
// index_closure works on exponents only: present p and q generate p+q and
// p+q+1 (a product of a p+1-digit and a q+1-digit number has p+q+1 or
// p+q+2 digits, and both counts are always realized except around the
// base-2 identity {1}).  integer_closure assumes none of that: it closes an
// actual set of integers under pairwise multiplication and digit-class
// completion, so agreement between the two validates the exponent rule
// itself.  Neither route goes through interval_product.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <vector>

#include "dcsg/closure.hpp"
#include "dcsg/interval.hpp"
#include "dcsg/semigroup.hpp"

namespace dcsg {

/// Exponent membership that is exact below `bound` and says nothing at or
/// beyond it.
struct TruncatedExponentSet {
  ExponentSet present;
  Exponent bound = 0;
};

// Least fixpoint of the exponent-level product rule, truncated at bound.
// For b = 2 the exponent 0 is the class {1} and combines as an identity.
inline TruncatedExponentSet index_closure(const ExponentSet& start, Base base,
                                          Exponent bound) {
  if (bound < 0) {
    throw std::invalid_argument("bound must be non-negative");
  }
  for (Exponent j : start) {
    if (j < 0 || j >= bound) {
      throw std::invalid_argument("index_closure requires 0 <= j < bound");
    }
  }
  std::vector<char> present(static_cast<std::size_t>(bound), 0);
  std::vector<Exponent> members;
  std::vector<Exponent> work;
  const auto add = [&](Exponent e) {
    if (e < bound && !present[static_cast<std::size_t>(e)]) {
      present[static_cast<std::size_t>(e)] = 1;
      members.push_back(e);
      work.push_back(e);
    }
  };
  for (Exponent j : start) {
    add(j);
  }
  const bool binary = base.value() == 2;
  while (!work.empty()) {
    const Exponent p = work.back();
    work.pop_back();
    // members grows while we iterate; pairs with later additions are
    // handled when those additions are popped themselves.
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Exponent q = members[i];
      if (binary && (p == 0 || q == 0)) {
        continue;  // the class {1} contributes nothing new
      }
      add(detail::checked_add(p, q));
      add(detail::checked_add(detail::checked_add(p, q), 1));
    }
  }
  TruncatedExponentSet out{{}, bound};
  for (Exponent e = 0; e < bound; ++e) {
    if (present[static_cast<std::size_t>(e)]) {
      out.present.insert(e);
    }
  }
  return out;
}

// Defining closure on actual integers below b^bound: multiply members
// pairwise and complete every digit class that gains a member.  Both rules
// only ever add integers at least as large as what produced them, so the
// truncation is exact below the bound.  Desk scale only: the state is a
// byte per integer below b^bound.
inline TruncatedExponentSet integer_closure(const std::vector<BigUint>& xs,
                                            Base base, Exponent bound) {
  const std::int64_t b = base.value();
  if (b != 2 && b != 3) {
    throw ResourceError("integer_closure supports bases 2 and 3 only");
  }
  if (bound < 1 || bound > 12) {
    throw ResourceError("integer_closure supports bounds 1..12 only");
  }
  std::vector<std::uint64_t> powers(static_cast<std::size_t>(bound) + 1);
  powers[0] = 1;
  for (std::size_t e = 1; e < powers.size(); ++e) {
    powers[e] = powers[e - 1] * static_cast<std::uint64_t>(b);
  }
  const std::uint64_t limit = powers.back();

  std::vector<std::uint64_t> generators;
  generators.reserve(xs.size());
  for (const BigUint& x : xs) {
    if (x < 1) {
      throw std::domain_error("generators must be positive");
    }
    if (x >= limit) {
      throw ResourceError("integer_closure requires every generator below b^bound");
    }
    generators.push_back(x.convert_to<std::uint64_t>());
  }

  std::vector<char> in_set(limit, 0);
  std::vector<char> class_done(static_cast<std::size_t>(bound), 0);
  std::vector<std::uint64_t> work;
  const auto add = [&](std::uint64_t v) {
    if (in_set[v]) {
      return;
    }
    in_set[v] = 1;
    work.push_back(v);
    std::size_t e = 0;
    while (powers[e + 1] <= v) {
      ++e;
    }
    if (!class_done[e]) {
      class_done[e] = 1;
      for (std::uint64_t y = powers[e]; y < powers[e + 1]; ++y) {
        if (!in_set[y]) {
          in_set[y] = 1;
          work.push_back(y);
        }
      }
    }
  };
  for (std::uint64_t g : generators) {
    add(g);
  }
  while (!work.empty()) {
    const std::uint64_t u = work.back();
    work.pop_back();
    const std::uint64_t vmax = (limit - 1) / u;
    for (std::uint64_t v = 1; v <= vmax; ++v) {
      if (in_set[v]) {
        add(u * v);
      }
    }
  }

  TruncatedExponentSet out{{}, bound};
  for (Exponent e = 0; e < bound; ++e) {
    bool full = true;
    for (std::uint64_t y = powers[static_cast<std::size_t>(e)];
         y < powers[static_cast<std::size_t>(e) + 1]; ++y) {
      if (!in_set[y]) {
        full = false;
        break;
      }
    }
    if (full) {
      out.present.insert(e);
    }
  }
  return out;
}

/// Outcome of checking a constructed semigroup against an oracle.
struct MatchReport {
  bool match = false;
  ExponentSet only_in_semigroup;
  ExponentSet only_in_reference;
};

inline MatchReport compare(const DcSemigroup& g,
                           const TruncatedExponentSet& reference) {
  const ExponentSet got = exponents_upto(g, reference.bound);
  MatchReport report;
  std::set_difference(
      got.begin(), got.end(), reference.present.begin(),
      reference.present.end(),
      std::inserter(report.only_in_semigroup, report.only_in_semigroup.end()));
  std::set_difference(
      reference.present.begin(), reference.present.end(), got.begin(),
      got.end(),
      std::inserter(report.only_in_reference, report.only_in_reference.end()));
  report.match =
      report.only_in_semigroup.empty() && report.only_in_reference.empty();
  return report;
}

}  // namespace dcsg
