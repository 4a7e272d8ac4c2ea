#pragma once

// Canonical representation of a digit-closed multiplicative semigroup:
// finitely many exponent runs plus an optional infinite tail.

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "dcsg/interval.hpp"

namespace dcsg {

using ExponentSet = std::set<Exponent>;

// A subsemigroup of the positive integers that is a union of full digit
// classes.  Canonical form: runs sorted by start, pairwise disjoint and
// non-adjacent as exponent runs, and every run ending strictly below the
// tail start (the tail is maximal).  Built only through normalize(), so the
// invariants always hold and equality is a structural check.
class DcSemigroup {
 public:
  Base base() const noexcept { return base_; }
  const std::vector<DigitInterval>& runs() const noexcept { return runs_; }
  const std::optional<Exponent>& tail() const noexcept { return tail_; }

 private:
  DcSemigroup(Base base, std::vector<DigitInterval> runs,
              std::optional<Exponent> tail)
      : base_(base), runs_(std::move(runs)), tail_(tail) {}

  friend DcSemigroup normalize(Base, std::vector<DigitInterval>,
                               std::optional<Exponent>);

  Base base_;
  std::vector<DigitInterval> runs_;
  std::optional<Exponent> tail_;
};

// Canonical form of an arbitrary union of exponent runs and an optional
// tail: overlapping or adjacent runs merge, and any run that reaches the
// tail is absorbed into it (lowering the tail start to the run start).
inline DcSemigroup normalize(Base base, std::vector<DigitInterval> intervals,
                             std::optional<Exponent> tail) {
  if (tail && *tail < 0) {
    throw std::invalid_argument("tail start must be non-negative");
  }
  std::sort(intervals.begin(), intervals.end());
  std::vector<DigitInterval> merged;
  for (const DigitInterval& iv : intervals) {
    if (!merged.empty() && iv.start() <= merged.back().end()) {
      const DigitInterval& last = merged.back();
      const Exponent end = std::max(last.end(), iv.end());
      merged.back() = DigitInterval(last.start(), end - last.start());
    } else {
      merged.push_back(iv);
    }
  }
  if (tail) {
    while (!merged.empty() && merged.back().end() >= *tail) {
      tail = std::min(*tail, merged.back().start());
      merged.pop_back();
    }
  }
  return {base, std::move(merged), tail};
}

/// True iff the digit class of x belongs to the semigroup.
inline bool member(const DcSemigroup& g, const BigUint& x) {
  const Exponent e = digit_length(x, g.base());
  if (g.tail() && e >= *g.tail()) {
    return true;
  }
  for (const DigitInterval& run : g.runs()) {
    if (e < run.start()) {
      return false;
    }
    if (e < run.end()) {
      return true;
    }
  }
  return false;
}

// Structural equality; sound and complete for equality of the represented
// integer sets because the canonical form is unique.
inline bool equals(const DcSemigroup& a, const DcSemigroup& b) {
  if (!(a.base() == b.base())) {
    throw std::invalid_argument("cannot compare semigroups over different bases");
  }
  return a.runs() == b.runs() && a.tail() == b.tail();
}

/// All exponents e < bound whose digit class lies in the semigroup.
inline ExponentSet exponents_upto(const DcSemigroup& g, Exponent bound) {
  if (bound < 0) {
    throw std::invalid_argument("bound must be non-negative");
  }
  ExponentSet out;
  for (const DigitInterval& run : g.runs()) {
    for (Exponent e = run.start(); e < std::min(run.end(), bound); ++e) {
      out.insert(e);
    }
  }
  if (g.tail()) {
    for (Exponent e = *g.tail(); e < bound; ++e) {
      out.insert(e);
    }
  }
  return out;
}

}  // namespace dcsg
