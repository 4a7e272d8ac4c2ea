#pragma once

// Construction of the smallest digit-closed multiplicative semigroup of the
// positive integers containing a finite generator set X, for a fixed base.
//
// The procedure works on J, the set of digit-length indices of X.  With
// j0 = min J and l0 the length of the maximal run of consecutive indices
// starting at j0, everything from exponent t = ceil(j0/l0) * j0 upwards is
// guaranteed, and below t the semigroup is exactly the union of all
// products of fewer than ceil(j0/l0) runs of J.

#include <iterator>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dcsg/interval.hpp"
#include "dcsg/semigroup.hpp"

namespace dcsg {

/// Maximal runs of consecutive exponents, ordered and strictly separated:
/// each run ends strictly before the next one starts.
using RunDecomposition = std::vector<DigitInterval>;

// What a single run (j,l) guarantees about the infinite part of the
// semigroup containing it: a concrete tail start, the whole of N*, or
// nothing (only for the run {1} in base 2, which generates just itself).
class TailResult {
 public:
  enum class Kind { TailAt, AllPositiveIntegers, NoTail };

  static TailResult at(Exponent t) { return TailResult(Kind::TailAt, t); }
  static TailResult all_positive_integers() {
    return TailResult(Kind::AllPositiveIntegers, 0);
  }
  static TailResult no_tail() { return TailResult(Kind::NoTail, 0); }

  Kind kind() const noexcept { return kind_; }

  Exponent start() const {
    if (kind_ != Kind::TailAt) {
      throw std::logic_error("TailResult carries no tail start");
    }
    return start_;
  }

  friend bool operator==(const TailResult&, const TailResult&) = default;

 private:
  TailResult(Kind kind, Exponent start) : kind_(kind), start_(start) {}

  Kind kind_;
  Exponent start_;
};

/// The digit-length indices of the generators: { floor(log_b x) : x in X }.
inline ExponentSet exponent_set(const std::vector<BigUint>& xs, Base base) {
  ExponentSet out;
  for (const BigUint& x : xs) {
    out.insert(digit_length(x, base));
  }
  return out;
}

/// Unique partition of an exponent set into maximal runs of consecutive
/// integers, each reported as (start, length).
inline RunDecomposition decompose_runs(const ExponentSet& exponents) {
  RunDecomposition runs;
  for (Exponent j : exponents) {
    if (j < 0) {
      throw std::invalid_argument("exponents must be non-negative");
    }
    if (!runs.empty() && runs.back().end() == j) {
      runs.back() = DigitInterval(runs.back().start(), runs.back().len() + 1);
    } else {
      runs.emplace_back(j, 1);
    }
  }
  return runs;
}

// Tail guaranteed by one run (j,l) of the semigroup under construction.
// With d = ceil(j/l): d >= 1 gives the tail start d*j; d = 0 (so j = 0)
// gives all of N* except for the base-2 run {1}, which is idempotent.
inline TailResult tail_start(Exponent j, Exponent l, Base base) {
  if (j < 0) {
    throw std::invalid_argument("run start must be non-negative");
  }
  if (l < 1) {
    throw std::invalid_argument("run length must be positive");
  }
  const Exponent d = j / l + (j % l != 0 ? 1 : 0);
  if (d >= 1) {
    return TailResult::at(detail::checked_mul(d, j));
  }
  if (base.value() > 2 || l >= 2) {
    return TailResult::all_positive_integers();
  }
  return TailResult::no_tail();
}

/// Degree guard for the product enumeration; inputs pushing d beyond this
/// are far past desk scale and are refused rather than ground through.
inline constexpr Exponent kMaxEnumerationDegree = 10'000;

// Products of every multiset of runs of size e, 1 <= e < d, deduplicated
// and sorted.  Level e+1 is built from the deduplicated level e, so the
// cost is bounded by the number of distinct products rather than by the
// count of multisets.
inline std::vector<DigitInterval> enumerate_multiset_products(
    const RunDecomposition& runs, Exponent d, Base base) {
  if (runs.empty()) {
    throw std::invalid_argument("run decomposition must be non-empty");
  }
  if (d < 2) {
    throw std::invalid_argument("product enumeration requires d >= 2");
  }
  if (d > kMaxEnumerationDegree) {
    throw ResourceError("product enumeration degree exceeds the supported bound");
  }
  std::set<DigitInterval> out(runs.begin(), runs.end());
  std::set<DigitInterval> level = out;
  for (Exponent e = 2; e < d; ++e) {
    std::set<DigitInterval> next;
    for (const DigitInterval& p : level) {
      for (const DigitInterval& r : runs) {
        next.insert(interval_product(p, r, base));
      }
    }
    out.insert(next.begin(), next.end());
    level = std::move(next);
  }
  return {out.begin(), out.end()};
}

/// How the construction resolved: which case ran, and the first-run
/// parameters d and t when the run-product enumeration applied.
struct ConstructionTrace {
  int case_id = 0;  // 1, 2 or 3; 0 when X is empty
  std::optional<Exponent> d;
  std::optional<Exponent> t;
};

namespace detail {

// Core of case 1; requires min(exponents) > 0.
inline DcSemigroup construct_above_zero(const ExponentSet& exponents,
                                        Base base, ConstructionTrace& trace) {
  const Exponent j0 = *exponents.begin();
  Exponent l0 = 1;
  while (exponents.contains(j0 + l0)) {
    ++l0;
  }
  const Exponent d = j0 / l0 + (j0 % l0 != 0 ? 1 : 0);
  const Exponent t = tail_start(j0, l0, base).start();  // d >= 1 here
  trace.d = d;
  trace.t = t;
  if (d == 1) {
    return normalize(base, {}, t);
  }
  const ExponentSet below_tail(exponents.begin(), exponents.lower_bound(t));
  std::vector<DigitInterval> products =
      enumerate_multiset_products(decompose_runs(below_tail), d, base);
  return normalize(base, std::move(products), t);
}

}  // namespace detail

// The smallest digit-closed multiplicative semigroup containing X.
// Dispatches on j0 = min of the exponent set J:
//   j0 > 0          -> run products below t = ceil(j0/l0)*j0, tail from t;
//   j0 = 0, b = 2   -> {1} alone, or {1} joined with the j0 > 0 result
//                      for J \ {0};
//   j0 = 0, b > 2   -> all positive integers.
// Empty X yields the empty semigroup.
inline DcSemigroup smallest_dc_semigroup(const std::vector<BigUint>& xs,
                                         Base base,
                                         ConstructionTrace* trace = nullptr) {
  const ExponentSet exponents = exponent_set(xs, base);
  ConstructionTrace local;
  ConstructionTrace& tr = trace ? *trace : local;
  tr = ConstructionTrace{};
  if (exponents.empty()) {
    return normalize(base, {}, std::nullopt);
  }
  if (*exponents.begin() > 0) {
    tr.case_id = 1;
    return detail::construct_above_zero(exponents, base, tr);
  }
  if (base.value() > 2) {
    tr.case_id = 3;
    return normalize(base, {}, 0);
  }
  tr.case_id = 2;
  if (exponents.size() == 1) {
    return normalize(base, {DigitInterval(0, 1)}, std::nullopt);  // X = {1}
  }
  const ExponentSet rest(std::next(exponents.begin()), exponents.end());
  const DcSemigroup inner = detail::construct_above_zero(rest, base, tr);
  std::vector<DigitInterval> runs = inner.runs();
  runs.emplace_back(0, 1);
  return normalize(base, std::move(runs), inner.tail());
}

}  // namespace dcsg
