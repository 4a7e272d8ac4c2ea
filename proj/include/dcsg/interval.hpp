#pragma once

// Digit intervals over a radix b >= 2 and their abelian product.
//
// For a base b, the digit class with exponent e is the set of integers with
// exactly e+1 digits, i.e. [b^e, b^(e+1)).  A DigitInterval (i,k) denotes the
// union of the k consecutive classes i, ..., i+k-1, i.e. [b^i, b^(i+k)).
// Under the product rule implemented here these intervals form an abelian
// semigroup; for b = 2 the singleton interval (0,1) = {1} is its identity.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dcsg {

/// Digit-length index of an integer: floor(log_b x) = (digit count) - 1.
using Exponent = std::int64_t;

/// Arbitrary-precision integer for generator values and membership queries.
using BigUint = boost::multiprecision::cpp_int;

/// Thrown when a desk-scale resource guard refuses an input.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Exponent checked_add(Exponent a, Exponent b) {
  Exponent r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("exponent overflow in addition");
  }
  return r;
}

inline Exponent checked_mul(Exponent a, Exponent b) {
  Exponent r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("exponent overflow in multiplication");
  }
  return r;
}

}  // namespace detail

/// Radix for digit representation; always >= 2.
class Base {
 public:
  explicit Base(std::int64_t b) : b_(b) {
    if (b < 2) {
      throw std::invalid_argument("base must be at least 2");
    }
  }

  std::int64_t value() const noexcept { return b_; }

  friend bool operator==(const Base&, const Base&) = default;

 private:
  std::int64_t b_;
};

/// The exponent run {start, ..., start+len-1}; as an integer set, all
/// positive integers whose digit count lies in [start+1, start+len].
class DigitInterval {
 public:
  DigitInterval(Exponent start, Exponent len) : start_(start), len_(len) {
    if (start < 0) {
      throw std::invalid_argument("interval start must be non-negative");
    }
    if (len < 1) {
      throw std::invalid_argument("interval length must be positive");
    }
    detail::checked_add(start, len);  // end() must stay in Exponent range
  }

  Exponent start() const noexcept { return start_; }
  Exponent len() const noexcept { return len_; }
  /// One past the last exponent of the run.
  Exponent end() const noexcept { return start_ + len_; }

  friend auto operator<=>(const DigitInterval&, const DigitInterval&) = default;

 private:
  Exponent start_;
  Exponent len_;
};

// floor(log_b x) for x >= 1, by exact integer arithmetic only: a floating
// log misclassifies values adjacent to powers of b.  Builds the squared
// powers b^(2^i) <= x, then assembles the exponent bit by bit.
inline Exponent digit_length(const BigUint& x, Base base) {
  if (x < 1) {
    throw std::domain_error("digit_length requires x >= 1");
  }
  const BigUint b(base.value());
  if (x < b) {
    return 0;
  }
  std::vector<BigUint> powers{b};
  while (true) {
    BigUint square = powers.back() * powers.back();
    if (square > x) {
      break;
    }
    powers.push_back(std::move(square));
    if (powers.size() > 62) {
      throw std::overflow_error("digit length exceeds Exponent range");
    }
  }
  Exponent e = 0;
  BigUint acc = 1;
  for (std::size_t i = powers.size(); i-- > 0;) {
    BigUint next = acc * powers[i];
    if (next <= x) {
      acc = std::move(next);
      e += Exponent{1} << i;
    }
  }
  return e;
}

/// Product of the abelian interval semigroup: componentwise addition of
/// (start, len), except that for b = 2 the interval (0,1) = {1} is neutral.
inline DigitInterval interval_product(const DigitInterval& a,
                                      const DigitInterval& c, Base base) {
  if (base.value() == 2) {
    if (a.start() == 0 && a.len() == 1) {
      return c;
    }
    if (c.start() == 0 && c.len() == 1) {
      return a;
    }
  }
  return {detail::checked_add(a.start(), c.start()),
          detail::checked_add(a.len(), c.len())};
}

/// q-fold product of an interval with itself, in closed form.
inline DigitInterval interval_power(const DigitInterval& a, Exponent q,
                                    Base base) {
  if (q < 1) {
    throw std::domain_error("interval_power requires q >= 1");
  }
  if (base.value() == 2 && a.start() == 0 && a.len() == 1) {
    return a;
  }
  return {detail::checked_mul(a.start(), q), detail::checked_mul(a.len(), q)};
}

/// Whether x falls in one of the digit classes covered by the interval.
inline bool interval_contains(const DigitInterval& a, const BigUint& x,
                              Base base) {
  const Exponent e = digit_length(x, base);
  return e >= a.start() && e < a.end();
}

}  // namespace dcsg
