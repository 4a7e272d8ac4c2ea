#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <stdexcept>

#include "dcsg/semigroup.hpp"
#include "support/testutil.hpp"

using dcsg::Base;
using dcsg::DcSemigroup;
using dcsg::DigitInterval;
using dcsg::Exponent;
using dcsg::ExponentSet;
using testsupport::bpow;

TEST_CASE("normalize merges adjacent and overlapping runs", "[semigroup]") {
  const DcSemigroup g = dcsg::normalize(Base(10), {{3, 2}, {5, 1}}, std::nullopt);
  REQUIRE(g.runs().size() == 1);
  CHECK(g.runs()[0] == DigitInterval(3, 3));
  CHECK_FALSE(g.tail().has_value());

  const DcSemigroup h =
      dcsg::normalize(Base(10), {{1, 4}, {2, 1}, {9, 2}}, std::nullopt);
  REQUIRE(h.runs().size() == 2);
  CHECK(h.runs()[0] == DigitInterval(1, 4));
  CHECK(h.runs()[1] == DigitInterval(9, 2));
}

TEST_CASE("normalize absorbs runs that reach the tail", "[semigroup]") {
  const DcSemigroup g = dcsg::normalize(Base(10), {{4, 10}}, 8);
  CHECK(g.runs().empty());
  CHECK(g.tail() == 4);

  // {1} followed immediately by [2, inf) is all of N*
  const DcSemigroup h = dcsg::normalize(Base(2), {{0, 1}}, 1);
  CHECK(h.runs().empty());
  CHECK(h.tail() == 0);

  // a separated run stays out of the tail
  const DcSemigroup s = dcsg::normalize(Base(10), {{2, 1}}, 4);
  REQUIRE(s.runs().size() == 1);
  CHECK(s.runs()[0] == DigitInterval(2, 1));
  CHECK(s.tail() == 4);
}

TEST_CASE("normalize rejects a negative tail", "[semigroup]") {
  CHECK_THROWS_AS(dcsg::normalize(Base(10), {}, -1), std::invalid_argument);
}

TEST_CASE("member checks the digit class of x", "[semigroup]") {
  const DcSemigroup g = dcsg::normalize(Base(10), {{3, 2}}, 6);
  CHECK(dcsg::member(g, 99999));
  CHECK_FALSE(dcsg::member(g, 100000));
  CHECK(dcsg::member(g, bpow(10, 7)));
  CHECK_FALSE(dcsg::member(g, 999));
  CHECK_THROWS_AS(dcsg::member(g, 0), std::domain_error);
}

TEST_CASE("equals is structural on canonical forms", "[semigroup]") {
  const DcSemigroup a = dcsg::normalize(Base(10), {{3, 2}}, 6);
  const DcSemigroup b = dcsg::normalize(Base(10), {{3, 2}}, 6);
  const DcSemigroup c = dcsg::normalize(Base(10), {{3, 2}}, 7);
  CHECK(dcsg::equals(a, b));
  CHECK_FALSE(dcsg::equals(a, c));

  const DcSemigroup merged = dcsg::normalize(Base(10), {{3, 3}}, std::nullopt);
  const DcSemigroup split =
      dcsg::normalize(Base(10), {{3, 2}, {5, 1}}, std::nullopt);
  CHECK(dcsg::equals(merged, split));

  const DcSemigroup other_base = dcsg::normalize(Base(9), {{3, 2}}, 6);
  CHECK_THROWS_AS(dcsg::equals(a, other_base), std::invalid_argument);
}

TEST_CASE("exponents_upto expands runs and tail below the bound",
          "[semigroup]") {
  const DcSemigroup g = dcsg::normalize(Base(10), {{3, 2}}, 6);
  CHECK(dcsg::exponents_upto(g, 9) == ExponentSet{3, 4, 6, 7, 8});

  const DcSemigroup empty = dcsg::normalize(Base(10), {}, std::nullopt);
  CHECK(dcsg::exponents_upto(empty, 5).empty());

  const DcSemigroup all = dcsg::normalize(Base(10), {}, 0);
  CHECK(dcsg::exponents_upto(all, 3) == ExponentSet{0, 1, 2});
}

TEST_CASE("member agrees with exponents_upto", "[semigroup]") {
  std::mt19937_64 rng(7041885);
  for (int round = 0; round < 200; ++round) {
    const auto sc = testsupport::make_split_case(rng);
    const Base base(sc.base);
    const DcSemigroup g = dcsg::normalize(base, sc.canonical_runs, sc.tail);
    const Exponent bound = 45;
    const ExponentSet present = dcsg::exponents_upto(g, bound);
    for (Exponent e = 0; e < bound; ++e) {
      const dcsg::BigUint lo = bpow(sc.base, e);
      const dcsg::BigUint hi = bpow(sc.base, e + 1) - 1;
      const bool expected = present.contains(e);
      if (dcsg::member(g, lo) != expected || dcsg::member(g, hi) != expected) {
        CAPTURE(sc.base, e);
        FAIL("member disagrees with exponents_upto");
      }
    }
  }
  SUCCEED();
}

TEST_CASE("normalize is idempotent and canonical forms are unique",
          "[semigroup]") {
  std::mt19937_64 rng(58220349);
  for (int round = 0; round < 2000; ++round) {
    const auto sc = testsupport::make_split_case(rng);
    const Base base(sc.base);
    const DcSemigroup canonical =
        dcsg::normalize(base, sc.canonical_runs, sc.tail);
    // the generated description is already canonical: normalize keeps it
    if (canonical.runs() != sc.canonical_runs || canonical.tail() != sc.tail) {
      CAPTURE(round, sc.base);
      FAIL("normalize changed an already-canonical description");
    }
    const DcSemigroup from_fragments =
        dcsg::normalize(base, sc.fragments, sc.fragment_tail);
    if (!dcsg::equals(canonical, from_fragments)) {
      CAPTURE(round, sc.base);
      FAIL("fragmented description normalized differently");
    }
    // canonical invariants: separated runs, tail strictly beyond the runs
    for (std::size_t m = 1; m < from_fragments.runs().size(); ++m) {
      REQUIRE(from_fragments.runs()[m - 1].end() <
              from_fragments.runs()[m].start());
    }
    if (from_fragments.tail() && !from_fragments.runs().empty()) {
      REQUIRE(from_fragments.runs().back().end() < *from_fragments.tail());
    }
    // re-normalizing is a fixpoint
    const DcSemigroup again = dcsg::normalize(base, from_fragments.runs(),
                                              from_fragments.tail());
    REQUIRE(dcsg::equals(again, from_fragments));
  }
  SUCCEED();
}
