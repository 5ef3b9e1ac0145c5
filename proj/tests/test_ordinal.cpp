#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "tsw/errors.hpp"
#include "tsw/ordinal.hpp"

using namespace tsw;

namespace {

Ordinal w() { return Ordinal::omega(); }
Ordinal fin(std::uint64_t n) { return Ordinal::fromInt(n); }

// Oracle: largest sum over every ordering of the multiset.
Ordinal bestPermutationSum(std::vector<Ordinal> parts) {
  std::sort(parts.begin(), parts.end());
  Ordinal best;
  do {
    Ordinal s;
    for (const auto& p : parts) s = s + p;
    if (s > best) best = s;
  } while (std::next_permutation(parts.begin(), parts.end(),
                                 [](const Ordinal& a, const Ordinal& b) {
                                   return a < b;
                                 }));
  return best;
}

}  // namespace

TEST_CASE("comparison follows the ordinal order") {
  CHECK(w() < w() + fin(1));
  CHECK(w() * fin(2) == w() * fin(2));
  CHECK(Ordinal::omegaPow(fin(2)) > w() * fin(5) + fin(3));
  CHECK(Ordinal() < fin(1));
  CHECK(fin(7) < w());
}

TEST_CASE("addition absorbs low terms") {
  CHECK(w() + fin(1) == parseOrdinal("w + 1"));
  CHECK(fin(1) + w() == w());
  CHECK(w() * fin(2) + fin(3) + Ordinal::omegaPow(fin(2)) ==
        Ordinal::omegaPow(fin(2)));
  CHECK(fin(2) + fin(3) == fin(5));
}

TEST_CASE("multiplication distributes from the left") {
  CHECK((w() + fin(1)) * fin(2) == w() * fin(2) + fin(1));
  CHECK(fin(2) * w() == w());
  CHECK(Ordinal::omegaPow(fin(2)) * w() == Ordinal::omegaPow(fin(3)));
  CHECK((w() * fin(3)) * Ordinal() == Ordinal());
  CHECK(Ordinal() * w() == Ordinal());
}

TEST_CASE("leading exponent") {
  CHECK(leadingExponent(Ordinal::omegaPow(fin(3), 2) + w()) == fin(3));
  CHECK(leadingExponent(fin(5)) == fin(0));
  CHECK(leadingExponent(w()) == fin(1));
  CHECK_THROWS_AS(leadingExponent(Ordinal()), std::domain_error);
}

TEST_CASE("parse and format round-trip") {
  CHECK(formatOrdinal(parseOrdinal("w^2*3 + w + 5")) == "w^2*3 + w + 5");
  CHECK(parseOrdinal("w^(w)") == Ordinal::omegaPow(w()));
  CHECK(parseOrdinal("0").isZero());
  // Non-canonical input is normalized, not rejected.
  CHECK(parseOrdinal("1 + w") == w());
  CHECK(parseOrdinal("w + w") == w() * fin(2));
  CHECK_THROWS_AS(parseOrdinal("w^"), ParseError);
  CHECK_THROWS_AS(parseOrdinal("3w"), ParseError);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    Ordinal a = testing::randomOrdinal(rng);
    CHECK(parseOrdinal(formatOrdinal(a)) == a);
  }
}

TEST_CASE("associativity and distributivity on random triples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    Ordinal a = testing::randomOrdinal(rng);
    Ordinal b = testing::randomOrdinal(rng);
    Ordinal c = testing::randomOrdinal(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("addition dominates its right argument; multiplication monotone") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    Ordinal a = testing::randomOrdinal(rng);
    Ordinal b = testing::randomOrdinal(rng);
    CHECK(a + b >= b);
    Ordinal c = testing::randomOrdinal(rng);
    if (!c.isZero()) {
      Ordinal lo = a <= b ? a : b;
      Ordinal hi = a <= b ? b : a;
      CHECK(lo * c <= hi * c);
      CHECK(c * lo <= c * hi);
    }
  }
}

TEST_CASE("leading exponent is additive on products") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    Ordinal a = testing::randomOrdinal(rng);
    Ordinal b = testing::randomOrdinal(rng);
    if (a.isZero() || b.isZero()) continue;
    CHECK(leadingExponent(a * b) == leadingExponent(a) + leadingExponent(b));
  }
}

TEST_CASE("maximalSum matches the permutation oracle") {
  // Nonincreasing order is not always the maximum: the absorbed tail should
  // come last.
  CHECK(maximalSum({w() + fin(5), w()}) == w() * fin(2) + fin(5));
  CHECK((w() + fin(5)) + w() == w() * fin(2));  // the nonincreasing order

  std::mt19937_64 rng(19);
  for (int i = 0; i < 300; ++i) {
    std::uniform_int_distribution<int> sizeDist(1, 4);
    std::vector<Ordinal> parts;
    int sz = sizeDist(rng);
    for (int j = 0; j < sz; ++j) {
      parts.push_back(testing::randomOrdinal(rng, 3, 2, 3));
    }
    CHECK(maximalSum(parts) == bestPermutationSum(parts));
  }
}

TEST_CASE("standard fundamental sequences") {
  CHECK(standardFundamental(w(), 4) == fin(4));
  CHECK(standardFundamental(Ordinal::omegaPow(fin(2)), 3) == w() * fin(3));
  CHECK(standardFundamental(Ordinal::omegaPow(w()), 5) ==
        Ordinal::omegaPow(fin(5)));
  CHECK(standardFundamental(Ordinal::omegaPow(fin(2)) + w(), 6) ==
        Ordinal::omegaPow(fin(2)) + fin(6));
  CHECK(standardFundamental(w() * fin(3), 2) == w() * fin(2) + fin(2));
  CHECK_THROWS_AS(standardFundamental(w() + fin(1), 2), std::domain_error);
  CHECK_THROWS_AS(standardFundamental(Ordinal(), 2), std::domain_error);

  // The sequence increases strictly to its limit.
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    Ordinal beta = testing::randomOrdinal(rng, 3, 2, 3);
    if (!beta.isLimit()) continue;
    Ordinal prev;
    for (std::uint64_t n = 1; n <= 5; ++n) {
      Ordinal cur = standardFundamental(beta, n);
      CHECK(cur < beta);
      if (n > 1) CHECK(prev < cur);
      prev = cur;
    }
  }
}
