#pragma once

#include <random>
#include <vector>

#include "tsw/ordinal.hpp"
#include "tsw/rational.hpp"
#include "tsw/vector.hpp"

namespace tsw::testing {

// Random ordinal below w^maxExp with small coefficients; maxExp <= 5 keeps
// everything under w^w.
inline Ordinal randomOrdinal(std::mt19937_64& rng, int maxExp = 4,
                             int maxTerms = 3, int maxCoeff = 4) {
  std::uniform_int_distribution<int> termCount(0, maxTerms);
  std::uniform_int_distribution<int> expDist(0, maxExp);
  std::uniform_int_distribution<int> coeffDist(1, maxCoeff);
  Ordinal r;
  int terms = termCount(rng);
  for (int i = 0; i < terms; ++i) {
    r = r + Ordinal::omegaPow(
                Ordinal::fromInt(static_cast<std::uint64_t>(expDist(rng))),
                static_cast<std::uint64_t>(coeffDist(rng)));
  }
  return r;
}

// Random vector with |supp| <= maxSupport, indices in [1, indexRange],
// nonzero coefficients in [-2,2] cap Q with small denominators.
inline FinVector randomVector(std::mt19937_64& rng, int maxSupport,
                              int indexRange) {
  std::uniform_int_distribution<int> suppCount(1, maxSupport);
  std::uniform_int_distribution<int> indexDist(1, indexRange);
  std::uniform_int_distribution<int> numDist(-8, 8);
  std::uniform_int_distribution<int> denDist(1, 4);
  std::vector<std::pair<int, Rational>> coords;
  int count = suppCount(rng);
  for (int i = 0; i < count; ++i) {
    int num = numDist(rng);
    if (num == 0) num = 1;
    coords.emplace_back(indexDist(rng), Rational(num, 4 * denDist(rng)));
  }
  return FinVector(std::move(coords));
}

}  // namespace tsw::testing
