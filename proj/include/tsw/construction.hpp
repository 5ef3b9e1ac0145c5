#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tsw/lab.hpp"

namespace tsw::lab {

// Repeated average: x supported in M with supp(x) in S_{eta+1}, l1 mass
// exact, and fNorm(x, S_eta) <= budget, verified exactly (never assumed).
// Coefficients are recursively uniform along the block tree. `gap` is
// invoked after each allocated support point with that point; its return
// value lower-bounds the next point (used to interleave deeper layers).
struct AverageShape {
  std::optional<int> leaves;
  std::optional<int> topBlocks;
};

FinVector repeatedAverage(const Ordinal& eta, const FinSet& m,
                          const Rational& mass, const Rational& budget,
                          const AverageShape& shape = {},
                          const std::function<int(int)>& gap = {});

// Interlaced multi-level vector of Z(p_n, ..., p_{n+k}) with its exact level
// decomposition (levels[j] has l1 mass 1/theta_{p_{n+j}}).
struct ZVector {
  FinVector vec;
  std::vector<FinVector> levels;
  int n = 0;
  int k = 0;
};

// Builds one member of Z(p_n,...,p_{n+k}) from the schedule grounds and
// re-verifies every defining condition exactly; throws VerificationError
// naming the first violated condition. minPos restricts the construction to
// ground elements >= minPos (for building successive Z blocks).
ZVector buildZ(const SpaceSpec& space, const ParamSchedule& schedule, int n,
               int k, int minPos = 0);

// Re-derives and re-verifies the pairwise disjoint level decomposition
// (masses 1/theta_{p_{n+j}}, support-chain membership); returns the levels.
std::vector<FinVector> decomposeZ(const SpaceSpec& space,
                                  const ParamSchedule& schedule,
                                  const ZVector& z);

// --- spreading-model lower bounds ------------------------------------------

struct SpreadingOptions {
  int patternBudget = 500;
  std::uint64_t seed = 1;
  int threads = 1;
  NormOptions norm;
  // When the blocks are Z-vectors, their level data enables the exact
  // one-vector-per-level functional bound.
  const std::vector<ZVector>* zBlocks = nullptr;
  const ParamSchedule* schedule = nullptr;
};

struct SpreadingResult {
  Rational empiricalMin;    // min over enumerated F and scalar patterns
  Rational certifiedLower;  // proven bound from an admissible configuration
  std::string certificate;  // description of the certifying mechanism
  FinSet argminSet;
  std::vector<Rational> argminPattern;
};

// Empirical minimum of norm(sum_{k in F} a_k b_k) / sum |a_k| over members F
// of `family` within the block index range and a budget of scalar patterns,
// together with a certified lower bound. certifiedLower <= empiricalMin.
SpreadingResult spreadingConstant(const std::vector<FinVector>& blocks,
                                  const FamilyPtr& family,
                                  const SpaceSpec& space,
                                  const SpreadingOptions& opts = {});

// --- norm upper bounds for Z vectors ----------------------------------------

struct BoundsReport {
  int n = 0, k = 0, m = 0;
  Rational value;        // norm (m = 0) or (p_m,q_m)-restricted norm
  Rational boundFine;    // 4^{-(n-1)} sum 2^{-j} + (1/eps - 3*4^{-(n+k)} | 4^{-m})
  Rational boundCoarse;  // 2*4^{-(n-1)} + 1/eps (m = 0 only)
  Rational marginFine;   // boundFine - value
  Rational marginCoarse;
  bool fineHolds = false;
  bool coarseHolds = false;
};

// Evaluates the vector against the closed-form restricted-tree bounds for
// restriction level m (m = 0 means unrestricted). Margins are reported, not
// asserted: reduced schedules may fail the fine bound.
BoundsReport verifyBounds(const SpaceSpec& space, const ParamSchedule& schedule,
                          const ZVector& z, int m,
                          const NormOptions& opt = {});

// --- scalar rule probe -------------------------------------------------------

struct ThetaRule {
  std::string name;
  std::function<Rational(int)> value;
};

struct SubmultCell {
  int m = 0;
  Rational edgeRatio;  // theta_{m+nMax} / theta_{nMax}
  Rational tailMax;    // max over the top quarter of the n range
};

struct SubmultReport {
  bool submultiplicative = true;  // theta_{m+n} >= theta_m * theta_n on grid
  std::vector<std::pair<int, int>> violations;
  std::vector<SubmultCell> ratios;
  std::string label = "finite-range evidence, not a limit statement";
};

SubmultReport submultiplicativeProbe(const ThetaRule& rule, int mMax, int nMax);

}  // namespace tsw::lab
