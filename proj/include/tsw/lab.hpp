#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsw/norm.hpp"
#include "tsw/space.hpp"

namespace tsw::lab {

// History tuple (0, n_1, ..., n_s) of family indices; s = 0 is the bare root
// history (0), whose theta-product is 1 and whose index product is 1.
struct HistoryTuple {
  std::vector<int> indices;  // starts with 0

  std::size_t length() const { return indices.size() - 1; }
  bool operator==(const HistoryTuple& o) const { return indices == o.indices; }
  bool operator<(const HistoryTuple& o) const { return indices < o.indices; }
  std::string str() const;
};

// N_r(eps)  = histories with eps * theta_{n_1}...theta_{n_s} > theta_r.
// K(delta, p, eta) = histories with theta-product > delta * theta_p and
//                    l(alpha_{n_s}...alpha_{n_1}) < eta.
struct HistoryQuery {
  enum class Kind { N, K } kind;
  Rational eps;    // N only
  int r = 0;       // N only
  Rational delta;  // K only
  int p = 0;       // K only
  Ordinal eta;     // K only

  static HistoryQuery forN(Rational eps, int r) {
    return {Kind::N, std::move(eps), r, {}, 0, {}};
  }
  static HistoryQuery forK(Rational delta, int p, Ordinal eta) {
    return {Kind::K, {}, 0, std::move(delta), p, std::move(eta)};
  }
};

std::vector<HistoryTuple> enumerateHistories(const SpaceSpec& space,
                                             const HistoryQuery& query);

// Leading exponent of alpha_{n_s} ... alpha_{n_1} for a history.
Ordinal historyLeadingExp(const SpaceSpec& space, const HistoryTuple& h);
// Theta product over a history (1 for the bare root).
Rational historyThetaProduct(const SpaceSpec& space, const HistoryTuple& h);

// gamma(eps, m) = max l(alpha_{n_s}...alpha_{n_1}) over histories in
// N_m(eps), with max over the empty class = 0. Sums of leading exponents are
// maximized exactly over orderings (maximalSum).
Ordinal gamma(const SpaceSpec& space, const Rational& eps, int m);

// gamma(eps, m) for every m = 1..mMax from a single enumeration: the classes
// N_m(eps) are nested in m, so each multiset is attributed to the least m it
// qualifies for and a prefix max finishes the table (1-based in [0]..).
std::vector<Ordinal> gammaTable(const SpaceSpec& space, const Rational& eps,
                                int mMax);

// Finite probe of the criterion: for each (eps, beta), the least m <= mBound
// with gamma(eps,m) + 2 + beta < l(alpha_m). Evidence, not proof.
struct DaggerCell {
  Rational eps;
  Ordinal beta;
  std::optional<int> witness;
  Ordinal gammaAtWitness;  // gamma(eps, witness) when present
};

struct DaggerReport {
  int mBound = 0;
  std::vector<DaggerCell> cells;
  // Finite-range evidence only; the quantifier over beta < w^xi is infinite.
  std::string label = "finite-instance evidence, not a proof";
};

DaggerReport daggerProbe(const SpaceSpec& space,
                         const std::vector<Rational>& epsGrid,
                         const std::vector<Ordinal>& betas, int mBound);

// One level of the parameter-selection recursion.
struct ScheduleLevel {
  int p = 0;
  int q = 0;
  Ordinal eta;
  FinSet ground;            // finite stand-in for the extracted infinite set
  Rational delta;           // 4^{-n} by default
  Rational budget;          // smallness budget for Z(p_n) vectors
  std::optional<int> leaves;     // override: support size of the level average
  std::optional<int> topBlocks;  // override: top branching of the average
};

struct ParamSchedule {
  Rational epsilon;
  std::vector<Ordinal> betas;        // beta_n increasing to w^xi
  std::vector<ScheduleLevel> levels; // 1-based levels stored from index 0
  bool reduced = false;              // true when built outside selectParams

  const ScheduleLevel& level(int n) const { return levels.at(n - 1); }
  int depth() const { return static_cast<int>(levels.size()); }
};

// Paper-faithful selection: least p_n with theta_{p_n} <= eps^2/4^n and
// gamma(eps,p_n)+2+gamma(eps,q_{n-1})+2+eta_{n-1}+1+...+eta_1+1+beta_n <
// l(alpha_{p_n}); eta_n = gamma(eps,p_n)+gamma(eps,q_{n-1})+1; least q_n >
// p_n with theta_{q_n} <= eps*theta_{p_n}/4^n. Grounds are grown greedily
// inside M0 and the two containments are certified exhaustively on them:
//   S_{beta_n}[S_{eta_1+1},...,S_{eta_n+1}] cap [M_n] subset F_{p_n}
//   [F_{n_1},...,F_{n_s}]   cap [M_n] subset S_{eta_n}   for h in K_n.
ParamSchedule selectParams(const SpaceSpec& space, const FinSet& m0,
                           const Rational& eps, int depth,
                           std::size_t groundCap = 16);

// Composition chain [S_{eta_a+1}, ..., S_{eta_b+1}] over schedule levels
// a..b, optionally headed by S_{beta}; used by the containment checks and by
// decomposition verification.
FamilyPtr supportChain(const ParamSchedule& schedule, int fromLevel,
                       int toLevel, const std::optional<Ordinal>& headBeta);

}  // namespace tsw::lab
