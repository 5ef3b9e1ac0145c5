#include "tsw/construction.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <thread>

#include "tsw/errors.hpp"

namespace tsw::lab {

namespace {

// Walks a ground set left to right handing out support points; `gap`
// reserves room after each point for interleaved deeper layers.
class GroundCursor {
 public:
  GroundCursor(const FinSet& ground, const std::function<int(int)>& gap)
      : ground_(ground), gap_(gap) {}

  int peek(int atLeast) const {
    int lb = std::max(lower_, atLeast);
    for (std::size_t i = idx_; i < ground_.size(); ++i) {
      if (ground_[i] >= lb) return ground_[i];
    }
    throw VerificationError("ground too short: no element >= " +
                            std::to_string(lb) + " in " + ground_.str());
  }

  int take(int atLeast) {
    int lb = std::max(lower_, atLeast);
    while (idx_ < ground_.size() && ground_[idx_] < lb) ++idx_;
    if (idx_ >= ground_.size()) {
      throw VerificationError("ground too short: no element >= " +
                              std::to_string(lb) + " in " + ground_.str());
    }
    int pos = ground_[idx_++];
    lower_ = gap_ ? gap_(pos) : pos + 1;
    return pos;
  }

 private:
  const FinSet& ground_;
  std::function<int(int)> gap_;
  std::size_t idx_ = 0;
  int lower_ = 0;
};

// Pinned shape: exactly r leaves, block sizes as even as possible, weights
// split uniformly across blocks at every level.
void buildBalancedSet(const Ordinal& alpha, int r, const Rational& share,
                      GroundCursor& cursor, int topBlocksOverride,
                      std::vector<std::pair<int, Rational>>& out) {
  if (r == 1) {
    out.emplace_back(cursor.take(1), share);
    return;
  }
  if (alpha.isZero()) {
    throw VerificationError("repeatedAverage: S_0 cannot host " +
                            std::to_string(r) + " points");
  }
  if (alpha == Ordinal::fromInt(1)) {
    cursor.peek(r);  // |G| <= min G
    for (int i = 0; i < r; ++i) {
      out.emplace_back(cursor.take(r), share / r);
    }
    return;
  }
  if (alpha.isSuccessor()) {
    const Ordinal delta = alpha.predecessor();
    int c = topBlocksOverride > 0
                ? std::min(topBlocksOverride, r)
                : std::min(r, static_cast<int>(std::ceil(std::sqrt(
                                  static_cast<double>(r)))));
    c = std::min(c, cursor.peek(c));  // block count <= min of the first block
    int base = r / c;
    int rem = r % c;
    for (int b = 0; b < c; ++b) {
      // Remainder lands on the later (deeper) blocks.
      int size = base + (b >= c - rem ? 1 : 0);
      buildBalancedSet(delta, size, share / c, cursor, 0, out);
    }
    return;
  }
  // Limit: place the set inside S_{fund(alpha, n)} with n <= min; n = r is
  // always feasible after skipping the cursor to value >= r.
  cursor.peek(r);
  buildBalancedSet(standardFundamental(alpha, static_cast<std::uint64_t>(r)),
                   r, share, cursor, topBlocksOverride, out);
}

// Greedy shape: c successive blocks, each as large as its starting position
// permits (the classical repeated-average profile: a deep set can then
// capture only about one block's worth of mass). Weights split uniformly
// across the blocks actually used.
void buildGreedySet(const Ordinal& alpha, int blocks, const Rational& share,
                    GroundCursor& cursor,
                    std::vector<std::pair<int, Rational>>& out) {
  if (alpha.isZero()) {
    out.emplace_back(cursor.take(1), share);
    return;
  }
  if (alpha == Ordinal::fromInt(1)) {
    int v = cursor.peek(2);
    std::vector<int> taken;
    for (int i = 0; i < v; ++i) taken.push_back(cursor.take(2));
    for (int pos : taken) out.emplace_back(pos, share / static_cast<int>(taken.size()));
    return;
  }
  if (alpha.isSuccessor()) {
    const Ordinal delta = alpha.predecessor();
    int c = std::min(blocks, cursor.peek(blocks));
    for (int b = 0; b < c; ++b) {
      buildGreedySet(delta, blocks, share / c, cursor, out);
    }
    return;
  }
  cursor.peek(blocks);
  buildGreedySet(standardFundamental(alpha,
                                     static_cast<std::uint64_t>(blocks)),
                 blocks, share, cursor, out);
}

int deriveBlocks(const Rational& mass, const Rational& budget) {
  Rational need = 2 * mass / budget;
  BigInt c = ceilRational(need);
  if (c > 64) {
    throw VerificationError(
        "repeatedAverage: budget needs about " + c.str() +
        " blocks (ground length around first*2^blocks); raise the budget");
  }
  return static_cast<int>(c);
}

}  // namespace

FinVector repeatedAverage(const Ordinal& eta, const FinSet& m,
                          const Rational& mass, const Rational& budget,
                          const AverageShape& shape,
                          const std::function<int(int)>& gap) {
  if (!(mass > 0)) throw std::invalid_argument("repeatedAverage: mass <= 0");
  if (!(budget > 0)) throw std::invalid_argument("repeatedAverage: budget <= 0");
  const Ordinal one = Ordinal::fromInt(1);
  const FamilyPtr suppFamily = FamilyExpr::schreier(eta + one);
  const FamilyPtr smallFamily = FamilyExpr::schreier(eta);

  // A slack budget is met by a single coordinate; a flat eta = 0 average
  // needs ceil(mass/budget) points; otherwise escalate the block count until
  // the verified smallness fits.
  int r = 0;  // pinned leaf count (balanced mode)
  int c = 0;  // escalating block count (greedy mode)
  if (shape.leaves) {
    r = *shape.leaves;
  } else if (budget >= mass) {
    r = 1;
  } else if (eta.isZero()) {
    BigInt need = ceilRational(mass / budget);
    if (need > 4096) {
      throw VerificationError("repeatedAverage: budget needs about " +
                              need.str() + " support points");
    }
    r = static_cast<int>(need);
  } else {
    c = shape.topBlocks.value_or(deriveBlocks(mass, budget));
  }

  const int attempts = r > 0 ? 1 : 5;
  std::string lastFailure;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<std::pair<int, Rational>> coords;
    try {
      GroundCursor cursor(m, gap);
      if (r > 0) {
        buildBalancedSet(eta + one, r, mass, cursor,
                         shape.topBlocks.value_or(0), coords);
      } else {
        buildGreedySet(eta + one, c, mass, cursor, coords);
      }
    } catch (const VerificationError& e) {
      lastFailure = e.what();
      break;  // ground exhausted; retrying larger cannot help
    }
    FinVector x(coords);
    if (x.l1Norm() != mass) {
      throw VerificationError("repeatedAverage: l1 mass mismatch");
    }
    if (!contains(suppFamily, x.support())) {
      throw VerificationError("repeatedAverage: support escapes S_(eta+1)");
    }
    Rational small = fNorm(x.coords(), smallFamily, x.supportSize());
    if (small <= budget) return x;
    lastFailure = "S_eta norm " + formatRational(small) + " exceeds budget " +
                  formatRational(budget) + " with " +
                  std::to_string(x.supportSize()) + " points";
    c *= 2;
  }
  throw VerificationError("repeatedAverage: " + lastFailure);
}

// --- Z vectors ---------------------------------------------------------------

namespace {

struct BuiltZ {
  FinVector vec;
  std::vector<FinVector> levels;
  int maxPos = 0;
};

void verifyLevelVector(const SpaceSpec& space, const ParamSchedule& schedule,
                       int level, const FinVector& y0) {
  const ScheduleLevel& lev = schedule.level(level);
  Rational mass = 1 / space.theta(lev.p);
  if (y0.l1Norm() != mass) {
    throw VerificationError("buildZ: level " + std::to_string(level) +
                            " l1 mass != 1/theta_p");
  }
  FinSet supp = y0.support();
  if (!supp.subsetOf(lev.ground)) {
    throw VerificationError("buildZ: level " + std::to_string(level) +
                            " support leaves its ground");
  }
  const Ordinal one = Ordinal::fromInt(1);
  if (!contains(FamilyExpr::schreier(lev.eta + one), supp)) {
    throw VerificationError("buildZ: level " + std::to_string(level) +
                            " support escapes S_(eta+1)");
  }
  Rational small =
      fNorm(y0.coords(), FamilyExpr::schreier(lev.eta), y0.supportSize());
  if (!(small <= lev.budget)) {
    throw VerificationError("buildZ: level " + std::to_string(level) +
                            " smallness " + formatRational(small) +
                            " exceeds budget " + formatRational(lev.budget));
  }
}

BuiltZ buildLayer(const SpaceSpec& space, const ParamSchedule& schedule,
                  int level, int depthLeft, int minPos) {
  const ScheduleLevel& lev = schedule.level(level);
  const Rational mass = 1 / space.theta(lev.p);
  AverageShape shape{lev.leaves, lev.topBlocks};
  std::vector<int> ground;
  for (int x : lev.ground) {
    if (x >= minPos) ground.push_back(x);
  }
  FinSet avail{std::move(ground)};

  BuiltZ out;
  if (depthLeft == 0) {
    out.vec = repeatedAverage(lev.eta, avail, mass, lev.budget, shape);
    out.levels = {out.vec};
    out.maxPos = out.vec.support().max();
    verifyLevelVector(space, schedule, level, out.vec);
    return out;
  }

  std::vector<BuiltZ> deeper;
  auto gap = [&](int mi) {
    deeper.push_back(
        buildLayer(space, schedule, level + 1, depthLeft - 1, mi + 1));
    return deeper.back().maxPos + 1;
  };
  FinVector y0 = repeatedAverage(lev.eta, avail, mass, lev.budget, shape, gap);
  verifyLevelVector(space, schedule, level, y0);
  if (deeper.size() != y0.supportSize()) {
    throw VerificationError("buildZ: interleaving out of step");
  }
  // x = theta_p^{-1} sum a_i e_{m_i} + sum a_i z_i with (m_i) = supp y0 and
  // a_i = theta_p * y0(m_i); the interlacing m_i < z_i < m_{i+1} is replayed
  // as an explicit check.
  const auto& coords = y0.coords();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const FinSet zSupp = deeper[i].vec.support();
    if (!(coords[i].first < zSupp.min())) {
      throw VerificationError("buildZ: m_i < z_i violated");
    }
    if (i + 1 < coords.size() && !(zSupp.max() < coords[i + 1].first)) {
      throw VerificationError("buildZ: z_i < m_{i+1} violated");
    }
  }
  out.vec = y0;
  out.levels.assign(static_cast<std::size_t>(depthLeft) + 1, FinVector());
  out.levels[0] = y0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    Rational ai = space.theta(lev.p) * coords[i].second;
    out.vec = out.vec.plus(deeper[i].vec.scaled(ai));
    for (int j = 1; j <= depthLeft; ++j) {
      out.levels[j] =
          out.levels[j].plus(deeper[i].levels[j - 1].scaled(ai));
    }
  }
  out.maxPos = out.vec.support().max();
  return out;
}

void verifyDecomposition(const SpaceSpec& space, const ParamSchedule& schedule,
                         const ZVector& z) {
  if (z.levels.size() != static_cast<std::size_t>(z.k) + 1) {
    throw VerificationError("decomposeZ: expected k+1 levels");
  }
  FinVector sum;
  FinSet seen;
  for (int j = 0; j <= z.k; ++j) {
    const FinVector& yj = z.levels[j];
    const ScheduleLevel& lev = schedule.level(z.n + j);
    if (yj.l1Norm() != 1 / space.theta(lev.p)) {
      throw VerificationError("decomposeZ: ||y_" + std::to_string(j) +
                              "||_l1 != 1/theta_p");
    }
    FinSet supp = yj.support();
    for (int x : supp) {
      if (seen.contains(x)) {
        throw VerificationError("decomposeZ: levels are not disjoint");
      }
    }
    seen = seen.unionWith(supp);
    if (!supp.subsetOf(lev.ground)) {
      throw VerificationError("decomposeZ: y_" + std::to_string(j) +
                              " leaves ground M_" + std::to_string(z.n + j));
    }
    if (!contains(supportChain(schedule, z.n, z.n + j, std::nullopt), supp)) {
      throw VerificationError("decomposeZ: y_" + std::to_string(j) +
                              " escapes [S_(eta_n+1),...,S_(eta_(n+j)+1)]");
    }
    sum = sum.plus(yj);
  }
  if (!(sum == z.vec)) {
    throw VerificationError("decomposeZ: levels do not sum to the vector");
  }
}

}  // namespace

ZVector buildZ(const SpaceSpec& space, const ParamSchedule& schedule, int n,
               int k, int minPos) {
  if (n < 1 || k < 0 || n + k > schedule.depth()) {
    throw std::invalid_argument("buildZ: levels n..n+k outside the schedule");
  }
  BuiltZ built = buildLayer(space, schedule, n, k, minPos);
  ZVector z;
  z.vec = std::move(built.vec);
  z.levels = std::move(built.levels);
  z.n = n;
  z.k = k;
  verifyDecomposition(space, schedule, z);
  return z;
}

std::vector<FinVector> decomposeZ(const SpaceSpec& space,
                                  const ParamSchedule& schedule,
                                  const ZVector& z) {
  verifyDecomposition(space, schedule, z);
  return z.levels;
}

// --- spreading constants -----------------------------------------------------

namespace {

std::vector<std::vector<Rational>> buildPatterns(std::size_t k, int budget,
                                                 std::uint64_t seed) {
  std::vector<std::vector<Rational>> out;
  // Vertices.
  for (std::size_t i = 0; i < k && static_cast<int>(out.size()) < budget; ++i) {
    std::vector<Rational> a(k, Rational(0));
    a[i] = 1;
    out.push_back(std::move(a));
  }
  if (static_cast<int>(out.size()) < budget) {
    out.emplace_back(k, Rational(1));  // uniform
  }
  if (k >= 2 && static_cast<int>(out.size()) < budget) {
    std::vector<Rational> alt(k, Rational(1));
    for (std::size_t i = 1; i < k; i += 2) alt[i] = -1;
    out.push_back(std::move(alt));  // alternating signs
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 12);
  std::uniform_int_distribution<int> den(1, 6);
  std::bernoulli_distribution flip(0.5);
  while (static_cast<int>(out.size()) < budget) {
    std::vector<Rational> a(k);
    for (std::size_t i = 0; i < k; ++i) {
      a[i] = Rational(num(rng), den(rng));
      if (flip(rng)) a[i] = -a[i];
    }
    out.push_back(std::move(a));
  }
  return out;
}

void runParallel(std::size_t items, int threads,
                 const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || items <= 1) {
    for (std::size_t i = 0; i < items; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t per = (items + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    std::size_t lo = t * per;
    std::size_t hi = std::min(items, lo + per);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

SpreadingResult spreadingConstant(const std::vector<FinVector>& blocks,
                                  const FamilyPtr& family,
                                  const SpaceSpec& space,
                                  const SpreadingOptions& opts) {
  if (blocks.empty()) {
    throw std::invalid_argument("spreadingConstant: no blocks");
  }
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    if (blocks[i].empty() || blocks[i + 1].empty() ||
        blocks[i].support().max() >= blocks[i + 1].support().min()) {
      throw std::invalid_argument("spreadingConstant: blocks not successive");
    }
  }
  const std::size_t kCount = blocks.size();
  FinSet ground = FinSet::range(1, static_cast<int>(kCount));
  std::vector<FinSet> members;
  for (const FinSet& f : enumerate(family, ground, kCount)) {
    if (!f.empty()) members.push_back(f);
  }
  if (members.empty()) {
    throw std::invalid_argument(
        "spreadingConstant: family has no nonempty member on the index range");
  }
  std::vector<Rational> blockNorms;
  for (const auto& b : blocks) {
    blockNorms.push_back(norm(b, space, opts.norm).value);
  }

  // Empirical minimum over members and scalar patterns.
  struct Candidate {
    Rational ratio;
    FinSet set;
    std::vector<Rational> pattern;
    bool valid = false;
  };
  std::vector<Candidate> perMember(members.size());
  runParallel(members.size(), opts.threads, [&](std::size_t mi) {
    const FinSet& f = members[mi];
    auto patterns =
        buildPatterns(f.size(), opts.patternBudget, opts.seed + mi);
    Candidate best;
    for (const auto& pat : patterns) {
      FinVector combo;
      Rational l1 = 0;
      std::size_t slot = 0;
      for (int k : f) {
        const Rational& a = pat[slot++];
        if (a == 0) continue;
        combo = combo.plus(blocks[static_cast<std::size_t>(k - 1)].scaled(a));
        l1 += abs(a);
      }
      if (l1 == 0) continue;
      Rational ratio = norm(combo, space, opts.norm).value / l1;
      if (!best.valid || ratio < best.ratio) {
        best = {ratio, f, pat, true};
      }
    }
    perMember[mi] = std::move(best);
  });
  SpreadingResult result;
  bool any = false;
  for (const auto& c : perMember) {
    if (c.valid && (!any || c.ratio < result.empiricalMin)) {
      result.empiricalMin = c.ratio;
      result.argminSet = c.set;
      result.argminPattern = c.pattern;
      any = true;
    }
  }

  // Certified bound, mechanism A: if for some n every enumerated member's
  // block collection is F_n-admissible, then
  // ||sum_F a_k b_k|| >= theta_n sum |a_k| ||b_k|| >= theta_n min||b_k|| sum.
  result.certifiedLower = 0;
  result.certificate = "trivial (0)";
  Rational minNorm;
  {
    bool first = true;
    for (const FinSet& f : members) {
      for (int k : f) {
        const Rational& bn = blockNorms[static_cast<std::size_t>(k - 1)];
        if (first || bn < minNorm) {
          minNorm = bn;
          first = false;
        }
      }
    }
  }
  auto memo = makeMembershipMemo();
  for (int n = 1; n <= space.nMax(); ++n) {
    bool all = true;
    for (const FinSet& f : members) {
      std::vector<int> minima;
      for (int k : f) {
        minima.push_back(blocks[static_cast<std::size_t>(k - 1)].support().min());
      }
      if (!contains(space.family(n), FinSet(std::move(minima)), *memo)) {
        all = false;
        break;
      }
    }
    if (all) {
      result.certifiedLower = space.theta(n) * minNorm;
      result.certificate =
          "blocks F_" + std::to_string(n) + "-admissible for every member";
      break;  // theta nonincreasing: the first qualifying n is best
    }
  }

  // Mechanism B: Z-vector levels. For each member F pick the least j0 <=
  // min F with F in S_{beta_{j0}}; the level-j0 parts y_k have exact masses
  // 1/theta_{p_{j0}} and their union must land in F_{p_{j0}}, giving
  // ||sum_F a_k z_k|| >= theta_{p_{j0}} sum |a_k| ||y_k||_l1 = sum |a_k|.
  if (opts.zBlocks && opts.schedule && opts.zBlocks->size() == kCount &&
      !opts.schedule->betas.empty()) {
    const ParamSchedule& sched = *opts.schedule;
    std::optional<Rational> boundB;
    bool allCertified = true;
    for (const FinSet& f : members) {
      std::optional<Rational> forMember;
      int maxJ = std::min<int>(f.min(), static_cast<int>(sched.betas.size()));
      for (int j0 = 1; j0 <= maxJ && !forMember; ++j0) {
        if (!contains(FamilyExpr::schreier(sched.betas[j0 - 1]), f, *memo)) {
          continue;
        }
        bool levelOk = true;
        FinSet unionSupp;
        Rational minMass;
        bool firstMass = true;
        for (int k : f) {
          const ZVector& zb = (*opts.zBlocks)[static_cast<std::size_t>(k - 1)];
          if (j0 < zb.n || j0 > zb.n + zb.k) {
            levelOk = false;
            break;
          }
          const FinVector& y = zb.levels[static_cast<std::size_t>(j0 - zb.n)];
          unionSupp = unionSupp.unionWith(y.support());
          Rational mass = space.theta(sched.level(j0).p) * y.l1Norm();
          if (firstMass || mass < minMass) {
            minMass = mass;
            firstMass = false;
          }
        }
        if (!levelOk) continue;
        if (!contains(space.family(sched.level(j0).p), unionSupp, *memo)) {
          continue;
        }
        forMember = minMass;  // theta_p * min ||y_k||_l1
      }
      if (!forMember) {
        allCertified = false;
        break;
      }
      if (!boundB || *forMember < *boundB) boundB = forMember;
    }
    if (allCertified && boundB && *boundB > result.certifiedLower) {
      result.certifiedLower = *boundB;
      result.certificate = "level functional: union of level-j0 supports is "
                           "F_{p_j0}-admissible for every member";
    }
  }
  return result;
}

// --- closed-form bounds ------------------------------------------------------

BoundsReport verifyBounds(const SpaceSpec& space, const ParamSchedule& schedule,
                          const ZVector& z, int m, const NormOptions& opt) {
  if (m < 0 || m >= z.n) {
    throw std::invalid_argument("verifyBounds: need 0 <= m < n");
  }
  BoundsReport report;
  report.n = z.n;
  report.k = z.k;
  report.m = m;
  if (m == 0) {
    report.value = norm(z.vec, space, opt).value;
  } else {
    report.value = restrictedNorm(
        z.vec, space,
        std::make_pair(schedule.level(m).p, schedule.level(m).q),
        schedule.epsilon, opt);
  }
  auto pow4 = [](int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= 4;
    return r;
  };
  Rational lead = Rational(1) / pow4(z.n - 1);
  Rational geo = 2 - Rational(1, BigInt(1) << z.k);  // sum_{j<=k} 2^{-j}
  if (m == 0) {
    report.boundFine =
        lead * geo + 1 / schedule.epsilon - 3 / pow4(z.n + z.k);
    report.boundCoarse = 2 * lead + 1 / schedule.epsilon;
    report.marginCoarse = report.boundCoarse - report.value;
    report.coarseHolds = report.value <= report.boundCoarse;
  } else {
    report.boundFine = lead * geo + Rational(1) / pow4(m);
    report.boundCoarse = report.boundFine;
    report.marginCoarse = report.boundCoarse - report.value;
    report.coarseHolds = report.value <= report.boundCoarse;
  }
  report.marginFine = report.boundFine - report.value;
  report.fineHolds = report.value <= report.boundFine;
  return report;
}

// --- scalar rule probe -------------------------------------------------------

SubmultReport submultiplicativeProbe(const ThetaRule& rule, int mMax,
                                     int nMax) {
  if (mMax < 1 || nMax < 1) {
    throw std::invalid_argument("submultiplicativeProbe: empty range");
  }
  std::vector<Rational> theta(static_cast<std::size_t>(mMax + nMax) + 1);
  for (int i = 1; i <= mMax + nMax; ++i) {
    theta[static_cast<std::size_t>(i)] = rule.value(i);
    const Rational& t = theta[static_cast<std::size_t>(i)];
    if (!(t > 0 && t < 1)) {
      throw std::invalid_argument("theta rule leaves (0,1) at n=" +
                                  std::to_string(i));
    }
    if (i > 1 && t > theta[static_cast<std::size_t>(i - 1)]) {
      throw std::invalid_argument("theta rule is not nonincreasing at n=" +
                                  std::to_string(i));
    }
  }
  SubmultReport report;
  for (int m = 1; m <= mMax; ++m) {
    for (int n = 1; n <= nMax; ++n) {
      if (theta[static_cast<std::size_t>(m + n)] <
          theta[static_cast<std::size_t>(m)] *
              theta[static_cast<std::size_t>(n)]) {
        report.submultiplicative = false;
        if (report.violations.size() < 10) report.violations.push_back({m, n});
      }
    }
  }
  for (int m = 1; m <= mMax; ++m) {
    SubmultCell cell;
    cell.m = m;
    cell.edgeRatio = theta[static_cast<std::size_t>(m + nMax)] /
                     theta[static_cast<std::size_t>(nMax)];
    Rational best = 0;
    for (int n = std::max(1, (3 * nMax) / 4); n <= nMax; ++n) {
      Rational r = theta[static_cast<std::size_t>(m + n)] /
                   theta[static_cast<std::size_t>(n)];
      if (r > best) best = r;
    }
    cell.tailMax = best;
    report.ratios.push_back(std::move(cell));
  }
  return report;
}

}  // namespace tsw::lab
