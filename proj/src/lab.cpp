#include "tsw/lab.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "tsw/errors.hpp"

namespace tsw::lab {

std::string HistoryTuple::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(indices[i]);
  }
  return s + ")";
}

Ordinal historyLeadingExp(const SpaceSpec& space, const HistoryTuple& h) {
  // l(alpha_{n_s} ... alpha_{n_1}) = l(alpha_{n_s}) + ... + l(alpha_{n_1}).
  Ordinal sum;
  for (std::size_t i = h.indices.size(); i-- > 1;) {
    sum = sum + space.alphaLeadingExp(h.indices[i]);
  }
  return sum;
}

Rational historyThetaProduct(const SpaceSpec& space, const HistoryTuple& h) {
  Rational prod = 1;
  for (std::size_t i = 1; i < h.indices.size(); ++i) {
    prod *= space.theta(h.indices[i]);
  }
  return prod;
}

std::vector<HistoryTuple> enumerateHistories(const SpaceSpec& space,
                                             const HistoryQuery& query) {
  const bool isK = query.kind == HistoryQuery::Kind::K;
  Rational bound;  // tuples must keep theta-product strictly above this
  if (isK) {
    if (query.p < 1 || query.p > space.nMax()) {
      throw std::invalid_argument("enumerateHistories: p out of range");
    }
    bound = query.delta * space.theta(query.p);
  } else {
    if (query.r < 1 || query.r > space.nMax()) {
      throw std::invalid_argument("enumerateHistories: r out of range");
    }
    if (!(query.eps > 0)) {
      throw std::invalid_argument("enumerateHistories: eps must be > 0");
    }
    bound = space.theta(query.r) / query.eps;
  }

  std::vector<HistoryTuple> out;
  std::vector<int> cur{0};
  // Appending indices only shrinks the product and only grows the leading
  // exponent sum, so both conditions prune the search.
  std::function<void(const Rational&, const Ordinal&)> dfs =
      [&](const Rational& product, const Ordinal& lexpSum) {
        bool qualifies = product > bound;
        if (isK) qualifies = qualifies && lexpSum < query.eta;
        if (qualifies) out.push_back(HistoryTuple{cur});
        if (!(product > bound)) return;
        for (int n = 1; n <= space.nMax(); ++n) {
          Rational next = product * space.theta(n);
          if (!(next > bound)) {
            // theta nonincreasing: larger n cannot recover.
            break;
          }
          Ordinal nextSum = space.alphaLeadingExp(n) + lexpSum;
          if (isK && !(nextSum < query.eta)) continue;
          cur.push_back(n);
          dfs(next, nextSum);
          cur.pop_back();
        }
      };
  dfs(Rational(1), Ordinal());
  std::sort(out.begin(), out.end());
  return out;
}

Ordinal gamma(const SpaceSpec& space, const Rational& eps, int m) {
  if (m < 1 || m > space.nMax()) {
    throw std::invalid_argument("gamma: m out of range");
  }
  return gammaTable(space, eps, m).back();
}

std::vector<Ordinal> gammaTable(const SpaceSpec& space, const Rational& eps,
                                int mMax) {
  if (mMax < 1 || mMax > space.nMax()) {
    throw std::invalid_argument("gammaTable: mMax out of range");
  }
  if (!(eps > 0)) throw std::invalid_argument("gammaTable: eps must be > 0");
  // theta is nonincreasing, so a multiset with product P belongs to N_m(eps)
  // exactly for m at or beyond the first index with eps*P > theta_m.
  auto leastM = [&](const Rational& product) -> int {
    Rational scaled = eps * product;
    int lo = 1, hi = mMax + 1;
    while (lo < hi) {
      int mid = (lo + hi) / 2;
      if (scaled > space.theta(mid)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    return lo;  // mMax + 1 when it never qualifies
  };
  const Rational loosest = space.theta(mMax) / eps;
  std::vector<std::uint64_t> finiteEll(static_cast<std::size_t>(space.nMax()) + 1);
  bool allFinite = true;
  for (int n = 1; n <= space.nMax() && allFinite; ++n) {
    auto f = space.alphaLeadingExp(n).asFinite();
    if (f) {
      finiteEll[static_cast<std::size_t>(n)] = *f;
    } else {
      allFinite = false;
    }
  }
  std::vector<Ordinal> table(static_cast<std::size_t>(mMax));

  if (allFinite) {
    // Finite exponents commute, so only (exponent sum, theta product) pairs
    // matter, and per sum only the largest product. Unbounded knapsack:
    // factors with l = 0 never help, the factor count is capped by how often
    // theta_1 fits above the loosest bound.
    int maxFactors = 0;
    {
      Rational p = 1;
      while (p * space.theta(1) > loosest && maxFactors < 512) {
        p *= space.theta(1);
        ++maxFactors;
      }
    }
    std::uint64_t maxEll = 0;
    for (int n = 1; n <= space.nMax(); ++n) {
      maxEll = std::max(maxEll, finiteEll[static_cast<std::size_t>(n)]);
    }
    const std::size_t cap =
        static_cast<std::size_t>(maxFactors) * static_cast<std::size_t>(maxEll);
    std::vector<std::optional<Rational>> bestProduct(cap + 1);
    bestProduct[0] = Rational(1);
    for (int n = 1; n <= space.nMax(); ++n) {
      const std::uint64_t ell = finiteEll[static_cast<std::size_t>(n)];
      if (ell == 0) continue;
      if (!(space.theta(n) > loosest)) continue;
      for (std::size_t s = 0; s + ell <= cap; ++s) {
        if (!bestProduct[s]) continue;
        Rational candidate = *bestProduct[s] * space.theta(n);
        if (!(candidate > loosest)) continue;
        auto& slot = bestProduct[s + ell];
        if (!slot || candidate > *slot) slot = std::move(candidate);
      }
    }
    for (int m = 1; m <= mMax; ++m) {
      const Rational bound = space.theta(m) / eps;
      std::uint64_t best = 0;
      for (std::size_t s = cap + 1; s-- > 1;) {
        if (bestProduct[s] && *bestProduct[s] > bound) {
          best = s;
          break;
        }
      }
      table[static_cast<std::size_t>(m - 1)] = Ordinal::fromInt(best);
    }
    return table;
  }

  // General ordinal exponents: enumerate the loosest class once and assign
  // each multiset to the least m it qualifies for.
  std::vector<Ordinal> bestAt(static_cast<std::size_t>(mMax) + 1);
  std::vector<Ordinal> parts;
  std::function<void(int, const Rational&)> dfs = [&](int minIndex,
                                                      const Rational& product) {
    for (int n = minIndex; n <= space.nMax(); ++n) {
      Rational next = product * space.theta(n);
      if (!(next > loosest)) break;
      parts.push_back(space.alphaLeadingExp(n));
      Ordinal candidate = maximalSum(parts);
      int m = leastM(next);
      if (m <= mMax) {
        auto& slot = bestAt[static_cast<std::size_t>(m)];
        if (candidate > slot) slot = candidate;
      }
      dfs(n, next);
      parts.pop_back();
    }
  };
  dfs(1, Rational(1));
  Ordinal running;
  for (int m = 1; m <= mMax; ++m) {
    if (bestAt[static_cast<std::size_t>(m)] > running) {
      running = bestAt[static_cast<std::size_t>(m)];
    }
    table[static_cast<std::size_t>(m - 1)] = running;
  }
  return table;
}

DaggerReport daggerProbe(const SpaceSpec& space,
                         const std::vector<Rational>& epsGrid,
                         const std::vector<Ordinal>& betas, int mBound) {
  mBound = std::min(mBound, space.nMax());
  DaggerReport report;
  report.mBound = mBound;
  const Ordinal two = Ordinal::fromInt(2);
  for (const Rational& eps : epsGrid) {
    std::vector<Ordinal> gammas = gammaTable(space, eps, mBound);
    for (const Ordinal& beta : betas) {
      DaggerCell cell;
      cell.eps = eps;
      cell.beta = beta;
      for (int m = 1; m <= mBound; ++m) {
        if (gammas[m - 1] + two + beta < space.alphaLeadingExp(m)) {
          cell.witness = m;
          cell.gammaAtWitness = gammas[m - 1];
          break;
        }
      }
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

FamilyPtr supportChain(const ParamSchedule& schedule, int fromLevel,
                       int toLevel, const std::optional<Ordinal>& headBeta) {
  const Ordinal one = Ordinal::fromInt(1);
  FamilyPtr expr;
  int j = fromLevel;
  if (headBeta) {
    expr = FamilyExpr::schreier(*headBeta);
  } else {
    expr = FamilyExpr::schreier(schedule.level(j).eta + one);
    ++j;
  }
  for (; j <= toLevel; ++j) {
    expr = FamilyExpr::compose(expr,
                               FamilyExpr::schreier(schedule.level(j).eta + one));
  }
  return expr;
}

namespace {

// [F_{n_1}, ..., F_{n_s}] for a history (0, n_1, ..., n_s) with s >= 1.
FamilyPtr historyChain(const SpaceSpec& space, const HistoryTuple& h) {
  FamilyPtr expr = space.family(h.indices[1]);
  for (std::size_t i = 2; i < h.indices.size(); ++i) {
    expr = FamilyExpr::compose(expr, space.family(h.indices[i]));
  }
  return expr;
}

FinSet takeSuffix(const FinSet& from, int threshold, std::size_t count) {
  std::vector<int> v;
  for (int x : from) {
    if (x >= threshold) v.push_back(x);
    if (v.size() == count) break;
  }
  return FinSet(std::move(v));
}

}  // namespace

ParamSchedule selectParams(const SpaceSpec& space, const FinSet& m0,
                           const Rational& eps, int depth,
                           std::size_t groundCap) {
  if (!(eps > 0 && eps < 1)) {
    throw std::invalid_argument("selectParams: eps must lie in (0,1)");
  }
  if (depth < 0) throw std::invalid_argument("selectParams: negative depth");
  ParamSchedule schedule;
  schedule.epsilon = eps;
  const Ordinal one = Ordinal::fromInt(1);
  const Ordinal two = Ordinal::fromInt(2);
  // beta_n: the sequence defining S_{w^xi} when the space declares xi, else
  // the finite ordinals.
  Ordinal omegaXi;
  if (space.supIndexExponent()) {
    omegaXi = Ordinal::omegaPow(*space.supIndexExponent());
  }
  auto betaAt = [&](int n) {
    if (space.supIndexExponent()) {
      return standardFundamental(omegaXi, static_cast<std::uint64_t>(n));
    }
    return Ordinal::fromInt(static_cast<std::uint64_t>(n));
  };

  FinSet prevGround = m0;
  const std::vector<Ordinal> gammas = gammaTable(space, eps, space.nMax());
  auto gammaAt = [&](int m) -> const Ordinal& {
    return gammas[static_cast<std::size_t>(m - 1)];
  };
  Rational powEps4 = eps * eps;  // eps^2 / 4^n, maintained per level
  Rational pow4 = 1;             // 4^n
  for (int n = 1; n <= depth; ++n) {
    powEps4 /= 4;
    pow4 *= 4;
    const Ordinal beta = betaAt(n);
    schedule.betas.push_back(beta);
    ScheduleLevel lev;
    // Ordinal slack accumulated by earlier levels:
    //   gamma(eps,q_{n-1}) + 2 + eta_{n-1} + 1 + ... + eta_1 + 1 + beta_n.
    Ordinal slack;
    if (n >= 2) {
      slack = gammaAt(schedule.level(n - 1).q) + two;
      for (int j = n - 1; j >= 1; --j) {
        slack = slack + schedule.level(j).eta + one;
      }
    }
    slack = slack + beta;
    // Least p (beyond q_{n-1}) with the theta bound and the gamma gap.
    int p = 0;
    Ordinal gammaP;
    bool thetaOk = false;
    const int pStart = n >= 2 ? schedule.level(n - 1).q + 1 : 1;
    for (int cand = pStart; cand <= space.nMax(); ++cand) {
      if (!(space.theta(cand) <= powEps4)) continue;
      thetaOk = true;
      Ordinal g = gammaAt(cand);
      if (g + two + slack < space.alphaLeadingExp(cand)) {
        p = cand;
        gammaP = g;
        break;
      }
    }
    if (p == 0) {
      throw VerificationError(
          "selectParams: level " + std::to_string(n) +
          (thetaOk
               ? ": no p <= nMax satisfies gamma(eps,p)+2+...+beta_n < l(alpha_p)"
               : ": no p <= nMax satisfies theta_p <= eps^2/4^n"));
    }
    lev.p = p;
    lev.eta = n >= 2 ? gammaP + gammaAt(schedule.level(n - 1).q) + one
                     : gammaP + one;
    // Least q > p with theta_q <= eps * theta_p / 4^n.
    const Rational qBound = eps * space.theta(p) / pow4;
    int q = 0;
    for (int cand = p + 1; cand <= space.nMax(); ++cand) {
      if (space.theta(cand) <= qBound) {
        q = cand;
        break;
      }
    }
    if (q == 0) {
      throw VerificationError("selectParams: level " + std::to_string(n) +
                              ": no q <= nMax with theta_q <= eps*theta_p/4^n");
    }
    lev.q = q;
    lev.delta = 1 / pow4;
    schedule.levels.push_back(lev);

    // Histories of K(4^{-n}, p_n, eta_n): they fix the smallness budget and
    // the second containment to certify on the ground.
    auto ks = enumerateHistories(
        space, HistoryQuery::forK(lev.delta, lev.p, lev.eta));
    schedule.levels.back().budget =
        lev.delta / Rational(static_cast<int>(ks.size()) + 1);

    FamilyPtr chain = supportChain(schedule, 1, n, beta);
    const FamilyPtr& fp = space.family(lev.p);
    FamilyPtr sEta = FamilyExpr::schreier(lev.eta);
    // On a ground with min >= size, every subset lies in S_1 and hence in any
    // family above it; sparse grounds certify the containment outright.
    auto triviallyContained = [](const FamilyPtr& rhs, const FinSet& g) {
      return rhs->supS1 && !g.empty() &&
             g.min() >= static_cast<int>(g.size());
    };
    int threshold = std::max<int>(prevGround.empty() ? 1 : prevGround.min(),
                                  static_cast<int>(groundCap));
    FinSet chosen;
    std::string lastFailure;
    while (true) {
      FinSet cand = takeSuffix(prevGround, threshold, groundCap);
      if (cand.size() < 2) break;
      std::optional<FinSet> bad;
      if (!triviallyContained(fp, cand)) {
        bad = subFamilyCounterexample(chain, fp, cand);
      }
      if (bad) {
        lastFailure = "S_beta[S_eta+1...] member " + bad->str() +
                      " escapes F_p on ground " + cand.str();
      } else {
        if (!triviallyContained(sEta, cand)) {
          for (const auto& h : ks) {
            if (h.length() == 0) continue;  // bare root: nothing to compose
            bad = subFamilyCounterexample(historyChain(space, h), sEta, cand);
            if (bad) {
              lastFailure = "history " + h.str() + " member " + bad->str() +
                            " escapes S_eta on ground " + cand.str();
              break;
            }
          }
        }
        if (!bad) {
          chosen = cand;
          break;
        }
      }
      if (threshold > prevGround.max()) break;
      threshold *= 2;
    }
    if (chosen.empty()) {
      throw VerificationError(
          "selectParams: level " + std::to_string(n) +
          ": no ground within cap satisfies the containments" +
          (lastFailure.empty() ? "" : " (" + lastFailure + ")"));
    }
    schedule.levels.back().ground = chosen;
    prevGround = chosen;
  }
  return schedule;
}

}  // namespace tsw::lab
