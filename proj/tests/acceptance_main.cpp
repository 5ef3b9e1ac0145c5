// Acceptance suite: one pass/fail line per criterion, all checks exact.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "fixtures.hpp"
#include "helpers.hpp"
#include "tsw/construction.hpp"
#include "tsw/errors.hpp"
#include "tsw/json_io.hpp"

using namespace tsw;

namespace {

int failures = 0;

struct Criterion {
  std::string label;
  std::vector<std::string> problems;
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  explicit Criterion(std::string l) : label(std::move(l)) {}

  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }

  ~Criterion() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (problems.empty()) {
      std::cout << "[PASS] " << label << " (" << ms << " ms)\n";
    } else {
      ++failures;
      std::cout << "[FAIL] " << label << " (" << ms << " ms)\n";
      for (const auto& p : problems) std::cout << "       - " << p << "\n";
    }
  }
};

SpaceSpec halfS1() {
  return SpaceSpec({Rational(1, 2)},
                   {FamilyExpr::schreier(Ordinal::fromInt(1))});
}

SpaceSpec pow2Space(int nMax) {
  return SpaceSpec::schreierSpace(
      nMax, [](int n) { return Rational(1, BigInt(1) << n); });
}

SpaceSpec harmonicSpace(int nMax) {
  return SpaceSpec::schreierSpace(nMax,
                                  [](int n) { return Rational(1, n + 1); });
}

std::vector<FinSet> subsetsOf(const FinSet& ground) {
  std::vector<FinSet> out;
  const std::size_t n = ground.size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    std::vector<int> v;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t(1) << i)) v.push_back(ground[i]);
    }
    out.push_back(FinSet(std::move(v)));
  }
  return out;
}

// Scattered-witness derivative oracle over elements in (max G, bound].
bool derivOracle(const FamilyPtr& f, int k, const FinSet& g, int bound,
                 MembershipMemo& memo) {
  if (k == 0) return contains(f, g, memo);
  int from = (g.empty() ? 0 : g.max()) + 1;
  for (int m = from; m <= bound; ++m) {
    if (derivOracle(f, k - 1, g.withElement(m), bound, memo)) return true;
  }
  return false;
}

// Ordered-tuple gamma oracle taking the leading exponent of the literal
// ordinal product.
Ordinal gammaOracle(const SpaceSpec& space, const Rational& eps, int m) {
  Rational bound = space.theta(m) / eps;
  Ordinal best;
  std::vector<int> tuple;
  std::function<void(const Rational&)> rec = [&](const Rational& prod) {
    if (!tuple.empty()) {
      Ordinal product = Ordinal::fromInt(1);
      for (auto it = tuple.rbegin(); it != tuple.rend(); ++it) {
        product = product * space.alphaIndex(*it).value;
      }
      Ordinal l = leadingExponent(product);
      if (l > best) best = l;
    }
    for (int n = 1; n <= space.nMax(); ++n) {
      Rational next = prod * space.theta(n);
      if (!(next > bound)) continue;
      tuple.push_back(n);
      rec(next);
      tuple.pop_back();
    }
  };
  rec(Rational(1));
  return best;
}

std::vector<FinSet> randomAdmissible(std::mt19937_64& rng, const FinVector& x,
                                     const SpaceSpec& space, int n) {
  FinSet supp = x.support();
  std::vector<FinSet> nonempty;
  for (const auto& m : enumerate(space.family(n), supp)) {
    if (!m.empty()) nonempty.push_back(m);
  }
  if (nonempty.empty()) return {};
  const FinSet& minima =
      nonempty[std::uniform_int_distribution<std::size_t>(
          0, nonempty.size() - 1)(rng)];
  std::vector<FinSet> blocks;
  std::bernoulli_distribution keep(0.5);
  for (std::size_t i = 0; i < minima.size(); ++i) {
    int lo = minima[i];
    int hi = i + 1 < minima.size() ? minima[i + 1] : supp.max() + 1;
    std::vector<int> block{lo};
    for (int v : supp) {
      if (v > lo && v < hi && keep(rng)) block.push_back(v);
    }
    blocks.push_back(FinSet(std::move(block)));
  }
  return blocks;
}

void criterion1() {
  Criterion c(
      "C1 oracle equivalence: norm == bruteForceNorm on 200 random vectors "
      "per space");
  std::vector<std::pair<std::string, SpaceSpec>> spaces;
  spaces.emplace_back("T[(1/2,S1)]", halfS1());
  spaces.emplace_back("T[(2^-n,Sn),n<=3]", pow2Space(3));
  spaces.emplace_back("T[(1/(n+1),Sn),n<=3]", harmonicSpace(3));
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 200; ++i) {
    FinVector x = testing::randomVector(rng, 8, 16);
    for (auto& [name, space] : spaces) {
      Rational viaDp = norm(x, space).value;
      Rational viaBrute = bruteForceNorm(x, space);
      if (viaDp != viaBrute) {
        c.expect(false, "mismatch on " + name + " at sample " +
                            std::to_string(i) + ": dp=" + formatRational(viaDp) +
                            " brute=" + formatRational(viaBrute));
        return;
      }
    }
  }
}

void criterion2() {
  Criterion c(
      "C2 lower-bound law: norm(x) >= theta_n * sum norm(E_i x) for 100 "
      "random admissible sequences per space");
  std::vector<SpaceSpec> spaces;
  spaces.push_back(halfS1());
  spaces.push_back(pow2Space(3));
  spaces.push_back(harmonicSpace(3));
  std::mt19937_64 rng(77);
  for (auto& space : spaces) {
    int done = 0;
    while (done < 100) {
      FinVector x = testing::randomVector(rng, 8, 14);
      int n = std::uniform_int_distribution<int>(1, space.nMax())(rng);
      auto blocks = randomAdmissible(rng, x, space, n);
      if (blocks.empty()) continue;
      ++done;
      Rational whole = norm(x, space).value;
      Rational sum = 0;
      for (const auto& b : blocks) sum += norm(x.restrictedTo(b), space).value;
      if (!(whole >= space.theta(n) * sum)) {
        c.expect(false, "violated at sample " + std::to_string(done));
        return;
      }
    }
  }
}

void criterion3() {
  Criterion c("C3 ordinal laws and index rules");
  std::mt19937_64 rng(101);
  for (int i = 0; i < 1000; ++i) {
    Ordinal a = testing::randomOrdinal(rng);
    Ordinal b = testing::randomOrdinal(rng);
    Ordinal d = testing::randomOrdinal(rng);
    c.expect((a + b) + d == a + (b + d), "associativity of + failed");
    c.expect((a * b) * d == a * (b * d), "associativity of * failed");
    c.expect(a * (b + d) == a * b + a * d, "left distributivity failed");
    if (!c.problems.empty()) return;
  }
  for (int i = 0; i < 20; ++i) {
    Ordinal gammaExp = testing::randomOrdinal(rng);  // below w^5
    auto si = indexOf(FamilyExpr::schreier(gammaExp));
    c.expect(si.value == Ordinal::omegaPow(gammaExp) && si.exact,
             "iota(S_gamma) != w^gamma for " + formatOrdinal(gammaExp));
    Ordinal alpha = testing::randomOrdinal(rng);
    if (alpha.isZero()) alpha = Ordinal::fromInt(1);
    auto ri = indexOf(FamilyExpr::ralpha(alpha));
    c.expect(ri.value == alpha && ri.exact,
             "iota(R_alpha) != alpha for " + formatOrdinal(alpha));
  }
}

void criterion4() {
  Criterion c(
      "C4 derivative shortcut vs scattered-witness enumeration: S1, S2, "
      "BddCard, ground size 12, k <= 4");
  const FinSet ground = FinSet::range(1, 12);
  const int bound = 16;
  std::vector<std::pair<std::string, FamilyPtr>> fams;
  fams.emplace_back("S(1)", FamilyExpr::schreier(Ordinal::fromInt(1)));
  fams.emplace_back("S(2)", FamilyExpr::schreier(Ordinal::fromInt(2)));
  fams.emplace_back("bdd(3,3)", FamilyExpr::bddCard(3, 3));
  for (auto& [name, fam] : fams) {
    auto memoPtr = makeMembershipMemo();
    MembershipMemo& memo = *memoPtr;
    for (const FinSet& g : subsetsOf(ground)) {
      for (int k = 0; k <= 4; ++k) {
        bool oracle = derivOracle(fam, k, g, bound, memo);
        bool shortcut = iteratedDerivContains(fam, k, g, bound).member;
        if (oracle != shortcut) {
          c.expect(false, name + " disagrees at G=" + g.str() +
                              " k=" + std::to_string(k));
          return;
        }
      }
    }
  }
}

void criterion5() {
  Criterion c("C5 gamma reproduction and dagger witnesses");
  SpaceSpec p2 = pow2Space(50);
  SpaceSpec harm = harmonicSpace(50);

  Ordinal g1 = lab::gamma(p2, Rational(1), 3);
  c.expect(g1 == Ordinal::fromInt(2),
           "gamma(1,3) on (2^-n, S_n) = " + formatOrdinal(g1) + ", want 2");
  c.expect(g1 == gammaOracle(p2, Rational(1), 3),
           "gamma(1,3) disagrees with the tuple-search oracle");

  Ordinal g2 = lab::gamma(harm, Rational(1, 2), 20);
  c.expect(g2 == Ordinal::fromInt(9),
           "gamma(1/2,20) on (1/(n+1), S_n) = " + formatOrdinal(g2) +
               ", want 9");
  c.expect(g2 == gammaOracle(harm, Rational(1, 2), 20),
           "gamma(1/2,20) disagrees with the tuple-search oracle");

  auto witness = lab::daggerProbe(harm, {Rational(1, 2)},
                                  {Ordinal::fromInt(1)}, 50);
  c.expect(witness.cells.size() == 1 && witness.cells[0].witness &&
               *witness.cells[0].witness == 5,
           "harmonic dagger witness for (eps=1/2, beta=1) is not m=5");

  auto none = lab::daggerProbe(p2, {Rational(1, 2), Rational(1, 4)},
                               {Ordinal::fromInt(1)}, 50);
  for (const auto& cell : none.cells) {
    c.expect(!cell.witness.has_value(),
             "geometric theta produced a dagger witness at eps=" +
                 formatRational(cell.eps));
  }
}

void criterion6() {
  Criterion c(
      "C6 Z-vector suite at depth <= 2: postconditions, exact level masses, "
      "coarse bound margin > 0");
  SpaceSpec space = testing::compactSpace();
  lab::ParamSchedule sched = testing::compactSchedule(/*wide=*/true);
  for (int k = 0; k <= 2; ++k) {
    lab::ZVector z;
    try {
      z = lab::buildZ(space, sched, 1, k);  // re-verifies every condition
    } catch (const std::exception& e) {
      c.expect(false,
               "buildZ(k=" + std::to_string(k) + ") failed: " + e.what());
      continue;
    }
    std::vector<FinVector> levels;
    try {
      levels = lab::decomposeZ(space, sched, z);
    } catch (const std::exception& e) {
      c.expect(false,
               "decomposeZ(k=" + std::to_string(k) + ") failed: " + e.what());
      continue;
    }
    for (int j = 0; j <= k; ++j) {
      Rational want = 1 / space.theta(sched.level(1 + j).p);
      c.expect(levels[static_cast<std::size_t>(j)].l1Norm() == want,
               "||y_" + std::to_string(j) + "||_l1 != 1/theta_p at k=" +
                   std::to_string(k));
    }
    auto bounds = lab::verifyBounds(space, sched, z, 0);
    c.expect(bounds.coarseHolds && bounds.marginCoarse > 0,
             "coarse bound margin not positive at k=" + std::to_string(k) +
                 ": value=" + formatRational(bounds.value) +
                 " bound=" + formatRational(bounds.boundCoarse));
  }
}

void criterion7() {
  Criterion c(
      "C7 spreading-model inequality for Z blocks and the unit-vector "
      "mechanism");
  SpaceSpec space = testing::compactSpace();
  lab::ParamSchedule sched = testing::compactSchedule(/*wide=*/false);
  std::vector<lab::ZVector> zs;
  zs.push_back(lab::buildZ(space, sched, 1, 0, 0));
  zs.push_back(lab::buildZ(space, sched, 1, 1, zs[0].vec.support().max() + 4));
  zs.push_back(lab::buildZ(space, sched, 1, 2, zs[1].vec.support().max() + 4));
  std::vector<FinVector> blocks;
  for (const auto& z : zs) blocks.push_back(z.vec);

  // Capped target family: members of S_w on the block index range.
  FamilyPtr target = FamilyExpr::schreier(Ordinal::omega());
  std::vector<FinSet> members;
  for (const auto& f : enumerate(target, FinSet::range(1, 3))) {
    if (!f.empty()) members.push_back(f);
  }
  c.expect(members.size() == 4, "expected the four members {1},{2},{3},{2,3}");

  std::vector<std::vector<Rational>> patterns{
      {Rational(1)},
      {Rational(1), Rational(1)},
      {Rational(1), Rational(2)},
      {Rational(2), Rational(1)},
      {Rational(1), Rational(-1)},
      {Rational(-3), Rational(1)},
      {Rational(1, 2), Rational(1, 3)},
      {Rational(5, 2), Rational(7, 3)},
  };
  for (const FinSet& f : members) {
    for (const auto& pat : patterns) {
      if (pat.size() < f.size()) continue;
      FinVector combo;
      Rational l1 = 0;
      std::size_t slot = 0;
      for (int k : f) {
        const Rational& a = pat[slot++];
        combo = combo.plus(blocks[static_cast<std::size_t>(k - 1)].scaled(a));
        l1 += abs(a);
      }
      Rational value = norm(combo, space).value;
      if (!(value >= l1)) {
        c.expect(false, "norm(sum a_k z_k) = " + formatRational(value) +
                            " < sum |a_k| = " + formatRational(l1) + " at F=" +
                            f.str());
      }
    }
  }

  lab::SpreadingOptions opts;
  opts.patternBudget = 40;
  opts.zBlocks = &zs;
  opts.schedule = &sched;
  opts.norm.maxSupport = 24;
  auto zr = lab::spreadingConstant(blocks, target, space, opts);
  c.expect(zr.certifiedLower == 1,
           "certified Z lower bound is " + formatRational(zr.certifiedLower) +
               ", want exactly 1");
  c.expect(zr.empiricalMin >= 1, "empirical Z minimum dipped below 1");

  // Unit-vector mechanism in T[(1/2, S_1)].
  SpaceSpec half = halfS1();
  std::vector<FinVector> units;
  for (int k = 1; k <= 4; ++k) units.push_back(FinVector::unit(k));
  lab::SpreadingOptions uopts;
  uopts.patternBudget = 60;
  auto ur = lab::spreadingConstant(
      units, FamilyExpr::schreier(Ordinal::fromInt(1)), half, uopts);
  c.expect(ur.certifiedLower == Rational(1, 2),
           "unit-vector certified constant is " +
               formatRational(ur.certifiedLower) + ", want 1/2");
  c.expect(ur.empiricalMin == Rational(1, 2),
           "unit-vector empirical minimum is " +
               formatRational(ur.empiricalMin) + ", want 1/2");
}

void criterion8() {
  Criterion c("C8 regularity of every family used above, ground size 12");
  std::vector<std::string> families{
      "S0",
      "S(1)",
      "S(2)",
      "S(3)",
      "S(4)",
      "S(w)",
      "bdd(3,3)",
      "comp(S(2),S(2))",
      "comp(comp(S(2),S(2)),S(2))",
  };
  for (const auto& text : families) {
    auto report =
        checkRegularOnGround(parseFamily(text), FinSet::range(1, 12));
    if (!report.pass()) {
      std::string what = text + " failed:";
      for (const auto& v : report.violations) {
        what += " [" + v.kind + " " + v.member.str() + "->" + v.image.str() +
                "]";
      }
      c.expect(false, what);
    }
  }
}

}  // namespace

int main() {
  auto start = std::chrono::steady_clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED")
            << " (" << secs << " s)\n";
  return failures == 0 ? 0 : 1;
}
