#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "tsw/errors.hpp"
#include "tsw/norm.hpp"

using namespace tsw;

namespace {

SpaceSpec halfS1() {
  return SpaceSpec({Rational(1, 2)},
                   {FamilyExpr::schreier(Ordinal::fromInt(1))});
}

SpaceSpec pow2Space(int nMax = 3) {
  return SpaceSpec::schreierSpace(
      nMax, [](int n) { return Rational(1, BigInt(1) << n); });
}

SpaceSpec harmonicSpace(int nMax = 3) {
  return SpaceSpec::schreierSpace(nMax,
                                  [](int n) { return Rational(1, n + 1); });
}

FinVector ones(std::initializer_list<int> idx) {
  std::vector<std::pair<int, Rational>> coords;
  for (int i : idx) coords.emplace_back(i, Rational(1));
  return FinVector(std::move(coords));
}

// Random admissible sequence of subsets of supp(x) for family n: pick a
// member of F_n on the support as the minima, then pad each block with
// later points below the next minimum.
std::vector<FinSet> randomAdmissible(std::mt19937_64& rng, const FinVector& x,
                                     const SpaceSpec& space, int n) {
  FinSet supp = x.support();
  auto members = enumerate(space.family(n), supp);
  std::vector<FinSet> nonempty;
  for (const auto& m : members) {
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

}  // namespace

TEST_CASE("norm on basic vectors") {
  SpaceSpec half = halfS1();
  CHECK(norm(FinVector::unit(1), half).value == 1);

  auto r = norm(ones({2, 3}), half);
  CHECK(r.value == 1);
  REQUIRE(r.cert.root.children.size() == 2);
  CHECK(r.cert.root.children[0].set == FinSet{2});
  CHECK(r.cert.root.children[1].set == FinSet{3});
  CHECK(r.cert.root.children[0].history == std::vector<int>{0, 1});
  CHECK(r.cert.root.children[0].tag == Rational(1, 2));

  CHECK(norm(ones({2, 3, 4}), half).value == 1);
  CHECK(norm(FinVector(), half).value == 0);
  CHECK(norm(FinVector({{5, Rational(-3)}}), half).value == 3);
}

TEST_CASE("brute force matches the displayed examples") {
  SpaceSpec half = halfS1();
  CHECK(bruteForceNorm(ones({2, 3}), half) == 1);
  CHECK(bruteForceNorm(ones({1, 2}), half) == 1);  // {1,2} inadmissible
  CHECK(bruteForceNorm(FinVector(), half) == 0);
}

TEST_CASE("norm equals brute force on random vectors") {
  std::vector<SpaceSpec> spaces;
  spaces.push_back(halfS1());
  spaces.push_back(pow2Space());
  spaces.push_back(harmonicSpace());
  std::mt19937_64 rng(41);
  for (int i = 0; i < 40; ++i) {
    FinVector x = testing::randomVector(rng, 7, 14);
    for (const auto& space : spaces) {
      CHECK(norm(x, space).value == bruteForceNorm(x, space));
    }
  }
}

TEST_CASE("certificates evaluate and validate") {
  SpaceSpec half = halfS1();
  // Single-root leaf on 3 e_5.
  CertNode leaf{FinSet{5}, {0}, Rational(1), {}};
  CHECK(evaluateTree(leaf, FinVector({{5, Rational(3)}})) == 3);

  // Two-leaf tree ({2},{3}) under family 1.
  CertNode root{FinSet{2, 3}, {0}, Rational(1), {}};
  root.children.push_back({FinSet{2}, {0, 1}, Rational(1, 2), {}});
  root.children.push_back({FinSet{3}, {0, 1}, Rational(1, 2), {}});
  CHECK(evaluateTree(root, ones({2, 3})) == 1);
  CHECK(validateTree(root, half).ok);

  // Leaves that miss the support contribute nothing.
  CHECK(evaluateTree(root, ones({7, 9})) == 0);

  // Sibling minima {1,2} are not S_1-admissible.
  CertNode bad{FinSet{1, 2}, {0}, Rational(1), {}};
  bad.children.push_back({FinSet{1}, {0, 1}, Rational(1, 2), {}});
  bad.children.push_back({FinSet{2}, {0, 1}, Rational(1, 2), {}});
  auto v = validateTree(bad, half);
  CHECK_FALSE(v.ok);

  // Tag that is not the history product.
  CertNode wrongTag = root;
  wrongTag.children[0].tag = Rational(1, 4);
  CHECK_FALSE(validateTree(wrongTag, half).ok);

  // Root history must be (0) with tag 1.
  CertNode wrongRoot = root;
  wrongRoot.history = {0, 1};
  CHECK_FALSE(validateTree(wrongRoot, half).ok);
}

TEST_CASE("norm certificates are sound") {
  std::mt19937_64 rng(43);
  SpaceSpec space = pow2Space();
  for (int i = 0; i < 25; ++i) {
    FinVector x = testing::randomVector(rng, 6, 12);
    auto r = norm(x, space);
    CHECK(validateTree(r.cert.root, space).ok);
    CHECK(evaluateTree(r.cert.root, x) == r.value);
  }
}

TEST_CASE("random valid trees never beat the norm") {
  std::mt19937_64 rng(47);
  SpaceSpec space = pow2Space();
  for (int i = 0; i < 25; ++i) {
    FinVector x = testing::randomVector(rng, 6, 12);
    Rational value = norm(x, space).value;
    FinSet supp = x.support();
    // Random tree: random family, random admissible blocks, one level deep,
    // then leaves.
    for (int attempt = 0; attempt < 8; ++attempt) {
      int n = std::uniform_int_distribution<int>(1, space.nMax())(rng);
      auto blocks = randomAdmissible(rng, x, space, n);
      if (blocks.empty()) continue;
      CertNode root{supp, {0}, Rational(1), {}};
      for (const auto& b : blocks) {
        root.children.push_back({b, {0, n}, space.theta(n), {}});
      }
      REQUIRE(validateTree(root, space).ok);
      CHECK(evaluateTree(root, x) <= value);
    }
  }
}

TEST_CASE("norm bounds and unconditionality") {
  std::mt19937_64 rng(53);
  SpaceSpec space = harmonicSpace();
  for (int i = 0; i < 30; ++i) {
    FinVector x = testing::randomVector(rng, 7, 14);
    Rational v = norm(x, space).value;
    CHECK(x.c0Norm() <= v);
    CHECK(v <= x.l1Norm());

    // Sign flips leave the norm unchanged.
    std::vector<std::pair<int, Rational>> flipped;
    for (auto [idx, val] : x.coords()) {
      if (std::bernoulli_distribution(0.5)(rng)) val = -val;
      flipped.emplace_back(idx, val);
    }
    CHECK(norm(FinVector(flipped), space).value == v);

    // Shrinking a coordinate never raises the norm.
    std::vector<std::pair<int, Rational>> shrunk = x.coords();
    auto& victim =
        shrunk[std::uniform_int_distribution<std::size_t>(0, shrunk.size() - 1)(
            rng)];
    victim.second /= 2;
    CHECK(norm(FinVector(shrunk), space).value <= v);
  }
}

TEST_CASE("right spreading never lowers the norm") {
  std::mt19937_64 rng(59);
  SpaceSpec space = pow2Space();
  for (int i = 0; i < 30; ++i) {
    FinVector x = testing::randomVector(rng, 6, 10);
    Rational v = norm(x, space).value;
    // Shift indices rightward, keeping the order.
    std::vector<std::pair<int, Rational>> moved = x.coords();
    int bump = 0;
    for (auto& [idx, val] : moved) {
      bump += std::uniform_int_distribution<int>(0, 3)(rng);
      idx += bump;
    }
    CHECK(norm(FinVector(moved), space).value >= v);
  }
}

TEST_CASE("lower-bound law for admissible sequences") {
  std::mt19937_64 rng(61);
  std::vector<SpaceSpec> spaces;
  spaces.push_back(pow2Space());
  spaces.push_back(harmonicSpace());
  for (const auto& space : spaces) {
    for (int i = 0; i < 25; ++i) {
      FinVector x = testing::randomVector(rng, 7, 12);
      Rational v = norm(x, space).value;
      int n = std::uniform_int_distribution<int>(1, space.nMax())(rng);
      auto blocks = randomAdmissible(rng, x, space, n);
      if (blocks.empty()) continue;
      Rational sum = 0;
      for (const auto& b : blocks) {
        sum += norm(x.restrictedTo(b), space).value;
      }
      CHECK(v >= space.theta(n) * sum);
    }
  }
}

TEST_CASE("restricted norm") {
  SpaceSpec space = pow2Space();
  const Rational eps(1, 2);
  std::mt19937_64 rng(67);

  SUBCASE("absent restriction is the plain norm") {
    for (int i = 0; i < 10; ++i) {
      FinVector x = testing::randomVector(rng, 6, 10);
      CHECK(restrictedNorm(x, space, std::nullopt, eps) ==
            norm(x, space).value);
    }
  }

  SUBCASE("empty qualification window forces the empty tree") {
    SpaceSpec flat = SpaceSpec::schreierSpace(
        2, [](int) { return Rational(1, 2); });
    FinVector x = ones({2, 3, 4});
    CHECK(restrictedNorm(x, flat, std::make_pair(1, 2), eps) == 0);
  }

  SUBCASE("restriction never exceeds the norm, and can be attained") {
    for (int i = 0; i < 15; ++i) {
      FinVector x = testing::randomVector(rng, 6, 10);
      Rational full = norm(x, space).value;
      Rational r12 = restrictedNorm(x, space, std::make_pair(1, 2), eps);
      Rational r23 = restrictedNorm(x, space, std::make_pair(2, 3), eps);
      CHECK(r12 <= full);
      CHECK(r23 <= full);
    }
    // With eps = 1/2 and theta = 2^-n, the root itself sits in
    // N_1 \ N_... window for (p,q) = (1,2): eps*1 = theta_1, so the whole
    // tree qualifies and the values agree.
    FinVector x = ones({3, 4, 5});
    CHECK(restrictedNorm(x, space, std::make_pair(1, 2), eps) ==
          norm(x, space).value);
    // (2,3): the root is outside the window; one theta_1 tag enters it.
    Rational r = restrictedNorm(x, space, std::make_pair(2, 3), eps);
    CHECK(r > 0);
    CHECK(r <= norm(x, space).value);
  }
}

TEST_CASE("family cutoff") {
  SpaceSpec p2 = pow2Space(6);
  FinVector x = ones({4, 5, 6, 7});  // l1 = 4, c0 = 1
  CHECK(familyCutoff(x, p2) == 1);   // theta_2 * 4 = 1 is not > 1
  CHECK(familyCutoff(FinVector::unit(3), p2) == 0);

  SpaceSpec harm = harmonicSpace(120);
  std::vector<std::pair<int, Rational>> coords;
  for (int i = 1; i <= 100; ++i) coords.emplace_back(i, Rational(1));
  CHECK(familyCutoff(FinVector(coords), harm) == 98);
}

TEST_CASE("support caps are enforced") {
  SpaceSpec half = halfS1();
  std::vector<std::pair<int, Rational>> coords;
  for (int i = 1; i <= 30; ++i) coords.emplace_back(i, Rational(1));
  FinVector big(coords);
  CHECK_THROWS_AS(norm(big, half), CapExceeded);
  CHECK_THROWS_AS(bruteForceNorm(ones({1, 2, 3, 4, 5, 6, 7, 8, 9}), half),
                  CapExceeded);
}
