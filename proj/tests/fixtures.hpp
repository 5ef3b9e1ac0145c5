#pragma once

#include "tsw/construction.hpp"
#include "tsw/lab.hpp"

namespace tsw::testing {

// Compact space for the Z-vector machinery: slowly decaying thetas keep the
// level masses small and every gamma value at eps = 1/4 equal to zero, so the
// recursion's eta_n are all 1 and supports live in S_2.
inline SpaceSpec compactSpace() {
  std::vector<Rational> thetas{Rational(1, 2), Rational(2, 5), Rational(1, 3),
                               Rational(1, 4), Rational(1, 5), Rational(1, 6),
                               Rational(1, 7), Rational(1, 8)};
  std::vector<FamilyPtr> families;
  for (int n = 1; n <= 8; ++n) {
    families.push_back(
        FamilyExpr::schreier(Ordinal::fromInt(static_cast<std::uint64_t>(n))));
  }
  return SpaceSpec(std::move(thetas), std::move(families),
                   Ordinal::fromInt(1));
}

// Desk-size schedule on compactSpace: levels (p,q) = (1,4),(2,5),(3,6), all
// eta_n = 1 (the faithful recursion values at eps = 1/4), grounds a shared
// long range, budgets relaxed to what the capped supports can deliver.
// `wide` picks the larger level-1 average (nontrivial smallness budget);
// the narrow variant keeps combined supports small enough for exact norms of
// block combinations.
inline lab::ParamSchedule compactSchedule(bool wide) {
  lab::ParamSchedule s;
  s.reduced = true;
  s.epsilon = Rational(1, 4);
  s.betas = {Ordinal::fromInt(1), Ordinal::fromInt(2), Ordinal::fromInt(3)};
  FinSet ground = FinSet::range(2, 200);
  lab::ScheduleLevel l1;
  l1.p = 1;
  l1.q = 4;
  l1.eta = Ordinal::fromInt(1);
  l1.ground = ground;
  l1.delta = Rational(1, 4);
  if (wide) {
    l1.budget = Rational(3, 2);
    l1.leaves = 4;
    l1.topBlocks = 2;
  } else {
    l1.budget = Rational(2);
    l1.leaves = 2;
    l1.topBlocks = 2;
  }
  lab::ScheduleLevel l2;
  l2.p = 2;
  l2.q = 5;
  l2.eta = Ordinal::fromInt(1);
  l2.ground = ground;
  l2.delta = Rational(1, 16);
  l2.budget = Rational(5, 2);
  l2.leaves = 2;
  l2.topBlocks = 1;
  lab::ScheduleLevel l3;
  l3.p = 3;
  l3.q = 6;
  l3.eta = Ordinal::fromInt(1);
  l3.ground = ground;
  l3.delta = Rational(1, 64);
  l3.budget = Rational(3);
  l3.leaves = 1;
  s.levels = {l1, l2, l3};
  return s;
}

}  // namespace tsw::testing
