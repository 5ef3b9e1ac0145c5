#pragma once

#include <optional>
#include <vector>

#include "tsw/family.hpp"
#include "tsw/ordinal.hpp"
#include "tsw/rational.hpp"

namespace tsw {

// The data (theta_n, F_n)_{n <= N_max} of a truncated mixed Tsirelson space
// T[(theta_n, F_n)]. Thetas are exact rationals, nonincreasing in (0,1).
class SpaceSpec {
 public:
  SpaceSpec(std::vector<Rational> thetas, std::vector<FamilyPtr> families,
            std::optional<Ordinal> supIndexExponent = std::nullopt);

  // T[(theta_n, S_{beta(n)})] for n = 1..nMax with a fixed scalar rule.
  static SpaceSpec schreierSpace(
      int nMax, const std::function<Rational(int)>& theta,
      const std::function<Ordinal(int)>& beta = {});

  int nMax() const { return static_cast<int>(thetas_.size()); }
  const Rational& theta(int n) const { return thetas_.at(n - 1); }
  const FamilyPtr& family(int n) const { return families_.at(n - 1); }
  const std::optional<Ordinal>& supIndexExponent() const { return xi_; }

  // alpha_n = iota(F_n), cached.
  const IndexResult& alphaIndex(int n) const;
  // l(alpha_n), cached.
  const Ordinal& alphaLeadingExp(int n) const;

 private:
  std::vector<Rational> thetas_;
  std::vector<FamilyPtr> families_;
  std::optional<Ordinal> xi_;
  mutable std::vector<std::optional<IndexResult>> indexCache_;
  mutable std::vector<std::optional<Ordinal>> lexpCache_;
};

}  // namespace tsw
