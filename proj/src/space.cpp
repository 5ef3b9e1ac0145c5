#include "tsw/space.hpp"

#include <stdexcept>

namespace tsw {

SpaceSpec::SpaceSpec(std::vector<Rational> thetas,
                     std::vector<FamilyPtr> families,
                     std::optional<Ordinal> supIndexExponent)
    : thetas_(std::move(thetas)),
      families_(std::move(families)),
      xi_(std::move(supIndexExponent)) {
  if (thetas_.empty() || thetas_.size() != families_.size()) {
    throw std::invalid_argument("SpaceSpec: need matching theta/family tables");
  }
  for (std::size_t i = 0; i < thetas_.size(); ++i) {
    if (!(thetas_[i] > 0 && thetas_[i] < 1)) {
      throw std::invalid_argument("SpaceSpec: theta_n must lie in (0,1)");
    }
    if (i > 0 && thetas_[i] > thetas_[i - 1]) {
      throw std::invalid_argument("SpaceSpec: theta must be nonincreasing");
    }
    if (!families_[i]) throw std::invalid_argument("SpaceSpec: null family");
  }
  indexCache_.resize(thetas_.size());
  lexpCache_.resize(thetas_.size());
}

SpaceSpec SpaceSpec::schreierSpace(int nMax,
                                   const std::function<Rational(int)>& theta,
                                   const std::function<Ordinal(int)>& beta) {
  std::vector<Rational> ts;
  std::vector<FamilyPtr> fs;
  for (int n = 1; n <= nMax; ++n) {
    ts.push_back(theta(n));
    Ordinal b = beta ? beta(n) : Ordinal::fromInt(static_cast<std::uint64_t>(n));
    fs.push_back(FamilyExpr::schreier(std::move(b)));
  }
  return SpaceSpec(std::move(ts), std::move(fs));
}

const IndexResult& SpaceSpec::alphaIndex(int n) const {
  auto& slot = indexCache_.at(n - 1);
  if (!slot) slot = indexOf(families_.at(n - 1));
  return *slot;
}

const Ordinal& SpaceSpec::alphaLeadingExp(int n) const {
  auto& slot = lexpCache_.at(n - 1);
  if (!slot) slot = leadingExponent(alphaIndex(n).value);
  return *slot;
}

}  // namespace tsw
