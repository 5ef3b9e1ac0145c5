#pragma once

#include <utility>
#include <vector>

#include "tsw/finset.hpp"
#include "tsw/rational.hpp"

namespace tsw {

// Finitely supported rational vector on N (an element of c00), stored as
// (index, value) pairs with strictly increasing indices and nonzero values.
class FinVector {
 public:
  FinVector() = default;
  // Sorts, merges duplicate indices and drops zeros.
  explicit FinVector(std::vector<std::pair<int, Rational>> coords);

  static FinVector unit(int k) { return FinVector({{k, Rational(1)}}); }

  const std::vector<std::pair<int, Rational>>& coords() const {
    return coords_;
  }
  bool empty() const { return coords_.empty(); }
  std::size_t supportSize() const { return coords_.size(); }
  FinSet support() const;
  Rational at(int index) const;

  Rational l1Norm() const;
  Rational c0Norm() const;  // max |value|, 0 for the zero vector

  FinVector restrictedTo(const FinSet& e) const;
  FinVector plus(const FinVector& other) const;
  FinVector scaled(const Rational& a) const;

  bool operator==(const FinVector& o) const { return coords_ == o.coords_; }

 private:
  std::vector<std::pair<int, Rational>> coords_;
};

}  // namespace tsw
