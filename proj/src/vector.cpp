#include "tsw/vector.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tsw {

FinVector::FinVector(std::vector<std::pair<int, Rational>> coords) {
  std::map<int, Rational> acc;
  for (auto& [idx, val] : coords) {
    if (idx < 1) throw std::invalid_argument("FinVector: indices must be >= 1");
    acc[idx] += val;
  }
  for (auto& [idx, val] : acc) {
    if (val != 0) coords_.emplace_back(idx, std::move(val));
  }
}

FinSet FinVector::support() const {
  std::vector<int> v;
  v.reserve(coords_.size());
  for (const auto& [idx, _] : coords_) v.push_back(idx);
  return FinSet(std::move(v));
}

Rational FinVector::at(int index) const {
  auto it = std::lower_bound(
      coords_.begin(), coords_.end(), index,
      [](const auto& p, int i) { return p.first < i; });
  if (it != coords_.end() && it->first == index) return it->second;
  return Rational(0);
}

Rational FinVector::l1Norm() const {
  Rational s = 0;
  for (const auto& [_, val] : coords_) s += abs(val);
  return s;
}

Rational FinVector::c0Norm() const {
  Rational m = 0;
  for (const auto& [_, val] : coords_) {
    Rational a = abs(val);
    if (a > m) m = a;
  }
  return m;
}

FinVector FinVector::restrictedTo(const FinSet& e) const {
  std::vector<std::pair<int, Rational>> out;
  for (const auto& c : coords_) {
    if (e.contains(c.first)) out.push_back(c);
  }
  FinVector r;
  r.coords_ = std::move(out);
  return r;
}

FinVector FinVector::plus(const FinVector& other) const {
  std::vector<std::pair<int, Rational>> all = coords_;
  all.insert(all.end(), other.coords_.begin(), other.coords_.end());
  return FinVector(std::move(all));
}

FinVector FinVector::scaled(const Rational& a) const {
  FinVector r;
  if (a == 0) return r;
  r.coords_ = coords_;
  for (auto& [_, val] : r.coords_) val *= a;
  return r;
}

}  // namespace tsw
