#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsw {

// Finite subset of N = {1, 2, ...} held as a strictly increasing list.
class FinSet {
 public:
  FinSet() = default;
  FinSet(std::initializer_list<int> xs) : FinSet(std::vector<int>(xs)) {}
  explicit FinSet(std::vector<int> xs) : elems_(std::move(xs)) {
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (elems_[i] < 1 || (i > 0 && elems_[i] <= elems_[i - 1])) {
        throw std::invalid_argument("FinSet: not strictly increasing positive");
      }
    }
  }

  static FinSet range(int lo, int hi) {  // {lo, ..., hi}
    std::vector<int> v;
    for (int x = lo; x <= hi; ++x) v.push_back(x);
    return FinSet(std::move(v));
  }

  bool empty() const { return elems_.empty(); }
  std::size_t size() const { return elems_.size(); }
  int min() const { return elems_.front(); }
  int max() const { return elems_.back(); }
  int operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<int>& elems() const { return elems_; }

  bool contains(int x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
  }

  bool subsetOf(const FinSet& other) const {
    for (int x : elems_) {
      if (!other.contains(x)) return false;
    }
    return true;
  }

  FinSet withElement(int x) const {
    std::vector<int> v = elems_;
    v.insert(std::lower_bound(v.begin(), v.end(), x), x);
    return FinSet(std::move(v));
  }

  FinSet withoutElement(int x) const {
    std::vector<int> v;
    v.reserve(elems_.size());
    for (int e : elems_) {
      if (e != x) v.push_back(e);
    }
    return FinSet(std::move(v));
  }

  FinSet slice(std::size_t from, std::size_t to) const {  // [from, to)
    return FinSet(std::vector<int>(elems_.begin() + from, elems_.begin() + to));
  }

  FinSet unionWith(const FinSet& other) const {
    std::vector<int> v;
    std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(),
                   other.elems_.end(), std::back_inserter(v));
    return FinSet(std::move(v));
  }

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool operator==(const FinSet& o) const { return elems_ == o.elems_; }
  bool operator!=(const FinSet& o) const { return elems_ != o.elems_; }
  bool operator<(const FinSet& o) const { return elems_ < o.elems_; }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(elems_[i]);
    }
    return s + "}";
  }

 private:
  std::vector<int> elems_;
};

// E < F in the block order: max E < min F (empty sets compare freely).
inline bool blockBefore(const FinSet& e, const FinSet& f) {
  if (e.empty() || f.empty()) return true;
  return e.max() < f.min();
}

}  // namespace tsw
