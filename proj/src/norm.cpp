#include "tsw/norm.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "tsw/errors.hpp"

namespace tsw {

namespace {

// Shared support-range machinery for the exact norm DP. Ranges are index
// intervals [i,j) into the sorted support; every DP subproblem is one of
// those because blocks may be extended rightward (unconditional monotonicity)
// and prefix points dropped (hereditarity + spreading) without losing the
// supremum.
class NormEngine {
 public:
  NormEngine(const FinVector& x, const SpaceSpec& space)
      : space_(space), memo_(makeMembershipMemo()) {
    for (const auto& [idx, val] : x.coords()) {
      pos_.push_back(idx);
      val_.push_back(abs(val));
    }
    const std::size_t m = pos_.size();
    l1suffix_.assign(m + 1, Rational(0));
    for (std::size_t i = m; i-- > 0;) l1suffix_[i] = l1suffix_[i + 1] + val_[i];
    rangeValue_.assign(m * m + 1, std::nullopt);
    decision_.assign(m * m + 1, Decision{});
  }

  std::size_t supportSize() const { return pos_.size(); }

  Rational l1(std::size_t i, std::size_t j) const {
    return l1suffix_[i] - l1suffix_[j];
  }

  Rational c0(std::size_t i, std::size_t j) const {
    Rational best = 0;
    for (std::size_t k = i; k < j; ++k) {
      if (val_[k] > best) best = val_[k];
    }
    return best;
  }

  const Rational& rangeNorm(std::size_t i, std::size_t j) {
    auto& slot = rangeValue_[key(i, j)];
    if (slot) return *slot;
    Decision dec;
    Rational best = c0(i, j);
    const Rational full = l1(i, j);
    for (int n = 1; n <= space_.nMax(); ++n) {
      const Rational& th = space_.theta(n);
      if (th * full < best || (th * full == best && dec.family != 0)) {
        break;  // theta nonincreasing: later n cannot improve
      }
      std::vector<std::size_t> starts;
      std::optional<Rational> v = bestSplit(
          i, j, n, best / th, /*allowFullBlock=*/false, &starts,
          [this](std::size_t a, std::size_t b) -> std::optional<Rational> {
            return rangeNorm(a, b);
          });
      if (!v) continue;
      Rational candidate = th * *v;
      // A tree attaining the value beats the bare c0 leaf as a certificate.
      if (candidate > best || (candidate == best && dec.family == 0)) {
        best = std::move(candidate);
        dec.family = n;
        dec.starts = std::move(starts);
      }
    }
    decision_[key(i, j)] = std::move(dec);
    slot = std::move(best);
    return *slot;
  }

  // Maximum of sum blockValue(s_t, s_{t+1}) over start sequences
  // i <= s_1 < ... < s_k < j whose position minima form a member of F_n.
  // The single block [i,j) is the identity transition and is excluded from
  // the plain norm (theta_n < 1 makes it never optimal). Blocks where
  // blockValue is nullopt invalidate the sequence (used by the restricted
  // DP). `floor` prunes sequences that cannot beat the caller's incumbent.
  std::optional<Rational> bestSplit(
      std::size_t i, std::size_t j, int n, Rational floor, bool allowFullBlock,
      std::vector<std::size_t>* bestStarts,
      const std::function<std::optional<Rational>(std::size_t, std::size_t)>&
          blockValue) {
    const FamilyPtr& fam = space_.family(n);
    std::optional<Rational> best;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t, const FinSet&, const Rational&)> dfs =
        [&](std::size_t p, const FinSet& minima, const Rational& sum) {
          // sum + l1 tail bounds every completion; callers ignore results
          // below `floor`, so those branches can be cut too.
          Rational cap = sum + l1(p, j);
          if (best && cap <= *best) return;
          if (cap < floor) return;
          // Close: final block [p, j).
          if (!(cur.size() == 1 && cur[0] == i && !allowFullBlock)) {
            auto bv = blockValue(p, j);
            if (bv) {
              Rational total = sum + *bv;
              if (!best || total > *best) {
                best = total;
                if (bestStarts) *bestStarts = cur;
              }
            }
          }
          // Extend: next start q.
          for (std::size_t q = p + 1; q < j; ++q) {
            auto bv = blockValue(p, q);
            if (!bv) continue;
            FinSet next = minima.withElement(pos_[q]);
            if (!contains(fam, next, *memo_)) continue;
            cur.push_back(q);
            dfs(q, next, sum + *bv);
            cur.pop_back();
          }
        };
    for (std::size_t s1 = i; s1 < j; ++s1) {
      FinSet first({pos_[s1]});
      if (!contains(fam, first, *memo_)) continue;
      cur.assign(1, s1);
      dfs(s1, first, Rational(0));
    }
    return best;
  }

  CertNode buildCert(std::size_t i, std::size_t j, std::vector<int> history,
                     Rational tag) {
    CertNode node;
    node.set = FinSet(std::vector<int>(pos_.begin() + i, pos_.begin() + j));
    node.history = std::move(history);
    node.tag = std::move(tag);
    const Decision& dec = decision_[key(i, j)];
    if (dec.family != 0) {
      std::vector<int> childHist = node.history;
      childHist.push_back(dec.family);
      Rational childTag = node.tag * space_.theta(dec.family);
      for (std::size_t t = 0; t < dec.starts.size(); ++t) {
        std::size_t a = dec.starts[t];
        std::size_t b = (t + 1 < dec.starts.size()) ? dec.starts[t + 1] : j;
        node.children.push_back(buildCert(a, b, childHist, childTag));
      }
    }
    return node;
  }

  const SpaceSpec& space() const { return space_; }
  MembershipMemo& memo() { return *memo_; }

 private:
  struct Decision {
    int family = 0;  // 0 = c0 leaf
    std::vector<std::size_t> starts;
  };

  std::size_t key(std::size_t i, std::size_t j) const {
    return i * pos_.size() + j;
  }

  const SpaceSpec& space_;
  std::vector<int> pos_;
  std::vector<Rational> val_;
  std::vector<Rational> l1suffix_;
  std::vector<std::optional<Rational>> rangeValue_;
  std::vector<Decision> decision_;
  std::shared_ptr<MembershipMemo> memo_;
};

}  // namespace

NormResult norm(const FinVector& x, const SpaceSpec& space,
                const NormOptions& opt) {
  if (x.supportSize() > opt.maxSupport) {
    throw CapExceeded("max-support", "support " +
                                         std::to_string(x.supportSize()) +
                                         ", cap " +
                                         std::to_string(opt.maxSupport));
  }
  NormResult out;
  if (x.empty()) {
    out.value = 0;
    out.cert = NormCert{Rational(0), CertNode{FinSet(), {0}, Rational(1), {}}};
    return out;
  }
  NormEngine engine(x, space);
  const std::size_t m = engine.supportSize();
  out.value = engine.rangeNorm(0, m);
  out.cert.value = out.value;
  out.cert.root = engine.buildCert(0, m, {0}, Rational(1));
  return out;
}

// --- brute force oracle -----------------------------------------------------

namespace {

class BruteEngine {
 public:
  BruteEngine(const FinVector& x, const SpaceSpec& space)
      : space_(space), memo_(makeMembershipMemo()) {
    for (const auto& [idx, val] : x.coords()) {
      pos_.push_back(idx);
      val_.push_back(abs(val));
    }
    value_.assign(std::size_t(1) << pos_.size(), std::nullopt);
  }

  Rational run() {
    if (pos_.empty()) return 0;
    return eval((std::size_t(1) << pos_.size()) - 1);
  }

 private:
  Rational eval(std::size_t mask) {
    auto& slot = value_[mask];
    if (slot) return *slot;
    std::vector<std::size_t> bits;
    for (std::size_t i = 0; i < pos_.size(); ++i) {
      if (mask & (std::size_t(1) << i)) bits.push_back(i);
    }
    Rational best = 0;
    Rational l1 = 0;
    for (std::size_t b : bits) {
      if (val_[b] > best) best = val_[b];
      l1 += val_[b];
    }
    for (int n = 1; n <= space_.nMax(); ++n) {
      const Rational& th = space_.theta(n);
      if (th * l1 <= best) break;
      Rational v = bestSequence(mask, bits, n);
      if (th * v > best) best = th * v;
    }
    slot = std::move(best);
    return *slot;
  }

  // Max of sum ||E_i x|| over F_n-admissible sequences of nonempty subsets of
  // the masked support (minus the single block equal to the whole mask).
  Rational bestSequence(std::size_t mask, const std::vector<std::size_t>& bits,
                        int n) {
    const FamilyPtr& fam = space_.family(n);
    Rational best = 0;
    std::function<void(std::size_t, std::size_t, std::size_t, const Rational&,
                       const FinSet&)>
        dfs = [&](std::size_t idx, std::size_t open, std::size_t closedCount,
                  const Rational& sumClosed, const FinSet& minima) {
          if (idx == bits.size()) {
            if (open == 0) return;
            if (closedCount == 0 && open == mask) return;  // identity block
            Rational total = sumClosed + eval(open);
            if (total > best) best = total;
            return;
          }
          const std::size_t bit = std::size_t(1) << bits[idx];
          // Leave the element out.
          dfs(idx + 1, open, closedCount, sumClosed, minima);
          if (open != 0) {
            // Grow the open block.
            dfs(idx + 1, open | bit, closedCount, sumClosed, minima);
            // Close it and start a new block here.
            FinSet next = minima.withElement(pos_[bits[idx]]);
            if (contains(fam, next, *memo_)) {
              dfs(idx + 1, bit, closedCount + 1, sumClosed + eval(open), next);
            }
          } else {
            // Start the first block here.
            FinSet first({pos_[bits[idx]]});
            if (contains(fam, first, *memo_)) {
              dfs(idx + 1, bit, 0, Rational(0), first);
            }
          }
        };
    dfs(0, 0, 0, Rational(0), FinSet());
    return best;
  }

  const SpaceSpec& space_;
  std::vector<int> pos_;
  std::vector<Rational> val_;
  std::vector<std::optional<Rational>> value_;
  std::shared_ptr<MembershipMemo> memo_;
};

}  // namespace

Rational bruteForceNorm(const FinVector& x, const SpaceSpec& space,
                        std::size_t maxSupport) {
  if (x.supportSize() > maxSupport) {
    throw CapExceeded("brute-support-cap",
                      "support " + std::to_string(x.supportSize()) + ", cap " +
                          std::to_string(maxSupport));
  }
  return BruteEngine(x, space).run();
}

// --- certificates -----------------------------------------------------------

Rational evaluateTree(const CertNode& node, const FinVector& x) {
  if (node.children.empty()) {
    return node.tag * x.restrictedTo(node.set).c0Norm();
  }
  Rational sum = 0;
  for (const CertNode& c : node.children) sum += evaluateTree(c, x);
  return sum;
}

namespace {

bool validateNode(const CertNode& node, const SpaceSpec& space,
                  std::string& reason) {
  if (node.children.empty()) return true;
  // All children carry the parent's history extended by one common family.
  const std::vector<int>& h0 = node.children.front().history;
  if (h0.size() != node.history.size() + 1 ||
      !std::equal(node.history.begin(), node.history.end(), h0.begin())) {
    reason = "child history does not extend parent history";
    return false;
  }
  int n = h0.back();
  if (n < 1 || n > space.nMax()) {
    reason = "family index out of range";
    return false;
  }
  std::vector<FinSet> sets;
  for (const CertNode& c : node.children) {
    if (c.set.empty()) {
      reason = "empty child node";
      return false;
    }
    if (!c.set.subsetOf(node.set)) {
      reason = "child set not contained in parent";
      return false;
    }
    if (c.history != h0) {
      reason = "siblings disagree on history";
      return false;
    }
    if (c.tag != node.tag * space.theta(n)) {
      reason = "tag is not the history theta-product";
      return false;
    }
    sets.push_back(c.set);
  }
  for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
    if (sets[i].max() >= sets[i + 1].min()) {
      reason = "children are not successive";
      return false;
    }
  }
  if (!isAdmissible(space.family(n), sets)) {
    reason = "children are not F_" + std::to_string(n) + "-admissible";
    return false;
  }
  for (const CertNode& c : node.children) {
    if (!validateNode(c, space, reason)) return false;
  }
  return true;
}

}  // namespace

TreeValidation validateTree(const CertNode& root, const SpaceSpec& space) {
  if (root.history != std::vector<int>{0}) {
    return {false, "root history must be (0)"};
  }
  if (root.tag != 1) return {false, "root tag must be 1"};
  std::string reason;
  if (!validateNode(root, space, reason)) return {false, reason};
  return {true, ""};
}

// --- restricted trees -------------------------------------------------------

Rational restrictedNorm(const FinVector& x, const SpaceSpec& space,
                        std::optional<std::pair<int, int>> pq,
                        const Rational& epsilon, const NormOptions& opt) {
  if (!pq) return norm(x, space, opt).value;
  if (x.supportSize() > opt.maxSupport) {
    throw CapExceeded("max-support", "support " +
                                         std::to_string(x.supportSize()) +
                                         ", cap " +
                                         std::to_string(opt.maxSupport));
  }
  const auto [p, q] = *pq;
  if (p < 1 || q <= p || q > space.nMax()) {
    throw std::invalid_argument("restrictedNorm: need 1 <= p < q <= nMax");
  }
  if (!(epsilon > 0 && epsilon < 1)) {
    throw std::invalid_argument("restrictedNorm: epsilon must lie in (0,1)");
  }
  if (x.empty()) return 0;

  NormEngine engine(x, space);
  const Rational& thp = space.theta(p);
  const Rational& thq = space.theta(q);
  auto inWindow = [&](const Rational& tag) {
    Rational e = epsilon * tag;
    return e > thq && e <= thp;
  };

  // Unqualified states, keyed by (range, tag). Qualified subtrees are free of
  // further constraints, so their value is the plain range norm.
  std::map<std::tuple<std::size_t, std::size_t, Rational>,
           std::optional<Rational>>
      memo;
  std::function<std::optional<Rational>(std::size_t, std::size_t,
                                        const Rational&)>
      rec = [&](std::size_t i, std::size_t j,
                const Rational& tag) -> std::optional<Rational> {
    if (inWindow(tag)) return engine.rangeNorm(i, j);
    auto key = std::make_tuple(i, j, tag);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::optional<Rational> best;
    for (int n = 1; n <= space.nMax(); ++n) {
      Rational childTag = tag * space.theta(n);
      if (epsilon * childTag <= thq) continue;  // window unreachable below
      auto v = engine.bestSplit(
          i, j, n, best ? *best / space.theta(n) : Rational(-1),
          /*allowFullBlock=*/true, nullptr,
          [&](std::size_t a, std::size_t b) { return rec(a, b, childTag); });
      if (v) {
        Rational total = space.theta(n) * *v;
        if (!best || total > *best) best = total;
      }
    }
    memo[key] = best;
    return best;
  };

  auto top = rec(0, engine.supportSize(), Rational(1));
  if (!top || *top < 0) return 0;
  return *top;
}

int familyCutoff(const FinVector& x, const SpaceSpec& space) {
  const Rational l1 = x.l1Norm();
  const Rational c0 = x.c0Norm();
  int cutoff = 0;
  for (int n = 1; n <= space.nMax(); ++n) {
    if (space.theta(n) * l1 > c0) {
      cutoff = n;
    } else {
      break;  // theta nonincreasing
    }
  }
  return cutoff;
}

}  // namespace tsw
