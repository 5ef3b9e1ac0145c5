#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tsw/finset.hpp"
#include "tsw/ordinal.hpp"
#include "tsw/rational.hpp"

namespace tsw {

// Expression tree denoting a regular (hereditary, spreading, compact) family
// of finite subsets of N. Every denoted family contains the empty set.
//
// DSL text forms: S0, S(a), comp(M,N), cat(M1,...,Mk), pow(M,k), rep(M,k),
// R(a), bdd(l,m), union(M1,...,Mk), norm(M,l), with `a` in the ordinal
// grammar.
class FamilyExpr;
using FamilyPtr = std::shared_ptr<const FamilyExpr>;

// Policy resolving S_alpha for limit alpha: maps (alpha, n) to the n-th
// member of the chosen sequence increasing to alpha. Null means the standard
// choices (standardFundamental).
using FundamentalPolicy =
    std::function<Ordinal(const Ordinal&, std::uint64_t)>;

enum class FamilyKind {
  Singletons,  // S_0
  Schreier,    // S_alpha
  Compose,     // M[N]
  Concat,      // (M_1, ..., M_k)
  Power,       // [M]^k
  Repeat,      // (M)^k
  RAlpha,      // R_alpha
  BddCard,     // {G : l <= G, |G| <= m} + {}
  Union,
  Normalize,   // (M cap [N_l]^{<inf}) + S_0
};

class FamilyExpr : public std::enable_shared_from_this<FamilyExpr> {
 public:
  FamilyKind kind;
  Ordinal alpha;                    // Schreier, RAlpha
  FundamentalPolicy policy;         // Schreier; null = standard
  std::vector<FamilyPtr> children;  // Compose(2) Concat(k>=1) Power/Repeat/Normalize(1) Union(k>=1)
  int count = 0;                    // Power/Repeat k, BddCard m
  int minElem = 0;                  // BddCard l, Normalize l
  FamilyPtr lowered;                // Power/Repeat/RAlpha: equivalent core expr
  bool supS1 = false;               // provably contains all of S_1
  bool supSingletons = false;       // provably contains every {n}

  static FamilyPtr singletons();
  static FamilyPtr schreier(Ordinal a, FundamentalPolicy pol = {});
  static FamilyPtr compose(FamilyPtr m, FamilyPtr n);
  static FamilyPtr concat(std::vector<FamilyPtr> ms);
  static FamilyPtr power(FamilyPtr m, int k);
  static FamilyPtr repeat(FamilyPtr m, int k);
  static FamilyPtr ralpha(Ordinal a);
  static FamilyPtr bddCard(int l, int m);
  static FamilyPtr unionOf(std::vector<FamilyPtr> ms);
  static FamilyPtr normalize(FamilyPtr m, int l);

  bool structurallyEqual(const FamilyExpr& other) const;
};

// --- membership -----------------------------------------------------------

bool contains(const FamilyPtr& f, const FinSet& g);

// Blocks must be nonempty (throws std::invalid_argument otherwise); true iff
// they are successive and their minima form a member of f.
bool isAdmissible(const FamilyPtr& f, const std::vector<FinSet>& blocks);

// Shared memo for a batch of membership queries against the same expression
// forest. Single-call operations create one internally.
class MembershipMemo;
std::shared_ptr<MembershipMemo> makeMembershipMemo();
bool contains(const FamilyPtr& f, const FinSet& g, MembershipMemo& memo);

// --- enumeration ----------------------------------------------------------

// { G subset of ground : G in f }, including {}. Ground size capped.
std::vector<FinSet> enumerate(const FamilyPtr& f, const FinSet& ground,
                              std::size_t cap = 20);

// Every member of lhs (within ground) that is not in rhs; empty result means
// lhs cap ground subset rhs. Both families must be hereditary, which lets the
// check walk only the extension-maximal members.
std::optional<FinSet> subFamilyCounterexample(const FamilyPtr& lhs,
                                              const FamilyPtr& rhs,
                                              const FinSet& ground);

// --- F-norm ---------------------------------------------------------------

// sup_{G in f} sum_{k in G} |x_k| for x given as (position, value) pairs.
Rational fNorm(const std::vector<std::pair<int, Rational>>& coords,
               const FamilyPtr& f, std::size_t supportCap = 20);

// --- index ----------------------------------------------------------------

struct IndexResult {
  Ordinal value;
  bool exact;  // false when a Compose/Power contributed via the <= rule
};

IndexResult indexOf(const FamilyPtr& f);

// --- iterated derivative --------------------------------------------------

struct DerivResult {
  bool member;
  bool certified;  // false only for negative answers cut off by the cap
};

// Decides G in f^{(k)} via the spreading-family witness criterion: there is
// m >= max G with G + {m+1,...,m+k} in f. Witness blocks are searched within
// elements <= searchCap; a negative without a structural size-cap certificate
// is reported uncertified.
DerivResult iteratedDerivContains(const FamilyPtr& f, int k, const FinSet& g,
                                  int searchCap);

// --- regularity check -----------------------------------------------------

struct RegularityViolation {
  std::string kind;  // "hereditary" | "spreading"
  FinSet member;
  FinSet image;  // the subset / shifted set that fell outside the family
};

struct RegularityReport {
  bool hereditaryPass = true;
  bool spreadingPass = true;
  std::size_t memberCount = 0;
  std::vector<RegularityViolation> violations;
  bool pass() const { return hereditaryPass && spreadingPass; }
};

RegularityReport checkRegularOnGround(const FamilyPtr& f, const FinSet& ground,
                                      std::size_t cap = 16);
// Same check against an arbitrary membership predicate.
RegularityReport checkRegularOnGroundPredicate(
    const std::function<bool(const FinSet&)>& member, const FinSet& ground,
    std::size_t cap = 16);

// --- DSL ------------------------------------------------------------------

FamilyPtr parseFamily(std::string_view text);
std::string formatFamily(const FamilyPtr& f);

}  // namespace tsw
