#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsw/space.hpp"
#include "tsw/vector.hpp"

namespace tsw {

// Admissible tree certifying a norm value. Node histories are family-index
// tuples starting with 0; tags are the products of the matching thetas
// (theta_0 = 1). The certified value is the sum over leaves of
// tag * ||Ex||_c0.
struct CertNode {
  FinSet set;
  std::vector<int> history;
  Rational tag;
  std::vector<CertNode> children;
};

struct NormCert {
  Rational value;
  CertNode root;
};

struct NormOptions {
  std::size_t maxSupport = 24;
};

struct NormResult {
  Rational value;
  NormCert cert;
};

// Exact norm of Eq. (norm): || x || = max{ ||x||_c0,
// sup_n sup theta_n sum ||E_i x|| } over F_n-admissible (E_i), evaluated by
// interval-start dynamic programming over support segments, with a
// certifying admissible tree attaining the value.
NormResult norm(const FinVector& x, const SpaceSpec& space,
                const NormOptions& opt = {});

// Literal maximization over all F_n-admissible sequences of subsets of the
// support, independent of the interval-start reformulation. The oracle for
// `norm`.
Rational bruteForceNorm(const FinVector& x, const SpaceSpec& space,
                        std::size_t maxSupport = 8);

Rational evaluateTree(const CertNode& root, const FinVector& x);

struct TreeValidation {
  bool ok;
  std::string reason;  // empty when ok
};

TreeValidation validateTree(const CertNode& root, const SpaceSpec& space);

// Maximum of T x over (p,q)-restricted admissible trees: every leaf lies
// under a node whose history h satisfies eps*prod(theta_h) in
// (theta_q, theta_p]. Without a restriction this is the plain norm; the empty
// tree is always restricted, so the result is at least 0.
Rational restrictedNorm(const FinVector& x, const SpaceSpec& space,
                        std::optional<std::pair<int, int>> pq,
                        const Rational& epsilon, const NormOptions& opt = {});

// Largest n with theta_n * ||x||_l1 > ||x||_c0 (0 if none); families beyond
// it cannot beat the c0 term.
int familyCutoff(const FinVector& x, const SpaceSpec& space);

}  // namespace tsw
