#pragma once

#include <vector>

#include "quivar/quiver.hpp"
#include "quivar/roots.hpp"

namespace quivar {

/// Integer partition, weakly decreasing, no zero parts. The empty partition
/// is {}.
using Partition = std::vector<int>;

/// All partitions of n >= 0 in reverse-lexicographic order: (n) first,
/// (1,...,1) last. Throws on negative n.
std::vector<Partition> partitionsOf(int n);

/// Number of partitions of n (convenience; same count as partitionsOf).
long long partitionCount(int n);

/// One component of the fixed locus of the framing scaling: a split
/// v = v1 + v2 of the dimension vector.
struct FixedComponent {
  DimVec v1, v2;

  bool operator==(const FixedComponent& o) const { return v1 == o.v1 && v2 == o.v2; }
};

/// All splits v = v1 + v2, ordered by v1 lexicographically descending (the
/// all-of-v component first).
std::vector<FixedComponent> fixedComponents(const DimVec& v);

enum class Cmp { lt, gt, eq, incomparable };

/// Componentwise order on the v1 part: alpha <= beta iff alpha.v1 <= beta.v1.
/// Throws std::invalid_argument when the totals v1 + v2 disagree.
Cmp compareComponents(const FixedComponent& alpha, const FixedComponent& beta);

/// Sorts components ascending-lexicographically by v1, which refines the
/// componentwise partial order (the minimal components come first).
std::vector<FixedComponent> linearExtension(std::vector<FixedComponent> comps);

/// dim = 2 v.w - v^T C v (complex dimension of the smooth locus).
long long dimQuiverVariety(const Quiver& q, const DimVec& v, const DimVec& w);

struct OddCodim : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rank of the attracting-set fibration over a fixed component: half the
/// codimension of the component inside the ambient space with framing
/// w = w1 + w2. Throws OddCodim when the codimension is negative or odd.
int attractingRank(const Quiver& q, const DimVec& w1, const DimVec& w2,
                   const FixedComponent& c);

/// A stratum of the affinization: the part of v carried by a representation
/// with free closed orbit (v0) plus a multiset of simple summands, one
/// partition per simple module dimension (simpleModuleDims order). For
/// finite-type graphs lambda is empty and v0 alone indexes the stratum.
struct StratumIndex {
  DimVec v0;
  std::vector<Partition> lambda;

  bool operator==(const StratumIndex& o) const {
    return v0 == o.v0 && lambda == o.lambda;
  }
};

/// Strata of the affine quotient at (v, w). Throws UnsupportedType on
/// indefinite graphs.
std::vector<StratumIndex> strataOfM0(const Quiver& q, const DimVec& v, const DimVec& w);

/// A stratum of the fixed locus: the free part splits as (v1, v2) across the
/// two framing factors while the simple summands are shared.
struct FixedStratumIndex {
  DimVec v1, v2;
  std::vector<Partition> lambda;

  bool operator==(const FixedStratumIndex& o) const {
    return v1 == o.v1 && v2 == o.v2 && lambda == o.lambda;
  }
};

/// Strata of the product-of-quotients target of the fixed locus at
/// (v, w1 + w2). Throws UnsupportedType on indefinite graphs.
std::vector<FixedStratumIndex> strataOfFixedLocus(const Quiver& q, const DimVec& v,
                                                  const DimVec& w1, const DimVec& w2);

/// Fiber cardinality of the gluing map over a stratum: each part of each
/// partition chooses one of the two sides, so the count is
/// prod_k 2^(number of parts of lambda_k). The empty lambda gives 1.
long long sigmaFiberCount(const FixedStratumIndex& s);

}  // namespace quivar
