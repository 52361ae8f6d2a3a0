#pragma once

#include <map>
#include <vector>

#include "quivar/quiver.hpp"
#include "quivar/roots.hpp"

namespace quivar {

/// Weights in fundamental-weight coordinates (entries may be negative).
using Weight = std::vector<int>;

/// The weight w - C v attached to framed dimension data. Throws
/// UnsupportedType unless the graph is finite type.
Weight weightOf(const Quiver& q, const DimVec& v, const DimVec& w);

bool isDominantWeight(const Weight& x);

/// All weights of the irreducible module with highest weight lambda, with
/// multiplicities, computed by the exact recursive multiplicity formula.
/// Throws std::invalid_argument unless lambda is dominant, UnsupportedType
/// unless the graph is finite type.
std::map<Weight, long long> weightMultiplicities(const Quiver& q, const Weight& lambda);

/// Dimension of the irreducible module (product formula, exact arithmetic).
long long irrepDim(const Quiver& q, const Weight& lambda);

/// Decomposition of V(lam) (x) V(mu) into irreducibles: highest weight ->
/// multiplicity. Characters are multiplied exactly and peeled from the top.
std::map<Weight, long long> tensorDecompose(const Quiver& q, const Weight& lam,
                                            const Weight& mu);

/// Multiplicity of V(w - C v0) inside V(w1 - C v1) (x) V(w2 - C v2).
/// Preconditions: w = w1 + w2 entrywise, both factor weights dominant, and
/// the target weight dominant; violations throw std::invalid_argument.
/// A dominant target that simply does not occur returns 0.
long long multiplicityN(const Quiver& q, const DimVec& v1, const DimVec& w1,
                        const DimVec& v2, const DimVec& w2, const DimVec& v0,
                        const DimVec& w);

}  // namespace quivar
