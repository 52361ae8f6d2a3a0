#pragma once

#include <map>
#include <random>
#include <vector>

#include "quivar/coproduct.hpp"
#include "quivar/invariants.hpp"
#include "quivar/rep.hpp"
#include "quivar/roots.hpp"
#include "quivar/tensor.hpp"

/// Independent cross-checks. Everything in here recomputes a result by a
/// different route than the main implementation (closed forms, brute-force
/// path enumeration, alternating sums over the Weyl group, finite
/// differences) so the two can be compared blindly. Also hosts the seeded
/// generators the checks run on.
namespace quivar::oracles {

/// Closed-form positive root lists, sorted lexicographically, filtered to
/// the box [0, bound].
std::vector<Root> rootsLineGraph(int n, const DimVec& bound);   // path with n vertices
std::vector<Root> rootsFourPronged(const DimVec& bound);        // star D4 layout
std::vector<Root> rootsDoubledEdge(const DimVec& bound);        // two vertices, two edges
std::vector<Root> rootsOneLoop(const DimVec& bound);            // one vertex with a loop

/// Brute-force membership by checking every composable word up to cap
/// (default (sum v)^2). Same decision thresholds as the saturation path but
/// a completely different algorithm.
Membership membershipByPaths(const Rep& r, const FramingSplit& s, int cap = -1,
                             double tol = 1e-9);

/// Tolerance-free variant over the Gaussian rationals.
Membership membershipByPathsExact(const ExactRep& r, const FramingSplit& s,
                                  int cap = -1);

/// Two-block special case of the tensor multiplicity: the number of times
/// the weight-(c) module appears in (a) tensor (b) for the one-vertex
/// loop-free graph, by the classical selection rule.
long long clebschGordanA1(int a, int b, int c);

/// Weight multiplicity by the alternating sum over the Weyl group with the
/// positive-root partition counter. Finite type only.
long long weightMultiplicityBySum(const Quiver& q, const Weight& lambda,
                                  const Weight& mu);

/// Full tensor decomposition by shifting every weight of the second factor
/// past the first and cancelling across the shifted action (the classical
/// multiplicity formula). Finite type only.
std::map<Weight, long long> tensorBySum(const Quiver& q, const Weight& lam,
                                        const Weight& mu);

/// Partition count via the pentagonal-number recurrence (the library counts
/// by a direct sum over part sizes).
long long partitionCountByPentagonal(int n);

/// Dimension of the zero locus modulo the group at a solved point, measured
/// from singular values of a finite-difference Jacobian and of the group
/// action's tangent map.
long long numericManifoldDim(const Rep& solved, double rankTol = 1e-6);

/// Random representation search: solve from random starts until a converged
/// stable point appears. Throws std::runtime_error after maxAttempts misses.
Rep findStablePoint(const Quiver& q, const DimVec& v, const DimVec& w,
                    std::mt19937_64& rng, int maxAttempts = 40);

/// A representation guaranteed to lie in the attracting set: the graded
/// pieces are filtered so that B preserves the second summand, a(W^2) lands
/// in it and b maps it into W^2. Entries are random at the given scale.
Rep makeAttractingRep(const Quiver& q, const DimVec& v, const DimVec& v2,
                      const DimVec& w, const FramingSplit& s, std::mt19937_64& rng,
                      double scale = 0.5);

/// Random component poset: up to maxComps components with dims in
/// [0, maxDim], a random order compatible with the listing, random groups.
PosetPtr randomPoset(std::mt19937_64& rng, int maxComps = 6, int maxDim = 3);

/// Random valid correction class over the poset: identity diagonal plus
/// random small rationals in the allowed blocks.
CorrClass randomCorrClass(const PosetPtr& poset, std::mt19937_64& rng);

/// Random group-block-diagonal element with small rational entries.
RatMat randomAlgebraElement(const ComponentPoset& poset, std::mt19937_64& rng);

struct SelftestResult {
  int checksRun = 0;
  int checksFailed = 0;
  std::vector<std::string> lines;
};

/// The condensed oracle-equivalence suite behind the selftest subcommand.
SelftestResult runSelftest(unsigned long long seed);

}  // namespace quivar::oracles
