#pragma once

#include <memory>
#include <string>
#include <vector>

#include "quivar/quiver.hpp"
#include "quivar/rational.hpp"

namespace quivar {

struct InvalidClass : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InconsistentDims : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A finite poset of named components, each carrying a nonnegative dimension
/// (the size of its block) and a group id (components glued by the finite
/// covering map share a group). Components must be listed in a linear
/// extension of the order: comp i <= comp j implies i <= j as indices.
class ComponentPoset {
 public:
  ComponentPoset(std::vector<std::string> labels, std::vector<int> dims,
                 std::vector<int> groups, std::vector<std::vector<char>> leq);

  int numComponents() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(i); }
  int indexOf(const std::string& label) const;
  int dim(int i) const { return dims_.at(i); }
  int offset(int i) const { return offsets_.at(i); }
  int dimTotal() const { return dimTotal_; }
  bool leq(int i, int j) const { return leq_.at(i).at(j) != 0; }
  int group(int i) const { return groups_.at(i); }
  int numGroups() const { return numGroups_; }

 private:
  std::vector<std::string> labels_;
  std::vector<int> dims_, groups_, offsets_;
  std::vector<std::vector<char>> leq_;
  int dimTotal_ = 0, numGroups_ = 0;
};

using PosetPtr = std::shared_ptr<const ComponentPoset>;

/// A correction-class matrix: a square matrix over the total space
/// of a ComponentPoset, stored dense with exact rational entries.
struct CorrClass {
  PosetPtr poset;
  RatMat mat;

  CorrClass(PosetPtr p, RatMat m);
};

/// The triangularity conditions: every diagonal block is the identity and
/// block (beta, alpha) vanishes unless beta <= alpha in the poset
/// (incomparable pairs vanish too).
bool validateClass(const CorrClass& c);

/// Column-phrased form of the same conditions: each column block-vector is
/// supported below its own component and is normalized there. Equivalent to
/// validateClass; kept separate so the two can cross-check each other.
bool splittingCheck(const CorrClass& c);

/// Inverse through the finite Neumann series sum_k (I - c)^k; the inverse of
/// a valid class is again a valid class. Throws InvalidClass when
/// validateClass fails.
CorrClass invertClass(const CorrClass& c);

/// True when m is supported on the group-diagonal blocks (the semisimple
/// algebra attached to the covering).
bool isAlgebraElement(const ComponentPoset& poset, const RatMat& m);

/// Conjugation Delta_c(A) = c^{-1} A c for a group-block-diagonal A.
/// Throws InvalidClass on an invalid class and InconsistentDims when A is
/// not an algebra element of the right size.
RatMat deltaC(const CorrClass& c, const RatMat& A);

/// Multiplicity table of the source simples inside each group module:
/// n[g][s] = rank(P_s restricted to group g) / sourceDims[s]. The projectors
/// must be orthogonal group-block-diagonal idempotents summing to the
/// identity. Throws InconsistentDims when ranks fail to divide or the block
/// dimensions do not add up.
std::vector<std::vector<long long>> extractMultiplicities(
    const ComponentPoset& poset, const std::vector<int>& sourceDims,
    const std::vector<RatMat>& projectors);

/// A component of the three-factor fixed locus: a split v = v1 + v2 + v3.
struct TripleComponent {
  DimVec v1, v2, v3;
};

/// Index space shared by the four classes entering the coassociativity
/// criterion. Components must share the same total.
class TriplePoset {
 public:
  TriplePoset(std::vector<TripleComponent> comps, std::vector<int> dims);

  int numComponents() const { return static_cast<int>(comps_.size()); }
  const TripleComponent& comp(int i) const { return comps_.at(i); }
  int dim(int i) const { return dims_.at(i); }
  int offset(int i) const { return offsets_.at(i); }
  int dimTotal() const { return dimTotal_; }

 private:
  std::vector<TripleComponent> comps_;
  std::vector<int> dims_, offsets_;
  int dimTotal_ = 0;
};

/// Which of the four corners of the criterion a class sits in:
///   split12_3: the two-step splitting with (1,2) merged, ordered by v1+v2;
///   split1_23: the two-step splitting with (2,3) merged, ordered by v1;
///   refine12_3: refines the (1,2) factor, fixing v3 and ordered by v1;
///   refine1_23: refines the (2,3) factor, fixing v1 and ordered by v2.
enum class TripleKind { split12_3, split1_23, refine12_3, refine1_23 };

/// May block (row, col) be nonzero off the diagonal for this kind?
bool tripleSupportAllowed(TripleKind kind, const TripleComponent& row,
                          const TripleComponent& col);

/// Diagonal blocks identity, off-diagonal support per tripleSupportAllowed.
/// Throws InvalidClass on violation.
void validateTripleClass(const TriplePoset& tp, TripleKind kind, const RatMat& m);

/// The coassociativity criterion: with all four classes valid for their
/// corners, tests  c^{12,3} * c^{(1,2),3} == c^{1,(2,3)} * c^{1,23}  as
/// exact matrix products.
bool coassociativityCheck(const TriplePoset& tp, const RatMat& c12_3,
                          const RatMat& refine12_3, const RatMat& refine1_23,
                          const RatMat& c1_23);

}  // namespace quivar
