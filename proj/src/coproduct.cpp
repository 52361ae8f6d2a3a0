#include "quivar/coproduct.hpp"

#include <algorithm>

namespace quivar {

ComponentPoset::ComponentPoset(std::vector<std::string> labels, std::vector<int> dims,
                               std::vector<int> groups,
                               std::vector<std::vector<char>> leq)
    : labels_(std::move(labels)), dims_(std::move(dims)), groups_(std::move(groups)),
      leq_(std::move(leq)) {
  const int n = numComponents();
  if (n == 0) throw std::invalid_argument("poset needs at least one component");
  if (static_cast<int>(dims_.size()) != n || static_cast<int>(groups_.size()) != n ||
      static_cast<int>(leq_.size()) != n)
    throw std::invalid_argument("poset arrays of different lengths");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (labels_[i] == labels_[j])
        throw std::invalid_argument("duplicate component label: " + labels_[i]);
  for (int d : dims_)
    if (d < 0) throw std::invalid_argument("negative component dimension");
  for (const auto& row : leq_)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("poset arrays of different lengths");
  for (int i = 0; i < n; ++i) {
    if (!leq_[i][i]) throw std::invalid_argument("order is not reflexive");
    for (int j = 0; j < n; ++j) {
      if (i != j && leq_[i][j] && leq_[j][i])
        throw std::invalid_argument("order is not antisymmetric");
      if (leq_[i][j] && j < i)
        throw std::invalid_argument("components are not listed in a linear extension");
      for (int k = 0; k < n; ++k)
        if (leq_[i][j] && leq_[j][k] && !leq_[i][k])
          throw std::invalid_argument("order is not transitive");
    }
  }
  int maxGroup = -1;
  for (int g : groups_) {
    if (g < 0) throw std::invalid_argument("negative group id");
    maxGroup = std::max(maxGroup, g);
  }
  numGroups_ = maxGroup + 1;
  std::vector<char> used(numGroups_, 0);
  for (int g : groups_) used[g] = 1;
  for (char u : used)
    if (!u) throw std::invalid_argument("group ids are not contiguous");
  offsets_.resize(n);
  for (int i = 0; i < n; ++i) {
    offsets_[i] = dimTotal_;
    dimTotal_ += dims_[i];
  }
}

int ComponentPoset::indexOf(const std::string& label) const {
  for (int i = 0; i < numComponents(); ++i)
    if (labels_[i] == label) return i;
  throw std::invalid_argument("unknown component label: " + label);
}

CorrClass::CorrClass(PosetPtr p, RatMat m) : poset(std::move(p)), mat(std::move(m)) {
  if (!poset) throw std::invalid_argument("class without a poset");
  if (mat.rows() != poset->dimTotal() || mat.cols() != poset->dimTotal())
    throw InconsistentDims("class matrix does not match the poset dimensions");
}

namespace {

bool blockIsZero(const RatMat& m, int r0, int rn, int c0, int cn) {
  for (int i = 0; i < rn; ++i)
    for (int j = 0; j < cn; ++j)
      if (m(r0 + i, c0 + j) != 0) return false;
  return true;
}

bool blockIsIdentity(const RatMat& m, int r0, int c0, int d) {
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (m(r0 + i, c0 + j) != (i == j ? Rat(1) : Rat(0))) return false;
  return true;
}

}  // namespace

bool validateClass(const CorrClass& c) {
  const ComponentPoset& p = *c.poset;
  for (int beta = 0; beta < p.numComponents(); ++beta)
    for (int alpha = 0; alpha < p.numComponents(); ++alpha) {
      if (beta == alpha) {
        if (!blockIsIdentity(c.mat, p.offset(beta), p.offset(alpha), p.dim(beta)))
          return false;
      } else if (!p.leq(beta, alpha)) {
        if (!blockIsZero(c.mat, p.offset(beta), p.dim(beta), p.offset(alpha),
                         p.dim(alpha)))
          return false;
      }
    }
  return true;
}

bool splittingCheck(const CorrClass& c) {
  const ComponentPoset& p = *c.poset;
  // walk column by column: the alpha-th column group must carry the unit on
  // its own block and vanish on every component not below alpha
  for (int alpha = 0; alpha < p.numComponents(); ++alpha)
    for (int col = 0; col < p.dim(alpha); ++col) {
      int j = p.offset(alpha) + col;
      for (int beta = 0; beta < p.numComponents(); ++beta)
        for (int row = 0; row < p.dim(beta); ++row) {
          int i = p.offset(beta) + row;
          const Rat& x = c.mat(i, j);
          if (beta == alpha) {
            if (x != (row == col ? Rat(1) : Rat(0))) return false;
          } else if (!p.leq(beta, alpha) && x != 0) {
            return false;
          }
        }
    }
  return true;
}

CorrClass invertClass(const CorrClass& c) {
  if (!validateClass(c)) throw InvalidClass("class violates the triangularity conditions");
  const int d = c.mat.rows();
  RatMat N = c.mat - RatMat::identity(d);
  // N is nilpotent of order <= number of components, so the series is finite
  RatMat inv = RatMat::identity(d);
  RatMat power = RatMat::identity(d);
  for (int k = 1; k <= c.poset->numComponents(); ++k) {
    power = power * N;
    if (power.isZero()) break;
    if (k % 2 == 1)
      inv = inv - power;
    else
      inv = inv + power;
  }
  return CorrClass(c.poset, std::move(inv));
}

bool isAlgebraElement(const ComponentPoset& poset, const RatMat& m) {
  if (m.rows() != poset.dimTotal() || m.cols() != poset.dimTotal()) return false;
  for (int beta = 0; beta < poset.numComponents(); ++beta)
    for (int alpha = 0; alpha < poset.numComponents(); ++alpha)
      if (poset.group(beta) != poset.group(alpha) &&
          !blockIsZero(m, poset.offset(beta), poset.dim(beta), poset.offset(alpha),
                       poset.dim(alpha)))
        return false;
  return true;
}

RatMat deltaC(const CorrClass& c, const RatMat& A) {
  if (!isAlgebraElement(*c.poset, A))
    throw InconsistentDims("input is not a group-block-diagonal algebra element");
  CorrClass inv = invertClass(c);
  return inv.mat * A * c.mat;
}

std::vector<std::vector<long long>> extractMultiplicities(
    const ComponentPoset& poset, const std::vector<int>& sourceDims,
    const std::vector<RatMat>& projectors) {
  if (sourceDims.size() != projectors.size())
    throw InconsistentDims("one projector per source is required");
  for (int e : sourceDims)
    if (e <= 0) throw InconsistentDims("source dimensions must be positive");
  const int d = poset.dimTotal();
  RatMat sum(d, d);
  for (const RatMat& P : projectors) {
    if (!isAlgebraElement(poset, P))
      throw InconsistentDims("projector is not a group-block-diagonal algebra element");
    if (P * P != P) throw InconsistentDims("projector is not idempotent");
    sum = sum + P;
  }
  for (std::size_t s = 0; s < projectors.size(); ++s)
    for (std::size_t t = 0; t < projectors.size(); ++t)
      if (s != t && !(projectors[s] * projectors[t]).isZero())
        throw InconsistentDims("projectors are not mutually orthogonal");
  if (sum != RatMat::identity(d))
    throw InconsistentDims("projectors do not sum to the identity");

  // group g occupies the union of its components' index ranges
  std::vector<std::vector<int>> groupIdx(poset.numGroups());
  for (int i = 0; i < poset.numComponents(); ++i)
    for (int k = 0; k < poset.dim(i); ++k)
      groupIdx[poset.group(i)].push_back(poset.offset(i) + k);

  std::vector<std::vector<long long>> n(poset.numGroups(),
                                        std::vector<long long>(sourceDims.size(), 0));
  for (int g = 0; g < poset.numGroups(); ++g) {
    long long total = 0;
    for (std::size_t s = 0; s < projectors.size(); ++s) {
      const auto& idx = groupIdx[g];
      RatMat sub(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
      for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j)
          sub(static_cast<int>(i), static_cast<int>(j)) =
              projectors[s](idx[i], idx[j]);
      int r = rankOf(sub);
      if (r % sourceDims[s] != 0)
        throw InconsistentDims("projector rank is not a multiple of the source dimension");
      n[g][s] = r / sourceDims[s];
      total += n[g][s] * sourceDims[s];
    }
    long long dg = 0;
    for (int i = 0; i < poset.numComponents(); ++i)
      if (poset.group(i) == g) dg += poset.dim(i);
    if (total != dg)
      throw InconsistentDims("multiplicities do not account for the group dimension");
  }
  return n;
}

TriplePoset::TriplePoset(std::vector<TripleComponent> comps, std::vector<int> dims)
    : comps_(std::move(comps)), dims_(std::move(dims)) {
  if (comps_.empty()) throw std::invalid_argument("empty triple index");
  if (comps_.size() != dims_.size())
    throw std::invalid_argument("poset arrays of different lengths");
  DimVec total = dimAdd(dimAdd(comps_[0].v1, comps_[0].v2), comps_[0].v3);
  for (const TripleComponent& c : comps_)
    if (dimAdd(dimAdd(c.v1, c.v2), c.v3) != total)
      throw std::invalid_argument("triple components with different totals");
  for (int d : dims_)
    if (d < 0) throw std::invalid_argument("negative component dimension");
  offsets_.resize(comps_.size());
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    offsets_[i] = dimTotal_;
    dimTotal_ += dims_[i];
  }
}

bool tripleSupportAllowed(TripleKind kind, const TripleComponent& row,
                          const TripleComponent& col) {
  auto properLeq = [](const DimVec& x, const DimVec& y) {
    return dimLeq(x, y) && x != y;
  };
  switch (kind) {
    case TripleKind::split12_3:
      return properLeq(dimAdd(row.v1, row.v2), dimAdd(col.v1, col.v2));
    case TripleKind::split1_23:
      return properLeq(row.v1, col.v1);
    case TripleKind::refine12_3:
      return row.v3 == col.v3 && properLeq(row.v1, col.v1);
    case TripleKind::refine1_23:
      return row.v1 == col.v1 && properLeq(row.v2, col.v2);
  }
  return false;
}

void validateTripleClass(const TriplePoset& tp, TripleKind kind, const RatMat& m) {
  if (m.rows() != tp.dimTotal() || m.cols() != tp.dimTotal())
    throw InconsistentDims("class matrix does not match the poset dimensions");
  for (int r = 0; r < tp.numComponents(); ++r)
    for (int c = 0; c < tp.numComponents(); ++c) {
      if (r == c) {
        if (!blockIsIdentity(m, tp.offset(r), tp.offset(c), tp.dim(r)))
          throw InvalidClass("diagonal block is not the identity");
      } else if (!tripleSupportAllowed(kind, tp.comp(r), tp.comp(c))) {
        if (!blockIsZero(m, tp.offset(r), tp.dim(r), tp.offset(c), tp.dim(c)))
          throw InvalidClass("class is supported outside its allowed pattern");
      }
    }
}

bool coassociativityCheck(const TriplePoset& tp, const RatMat& c12_3,
                          const RatMat& refine12_3, const RatMat& refine1_23,
                          const RatMat& c1_23) {
  validateTripleClass(tp, TripleKind::split12_3, c12_3);
  validateTripleClass(tp, TripleKind::refine12_3, refine12_3);
  validateTripleClass(tp, TripleKind::refine1_23, refine1_23);
  validateTripleClass(tp, TripleKind::split1_23, c1_23);
  return c12_3 * refine12_3 == refine1_23 * c1_23;
}

}  // namespace quivar
