#include "quivar/invariants.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <functional>

namespace quivar {

namespace {

long long defaultCap(const DimVec& v) {
  long long s = dimSum(v);
  return s * s;
}

// Orthonormal basis of the numerical column space. The rank cutoff is tol
// times the larger of `anchor` and the top singular value, so callers can pin
// an external scale and keep pure-roundoff columns from counting as rank.
CMat columnSpace(const CMat& A, double tol, double anchor = 0.0) {
  if (A.rows() == 0 || A.cols() == 0) return CMat(A.rows(), 0);
  Eigen::JacobiSVD<CMat> svd(A, Eigen::ComputeThinU);
  double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  double cut = tol * std::max(anchor, smax);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (smax > 0 && svd.singularValues()(i) > cut) ++rank;
  return svd.matrixU().leftCols(rank);
}

}  // namespace

InvariantRecord invariantRecord(const Rep& r, int cap) {
  long long effCap = cap < 0 ? defaultCap(r.v) : cap;
  InvariantRecord rec;
  rec.cap = static_cast<int>(effCap);
  rec.w = r.w;
  const Quiver& q = r.quiver;
  const int n = q.numVertices();
  for (int i = 0; i < n; ++i) rec.hub0.push_back(r.b[i] * r.a[i]);

  // Depth-first walk over composable words from each start vertex, carrying
  // both the bare product (for traces) and product * a_start (for hubs).
  Word word;
  std::function<void(int, int, const CMat&, const CMat&)> walk =
      [&](int start, int cur, const CMat& prod, const CMat& prodA) {
        if (static_cast<long long>(word.size()) >= 1) {
          rec.hubs.emplace(word, r.b[cur] * prodA);
          if (cur == start) rec.traces.emplace(word, prod.trace());
        }
        if (static_cast<long long>(word.size()) >= effCap) return;
        for (int h : q.arrowsOutOf(cur)) {
          word.push_back(h);
          walk(start, q.head(h), r.B[h] * prod, r.B[h] * prodA);
          word.pop_back();
        }
      };
  for (int s = 0; s < n; ++s)
    walk(s, s, CMat::Identity(r.v[s], r.v[s]), r.a[s]);
  return rec;
}

bool recordsEqual(const InvariantRecord& x, const InvariantRecord& y, double tol) {
  if (tol < 0) throw std::invalid_argument("negative tolerance");
  if (x.cap != y.cap) throw IncompatibleRecords("records with different caps");
  if (x.w != y.w) throw IncompatibleRecords("records over different framings");
  if (x.hub0.size() != y.hub0.size() || x.traces.size() != y.traces.size() ||
      x.hubs.size() != y.hubs.size())
    throw IncompatibleRecords("records with different shapes");
  {
    auto ix = x.traces.begin();
    auto iy = y.traces.begin();
    for (; ix != x.traces.end(); ++ix, ++iy) {
      if (ix->first != iy->first) throw IncompatibleRecords("records with different words");
      if (std::abs(ix->second - iy->second) > tol) return false;
    }
  }
  for (std::size_t i = 0; i < x.hub0.size(); ++i) {
    if (x.hub0[i].rows() != y.hub0[i].rows() || x.hub0[i].cols() != y.hub0[i].cols())
      throw IncompatibleRecords("records with different shapes");
    if (x.hub0[i].size() == 0) continue;
    if ((x.hub0[i] - y.hub0[i]).cwiseAbs().maxCoeff() > tol) return false;
  }
  {
    auto ix = x.hubs.begin();
    auto iy = y.hubs.begin();
    for (; ix != x.hubs.end(); ++ix, ++iy) {
      if (ix->first != iy->first) throw IncompatibleRecords("records with different words");
      if (ix->second.size() == 0) continue;
      if ((ix->second - iy->second).cwiseAbs().maxCoeff() > tol) return false;
    }
  }
  return true;
}

namespace {

// Numeric closure: orthonormal bases S_i of the smallest B-invariant graded
// subspace containing the selected framing image columns.
std::vector<CMat> saturate(const Rep& r, const std::vector<CMat>& seed, double tol) {
  const Quiver& q = r.quiver;
  const int n = q.numVertices();
  std::vector<CMat> S(n);
  for (int i = 0; i < n; ++i) S[i] = columnSpace(seed[i], tol);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int h = 0; h < q.numArrows(); ++h) {
      int i = q.tail(h), j = q.head(h);
      if (S[i].cols() == 0 || S[j].cols() >= S[j].rows()) continue;
      CMat img = r.B[h] * S[i];
      CMat rem = img - S[j] * (S[j].adjoint() * img);
      // Anchor the cutoff at the image scale: once the span is closed the
      // remainder is pure roundoff and must not count as new directions.
      CMat extra = columnSpace(rem, tol, std::max(1.0, img.norm()));
      if (extra.cols() > 0) {
        CMat grown(S[j].rows(), S[j].cols() + extra.cols());
        grown << S[j], extra;
        S[j] = grown;
        changed = true;
      }
    }
  }
  return S;
}

double repScale(const Rep& r) {
  double s = 1.0;
  for (const CMat& m : r.B) s = std::max(s, m.size() ? m.cwiseAbs().maxCoeff() : 0.0);
  for (const CMat& m : r.a) s = std::max(s, m.size() ? m.cwiseAbs().maxCoeff() : 0.0);
  for (const CMat& m : r.b) s = std::max(s, m.size() ? m.cwiseAbs().maxCoeff() : 0.0);
  return s;
}

bool rowsVanish(const CMat& m, int rowBegin, int rowEnd, double thresh) {
  if (rowEnd <= rowBegin || m.cols() == 0) return true;
  return m.middleRows(rowBegin, rowEnd - rowBegin).cwiseAbs().maxCoeff() <= thresh;
}

}  // namespace

Membership membership(const Rep& r, const FramingSplit& s, double tol) {
  const Quiver& q = r.quiver;
  const int n = q.numVertices();
  for (int i = 0; i < n; ++i)
    if (s.w1.at(i) < 0 || s.w2.at(i) < 0 || s.w1[i] + s.w2[i] != r.w[i])
      throw std::invalid_argument("framing split does not match w");

  std::vector<CMat> seed2(n), seedAll(n), seed1(n);
  for (int i = 0; i < n; ++i) {
    seed2[i] = r.a[i].rightCols(s.w2[i]);
    seedAll[i] = r.a[i];
    seed1[i] = r.a[i].leftCols(s.w1[i]);
  }
  auto S2 = saturate(r, seed2, tol);
  auto SAll = saturate(r, seedAll, tol);
  auto S1 = saturate(r, seed1, tol);

  const double thresh = tol * repScale(r) * std::max<double>(1, dimSum(r.v));
  Membership out;
  out.inT0 = true;
  out.inT0Tilde = true;
  out.inT0Minus = true;
  for (int i = 0; i < n; ++i) {
    CMat b2 = r.b[i] * S2[i];
    CMat ball = r.b[i] * SAll[i];
    CMat b1 = r.b[i] * S1[i];
    // limit exists at t -> 0 iff b maps the saturation of a(W^2) into W^2
    if (!rowsVanish(b2, 0, s.w1[i], thresh)) out.inT0 = false;
    // refined locus: that image is zero and all of b's image sits in W^2
    if (!rowsVanish(b2, 0, r.w[i], thresh) || !rowsVanish(ball, 0, s.w1[i], thresh))
      out.inT0Tilde = false;
    // limit exists at t -> infinity iff the W^1 side stays in W^1
    if (!rowsVanish(b1, s.w1[i], r.w[i], thresh)) out.inT0Minus = false;
  }
  return out;
}

ExactRep exactify(const Rep& r) {
  auto conv = [](const CMat& m) {
    RatCMat out(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        out(i, j) = RatC(ratFromDouble(m(i, j).real()), ratFromDouble(m(i, j).imag()));
    return out;
  };
  ExactRep out{r.quiver, r.v, r.w, {}, {}, {}};
  for (const CMat& m : r.B) out.B.push_back(conv(m));
  for (const CMat& m : r.a) out.a.push_back(conv(m));
  for (const CMat& m : r.b) out.b.push_back(conv(m));
  return out;
}

namespace {

// Column-echelon span tracker over the Gaussian rationals.
struct ExactSpan {
  int dim = 0;
  std::vector<std::vector<RatC>> basis;  // reduced columns
  std::vector<int> pivot;                // pivot row of each basis column

  explicit ExactSpan(int d) : dim(d) {}

  // Reduce col against the basis; insert the remainder if nonzero.
  // Returns true when the span grew.
  bool add(std::vector<RatC> col) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const RatC& c = col[pivot[k]];
      if (c.isZero()) continue;
      RatC f = c;  // basis columns are normalized to pivot entry 1
      for (int i = 0; i < dim; ++i) col[i] = col[i] - f * basis[k][i];
    }
    int p = -1;
    for (int i = 0; i < dim; ++i)
      if (!col[i].isZero()) {
        p = i;
        break;
      }
    if (p < 0) return false;
    RatC inv = RatC(Rat(1)) / col[p];
    for (int i = 0; i < dim; ++i) col[i] = inv * col[i];
    basis.push_back(std::move(col));
    pivot.push_back(p);
    return true;
  }

  int rank() const { return static_cast<int>(basis.size()); }
};

std::vector<RatC> matCol(const RatCMat& m, int j) {
  std::vector<RatC> out(m.rows());
  for (int i = 0; i < m.rows(); ++i) out[i] = m(i, j);
  return out;
}

std::vector<RatC> applyMat(const RatCMat& m, const std::vector<RatC>& x) {
  std::vector<RatC> out(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    RatC acc;
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).isZero() && !x[j].isZero()) acc = acc + m(i, j) * x[j];
    out[i] = acc;
  }
  return out;
}

std::vector<ExactSpan> saturateExact(const ExactRep& r,
                                     const std::vector<std::vector<std::vector<RatC>>>& seeds) {
  const Quiver& q = r.quiver;
  const int n = q.numVertices();
  std::vector<ExactSpan> S;
  S.reserve(n);
  for (int i = 0; i < n; ++i) S.emplace_back(r.v[i]);
  for (int i = 0; i < n; ++i)
    for (const auto& col : seeds[i]) S[i].add(col);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int h = 0; h < q.numArrows(); ++h) {
      int i = q.tail(h), j = q.head(h);
      // basis may grow while we iterate; take a snapshot of the size
      std::size_t count = S[i].basis.size();
      for (std::size_t k = 0; k < count; ++k)
        if (S[j].add(applyMat(r.B[h], S[i].basis[k]))) changed = true;
    }
  }
  return S;
}

bool rowsVanishExact(const RatCMat& b, const ExactSpan& S, int rowBegin, int rowEnd) {
  for (const auto& col : S.basis) {
    auto img = applyMat(b, col);
    for (int i = rowBegin; i < rowEnd; ++i)
      if (!img[i].isZero()) return false;
  }
  return true;
}

}  // namespace

Membership membershipExact(const ExactRep& r, const FramingSplit& s) {
  const Quiver& q = r.quiver;
  const int n = q.numVertices();
  for (int i = 0; i < n; ++i)
    if (s.w1.at(i) < 0 || s.w2.at(i) < 0 || s.w1[i] + s.w2[i] != r.w[i])
      throw std::invalid_argument("framing split does not match w");

  std::vector<std::vector<std::vector<RatC>>> seed2(n), seedAll(n), seed1(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < r.w[i]; ++j) {
      auto col = matCol(r.a[i], j);
      seedAll[i].push_back(col);
      if (j < s.w1[i])
        seed1[i].push_back(col);
      else
        seed2[i].push_back(col);
    }
  }
  auto S2 = saturateExact(r, seed2);
  auto SAll = saturateExact(r, seedAll);
  auto S1 = saturateExact(r, seed1);

  Membership out;
  out.inT0 = true;
  out.inT0Tilde = true;
  out.inT0Minus = true;
  for (int i = 0; i < n; ++i) {
    if (!rowsVanishExact(r.b[i], S2[i], 0, s.w1[i])) out.inT0 = false;
    if (!rowsVanishExact(r.b[i], S2[i], 0, r.w[i]) ||
        !rowsVanishExact(r.b[i], SAll[i], 0, s.w1[i]))
      out.inT0Tilde = false;
    if (!rowsVanishExact(r.b[i], S1[i], s.w1[i], r.w[i])) out.inT0Minus = false;
  }
  return out;
}

InvariantRecord limitInvariants(const Rep& r, const FramingSplit& s, int cap, double tol) {
  Membership m = membership(r, s, tol);
  if (!m.inT0)
    throw NotInAttractingSet("representation has no limit under the framing scaling");
  InvariantRecord rec = invariantRecord(r, cap);
  auto blockDiag = [&](CMat& hub, int endVertex, int startVertex) {
    int w1e = s.w1[endVertex];
    int w1s = s.w1[startVertex];
    // rows index W_end, cols index W_start; kill the mixed blocks
    if (w1e > 0 && hub.cols() > w1s)
      hub.topRightCorner(w1e, hub.cols() - w1s).setZero();
    if (hub.rows() > w1e && w1s > 0)
      hub.bottomLeftCorner(hub.rows() - w1e, w1s).setZero();
  };
  for (int i = 0; i < r.quiver.numVertices(); ++i) blockDiag(rec.hub0[i], i, i);
  for (auto& [word, hub] : rec.hubs) {
    int startVertex = r.quiver.tail(word.front());
    int endVertex = r.quiver.head(word.back());
    blockDiag(hub, endVertex, startVertex);
  }
  return rec;
}

}  // namespace quivar
