#include "quivar/rep.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace quivar {

namespace {

using Cx = std::complex<double>;

void checkShape(const CMat& m, int rows, int cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols)
    throw std::invalid_argument(std::string(what) + " has the wrong shape");
}

CMat invertOrThrow(const CMat& g, const char* what) {
  if (g.rows() != g.cols()) throw std::invalid_argument(std::string(what) + " is not square");
  if (g.rows() == 0) return g;
  Eigen::FullPivLU<CMat> lu(g);
  if (!lu.isInvertible()) throw std::invalid_argument(std::string(what) + " is singular");
  return lu.inverse();
}

/// Orthonormal basis of the column space of A, cutting at tol * sigma_max.
CMat columnSpace(const CMat& A, double tol) {
  if (A.rows() == 0 || A.cols() == 0) return CMat(A.rows(), 0);
  Eigen::JacobiSVD<CMat> svd(A, Eigen::ComputeThinU);
  double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol * smax && smax > 0) ++rank;
  return svd.matrixU().leftCols(rank);
}

/// Orthonormal basis of ker A (columns), cutting at tol * sigma_max.
CMat kernelBasis(const CMat& A, double tol) {
  if (A.cols() == 0) return CMat(0, 0);
  if (A.rows() == 0) return CMat::Identity(A.cols(), A.cols());
  Eigen::JacobiSVD<CMat> svd(A, Eigen::ComputeFullV);
  double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (smax > 0 && svd.singularValues()(i) > tol * smax) ++rank;
  return svd.matrixV().rightCols(A.cols() - rank);
}

}  // namespace

Rep::Rep(Quiver q, DimVec v_, DimVec w_, std::vector<CMat> B_, std::vector<CMat> a_,
         std::vector<CMat> b_)
    : quiver(std::move(q)), v(std::move(v_)), w(std::move(w_)), B(std::move(B_)),
      a(std::move(a_)), b(std::move(b_)) {
  const int n = quiver.numVertices();
  if (static_cast<int>(v.size()) != n || static_cast<int>(w.size()) != n)
    throw std::invalid_argument("dimension vector length != number of vertices");
  for (int x : v)
    if (x < 0) throw std::invalid_argument("negative entry in v");
  for (int x : w)
    if (x < 0) throw std::invalid_argument("negative entry in w");
  if (static_cast<int>(B.size()) != quiver.numArrows())
    throw std::invalid_argument("wrong number of arrow matrices");
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
    throw std::invalid_argument("wrong number of framing matrices");
  for (int h = 0; h < quiver.numArrows(); ++h)
    checkShape(B[h], v[quiver.head(h)], v[quiver.tail(h)], "arrow matrix");
  for (int i = 0; i < n; ++i) {
    checkShape(a[i], v[i], w[i], "framing matrix a");
    checkShape(b[i], w[i], v[i], "framing matrix b");
  }
}

Rep Rep::zero(Quiver q, DimVec v, DimVec w) {
  const int n = q.numVertices();
  std::vector<CMat> B, a, b;
  for (int h = 0; h < q.numArrows(); ++h)
    B.push_back(CMat::Zero(v.at(q.head(h)), v.at(q.tail(h))));
  for (int i = 0; i < n; ++i) {
    a.push_back(CMat::Zero(v.at(i), w.at(i)));
    b.push_back(CMat::Zero(w.at(i), v.at(i)));
  }
  return Rep(std::move(q), std::move(v), std::move(w), std::move(B), std::move(a),
             std::move(b));
}

FramingSplit makeSplit(const DimVec& w, const DimVec& w1) {
  if (w.size() != w1.size())
    throw std::invalid_argument("framing split has wrong length");
  DimVec w2(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w1[i] < 0 || w1[i] > w[i])
      throw std::invalid_argument("framing split exceeds w");
    w2[i] = w[i] - w1[i];
  }
  return {w1, w2};
}

std::vector<CMat> momentMap(const Rep& r) {
  const int n = r.quiver.numVertices();
  std::vector<CMat> mu;
  mu.reserve(n);
  for (int i = 0; i < n; ++i) mu.push_back(CMat::Zero(r.v[i], r.v[i]));
  for (int h = 0; h < r.quiver.numArrows(); ++h) {
    int i = r.quiver.head(h);
    mu[i] += static_cast<double>(r.quiver.eps(h)) * r.B[h] * r.B[r.quiver.reverse(h)];
  }
  for (int i = 0; i < n; ++i) mu[i] += r.a[i] * r.b[i];
  return mu;
}

double momentResidual(const Rep& r) {
  double s = 0;
  for (const CMat& m : momentMap(r)) s += m.squaredNorm();
  return std::sqrt(s);
}

Rep gaugeAct(const std::vector<CMat>& g, const Rep& r) {
  const int n = r.quiver.numVertices();
  if (static_cast<int>(g.size()) != n)
    throw std::invalid_argument("wrong number of gauge matrices");
  std::vector<CMat> ginv(n);
  for (int i = 0; i < n; ++i) {
    checkShape(g[i], r.v[i], r.v[i], "gauge matrix");
    ginv[i] = invertOrThrow(g[i], "gauge matrix");
  }
  Rep out = r;
  for (int h = 0; h < r.quiver.numArrows(); ++h)
    out.B[h] = g[r.quiver.head(h)] * r.B[h] * ginv[r.quiver.tail(h)];
  for (int i = 0; i < n; ++i) {
    out.a[i] = g[i] * r.a[i];
    out.b[i] = r.b[i] * ginv[i];
  }
  return out;
}

Rep torusAct(std::complex<double> t1, std::complex<double> t2, const Rep& r) {
  if (t1 == std::complex<double>(0.0, 0.0) || t2 == std::complex<double>(0.0, 0.0))
    throw std::invalid_argument("torus parameters must be nonzero");
  Rep out = r;
  const int e = r.quiver.numEdges();
  for (int h = 0; h < r.quiver.numArrows(); ++h)
    out.B[h] = (h < e ? t1 : t2) * r.B[h];
  for (int i = 0; i < r.quiver.numVertices(); ++i) out.b[i] = (t1 * t2) * r.b[i];
  return out;
}

Rep framingAct(const std::vector<CMat>& gw, const Rep& r) {
  const int n = r.quiver.numVertices();
  if (static_cast<int>(gw.size()) != n)
    throw std::invalid_argument("wrong number of framing gauge matrices");
  Rep out = r;
  for (int i = 0; i < n; ++i) {
    checkShape(gw[i], r.w[i], r.w[i], "framing gauge matrix");
    CMat inv = invertOrThrow(gw[i], "framing gauge matrix");
    out.a[i] = r.a[i] * inv;
    out.b[i] = gw[i] * r.b[i];
  }
  return out;
}

Rep lambdaAct(std::complex<double> t, const FramingSplit& s, const Rep& r) {
  if (t == std::complex<double>(0.0, 0.0))
    throw std::invalid_argument("framing scaling parameter must be nonzero");
  const int n = r.quiver.numVertices();
  if (static_cast<int>(s.w1.size()) != n || static_cast<int>(s.w2.size()) != n)
    throw std::invalid_argument("framing split has wrong length");
  Rep out = r;
  for (int i = 0; i < n; ++i) {
    if (s.w1[i] < 0 || s.w2[i] < 0 || s.w1[i] + s.w2[i] != r.w[i])
      throw std::invalid_argument("framing split does not match w");
    CMat d = CMat::Identity(r.w[i], r.w[i]);
    for (int k = s.w1[i]; k < r.w[i]; ++k) d(k, k) = t;
    CMat dinv = CMat::Identity(r.w[i], r.w[i]);
    for (int k = s.w1[i]; k < r.w[i]; ++k) dinv(k, k) = 1.0 / t;
    out.a[i] = r.a[i] * dinv;
    out.b[i] = d * r.b[i];
  }
  return out;
}

bool isStable(const Rep& r, double tol) {
  const int n = r.quiver.numVertices();
  // K_i starts as ker b_i and shrinks until it is the largest B-invariant
  // graded subspace inside ker b; stability means it shrinks to zero.
  std::vector<CMat> K(n);
  for (int i = 0; i < n; ++i) K[i] = kernelBasis(r.b[i], tol);
  for (;;) {
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      if (K[i].cols() == 0) continue;
      std::vector<CMat> rows;
      long totalRows = 0;
      for (int h : r.quiver.arrowsOutOf(i)) {
        int j = r.quiver.head(h);
        // project B_h K_i away from K_j; a nonzero remainder leaves K_j
        CMat img = r.B[h] * K[i];
        CMat proj = img - K[j] * (K[j].adjoint() * img);
        rows.push_back(proj);
        totalRows += proj.rows();
      }
      if (rows.empty()) continue;
      CMat stacked(totalRows, K[i].cols());
      long at = 0;
      for (const CMat& m : rows) {
        stacked.middleRows(at, m.rows()) = m;
        at += m.rows();
      }
      CMat z = kernelBasis(stacked, tol);
      if (z.cols() < K[i].cols()) {
        K[i] = columnSpace(K[i] * z, tol);
        changed = true;
      }
    }
    if (!changed) break;
  }
  for (int i = 0; i < n; ++i)
    if (K[i].cols() > 0) return false;
  return true;
}

namespace {

struct Layout {
  // Offsets of each matrix block inside the flat complex unknown vector.
  std::vector<long> arrowOff, aOff, bOff;
  long numUnknowns = 0;
  std::vector<long> muOff;
  long numEquations = 0;
};

Layout makeLayout(const Rep& r) {
  Layout L;
  long at = 0;
  for (int h = 0; h < r.quiver.numArrows(); ++h) {
    L.arrowOff.push_back(at);
    at += static_cast<long>(r.B[h].rows()) * r.B[h].cols();
  }
  for (int i = 0; i < r.quiver.numVertices(); ++i) {
    L.aOff.push_back(at);
    at += static_cast<long>(r.a[i].rows()) * r.a[i].cols();
  }
  for (int i = 0; i < r.quiver.numVertices(); ++i) {
    L.bOff.push_back(at);
    at += static_cast<long>(r.b[i].rows()) * r.b[i].cols();
  }
  L.numUnknowns = at;
  long eq = 0;
  for (int i = 0; i < r.quiver.numVertices(); ++i) {
    L.muOff.push_back(eq);
    eq += static_cast<long>(r.v[i]) * r.v[i];
  }
  L.numEquations = eq;
  return L;
}

Eigen::VectorXcd packRep(const Rep& r, const Layout& L) {
  Eigen::VectorXcd x(L.numUnknowns);
  auto put = [&](const CMat& m, long off) {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) x(off + i * m.cols() + j) = m(i, j);
  };
  for (int h = 0; h < r.quiver.numArrows(); ++h) put(r.B[h], L.arrowOff[h]);
  for (int i = 0; i < r.quiver.numVertices(); ++i) put(r.a[i], L.aOff[i]);
  for (int i = 0; i < r.quiver.numVertices(); ++i) put(r.b[i], L.bOff[i]);
  return x;
}

void unpackRep(const Eigen::VectorXcd& x, const Layout& L, Rep& r) {
  auto get = [&](CMat& m, long off) {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m(i, j) = x(off + i * m.cols() + j);
  };
  for (int h = 0; h < r.quiver.numArrows(); ++h) get(r.B[h], L.arrowOff[h]);
  for (int i = 0; i < r.quiver.numVertices(); ++i) get(r.a[i], L.aOff[i]);
  for (int i = 0; i < r.quiver.numVertices(); ++i) get(r.b[i], L.bOff[i]);
}

Eigen::VectorXcd packMoment(const Rep& r, const Layout& L) {
  Eigen::VectorXcd f(L.numEquations);
  auto mu = momentMap(r);
  for (int i = 0; i < r.quiver.numVertices(); ++i)
    for (int p = 0; p < r.v[i]; ++p)
      for (int s = 0; s < r.v[i]; ++s)
        f(L.muOff[i] + p * r.v[i] + s) = mu[i](p, s);
  return f;
}

// Holomorphic Jacobian of the moment map in the flat coordinates.
Eigen::MatrixXcd momentJacobian(const Rep& r, const Layout& L) {
  Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(L.numEquations, L.numUnknowns);
  const Quiver& q = r.quiver;
  for (int h = 0; h < q.numArrows(); ++h) {
    // term eps(h) * B_h * B_hbar contributing to mu at head(h)
    const int i = q.head(h);
    const int hb = q.reverse(h);
    const double sgn = q.eps(h);
    const CMat& Bh = r.B[h];
    const CMat& Bhb = r.B[hb];
    const int rows = Bh.rows(), mid = Bh.cols(), colsOut = Bhb.cols();
    for (int p = 0; p < rows; ++p)
      for (int s = 0; s < colsOut; ++s) {
        long eq = L.muOff[i] + static_cast<long>(p) * r.v[i] + s;
        for (int k = 0; k < mid; ++k) {
          J(eq, L.arrowOff[h] + static_cast<long>(p) * mid + k) += sgn * Bhb(k, s);
          J(eq, L.arrowOff[hb] + static_cast<long>(k) * colsOut + s) += sgn * Bh(p, k);
        }
      }
  }
  for (int i = 0; i < q.numVertices(); ++i) {
    const CMat& ai = r.a[i];
    const CMat& bi = r.b[i];
    const int vi = r.v[i], wi = r.w[i];
    for (int p = 0; p < vi; ++p)
      for (int s = 0; s < vi; ++s) {
        long eq = L.muOff[i] + static_cast<long>(p) * vi + s;
        for (int k = 0; k < wi; ++k) {
          J(eq, L.aOff[i] + static_cast<long>(p) * wi + k) += bi(k, s);
          J(eq, L.bOff[i] + static_cast<long>(k) * vi + s) += ai(p, k);
        }
      }
  }
  return J;
}

}  // namespace

SolveReport newtonSolveMoment(const Rep& r0, double tol, int maxIter) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  if (maxIter < 0) throw std::invalid_argument("negative iteration budget");
  Layout L = makeLayout(r0);
  Rep cur = r0;
  Eigen::VectorXcd x = packRep(cur, L);
  Eigen::VectorXcd f = packMoment(cur, L);
  double res = f.norm();
  int iters = 0;
  const double damping = 1e-8;
  while (res >= tol && iters < maxIter) {
    Eigen::MatrixXcd J = momentJacobian(cur, L);
    Eigen::MatrixXcd JtJ = J.adjoint() * J;
    JtJ.diagonal().array() += damping;
    Eigen::VectorXcd step = JtJ.ldlt().solve(J.adjoint() * (-f));
    // backtracking keeps the quadratic model honest far from the zero locus
    double alpha = 1.0;
    bool accepted = false;
    for (int bt = 0; bt < 30; ++bt) {
      Eigen::VectorXcd xNew = x + alpha * step;
      unpackRep(xNew, L, cur);
      Eigen::VectorXcd fNew = packMoment(cur, L);
      if (fNew.norm() < res) {
        x = xNew;
        f = fNew;
        res = fNew.norm();
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    ++iters;
    if (!accepted) {
      unpackRep(x, L, cur);  // restore the best iterate
      break;
    }
  }
  unpackRep(x, L, cur);
  return {cur, res, iters, res < tol};
}

Rep randomRep(const Quiver& q, const DimVec& v, const DimVec& w,
              std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto fill = [&](CMat& m) {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        m(i, j) = scale * std::complex<double>(gauss(rng), gauss(rng));
  };
  Rep r = Rep::zero(q, v, w);
  for (auto& m : r.B) fill(m);
  for (auto& m : r.a) fill(m);
  for (auto& m : r.b) fill(m);
  return r;
}

Rep directSum(const Rep& r1, const Rep& r2) {
  if (!(r1.quiver == r2.quiver))
    throw std::invalid_argument("direct sum needs the same graph on both sides");
  const Quiver& q = r1.quiver;
  const int n = q.numVertices();
  DimVec v = dimAdd(r1.v, r2.v), w = dimAdd(r1.w, r2.w);
  Rep out = Rep::zero(q, v, w);
  for (int h = 0; h < q.numArrows(); ++h) {
    out.B[h].topLeftCorner(r1.B[h].rows(), r1.B[h].cols()) = r1.B[h];
    out.B[h].bottomRightCorner(r2.B[h].rows(), r2.B[h].cols()) = r2.B[h];
  }
  for (int i = 0; i < n; ++i) {
    out.a[i].topLeftCorner(r1.v[i], r1.w[i]) = r1.a[i];
    out.a[i].bottomRightCorner(r2.v[i], r2.w[i]) = r2.a[i];
    out.b[i].topLeftCorner(r1.w[i], r1.v[i]) = r1.b[i];
    out.b[i].bottomRightCorner(r2.w[i], r2.v[i]) = r2.b[i];
  }
  return out;
}

std::vector<CMat> randomGauge(const Quiver& q, const DimVec& v, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<CMat> g;
  for (int i = 0; i < q.numVertices(); ++i) {
    CMat m(v.at(i), v.at(i));
    for (int trial = 0; trial < 64; ++trial) {
      for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
          m(r, c) = std::complex<double>(gauss(rng), gauss(rng));
      if (m.rows() == 0) break;
      Eigen::JacobiSVD<CMat> svd(m);
      const auto& s = svd.singularValues();
      if (s(s.size() - 1) > 0.05 * s(0)) break;
    }
    g.push_back(m);
  }
  return g;
}

}  // namespace quivar
