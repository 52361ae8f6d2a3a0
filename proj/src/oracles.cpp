#include "quivar/oracles.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "quivar/strata.hpp"

namespace quivar::oracles {

namespace {

std::vector<Root> finishRootList(std::vector<DimVec> reals, std::vector<DimVec> imags,
                                 const DimVec& bound) {
  std::vector<Root> out;
  for (DimVec& v : reals)
    if (dimLeq(v, bound)) out.push_back({std::move(v), false});
  for (DimVec& v : imags)
    if (dimLeq(v, bound)) out.push_back({std::move(v), true});
  std::sort(out.begin(), out.end(),
            [](const Root& x, const Root& y) { return x.v < y.v; });
  return out;
}

}  // namespace

std::vector<Root> rootsLineGraph(int n, const DimVec& bound) {
  std::vector<DimVec> reals;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      DimVec v(n, 0);
      for (int k = i; k <= j; ++k) v[k] = 1;
      reals.push_back(v);
    }
  return finishRootList(std::move(reals), {}, bound);
}

std::vector<Root> rootsFourPronged(const DimVec& bound) {
  // vertex 0 is the center, 1..3 the prongs
  std::vector<DimVec> reals;
  for (int i = 0; i < 4; ++i) {
    DimVec v(4, 0);
    v[i] = 1;
    reals.push_back(v);
  }
  for (int l = 1; l <= 3; ++l) {
    DimVec v(4, 0);
    v[0] = 1;
    v[l] = 1;
    reals.push_back(v);
  }
  for (int l = 1; l <= 3; ++l)
    for (int m = l + 1; m <= 3; ++m) {
      DimVec v(4, 0);
      v[0] = 1;
      v[l] = 1;
      v[m] = 1;
      reals.push_back(v);
    }
  reals.push_back({1, 1, 1, 1});
  reals.push_back({2, 1, 1, 1});
  return finishRootList(std::move(reals), {}, bound);
}

std::vector<Root> rootsDoubledEdge(const DimVec& bound) {
  int cap = std::max(bound.at(0), bound.at(1)) + 1;
  std::vector<DimVec> reals, imags;
  for (int k = 0; k <= cap; ++k) {
    reals.push_back({k + 1, k});
    reals.push_back({k, k + 1});
    if (k >= 1) imags.push_back({k, k});
  }
  return finishRootList(std::move(reals), std::move(imags), bound);
}

std::vector<Root> rootsOneLoop(const DimVec& bound) {
  std::vector<DimVec> imags;
  for (int k = 1; k <= bound.at(0); ++k) imags.push_back({k});
  return finishRootList({}, std::move(imags), bound);
}

namespace {

double repScaleLocal(const Rep& r) {
  double s = 1.0;
  for (const CMat& m : r.B) s = std::max(s, m.size() ? m.cwiseAbs().maxCoeff() : 0.0);
  for (const CMat& m : r.a) s = std::max(s, m.size() ? m.cwiseAbs().maxCoeff() : 0.0);
  for (const CMat& m : r.b) s = std::max(s, m.size() ? m.cwiseAbs().maxCoeff() : 0.0);
  return s;
}

bool blockSmall(const CMat& m, int r0, int rn, int c0, int cn, double thresh) {
  for (int i = 0; i < rn; ++i)
    for (int j = 0; j < cn; ++j)
      if (std::abs(m(r0 + i, c0 + j)) > thresh) return false;
  return true;
}

}  // namespace

Membership membershipByPaths(const Rep& r, const FramingSplit& s, int cap, double tol) {
  const Quiver& q = r.quiver;
  long long effCap = cap < 0 ? dimSum(r.v) * dimSum(r.v) : cap;
  const double thresh = tol * repScaleLocal(r) * std::max<double>(1, dimSum(r.v));

  Membership out;
  out.inT0 = out.inT0Tilde = out.inT0Minus = true;
  // hub = b_end * B_word * a_start; walk every composable word and test the
  // three block conditions directly on it
  std::function<void(int, int, long long, const CMat&)> walk =
      [&](int start, int cur, long long len, const CMat& Pa) {
        CMat hub = r.b[cur] * Pa;  // rows: W_cur split (w1,w2); cols: W_start
        int rw1 = s.w1[cur], rw = r.w[cur];
        int cw1 = s.w1[start], cw = r.w[start];
        if (!blockSmall(hub, 0, rw1, cw1, cw - cw1, thresh)) out.inT0 = false;
        if (!blockSmall(hub, 0, rw, cw1, cw - cw1, thresh) ||
            !blockSmall(hub, 0, rw1, 0, cw, thresh))
          out.inT0Tilde = false;
        if (!blockSmall(hub, rw1, rw - rw1, 0, cw1, thresh)) out.inT0Minus = false;
        if (len >= effCap) return;
        for (int h : q.arrowsOutOf(cur)) walk(start, q.head(h), len + 1, r.B[h] * Pa);
      };
  for (int v0 = 0; v0 < q.numVertices(); ++v0) walk(v0, v0, 0, r.a[v0]);
  return out;
}

Membership membershipByPathsExact(const ExactRep& r, const FramingSplit& s, int cap) {
  const Quiver& q = r.quiver;
  long long effCap = cap < 0 ? dimSum(r.v) * dimSum(r.v) : cap;

  Membership out;
  out.inT0 = out.inT0Tilde = out.inT0Minus = true;
  auto blockZero = [](const RatCMat& m, int r0, int rn, int c0, int cn) {
    for (int i = 0; i < rn; ++i)
      for (int j = 0; j < cn; ++j)
        if (!m(r0 + i, c0 + j).isZero()) return false;
    return true;
  };
  std::function<void(int, int, long long, const RatCMat&)> walk =
      [&](int start, int cur, long long len, const RatCMat& Pa) {
        RatCMat hub = r.b[cur] * Pa;
        int rw1 = s.w1[cur], rw = r.w[cur];
        int cw1 = s.w1[start], cw = r.w[start];
        if (!blockZero(hub, 0, rw1, cw1, cw - cw1)) out.inT0 = false;
        if (!blockZero(hub, 0, rw, cw1, cw - cw1) || !blockZero(hub, 0, rw1, 0, cw))
          out.inT0Tilde = false;
        if (!blockZero(hub, rw1, rw - rw1, 0, cw1)) out.inT0Minus = false;
        if (len >= effCap) return;
        for (int h : q.arrowsOutOf(cur)) walk(start, q.head(h), len + 1, r.B[h] * Pa);
      };
  for (int v0 = 0; v0 < q.numVertices(); ++v0) walk(v0, v0, 0, r.a[v0]);
  return out;
}

long long clebschGordanA1(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) return 0;
  if ((a + b - c) % 2 != 0) return 0;
  return (std::abs(a - b) <= c && c <= a + b) ? 1 : 0;
}

namespace {

// The finite reflection group in fundamental coordinates, with signs.
struct GroupCtx {
  int n;
  std::vector<std::vector<long long>> elements;  // flattened n x n matrices
  std::vector<int> dets;
  std::vector<DimVec> posRoots;  // root coordinates
  RatMat cartanInv;
  std::vector<std::vector<long long>> cartanCols;

  explicit GroupCtx(const Quiver& q) {
    TypeClass t = classifyType(q);
    if (t.type != QuiverType::finite)
      throw UnsupportedType("reflection-group sums need a finite-type graph");
    n = q.numVertices();
    RatMat cr(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cr(i, j) = Rat(q.cartan()[i][j]);
    cartanInv = inverseOf(cr);
    cartanCols.assign(n, std::vector<long long>(n));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) cartanCols[j][i] = q.cartan()[i][j];
    posRoots = allPositiveRoots(q);

    // generators: (S_j x)_r = x_r - C[r][j] x_j
    std::vector<std::vector<long long>> gens;
    for (int j = 0; j < n; ++j) {
      std::vector<long long> m(n * n, 0);
      for (int r = 0; r < n; ++r) m[r * n + r] = 1;
      for (int r = 0; r < n; ++r) m[r * n + j] -= q.cartan()[r][j];
      gens.push_back(m);
    }
    std::set<std::vector<long long>> seen;
    std::vector<long long> id(n * n, 0);
    for (int r = 0; r < n; ++r) id[r * n + r] = 1;
    std::vector<std::pair<std::vector<long long>, int>> work{{id, 1}};
    seen.insert(id);
    while (!work.empty()) {
      auto [m, d] = work.back();
      work.pop_back();
      elements.push_back(m);
      dets.push_back(d);
      for (const auto& g : gens) {
        std::vector<long long> prod(n * n, 0);
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c)
            for (int k = 0; k < n; ++k) prod[r * n + c] += g[r * n + k] * m[k * n + c];
        if (seen.insert(prod).second) work.push_back({prod, -d});
      }
    }
  }

  std::vector<long long> apply(const std::vector<long long>& m,
                               const std::vector<long long>& x) const {
    std::vector<long long> out(n, 0);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) out[r] += m[r * n + c] * x[c];
    return out;
  }

  // root coordinates of a fundamental-coordinate vector, or nullopt when the
  // vector is outside the root lattice or has a negative coefficient
  bool rootCoordsNonneg(const std::vector<long long>& x, DimVec& out) const {
    out.assign(n, 0);
    for (int i = 0; i < n; ++i) {
      Rat acc(0);
      for (int j = 0; j < n; ++j) acc += cartanInv(i, j) * Rat(x[j]);
      if (boost::multiprecision::denominator(acc) != 1 || acc < 0) return false;
      out[i] = acc.convert_to<int>();
    }
    return true;
  }
};

long long kostantCount(const GroupCtx& ctx, const DimVec& target,
                       std::map<std::pair<int, DimVec>, long long>& memo, int idx) {
  if (dimIsZero(target)) return 1;
  if (idx == static_cast<int>(ctx.posRoots.size())) return 0;
  auto key = std::make_pair(idx, target);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  long long total = 0;
  DimVec rem = target;
  for (;;) {
    total += kostantCount(ctx, rem, memo, idx + 1);
    bool ok = true;
    for (int i = 0; i < ctx.n; ++i) {
      rem[i] -= ctx.posRoots[idx][i];
      if (rem[i] < 0) ok = false;
    }
    if (!ok) break;
  }
  memo[key] = total;
  return total;
}

long long multBySum(const GroupCtx& ctx, const Weight& lambda, const Weight& mu,
                    std::map<std::pair<int, DimVec>, long long>& memo) {
  std::vector<long long> lamRho(ctx.n), muRho(ctx.n);
  for (int i = 0; i < ctx.n; ++i) {
    lamRho[i] = lambda[i] + 1;
    muRho[i] = mu[i] + 1;
  }
  long long total = 0;
  for (std::size_t e = 0; e < ctx.elements.size(); ++e) {
    auto moved = ctx.apply(ctx.elements[e], lamRho);
    std::vector<long long> diff(ctx.n);
    for (int i = 0; i < ctx.n; ++i) diff[i] = moved[i] - muRho[i];
    DimVec rc;
    if (!ctx.rootCoordsNonneg(diff, rc)) continue;
    total += ctx.dets[e] * kostantCount(ctx, rc, memo, 0);
  }
  return total;
}

Weight reflectFundLocal(const GroupCtx& ctx, const Weight& x, int i) {
  Weight out = x;
  for (int r = 0; r < ctx.n; ++r)
    out[r] -= x[i] * static_cast<int>(ctx.cartanCols[i][r]);
  return out;
}

}  // namespace

long long weightMultiplicityBySum(const Quiver& q, const Weight& lambda,
                                  const Weight& mu) {
  GroupCtx ctx(q);
  std::map<std::pair<int, DimVec>, long long> memo;
  return multBySum(ctx, lambda, mu, memo);
}

std::map<Weight, long long> tensorBySum(const Quiver& q, const Weight& lam,
                                        const Weight& mu) {
  GroupCtx ctx(q);
  std::map<std::pair<int, DimVec>, long long> memo;

  // weights of the second factor: candidates mu - C k down to the lowest
  Weight low = mu;
  for (;;) {
    int i = -1;
    for (int k = 0; k < ctx.n; ++k)
      if (low[k] > 0) {
        i = k;
        break;
      }
    if (i < 0) break;
    low = reflectFundLocal(ctx, low, i);
  }
  std::vector<long long> span(ctx.n);
  for (int i = 0; i < ctx.n; ++i) span[i] = mu[i] - low[i];
  DimVec kmax;
  if (!ctx.rootCoordsNonneg(span, kmax))
    throw std::logic_error("orbit span left the root lattice");

  std::map<Weight, long long> out;
  DimVec k(ctx.n, 0);
  for (;;) {
    Weight nu(ctx.n);
    for (int i = 0; i < ctx.n; ++i) {
      long long acc = mu[i];
      for (int j = 0; j < ctx.n; ++j) acc -= ctx.cartanCols[j][i] * k[j];
      nu[i] = static_cast<int>(acc);
    }
    long long m = multBySum(ctx, mu, nu, memo);
    if (m > 0) {
      // shift past the first factor and cancel across the shifted action
      Weight x(ctx.n);
      for (int i = 0; i < ctx.n; ++i) x[i] = lam[i] + nu[i] + 1;
      int sign = 1;
      bool singular = false;
      for (;;) {
        int neg = -1;
        bool zero = false;
        for (int i = 0; i < ctx.n; ++i) {
          if (x[i] == 0) zero = true;
          if (x[i] < 0) neg = i;
        }
        if (zero) {
          singular = true;
          break;
        }
        if (neg < 0) break;
        x = reflectFundLocal(ctx, x, neg);
        sign = -sign;
      }
      if (!singular) {
        Weight xi(ctx.n);
        for (int i = 0; i < ctx.n; ++i) xi[i] = x[i] - 1;
        out[xi] += sign * m;
        if (out[xi] == 0) out.erase(xi);
      }
    }
    int i = 0;
    while (i < ctx.n && k[i] == kmax[i]) k[i++] = 0;
    if (i == ctx.n) break;
    ++k[i];
  }
  return out;
}

long long partitionCountByPentagonal(int n) {
  if (n < 0) throw std::invalid_argument("partitions of a negative number");
  std::vector<long long> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long long total = 0;
    for (int k = 1;; ++k) {
      long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
      long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      long long term = 0;
      if (g1 <= m) term += p[m - g1];
      if (g2 <= m) term += p[m - g2];
      total += (k % 2 == 1) ? term : -term;
    }
    p[m] = total;
  }
  return p[n];
}

namespace {

struct FlatLayout {
  std::vector<long> off;
  long total = 0;
};

// One flat complex coordinate per entry of every B, a, b matrix.
FlatLayout flatten(const Rep& r) {
  FlatLayout L;
  auto add = [&](const CMat& m) {
    L.off.push_back(L.total);
    L.total += static_cast<long>(m.rows()) * m.cols();
  };
  for (const CMat& m : r.B) add(m);
  for (const CMat& m : r.a) add(m);
  for (const CMat& m : r.b) add(m);
  return L;
}

Eigen::VectorXcd flatMoment(const Rep& r) {
  long total = 0;
  for (int i = 0; i < r.quiver.numVertices(); ++i)
    total += static_cast<long>(r.v[i]) * r.v[i];
  Eigen::VectorXcd f(total);
  long at = 0;
  for (const CMat& m : momentMap(r))
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) f(at++) = m(i, j);
  return f;
}

CMat* matAt(Rep& r, std::size_t idx) {
  if (idx < r.B.size()) return &r.B[idx];
  idx -= r.B.size();
  if (idx < r.a.size()) return &r.a[idx];
  idx -= r.a.size();
  return &r.b[idx];
}

int svdRank(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0) return 0;
  int rank = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > tol * s(0)) ++rank;
  return rank;
}

}  // namespace

long long numericManifoldDim(const Rep& solved, double rankTol) {
  FlatLayout L = flatten(solved);
  long eqs = 0;
  for (int i = 0; i < solved.quiver.numVertices(); ++i)
    eqs += static_cast<long>(solved.v[i]) * solved.v[i];

  // central finite differences; entries are quadratic so the error is O(h^2)
  const double h = 1e-6;
  Eigen::MatrixXcd J(eqs, L.total);
  {
    Rep work = solved;
    long col = 0;
    std::size_t nmats = work.B.size() + work.a.size() + work.b.size();
    for (std::size_t idx = 0; idx < nmats; ++idx) {
      CMat* m = matAt(work, idx);
      for (int i = 0; i < m->rows(); ++i)
        for (int j = 0; j < m->cols(); ++j) {
          std::complex<double> save = (*m)(i, j);
          (*m)(i, j) = save + h;
          Eigen::VectorXcd fp = flatMoment(work);
          (*m)(i, j) = save - h;
          Eigen::VectorXcd fm = flatMoment(work);
          (*m)(i, j) = save;
          J.col(col++) = (fp - fm) / (2 * h);
        }
    }
  }

  // tangent map of the group action at the point
  long gdim = 0;
  for (int i = 0; i < solved.quiver.numVertices(); ++i)
    gdim += static_cast<long>(solved.v[i]) * solved.v[i];
  Eigen::MatrixXcd G(L.total, gdim);
  {
    long col = 0;
    const Quiver& q = solved.quiver;
    for (int vert = 0; vert < q.numVertices(); ++vert)
      for (int p = 0; p < solved.v[vert]; ++p)
        for (int s = 0; s < solved.v[vert]; ++s) {
          // theta = E_ps at vert: B -> theta B - B theta, a -> theta a,
          // b -> -b theta
          Eigen::VectorXcd dir = Eigen::VectorXcd::Zero(L.total);
          long at = 0;
          auto put = [&](const CMat& m) {
            for (int i = 0; i < m.rows(); ++i)
              for (int j = 0; j < m.cols(); ++j) dir(at++) = m(i, j);
          };
          for (int hh = 0; hh < q.numArrows(); ++hh) {
            CMat d = CMat::Zero(solved.B[hh].rows(), solved.B[hh].cols());
            if (q.head(hh) == vert) d.row(p) += solved.B[hh].row(s);
            if (q.tail(hh) == vert) d.col(s) -= solved.B[hh].col(p);
            put(d);
          }
          for (int i = 0; i < q.numVertices(); ++i) {
            CMat d = CMat::Zero(solved.a[i].rows(), solved.a[i].cols());
            if (i == vert) d.row(p) += solved.a[i].row(s);
            put(d);
          }
          for (int i = 0; i < q.numVertices(); ++i) {
            CMat d = CMat::Zero(solved.b[i].rows(), solved.b[i].cols());
            if (i == vert) d.col(s) -= solved.b[i].col(p);
            put(d);
          }
          G.col(col++) = dir;
        }
  }
  return static_cast<long long>(L.total) - svdRank(J, rankTol) - svdRank(G, rankTol);
}

Rep findStablePoint(const Quiver& q, const DimVec& v, const DimVec& w,
                    std::mt19937_64& rng, int maxAttempts) {
  for (int attempt = 0; attempt < maxAttempts; ++attempt) {
    Rep start = randomRep(q, v, w, rng, 1.0);
    SolveReport rep = newtonSolveMoment(start, 1e-10, 300);
    if (rep.converged && isStable(rep.rep)) return rep.rep;
  }
  throw std::runtime_error("no stable solution found from random starts");
}

Rep makeAttractingRep(const Quiver& q, const DimVec& v, const DimVec& v2,
                      const DimVec& w, const FramingSplit& s, std::mt19937_64& rng,
                      double scale) {
  const int n = q.numVertices();
  if (static_cast<int>(v2.size()) != n || !dimLeq(v2, v))
    throw std::invalid_argument("inner grading must sit inside v");
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto noise = [&]() { return scale * std::complex<double>(gauss(rng), gauss(rng)); };
  Rep r = Rep::zero(q, v, w);
  DimVec v1 = dimSub(v, v2);
  for (int h = 0; h < q.numArrows(); ++h) {
    int rows1 = v1[q.head(h)], cols1 = v1[q.tail(h)];
    for (int i = 0; i < r.B[h].rows(); ++i)
      for (int j = 0; j < r.B[h].cols(); ++j)
        if (!(i < rows1 && j >= cols1)) r.B[h](i, j) = noise();  // keep V^2 invariant
  }
  for (int i = 0; i < n; ++i) {
    for (int p = 0; p < v[i]; ++p)
      for (int c = 0; c < r.w[i]; ++c)
        if (!(p < v1[i] && c >= s.w1[i])) r.a[i](p, c) = noise();  // a(W^2) in V^2
    for (int p = 0; p < r.w[i]; ++p)
      for (int c = 0; c < v[i]; ++c)
        if (!(p < s.w1[i] && c >= v1[i])) r.b[i](p, c) = noise();  // b(V^2) in W^2
  }
  return r;
}

PosetPtr randomPoset(std::mt19937_64& rng, int maxComps, int maxDim) {
  std::uniform_int_distribution<int> compCount(1, maxComps);
  const int n = compCount(rng);
  std::vector<std::string> labels;
  std::vector<int> dims, groups;
  std::uniform_int_distribution<int> dimPick(0, maxDim);
  for (int i = 0; i < n; ++i) {
    labels.push_back("c" + std::to_string(i));
    dims.push_back(dimPick(rng));
  }
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int i = 0; i < n; ++i) {
    leq[i][i] = 1;
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < 0.45) leq[i][j] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = 1;
  std::uniform_int_distribution<int> groupPick(0, std::min(2, n - 1));
  std::vector<int> raw(n);
  for (int i = 0; i < n; ++i) raw[i] = groupPick(rng);
  std::vector<int> remap(3, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (remap[raw[i]] < 0) remap[raw[i]] = next++;
    groups.push_back(remap[raw[i]]);
  }
  return std::make_shared<const ComponentPoset>(std::move(labels), std::move(dims),
                                                std::move(groups), std::move(leq));
}

namespace {

Rat smallRat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 4);
  return Rat(num(rng), den(rng));
}

}  // namespace

CorrClass randomCorrClass(const PosetPtr& poset, std::mt19937_64& rng) {
  const ComponentPoset& p = *poset;
  RatMat m = RatMat::identity(p.dimTotal());
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int beta = 0; beta < p.numComponents(); ++beta)
    for (int alpha = 0; alpha < p.numComponents(); ++alpha) {
      if (beta == alpha || !p.leq(beta, alpha)) continue;
      for (int i = 0; i < p.dim(beta); ++i)
        for (int j = 0; j < p.dim(alpha); ++j)
          if (coin(rng) < 0.6)
            m(p.offset(beta) + i, p.offset(alpha) + j) = smallRat(rng);
    }
  return CorrClass(poset, std::move(m));
}

RatMat randomAlgebraElement(const ComponentPoset& poset, std::mt19937_64& rng) {
  RatMat m(poset.dimTotal(), poset.dimTotal());
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int beta = 0; beta < poset.numComponents(); ++beta)
    for (int alpha = 0; alpha < poset.numComponents(); ++alpha) {
      if (poset.group(beta) != poset.group(alpha)) continue;
      for (int i = 0; i < poset.dim(beta); ++i)
        for (int j = 0; j < poset.dim(alpha); ++j)
          if (coin(rng) < 0.7)
            m(poset.offset(beta) + i, poset.offset(alpha) + j) = smallRat(rng);
    }
  return m;
}

namespace {

struct Check {
  SelftestResult& res;
  void operator()(const std::string& name, bool ok) {
    ++res.checksRun;
    if (!ok) ++res.checksFailed;
    res.lines.push_back(std::string(ok ? "ok   - " : "FAIL - ") + name);
  }
};

bool sameRoots(const std::vector<Root>& a, const std::vector<Root>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

bool sameMembership(const Membership& x, const Membership& y) {
  return x.inT0 == y.inT0 && x.inT0Tilde == y.inT0Tilde && x.inT0Minus == y.inT0Minus;
}

}  // namespace

SelftestResult runSelftest(unsigned long long seed) {
  SelftestResult res;
  Check check{res};
  std::mt19937_64 rng(seed);

  {
    Quiver a2 = standardQuiver("A2");
    Quiver a3 = standardQuiver("A3");
    Quiver d4 = standardQuiver("D4");
    Quiver aff = standardQuiver("A1~");
    Quiver jordan = standardQuiver("Jordan");
    check("roots: two-vertex line vs closed form",
          sameRoots(enumerateRoots(a2, {2, 2}), rootsLineGraph(2, {2, 2})));
    check("roots: three-vertex line vs closed form",
          sameRoots(enumerateRoots(a3, {2, 2, 2}), rootsLineGraph(3, {2, 2, 2})));
    check("roots: four-pronged star vs closed form",
          sameRoots(enumerateRoots(d4, {2, 2, 2, 2}), rootsFourPronged({2, 2, 2, 2})));
    check("roots: doubled edge vs closed form",
          sameRoots(enumerateRoots(aff, {3, 3}), rootsDoubledEdge({3, 3})));
    check("roots: one-loop vertex vs closed form",
          sameRoots(enumerateRoots(jordan, {4}), rootsOneLoop({4})));
  }

  {
    std::vector<std::pair<Quiver, std::pair<DimVec, DimVec>>> cases = {
        {standardQuiver("Jordan"), {{2}, {2}}},
        {standardQuiver("A2"), {{1, 1}, {2, 1}}},
        {standardQuiver("A1~"), {{1, 1}, {2, 0}}},
    };
    bool allAgree = true;
    int tested = 0;
    for (const auto& [q, vw] : cases) {
      const auto& [v, w] = vw;
      DimVec w1(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) w1[i] = w[i] / 2;
      FramingSplit split = makeSplit(w, w1);
      DimVec vHalf(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) vHalf[i] = v[i] / 2;
      for (int rep = 0; rep < 8; ++rep) {
        Rep r = randomRep(q, v, w, rng, 0.6);
        if (!sameMembership(membership(r, split), membershipByPaths(r, split)))
          allAgree = false;
        ++tested;
        for (const DimVec& v2 : {v, vHalf}) {
          Rep t0 = makeAttractingRep(q, v, v2, w, split, rng, 0.6);
          Rep g = gaugeAct(randomGauge(q, v, rng), t0);
          if (!sameMembership(membership(g, split), membershipByPaths(g, split)))
            allAgree = false;
          if (!membership(t0, split).inT0) allAgree = false;
          ++tested;
        }
      }
    }
    check("membership: saturation vs path walk on " + std::to_string(tested) + " cases",
          allAgree);
  }

  {
    Quiver a1 = standardQuiver("A1");
    bool ok = true;
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b)
        for (int k = 0; 2 * k <= a + b; ++k) {
          long long want = clebschGordanA1(a, b, a + b - 2 * k);
          long long got = multiplicityN(a1, {0}, {a}, {0}, {b}, {k}, {a + b});
          if (want != got) ok = false;
        }
    check("tensor: two-block multiplicities vs selection rule", ok);
    Quiver a2 = standardQuiver("A2");
    ok = tensorDecompose(a2, {1, 0}, {0, 1}) == tensorBySum(a2, {1, 0}, {0, 1}) &&
         tensorDecompose(a2, {1, 1}, {1, 0}) == tensorBySum(a2, {1, 1}, {1, 0});
    check("tensor: character peeling vs group-sum formula", ok);
  }

  {
    bool ok = true;
    for (int trial = 0; trial < 10; ++trial) {
      PosetPtr p = randomPoset(rng);
      CorrClass c = randomCorrClass(p, rng);
      CorrClass inv = invertClass(c);
      RatMat eye = RatMat::identity(p->dimTotal());
      if (c.mat * inv.mat != eye || inv.mat * c.mat != eye) ok = false;
      if (deltaC(c, eye) != eye) ok = false;
    }
    check("coproduct: exact two-sided inverses on random classes", ok);
  }

  {
    bool ok = true;
    for (int n = 0; n <= 12; ++n) {
      if (partitionCount(n) != partitionCountByPentagonal(n)) ok = false;
      if (static_cast<long long>(partitionsOf(n).size()) != partitionCount(n)) ok = false;
    }
    check("partitions: direct count vs pentagonal recurrence", ok);
  }

  {
    Quiver jordan = standardQuiver("Jordan");
    Rep pt = findStablePoint(jordan, {1}, {1}, rng);
    check("dimension: numeric tangent rank at a solved point",
          numericManifoldDim(pt) == dimQuiverVariety(jordan, {1}, {1}));
  }

  return res;
}

}  // namespace quivar::oracles
