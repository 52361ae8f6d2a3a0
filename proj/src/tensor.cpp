#include "quivar/tensor.hpp"

#include <algorithm>

#include "quivar/rational.hpp"

namespace quivar {

namespace {

struct FiniteContext {
  int n = 0;
  RatMat cartan, cartanInv;
  std::vector<DimVec> posRoots;           // root coordinates
  std::vector<std::vector<long long>> posRootsFund;  // C * root

  explicit FiniteContext(const Quiver& q) {
    TypeClass t = classifyType(q);
    if (t.type != QuiverType::finite)
      throw UnsupportedType("weight computations need a finite-type graph");
    n = q.numVertices();
    cartan = RatMat(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cartan(i, j) = Rat(q.cartan()[i][j]);
    cartanInv = inverseOf(cartan);
    posRoots = allPositiveRoots(q);
    for (const DimVec& r : posRoots) posRootsFund.push_back(q.applyCartan(r));
  }

  // (x, y) = x^T C^{-1} y for fundamental-coordinate vectors.
  Rat inner(const std::vector<long long>& x, const std::vector<long long>& y) const {
    Rat out(0);
    for (int i = 0; i < n; ++i) {
      Rat acc(0);
      for (int j = 0; j < n; ++j) acc += cartanInv(i, j) * Rat(y[j]);
      out += Rat(x[i]) * acc;
    }
    return out;
  }

  std::vector<long long> toLL(const Weight& w) const {
    return std::vector<long long>(w.begin(), w.end());
  }

  // s_i in fundamental coordinates: x -> x - x_i * (i-th column of C).
  Weight reflectFund(const Weight& x, int i) const {
    Weight out = x;
    for (int r = 0; r < n; ++r)
      out[r] -= x[i] * static_cast<int>(cartan(r, i).convert_to<long long>());
    return out;
  }

  Weight lowestOfOrbit(Weight x) const {
    for (;;) {
      int i = -1;
      for (int k = 0; k < n; ++k)
        if (x[k] > 0) {
          i = k;
          break;
        }
      if (i < 0) return x;
      x = reflectFund(x, i);
    }
  }

  // Root coordinates of a root-lattice element given in fundamental
  // coordinates; throws if it is not integral.
  DimVec rootCoords(const Weight& x) const {
    DimVec out(n);
    for (int i = 0; i < n; ++i) {
      Rat acc(0);
      for (int j = 0; j < n; ++j) acc += cartanInv(i, j) * Rat(x[j]);
      if (boost::multiprecision::denominator(acc) != 1)
        throw std::invalid_argument("weight difference is not in the root lattice");
      out[i] = acc.convert_to<int>();
    }
    return out;
  }
};

void checkWeightLength(const FiniteContext& ctx, const Weight& x) {
  if (static_cast<int>(x.size()) != ctx.n)
    throw std::invalid_argument("weight length != number of vertices");
}

std::map<Weight, long long> freudenthal(const FiniteContext& ctx, const Weight& lambda) {
  if (!isDominantWeight(lambda))
    throw std::invalid_argument("highest weight must be dominant");
  const int n = ctx.n;

  Weight low = ctx.lowestOfOrbit(lambda);
  Weight span(n);
  for (int i = 0; i < n; ++i) span[i] = lambda[i] - low[i];
  DimVec kmax = ctx.rootCoords(span);

  // candidates mu = lambda - C k for k in [0, kmax], by level sum(k)
  std::vector<DimVec> levels;
  {
    DimVec k(n, 0);
    for (;;) {
      levels.push_back(k);
      int i = 0;
      while (i < n && k[i] == kmax[i]) k[i++] = 0;
      if (i == n) break;
      ++k[i];
    }
    std::stable_sort(levels.begin(), levels.end(), [](const DimVec& x, const DimVec& y) {
      return dimSum(x) < dimSum(y);
    });
  }

  auto muOf = [&](const DimVec& k) {
    Weight mu(n);
    for (int i = 0; i < n; ++i) {
      long long acc = lambda[i];
      for (int j = 0; j < n; ++j)
        acc -= ctx.cartan(i, j).convert_to<long long>() * k[j];
      mu[i] = static_cast<int>(acc);
    }
    return mu;
  };

  std::vector<long long> rho(n, 1);
  std::vector<long long> lamRho(n);
  for (int i = 0; i < n; ++i) lamRho[i] = lambda[i] + 1;
  Rat lamNorm = ctx.inner(lamRho, lamRho);

  std::map<DimVec, long long> multByK;
  std::map<Weight, long long> out;
  for (const DimVec& k : levels) {
    if (dimIsZero(k)) {
      multByK[k] = 1;
      out[lambda] = 1;
      continue;
    }
    Weight mu = muOf(k);
    Rat num(0);
    for (std::size_t r = 0; r < ctx.posRoots.size(); ++r) {
      const DimVec& kappa = ctx.posRoots[r];
      for (int j = 1;; ++j) {
        DimVec kUp(n);
        bool ok = true;
        for (int i = 0; i < n; ++i) {
          kUp[i] = k[i] - j * kappa[i];
          if (kUp[i] < 0) ok = false;
        }
        if (!ok) break;
        auto it = multByK.find(kUp);
        if (it == multByK.end() || it->second == 0) continue;
        std::vector<long long> shifted(n);
        for (int i = 0; i < n; ++i)
          shifted[i] = mu[i] + j * ctx.posRootsFund[r][i];
        num += Rat(it->second) * ctx.inner(shifted, ctx.posRootsFund[r]);
      }
    }
    std::vector<long long> muRho(n);
    for (int i = 0; i < n; ++i) muRho[i] = mu[i] + 1;
    Rat denom = lamNorm - ctx.inner(muRho, muRho);
    long long m = 0;
    if (denom != 0) {
      Rat val = 2 * num / denom;
      if (boost::multiprecision::denominator(val) != 1 || val < 0)
        throw std::logic_error("multiplicity recursion produced a non-integer");
      m = val.convert_to<long long>();
    }
    multByK[k] = m;
    if (m > 0) out[mu] = m;
  }
  return out;
}

}  // namespace

Weight weightOf(const Quiver& q, const DimVec& v, const DimVec& w) {
  FiniteContext ctx(q);
  if (static_cast<int>(v.size()) != ctx.n || static_cast<int>(w.size()) != ctx.n)
    throw std::invalid_argument("dimension vector length != number of vertices");
  auto cv = q.applyCartan(v);
  Weight out(ctx.n);
  for (int i = 0; i < ctx.n; ++i) out[i] = static_cast<int>(w[i] - cv[i]);
  return out;
}

bool isDominantWeight(const Weight& x) {
  for (int e : x)
    if (e < 0) return false;
  return true;
}

std::map<Weight, long long> weightMultiplicities(const Quiver& q, const Weight& lambda) {
  FiniteContext ctx(q);
  checkWeightLength(ctx, lambda);
  return freudenthal(ctx, lambda);
}

long long irrepDim(const Quiver& q, const Weight& lambda) {
  FiniteContext ctx(q);
  checkWeightLength(ctx, lambda);
  if (!isDominantWeight(lambda))
    throw std::invalid_argument("highest weight must be dominant");
  std::vector<long long> lamRho(ctx.n), rho(ctx.n, 1);
  for (int i = 0; i < ctx.n; ++i) lamRho[i] = lambda[i] + 1;
  Rat dim(1);
  for (const auto& alpha : ctx.posRootsFund)
    dim *= ctx.inner(lamRho, alpha) / ctx.inner(rho, alpha);
  if (boost::multiprecision::denominator(dim) != 1)
    throw std::logic_error("dimension formula produced a non-integer");
  return dim.convert_to<long long>();
}

std::map<Weight, long long> tensorDecompose(const Quiver& q, const Weight& lam,
                                            const Weight& mu) {
  FiniteContext ctx(q);
  checkWeightLength(ctx, lam);
  checkWeightLength(ctx, mu);
  if (!isDominantWeight(lam) || !isDominantWeight(mu))
    throw std::invalid_argument("tensor factors must be dominant");

  auto chLam = freudenthal(ctx, lam);
  auto chMu = freudenthal(ctx, mu);
  std::map<Weight, long long> prod;
  for (const auto& [x, mx] : chLam)
    for (const auto& [y, my] : chMu) {
      Weight s(ctx.n);
      for (int i = 0; i < ctx.n; ++i) s[i] = x[i] + y[i];
      prod[s] += mx * my;
    }
  Weight top(ctx.n);
  for (int i = 0; i < ctx.n; ++i) top[i] = lam[i] + mu[i];

  // peel highest weights: at each step the shallowest surviving weight
  // (smallest root-lattice depth below lam + mu) is a highest weight
  std::map<Weight, long long> out;
  while (!prod.empty()) {
    const Weight* best = nullptr;
    long long bestDepth = 0;
    for (const auto& [x, mx] : prod) {
      if (mx == 0) continue;
      Weight diff(ctx.n);
      for (int i = 0; i < ctx.n; ++i) diff[i] = top[i] - x[i];
      long long depth = dimSum(ctx.rootCoords(diff));
      if (!best || depth < bestDepth || (depth == bestDepth && x > *best)) {
        best = &x;
        bestDepth = depth;
      }
    }
    if (!best) break;
    Weight xi = *best;
    long long m = prod[xi];
    if (!isDominantWeight(xi) || m < 0)
      throw std::logic_error("character peeling left a non-highest-weight term");
    out[xi] += m;
    for (const auto& [y, my] : freudenthal(ctx, xi)) {
      long long& slot = prod[y];
      slot -= m * my;
      if (slot == 0) prod.erase(y);
    }
  }
  return out;
}

long long multiplicityN(const Quiver& q, const DimVec& v1, const DimVec& w1,
                        const DimVec& v2, const DimVec& w2, const DimVec& v0,
                        const DimVec& w) {
  if (w.size() != w1.size() || w.size() != w2.size())
    throw std::invalid_argument("dimension vectors of different lengths");
  if (w != dimAdd(w1, w2))
    throw std::invalid_argument("framing does not split as w1 + w2");
  Weight lam1 = weightOf(q, v1, w1);
  Weight lam2 = weightOf(q, v2, w2);
  Weight lam0 = weightOf(q, v0, w);
  if (!isDominantWeight(lam1) || !isDominantWeight(lam2))
    throw std::invalid_argument("tensor factors must be dominant");
  if (!isDominantWeight(lam0))
    throw std::invalid_argument("target weight must be dominant");
  auto dec = tensorDecompose(q, lam1, lam2);
  auto it = dec.find(lam0);
  return it == dec.end() ? 0 : it->second;
}

}  // namespace quivar
