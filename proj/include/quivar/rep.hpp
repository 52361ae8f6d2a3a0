#pragma once

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "quivar/quiver.hpp"

namespace quivar {

using CMat = Eigen::MatrixXcd;

/// Linear data on the doubled quiver together with a framing:
///   B[h] : V_{tail(h)} -> V_{head(h)}   for every arrow h (all 2E of them),
///   a[i] : W_i -> V_i,   b[i] : V_i -> W_i.
/// Matrix shapes are validated at construction; zero dimensions are fine.
struct Rep {
  Quiver quiver;
  DimVec v, w;
  std::vector<CMat> B;  // indexed by arrow id
  std::vector<CMat> a, b;  // indexed by vertex

  Rep(Quiver q, DimVec v, DimVec w, std::vector<CMat> B, std::vector<CMat> a,
      std::vector<CMat> b);

  static Rep zero(Quiver q, DimVec v, DimVec w);
};

/// A decomposition W = W^1 + W^2, stored as the two dimension vectors.
/// The first w1[i] coordinates of W_i are the W^1 part.
struct FramingSplit {
  DimVec w1, w2;
};

FramingSplit makeSplit(const DimVec& w, const DimVec& w1);

/// Per-vertex components mu_i = sum_{head(h)=i} eps(h) B_h B_{hbar} + a_i b_i.
std::vector<CMat> momentMap(const Rep& r);

/// Frobenius norm of the full moment map value.
double momentResidual(const Rep& r);

/// g = (g_i) in prod GL(V_i): B_h -> g_{head} B_h g_tail^{-1}, a -> g a,
/// b -> b g^{-1}. Throws on shape mismatch or a singular g_i.
Rep gaugeAct(const std::vector<CMat>& g, const Rep& r);

/// Two-parameter scaling: t1 on the chosen orientation, t2 on the reversed
/// arrows, a fixed, b -> t1 t2 b. Scales the moment map by t1 t2. Throws on
/// t1 == 0 or t2 == 0.
Rep torusAct(std::complex<double> t1, std::complex<double> t2, const Rep& r);

/// gw = (gw_i) in prod GL(W_i): a -> a gw^{-1}, b -> gw b, B fixed.
Rep framingAct(const std::vector<CMat>& gw, const Rep& r);

/// One-parameter framing subgroup fixing W^1 and scaling W^2 by t:
/// a -> a diag(1,t^{-1}), b -> diag(1,t) b. Throws on t == 0.
Rep lambdaAct(std::complex<double> t, const FramingSplit& s, const Rep& r);

/// Numerical stability test: no nonzero B-invariant graded subspace of V is
/// contained in ker b. Rank decisions cut singular values at tol * sigma_max.
bool isStable(const Rep& r, double tol = 1e-9);

struct SolveReport {
  Rep rep;
  double residual;
  int iterations;
  bool converged;
};

/// Damped Gauss-Newton on the holomorphic system mu(x) = 0, with x running
/// over all entries of B, a, b. Deterministic given r0. Normal equations are
/// Tikhonov-damped with 1e-8 to tolerate the singular locus.
SolveReport newtonSolveMoment(const Rep& r0, double tol = 1e-10, int maxIter = 200);

/// Independent entries drawn from scale * (standard complex gaussian).
Rep randomRep(const Quiver& q, const DimVec& v, const DimVec& w,
              std::mt19937_64& rng, double scale = 1.0);

/// Block-diagonal direct sum; the framing of the result is W^1 + W^2 in that
/// order, so the canonical split of the sum is (r1.w, r2.w).
Rep directSum(const Rep& r1, const Rep& r2);

/// Random diagonal-free gauge group element (entries as in randomRep, then
/// nudged away from singularity).
std::vector<CMat> randomGauge(const Quiver& q, const DimVec& v, std::mt19937_64& rng);

}  // namespace quivar
