#include "quivar/strata.hpp"

#include <algorithm>

namespace quivar {

namespace {

void genPartitions(int n, int maxPart, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, maxPart); p >= 1; --p) {
    cur.push_back(p);
    genPartitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

// All x with 0 <= x <= cap componentwise, ascending lexicographically.
void genBox(const DimVec& cap, std::size_t at, DimVec& cur, std::vector<DimVec>& out) {
  if (at == cap.size()) {
    out.push_back(cur);
    return;
  }
  for (int x = 0; x <= cap[at]; ++x) {
    cur[at] = x;
    genBox(cap, at + 1, cur, out);
  }
}

std::vector<DimVec> boxAscending(const DimVec& cap) {
  std::vector<DimVec> out;
  DimVec cur(cap.size(), 0);
  genBox(cap, 0, cur, out);
  return out;
}

}  // namespace

std::vector<Partition> partitionsOf(int n) {
  if (n < 0) throw std::invalid_argument("partitions of a negative number");
  std::vector<Partition> out;
  Partition cur;
  genPartitions(n, n, cur, out);
  if (n == 0) return {Partition{}};
  return out;
}

long long partitionCount(int n) {
  if (n < 0) throw std::invalid_argument("partitions of a negative number");
  std::vector<long long> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int m = part; m <= n; ++m) p[m] += p[m - part];
  return p[n];
}

std::vector<FixedComponent> fixedComponents(const DimVec& v) {
  for (int x : v)
    if (x < 0) throw std::invalid_argument("negative entry in v");
  std::vector<FixedComponent> out;
  for (const DimVec& v1 : boxAscending(v)) out.push_back({v1, dimSub(v, v1)});
  std::reverse(out.begin(), out.end());  // descending lex by v1
  return out;
}

Cmp compareComponents(const FixedComponent& alpha, const FixedComponent& beta) {
  if (dimAdd(alpha.v1, alpha.v2) != dimAdd(beta.v1, beta.v2))
    throw std::invalid_argument("components of different totals are unrelated");
  if (alpha.v1 == beta.v1) return Cmp::eq;
  if (dimLeq(alpha.v1, beta.v1)) return Cmp::lt;
  if (dimLeq(beta.v1, alpha.v1)) return Cmp::gt;
  return Cmp::incomparable;
}

std::vector<FixedComponent> linearExtension(std::vector<FixedComponent> comps) {
  for (std::size_t i = 1; i < comps.size(); ++i)
    if (dimAdd(comps[i].v1, comps[i].v2) != dimAdd(comps[0].v1, comps[0].v2))
      throw std::invalid_argument("components of different totals are unrelated");
  std::sort(comps.begin(), comps.end(),
            [](const FixedComponent& x, const FixedComponent& y) { return x.v1 < y.v1; });
  return comps;
}

long long dimQuiverVariety(const Quiver& q, const DimVec& v, const DimVec& w) {
  if (static_cast<int>(v.size()) != q.numVertices() ||
      static_cast<int>(w.size()) != q.numVertices())
    throw std::invalid_argument("dimension vector length != number of vertices");
  long long vw = 0;
  for (int i = 0; i < q.numVertices(); ++i) vw += static_cast<long long>(v[i]) * w[i];
  return 2 * vw - q.bilinear(v, v);
}

int attractingRank(const Quiver& q, const DimVec& w1, const DimVec& w2,
                   const FixedComponent& c) {
  DimVec v = dimAdd(c.v1, c.v2);
  DimVec w = dimAdd(w1, w2);
  long long codim = dimQuiverVariety(q, v, w) - dimQuiverVariety(q, c.v1, w1) -
                    dimQuiverVariety(q, c.v2, w2);
  if (codim < 0 || codim % 2 != 0)
    throw OddCodim("component codimension is negative or odd");
  return static_cast<int>(codim / 2);
}

namespace {

struct SimpleBasis {
  std::vector<DimVec> simples;  // simpleModuleDims order
  int deltaSlot = -1;           // index of delta in simples, -1 for finite type
  DimVec delta;                 // empty for finite type
  std::vector<char> loopFree;   // per vertex
};

SimpleBasis simpleBasis(const Quiver& q, const DimVec& v) {
  TypeClass t = classifyType(q);
  if (t.type == QuiverType::indefinite)
    throw UnsupportedType("stratification is only tabulated for finite and affine graphs");
  SimpleBasis out;
  out.simples = simpleModuleDims(q, v);
  out.loopFree.resize(q.numVertices());
  for (int i = 0; i < q.numVertices(); ++i) out.loopFree[i] = !q.hasLoopAt(i);
  if (t.type == QuiverType::affine) {
    out.delta = t.delta;
    if (!out.simples.empty() && out.simples.back() == t.delta && dimLeq(t.delta, v))
      out.deltaSlot = static_cast<int>(out.simples.size()) - 1;
  }
  return out;
}

// Remainder r must decompose over the loop-free coordinate simples; the
// stratum's lambda gets one single-part entry per used coordinate simple.
bool fillSimpleSlots(const SimpleBasis& sb, const Quiver& q, const DimVec& r,
                     std::vector<Partition>& lambda) {
  for (int i = 0; i < q.numVertices(); ++i)
    if (r[i] > 0 && !sb.loopFree[i]) return false;
  for (std::size_t k = 0; k < sb.simples.size(); ++k) {
    if (static_cast<int>(k) == sb.deltaSlot) continue;
    // coordinate simple: find its vertex
    int vertex = -1;
    for (int i = 0; i < q.numVertices(); ++i)
      if (sb.simples[k][i] == 1) {
        vertex = i;
        break;
      }
    if (r[vertex] > 0) lambda[k] = Partition{r[vertex]};
  }
  return true;
}

}  // namespace

std::vector<StratumIndex> strataOfM0(const Quiver& q, const DimVec& v, const DimVec& w) {
  if (static_cast<int>(v.size()) != q.numVertices() ||
      static_cast<int>(w.size()) != q.numVertices())
    throw std::invalid_argument("dimension vector length != number of vertices");
  for (int x : v)
    if (x < 0) throw std::invalid_argument("negative entry in v");
  SimpleBasis sb = simpleBasis(q, v);

  std::vector<StratumIndex> out;
  if (sb.deltaSlot < 0) {
    // no continuous simple family: every v0 <= v indexes a stratum and the
    // coordinate-simple multiplicities are the remainder (finite type keeps
    // lambda empty by convention)
    bool finiteType = sb.delta.empty();
    for (const DimVec& v0 : boxAscending(v)) {
      DimVec r = dimSub(v, v0);
      std::vector<Partition> lambda(finiteType ? 0 : sb.simples.size());
      if (finiteType) {
        bool ok = true;
        for (int i = 0; i < q.numVertices(); ++i)
          if (r[i] > 0 && !sb.loopFree[i]) ok = false;
        if (ok) out.push_back({v0, {}});
      } else {
        std::vector<Partition> slots(sb.simples.size());
        if (fillSimpleSlots(sb, q, r, slots)) out.push_back({v0, slots});
      }
    }
    return out;
  }

  int maxM = 0;
  while (true) {
    DimVec scaled(sb.delta.size());
    for (std::size_t i = 0; i < sb.delta.size(); ++i)
      scaled[i] = sb.delta[i] * (maxM + 1);
    if (!dimLeq(scaled, v)) break;
    ++maxM;
  }
  for (int m = 0; m <= maxM; ++m) {
    DimVec rest = v;
    for (int i = 0; i < q.numVertices(); ++i) rest[i] -= m * sb.delta[i];
    for (const Partition& lam : partitionsOf(m)) {
      for (const DimVec& v0 : boxAscending(rest)) {
        DimVec r = dimSub(rest, v0);
        std::vector<Partition> slots(sb.simples.size());
        if (!fillSimpleSlots(sb, q, r, slots)) continue;
        if (!lam.empty() || m == 0) slots[sb.deltaSlot] = lam;
        out.push_back({v0, slots});
      }
    }
  }
  return out;
}

std::vector<FixedStratumIndex> strataOfFixedLocus(const Quiver& q, const DimVec& v,
                                                  const DimVec& w1, const DimVec& w2) {
  if (static_cast<int>(w1.size()) != q.numVertices() ||
      static_cast<int>(w2.size()) != q.numVertices())
    throw std::invalid_argument("dimension vector length != number of vertices");
  std::vector<FixedStratumIndex> out;
  for (const StratumIndex& s : strataOfM0(q, v, dimAdd(w1, w2))) {
    // the free part splits across the two factors; the simple summands are
    // shared, so each split of v0 yields one fixed-locus stratum
    std::vector<DimVec> splits;
    for (const FixedComponent& c : fixedComponents(s.v0)) splits.push_back(c.v1);
    for (const DimVec& a : splits)
      out.push_back({a, dimSub(s.v0, a), s.lambda});
  }
  return out;
}

long long sigmaFiberCount(const FixedStratumIndex& s) {
  long long count = 1;
  for (const Partition& lam : s.lambda)
    for (std::size_t k = 0; k < lam.size(); ++k) count *= 2;
  return count;
}

}  // namespace quivar
