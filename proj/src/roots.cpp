#include "quivar/roots.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "quivar/rational.hpp"

namespace quivar {

const char* quiverTypeName(QuiverType t) {
  switch (t) {
    case QuiverType::finite: return "finite";
    case QuiverType::affine: return "affine";
    case QuiverType::indefinite: return "indefinite";
  }
  return "?";
}

namespace {

RatMat cartanAsRat(const Quiver& q) {
  const int n = q.numVertices();
  RatMat c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c(i, j) = Rat(q.cartan()[i][j]);
  return c;
}

// Determinant of the leading k x k minor, exact.
Rat leadingMinor(const RatMat& c, int k) {
  RatMat m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m(i, j) = c(i, j);
  Rat det(1);
  for (int col = 0; col < k; ++col) {
    int pivot = -1;
    for (int i = col; i < k; ++i)
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Rat(0);
    if (pivot != col) {
      for (int j = 0; j < k; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (int i = col + 1; i < k; ++i) {
      if (m(i, col) == 0) continue;
      Rat f = m(i, col) / m(col, col);
      for (int j = col; j < k; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

bool boundsCheck(const Quiver& q, const DimVec& v, const char* what) {
  if (static_cast<int>(v.size()) != q.numVertices())
    throw std::invalid_argument(std::string(what) + " has wrong length");
  for (int x : v)
    if (x < 0) throw std::invalid_argument(std::string(what) + " has a negative entry");
  return true;
}

bool supportConnected(const Quiver& q, const DimVec& v) {
  const int n = q.numVertices();
  int start = -1;
  for (int i = 0; i < n; ++i)
    if (v[i] > 0) {
      start = i;
      break;
    }
  if (start < 0) return false;
  std::vector<char> seen(n, 0);
  std::queue<int> bfs;
  bfs.push(start);
  seen[start] = 1;
  while (!bfs.empty()) {
    int i = bfs.front();
    bfs.pop();
    for (int h : q.arrowsOutOf(i)) {
      int j = q.head(h);
      if (v[j] > 0 && !seen[j]) {
        seen[j] = 1;
        bfs.push(j);
      }
    }
  }
  for (int i = 0; i < n; ++i)
    if (v[i] > 0 && !seen[i]) return false;
  return true;
}

// Same as inFundamentalRegion but assumes v >= 0 was already ensured.
bool fundamentalNoThrow(const Quiver& q, const DimVec& v) {
  if (dimIsZero(v)) return false;
  if (!supportConnected(q, v)) return false;
  auto cv = q.applyCartan(v);
  for (int i = 0; i < q.numVertices(); ++i)
    if (cv[i] > 0) return false;
  return true;
}

}  // namespace

TypeClass classifyType(const Quiver& q) {
  if (!q.connected())
    throw std::invalid_argument("type classification needs a connected graph");
  const int n = q.numVertices();
  RatMat c = cartanAsRat(q);
  RatMat kernel = nullspaceOf(c);
  if (kernel.cols() == 0) {
    for (int k = 1; k <= n; ++k)
      if (leadingMinor(c, k) <= 0) return {QuiverType::indefinite, {}};
    return {QuiverType::finite, {}};
  }
  if (kernel.cols() == 1) {
    // Normalize the kernel generator to a primitive integer vector and demand
    // strict positivity; the connected corank-one positive case is affine.
    std::vector<Rat> gen(n);
    for (int i = 0; i < n; ++i) gen[i] = kernel(i, 0);
    int sign = 0;
    for (int i = 0; i < n; ++i) {
      if (gen[i] == 0) return {QuiverType::indefinite, {}};
      int s = gen[i] > 0 ? 1 : -1;
      if (sign == 0) sign = s;
      if (s != sign) return {QuiverType::indefinite, {}};
    }
    using Int = boost::multiprecision::cpp_int;
    Int lcm = 1;
    for (int i = 0; i < n; ++i)
      lcm = boost::multiprecision::lcm(lcm, Int(boost::multiprecision::denominator(gen[i])));
    std::vector<Int> ints(n);
    Int g = 0;
    for (int i = 0; i < n; ++i) {
      ints[i] = Int(boost::multiprecision::numerator(gen[i])) * (lcm / Int(boost::multiprecision::denominator(gen[i])));
      if (sign < 0) ints[i] = -ints[i];
      g = boost::multiprecision::gcd(g, ints[i]);
    }
    DimVec delta(n);
    for (int i = 0; i < n; ++i) delta[i] = (ints[i] / g).convert_to<int>();
    return {QuiverType::affine, delta};
  }
  return {QuiverType::indefinite, {}};
}

DimVec reflect(const Quiver& q, const DimVec& v, int i) {
  if (static_cast<int>(v.size()) != q.numVertices())
    throw std::invalid_argument("dimension vector has wrong length");
  if (i < 0 || i >= q.numVertices())
    throw std::invalid_argument("vertex index out of range");
  if (q.hasLoopAt(i))
    throw std::invalid_argument("no simple reflection at a vertex with a loop");
  auto cv = q.applyCartan(v);
  DimVec out = v;
  out[i] -= static_cast<int>(cv[i]);
  return out;
}

bool inFundamentalRegion(const Quiver& q, const DimVec& v) {
  boundsCheck(q, v, "dimension vector");
  if (dimIsZero(v)) throw std::invalid_argument("zero vector is not graded");
  return fundamentalNoThrow(q, v);
}

std::vector<Root> enumerateRoots(const Quiver& q, const DimVec& bound) {
  boundsCheck(q, bound, "bound");
  const int n = q.numVertices();
  long long total = dimSum(bound);
  DimVec padded(n);
  for (int i = 0; i < n; ++i)
    padded[i] = bound[i] + static_cast<int>(total);

  std::set<DimVec> seen;
  std::queue<DimVec> work;
  auto push = [&](const DimVec& v) {
    if (seen.insert(v).second) work.push(v);
  };

  // Seeds: loop-free simple roots plus all fundamental-region vectors in box.
  for (int i = 0; i < n; ++i) {
    if (q.hasLoopAt(i) || padded[i] < 1) continue;
    DimVec e(n, 0);
    e[i] = 1;
    push(e);
  }
  DimVec v(n, 0);
  for (;;) {
    int k = 0;
    while (k < n && v[k] == padded[k]) v[k++] = 0;
    if (k == n) break;
    ++v[k];
    if (!dimIsZero(v) && fundamentalNoThrow(q, v)) push(v);
  }

  // Close under simple reflections inside the padded box.
  while (!work.empty()) {
    DimVec cur = work.front();
    work.pop();
    for (int i = 0; i < n; ++i) {
      if (q.hasLoopAt(i)) continue;
      DimVec ref = reflect(q, cur, i);
      bool inBox = true;
      for (int j = 0; j < n; ++j)
        if (ref[j] < 0 || ref[j] > padded[j]) {
          inBox = false;
          break;
        }
      if (inBox && !dimIsZero(ref)) push(ref);
    }
  }

  std::vector<Root> out;
  for (const DimVec& r : seen) {
    if (!dimLeq(r, bound)) continue;
    out.push_back({r, q.bilinear(r, r) <= 0});
  }
  std::sort(out.begin(), out.end(),
            [](const Root& x, const Root& y) { return x.v < y.v; });
  return out;
}

std::vector<DimVec> simpleModuleDims(const Quiver& q, const DimVec& bound) {
  boundsCheck(q, bound, "bound");
  TypeClass t = classifyType(q);
  if (t.type == QuiverType::indefinite)
    throw UnsupportedType("simple module dimensions are only tabulated for finite and affine graphs");
  std::vector<DimVec> out;
  for (int i = 0; i < q.numVertices(); ++i) {
    if (q.hasLoopAt(i) || bound[i] < 1) continue;
    DimVec e(q.numVertices(), 0);
    e[i] = 1;
    out.push_back(e);
  }
  if (t.type == QuiverType::affine && dimLeq(t.delta, bound)) out.push_back(t.delta);
  return out;
}

std::vector<DimVec> allPositiveRoots(const Quiver& q) {
  TypeClass t = classifyType(q);
  if (t.type != QuiverType::finite)
    throw UnsupportedType("positive roots without a bound need a finite-type graph");
  const int n = q.numVertices();
  std::set<DimVec> seen;
  std::queue<DimVec> work;
  for (int i = 0; i < n; ++i) {
    DimVec e(n, 0);
    e[i] = 1;
    seen.insert(e);
    work.push(e);
  }
  while (!work.empty()) {
    DimVec cur = work.front();
    work.pop();
    for (int i = 0; i < n; ++i) {
      DimVec ref = reflect(q, cur, i);
      bool positive = false, nonneg = true;
      for (int x : ref) {
        if (x > 0) positive = true;
        if (x < 0) nonneg = false;
      }
      if (nonneg && positive && seen.insert(ref).second) work.push(ref);
    }
  }
  return std::vector<DimVec>(seen.begin(), seen.end());
}

}  // namespace quivar
