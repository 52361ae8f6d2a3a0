#include "quivar/quiver.hpp"

#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace quivar {

bool dimLeq(const DimVec& x, const DimVec& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("dimension vectors of different lengths");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

DimVec dimAdd(const DimVec& x, const DimVec& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("dimension vectors of different lengths");
  DimVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

DimVec dimSub(const DimVec& x, const DimVec& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("dimension vectors of different lengths");
  DimVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

long long dimSum(const DimVec& x) {
  return std::accumulate(x.begin(), x.end(), 0LL);
}

bool dimIsZero(const DimVec& x) {
  for (int xi : x)
    if (xi != 0) return false;
  return true;
}

std::string dimToString(const DimVec& x) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) os << ',';
    os << x[i];
  }
  os << ')';
  return os.str();
}

Quiver::Quiver(std::vector<std::string> vertexLabels,
               std::vector<std::pair<int, int>> orientedEdges)
    : labels_(std::move(vertexLabels)), edges_(std::move(orientedEdges)) {
  if (labels_.empty()) throw std::invalid_argument("quiver needs at least one vertex");
  const int n = numVertices();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (labels_[i] == labels_[j])
        throw std::invalid_argument("duplicate vertex label: " + labels_[i]);
  for (const auto& [s, t] : edges_)
    if (s < 0 || s >= n || t < 0 || t >= n)
      throw std::invalid_argument("edge endpoint out of range");

  cartan_.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
  for (const auto& [s, t] : edges_) {
    cartan_[s][t] -= 1;
    cartan_[t][s] -= 1;  // a loop hits the diagonal twice
  }

  into_.assign(n, {});
  outof_.assign(n, {});
  const int m = numArrows();
  for (int h = 0; h < m; ++h) {
    into_[head(h)].push_back(h);
    outof_[tail(h)].push_back(h);
  }
}

const std::string& Quiver::vertexLabel(int i) const {
  checkVertex(i);
  return labels_[i];
}

int Quiver::vertexIndex(const std::string& label) const {
  for (int i = 0; i < numVertices(); ++i)
    if (labels_[i] == label) return i;
  throw std::invalid_argument("unknown vertex label: " + label);
}

int Quiver::tail(int h) const {
  checkArrow(h);
  const int e = numEdges();
  return h < e ? edges_[h].first : edges_[h - e].second;
}

int Quiver::head(int h) const {
  checkArrow(h);
  const int e = numEdges();
  return h < e ? edges_[h].second : edges_[h - e].first;
}

int Quiver::reverse(int h) const {
  checkArrow(h);
  const int e = numEdges();
  return h < e ? h + e : h - e;
}

int Quiver::eps(int h) const {
  checkArrow(h);
  return h < numEdges() ? 1 : -1;
}

bool Quiver::edgeIsLoop(int e) const {
  if (e < 0 || e >= numEdges()) throw std::invalid_argument("edge id out of range");
  return edges_[e].first == edges_[e].second;
}

int Quiver::loopsAt(int i) const {
  checkVertex(i);
  int c = 0;
  for (int e = 0; e < numEdges(); ++e)
    if (edges_[e].first == i && edges_[e].second == i) ++c;
  return c;
}

const std::vector<int>& Quiver::arrowsInto(int i) const {
  checkVertex(i);
  return into_[i];
}

const std::vector<int>& Quiver::arrowsOutOf(int i) const {
  checkVertex(i);
  return outof_[i];
}

std::vector<long long> Quiver::applyCartan(const DimVec& v) const {
  if (static_cast<int>(v.size()) != numVertices())
    throw std::invalid_argument("dimension vector length != number of vertices");
  std::vector<long long> out(v.size(), 0);
  for (int i = 0; i < numVertices(); ++i)
    for (int j = 0; j < numVertices(); ++j) out[i] += cartan_[i][j] * v[j];
  return out;
}

long long Quiver::bilinear(const DimVec& x, const DimVec& y) const {
  if (static_cast<int>(x.size()) != numVertices() ||
      static_cast<int>(y.size()) != numVertices())
    throw std::invalid_argument("dimension vector length != number of vertices");
  auto cy = applyCartan(y);
  long long s = 0;
  for (int i = 0; i < numVertices(); ++i) s += x[i] * cy[i];
  return s;
}

bool Quiver::connected() const {
  const int n = numVertices();
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    for (int h : outof_[i]) {
      int j = head(h);
      if (!seen[j]) {
        seen[j] = 1;
        ++count;
        q.push(j);
      }
    }
  }
  return count == n;
}

void Quiver::checkVertex(int i) const {
  if (i < 0 || i >= numVertices())
    throw std::invalid_argument("vertex index out of range");
}

void Quiver::checkArrow(int h) const {
  if (h < 0 || h >= numArrows())
    throw std::invalid_argument("arrow id out of range");
}

namespace {

std::vector<std::string> numberedLabels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

Quiver standardQuiver(const std::string& type) {
  if (type == "Jordan")
    return Quiver(numberedLabels(1), {{0, 0}});
  if (type == "A1~")
    return Quiver(numberedLabels(2), {{0, 1}, {1, 0}});
  if (type.size() >= 2 && (type[0] == 'A' || type[0] == 'D' || type[0] == 'E')) {
    int n = 0;
    try {
      n = std::stoi(type.substr(1));
    } catch (...) {
      throw std::invalid_argument("unknown quiver type: " + type);
    }
    std::vector<std::pair<int, int>> edges;
    if (type[0] == 'A' && n >= 1) {
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      return Quiver(numberedLabels(n), edges);
    }
    if (type[0] == 'D' && n >= 4) {
      // vertex 0 is the branch node; 1,2 hang off it; 3..n-1 form the tail
      edges.push_back({0, 1});
      edges.push_back({0, 2});
      edges.push_back({0, 3});
      for (int i = 3; i + 1 < n; ++i) edges.push_back({i, i + 1});
      return Quiver(numberedLabels(n), edges);
    }
    if (type[0] == 'E' && n >= 6 && n <= 8) {
      // chain 0-1-...-(n-2), extra vertex n-1 attached to vertex 2
      for (int i = 0; i + 1 < n - 1; ++i) edges.push_back({i, i + 1});
      edges.push_back({2, n - 1});
      return Quiver(numberedLabels(n), edges);
    }
  }
  throw std::invalid_argument("unknown quiver type: " + type);
}

}  // namespace quivar
