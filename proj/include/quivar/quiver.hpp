#pragma once

#include <string>
#include <utility>
#include <vector>

namespace quivar {

/// Dimension vectors are integer tuples indexed by vertex. All entries are
/// expected to be >= 0 unless a function documents otherwise.
using DimVec = std::vector<int>;

bool dimLeq(const DimVec& x, const DimVec& y);
DimVec dimAdd(const DimVec& x, const DimVec& y);
DimVec dimSub(const DimVec& x, const DimVec& y);
long long dimSum(const DimVec& x);
bool dimIsZero(const DimVec& x);
std::string dimToString(const DimVec& x);

/// A finite graph with a chosen orientation, presented as a doubled quiver.
///
/// The underlying data is a vertex list and a list of E oriented edges
/// (tail, head).  Arrows of the doubled quiver get ids 0..2E-1:
/// id h < E is the h-th oriented edge as given, id h >= E is the reversal
/// of edge h-E.  The involution swapping an arrow with its reversal is
/// reverse(), and the sign function eps() is +1 on 0..E-1, -1 on E..2E-1.
/// Loops are allowed and produce two loop arrows at the same vertex.
class Quiver {
 public:
  Quiver(std::vector<std::string> vertexLabels,
         std::vector<std::pair<int, int>> orientedEdges);

  int numVertices() const { return static_cast<int>(labels_.size()); }
  int numEdges() const { return static_cast<int>(edges_.size()); }
  int numArrows() const { return 2 * numEdges(); }

  const std::vector<std::string>& vertexLabels() const { return labels_; }
  const std::string& vertexLabel(int i) const;
  /// Index of the vertex with the given label; throws on unknown labels.
  int vertexIndex(const std::string& label) const;

  /// Tail (source) vertex of arrow h.
  int tail(int h) const;
  /// Head (target) vertex of arrow h.
  int head(int h) const;
  /// The opposite arrow; an involution without fixed points.
  int reverse(int h) const;
  /// +1 on the chosen orientation, -1 on the reversed copies.
  int eps(int h) const;

  bool edgeIsLoop(int e) const;
  int loopsAt(int i) const;
  bool hasLoopAt(int i) const { return loopsAt(i) > 0; }

  /// Arrows h of the doubled quiver with head(h) == i.
  const std::vector<int>& arrowsInto(int i) const;
  /// Arrows h of the doubled quiver with tail(h) == i.
  const std::vector<int>& arrowsOutOf(int i) const;

  /// Symmetric Cartan matrix: C[i][j] = 2*delta_ij - #(edges between i and j),
  /// where a loop at i counts twice in the diagonal reduction (C[i][i] =
  /// 2 - 2*loopsAt(i)).
  const std::vector<std::vector<long long>>& cartan() const { return cartan_; }

  /// Matrix-vector product C*v as 64-bit integers.
  std::vector<long long> applyCartan(const DimVec& v) const;

  /// Symmetric bilinear form (x, y) = x^T C y.
  long long bilinear(const DimVec& x, const DimVec& y) const;

  /// True when the underlying graph is connected (a single vertex counts).
  bool connected() const;

  bool operator==(const Quiver& other) const {
    return labels_ == other.labels_ && edges_ == other.edges_;
  }

 private:
  void checkVertex(int i) const;
  void checkArrow(int h) const;

  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<long long>> cartan_;
  std::vector<std::vector<int>> into_, outof_;
};

/// Standard quivers used throughout the test data: type strings are
/// "A1", "A2", ..., "D4", ..., "E6".."E8", "Jordan", "A1~" (one vertex with a
/// loop, and the affine A1 double edge).  Throws on unknown strings.
Quiver standardQuiver(const std::string& type);

}  // namespace quivar
