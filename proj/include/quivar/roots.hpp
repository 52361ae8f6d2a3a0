#pragma once

#include <stdexcept>
#include <vector>

#include "quivar/quiver.hpp"

namespace quivar {

/// Thrown when an operation only defined for finite or affine graphs is
/// asked about an indefinite one (or when a finite-only operation gets an
/// affine graph, etc.).
struct UnsupportedType : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class QuiverType { finite, affine, indefinite };

struct TypeClass {
  QuiverType type;
  /// Primitive positive integer generator of ker(Cartan); empty unless affine.
  DimVec delta;
};

const char* quiverTypeName(QuiverType t);

/// Trichotomy for a connected graph via its symmetric Cartan matrix:
/// positive definite -> finite; corank one with a strictly positive kernel
/// vector -> affine (delta = the primitive integer generator); everything
/// else -> indefinite. Throws std::invalid_argument on disconnected input.
TypeClass classifyType(const Quiver& q);

/// Simple reflection s_i(v) = v - (Cv)_i e_i. Only defined at loop-free
/// vertices; throws std::invalid_argument otherwise or on a bad index.
DimVec reflect(const Quiver& q, const DimVec& v, int i);

/// Fundamental region test: v >= 0, v != 0, support connected, and
/// (Cv)_i <= 0 for every i. Throws std::invalid_argument when v has a
/// negative entry or is zero.
bool inFundamentalRegion(const Quiver& q, const DimVec& v);

struct Root {
  DimVec v;
  bool imaginary;  // real roots have (v,v) = 2, imaginary ones (v,v) <= 0

  bool operator==(const Root& other) const {
    return v == other.v && imaginary == other.imaginary;
  }
};

/// All positive roots v with v <= bound componentwise, each tagged
/// real/imaginary. The set is produced by closing the simple roots and the
/// fundamental-region vectors under simple reflections inside the padded box
/// [0, bound + (sum bound) * ones] and then filtering to [0, bound]; the
/// padding keeps reflection orbits that leave and re-enter the box.
/// Output is sorted lexicographically.
std::vector<Root> enumerateRoots(const Quiver& q, const DimVec& bound);

/// Dimension vectors of the simple objects supported at the origin, listed
/// with the loop-free coordinate vectors first (by vertex index) and, in the
/// affine case, delta last. Only entries <= bound are kept. Throws
/// UnsupportedType for indefinite graphs.
std::vector<DimVec> simpleModuleDims(const Quiver& q, const DimVec& bound);

/// Every positive root of a finite-type graph (no bound needed; the set is
/// finite). Throws UnsupportedType unless classifyType says finite.
std::vector<DimVec> allPositiveRoots(const Quiver& q);

}  // namespace quivar
