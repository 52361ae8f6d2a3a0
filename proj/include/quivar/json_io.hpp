#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

#include "quivar/coproduct.hpp"
#include "quivar/invariants.hpp"
#include "quivar/rep.hpp"
#include "quivar/strata.hpp"

namespace quivar {

using nlohmann::json;

/// File-format errors (missing keys, shape mismatches, bad numbers).
struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// {"vertices": [...], "edges": [[u,v],...], "orientation": [[u,v],...]}
/// where edges lists the unordered pairs and orientation fixes a direction
/// for each edge (positionally; must match the edge up to swapping).
Quiver quiverFromJson(const json& j);
json quiverToJson(const Quiver& q);

/// Dimension vectors are objects keyed by vertex label; missing keys are 0.
DimVec dimVecFromJson(const Quiver& q, const json& j, const char* what);
json dimVecToJson(const Quiver& q, const DimVec& v);

struct RepData {
  Rep rep;
  std::optional<FramingSplit> split;
};

/// {"quiver": {...}?, "v": {...}, "w": {...}, "B": {"0": [[re,im],...]}?,
///  "a": {...}?, "b": {...}?, "split": {"w1": {...}}?}
/// Matrices are flat row-major lists of [re, im] pairs; missing matrices are
/// zero. When the file has no embedded quiver one must be supplied.
RepData repFromJson(const json& j, const std::optional<Quiver>& fallback);
json repToJson(const Rep& r, bool includeQuiver,
               const std::optional<FramingSplit>& split = std::nullopt);

/// {"components": [{"id": ..., "dim": ..., "group": ...}, ...],
///  "relations": [[below, above], ...]}  (closure is taken automatically;
/// components must be listed in a linear extension of the result).
PosetPtr posetFromJson(const json& j);
json posetToJson(const ComponentPoset& p);

/// Rational scalars serialize as [num, den]; entries too large for a JSON
/// number are written as decimal strings.
json ratToJson(const Rat& x);
Rat ratFromJson(const json& j);

/// {"blocks": [{"beta": ..., "alpha": ..., "entries": [[num,den],...]},...]}
/// Entries are row-major over the (beta, alpha) block. With
/// fillDiagonal, absent diagonal blocks become identities (class files);
/// without it absent blocks are zero (algebra-element files).
RatMat blockMatrixFromJson(const ComponentPoset& p, const json& j, bool fillDiagonal);
json blockMatrixToJson(const ComponentPoset& p, const RatMat& m);

/// {"components": [{"id": ..., "v1": [...], "v2": [...], "v3": [...],
///   "dim": ...}, ...]}
struct NamedTriple {
  TriplePoset poset;
  std::vector<std::string> ids;
};
NamedTriple triplePosetFromJson(const json& j);

/// Same block format as blockMatrixFromJson, with component ids from the
/// triple poset file.
RatMat tripleMatrixFromJson(const NamedTriple& tp, const json& j, bool fillDiagonal);

json membershipToJson(const Membership& m);
json recordToJson(const InvariantRecord& r);

json loadJsonFile(const std::string& path);

}  // namespace quivar
