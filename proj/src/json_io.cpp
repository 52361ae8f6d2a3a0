#include "quivar/json_io.hpp"

#include <fstream>

namespace quivar {

namespace {

const json& need(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw BadInput(std::string("missing key: ") + key);
  return *it;
}

int needInt(const json& j, const char* what) {
  if (!j.is_number_integer()) throw BadInput(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string needString(const json& j, const char* what) {
  if (!j.is_string()) throw BadInput(std::string(what) + " must be a string");
  return j.get<std::string>();
}

}  // namespace

json loadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw BadInput("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

Quiver quiverFromJson(const json& j) {
  if (!j.is_object()) throw BadInput("quiver must be an object");
  std::vector<std::string> labels;
  for (const json& v : need(j, "vertices"))
    labels.push_back(needString(v, "vertex label"));
  auto pairAt = [&](const json& e, const char* what) -> std::pair<int, int> {
    if (!e.is_array() || e.size() != 2)
      throw BadInput(std::string(what) + " must be a pair of vertex labels");
    auto find = [&](const std::string& s) {
      for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == s) return static_cast<int>(i);
      throw BadInput("unknown vertex label: " + s);
    };
    return {find(needString(e[0], what)), find(needString(e[1], what))};
  };
  std::vector<std::pair<int, int>> edges, orient;
  for (const json& e : need(j, "edges")) edges.push_back(pairAt(e, "edge"));
  for (const json& e : need(j, "orientation"))
    orient.push_back(pairAt(e, "orientation entry"));
  if (edges.size() != orient.size())
    throw BadInput("orientation must list each edge exactly once");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [s, t] = orient[e];
    if (!(edges[e] == std::make_pair(s, t) || edges[e] == std::make_pair(t, s)))
      throw BadInput("orientation entry does not match its edge");
  }
  return Quiver(std::move(labels), std::move(orient));
}

json quiverToJson(const Quiver& q) {
  json out;
  out["vertices"] = q.vertexLabels();
  json edges = json::array(), orient = json::array();
  for (int e = 0; e < q.numEdges(); ++e) {
    json pair = json::array({q.vertexLabel(q.tail(e)), q.vertexLabel(q.head(e))});
    edges.push_back(pair);
    orient.push_back(pair);
  }
  out["edges"] = edges;
  out["orientation"] = orient;
  return out;
}

DimVec dimVecFromJson(const Quiver& q, const json& j, const char* what) {
  if (!j.is_object()) throw BadInput(std::string(what) + " must be an object");
  DimVec v(q.numVertices(), 0);
  for (const auto& [key, val] : j.items()) {
    int i = -1;
    try {
      i = q.vertexIndex(key);
    } catch (const std::invalid_argument& e) {
      throw BadInput(std::string(what) + ": " + e.what());
    }
    v[i] = needInt(val, what);
  }
  return v;
}

json dimVecToJson(const Quiver& q, const DimVec& v) {
  json out = json::object();
  for (int i = 0; i < q.numVertices(); ++i) out[q.vertexLabel(i)] = v.at(i);
  return out;
}

namespace {

CMat matrixFromJson(const json& j, int rows, int cols, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows * cols)
    throw BadInput(std::string(what) + " has the wrong number of entries");
  CMat m(rows, cols);
  int k = 0;
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw BadInput(std::string(what) + " entries must be [re, im] pairs");
    m(k / cols, k % cols) = std::complex<double>(e[0].get<double>(), e[1].get<double>());
    ++k;
  }
  return m;
}

json matrixToJson(const CMat& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      out.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
  return out;
}

}  // namespace

RepData repFromJson(const json& j, const std::optional<Quiver>& fallback) {
  if (!j.is_object()) throw BadInput("representation must be an object");
  std::optional<Quiver> q;
  if (j.contains("quiver"))
    q = quiverFromJson(j["quiver"]);
  else
    q = fallback;
  if (!q) throw BadInput("representation file has no quiver and none was supplied");

  DimVec v = dimVecFromJson(*q, need(j, "v"), "v");
  DimVec w = dimVecFromJson(*q, need(j, "w"), "w");
  Rep r = Rep::zero(*q, v, w);
  if (j.contains("B")) {
    for (const auto& [key, val] : j["B"].items()) {
      int h = -1;
      try {
        h = std::stoi(key);
      } catch (...) {
        throw BadInput("arrow id must be a number: " + key);
      }
      if (h < 0 || h >= q->numArrows()) throw BadInput("arrow id out of range: " + key);
      r.B[h] = matrixFromJson(val, v[q->head(h)], v[q->tail(h)], "arrow matrix");
    }
  }
  auto framing = [&](const char* key, std::vector<CMat>& dst, bool isA) {
    if (!j.contains(key)) return;
    for (const auto& [label, val] : j[key].items()) {
      int i = -1;
      try {
        i = q->vertexIndex(label);
      } catch (const std::invalid_argument& e) {
        throw BadInput(e.what());
      }
      dst[i] = isA ? matrixFromJson(val, v[i], w[i], "framing matrix a")
                   : matrixFromJson(val, w[i], v[i], "framing matrix b");
    }
  };
  framing("a", r.a, true);
  framing("b", r.b, false);

  std::optional<FramingSplit> split;
  if (j.contains("split")) {
    DimVec w1 = dimVecFromJson(*q, need(j["split"], "w1"), "split.w1");
    try {
      split = makeSplit(w, w1);
    } catch (const std::invalid_argument& e) {
      throw BadInput(e.what());
    }
  }
  return {std::move(r), split};
}

json repToJson(const Rep& r, bool includeQuiver,
               const std::optional<FramingSplit>& split) {
  json out;
  if (includeQuiver) out["quiver"] = quiverToJson(r.quiver);
  out["v"] = dimVecToJson(r.quiver, r.v);
  out["w"] = dimVecToJson(r.quiver, r.w);
  json B = json::object(), a = json::object(), b = json::object();
  for (int h = 0; h < r.quiver.numArrows(); ++h)
    if (r.B[h].size() > 0) B[std::to_string(h)] = matrixToJson(r.B[h]);
  for (int i = 0; i < r.quiver.numVertices(); ++i) {
    if (r.a[i].size() > 0) a[r.quiver.vertexLabel(i)] = matrixToJson(r.a[i]);
    if (r.b[i].size() > 0) b[r.quiver.vertexLabel(i)] = matrixToJson(r.b[i]);
  }
  out["B"] = B;
  out["a"] = a;
  out["b"] = b;
  if (split) {
    json s;
    s["w1"] = dimVecToJson(r.quiver, split->w1);
    out["split"] = s;
  }
  return out;
}

PosetPtr posetFromJson(const json& j) {
  if (!j.is_object()) throw BadInput("poset must be an object");
  std::vector<std::string> labels;
  std::vector<int> dims, groups;
  for (const json& c : need(j, "components")) {
    labels.push_back(needString(need(c, "id"), "component id"));
    dims.push_back(needInt(need(c, "dim"), "component dim"));
    groups.push_back(c.contains("group") ? needInt(c["group"], "component group") : 0);
  }
  const int n = static_cast<int>(labels.size());
  auto find = [&](const std::string& s) {
    for (int i = 0; i < n; ++i)
      if (labels[i] == s) return i;
    throw BadInput("unknown component label: " + s);
  };
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) leq[i][i] = 1;
  if (j.contains("relations"))
    for (const json& rel : j["relations"]) {
      if (!rel.is_array() || rel.size() != 2)
        throw BadInput("relation must be a pair [below, above]");
      leq[find(needString(rel[0], "relation endpoint"))]
         [find(needString(rel[1], "relation endpoint"))] = 1;
    }
  // reflexive-transitive closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj)
        if (leq[i][k] && leq[k][jj]) leq[i][jj] = 1;
  try {
    return std::make_shared<const ComponentPoset>(std::move(labels), std::move(dims),
                                                  std::move(groups), std::move(leq));
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }
}

json posetToJson(const ComponentPoset& p) {
  json out;
  json comps = json::array();
  for (int i = 0; i < p.numComponents(); ++i) {
    json c;
    c["id"] = p.label(i);
    c["dim"] = p.dim(i);
    c["group"] = p.group(i);
    comps.push_back(c);
  }
  out["components"] = comps;
  json rels = json::array();
  for (int i = 0; i < p.numComponents(); ++i)
    for (int jj = 0; jj < p.numComponents(); ++jj)
      if (i != jj && p.leq(i, jj))
        rels.push_back(json::array({p.label(i), p.label(jj)}));
  out["relations"] = rels;
  return out;
}

json ratToJson(const Rat& x) {
  using Int = boost::multiprecision::cpp_int;
  Int num = boost::multiprecision::numerator(x);
  Int den = boost::multiprecision::denominator(x);
  const Int big = Int(1) << 53;
  json out = json::array();
  if (num > -big && num < big)
    out.push_back(num.convert_to<long long>());
  else
    out.push_back(num.str());
  if (den < big)
    out.push_back(den.convert_to<long long>());
  else
    out.push_back(den.str());
  return out;
}

Rat ratFromJson(const json& j) {
  auto intOf = [](const json& e) -> boost::multiprecision::cpp_int {
    if (e.is_number_integer()) return e.get<long long>();
    if (e.is_string()) return boost::multiprecision::cpp_int(e.get<std::string>());
    throw BadInput("rational parts must be integers or decimal strings");
  };
  if (!j.is_array() || j.size() != 2) throw BadInput("rational must be [num, den]");
  boost::multiprecision::cpp_int num = intOf(j[0]), den = intOf(j[1]);
  if (den == 0) throw BadInput("rational with zero denominator");
  return Rat(num, den);
}

namespace {

template <class Dim, class Off, class Find>
RatMat blocksFromJson(int total, const json& j, bool fillDiagonal, int numComps,
                      Dim dim, Off off, Find find) {
  RatMat m(total, total);
  std::vector<char> diagSeen(numComps, 0);
  for (const json& blk : need(j, "blocks")) {
    int beta = find(needString(need(blk, "beta"), "block row id"));
    int alpha = find(needString(need(blk, "alpha"), "block column id"));
    const json& entries = need(blk, "entries");
    int rows = dim(beta), cols = dim(alpha);
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows * cols)
      throw BadInput("block has the wrong number of entries");
    int k = 0;
    for (const json& e : entries) {
      m(off(beta) + k / cols, off(alpha) + k % cols) = ratFromJson(e);
      ++k;
    }
    if (beta == alpha) diagSeen[beta] = 1;
  }
  if (fillDiagonal)
    for (int c = 0; c < numComps; ++c)
      if (!diagSeen[c])
        for (int k = 0; k < dim(c); ++k) m(off(c) + k, off(c) + k) = Rat(1);
  return m;
}

}  // namespace

RatMat blockMatrixFromJson(const ComponentPoset& p, const json& j, bool fillDiagonal) {
  return blocksFromJson(
      p.dimTotal(), j, fillDiagonal, p.numComponents(),
      [&](int c) { return p.dim(c); }, [&](int c) { return p.offset(c); },
      [&](const std::string& s) {
        try {
          return p.indexOf(s);
        } catch (const std::invalid_argument& e) {
          throw BadInput(e.what());
        }
      });
}

json blockMatrixToJson(const ComponentPoset& p, const RatMat& m) {
  json blocks = json::array();
  for (int beta = 0; beta < p.numComponents(); ++beta)
    for (int alpha = 0; alpha < p.numComponents(); ++alpha) {
      bool zero = true;
      json entries = json::array();
      for (int i = 0; i < p.dim(beta); ++i)
        for (int jj = 0; jj < p.dim(alpha); ++jj) {
          const Rat& x = m(p.offset(beta) + i, p.offset(alpha) + jj);
          if (x != 0) zero = false;
          entries.push_back(ratToJson(x));
        }
      if (zero) continue;
      json blk;
      blk["beta"] = p.label(beta);
      blk["alpha"] = p.label(alpha);
      blk["entries"] = entries;
      blocks.push_back(blk);
    }
  json out;
  out["blocks"] = blocks;
  return out;
}

NamedTriple triplePosetFromJson(const json& j) {
  if (!j.is_object()) throw BadInput("triple poset must be an object");
  std::vector<TripleComponent> comps;
  std::vector<int> dims;
  std::vector<std::string> ids;
  auto vecOf = [](const json& e, const char* what) {
    if (!e.is_array()) throw BadInput(std::string(what) + " must be an array");
    DimVec out;
    for (const json& x : e) out.push_back(needInt(x, what));
    return out;
  };
  for (const json& c : need(j, "components")) {
    ids.push_back(needString(need(c, "id"), "component id"));
    comps.push_back({vecOf(need(c, "v1"), "v1"), vecOf(need(c, "v2"), "v2"),
                     vecOf(need(c, "v3"), "v3")});
    dims.push_back(needInt(need(c, "dim"), "component dim"));
  }
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t k = i + 1; k < ids.size(); ++k)
      if (ids[i] == ids[k]) throw BadInput("duplicate component label: " + ids[i]);
  try {
    return {TriplePoset(std::move(comps), std::move(dims)), std::move(ids)};
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }
}

RatMat tripleMatrixFromJson(const NamedTriple& tp, const json& j, bool fillDiagonal) {
  return blocksFromJson(
      tp.poset.dimTotal(), j, fillDiagonal, tp.poset.numComponents(),
      [&](int c) { return tp.poset.dim(c); }, [&](int c) { return tp.poset.offset(c); },
      [&](const std::string& s) {
        for (std::size_t i = 0; i < tp.ids.size(); ++i)
          if (tp.ids[i] == s) return static_cast<int>(i);
        throw BadInput("unknown component label: " + s);
      });
}

json membershipToJson(const Membership& m) {
  json out;
  out["in_T0"] = m.inT0;
  out["in_T0_tilde"] = m.inT0Tilde;
  out["in_T0_minus"] = m.inT0Minus;
  return out;
}

namespace {

std::string wordKey(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

}  // namespace

json recordToJson(const InvariantRecord& r) {
  json out;
  out["cap"] = r.cap;
  json traces = json::object();
  for (const auto& [word, t] : r.traces)
    traces[wordKey(word)] = json::array({t.real(), t.imag()});
  out["traces"] = traces;
  json hub0 = json::array();
  for (const CMat& m : r.hub0) hub0.push_back(matrixToJson(m));
  out["hub0"] = hub0;
  json hubs = json::object();
  for (const auto& [word, m] : r.hubs) hubs[wordKey(word)] = matrixToJson(m);
  out["hubs"] = hubs;
  return out;
}

}  // namespace quivar
