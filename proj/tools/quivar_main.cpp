#include "CLI11.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "quivar/coproduct.hpp"
#include "quivar/invariants.hpp"
#include "quivar/json_io.hpp"
#include "quivar/oracles.hpp"
#include "quivar/quiver.hpp"
#include "quivar/rep.hpp"
#include "quivar/roots.hpp"
#include "quivar/strata.hpp"
#include "quivar/tensor.hpp"

namespace {

using namespace quivar;

// exit codes: 0 ok, 1 computation failure, 2 bad arguments or input files,
// 3 operation unsupported for this graph type
constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;
constexpr int kUnsupported = 3;

std::vector<int> parseIntList(const std::string& s, const char* what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string piece = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      std::size_t used = 0;
      int value = std::stoi(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      out.push_back(value);
    } catch (const std::exception&) {
      throw BadInput(std::string(what) + ": expected a comma-separated integer list, got '" +
                     s + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

DimVec parseDims(const std::string& s, int n, const char* what) {
  std::vector<int> raw = parseIntList(s, what);
  if (static_cast<int>(raw.size()) == 1 && n > 1) raw.assign(n, raw[0]);
  if (static_cast<int>(raw.size()) != n)
    throw BadInput(std::string(what) + ": expected " + std::to_string(n) +
                   " entries, got " + std::to_string(raw.size()));
  for (int x : raw)
    if (x < 0) throw BadInput(std::string(what) + ": entries must be nonnegative");
  return raw;
}

struct QuiverChoice {
  std::string path, type;

  Quiver resolve() const {
    if (!type.empty()) return standardQuiver(type);
    if (!path.empty()) return quiverFromJson(loadJsonFile(path));
    throw BadInput("need --quiver FILE or --type NAME");
  }

  bool present() const { return !type.empty() || !path.empty(); }
};

void addQuiverFlags(CLI::App* sub, QuiverChoice& qc) {
  sub->add_option("--quiver", qc.path, "quiver description file");
  sub->add_option("--type", qc.type, "built-in quiver name (A2, D4, Jordan, A1~, ...)");
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json cmatToJson(const CMat& m) {
  json entries = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      entries.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
  return entries;
}

json partitionsToJson(const std::vector<Partition>& lambda) {
  json out = json::array();
  for (const Partition& p : lambda) out.push_back(p);
  return out;
}

std::string partitionsToText(const std::vector<Partition>& lambda) {
  std::string out;
  for (const Partition& p : lambda) {
    out += '(';
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(p[i]);
    }
    out += ')';
  }
  return out.empty() ? "-" : out;
}

// a rep file plus the usual ways of overriding its quiver and split
struct RepArgs {
  std::string repPath, w1Text;
  QuiverChoice qc;

  RepData load() const {
    std::optional<Quiver> fallback;
    if (qc.present()) fallback = qc.resolve();
    RepData data = repFromJson(loadJsonFile(repPath), fallback);
    if (!w1Text.empty()) {
      DimVec w1 = parseDims(w1Text, data.rep.quiver.numVertices(), "--w1");
      data.split = makeSplit(data.rep.w, w1);
    }
    return data;
  }

  FramingSplit requireSplit(const RepData& d) const {
    if (!d.split) throw BadInput("no framing split: add --w1 or a \"split\" entry");
    return *d.split;
  }
};

void addRepFlags(CLI::App* sub, RepArgs& ra) {
  sub->add_option("--rep", ra.repPath, "representation file")->required();
  addQuiverFlags(sub, ra.qc);
  sub->add_option("--w1", ra.w1Text, "first framing summand, comma-separated");
}

// covering relations only, so the drawing stays readable
template <class LeqFn>
std::vector<std::pair<int, int>> coveringPairs(int n, LeqFn leq) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool direct = true;
      for (int k = 0; k < n && direct; ++k)
        if (k != i && k != j && leq(i, k) && leq(k, j)) direct = false;
      if (direct) out.push_back({i, j});
    }
  return out;
}

void emitDot(const std::vector<std::string>& labels,
             const std::vector<std::pair<int, int>>& edges) {
  std::cout << "digraph components {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < labels.size(); ++i)
    std::cout << "  n" << i << " [label=\"" << labels[i] << "\"];\n";
  for (const auto& [i, j] : edges) std::cout << "  n" << i << " -> n" << j << ";\n";
  std::cout << "}\n";
}

int cmdType(const QuiverChoice& qc) {
  TypeClass t = classifyType(qc.resolve());
  emit(json{{"type", quiverTypeName(t.type)}, {"delta", t.delta}});
  return kOk;
}

int cmdRoots(const QuiverChoice& qc, const std::string& boundText,
             const std::string& format) {
  Quiver q = qc.resolve();
  DimVec bound = parseDims(boundText, q.numVertices(), "--bound");
  std::vector<Root> roots = enumerateRoots(q, bound);
  if (format == "table") {
    for (const Root& r : roots)
      std::cout << dimToString(r.v) << "  " << (r.imaginary ? "imaginary" : "real")
                << "\n";
    return kOk;
  }
  json out = json::array();
  for (const Root& r : roots)
    out.push_back(json{{"v", r.v}, {"imaginary", r.imaginary}});
  emit(out);
  return kOk;
}

int cmdStrata(const QuiverChoice& qc, const std::string& vText, const std::string& wText,
              const std::string& format) {
  Quiver q = qc.resolve();
  DimVec v = parseDims(vText, q.numVertices(), "--v");
  DimVec w = parseDims(wText, q.numVertices(), "--w");
  std::vector<StratumIndex> strata = strataOfM0(q, v, w);
  if (format == "table") {
    for (const StratumIndex& s : strata)
      std::cout << "v0=" << dimToString(s.v0) << "  lambda=" << partitionsToText(s.lambda)
                << "\n";
    return kOk;
  }
  json out = json::array();
  for (const StratumIndex& s : strata)
    out.push_back(json{{"v0", s.v0}, {"lambda", partitionsToJson(s.lambda)}});
  emit(out);
  return kOk;
}

int cmdFixed(const QuiverChoice& qc, const std::string& vText, const std::string& w1Text,
             const std::string& w2Text, const std::string& format) {
  Quiver q = qc.resolve();
  DimVec v = parseDims(vText, q.numVertices(), "--v");
  DimVec w1 = parseDims(w1Text, q.numVertices(), "--w1");
  DimVec w2 = parseDims(w2Text, q.numVertices(), "--w2");
  std::vector<FixedComponent> comps = linearExtension(fixedComponents(v));
  json out = json::array();
  for (const FixedComponent& c : comps) {
    json row{{"v1", c.v1},
             {"v2", c.v2},
             {"dim1", dimQuiverVariety(q, c.v1, w1)},
             {"dim2", dimQuiverVariety(q, c.v2, w2)}};
    try {
      row["rank"] = attractingRank(q, w1, w2, c);
    } catch (const OddCodim&) {
      row["rank"] = nullptr;
    }
    out.push_back(row);
    if (format == "table")
      std::cout << dimToString(c.v1) << " | " << dimToString(c.v2) << "  rank="
                << (row["rank"].is_null() ? std::string("-")
                                          : std::to_string(row["rank"].get<int>()))
                << "\n";
  }
  if (format != "table") emit(out);
  return kOk;
}

int cmdPoset(const QuiverChoice& qc, const std::string& posetPath,
             const std::string& vText, const std::string& format) {
  if (!posetPath.empty()) {
    PosetPtr p = posetFromJson(loadJsonFile(posetPath));
    if (format == "dot") {
      std::vector<std::string> labels;
      for (int i = 0; i < p->numComponents(); ++i)
        labels.push_back(p->label(i) + " [" + std::to_string(p->dim(i)) + "]");
      emitDot(labels, coveringPairs(p->numComponents(),
                                    [&](int i, int j) { return p->leq(i, j); }));
    } else {
      emit(posetToJson(*p));
    }
    return kOk;
  }
  Quiver q = qc.resolve();
  DimVec v = parseDims(vText, q.numVertices(), "--v");
  std::vector<FixedComponent> comps = linearExtension(fixedComponents(v));
  auto leq = [&](int i, int j) {
    Cmp c = compareComponents(comps[i], comps[j]);
    return c == Cmp::lt || c == Cmp::eq;
  };
  if (format == "dot") {
    std::vector<std::string> labels;
    for (const FixedComponent& c : comps)
      labels.push_back(dimToString(c.v1) + "|" + dimToString(c.v2));
    emitDot(labels, coveringPairs(static_cast<int>(comps.size()), leq));
    return kOk;
  }
  json nodes = json::array(), relations = json::array();
  for (const FixedComponent& c : comps) nodes.push_back(json{{"v1", c.v1}, {"v2", c.v2}});
  for (const auto& [i, j] : coveringPairs(static_cast<int>(comps.size()), leq))
    relations.push_back(json::array({i, j}));
  emit(json{{"components", nodes}, {"covers", relations}});
  return kOk;
}

int cmdSigmaFibers(const QuiverChoice& qc, const std::string& vText,
                   const std::string& w1Text, const std::string& w2Text,
                   const std::string& format) {
  Quiver q = qc.resolve();
  DimVec v = parseDims(vText, q.numVertices(), "--v");
  DimVec w1 = parseDims(w1Text, q.numVertices(), "--w1");
  DimVec w2 = parseDims(w2Text, q.numVertices(), "--w2");
  std::vector<FixedStratumIndex> strata = strataOfFixedLocus(q, v, w1, w2);
  if (format == "table") {
    for (const FixedStratumIndex& s : strata)
      std::cout << dimToString(s.v1) << " | " << dimToString(s.v2) << "  lambda="
                << partitionsToText(s.lambda) << "  fibers=" << sigmaFiberCount(s)
                << "\n";
    return kOk;
  }
  json out = json::array();
  for (const FixedStratumIndex& s : strata)
    out.push_back(json{{"v1", s.v1},
                       {"v2", s.v2},
                       {"lambda", partitionsToJson(s.lambda)},
                       {"fibers", sigmaFiberCount(s)}});
  emit(out);
  return kOk;
}

int cmdMu(const RepArgs& ra) {
  RepData d = ra.load();
  json mats = json::object();
  std::vector<CMat> mu = momentMap(d.rep);
  for (int i = 0; i < d.rep.quiver.numVertices(); ++i)
    mats[d.rep.quiver.vertexLabel(i)] = cmatToJson(mu[i]);
  emit(json{{"mu", mats}, {"residual", momentResidual(d.rep)}});
  return kOk;
}

int cmdStable(const RepArgs& ra, double tol) {
  RepData d = ra.load();
  emit(json{{"stable", isStable(d.rep, tol)}, {"residual", momentResidual(d.rep)}});
  return kOk;
}

int cmdMember(const RepArgs& ra, double tol, bool exact) {
  RepData d = ra.load();
  FramingSplit split = ra.requireSplit(d);
  Membership m = exact ? membershipExact(exactify(d.rep), split)
                       : membership(d.rep, split, tol);
  json out = membershipToJson(m);
  out["method"] = exact ? "exact" : "numeric";
  emit(out);
  return kOk;
}

int cmdLimit(const RepArgs& ra, double tol, int cap) {
  RepData d = ra.load();
  FramingSplit split = ra.requireSplit(d);
  emit(recordToJson(limitInvariants(d.rep, split, cap, tol)));
  return kOk;
}

int cmdSolve(const RepArgs& ra, double tol, int maxIter) {
  RepData d = ra.load();
  SolveReport report = newtonSolveMoment(d.rep, tol, maxIter);
  emit(json{{"converged", report.converged},
            {"iterations", report.iterations},
            {"residual", report.residual},
            {"rep", repToJson(report.rep, true, d.split)}});
  return report.converged ? kOk : kFailure;
}

int cmdTensor(const QuiverChoice& qc, const std::string& lhsText,
              const std::string& rhsText, const std::string& format) {
  Quiver q = qc.resolve();
  auto asWeight = [&](const std::string& s, const char* what) {
    std::vector<int> raw = parseIntList(s, what);
    if (static_cast<int>(raw.size()) != q.numVertices())
      throw BadInput(std::string(what) + ": expected " +
                     std::to_string(q.numVertices()) + " entries");
    return Weight(raw.begin(), raw.end());
  };
  Weight lhs = asWeight(lhsText, "--lhs");
  Weight rhs = asWeight(rhsText, "--rhs");
  std::map<Weight, long long> dec = tensorDecompose(q, lhs, rhs);
  if (format == "table") {
    for (const auto& [wt, mult] : dec) {
      DimVec asDims(wt.begin(), wt.end());
      std::cout << dimToString(asDims) << "  x" << mult << "  dim "
                << irrepDim(q, wt) << "\n";
    }
    return kOk;
  }
  json out = json::array();
  for (const auto& [wt, mult] : dec)
    out.push_back(json{{"weight", wt}, {"multiplicity", mult}, {"dim", irrepDim(q, wt)}});
  emit(out);
  return kOk;
}

int cmdTensorN(const QuiverChoice& qc, const std::string& v1Text,
               const std::string& w1Text, const std::string& v2Text,
               const std::string& w2Text, const std::string& v0Text) {
  Quiver q = qc.resolve();
  int n = q.numVertices();
  DimVec v1 = parseDims(v1Text, n, "--v1"), w1 = parseDims(w1Text, n, "--w1");
  DimVec v2 = parseDims(v2Text, n, "--v2"), w2 = parseDims(w2Text, n, "--w2");
  DimVec v0 = parseDims(v0Text, n, "--v0");
  DimVec w = dimAdd(w1, w2);
  emit(json{{"multiplicity", multiplicityN(q, v1, w1, v2, w2, v0, w)},
            {"lhs", weightOf(q, v1, w1)},
            {"rhs", weightOf(q, v2, w2)},
            {"target", weightOf(q, v0, w)}});
  return kOk;
}

struct CoproductFiles {
  std::string poset, cls, element, projectors;
};

int cmdCoproductCheck(const CoproductFiles& f) {
  PosetPtr p = posetFromJson(loadJsonFile(f.poset));
  RatMat m = blockMatrixFromJson(*p, loadJsonFile(f.cls), true);
  CorrClass c(p, std::move(m));
  bool valid = validateClass(c) && splittingCheck(c);
  emit(json{{"valid", valid}});
  return kOk;
}

int cmdCoproductInvert(const CoproductFiles& f) {
  PosetPtr p = posetFromJson(loadJsonFile(f.poset));
  CorrClass c(p, blockMatrixFromJson(*p, loadJsonFile(f.cls), true));
  emit(blockMatrixToJson(*p, invertClass(c).mat));
  return kOk;
}

int cmdCoproductDelta(const CoproductFiles& f) {
  PosetPtr p = posetFromJson(loadJsonFile(f.poset));
  CorrClass c(p, blockMatrixFromJson(*p, loadJsonFile(f.cls), true));
  RatMat a = blockMatrixFromJson(*p, loadJsonFile(f.element), false);
  emit(blockMatrixToJson(*p, deltaC(c, a)));
  return kOk;
}

int cmdCoproductMultiplicities(const CoproductFiles& f) {
  PosetPtr p = posetFromJson(loadJsonFile(f.poset));
  json doc = loadJsonFile(f.projectors);
  if (!doc.contains("sourceDims") || !doc.contains("projectors"))
    throw BadInput("projector file needs \"sourceDims\" and \"projectors\"");
  std::vector<int> sourceDims;
  for (const json& d : doc["sourceDims"]) sourceDims.push_back(d.get<int>());
  std::vector<RatMat> projectors;
  for (const json& pj : doc["projectors"])
    projectors.push_back(blockMatrixFromJson(*p, pj, false));
  emit(json{{"n", extractMultiplicities(*p, sourceDims, projectors)}});
  return kOk;
}

struct CoassocFiles {
  std::string triple, c12_3, r12_3, r1_23, c1_23;
};

int cmdCoassoc(const CoassocFiles& f) {
  NamedTriple tp = triplePosetFromJson(loadJsonFile(f.triple));
  RatMat c12_3 = tripleMatrixFromJson(tp, loadJsonFile(f.c12_3), true);
  RatMat r12_3 = tripleMatrixFromJson(tp, loadJsonFile(f.r12_3), true);
  RatMat r1_23 = tripleMatrixFromJson(tp, loadJsonFile(f.r1_23), true);
  RatMat c1_23 = tripleMatrixFromJson(tp, loadJsonFile(f.c1_23), true);
  validateTripleClass(tp.poset, TripleKind::split12_3, c12_3);
  validateTripleClass(tp.poset, TripleKind::refine12_3, r12_3);
  validateTripleClass(tp.poset, TripleKind::refine1_23, r1_23);
  validateTripleClass(tp.poset, TripleKind::split1_23, c1_23);
  emit(json{{"coassociative",
             coassociativityCheck(tp.poset, c12_3, r12_3, r1_23, c1_23)}});
  return kOk;
}

int cmdSelftest(unsigned long long seed, const std::string& format) {
  oracles::SelftestResult res = oracles::runSelftest(seed);
  if (format == "table") {
    for (const std::string& line : res.lines) std::cout << line << "\n";
    std::cout << res.checksRun << " checks, " << res.checksFailed << " failed\n";
  } else {
    emit(json{{"run", res.checksRun}, {"failed", res.checksFailed},
              {"checks", res.lines}});
  }
  return res.checksFailed == 0 ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quiver variety toolkit: roots, strata, moment maps, membership, "
               "coproduct block matrices, tensor multiplicities"};
  app.require_subcommand(1);

  double defaultTol = 1e-9;
  if (const char* env = std::getenv("QUIVAR_PRECISION")) {
    char* end = nullptr;
    double parsed = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(parsed > 0)) {
      std::cerr << "error: QUIVAR_PRECISION must be a positive number\n";
      return kUsage;
    }
    defaultTol = parsed;
  }

  std::function<int()> run;

  QuiverChoice typeQc;
  CLI::App* typeCmd = app.add_subcommand("type", "classify the graph (finite/affine/indefinite)");
  addQuiverFlags(typeCmd, typeQc);
  typeCmd->callback([&] { run = [&] { return cmdType(typeQc); }; });

  QuiverChoice rootsQc;
  std::string rootsBound, rootsFormat = "json";
  CLI::App* rootsCmd = app.add_subcommand("roots", "positive roots inside a box");
  addQuiverFlags(rootsCmd, rootsQc);
  rootsCmd->add_option("--bound", rootsBound, "componentwise bound, comma-separated")
      ->required();
  rootsCmd->add_option("--format", rootsFormat)->check(CLI::IsMember({"json", "table"}));
  rootsCmd->callback([&] { run = [&] { return cmdRoots(rootsQc, rootsBound, rootsFormat); }; });

  QuiverChoice strataQc;
  std::string strataV, strataW, strataFormat = "json";
  CLI::App* strataCmd = app.add_subcommand("strata", "strata of the affine quotient");
  addQuiverFlags(strataCmd, strataQc);
  strataCmd->add_option("--v", strataV)->required();
  strataCmd->add_option("--w", strataW)->required();
  strataCmd->add_option("--format", strataFormat)->check(CLI::IsMember({"json", "table"}));
  strataCmd->callback(
      [&] { run = [&] { return cmdStrata(strataQc, strataV, strataW, strataFormat); }; });

  QuiverChoice fixedQc;
  std::string fixedV, fixedW1, fixedW2, fixedFormat = "json";
  CLI::App* fixedCmd =
      app.add_subcommand("fixed", "fixed-point components with attracting ranks");
  addQuiverFlags(fixedCmd, fixedQc);
  fixedCmd->add_option("--v", fixedV)->required();
  fixedCmd->add_option("--w1", fixedW1)->required();
  fixedCmd->add_option("--w2", fixedW2)->required();
  fixedCmd->add_option("--format", fixedFormat)->check(CLI::IsMember({"json", "table"}));
  fixedCmd->callback([&] {
    run = [&] { return cmdFixed(fixedQc, fixedV, fixedW1, fixedW2, fixedFormat); };
  });

  QuiverChoice posetQc;
  std::string posetFile, posetV, posetFormat = "json";
  CLI::App* posetCmd =
      app.add_subcommand("poset", "component poset, from a file or from splits of v");
  addQuiverFlags(posetCmd, posetQc);
  posetCmd->add_option("--poset", posetFile, "component poset file");
  posetCmd->add_option("--v", posetV);
  posetCmd->add_option("--format", posetFormat)
      ->check(CLI::IsMember({"json", "table", "dot"}));
  posetCmd->callback(
      [&] { run = [&] { return cmdPoset(posetQc, posetFile, posetV, posetFormat); }; });

  QuiverChoice sigmaQc;
  std::string sigmaV, sigmaW1, sigmaW2, sigmaFormat = "json";
  CLI::App* sigmaCmd =
      app.add_subcommand("sigma-fibers", "fixed-locus strata with gluing fiber counts");
  addQuiverFlags(sigmaCmd, sigmaQc);
  sigmaCmd->add_option("--v", sigmaV)->required();
  sigmaCmd->add_option("--w1", sigmaW1)->required();
  sigmaCmd->add_option("--w2", sigmaW2)->required();
  sigmaCmd->add_option("--format", sigmaFormat)->check(CLI::IsMember({"json", "table"}));
  sigmaCmd->callback([&] {
    run = [&] { return cmdSigmaFibers(sigmaQc, sigmaV, sigmaW1, sigmaW2, sigmaFormat); };
  });

  RepArgs muArgs;
  CLI::App* muCmd = app.add_subcommand("mu", "evaluate the moment map");
  addRepFlags(muCmd, muArgs);
  muCmd->callback([&] { run = [&] { return cmdMu(muArgs); }; });

  RepArgs stableArgs;
  double stableTol = defaultTol;
  CLI::App* stableCmd = app.add_subcommand("stable", "stability of a representation");
  addRepFlags(stableCmd, stableArgs);
  stableCmd->add_option("--tol", stableTol, "rank tolerance");
  stableCmd->callback([&] { run = [&] { return cmdStable(stableArgs, stableTol); }; });

  RepArgs memberArgs;
  double memberTol = defaultTol;
  bool memberExact = false;
  CLI::App* memberCmd =
      app.add_subcommand("member", "attracting-set membership for a framing split");
  addRepFlags(memberCmd, memberArgs);
  memberCmd->add_option("--tol", memberTol, "rank tolerance");
  memberCmd->add_flag("--exact", memberExact, "decide over exact rationals");
  memberCmd->callback(
      [&] { run = [&] { return cmdMember(memberArgs, memberTol, memberExact); }; });

  RepArgs limitArgs;
  double limitTol = defaultTol;
  int limitCap = -1;
  CLI::App* limitCmd =
      app.add_subcommand("limit", "invariant record of the scaling limit");
  addRepFlags(limitCmd, limitArgs);
  limitCmd->add_option("--tol", limitTol, "rank tolerance");
  limitCmd->add_option("--cap", limitCap, "word length cap (-1 = (sum v)^2)");
  limitCmd->callback(
      [&] { run = [&] { return cmdLimit(limitArgs, limitTol, limitCap); }; });

  RepArgs solveArgs;
  double solveTol = 1e-10;
  int solveMaxIter = 200;
  CLI::App* solveCmd = app.add_subcommand("solve", "drive the moment map to zero");
  addRepFlags(solveCmd, solveArgs);
  solveCmd->add_option("--tol", solveTol, "target residual");
  solveCmd->add_option("--max-iter", solveMaxIter);
  solveCmd->callback(
      [&] { run = [&] { return cmdSolve(solveArgs, solveTol, solveMaxIter); }; });

  QuiverChoice tensorQc;
  std::string tensorLhs, tensorRhs, tensorFormat = "json";
  CLI::App* tensorCmd = app.add_subcommand("tensor", "decompose a tensor product");
  addQuiverFlags(tensorCmd, tensorQc);
  tensorCmd->add_option("--lhs", tensorLhs, "highest weight, comma-separated")->required();
  tensorCmd->add_option("--rhs", tensorRhs, "highest weight, comma-separated")->required();
  tensorCmd->add_option("--format", tensorFormat)->check(CLI::IsMember({"json", "table"}));
  tensorCmd->callback([&] {
    run = [&] { return cmdTensor(tensorQc, tensorLhs, tensorRhs, tensorFormat); };
  });

  QuiverChoice tnQc;
  std::string tnV1, tnW1, tnV2, tnW2, tnV0;
  CLI::App* tnCmd =
      app.add_subcommand("tensor-n", "one tensor multiplicity from dimension data");
  addQuiverFlags(tnCmd, tnQc);
  tnCmd->add_option("--v1", tnV1)->required();
  tnCmd->add_option("--w1", tnW1)->required();
  tnCmd->add_option("--v2", tnV2)->required();
  tnCmd->add_option("--w2", tnW2)->required();
  tnCmd->add_option("--v0", tnV0)->required();
  tnCmd->callback(
      [&] { run = [&] { return cmdTensorN(tnQc, tnV1, tnW1, tnV2, tnW2, tnV0); }; });

  CLI::App* coproductCmd =
      app.add_subcommand("coproduct", "block-matrix correction class operations");
  coproductCmd->require_subcommand(1);
  CoproductFiles coFiles;

  CLI::App* coCheck = coproductCmd->add_subcommand("check", "validate a class file");
  coCheck->add_option("--poset", coFiles.poset)->required();
  coCheck->add_option("--class", coFiles.cls)->required();
  coCheck->callback([&] { run = [&] { return cmdCoproductCheck(coFiles); }; });

  CLI::App* coInvert = coproductCmd->add_subcommand("invert", "exact inverse class");
  coInvert->add_option("--poset", coFiles.poset)->required();
  coInvert->add_option("--class", coFiles.cls)->required();
  coInvert->callback([&] { run = [&] { return cmdCoproductInvert(coFiles); }; });

  CLI::App* coDelta =
      coproductCmd->add_subcommand("delta", "conjugate an algebra element by the class");
  coDelta->add_option("--poset", coFiles.poset)->required();
  coDelta->add_option("--class", coFiles.cls)->required();
  coDelta->add_option("--element", coFiles.element)->required();
  coDelta->callback([&] { run = [&] { return cmdCoproductDelta(coFiles); }; });

  CLI::App* coMult = coproductCmd->add_subcommand(
      "multiplicities", "simple-module multiplicities from projectors");
  coMult->add_option("--poset", coFiles.poset)->required();
  coMult->add_option("--projectors", coFiles.projectors)->required();
  coMult->callback([&] { run = [&] { return cmdCoproductMultiplicities(coFiles); }; });

  CoassocFiles coaFiles;
  auto addCoassocFlags = [&](CLI::App* sub) {
    sub->add_option("--poset", coaFiles.triple, "triple component file")->required();
    sub->add_option("--c12-3", coaFiles.c12_3)->required();
    sub->add_option("--r12-3", coaFiles.r12_3)->required();
    sub->add_option("--r1-23", coaFiles.r1_23)->required();
    sub->add_option("--c1-23", coaFiles.c1_23)->required();
    sub->callback([&] { run = [&] { return cmdCoassoc(coaFiles); }; });
  };
  addCoassocFlags(app.add_subcommand("coassoc", "two-step splitting consistency"));
  addCoassocFlags(coproductCmd->add_subcommand("coassoc", "two-step splitting consistency"));

  unsigned long long seed = 0;
  std::string selftestFormat = "json";
  CLI::App* selftestCmd =
      app.add_subcommand("selftest", "run the oracle-equivalence suite");
  selftestCmd->add_option("--seed", seed, "seed for all randomized checks");
  selftestCmd->add_option("--format", selftestFormat)
      ->check(CLI::IsMember({"json", "table"}));
  selftestCmd->callback([&] { run = [&] { return cmdSelftest(seed, selftestFormat); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return run ? run() : kUsage;
  } catch (const UnsupportedType& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnsupported;
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
