#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quivar/invariants.hpp"
#include "quivar/oracles.hpp"
#include "quivar/rep.hpp"
#include "quivar/roots.hpp"
#include "quivar/strata.hpp"
#include "quivar/tensor.hpp"

namespace py = pybind11;
using namespace quivar;

PYBIND11_MODULE(_quivar, m) {
  m.doc() = "quiver variety toolkit: combinatorics, moment maps, tensor products";

  py::class_<Quiver>(m, "Quiver")
      .def("num_vertices", &Quiver::numVertices)
      .def("num_edges", &Quiver::numEdges)
      .def("vertex_labels", &Quiver::vertexLabels)
      .def("__eq__", [](const Quiver& a, const Quiver& b) { return a == b; });

  m.def("standard_quiver", &standardQuiver, py::arg("type"),
        "Built-in graph by name: A<n>, D<n>, E6..E8, Jordan, A1~");

  m.def("classify_type", [](const Quiver& q) {
    TypeClass t = classifyType(q);
    return py::make_tuple(quiverTypeName(t.type), t.delta);
  });

  m.def("enumerate_roots", [](const Quiver& q, const DimVec& bound) {
    std::vector<std::pair<DimVec, bool>> out;
    for (const Root& r : enumerateRoots(q, bound)) out.push_back({r.v, r.imaginary});
    return out;
  });

  py::class_<Rep>(m, "Rep")
      .def_readonly("v", &Rep::v)
      .def_readonly("w", &Rep::w);

  py::class_<SolveReport>(m, "SolveReport")
      .def_readonly("converged", &SolveReport::converged)
      .def_readonly("iterations", &SolveReport::iterations)
      .def_readonly("residual", &SolveReport::residual)
      .def_readonly("rep", &SolveReport::rep);

  m.def("zero_rep", &Rep::zero, py::arg("quiver"), py::arg("v"), py::arg("w"));
  m.def(
      "random_rep",
      [](const Quiver& q, const DimVec& v, const DimVec& w, unsigned long long seed,
         double scale) {
        std::mt19937_64 rng(seed);
        return randomRep(q, v, w, rng, scale);
      },
      py::arg("quiver"), py::arg("v"), py::arg("w"), py::arg("seed"),
      py::arg("scale") = 1.0);
  m.def("moment_residual", &momentResidual);
  m.def("solve_moment", &newtonSolveMoment, py::arg("rep"), py::arg("tol") = 1e-10,
        py::arg("max_iter") = 200);
  m.def("is_stable", &isStable, py::arg("rep"), py::arg("tol") = 1e-9);

  m.def(
      "membership",
      [](const Rep& r, const DimVec& w1, double tol) {
        Membership mem = membership(r, makeSplit(r.w, w1), tol);
        py::dict out;
        out["in_T0"] = mem.inT0;
        out["in_T0_tilde"] = mem.inT0Tilde;
        out["in_T0_minus"] = mem.inT0Minus;
        return out;
      },
      py::arg("rep"), py::arg("w1"), py::arg("tol") = 1e-9);

  m.def("dim_quiver_variety", &dimQuiverVariety);
  m.def("attracting_rank",
        [](const Quiver& q, const DimVec& w1, const DimVec& w2, const DimVec& v1,
           const DimVec& v2) { return attractingRank(q, w1, w2, {v1, v2}); });
  m.def("num_strata",
        [](const Quiver& q, const DimVec& v, const DimVec& w) {
          return strataOfM0(q, v, w).size();
        });
  m.def("partition_count", &partitionCount);

  m.def("weight_of", &weightOf);
  m.def("irrep_dim", &irrepDim);
  m.def("tensor_decompose", [](const Quiver& q, const Weight& lam, const Weight& mu) {
    py::dict out;
    for (const auto& [wt, mult] : tensorDecompose(q, lam, mu))
      out[py::tuple(py::cast(wt))] = mult;
    return out;
  });
  m.def("multiplicity_n", &multiplicityN);
}
