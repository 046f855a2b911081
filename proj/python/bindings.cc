// Copyright 2026 The salientpref Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Python extension module salientpref._core. Reports cross the boundary as
// plain dicts built from their JSON encodings.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "salient/dataio.h"
#include "salient/diagnostics.h"
#include "salient/errors.h"
#include "salient/estimator.h"
#include "salient/features.h"
#include "salient/model.h"
#include "salient/ranking.h"
#include "salient/selection.h"
#include "salient/serialize.h"
#include "salient/synthetic.h"
#include "salient/theory.h"

namespace py = pybind11;

namespace salient {
namespace {

py::object ToPython(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

SelectionSpec SpecFrom(const py::object& spec) {
  if (py::isinstance<py::str>(spec)) return ParseSelection(spec.cast<std::string>());
  const std::string text =
      py::module_::import("json").attr("dumps")(spec).cast<std::string>();
  return ParseSelection(text);
}

std::vector<std::size_t> Order(const Ranking& r) { return r.order(); }

}  // namespace
}  // namespace salient

PYBIND11_MODULE(_core, m) {
  using namespace salient;
  m.doc() = "Salient feature preference model";
  m.attr("__version__") = SALIENT_VERSION;

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DimensionError>(m, "DimensionError", base);
  py::register_exception<InvalidPairError>(m, "InvalidPairError", base);
  py::register_exception<PreconditionError>(m, "PreconditionError", base);
  py::register_exception<NumericalError>(m, "NumericalError", base);
  py::register_exception<UndefinedMetricError>(m, "UndefinedMetricError", base);
  py::register_exception<ParseError>(m, "ParseError", base);

  py::class_<FeatureMatrix>(m, "FeatureMatrix")
      .def(py::init<Matrix, std::vector<std::string>>(), py::arg("columns"),
           py::arg("item_ids") = std::vector<std::string>{},
           "Features as a d x n array, one column per item.")
      .def_property_readonly("dim", &FeatureMatrix::dim)
      .def_property_readonly("num_items", &FeatureMatrix::num_items)
      .def_property_readonly("matrix", &FeatureMatrix::matrix)
      .def_property_readonly("item_ids", &FeatureMatrix::item_ids)
      .def("index_of", &FeatureMatrix::IndexOf);

  py::class_<RealizedSelection>(m, "Selection")
      .def(py::init([](const py::object& spec, const FeatureMatrix& u) {
             return RealizedSelection(SpecFrom(spec), u);
           }),
           py::arg("spec"), py::arg("features"),
           "Realizes a selection spec (dict or JSON text) on a feature matrix.")
      .def("select",
           [](const RealizedSelection& s, std::size_t i, std::size_t j) {
             return s.Select(i, j).indices();
           })
      .def_property_readonly("spec",
                             [](const RealizedSelection& s) {
                               return ToPython(SelectionToJson(s.spec()));
                             })
      .def_property_readonly("is_full", &RealizedSelection::IsFull)
      .def_property_readonly("all_singletons", &RealizedSelection::AllSingletons);

  py::class_<ComparisonDataset>(m, "ComparisonDataset")
      .def(py::init([](const std::vector<std::tuple<std::size_t, std::size_t>>& outcomes) {
             ComparisonDataset d;
             for (const auto& [winner, loser] : outcomes) {
               if (winner == loser) throw InvalidPairError("winner equals loser");
               d.samples.push_back(ComparisonSample::FromOutcome(winner, loser));
             }
             return d;
           }),
           py::arg("outcomes"), "From (winner, loser) index pairs.")
      .def("__len__", &ComparisonDataset::size)
      .def_property_readonly("samples", [](const ComparisonDataset& d) {
        std::vector<std::tuple<std::size_t, std::size_t, int>> out;
        out.reserve(d.size());
        for (const auto& s : d.samples) out.emplace_back(s.i, s.j, s.y);
        return out;
      });

  m.def("sample_instance",
        [](std::size_t d, std::size_t n, std::uint64_t seed) {
          SyntheticInstance inst = SampleInstance(d, n, seed);
          return py::make_tuple(std::move(inst.u), std::move(inst.w_star));
        },
        py::arg("d"), py::arg("n"), py::arg("seed"));
  m.def("sample_comparisons", &SampleComparisons, py::arg("features"),
        py::arg("w_star"), py::arg("selection"), py::arg("m"), py::arg("seed"));

  m.def("prob_beats", &ProbBeats, py::arg("features"), py::arg("w"),
        py::arg("selection"), py::arg("i"), py::arg("j"));
  m.def("nll", &Nll, py::arg("features"), py::arg("w"), py::arg("selection"),
        py::arg("data"), py::arg("mu") = 0.0);
  m.def("nll_gradient", &NllGradient, py::arg("features"), py::arg("w"),
        py::arg("selection"), py::arg("data"), py::arg("mu") = 0.0);
  m.def("nll_hessian", &NllHessian, py::arg("features"), py::arg("w"),
        py::arg("selection"), py::arg("data"), py::arg("mu") = 0.0);

  m.def("fit",
        [](const FeatureMatrix& u, const RealizedSelection& sel,
           const ComparisonDataset& data, double mu, double tol, int max_iters,
           bool keep_trace) {
          FitConfig config;
          config.mu = mu;
          config.tol_grad = tol;
          config.max_iters = max_iters;
          config.keep_trace = keep_trace;
          FitResult r;
          {
            py::gil_scoped_release release;
            r = Fit(u, sel, data, config);
          }
          py::dict out = ToPython(FitResultToJson(r));
          out["w_hat"] = r.w_hat;
          return out;
        },
        py::arg("features"), py::arg("selection"), py::arg("data"),
        py::arg("mu") = 0.0, py::arg("tol") = 1e-8, py::arg("max_iters") = 5000,
        py::arg("keep_trace") = false);

  m.def("rank_from_weights",
        [](const FeatureMatrix& u, const Vector& w) { return Order(RankFromWeights(u, w)); },
        py::arg("features"), py::arg("w"), "Item indices, best first.");
  m.def("kendall_distance",
        [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
          return KendallDistance(Ranking(a), Ranking(b));
        });
  m.def("kendall_correlation",
        [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
          return KendallCorrelation(Ranking(a), Ranking(b));
        });
  m.def("pairwise_accuracy", &PairwiseAccuracy, py::arg("features"), py::arg("w"),
        py::arg("selection"), py::arg("data"));

  m.def("transitivity_report",
        [](const std::map<std::pair<std::size_t, std::size_t>, double>& p) {
          return ToPython(TransitivityToJson(CountTransitivityViolations(p), {}));
        },
        py::arg("probabilities"), "Keys are (i, j) with i < j.");
  m.def("model_transitivity_report",
        [](const FeatureMatrix& u, const Vector& w, const RealizedSelection& sel) {
          return ToPython(TransitivityToJson(ModelTransitivityReport(u, w, sel), u.item_ids()));
        },
        py::arg("features"), py::arg("w"), py::arg("selection"));

  m.def("theorem1",
        [](const FeatureMatrix& u, const RealizedSelection& sel,
           const std::optional<Vector>& w_star, double delta) {
          return ToPython(TheoryToJson(Theorem1Report(u, sel, w_star, delta)));
        },
        py::arg("features"), py::arg("selection"), py::arg("w_star") = py::none(),
        py::arg("delta") = 0.05);
  m.def("corollary1",
        [](const FeatureMatrix& u, const std::optional<Vector>& w_star, double delta) {
          return ToPython(Corollary1ToJson(Corollary1(u, w_star, delta)));
        },
        py::arg("features"), py::arg("w_star") = py::none(), py::arg("delta") = 0.05);
  m.def("corollary2",
        [](const FeatureMatrix& u, const RealizedSelection& sel,
           const std::optional<Vector>& w_star, double delta) {
          return ToPython(Corollary2ToJson(Corollary2(u, sel, w_star, delta)));
        },
        py::arg("features"), py::arg("selection"), py::arg("w_star") = py::none(),
        py::arg("delta") = 0.05);
  m.def("corollary3",
        [](const FeatureMatrix& u, const RealizedSelection& sel, const Vector& w_star,
           std::size_t k, double delta, double c5) {
          const TheoryReport t = Theorem1Report(u, sel, w_star, delta);
          return ToPython(Corollary3ToJson(Corollary3(u, w_star, t, k, c5)));
        },
        py::arg("features"), py::arg("selection"), py::arg("w_star"), py::arg("k") = 1,
        py::arg("delta") = 0.05, py::arg("c5") = 1.0);
  m.def("empirical_guarantee_check",
        [](const FeatureMatrix& u, const Vector& w_star, const RealizedSelection& sel,
           std::size_t m, double delta, std::size_t trials, std::uint64_t seed) {
          GuaranteeCheck g;
          {
            py::gil_scoped_release release;
            g = EmpiricalGuaranteeCheck(u, w_star, sel, m, delta, trials, seed);
          }
          return ToPython(GuaranteeToJson(g));
        },
        py::arg("features"), py::arg("w_star"), py::arg("selection"), py::arg("m"),
        py::arg("delta") = 0.05, py::arg("trials") = 20, py::arg("seed") = 0);

  m.def("load_features",
        [](const std::string& path, bool standardize) {
          return LoadFeatures(path, standardize).features;
        },
        py::arg("path"), py::arg("standardize") = false);
  m.def("save_features", &SaveFeatures, py::arg("path"), py::arg("features"));
  m.def("load_comparisons", &LoadComparisons, py::arg("path"), py::arg("features"),
        py::arg("min_count") = 1);
  m.def("save_comparisons", &SaveComparisons, py::arg("path"), py::arg("features"),
        py::arg("data"));
}
