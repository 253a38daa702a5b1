// pybind11 surface over the core operations. Tensors and forms cross the
// boundary either as structured objects (window + coefficient list) or as
// the canonical JSON strings the CLI uses.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cohom/distributions.hpp"
#include "cohom/errors.hpp"
#include "cohom/forms.hpp"
#include "cohom/homogeneous.hpp"
#include "cohom/instances.hpp"
#include "cohom/json_io.hpp"
#include "cohom/lemma_lab.hpp"
#include "cohom/solve_top.hpp"

namespace py = pybind11;
using namespace cohom;

namespace {

CoeffTensor make_tensor(const std::vector<IrrepParams>& factors,
                        const std::vector<std::pair<long long, long long>>& window,
                        const std::vector<Complex>& coeffs) {
  TensorParams tp{factors};
  Window w;
  for (const auto& [lo, hi] : window) w.axes.push_back({lo, hi});
  CoeffTensor f(tp, w);
  if (!coeffs.empty()) {
    if (coeffs.size() != f.size())
      throw Error(ErrorCode::BadInput, "coefficient count must match the window");
    f.coeffs() = coeffs;
  }
  return f;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "coboundary solvers for diagonal actions on products of SL(2,R) "
            "representations";

  py::register_exception<Error>(m, "CohomError");

  py::enum_<Series>(m, "Series")
      .value("FirstPrincipal", Series::FirstPrincipal)
      .value("SecondPrincipal", Series::SecondPrincipal)
      .value("Complementary", Series::Complementary)
      .value("FirstDiscrete", Series::FirstDiscrete)
      .value("SecondDiscrete", Series::SecondDiscrete);

  py::class_<IrrepParams>(m, "IrrepParams")
      .def_readonly("series", &IrrepParams::series)
      .def_readonly("mu", &IrrepParams::mu)
      .def_readonly("epsilon", &IrrepParams::epsilon)
      .def_readonly("nu", &IrrepParams::nu)
      .def_readonly("n", &IrrepParams::n)
      .def_readonly("i_nu", &IrrepParams::i_nu)
      .def("__repr__", [](const IrrepParams& p) {
        return std::string("IrrepParams(") + series_name(p.series) +
               ", mu=" + std::to_string(p.mu) + ")";
      });

  m.def("classify", &classify, py::arg("mu"), py::arg("epsilon"),
        py::arg("series_hint") = std::nullopt);
  m.def("first_principal", &make_first_principal);
  m.def("second_principal", &make_second_principal);
  m.def("complementary", &make_complementary);
  m.def("first_discrete", &make_first_discrete);
  m.def("second_discrete", &make_second_discrete);

  m.def("pi_product",
        [](const IrrepParams& p, long long k) { return pi_product(p, k).value(); });
  m.def("basis_norm_sq", &basis_norm_sq);
  m.def("b_plus", &b_plus);
  m.def("b_minus", &b_minus);
  m.def("beta", &beta);
  m.def("d_value", [](const IrrepParams& p, int sigma, long long k) {
    return d_value(p, sigma, k).value();
  });
  m.def("sobolev_index", &sobolev_index, py::arg("s"), py::arg("d"));

  py::class_<CoeffTensor>(m, "CoeffTensor")
      .def(py::init(&make_tensor), py::arg("factors"), py::arg("window"),
           py::arg("coeffs") = std::vector<Complex>{})
      .def_property_readonly("factors",
                             [](const CoeffTensor& f) { return f.params().factors; })
      .def_property_readonly("window",
                             [](const CoeffTensor& f) {
                               std::vector<std::pair<long long, long long>> w;
                               for (const auto& ax : f.window().axes)
                                 w.emplace_back(ax.lo, ax.hi);
                               return w;
                             })
      .def_property_readonly("coeffs",
                             [](const CoeffTensor& f) { return f.coeffs(); })
      .def("at", [](const CoeffTensor& f, const std::vector<long long>& k) {
        return f.at(k);
      })
      .def("to_json", &tensor_to_json)
      .def_static("from_json", &tensor_from_json)
      .def("__add__", [](const CoeffTensor& a, const CoeffTensor& b) { return a + b; })
      .def("__sub__", [](const CoeffTensor& a, const CoeffTensor& b) { return a - b; })
      .def("__rmul__", [](const CoeffTensor& a, Complex s) { return s * a; });

  m.def("apply_X", &apply_X, py::arg("f"), py::arg("axis"));
  m.def("project", [](const CoeffTensor& f, const std::map<int, long long>& fixed) {
    return project(f, fixed);
  });
  m.def("sobolev_norm", &sobolev_norm, py::arg("f"), py::arg("tau"));
  m.def("norm0", &norm0);
  m.def("kernel_defect", &kernel_defect);
  m.def("green", &green, py::arg("params"), py::arg("k"), py::arg("l"));
  m.def("difference_rhs_check", &difference_rhs_check);

  m.def("solve_1d",
        [](const CoeffTensor& f, const std::string& backend, double tol) {
          SolveOptions opts;
          opts.backend = backend_from_name(backend);
          opts.tol = tol;
          return solve_1d(f, opts);
        },
        py::arg("f"), py::arg("backend") = "formula", py::arg("tol") = 1e-8);

  m.def("split",
        [](const CoeffTensor& f, double ratio) {
          SplitResult r = split(f, SplitWeight{ratio});
          return std::make_pair(r.f1, r.fmu);
        },
        py::arg("f"), py::arg("ratio") = 0.5);
  m.def("verify_split_kernels",
        [](const CoeffTensor& f1, const CoeffTensor& fmu, double tol) {
          SplitKernelReport r = verify_split_kernels(f1, fmu, tol);
          return py::make_tuple(r.pass, r.worst_f1, r.worst_fmu);
        },
        py::arg("f1"), py::arg("fmu"), py::arg("tol") = 1e-8);

  m.def("solve_top",
        [](const CoeffTensor& f, double tol, const std::string& backend,
           const std::vector<int>& axis_order, int threads) {
          TopOptions opts;
          opts.tol = tol;
          opts.backend = backend_from_name(backend);
          opts.axis_order = axis_order;
          opts.threads = threads;
          return solve_top(f, opts).g;
        },
        py::arg("f"), py::arg("tol") = 1e-8, py::arg("backend") = "formula",
        py::arg("axis_order") = std::vector<int>{}, py::arg("threads") = 1);
  m.def("residual", &residual, py::arg("f"), py::arg("gs"));

  m.def("form_from_json", &form_from_json);
  m.def("form_to_json", &form_to_json);
  m.def("solve_primitive_json",
        [](const std::string& form_json, double tol) {
          PrimitiveResult r = solve_primitive(form_from_json(form_json),
                                              PrimitiveOptions{tol});
          return py::make_tuple(form_to_json(r.eta), r.residual);
        },
        py::arg("form_json"), py::arg("tol") = 1e-8);

  m.def("verify_lemma",
        [](const std::string& suite, long long max_k, int threads) {
          VerificationReport r = verify(suite, GridSpec{max_k}, threads);
          py::dict d;
          d["lemma"] = r.lemma;
          d["pass"] = r.pass;
          d["worst_ratio"] = r.worst_ratio;
          d["worst_at"] = r.worst_at;
          d["excluded_points"] = r.excluded_points;
          py::dict consts;
          for (const auto& [k, v] : r.constants) consts[py::str(k)] = v;
          d["constants"] = consts;
          return d;
        },
        py::arg("suite"), py::arg("max_k") = 512, py::arg("threads") = 1);
  m.def("lemma_suites", &lemma_suites);
}
