#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cstar/errors.hpp"
#include "cstar/serialize.hpp"
#include "cstar/suites.hpp"
#include "cstar/tolerance.hpp"

namespace py = pybind11;
using namespace cstar;

namespace {

py::object to_python(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& x : j) out.append(to_python(x));
      return std::move(out);
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_python(v);
      return std::move(out);
    }
    default:
      return py::none();
  }
}

AdjointableMap make_map(const std::vector<int>& shape, const std::vector<Matrix>& blocks) {
  return AdjointableMap(AlgebraShape(shape), blocks);
}

Subspace span_of(const Matrix& columns) { return Subspace::span(columns); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Operator theory over finite-dimensional C*-algebras";

  static py::exception<Error> base(m, "CstarError", PyExc_RuntimeError);
  py::register_exception<StructuralError>(m, "StructuralError", base.ptr());
  py::register_exception<InvarianceError>(m, "InvarianceError", base.ptr());
  py::register_exception<UnmetHypothesis>(m, "UnmetHypothesis", base.ptr());
  py::register_exception<TheoremViolation>(m, "TheoremViolation", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<AdjointableMap>(m, "Map")
      .def(py::init(&make_map), py::arg("shape"), py::arg("blocks"),
           "A-linear map given by one amplified complex matrix per block")
      .def_static("from_json", [](const std::string& text) { return operator_from_json(parse_json_text(text, "<string>")); })
      .def_static("identity", [](const std::vector<int>& shape, int m) { return AdjointableMap::identity(AlgebraShape(shape), m); })
      .def("to_json", [](const AdjointableMap& f) { return dump_json(to_json(f)); })
      .def_property_readonly("shape", [](const AdjointableMap& f) { return f.shape().block_sizes(); })
      .def_property_readonly("blocks", [](const AdjointableMap& f) { return f.blocks(); })
      .def_property_readonly("domain_class", [](const AdjointableMap& f) { return f.domain_class().ranks(); })
      .def_property_readonly("codomain_class", [](const AdjointableMap& f) { return f.codomain_class().ranks(); })
      .def("realization", [](const AdjointableMap& f) { return f.realization(); })
      .def("norm", &AdjointableMap::norm)
      .def("adjoint", [](const AdjointableMap& f) { return adjoint(f); })
      .def("__matmul__", [](const AdjointableMap& f, const AdjointableMap& g) { return compose(f, g); })
      .def("__add__", [](const AdjointableMap& f, const AdjointableMap& g) { return f + g; })
      .def("__sub__", [](const AdjointableMap& f, const AdjointableMap& g) { return f - g; })
      .def("__pow__", [](const AdjointableMap& f, int k) { return power(f, k); });

  m.def("set_tolerances", [](std::optional<double> rank, std::optional<double> angle, std::optional<double> residual) {
        ToleranceConfig t = tolerances();
        if (rank) t.rank_tol = *rank;
        if (angle) t.angle_tol = *angle;
        if (residual) t.residual_tol = *residual;
        set_tolerances(t);
      }, py::arg("rank") = py::none(), py::arg("angle") = py::none(), py::arg("residual") = py::none());
  m.def("tolerances", [] {
    const ToleranceConfig& t = tolerances();
    py::dict d;
    d["rank"] = t.rank_tol;
    d["angle"] = t.angle_tol;
    d["residual"] = t.residual_tol;
    d["comm"] = t.comm_tol;
    return d;
  });

  m.def("fredholm_report", [](const AdjointableMap& f) { return to_python(report_json(fredholm_report(f))); });
  m.def("b_fredholm_report", [](const AdjointableMap& f) { return to_python(report_json(b_fredholm_report(f))); });
  m.def("exact_sequence", [](const AdjointableMap& f, const AdjointableMap& g) {
    return to_python(report_json(exact_sequence(f, g)));
  }, py::arg("f"), py::arg("g"));
  m.def("weyl_perturbation_chain", [](const AdjointableMap& t, const AdjointableMap& f) {
    return to_python(report_json(weyl_perturbation_chain(t, f)));
  }, py::arg("t"), py::arg("f"));
  m.def("product_chain", [](const AdjointableMap& d, const AdjointableMap& f) {
    return to_python(report_json(product_chain(d, f)));
  }, py::arg("d"), py::arg("f"));

  m.def("drazin_index", [](const AdjointableMap& f) { return drazin_inverse(f).index; });
  m.def("drazin_inverse", [](const AdjointableMap& f) { return drazin_inverse(f).inverse; });
  m.def("drazin_report", [](const AdjointableMap& f) { return to_python(report_json(drazin_inverse(f))); });
  m.def("drazin_dual_check", [](const AdjointableMap& f) { return to_python(report_json(drazin_dual_check(f))); });
  m.def("commuting_drazin_criterion", [](const AdjointableMap& f, const AdjointableMap& d) {
    return to_python(report_json(commuting_drazin_criterion(f, d)));
  });
  m.def("shift_counterexample", [](const std::string& kind, int n) {
    if (kind != "range" && kind != "kernel") throw ParseError("kind must be 'range' or 'kernel'");
    return to_python(report_json(shift_counterexample(kind == "range" ? ShiftKind::RangeStrict : ShiftKind::KernelStrict, n)));
  });

  m.def("dixmier_angle", [](const Matrix& a, const Matrix& b) { return dixmier_angle(span_of(a), span_of(b)); },
        "c0 of the column spans of a and b");
  m.def("closed_sum_report", [](const Matrix& a, const Matrix& b, std::uint64_t seed, int samples) {
    return to_python(report_json(closed_sum_report(span_of(a), span_of(b), seed, samples)));
  }, py::arg("a"), py::arg("b"), py::arg("seed") = 1, py::arg("samples") = 10000);
  m.def("bouldin_criterion", [](const AdjointableMap& f, const AdjointableMap& d) {
    return to_python(report_json(bouldin_criterion(f, d)));
  });

  m.def("regular_operator", [](const Matrix& t) { return to_python(report_json(make_regular_orthogonal(t))); });
  m.def("banach_perturbation", [](const Matrix& t, const Matrix& f) {
    return to_python(report_json(banach_perturbation(make_regular_orthogonal(t), f)));
  }, py::arg("t"), py::arg("f"));
  m.def("banach_product", [](const Matrix& s, const Matrix& t) {
    return to_python(report_json(banach_product(make_regular_orthogonal(s), make_regular_orthogonal(t))));
  }, py::arg("s"), py::arg("t"));

  m.def("multiplier_family", &multiplier_family);
  m.def("nonclosed_square_family", &nonclosed_square_family);
  m.def("family_names", &family_names);
  m.def("probe", [](const std::string& family, const std::vector<int>& sizes) {
    return to_python(report_json(family_diagnostic(family, sizes)));
  });

  m.def("suite_names", &suite_names);
  m.def("verify", [](const std::string& suite, std::uint64_t seed, int n, int samples, int threads) {
    SuiteConfig c{seed, n, samples, threads};
    SuiteResult r;
    {
      py::gil_scoped_release release;
      r = run_suite(suite, c);
    }
    return to_python(report_json(r));
  }, py::arg("suite"), py::arg("seed") = 1, py::arg("n") = 100, py::arg("samples") = 10000, py::arg("threads") = 0);
  m.def("render", [](const std::string& json_text, const std::string& format, const std::string& table_key) {
    return render(parse_json_text(json_text, "<string>"), parse_format(format), table_key);
  }, py::arg("json_text"), py::arg("format"), py::arg("table_key") = "");
}
