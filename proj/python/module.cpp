#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flagflow/anosov.hpp"
#include "flagflow/checks.hpp"
#include "flagflow/geometry.hpp"
#include "flagflow/groupspec.hpp"
#include "flagflow/jordan.hpp"
#include "flagflow/zeta.hpp"

namespace py = pybind11;
using namespace flagflow;

namespace {

WeightVector weights_from_list(const ThetaSet& theta,
                               const std::vector<double>& s) {
  if (s.empty()) return constant_weight(theta, 1.0);
  if (s.size() != theta.size())
    throw Error("weight list needs one value per theta index");
  WeightVector out;
  for (std::size_t i = 0; i < theta.size(); ++i) out[theta[i]] = s[i];
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "flag-space invariants for discrete subgroups of SL(d)";
  m.attr("__version__") = FLAGFLOW_VERSION;

  py::register_exception<Error>(m, "FlagflowError");

  py::class_<GroupSpec>(m, "GroupSpec")
      .def_property_readonly("d", [](const GroupSpec& s) { return s.d; })
      .def_property_readonly(
          "field", [](const GroupSpec& s) { return field_name(s.field); })
      .def_property_readonly("theta",
                             [](const GroupSpec& s) { return s.theta; })
      .def_property_readonly("notes",
                             [](const GroupSpec& s) { return s.notes; })
      .def_property_readonly("generators",
                             [](const GroupSpec& s) {
                               py::dict out;
                               for (const auto& g : s.generators)
                                 out[py::str(g.label)] = g.matrix;
                               return out;
                             })
      .def("to_json", &group_spec_to_json);

  m.def("parse_spec", &parse_group_spec, py::arg("json_text"));
  m.def("load_spec", &load_group_spec, py::arg("path"));
  m.def("builtin_spec", &builtin_spec, py::arg("name"));
  m.def("builtin_spec_names", &builtin_spec_names);

  m.def(
      "m_alpha",
      [](int d, int j, const std::string& field) {
        return m_alpha(
            RootSystem(d, field == "C" ? Field::Complex : Field::Real), j);
      },
      py::arg("d"), py::arg("j"), py::arg("field") = "R");

  m.def("jordan_projection", &jordan_projection, py::arg("g"),
        "Non-increasing log moduli of the eigenvalues");

  m.def(
      "period_spectrum",
      [](const GroupSpec& spec, int max_len, const std::vector<int>& theta_in,
         const std::vector<double>& s_in) {
        const ThetaSet theta =
            theta_in.empty() ? spec.theta : make_theta(theta_in, spec.d);
        const WeightVector s = weights_from_list(theta, s_in);
        py::list out;
        for (const auto& r : period_spectrum(spec, theta, s, max_len)) {
          py::dict row;
          row["word"] = word_to_string(r.word, spec);
          row["len"] = r.word.length();
          row["lambda"] = r.lambda;
          row["period"] = r.period;
          row["margin_min"] = r.margin_min;
          row["proximal"] = r.proximal;
          out.append(row);
        }
        return out;
      },
      py::arg("spec"), py::arg("max_len") = 6,
      py::arg("theta") = std::vector<int>{},
      py::arg("s") = std::vector<double>{});

  m.def(
      "is_admissible",
      [](const GroupSpec& spec, const std::vector<double>& s_in, int max_len) {
        const RootSystem rs(spec.d, spec.field);
        const WeightVector s = weights_from_list(spec.theta, s_in);
        const auto v = is_admissible(rs, spec.theta, s,
                                     limit_cone_sample(spec, spec.theta,
                                                       max_len));
        py::dict out;
        out["admissible"] = v.admissible;
        out["margin"] = v.margin;
        out["n_samples"] = v.n_samples;
        return out;
      },
      py::arg("spec"), py::arg("s") = std::vector<double>{},
      py::arg("max_len") = 4);

  m.def(
      "log_zeta",
      [](const GroupSpec& spec, std::complex<double> z, int max_len,
         const std::vector<double>& s_in, const std::string& mode) {
        ZetaJob job;
        job.spec = spec;
        job.theta = spec.theta;
        job.s = weights_from_list(spec.theta, s_in);
        job.z = z;
        job.maxLen = max_len;
        job.mode =
            mode == "series" ? ZetaMode::TraceSeries : ZetaMode::Product;
        const ZetaResult r = zeta_truncated(job);
        py::dict out;
        out["log_zeta"] = r.log_zeta;
        out["n_classes"] = r.n_classes;
        out["min_period"] = r.min_period;
        out["tail_estimate"] = r.tail_estimate;
        out["empirical_abscissa"] = r.empirical_abscissa;
        out["warnings"] = r.warnings;
        return out;
      },
      py::arg("spec"), py::arg("z"), py::arg("max_len") = 6,
      py::arg("s") = std::vector<double>{}, py::arg("mode") = "product");

  m.def(
      "contact_test",
      [](int d, const std::string& field, const std::vector<int>& theta_in,
         const std::vector<double>& s_in) {
        const RootSystem rs(d,
                            field == "C" ? Field::Complex : Field::Real);
        const ThetaSet theta =
            theta_in.empty() ? full_theta(d) : make_theta(theta_in, d);
        const WeightVector s = weights_from_list(theta, s_in);
        py::dict out;
        for (const auto& [k, v] : contact_test(rs, theta, s))
          out[py::int_(k)] = v;
        return out;
      },
      py::arg("d"), py::arg("field") = "R",
      py::arg("theta") = std::vector<int>{},
      py::arg("s") = std::vector<double>{});

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& suite, uint64_t seed) {
        py::list out;
        for (const auto& r : run_suite(suite, seed)) {
          py::dict row;
          row["id"] = r.id;
          row["pass"] = r.pass;
          row["max_error"] = r.max_error;
          row["tolerance"] = r.tolerance;
          row["detail"] = r.detail;
          out.append(row);
        }
        return out;
      },
      py::arg("suite") = "all", py::arg("seed") = 7);
  m.def(
      "check_report",
      [](const std::string& suite, uint64_t seed) {
        return format_report(suite, seed, run_suite(suite, seed));
      },
      py::arg("suite") = "all", py::arg("seed") = 7);
}
