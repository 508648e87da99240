// Python bindings for the robustmedian core: binomial machinery, interval
// and test design, asymptotic robustness measures, the Monte Carlo engine,
// and the benchmark tables.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "robustmedian/asymptotic.hpp"
#include "robustmedian/binomial.hpp"
#include "robustmedian/design.hpp"
#include "robustmedian/distributions.hpp"
#include "robustmedian/io.hpp"
#include "robustmedian/monte_carlo.hpp"
#include "robustmedian/report.hpp"
#include "robustmedian/tables.hpp"

namespace py = pybind11;
using namespace robmed;

PYBIND11_MODULE(_robustmedian, m) {
  m.doc() = "robust nonparametric confidence intervals and sign tests for "
            "the median under eps-contamination";

  // binomial core
  m.def("binom_cdf",
        [](std::int64_t n, double p, std::int64_t k) {
          return binom_cdf(BinomialSpec(n, p), k);
        },
        py::arg("n"), py::arg("p"), py::arg("k"),
        "P(Z <= k) for Z ~ Binomial(n, p)");
  m.def("binom_log_cdf",
        [](std::int64_t n, double p, std::int64_t k) {
          return binom_log_cdf(BinomialSpec(n, p), k);
        },
        py::arg("n"), py::arg("p"), py::arg("k"));
  m.def("binom_pmf", &binom_pmf, py::arg("n"), py::arg("x"), py::arg("p"));
  m.def("classical_alpha", &classical_alpha, py::arg("n"), py::arg("k"));
  m.def("h_interior", &h_interior, py::arg("n"), py::arg("k"), py::arg("p"));
  m.def("alpha_star", &alpha_star, py::arg("n"), py::arg("k"),
        py::arg("eps"));
  m.def("min_coverage", &min_coverage, py::arg("n"), py::arg("k"),
        py::arg("eps"));

  // design
  py::enum_<KSelectionRule>(m, "KSelectionRule")
      .value("NearestLevel", KSelectionRule::NearestLevel)
      .value("Conservative", KSelectionRule::Conservative);

  py::class_<DesignSpec>(m, "DesignSpec")
      .def_readonly("n", &DesignSpec::n)
      .def_readonly("alpha_target", &DesignSpec::alpha_target)
      .def_readonly("eps", &DesignSpec::eps)
      .def_readonly("k", &DesignSpec::k)
      .def_readonly("alpha_achieved", &DesignSpec::alpha_achieved)
      .def_readonly("degenerate", &DesignSpec::degenerate)
      .def("__repr__", [](const DesignSpec& s) {
        return "DesignSpec(n=" + std::to_string(s.n) +
               ", k=" + std::to_string(s.k) +
               ", alpha_achieved=" + std::to_string(s.alpha_achieved) + ")";
      });

  py::class_<Sample>(m, "Sample")
      .def(py::init<std::vector<double>>(), py::arg("values"))
      .def_property_readonly("n", &Sample::size)
      .def_property_readonly("sorted", &Sample::sorted)
      .def("tie_count_at", &Sample::tie_count_at, py::arg("theta"))
      .def("order_statistic", &Sample::order_statistic, py::arg("r"));

  m.def("select_k", &select_k, py::arg("n"), py::arg("alpha_target"),
        py::arg("eps"), py::arg("rule") = KSelectionRule::NearestLevel);

  py::class_<RobustInterval>(m, "RobustInterval")
      .def_readonly("lower", &RobustInterval::lower)
      .def_readonly("upper", &RobustInterval::upper)
      .def_readonly("k", &RobustInterval::k)
      .def_readonly("min_coverage", &RobustInterval::min_coverage)
      .def("contains", &RobustInterval::contains, py::arg("theta"))
      .def("__repr__", [](const RobustInterval& iv) {
        return "[" + std::to_string(iv.lower) + ", " +
               std::to_string(iv.upper) + ")";
      });

  m.def("build_interval", &build_interval, py::arg("sample"),
        py::arg("spec"));
  m.def("sign_statistic", &sign_statistic, py::arg("sample"),
        py::arg("theta0"));

  py::enum_<ToleranceStatus>(m, "ToleranceStatus")
      .value("Value", ToleranceStatus::Value)
      .value("NotSignificantEvenClean",
             ToleranceStatus::NotSignificantEvenClean)
      .value("CappedAtHalf", ToleranceStatus::CappedAtHalf);

  py::class_<ContaminationTolerance>(m, "ContaminationTolerance")
      .def_readonly("status", &ContaminationTolerance::status)
      .def_readonly("value", &ContaminationTolerance::value)
      .def("__repr__", [](const ContaminationTolerance& t) {
        return tolerance_to_string(t);
      });

  m.def("contamination_tolerance", &contamination_tolerance, py::arg("n"),
        py::arg("t"), py::arg("alpha_target"));

  py::class_<SignTestOutcome>(m, "SignTestOutcome")
      .def_readonly("statistic", &SignTestOutcome::statistic)
      .def_readonly("deviation", &SignTestOutcome::deviation)
      .def_readonly("reject", &SignTestOutcome::reject)
      .def_readonly("alpha_achieved", &SignTestOutcome::alpha_achieved)
      .def_readonly("tolerance", &SignTestOutcome::tolerance)
      .def_readonly("ties_at_theta0", &SignTestOutcome::ties_at_theta0);

  m.def("robust_sign_test", &robust_sign_test, py::arg("sample"),
        py::arg("theta0"), py::arg("spec"));

  // distributions and asymptotic measures
  m.def("normal_cdf", &normal_cdf, py::arg("z"));
  m.def("normal_quantile", &normal_quantile, py::arg("u"));

  py::class_<TargetDistribution>(m, "TargetDistribution")
      .def_static("normal", &TargetDistribution::normal, py::arg("mu") = 0.0,
                  py::arg("sigma") = 1.0)
      .def_static("laplace", &TargetDistribution::laplace, py::arg("mu") = 0.0,
                  py::arg("b") = 1.0)
      .def_static("cauchy", &TargetDistribution::cauchy, py::arg("mu") = 0.0,
                  py::arg("gamma") = 1.0)
      .def_static("logistic", &TargetDistribution::logistic,
                  py::arg("mu") = 0.0, py::arg("s") = 1.0)
      .def_static("uniform", &TargetDistribution::uniform, py::arg("mu") = 0.0,
                  py::arg("half_width") = 1.0)
      .def_static("from_name", &TargetDistribution::from_name,
                  py::arg("name"), py::arg("mu") = 0.0,
                  py::arg("scale") = 1.0)
      .def_property_readonly("name", &TargetDistribution::name)
      .def_property_readonly("location", &TargetDistribution::location)
      .def_property_readonly("scale", &TargetDistribution::scale)
      .def("quantile", &TargetDistribution::quantile, py::arg("u"))
      .def("cdf", &TargetDistribution::cdf, py::arg("x"));

  m.def("max_asymptotic_length", &max_asymptotic_length, py::arg("dist"),
        py::arg("eps"), py::arg("delta"));
  m.def("length_breakdown", &length_breakdown, py::arg("eps"));
  m.def("is_length_robust", &is_length_robust, py::arg("eps"));
  m.def("optimal_limit_bounds", &optimal_limit_bounds, py::arg("dist"),
        py::arg("eps"));
  m.def("consistency_distance", &consistency_distance, py::arg("dist"),
        py::arg("eps"), py::arg("delta"));
  m.def("power_breakdown", &power_breakdown, py::arg("eps"));
  m.def("is_power_robust", &is_power_robust, py::arg("eps"));
  m.def("parametric_length", &parametric_length, py::arg("eps"));

  // monte carlo
  py::enum_<Placement>(m, "Placement")
      .value("PlusInfinityLimit", Placement::PlusInfinityLimit)
      .value("MinusInfinityLimit", Placement::MinusInfinityLimit)
      .value("Point", Placement::Point);

  py::class_<ContaminationScenario>(m, "ContaminationScenario")
      .def(py::init<>())
      .def_readwrite("eps_design", &ContaminationScenario::eps_design)
      .def_readwrite("delta_actual", &ContaminationScenario::delta_actual)
      .def_readwrite("placement", &ContaminationScenario::placement)
      .def_readwrite("point", &ContaminationScenario::point);

  py::class_<MCConfig>(m, "MCConfig")
      .def(py::init<>())
      .def_readwrite("dist", &MCConfig::dist)
      .def_readwrite("scenario", &MCConfig::scenario)
      .def_readwrite("n", &MCConfig::n)
      .def_readwrite("alpha_target", &MCConfig::alpha_target)
      .def_readwrite("reps", &MCConfig::reps)
      .def_readwrite("seed", &MCConfig::seed)
      .def_readwrite("contamination_value", &MCConfig::contamination_value)
      .def_readwrite("workers", &MCConfig::workers);

  py::class_<MCSummary>(m, "MCSummary")
      .def_readonly("mean_length", &MCSummary::mean_length)
      .def_readonly("se_length", &MCSummary::se_length)
      .def_readonly("coverage_freq", &MCSummary::coverage_freq)
      .def_readonly("se_coverage", &MCSummary::se_coverage)
      .def_readonly("reps_used", &MCSummary::reps_used)
      .def_readonly("infinite_length_count",
                    &MCSummary::infinite_length_count);

  m.def("sample_contaminated", &sample_contaminated, py::arg("config"),
        py::arg("rep_index"));
  m.def("estimate_expected_length", &estimate_expected_length,
        py::arg("config"), py::call_guard<py::gil_scoped_release>());
  m.def("estimate_coverage", &estimate_coverage, py::arg("config"),
        py::arg("theta_true"), py::call_guard<py::gil_scoped_release>());

  // tables
  py::enum_<TableFormat>(m, "TableFormat")
      .value("Text", TableFormat::Text)
      .value("Csv", TableFormat::Csv)
      .value("Json", TableFormat::Json);

  py::class_<TableRequest>(m, "TableRequest")
      .def(py::init<>())
      .def_readwrite("which", &TableRequest::which)
      .def_readwrite("n_grid", &TableRequest::n_grid)
      .def_readwrite("eps_grid", &TableRequest::eps_grid)
      .def_readwrite("levels", &TableRequest::levels)
      .def_readwrite("reps", &TableRequest::reps)
      .def_readwrite("seed", &TableRequest::seed)
      .def_readwrite("contamination_value", &TableRequest::contamination_value)
      .def_readwrite("workers", &TableRequest::workers);

  m.def("run_table", &run_table, py::arg("request"), py::arg("format"),
        py::call_guard<py::gil_scoped_release>());

  m.attr("__version__") = "0.1.0";
}
