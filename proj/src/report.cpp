#include "robustmedian/report.hpp"

#include <cstdio>
#include <sstream>

namespace robmed {

namespace {

std::string num(double v, const char* pattern = "%.10g") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

AnalysisReport base_report(const Sample& sample, double alpha_target,
                           double eps, KSelectionRule rule) {
  const DesignSpec spec = select_k(sample.size(), alpha_target, eps, rule);
  AnalysisReport r;
  r.n = sample.size();
  r.alpha_target = alpha_target;
  r.eps = eps;
  r.k = spec.k;
  r.alpha_achieved = spec.alpha_achieved;
  r.min_coverage = 1.0 - spec.alpha_achieved;
  const RobustInterval iv = build_interval(sample, spec);
  r.lower = iv.lower;
  r.upper = iv.upper;
  if (spec.degenerate)
    r.warnings.push_back(
        "degenerate design: even k = 0 has minimum coverage below 0.5");
  return r;
}

}  // namespace

std::string tolerance_to_string(const ContaminationTolerance& tol) {
  switch (tol.status) {
    case ToleranceStatus::NotSignificantEvenClean:
      return "not-significant-even-clean";
    case ToleranceStatus::CappedAtHalf:
      return "capped-at-1/2";
    case ToleranceStatus::Value:
      return num(tol.value);
  }
  return "unknown";
}

AnalysisReport analyze_interval(const Sample& sample, double alpha_target,
                                double eps, KSelectionRule rule) {
  return base_report(sample, alpha_target, eps, rule);
}

AnalysisReport analyze_test(const Sample& sample, double theta0,
                            double alpha_target, double eps,
                            KSelectionRule rule) {
  AnalysisReport r = base_report(sample, alpha_target, eps, rule);
  const DesignSpec spec = select_k(sample.size(), alpha_target, eps, rule);
  const SignTestOutcome out = robust_sign_test(sample, theta0, spec);
  r.theta0 = theta0;
  r.statistic_t = out.statistic;
  r.r_n = out.deviation;
  r.reject = out.reject;
  r.tolerance = out.tolerance;
  if (out.ties_at_theta0 > 0)
    r.warnings.push_back(
        std::to_string(out.ties_at_theta0) +
        " observation(s) exactly equal to theta0; ties count as "
        "non-positive signs");
  return r;
}

std::string AnalysisReport::to_text() const {
  std::ostringstream out;
  out << "inputs: n=" << n << " alpha=" << num(alpha_target)
      << " eps=" << num(eps);
  if (theta0) out << " theta0=" << num(*theta0);
  out << '\n';
  out << "design: k=" << k << " alpha_achieved=" << num(alpha_achieved)
      << " min_coverage=" << num(min_coverage) << '\n';
  out << "interval: [" << num(lower) << ", " << num(upper)
      << ")  (half-open; the upper endpoint is excluded)\n";
  if (reject) {
    out << "test: T=" << *statistic_t << " r_n=" << *r_n << " decision="
        << (*reject ? "reject" : "accept") << '\n';
    out << "contamination_tolerance: " << tolerance_to_string(*tolerance)
        << '\n';
  }
  for (const auto& w : warnings) out << "warning: " << w << '\n';
  return out.str();
}

std::string AnalysisReport::to_csv() const {
  std::ostringstream out;
  out << "n,alpha_target,eps,theta0,k,alpha_achieved,min_coverage,lower,"
         "upper,statistic_t,r_n,reject,tolerance,warnings\n";
  out << n << ',' << num(alpha_target) << ',' << num(eps) << ',';
  if (theta0) out << num(*theta0);
  out << ',' << k << ',' << num(alpha_achieved) << ',' << num(min_coverage)
      << ',' << num(lower) << ',' << num(upper) << ',';
  if (statistic_t) out << *statistic_t;
  out << ',';
  if (r_n) out << *r_n;
  out << ',';
  if (reject) out << (*reject ? "true" : "false");
  out << ',';
  if (tolerance) out << tolerance_to_string(*tolerance);
  out << ',';
  std::string joined;
  for (const auto& w : warnings) {
    if (!joined.empty()) joined += "; ";
    joined += w;
  }
  out << '"' << joined << '"' << '\n';
  return out.str();
}

std::string AnalysisReport::to_json() const {
  std::ostringstream out;
  out << "{\n";
  out << "  \"n\": " << n << ",\n";
  out << "  \"alpha_target\": " << num(alpha_target) << ",\n";
  out << "  \"eps\": " << num(eps) << ",\n";
  if (theta0) out << "  \"theta0\": " << num(*theta0) << ",\n";
  out << "  \"k\": " << k << ",\n";
  out << "  \"alpha_achieved\": " << num(alpha_achieved) << ",\n";
  out << "  \"min_coverage\": " << num(min_coverage) << ",\n";
  out << "  \"lower\": " << num(lower) << ",\n";
  out << "  \"upper\": " << num(upper) << ",\n";
  out << "  \"convention\": \"" << kConvention << "\",\n";
  if (statistic_t) out << "  \"statistic_t\": " << *statistic_t << ",\n";
  if (r_n) out << "  \"r_n\": " << *r_n << ",\n";
  if (reject) out << "  \"reject\": " << (*reject ? "true" : "false") << ",\n";
  if (tolerance) {
    out << "  \"tolerance\": {\"status\": \"";
    switch (tolerance->status) {
      case ToleranceStatus::Value: out << "value"; break;
      case ToleranceStatus::NotSignificantEvenClean:
        out << "not-significant-even-clean";
        break;
      case ToleranceStatus::CappedAtHalf: out << "capped-at-1/2"; break;
    }
    out << "\"";
    if (tolerance->status == ToleranceStatus::Value)
      out << ", \"value\": " << num(tolerance->value);
    out << "},\n";
  }
  out << "  \"warnings\": [";
  for (std::size_t i = 0; i < warnings.size(); ++i) {
    out << '"' << json_escape(warnings[i]) << '"'
        << (i + 1 < warnings.size() ? ", " : "");
  }
  out << "]\n}\n";
  return out.str();
}

}  // namespace robmed
