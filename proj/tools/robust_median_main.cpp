// robust-median: confidence intervals and two-sided sign tests for the
// median that keep their level over an eps-contamination neighborhood of
// the data distribution.
//
// Subcommands: interval, test, tolerance, coverage, length, table.
// Exit codes: 0 success, 2 usage error, 3 data error, 4 numeric-domain
// error.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "robustmedian/asymptotic.hpp"
#include "robustmedian/binomial.hpp"
#include "robustmedian/design.hpp"
#include "robustmedian/io.hpp"
#include "robustmedian/report.hpp"
#include "robustmedian/tables.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 20040932;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ROBUST_MEDIAN_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
    std::cerr << "warning: ignoring non-numeric ROBUST_MEDIAN_SEED=\"" << env
              << "\"\n";
  }
  return kDefaultSeed;
}

struct CommonOpts {
  std::string data_path;
  double alpha = 0.05;
  double eps = 0.05;
  std::string format = "text";
  bool conservative = false;

  robmed::KSelectionRule rule() const {
    return conservative ? robmed::KSelectionRule::Conservative
                        : robmed::KSelectionRule::NearestLevel;
  }
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_data = true) {
  if (with_data)
    cmd->add_option("--data", opts.data_path, "input data file")->required();
  cmd->add_option("--alpha", opts.alpha, "target level (default 0.05)");
  cmd->add_option("--eps", opts.eps,
                  "design contamination fraction (default 0.05)");
  cmd->add_option("--format", opts.format, "text, csv or json");
  cmd->add_flag("--conservative", opts.conservative,
                "pick the largest k with achieved level <= alpha instead of "
                "the nearest level");
}

void print_report(const robmed::AnalysisReport& report,
                  const std::string& format) {
  if (format == "json")
    std::cout << report.to_json();
  else if (format == "csv")
    std::cout << report.to_csv();
  else if (format == "text")
    std::cout << report.to_text();
  else
    throw std::domain_error("unknown format: " + format);
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "robust nonparametric confidence intervals and sign tests for the "
      "median under eps-contamination"};
  app.require_subcommand(1);

  CommonOpts iv_opts;
  CLI::App* cmd_interval = app.add_subcommand(
      "interval", "order-statistic interval with exact minimum coverage");
  add_common(cmd_interval, iv_opts);

  CommonOpts test_opts;
  double theta0 = 0.0;
  CLI::App* cmd_test =
      app.add_subcommand("test", "two-sided robust sign test of theta0");
  add_common(cmd_test, test_opts);
  cmd_test->add_option("--theta0", theta0, "hypothesized median")->required();

  CommonOpts tol_opts;
  double tol_theta0 = 0.0;
  std::int64_t tol_n = 0;
  std::int64_t tol_t = -1;
  CLI::App* cmd_tol = app.add_subcommand(
      "tolerance",
      "largest design eps at which the level-alpha test still rejects");
  cmd_tol->add_option("--data", tol_opts.data_path, "input data file");
  cmd_tol->add_option("--theta0", tol_theta0, "hypothesized median")
      ->needs(cmd_tol->get_option("--data"));
  cmd_tol->get_option("--data")->needs(cmd_tol->get_option("--theta0"));
  cmd_tol->add_option("--n", tol_n, "sample size (when no data file)");
  cmd_tol->add_option("--t", tol_t, "sign statistic T (when no data file)");
  cmd_tol->add_option("--alpha", tol_opts.alpha, "target level");
  cmd_tol->add_option("--format", tol_opts.format, "text, csv or json");

  std::int64_t cov_n = 0, cov_k = 0;
  double cov_eps = 0.05;
  std::string cov_format = "text";
  CLI::App* cmd_cov = app.add_subcommand(
      "coverage", "exact minimum coverage of the (n, k) interval at eps");
  cmd_cov->add_option("--n", cov_n, "sample size")->required();
  cmd_cov->add_option("--k", cov_k, "acceptance index")->required();
  cmd_cov->add_option("--eps", cov_eps, "contamination fraction");
  cmd_cov->add_option("--format", cov_format, "text, csv or json");

  std::string len_dist = "normal";
  double len_mu = 0.0, len_scale = 1.0, len_eps = 0.05, len_delta = 0.0;
  std::string len_format = "text";
  CLI::App* cmd_len = app.add_subcommand(
      "length", "asymptotic length and power robustness measures");
  cmd_len->add_option("--dist", len_dist,
                      "normal, laplace, cauchy, logistic or uniform");
  cmd_len->add_option("--location", len_mu, "distribution location (median)");
  cmd_len->add_option("--scale", len_scale, "distribution scale");
  cmd_len->add_option("--eps", len_eps, "design contamination fraction");
  cmd_len->add_option("--delta", len_delta, "actual contamination fraction");
  cmd_len->add_option("--format", len_format, "text, csv or json");

  robmed::TableRequest table_req;
  table_req.seed = default_seed();
  std::string table_format = "text";
  double contam_location = std::numeric_limits<double>::quiet_NaN();
  CLI::App* cmd_table = app.add_subcommand(
      "table", "reproduce one of the built-in benchmark tables 1-4");
  cmd_table->add_option("--which", table_req.which, "table number 1-4")
      ->required()
      ->check(CLI::Range(1, 4));
  cmd_table->add_option("--reps", table_req.reps,
                        "Monte Carlo replications (default 8000)");
  cmd_table->add_option("--seed", table_req.seed,
                        "RNG seed (default from ROBUST_MEDIAN_SEED)");
  cmd_table->add_option("--contam-location", contam_location,
                        "finite stand-in for contamination at +infinity");
  cmd_table->add_option("--workers", table_req.workers,
                        "worker threads for Monte Carlo cells");
  cmd_table->add_option("--n", table_req.n_grid, "override the n grid");
  cmd_table->add_option("--eps", table_req.eps_grid, "override the eps grid");
  cmd_table->add_option("--level", table_req.levels,
                        "override the target level(s)");
  cmd_table->add_option("--format", table_format, "text, csv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_interval->parsed()) {
      robmed::Sample sample(robmed::read_data_file(iv_opts.data_path));
      print_report(robmed::analyze_interval(sample, iv_opts.alpha,
                                            iv_opts.eps, iv_opts.rule()),
                   iv_opts.format);
    } else if (cmd_test->parsed()) {
      robmed::Sample sample(robmed::read_data_file(test_opts.data_path));
      print_report(robmed::analyze_test(sample, theta0, test_opts.alpha,
                                        test_opts.eps, test_opts.rule()),
                   test_opts.format);
    } else if (cmd_tol->parsed()) {
      if (!cmd_tol->get_option("--data")->empty()) {
        robmed::Sample sample(robmed::read_data_file(tol_opts.data_path));
        tol_n = sample.size();
        tol_t = robmed::sign_statistic(sample, tol_theta0);
      } else if (tol_n <= 0 || tol_t < 0) {
        std::cerr << "tolerance: provide either --data/--theta0 or --n/--t\n";
        return 2;
      }
      const auto tol =
          robmed::contamination_tolerance(tol_n, tol_t, tol_opts.alpha);
      const std::string value = robmed::tolerance_to_string(tol);
      if (tol_opts.format == "json") {
        std::cout << "{\"n\": " << tol_n << ", \"statistic_t\": " << tol_t
                  << ", \"alpha_target\": " << num(tol_opts.alpha)
                  << ", \"tolerance\": \"" << value << "\"}\n";
      } else if (tol_opts.format == "csv") {
        std::cout << "n,statistic_t,alpha_target,tolerance\n"
                  << tol_n << ',' << tol_t << ',' << num(tol_opts.alpha)
                  << ',' << value << '\n';
      } else {
        std::cout << "inputs: n=" << tol_n << " T=" << tol_t
                  << " alpha=" << num(tol_opts.alpha) << '\n'
                  << "contamination_tolerance: " << value << '\n';
      }
    } else if (cmd_cov->parsed()) {
      const double cov = robmed::min_coverage(cov_n, cov_k, cov_eps);
      if (cov_format == "json")
        std::cout << "{\"n\": " << cov_n << ", \"k\": " << cov_k
                  << ", \"eps\": " << num(cov_eps)
                  << ", \"min_coverage\": " << num(cov) << "}\n";
      else if (cov_format == "csv")
        std::cout << "n,k,eps,min_coverage\n"
                  << cov_n << ',' << cov_k << ',' << num(cov_eps) << ','
                  << num(cov) << '\n';
      else
        std::cout << "inputs: n=" << cov_n << " k=" << cov_k
                  << " eps=" << num(cov_eps) << '\n'
                  << "min_coverage: " << num(cov) << '\n';
    } else if (cmd_len->parsed()) {
      const auto dist =
          robmed::TargetDistribution::from_name(len_dist, len_mu, len_scale);
      const double max_len =
          robmed::max_asymptotic_length(dist, len_eps, len_delta);
      const double consist =
          robmed::consistency_distance(dist, len_eps, len_delta);
      const auto bounds = robmed::optimal_limit_bounds(dist, len_eps);
      const double breakdown = robmed::length_breakdown(len_eps);
      const bool robust = robmed::is_length_robust(len_eps);
      const double plen = robmed::parametric_length(len_eps);
      if (len_format == "json") {
        std::cout << "{\"dist\": \"" << dist.name() << "\", \"location\": "
                  << num(len_mu) << ", \"scale\": " << num(len_scale)
                  << ", \"eps\": " << num(len_eps) << ", \"delta\": "
                  << num(len_delta) << ", \"max_asymptotic_length\": "
                  << (std::isinf(max_len) ? std::string("\"unbounded\"")
                                          : num(max_len))
                  << ", \"consistency_distance\": "
                  << (std::isinf(consist) ? std::string("\"unbounded\"")
                                          : num(consist))
                  << ", \"optimal_bounds\": [" << num(bounds.first) << ", "
                  << num(bounds.second) << "], \"length_breakdown\": "
                  << num(breakdown) << ", \"is_length_robust\": "
                  << (robust ? "true" : "false")
                  << ", \"parametric_length\": " << num(plen) << "}\n";
      } else if (len_format == "csv") {
        std::cout << "dist,location,scale,eps,delta,max_asymptotic_length,"
                     "consistency_distance,optimal_lower,optimal_upper,"
                     "length_breakdown,is_length_robust,parametric_length\n"
                  << dist.name() << ',' << num(len_mu) << ',' << num(len_scale)
                  << ',' << num(len_eps) << ',' << num(len_delta) << ','
                  << (std::isinf(max_len) ? "unbounded" : num(max_len)) << ','
                  << (std::isinf(consist) ? "unbounded" : num(consist)) << ','
                  << num(bounds.first) << ',' << num(bounds.second) << ','
                  << num(breakdown) << ',' << (robust ? "true" : "false")
                  << ',' << num(plen) << '\n';
      } else {
        std::cout << "inputs: dist=" << dist.name() << " location="
                  << num(len_mu) << " scale=" << num(len_scale)
                  << " eps=" << num(len_eps) << " delta=" << num(len_delta)
                  << '\n'
                  << "max_asymptotic_length: "
                  << (std::isinf(max_len) ? "unbounded" : num(max_len)) << '\n'
                  << "consistency_distance: "
                  << (std::isinf(consist) ? "unbounded" : num(consist)) << '\n'
                  << "optimal_limit_bounds: [" << num(bounds.first) << ", "
                  << num(bounds.second) << "]\n"
                  << "length_breakdown (= power_breakdown): " << num(breakdown)
                  << '\n'
                  << "is_length_robust (= is_power_robust): "
                  << (robust ? "true" : "false") << '\n'
                  << "parametric_length: " << num(plen) << '\n';
      }
    } else if (cmd_table->parsed()) {
      table_req.contamination_value = contam_location;
      std::cout << robmed::run_table(
          table_req, robmed::table_format_from_name(table_format));
    }
  } catch (const robmed::DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
