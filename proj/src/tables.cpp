#include "robustmedian/tables.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "robustmedian/asymptotic.hpp"
#include "robustmedian/binomial.hpp"
#include "robustmedian/rng.hpp"

namespace robmed {

namespace {

const std::vector<std::int64_t> kTable1N = {20, 40, 100, 200, 500, 1000, 2000};
const std::vector<double> kTable1Eps = {0.0, 0.05, 0.10, 0.15};
const std::vector<double> kTable1Levels = {0.05, 0.10};
const std::vector<std::int64_t> kTable23N = {20,  40,  60,   80,  100,
                                             200, 500, 1000, 2000};
const std::vector<double> kTable23Eps = {0.0, 0.05, 0.10};
const std::vector<double> kTable4Eps = {0.05, 0.10, 0.15, 0.20};

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

// Stable per-cell seed so every Monte Carlo cell has its own substream
// family regardless of grid shape or evaluation order.
std::uint64_t cell_seed(std::uint64_t seed, std::int64_t n, double eps,
                        int tag) {
  std::uint64_t h = seed;
  h = substream_seed(h, static_cast<std::uint64_t>(n));
  h = substream_seed(h, static_cast<std::uint64_t>(std::llround(eps * 1e6)));
  h = substream_seed(h, static_cast<std::uint64_t>(tag));
  return h;
}

}  // namespace

TableFormat table_format_from_name(const std::string& name) {
  if (name == "text") return TableFormat::Text;
  if (name == "csv") return TableFormat::Csv;
  if (name == "json") return TableFormat::Json;
  throw std::domain_error("unknown format: " + name +
                          " (expected text, csv or json)");
}

std::vector<Table1Row> table1(const TableRequest& req) {
  const auto& ns = req.n_grid.empty() ? kTable1N : req.n_grid;
  const auto& eps = req.eps_grid.empty() ? kTable1Eps : req.eps_grid;
  const auto& levels = req.levels.empty() ? kTable1Levels : req.levels;
  std::vector<Table1Row> rows;
  for (std::int64_t n : ns) {
    for (double alpha : levels) {
      const DesignSpec classical = select_k(n, alpha, 0.0);
      for (double e : eps) {
        Table1Row row;
        row.n = n;
        row.alpha_target = alpha;
        row.eps = e;
        row.k = classical.k;
        row.min_coverage = min_coverage(n, classical.k, e);
        rows.push_back(row);
      }
    }
  }
  return rows;
}

std::vector<Table23Row> table23(const TableRequest& req) {
  const double alpha =
      !req.levels.empty() ? req.levels[0] : (req.which == 3 ? 0.10 : 0.05);
  const auto& ns = req.n_grid.empty() ? kTable23N : req.n_grid;
  const auto& eps = req.eps_grid.empty() ? kTable23Eps : req.eps_grid;
  std::vector<Table23Row> rows;
  for (std::int64_t n : ns) {
    for (double e : eps) {
      const DesignSpec spec = select_k(n, alpha, e);
      Table23Row row;
      row.n = n;
      row.eps = e;
      row.k = spec.k;
      row.alpha_achieved = spec.alpha_achieved;
      row.cp_exact = 1.0 - spec.alpha_achieved;

      MCConfig config;
      config.dist = TargetDistribution::normal();
      config.n = n;
      config.alpha_target = alpha;
      config.reps = req.reps;
      config.contamination_value = req.contamination_value;
      config.workers = req.workers;
      config.scenario.eps_design = e;
      config.scenario.placement = Placement::PlusInfinityLimit;

      config.scenario.delta_actual = 0.0;
      config.seed = cell_seed(req.seed, n, e, /*tag=*/0);
      const MCSummary elu = estimate_expected_length(config);
      row.elu_mean = elu.mean_length;
      row.elu_se = elu.se_length;

      if (e > 0.0) {
        config.scenario.delta_actual = e;
        config.seed = cell_seed(req.seed, n, e, /*tag=*/1);
        const MCSummary elc = estimate_expected_length(config);
        row.has_elc = true;
        row.elc_mean = elc.mean_length;
        row.elc_se = elc.se_length;
        row.elc_infinite = elc.infinite_length_count;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<Table4Row> table4(const TableRequest& req) {
  const auto& eps = req.eps_grid.empty() ? kTable4Eps : req.eps_grid;
  const TargetDistribution normal = TargetDistribution::normal();
  std::vector<Table4Row> rows;
  for (double e : eps) {
    Table4Row row;
    row.eps = e;
    row.parametric = parametric_length(e);
    row.np_standard_normal = max_asymptotic_length(normal, e, 0.0);
    row.np_least_favorable = max_asymptotic_length(normal, e, e);
    rows.push_back(row);
  }
  return rows;
}

std::string render_table1(const std::vector<Table1Row>& rows,
                          TableFormat format) {
  std::ostringstream out;
  if (format == TableFormat::Csv) {
    out << "n,level,eps,k,min_coverage\n";
    for (const auto& r : rows)
      out << r.n << ',' << fmt("%.2f", 1.0 - r.alpha_target) << ','
          << fmt("%.2f", r.eps) << ',' << r.k << ','
          << fmt("%.6f", r.min_coverage) << '\n';
  } else if (format == TableFormat::Json) {
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      out << "  {\"n\": " << r.n << ", \"level\": "
          << fmt("%.2f", 1.0 - r.alpha_target) << ", \"eps\": "
          << fmt("%.2f", r.eps) << ", \"k\": " << r.k
          << ", \"min_coverage\": " << fmt("%.6f", r.min_coverage) << "}"
          << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    out << "]\n";
  } else {
    out << "table 1: minimum coverage of classically designed sign-test "
           "intervals under contamination\n"
        << "       n  level    k      eps  min_coverage\n";
    for (const auto& r : rows) {
      char line[128];
      std::snprintf(line, sizeof(line), "%8lld   %.2f  %3lld     %.2f      %8.6f\n",
                    static_cast<long long>(r.n), 1.0 - r.alpha_target,
                    static_cast<long long>(r.k), r.eps, r.min_coverage);
      out << line;
    }
  }
  return out.str();
}

std::string render_table23(const std::vector<Table23Row>& rows,
                           TableFormat format, double alpha_target) {
  std::ostringstream out;
  if (format == TableFormat::Csv) {
    out << "n,eps,k,cp_exact,elu_mean,elu_se,elc_mean,elc_se\n";
    for (const auto& r : rows) {
      out << r.n << ',' << fmt("%.2f", r.eps) << ',' << r.k << ','
          << fmt("%.6f", r.cp_exact) << ',' << fmt("%.6f", r.elu_mean) << ','
          << fmt("%.6f", r.elu_se) << ',';
      if (r.has_elc)
        out << fmt("%.6f", r.elc_mean) << ',' << fmt("%.6f", r.elc_se);
      else
        out << ',';
      out << '\n';
    }
  } else if (format == TableFormat::Json) {
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      out << "  {\"n\": " << r.n << ", \"eps\": " << fmt("%.2f", r.eps)
          << ", \"k\": " << r.k << ", \"alpha_achieved\": "
          << fmt("%.6f", r.alpha_achieved) << ", \"cp_exact\": "
          << fmt("%.6f", r.cp_exact) << ", \"elu_mean\": "
          << fmt("%.6f", r.elu_mean) << ", \"elu_se\": "
          << fmt("%.6f", r.elu_se);
      if (r.has_elc)
        out << ", \"elc_mean\": " << fmt("%.6f", r.elc_mean)
            << ", \"elc_se\": " << fmt("%.6f", r.elc_se)
            << ", \"elc_infinite\": " << r.elc_infinite;
      out << "}" << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    out << "]\n";
  } else {
    char header[160];
    std::snprintf(header, sizeof(header),
                  "robust interval, target level %.2f (achieved level per "
                  "row)\n       n   eps    k  cp_exact       elu(se)         "
                  " elc(se)\n",
                  alpha_target);
    out << header;
    for (const auto& r : rows) {
      char line[200];
      if (r.has_elc)
        std::snprintf(line, sizeof(line),
                      "%8lld  %.2f  %3lld    %.4f  %7.4f(%.4f)  %7.4f(%.4f)\n",
                      static_cast<long long>(r.n), r.eps,
                      static_cast<long long>(r.k), r.cp_exact, r.elu_mean,
                      r.elu_se, r.elc_mean, r.elc_se);
      else
        std::snprintf(line, sizeof(line),
                      "%8lld  %.2f  %3lld    %.4f  %7.4f(%.4f)\n",
                      static_cast<long long>(r.n), r.eps,
                      static_cast<long long>(r.k), r.cp_exact, r.elu_mean,
                      r.elu_se);
      out << line;
    }
  }
  return out.str();
}

std::string render_table4(const std::vector<Table4Row>& rows,
                          TableFormat format) {
  std::ostringstream out;
  if (format == TableFormat::Csv) {
    out << "eps,parametric,np_standard_normal,np_least_favorable\n";
    for (const auto& r : rows)
      out << fmt("%.2f", r.eps) << ',' << fmt("%.6f", r.parametric) << ','
          << fmt("%.6f", r.np_standard_normal) << ','
          << fmt("%.6f", r.np_least_favorable) << '\n';
  } else if (format == TableFormat::Json) {
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      out << "  {\"eps\": " << fmt("%.2f", r.eps) << ", \"parametric\": "
          << fmt("%.6f", r.parametric) << ", \"np_standard_normal\": "
          << fmt("%.6f", r.np_standard_normal)
          << ", \"np_least_favorable\": "
          << fmt("%.6f", r.np_least_favorable) << "}"
          << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    out << "]\n";
  } else {
    out << "limiting lengths of parametric (P) and nonparametric (NP) "
           "robust intervals, normal target\n"
        << "  eps        P   NP(clean)   NP(least favorable)\n";
    for (const auto& r : rows) {
      char line[128];
      std::snprintf(line, sizeof(line), " %.2f   %.4f      %.4f                %.4f\n",
                    r.eps, r.parametric, r.np_standard_normal,
                    r.np_least_favorable);
      out << line;
    }
  }
  return out.str();
}

std::string run_table(const TableRequest& req, TableFormat format) {
  switch (req.which) {
    case 1:
      return render_table1(table1(req), format);
    case 2:
    case 3: {
      const double alpha =
          !req.levels.empty() ? req.levels[0] : (req.which == 3 ? 0.10 : 0.05);
      return render_table23(table23(req), format, alpha);
    }
    case 4:
      return render_table4(table4(req), format);
    default:
      throw std::domain_error("table: --which must be 1, 2, 3 or 4");
  }
}

}  // namespace robmed
