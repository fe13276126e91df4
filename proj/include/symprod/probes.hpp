#pragma once

// Experiment probes and the reports they emit.

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symprod/contour.hpp"
#include "symprod/domain.hpp"
#include "symprod/induced.hpp"

namespace symprod {

enum class Verdict { pass, fail, informational };

const char* to_string(Verdict v);

using Cell = std::variant<long, double, cplx, std::string>;

/// One sample: ordered named cells.  Complex cells become [re, im] in JSON and
/// a name_re/name_im column pair in CSV.
struct SampleRow {
  std::vector<std::pair<std::string, Cell>> cells;

  SampleRow& add(std::string name, Cell value) {
    cells.emplace_back(std::move(name), std::move(value));
    return *this;
  }
};

struct ProbeReport {
  std::string probe;
  std::uint64_t seed = 0;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json quadrature = nlohmann::json::object();
  std::vector<SampleRow> samples;
  Verdict verdict = Verdict::informational;
  nlohmann::json fitted = nlohmann::json::object();
  nlohmann::json notes = nlohmann::json::array();

  nlohmann::json to_json() const;
  /// Pretty-printed with sorted keys; identical inputs give identical bytes.
  std::string to_json_string() const;
  std::string to_csv() const;
};

/// Classifies l(t) = (2 - b t, 1 - a t) by the closed form and by roots.
ProbeReport lipschitz_cone_probe(cplx a, cplx b, const std::vector<double>& t_values,
                                 double margin = 1e-12);

struct SmoothnessOptions {
  GradedOptions graded{40, 20};
  GradedOptions reference{56, 30};   // refined rule for the convergence estimate
  double rel_tol = 1e-8;             // points above this estimate are dropped
  std::size_t min_points = 6;
};

/// Slope of log|J u_beta| against log(1 - w) along the diagonal, u_beta = (1 - t)^beta
/// on the unit disc.
ProbeReport smoothness_loss_probe(int m, int n, double beta, const std::vector<double>& w_grid,
                                  const SmoothnessOptions& opts = {});

/// Least-squares line with a normal-approximation 95% interval on the slope.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  std::size_t points = 0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

struct SweepConfig {
  DomainSpec domain = DomainSpec::unit_disc();
  std::size_t n = 2;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::vector<std::string> suites;
  std::size_t max_rows = 1000;       // recorded rows per suite
  double band = 1e-9;                // membership comparisons skip |margin| <= band
  double route_tol = 1e-6;           // relative to scale
  double functoriality_tol = 1e-8;
  double properness_radius = 2.0;
  QuadOptions quad{2048, 1e-10, 1 << 16, 1e-3};
};

inline const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> suites{
      "bidisc-equivalence", "membership-f", "round-trip", "properness",
      "route-agreement",    "functoriality", "lojasiewicz"};
  return suites;
}

ProbeReport sweep_report(const SweepConfig& config);

}  // namespace symprod
