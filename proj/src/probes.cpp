#include "symprod/probes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "symprod/geometry.hpp"

namespace symprod {

namespace {

constexpr double kPi = std::numbers::pi;

nlohmann::json cell_to_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, cplx>) return {v.real(), v.imag()};
        else if constexpr (std::is_same_v<T, double>) {
          if (std::isfinite(v)) return v;
          return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
        } else return v;
      },
      c);
}

std::string format_double(double v) {
  if (!std::isfinite(v)) return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
  // Same representation nlohmann uses, so CSV and JSON agree digit for digit.
  return nlohmann::json(v).dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

nlohmann::json complex_json(cplx z) { return {z.real(), z.imag()}; }

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * unit_(engine_);
  }
  std::size_t index(std::size_t count) {
    return std::min(count - 1, static_cast<std::size_t>(unit_(engine_) * count));
  }
  cplx in_disc(cplx center, double radius) {
    const double r = radius * std::sqrt(unit_(engine_));
    return center + std::polar(r, 2.0 * kPi * unit_(engine_));
  }
  /// Uniform in the Euclidean ball of radius r in C^n.
  std::vector<cplx> in_ball(std::size_t n, double r) {
    std::normal_distribution<double> gauss;
    std::vector<cplx> v(n);
    double norm = 0.0;
    for (auto& x : v) {
      x = {gauss(engine_), gauss(engine_)};
      norm += std::norm(x);
    }
    norm = std::sqrt(norm);
    const double radius = r * std::pow(unit_(engine_), 1.0 / (2.0 * static_cast<double>(n)));
    for (auto& x : v) x *= radius / norm;
    return v;
  }
  /// Uniform in {psi < 0, boundary distance >= clearance}.
  cplx in_domain(const DomainSpec& d, double clearance) {
    for (;;) {
      const cplx z = in_disc(d.outer().center, d.outer().radius);
      if (contains_point(d, z) == Membership::inside && boundary_distance(d, z) >= clearance)
        return z;
    }
  }

 private:
  std::mt19937_64 engine_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

// Suite bookkeeping shared by sweep_report.
struct SuiteState {
  std::string name;
  std::size_t rows = 0;
  nlohmann::json summary = nlohmann::json::object();
  Verdict verdict = Verdict::pass;
};

HoloMap random_map(Sampler& rng, const DomainSpec& d, bool allow_blaschke) {
  const bool blaschke = allow_blaschke && rng.uniform(0.0, 1.0) < 0.5;
  if (blaschke) {
    const std::size_t degree = 1 + rng.index(3);
    for (;;) {
      std::vector<cplx> zeros;
      bool ok = true;
      for (std::size_t k = 0; k < degree; ++k) {
        zeros.push_back(rng.in_disc(0.0, 0.8));
        // The pole 1/conj(a) must stay off the closed domain.
        if (zeros.back() != cplx{0.0, 0.0} &&
            psi_defining(d, 1.0 / std::conj(zeros.back())) < 0.05)
          ok = false;
      }
      if (ok) return HoloMap::blaschke(zeros, std::polar(1.0, rng.uniform(0.0, 2.0 * kPi)));
    }
  }
  const std::size_t degree = 1 + rng.index(4);
  std::vector<cplx> coeffs(degree + 1);
  for (auto& c : coeffs) c = rng.in_disc(0.0, 1.0);
  return HoloMap::polynomial(coeffs);
}

// Polynomial or Blaschke map of the unit disc into the disc of radius 0.9.
HoloMap random_self_map(Sampler& rng) {
  if (rng.uniform(0.0, 1.0) < 0.5) {
    const std::size_t degree = 1 + rng.index(3);
    std::vector<cplx> zeros;
    for (std::size_t k = 0; k < degree; ++k) zeros.push_back(rng.in_disc(0.0, 0.8));
    return HoloMap::blaschke(zeros, std::polar(1.0, rng.uniform(0.0, 2.0 * kPi)));
  }
  const std::size_t degree = 1 + rng.index(4);
  std::vector<cplx> coeffs(degree + 1);
  double total = 0.0;
  for (auto& c : coeffs) {
    c = rng.in_disc(0.0, 1.0);
    total += std::abs(c);
  }
  for (auto& c : coeffs) c *= 0.9 / total;
  return HoloMap::polynomial(coeffs);
}

void fail_suite(SuiteState& st) { st.verdict = Verdict::fail; }

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::informational: return "informational";
  }
  return "?";
}

nlohmann::json ProbeReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : samples) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [name, value] : row.cells) obj[name] = cell_to_json(value);
    rows.push_back(std::move(obj));
  }
  return {{"probe", probe},         {"seed", seed},       {"parameters", parameters},
          {"quadrature", quadrature}, {"samples", rows},  {"verdict", to_string(verdict)},
          {"fitted", fitted},       {"notes", notes}};
}

std::string ProbeReport::to_json_string() const { return to_json().dump(2) + "\n"; }

std::string ProbeReport::to_csv() const {
  // Column order: first appearance across rows.
  std::vector<std::pair<std::string, bool>> columns;  // name, is_complex
  for (const auto& row : samples) {
    for (const auto& [name, value] : row.cells) {
      const bool is_complex = std::holds_alternative<cplx>(value);
      if (std::none_of(columns.begin(), columns.end(),
                       [&](const auto& c) { return c.first == name; }))
        columns.emplace_back(name, is_complex);
    }
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, is_complex] : columns) {
    if (!first) os << ',';
    first = false;
    if (is_complex) os << csv_escape(name + "_re") << ',' << csv_escape(name + "_im");
    else os << csv_escape(name);
  }
  os << '\n';
  for (const auto& row : samples) {
    first = true;
    for (const auto& [name, is_complex] : columns) {
      if (!first) os << ',';
      first = false;
      auto it = std::find_if(row.cells.begin(), row.cells.end(),
                             [&](const auto& c) { return c.first == name; });
      if (it == row.cells.end()) {
        if (is_complex) os << ',';
        continue;
      }
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, cplx>)
              os << format_double(v.real()) << ',' << format_double(v.imag());
            else if constexpr (std::is_same_v<T, double>) os << format_double(v);
            else if constexpr (std::is_same_v<T, long>) os << v;
            else os << csv_escape(v);
          },
          it->second);
    }
    os << '\n';
  }
  return os.str();
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw InvalidInput("fit_line: need at least two paired points");
  const double count = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= count;
  my /= count;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw InvalidInput("fit_line: abscissae are all equal");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.points = x.size();
  if (x.size() > 2) {
    double rss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double r = y[i] - fit.intercept - fit.slope * x[i];
      rss += r * r;
    }
    fit.slope_stderr = std::sqrt(rss / (count - 2.0) / sxx);
  }
  return fit;
}

ProbeReport lipschitz_cone_probe(cplx a, cplx b, const std::vector<double>& t_values,
                                 double margin) {
  ProbeReport report;
  report.probe = "lipschitz";
  report.parameters = {{"a", complex_json(a)},
                       {"b", complex_json(b)},
                       {"t_values", t_values},
                       {"margin", margin},
                       {"vertex", {2.0, 1.0}}};
  const bool predict_outside = a.imag() != b.imag();
  report.parameters["prediction"] = predict_outside ? "outside" : "no outside prediction";
  const auto disc = DomainSpec::unit_disc();

  bool consistent = true;
  bool all_outside = true;
  for (double t : t_values) {
    if (!(t > 0.0 && t < 1.0)) throw InvalidInput("lipschitz_cone_probe: t must lie in (0, 1)");
    const SymPoint s({2.0 - b * t, 1.0 - a * t});
    const auto closed_form = bidisc_contains(s, margin);
    const auto by_roots = symprod_contains(disc, s, margin);
    if (closed_form != by_roots.classification) consistent = false;
    if (closed_form != Membership::outside || by_roots.classification != Membership::outside)
      all_outside = false;
    report.samples.push_back(SampleRow{}
                                 .add("t", t)
                                 .add("s1", s[0])
                                 .add("s2", s[1])
                                 .add("bidisc_value", bidisc_value(s))
                                 .add("bidisc_class", std::string(to_string(closed_form)))
                                 .add("roots_class",
                                      std::string(to_string(by_roots.classification))));
  }
  const bool pass = consistent && (!predict_outside || all_outside);
  report.verdict = pass ? Verdict::pass : Verdict::fail;
  report.fitted = {{"classifiers_agree", consistent}, {"all_outside", all_outside}};
  return report;
}

ProbeReport smoothness_loss_probe(int m, int n, double beta, const std::vector<double>& w_grid,
                                  const SmoothnessOptions& opts) {
  if (m < 1 || n < 1) throw InvalidInput("smoothness_loss_probe: m and n must be >= 1");
  const int order = m * n - 1;
  if (!(beta > order - 1))
    throw PreconditionError("smoothness_loss_probe: beta must exceed mn - 2");
  for (double w : w_grid)
    if (!(w >= 0.5 && w <= 0.99))
      throw PreconditionError("smoothness_loss_probe: grid points must lie in [0.5, 0.99]");

  ProbeReport report;
  report.probe = "smoothness";
  report.parameters = {{"m", m}, {"n", n}, {"beta", beta}, {"w_grid", w_grid},
                       {"u", "(1 - t)^beta"}, {"domain", "unit disc"}};
  report.quadrature = {{"scheme", "graded Gauss-Legendre panels toward t = 1"},
                       {"levels", opts.graded.levels},
                       {"order", opts.graded.order},
                       {"reference_levels", opts.reference.levels},
                       {"reference_order", opts.reference.order},
                       {"rel_tol", opts.rel_tol}};

  const auto disc = DomainSpec::unit_disc();
  const auto u = HoloMap::power_law(beta, 1.0);
  const auto integrand = u.as_integrand();
  double factorial = 1.0;
  for (int k = 2; k <= order; ++k) factorial *= k;

  std::vector<double> xs, ys;
  for (double w : w_grid) {
    SampleRow row;
    row.add("w", w);
    const auto s = diagonal_embed(w, static_cast<std::size_t>(n));
    try {
      const cplx value = J_op_graded(integrand, s, m, 0, disc, 1.0, opts.graded);
      const cplx check = J_op_graded(integrand, s, m, 0, disc, 1.0, opts.reference);
      const double est = std::abs(value - check);
      const cplx cauchy =
          cplx{0.0, 2.0 * kPi} * u.derivative(cplx{w, 0.0}, order) / factorial;
      row.add("J", value).add("cauchy_formula", cauchy).add("est_error", est);
      if (est > opts.rel_tol * std::abs(value)) {
        row.add("status", std::string("dropped: quadrature not converged"));
      } else {
        row.add("status", std::string("ok"));
        xs.push_back(std::log(1.0 - w));
        ys.push_back(std::log(std::abs(value)));
      }
    } catch (const Error& e) {
      row.add("status", std::string("dropped: ") + e.what());
    }
    report.samples.push_back(std::move(row));
  }

  const double expected = beta - order;
  const bool singular = beta < order;
  report.fitted["expected_slope"] = singular ? nlohmann::json(expected) : nlohmann::json(">= -0.05");
  report.fitted["surviving_points"] = xs.size();
  if (xs.size() < opts.min_points) {
    report.verdict = Verdict::fail;
    report.notes.push_back("fewer than " + std::to_string(opts.min_points) +
                           " grid points survived");
    return report;
  }
  const auto fit = fit_line(xs, ys);
  report.fitted["slope"] = fit.slope;
  report.fitted["intercept"] = fit.intercept;
  report.fitted["slope_ci95"] = {fit.slope - 1.96 * fit.slope_stderr,
                                 fit.slope + 1.96 * fit.slope_stderr};
  constexpr double kSlopeTol = 0.05;
  const bool pass = singular ? std::abs(fit.slope - expected) <= kSlopeTol
                             : fit.slope >= -kSlopeTol;
  report.verdict = pass ? Verdict::pass : Verdict::fail;
  return report;
}

ProbeReport sweep_report(const SweepConfig& config) {
  if (config.n < 1) throw InvalidInput("sweep: n must be >= 1");
  ProbeReport report;
  report.probe = "sweep";
  report.seed = config.seed;
  report.parameters = {{"domain", domain_to_json(config.domain)},
                       {"n", config.n},
                       {"samples", config.samples},
                       {"suites", config.suites},
                       {"max_rows", config.max_rows},
                       {"band", config.band},
                       {"route_tol", config.route_tol},
                       {"functoriality_tol", config.functoriality_tol},
                       {"properness_radius", config.properness_radius}};
  report.quadrature = {{"scheme", "adaptive trapezoid, N vs 2N"},
                       {"initial_nodes", config.quad.nodes},
                       {"tol", config.quad.tol},
                       {"max_nodes", config.quad.max_nodes},
                       {"delta", config.quad.delta}};

  const auto& d = config.domain;
  const std::size_t n = config.n;
  bool any_fail = false, any_checked = false;

  for (std::size_t suite_index = 0; suite_index < config.suites.size(); ++suite_index) {
    SuiteState st;
    st.name = config.suites[suite_index];
    Sampler rng(config.seed + 0x9e3779b97f4a7c15ULL * (suite_index + 1));
    auto record = [&](SampleRow row) {
      if (st.rows++ < config.max_rows) {
        row.cells.insert(row.cells.begin(), {"suite", st.name});
        report.samples.push_back(std::move(row));
      }
    };

    if (st.name == "bidisc-equivalence") {
      if (n != 2) throw InvalidInput("sweep: bidisc-equivalence requires n = 2");
      const auto& o = d.outer();
      if (!d.holes().empty() || o.center != cplx{0.0, 0.0} || o.radius != 1.0)
        throw InvalidInput("sweep: bidisc-equivalence requires the unit disc domain");
      long disagreements = 0, banded = 0;
      for (std::size_t i = 0; i < config.samples; ++i) {
        // Half the draws come from roots near the unit circle so both sides
        // of the boundary are well represented.
        std::vector<cplx> coords;
        if (i % 2 == 0) coords = rng.in_ball(2, 3.0);
        else coords = elem_sym(std::vector<cplx>{rng.in_disc(0.0, 1.2), rng.in_disc(0.0, 1.2)}).coeffs();
        const SymPoint s(coords);
        const double v = bidisc_value(s);
        if (std::abs(v - 1.0) <= config.band) {
          ++banded;
          continue;
        }
        const auto closed_form = bidisc_contains(s, 0.0);
        const auto by_roots = symprod_contains(d, s, 0.0).classification;
        if (closed_form != by_roots) {
          ++disagreements;
          record(SampleRow{}
                     .add("s1", s[0])
                     .add("s2", s[1])
                     .add("bidisc_value", v)
                     .add("bidisc_class", std::string(to_string(closed_form)))
                     .add("roots_class", std::string(to_string(by_roots))));
        }
      }
      st.summary = {{"disagreements", disagreements}, {"in_band", banded},
                    {"checked", config.samples}};
      if (disagreements != 0) fail_suite(st);
    } else if (st.name == "membership-f") {
      long disagreements = 0, banded = 0;
      for (std::size_t i = 0; i < config.samples; ++i) {
        std::vector<cplx> roots(n);
        for (auto& z : roots) z = rng.in_disc(d.outer().center, 1.3 * d.outer().radius);
        const auto s = elem_sym(roots);
        double f;
        try {
          f = f_defining(d, s);
        } catch (const PoleError&) {
          continue;
        }
        if (std::abs(f) <= config.band) {
          ++banded;
          continue;
        }
        const auto cls = symprod_contains(d, s, 0.0).classification;
        if ((f < 0.0) != (cls == Membership::inside)) {
          ++disagreements;
          record(SampleRow{}.add("f", f).add("class", std::string(to_string(cls))));
        }
      }
      st.summary = {{"disagreements", disagreements}, {"in_band", banded}};
      if (disagreements != 0) fail_suite(st);
    } else if (st.name == "round-trip") {
      double worst = 0.0;
      for (std::size_t i = 0; i < config.samples; ++i) {
        std::vector<cplx> z(n);
        for (auto& x : z) x = rng.in_disc(0.0, 2.0);
        const auto back = roots_of(elem_sym(z));
        const double err = multiset_distance(back.roots(), z) / scale_of(z);
        worst = std::max(worst, err);
        record(SampleRow{}.add("relative_error", err));
      }
      st.summary = {{"max_relative_error", worst}, {"tolerance", 1e-8}};
      if (worst > 1e-8) fail_suite(st);
    } else if (st.name == "properness") {
      const double r = config.properness_radius;
      const double bound = std::max(std::sqrt(static_cast<double>(n)) * r, 1.0);
      double worst_ratio = 0.0;
      for (std::size_t i = 0; i < config.samples; ++i) {
        const SymPoint s(rng.in_ball(n, r));
        double largest = 0.0;
        const auto roots = roots_of(s);
        for (const auto& z : roots.roots()) largest = std::max(largest, std::abs(z));
        worst_ratio = std::max(worst_ratio, largest / bound);
        record(SampleRow{}.add("max_root_modulus", largest).add("bound", bound));
      }
      st.summary = {{"max_modulus_over_bound", worst_ratio}, {"radius", r}};
      if (worst_ratio > 1.0 + 1e-8) fail_suite(st);
    } else if (st.name == "route-agreement") {
      double worst = 0.0;
      long failures = 0;
      for (std::size_t i = 0; i < config.samples; ++i) {
        std::vector<cplx> z(n);
        for (auto& x : z) x = rng.in_domain(d, 0.1);
        const auto s = elem_sym(z);
        const auto phi = random_map(rng, d, true);
        const auto direct = sigma_phi_direct(phi, s);
        const auto integral = sigma_phi_integral(phi, s, d, config.quad);
        const double err = max_abs_diff(direct.value.span(), integral.value.span()) /
                           scale_of(direct.value.span());
        worst = std::max(worst, err);
        if (err > config.route_tol) ++failures;
        record(SampleRow{}
                   .add("phi", phi.describe())
                   .add("relative_error", err)
                   .add("nodes", static_cast<long>(integral.quadrature_nodes))
                   .add("est_error", integral.est_error));
      }
      st.summary = {{"max_relative_error", worst}, {"failures", failures},
                    {"tolerance", config.route_tol}};
      if (failures != 0) fail_suite(st);
    } else if (st.name == "functoriality") {
      double worst = 0.0;
      for (std::size_t i = 0; i < config.samples; ++i) {
        std::vector<cplx> z(n);
        for (auto& x : z) x = rng.in_disc(0.0, 0.95);
        const auto s = elem_sym(z);
        const auto phi = random_self_map(rng);
        const auto psi = random_self_map(rng);
        const auto lhs = sigma_phi_direct(HoloMap::compose(psi, phi), s).value;
        const auto rhs = sigma_phi_direct(psi, sigma_phi_direct(phi, s).value).value;
        const double err = max_abs_diff(lhs.span(), rhs.span());
        worst = std::max(worst, err);
        record(SampleRow{}.add("error", err));
      }
      st.summary = {{"max_error", worst}, {"tolerance", config.functoriality_tol}};
      if (worst > config.functoriality_tol) fail_suite(st);
    } else if (st.name == "lojasiewicz") {
      // Push one root just outside the boundary (optionally doubled) and compare
      // f with the distance bound g.
      std::vector<double> log_f, log_g;
      for (std::size_t i = 0; i < config.samples; ++i) {
        const double eps = std::pow(10.0, rng.uniform(-6.0, -1.0));
        const auto& o = d.outer();
        const cplx dir = std::polar(1.0, rng.uniform(0.0, 2.0 * kPi));
        const cplx pushed = o.center + (o.radius + eps) * dir;
        std::vector<cplx> z;
        const bool doubled = n >= 2 && i % 2 == 1;
        z.push_back(pushed);
        if (doubled) z.push_back(o.center + o.radius * dir);
        while (z.size() < n) z.push_back(rng.in_domain(d, 0.1));
        const auto s = elem_sym(z);
        const double f = f_defining(d, s);
        const double g = distance_upper_bound(d, s);
        record(SampleRow{}
                   .add("family", std::string(doubled ? "near-diagonal" : "simple"))
                   .add("f", f)
                   .add("g_bound", g));
        if (f > 0.0 && g > 0.0) {
          log_f.push_back(std::log(f));
          log_g.push_back(std::log(g));
        }
      }
      st.verdict = Verdict::informational;
      if (log_f.size() >= 2) {
        const auto fit = fit_line(log_f, log_g);
        st.summary = {{"exponent", fit.slope},
                      {"log_constant", fit.intercept},
                      {"exponent_ci95",
                       {fit.slope - 1.96 * fit.slope_stderr, fit.slope + 1.96 * fit.slope_stderr}},
                      {"points", fit.points},
                      {"model", "log g_bound = log C + N log f"}};
      } else {
        st.summary = {{"points", log_f.size()}};
      }
    } else {
      throw ParseError("field 'suites': unknown suite '" + st.name + "'");
    }

    st.summary["rows_total"] = st.rows;
    st.summary["rows_recorded"] = std::min(st.rows, config.max_rows);
    st.summary["verdict"] = to_string(st.verdict);
    report.fitted[st.name] = st.summary;
    if (st.verdict != Verdict::informational) {
      any_checked = true;
      if (st.verdict == Verdict::fail) any_fail = true;
    }
  }
  report.verdict = any_fail ? Verdict::fail : (any_checked ? Verdict::pass : Verdict::informational);
  return report;
}

}  // namespace symprod
