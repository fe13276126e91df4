#include "symprod/contour.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <sstream>

namespace symprod {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Kahan-Babuska summation on both components.
class CompensatedSum {
 public:
  void add(cplx x) {
    add_part(x.real(), re_, re_c_);
    add_part(x.imag(), im_, im_c_);
  }
  cplx value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_part(double x, double& sum, double& comp) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) comp += (sum - t) + x;
    else comp += (x - t) + sum;
    sum = t;
  }
  double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0;
};

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

template <unsigned N>
GaussRule expand_rule() {
  using rule = boost::math::quadrature::gauss<double, N>;
  const auto& x = rule::abscissa();
  const auto& w = rule::weights();
  GaussRule out;
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i] == 0.0) continue;
    out.nodes.push_back(-x[i]);
    out.weights.push_back(w[i]);
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.nodes.push_back(x[i]);
    out.weights.push_back(w[i]);
  }
  return out;
}

const GaussRule& gauss_rule(int order) {
  static const GaussRule r10 = expand_rule<10>();
  static const GaussRule r15 = expand_rule<15>();
  static const GaussRule r20 = expand_rule<20>();
  static const GaussRule r30 = expand_rule<30>();
  switch (order) {
    case 10: return r10;
    case 15: return r15;
    case 20: return r20;
    case 30: return r30;
    default:
      throw InvalidInput("integrate_graded: supported Gauss orders are 10, 15, 20, 30");
  }
}

}  // namespace

Contour::Contour(std::vector<std::pair<Circle, int>> circles, int nodes_per_curve)
    : nodes_(nodes_per_curve) {
  if (nodes_per_curve < 1) throw InvalidInput("Contour: nodes_per_curve must be >= 1");
  for (const auto& [circle, orientation] : circles) {
    if (!(circle.radius > 0.0)) throw InvalidInput("Contour: radius must be positive");
    if (orientation != 1 && orientation != -1)
      throw InvalidInput("Contour: orientation must be +1 or -1");
    Curve c;
    c.circle = circle;
    c.orientation = orientation;
    c.theta.resize(static_cast<std::size_t>(nodes_per_curve));
    c.points.resize(c.theta.size());
    c.derivs.resize(c.theta.size());
    for (int k = 0; k < nodes_per_curve; ++k) {
      const double theta = static_cast<double>(k) / nodes_per_curve;
      // Exact values at the quarter turns keep symmetric node sets symmetric.
      cplx unit;
      const int quarter = (4 * k) % nodes_per_curve == 0 ? (4 * k) / nodes_per_curve : -1;
      switch (quarter) {
        case 0: unit = {1.0, 0.0}; break;
        case 1: unit = {0.0, 1.0}; break;
        case 2: unit = {-1.0, 0.0}; break;
        case 3: unit = {0.0, -1.0}; break;
        default: unit = std::polar(1.0, kTwoPi * theta);
      }
      const auto i = static_cast<std::size_t>(k);
      c.theta[i] = theta;
      c.points[i] = circle.center + circle.radius * unit;
      c.derivs[i] = cplx{0.0, kTwoPi} * circle.radius * unit;
    }
    curves_.push_back(std::move(c));
  }
}

Contour Contour::with_nodes(int nodes_per_curve) const {
  std::vector<std::pair<Circle, int>> circles;
  for (const auto& c : curves_) circles.emplace_back(c.circle, c.orientation);
  return Contour(std::move(circles), nodes_per_curve);
}

double Contour::distance_to(cplx z) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : curves_)
    best = std::min(best, std::abs(std::abs(z - c.circle.center) - c.circle.radius));
  return best;
}

std::vector<cplx> integrate_closed(const Contour& c, std::size_t k, const VecIntegrand& f) {
  std::vector<CompensatedSum> total(k);
  std::vector<cplx> values(k);
  for (std::size_t ci = 0; ci < c.curves().size(); ++ci) {
    const auto& curve = c.curves()[ci];
    std::vector<CompensatedSum> acc(k);
    for (std::size_t node = 0; node < curve.points.size(); ++node) {
      f(curve.points[node], values);
      for (std::size_t i = 0; i < k; ++i) {
        if (!finite(values[i])) {
          std::ostringstream os;
          os << "integrand " << i << " not finite at curve " << ci << " node " << node
             << " (t = " << curve.points[node] << ")";
          throw EvaluationError(os.str(), ci, node);
        }
        acc[i].add(values[i] * curve.derivs[node]);
      }
    }
    const double weight =
        static_cast<double>(curve.orientation) / static_cast<double>(curve.points.size());
    for (std::size_t i = 0; i < k; ++i) total[i].add(weight * acc[i].value());
  }
  std::vector<cplx> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = total[i].value();
  return out;
}

cplx integrate_closed(const Contour& c, const Integrand& f) {
  return integrate_closed(c, 1, [&](cplx t, std::span<cplx> out) { out[0] = f(t); })[0];
}

VecQuadResult integrate_adaptive(const Contour& c, std::size_t k, const VecIntegrand& f,
                                 const AdaptiveOptions& opts) {
  int nodes = c.nodes_per_curve();
  auto coarse = integrate_closed(c, k, f);
  double diff = std::numeric_limits<double>::infinity();
  while (2 * nodes <= opts.max_nodes) {
    auto fine = integrate_closed(c.with_nodes(2 * nodes), k, f);
    nodes *= 2;
    diff = 0.0;
    bool accepted = true;
    for (std::size_t i = 0; i < k; ++i) {
      const double d = std::abs(fine[i] - coarse[i]);
      diff = std::max(diff, d);
      if (d > opts.tol * (1.0 + std::abs(fine[i]))) accepted = false;
    }
    if (accepted) return {std::move(fine), nodes, diff};
    coarse = std::move(fine);
  }
  std::ostringstream os;
  os << "quadrature did not converge by " << nodes << " nodes per curve (last difference "
     << diff << ")";
  throw NumericalFailure(os.str(), coarse, diff);
}

QuadResult integrate_adaptive(const Contour& c, const Integrand& f,
                              const AdaptiveOptions& opts) {
  auto r = integrate_adaptive(c, 1, [&](cplx t, std::span<cplx> out) { out[0] = f(t); }, opts);
  return {r.values[0], r.nodes, r.est_error};
}

cplx integrate_graded(const Circle& circle, cplx singular_point, const Integrand& f,
                      const GradedOptions& opts) {
  if (opts.levels < 1) throw InvalidInput("integrate_graded: levels must be >= 1");
  const auto& rule = gauss_rule(opts.order);
  const double base_angle = std::arg(singular_point - circle.center);

  // Panels in the angular offset from the singular point, on (0, pi].
  std::vector<std::pair<double, double>> panels;
  double hi = std::numbers::pi;
  for (int level = 0; level < opts.levels; ++level) {
    panels.emplace_back(hi / 2.0, hi);
    hi /= 2.0;
  }
  panels.emplace_back(0.0, hi);

  CompensatedSum acc;
  for (int side : {1, -1}) {
    for (const auto& [a, b] : panels) {
      const double half = 0.5 * (b - a), mid = 0.5 * (b + a);
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double offset = side * (mid + half * rule.nodes[i]);
        const cplx unit = std::polar(1.0, base_angle + offset);
        const cplx t = circle.center + circle.radius * unit;
        const cplx value = f(t);
        if (!finite(value)) {
          std::ostringstream os;
          os << "integrand not finite at graded node t = " << t;
          throw EvaluationError(os.str(), 0, i);
        }
        // dt = i r e^{i angle} d(angle); both sides are traversed counterclockwise.
        acc.add(rule.weights[i] * half * value * cplx{0.0, circle.radius} * unit);
      }
    }
  }
  return acc.value();
}

}  // namespace symprod
