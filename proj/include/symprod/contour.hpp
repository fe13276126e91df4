#pragma once

// Closed-curve quadrature on unions of circles.

#include <span>
#include <vector>

#include "symprod/holomap.hpp"

namespace symprod {

struct Circle {
  cplx center;
  double radius = 1.0;
};

/// One closed curve t(theta) = c + r e^{2 pi i theta}, theta in [0,1), sampled
/// at N equispaced parameters.  orientation is +1 (counterclockwise) or -1.
struct Curve {
  Circle circle;
  int orientation = 1;
  std::vector<double> theta;
  std::vector<cplx> points;
  std::vector<cplx> derivs;  // dt/dtheta for the counterclockwise parametrization
};

class Contour {
 public:
  Contour() = default;
  Contour(std::vector<std::pair<Circle, int>> circles, int nodes_per_curve);

  const std::vector<Curve>& curves() const { return curves_; }
  int nodes_per_curve() const { return nodes_; }
  /// Same geometry sampled with a different node count.
  Contour with_nodes(int nodes_per_curve) const;
  /// Smallest distance from z to any curve of the contour.
  double distance_to(cplx z) const;

 private:
  std::vector<Curve> curves_;
  int nodes_ = 0;
};

/// sum over curves of orientation * (1/N) * sum_k f(t_k) t'_k, with compensated
/// summation in node order.  Throws EvaluationError on non-finite values.
cplx integrate_closed(const Contour& c, const Integrand& f);

struct QuadResult {
  cplx value;
  int nodes = 0;        // nodes per curve of the accepted rule
  double est_error = 0.0;
};

struct AdaptiveOptions {
  double tol = 1e-10;   // accepted when |I_2N - I_N| <= tol * (1 + |I_2N|)
  int max_nodes = 1 << 16;
};

/// Trapezoid at N and 2N, doubling until the difference is below tolerance.
/// Throws NumericalFailure (carrying the last difference) past max_nodes.
QuadResult integrate_adaptive(const Contour& c, const Integrand& f,
                              const AdaptiveOptions& opts = {});

/// k integrands sharing node evaluations: f(t, out) fills out[0..k).
using VecIntegrand = std::function<void(cplx, std::span<cplx>)>;

std::vector<cplx> integrate_closed(const Contour& c, std::size_t k, const VecIntegrand& f);

struct VecQuadResult {
  std::vector<cplx> values;
  int nodes = 0;
  double est_error = 0.0;   // max over components
};

VecQuadResult integrate_adaptive(const Contour& c, std::size_t k, const VecIntegrand& f,
                                 const AdaptiveOptions& opts = {});

struct GradedOptions {
  int levels = 40;    // dyadic refinements toward the singular point
  int order = 20;     // Gauss-Legendre points per panel
};

/// Counterclockwise integral over a full circle whose integrand is only Holder
/// continuous at one point of the circle.  Panels are graded geometrically
/// toward that point from both sides.
cplx integrate_graded(const Circle& circle, cplx singular_point, const Integrand& f,
                      const GradedOptions& opts = {});

}  // namespace symprod
