#include "symprod/induced.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "symprod/geometry.hpp"

namespace symprod {

namespace {

const cplx kTwoPiI{0.0, 2.0 * std::numbers::pi};

AdaptiveOptions adaptive(const QuadOptions& opts) {
  return AdaptiveOptions{opts.tol, opts.max_nodes};
}

// Every root of q(s;t) inside d and at least delta from its boundary.
void require_interior_roots(const SymPoint& s, const DomainSpec& d, double delta,
                            const char* who) {
  const auto roots = roots_of(s);
  for (std::size_t i = 0; i < roots.n(); ++i) {
    const cplx z = roots.roots()[i];
    const double reach = boundary_distance(d, z) - roots.radii()[i];
    if (contains_point(d, z) != Membership::inside || reach < delta) {
      std::ostringstream os;
      os << who << ": root " << z << " is not inside the domain at distance >= delta = "
         << delta << " from its boundary";
      throw PreconditionError(os.str());
    }
  }
}

cplx ipow(cplx base, int e) {
  cplx out = 1.0;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

void require_m(int m, const char* who) {
  if (m < 1) throw InvalidInput(std::string(who) + ": m must be >= 1");
}

}  // namespace

const char* to_string(Route r) { return r == Route::direct ? "direct" : "integral"; }

InducedMapResult sigma_phi_direct(const HoloMap& phi, const SymPoint& s) {
  const auto roots = roots_of(s);
  std::vector<cplx> images;
  images.reserve(roots.n());
  for (const auto& z : roots.roots()) {
    if (!phi.analytic_at(z)) {
      std::ostringstream os;
      os << "sigma_phi_direct: root " << z << " lies outside the domain of " << phi.describe();
      throw DomainError(os.str());
    }
    images.push_back(phi(z));
  }
  return {elem_sym(images), Route::direct, 0, 0.0};
}

QuadResult G_op(const Integrand& g, const SymPoint& s, const DomainSpec& d,
                const QuadOptions& opts) {
  require_interior_roots(s, d, opts.delta, "G_op");
  const auto contour = boundary_contour(d, opts.nodes);
  auto r = integrate_adaptive(
      contour,
      [&](cplx t) {
        cplx q, qt;
        eval_q_qt(s.span(), t, q, qt);
        return g(t) * qt / q;
      },
      adaptive(opts));
  r.value /= kTwoPiI;
  r.est_error /= 2.0 * std::numbers::pi;
  return r;
}

QuadResult G_op(const HoloMap& g, const SymPoint& s, const DomainSpec& d,
                const QuadOptions& opts) {
  return G_op(g.as_integrand(), s, d, opts);
}

InducedMapResult sigma_phi_integral(const HoloMap& phi, const SymPoint& s, const DomainSpec& d,
                                    const QuadOptions& opts) {
  require_interior_roots(s, d, opts.delta, "sigma_phi_integral");
  const std::size_t n = s.n();
  const auto contour = boundary_contour(d, opts.nodes);
  // Psi_m for m = 1..n share q'/q and the powers of phi at each node.
  auto r = integrate_adaptive(
      contour, n,
      [&](cplx t, std::span<cplx> out) {
        cplx q, qt;
        eval_q_qt(s.span(), t, q, qt);
        const cplx log_deriv = qt / q;
        const cplx value = phi(t);
        cplx power = value;
        for (std::size_t m = 0; m < n; ++m) {
          out[m] = power * log_deriv;
          power *= value;
        }
      },
      adaptive(opts));
  for (auto& v : r.values) v /= kTwoPiI;
  InducedMapResult out{newton_P(PowerSumPoint(std::move(r.values))), Route::integral, r.nodes,
                       r.est_error / (2.0 * std::numbers::pi)};
  return out;
}

RootMultiset gamma_inverse(const SymPoint& s, const std::vector<DiscSpec>& discs,
                           const std::optional<DomainSpec>& d, const QuadOptions& opts) {
  if (discs.empty()) throw InvalidInput("gamma_inverse: no discs given");
  int total = 0;
  for (std::size_t i = 0; i < discs.size(); ++i) {
    const auto& disc = discs[i];
    if (!(disc.radius > 0.0)) throw InvalidInput("gamma_inverse: disc radius must be positive");
    if (disc.multiplicity < 1) throw InvalidInput("gamma_inverse: multiplicity must be >= 1");
    total += disc.multiplicity;
    for (std::size_t j = 0; j < i; ++j)
      if (!(std::abs(disc.center - discs[j].center) > disc.radius + discs[j].radius))
        throw PreconditionError("gamma_inverse: disc closures " + std::to_string(j) + " and " +
                                std::to_string(i) + " intersect");
    if (d && (contains_point(*d, disc.center) != Membership::inside ||
              boundary_distance(*d, disc.center) <= disc.radius))
      throw PreconditionError("gamma_inverse: closed disc " + std::to_string(i) +
                              " is not contained in the domain");
  }
  if (total != static_cast<int>(s.n()))
    throw PreconditionError("gamma_inverse: multiplicities sum to " + std::to_string(total) +
                            ", expected n = " + std::to_string(s.n()));

  const auto roots = roots_of(s);
  std::vector<cplx> recovered;
  for (std::size_t i = 0; i < discs.size(); ++i) {
    const auto& disc = discs[i];
    for (const auto& z : roots.roots()) {
      if (std::abs(std::abs(z - disc.center) - disc.radius) < opts.delta) {
        std::ostringstream os;
        os << "gamma_inverse: root " << z << " lies within delta of the boundary of disc " << i;
        throw PreconditionError(os.str());
      }
    }
    const Contour circle({{Circle{disc.center, disc.radius}, 1}}, opts.nodes);
    auto r = integrate_adaptive(
        circle, 2,
        [&](cplx t, std::span<cplx> out) {
          cplx q, qt;
          eval_q_qt(s.span(), t, q, qt);
          out[0] = qt / q;
          out[1] = t * qt / q;
        },
        adaptive(opts));
    const cplx count = r.values[0] / kTwoPiI;
    const long rounded = std::lround(count.real());
    if (rounded != disc.multiplicity || std::abs(count - static_cast<double>(rounded)) > 1e-6) {
      std::ostringstream os;
      os << "gamma_inverse: disc " << i << " encloses " << rounded << " roots (argument principle "
         << count << "), expected " << disc.multiplicity;
      throw WrongDisc(os.str(), i, rounded);
    }
    const cplx barycenter = r.values[1] / (kTwoPiI * static_cast<double>(disc.multiplicity));
    for (int k = 0; k < disc.multiplicity; ++k) recovered.push_back(barycenter);
  }
  return RootMultiset(std::move(recovered));
}

QuadResult J_op(const Integrand& u, const SymPoint& s, int m, int weight_exponent,
                const DomainSpec& d, const QuadOptions& opts) {
  require_m(m, "J_op");
  if (weight_exponent < 0) throw InvalidInput("J_op: weight exponent must be >= 0");
  require_interior_roots(s, d, opts.delta, "J_op");
  const auto contour = boundary_contour(d, opts.nodes);
  return integrate_adaptive(
      contour,
      [&](cplx t) {
        cplx q, qt;
        eval_q_qt(s.span(), t, q, qt);
        return ipow(t, weight_exponent) * u(t) / ipow(q, m);
      },
      adaptive(opts));
}

QuadResult J_op(const HoloMap& u, const SymPoint& s, int m, int weight_exponent,
                const DomainSpec& d, const QuadOptions& opts) {
  return J_op(u.as_integrand(), s, m, weight_exponent, d, opts);
}

cplx J_op_graded(const Integrand& u, const SymPoint& s, int m, int weight_exponent,
                 const DomainSpec& d, cplx singular_point, const GradedOptions& graded,
                 const QuadOptions& opts) {
  require_m(m, "J_op_graded");
  if (weight_exponent < 0) throw InvalidInput("J_op_graded: weight exponent must be >= 0");
  require_interior_roots(s, d, opts.delta, "J_op_graded");
  auto integrand = [&](cplx t) {
    cplx q, qt;
    eval_q_qt(s.span(), t, q, qt);
    return ipow(t, weight_exponent) * u(t) / ipow(q, m);
  };
  cplx total = integrate_graded(d.outer(), singular_point, integrand, graded);
  if (!d.holes().empty()) {
    std::vector<std::pair<Circle, int>> holes;
    for (const auto& h : d.holes()) holes.emplace_back(h, -1);
    total += integrate_adaptive(Contour(std::move(holes), opts.nodes), integrand, adaptive(opts))
                 .value;
  }
  return total;
}

QuadResult T_n_op(const Integrand& u, std::span<const cplx> z, int m, const DomainSpec& d,
                  const QuadOptions& opts) {
  require_m(m, "T_n_op");
  if (z.empty()) throw InvalidInput("T_n_op: no points given");
  for (const auto& p : z) {
    if (contains_point(d, p) != Membership::inside || boundary_distance(d, p) < opts.delta) {
      std::ostringstream os;
      os << "T_n_op: point " << p << " is not inside the domain at distance >= delta = "
         << opts.delta << " from its boundary";
      throw PreconditionError(os.str());
    }
  }
  // Canonical order makes the product independent of how z is listed.
  std::vector<cplx> sorted(z.begin(), z.end());
  std::sort(sorted.begin(), sorted.end(), [](const cplx& a, const cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  const auto contour = boundary_contour(d, opts.nodes);
  return integrate_adaptive(
      contour,
      [&](cplx t) {
        cplx prod = 1.0;
        for (const auto& p : sorted) prod *= (t - p);
        return u(t) / ipow(prod, m);
      },
      adaptive(opts));
}

QuadResult T_n_op(const HoloMap& u, std::span<const cplx> z, int m, const DomainSpec& d,
                  const QuadOptions& opts) {
  return T_n_op(u.as_integrand(), z, m, d, opts);
}

QuadResult G_partial(const HoloMap& g, const SymPoint& s, std::size_t j, const DomainSpec& d,
                     const QuadOptions& opts) {
  const std::size_t n = s.n();
  if (j < 1 || j > n) throw InvalidInput("G_partial: index j must lie in 1..n");
  auto r = J_op([&](cplx t) { return g.derivative(t, 1); }, s, 1, static_cast<int>(n - j), d,
                opts);
  const double sign = (j % 2 == 1) ? 1.0 : -1.0;  // (-1)^{j+1}
  r.value = sign * r.value / kTwoPiI;
  r.est_error /= 2.0 * std::numbers::pi;
  return r;
}

FactorRecovery recover_factor(const SymMap& Phi, cplx w, std::size_t n, double tol) {
  const auto image = Phi(diagonal_embed(w, n));
  if (image.n() != n)
    throw InvalidInput("recover_factor: map changed the dimension");
  const cplx value = image[0] / static_cast<double>(n);
  const auto expected = diagonal_embed(value, n);
  const double residual =
      max_abs_diff(image.span(), expected.span()) / scale_of(image.span());
  if (residual > tol) {
    std::ostringstream os;
    os << "recover_factor: image of the diagonal point is off the diagonal (residual "
       << residual << " > " << tol << ")";
    throw NotInducedMap(os.str(), residual);
  }
  return {value, residual};
}

}  // namespace symprod
