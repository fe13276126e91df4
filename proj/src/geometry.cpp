#include "symprod/geometry.hpp"

#include <cmath>
#include <limits>

namespace symprod {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// psi with the pole mapped to +inf: a root at a hole center is outside.
double psi_or_inf(const DomainSpec& d, cplx z) {
  for (const auto& h : d.holes())
    if (z == h.center) return kInf;
  return psi_defining(d, z);
}

}  // namespace

SymProductPoint symprod_contains(const DomainSpec& d, const SymPoint& s, double margin,
                                 const RootSolveOptions& opts) {
  if (!(margin >= 0.0)) throw InvalidInput("symprod_contains: margin must be >= 0");
  SymProductPoint out{s, Membership::inside, {}, roots_of(s, opts)};
  out.stratum = partition_type(out.roots);
  bool all_inside = true;
  for (std::size_t i = 0; i < out.roots.n(); ++i) {
    const cplx z = out.roots.roots()[i];
    const double rho = out.roots.radii()[i];
    const double psi = psi_or_inf(d, z);
    const double slack = rho > 0.0 ? psi_lipschitz(d, z, rho) * rho : 0.0;
    if (psi - slack > margin) {
      out.classification = Membership::outside;
      return out;
    }
    if (!(psi + slack < -margin)) all_inside = false;
  }
  out.classification = all_inside ? Membership::inside : Membership::boundary_band;
  return out;
}

SymPoint diagonal_embed(cplx w, std::size_t n) {
  if (n == 0) throw InvalidInput("diagonal_embed: n must be >= 1");
  std::vector<cplx> s(n);
  double binom = 1.0;
  cplx power = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    binom = binom * static_cast<double>(n - k + 1) / static_cast<double>(k);
    power *= w;
    s[k - 1] = binom * power;
  }
  return SymPoint(std::move(s));
}

double f_defining(const DomainSpec& d, const SymPoint& s, const RootSolveOptions& opts) {
  const auto roots = roots_of(s, opts);
  double f = -kInf;
  for (const auto& z : roots.roots()) f = std::max(f, psi_defining(d, z));
  return f;
}

bool in_omega(const DomainSpec& d, const SymPoint& s, double nu) {
  if (!(nu > 0.0)) throw InvalidInput("in_omega: nu must be positive");
  return f_defining(d, s) < 1.0 / nu;
}

double distance_upper_bound(const DomainSpec& d, const SymPoint& s) {
  auto roots = roots_of(s).roots();
  bool moved = false;
  for (auto& z : roots) {
    const cplx p = project_to_closure(d, z);
    moved = moved || p != z;
    z = p;
  }
  // s already lies in the closure.
  if (!moved) return 0.0;
  const auto projected = elem_sym(roots);
  double sq = 0.0;
  for (std::size_t k = 0; k < s.n(); ++k) sq += std::norm(s[k] - projected[k]);
  return std::sqrt(sq);
}

double symmetric_exhaustion(const DomainSpec& d, const SymPoint& s) {
  double total = 0.0;
  const auto roots = roots_of(s);
  for (const auto& z : roots.roots()) {
    const double psi = psi_or_inf(d, z);
    if (!(psi < 0.0)) return kInf;
    total += -std::log(-psi);
  }
  return total;
}

SymPoint product_embed(std::span<const cplx> s2, std::span<const cplx> sigma) {
  if (s2.size() != 2) throw PreconditionError("product_embed: s2 must have length 2");
  if (sigma.empty()) throw PreconditionError("product_embed: n = 2 + |sigma| must be >= 3");
  const std::size_t n = 2 + sigma.size();
  // sigma_k with the boundary conventions; sigma_{n-1} = sigma_n = 0 lie past the end.
  auto sig = [&](long k) -> cplx {
    if (k == 0) return 1.0;
    if (k < 0 || k > static_cast<long>(sigma.size())) return 0.0;
    return sigma[static_cast<std::size_t>(k - 1)];
  };
  std::vector<cplx> phi(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const long kk = static_cast<long>(k);
    phi[k - 1] = s2[1] * sig(kk - 2) + s2[0] * sig(kk - 1) + sig(kk);
  }
  return SymPoint(std::move(phi));
}

Eigen::MatrixXcd product_embed_jacobian(std::span<const cplx> s2, std::span<const cplx> sigma) {
  if (s2.size() != 2) throw PreconditionError("product_embed: s2 must have length 2");
  if (sigma.empty()) throw PreconditionError("product_embed: n = 2 + |sigma| must be >= 3");
  const auto n = static_cast<Eigen::Index>(2 + sigma.size());
  auto sig = [&](Eigen::Index k) -> cplx {
    if (k == 0) return 1.0;
    if (k < 0 || k > static_cast<Eigen::Index>(sigma.size())) return 0.0;
    return sigma[static_cast<std::size_t>(k - 1)];
  };
  Eigen::MatrixXcd jac = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index row = 0; row < n; ++row) {
    const Eigen::Index k = row + 1;
    jac(row, 0) = sig(k - 1);
    jac(row, 1) = sig(k - 2);
    // Column 2 + (j-1) is d/dsigma_j: 1 at j = k, s_1 at j = k-1, s_2 at j = k-2.
    for (Eigen::Index j = 1; j <= n - 2; ++j) {
      cplx entry = 0.0;
      if (j == k) entry = 1.0;
      else if (j == k - 1) entry = s2[0];
      else if (j == k - 2) entry = s2[1];
      jac(row, 1 + j) = entry;
    }
  }
  return jac;
}

cplx product_embed_jacobian_det(std::span<const cplx> s2, std::span<const cplx> sigma) {
  return product_embed_jacobian(s2, sigma).partialPivLu().determinant();
}

double bidisc_value(const SymPoint& s) {
  if (s.n() != 2) throw InvalidInput("bidisc: s must have length 2");
  return std::abs(s[0] - std::conj(s[0]) * s[1]) + std::norm(s[1]);
}

Membership bidisc_contains(const SymPoint& s, double margin) {
  if (!(margin >= 0.0)) throw InvalidInput("bidisc_contains: margin must be >= 0");
  const double v = bidisc_value(s);
  if (v < 1.0 - margin) return Membership::inside;
  if (v > 1.0 + margin) return Membership::outside;
  return Membership::boundary_band;
}

}  // namespace symprod
