#pragma once

// Geometry of the symmetric product Sigma^n U = pi(U^n) of a planar domain.

#include <Eigen/Dense>
#include <span>

#include "symprod/domain.hpp"
#include "symprod/roots.hpp"

namespace symprod {

struct SymProductPoint {
  SymPoint s;
  Membership classification = Membership::outside;
  PartitionType stratum;
  RootMultiset roots;
};

/// Root-based membership.  A root counts as decided only when psi stays on one
/// side of +-margin over its whole inclusion disc.
SymProductPoint symprod_contains(const DomainSpec& d, const SymPoint& s, double margin = 0.0,
                                 const RootSolveOptions& opts = {});

/// (C(n,1) w, C(n,2) w^2, ..., w^n) = pi(w, ..., w).
SymPoint diagonal_embed(cplx w, std::size_t n);

/// max over roots of psi(root).  Negative exactly on Sigma^n U.
double f_defining(const DomainSpec& d, const SymPoint& s, const RootSolveOptions& opts = {});

/// Membership in Omega_nu = {f < 1/nu}.
bool in_omega(const DomainSpec& d, const SymPoint& s, double nu);

/// Upper bound on dist(s, closure of Sigma^n U): project every root radially
/// into the closed domain and re-symmetrize.  Not the distance itself.
double distance_upper_bound(const DomainSpec& d, const SymPoint& s);

/// sum_j -log(-psi(z_j)): plurisubharmonic exhaustion of Sigma^n U, +inf
/// off the domain.
double symmetric_exhaustion(const DomainSpec& d, const SymPoint& s);

/// Phi_k = s_2 sigma_{k-2} + s_1 sigma_{k-1} + sigma_k for k = 1..n, with
/// sigma_0 = 1 and sigma_{-1} = sigma_{n-1} = sigma_n = 0.  n = 2 + |sigma| >= 3.
SymPoint product_embed(std::span<const cplx> s2, std::span<const cplx> sigma);

/// Jacobian of product_embed; columns d/ds_1, d/ds_2, d/dsigma_1, ..., d/dsigma_{n-2}.
Eigen::MatrixXcd product_embed_jacobian(std::span<const cplx> s2, std::span<const cplx> sigma);
cplx product_embed_jacobian_det(std::span<const cplx> s2, std::span<const cplx> sigma);

/// |s_1 - conj(s_1) s_2| + |s_2|^2, the closed-form test for Sigma^2 of the unit disc.
double bidisc_value(const SymPoint& s);
Membership bidisc_contains(const SymPoint& s, double margin = 0.0);

}  // namespace symprod
