#pragma once

// Induced maps Sigma^n phi and the boundary integral operators G, J, T_n.
//
// Normalization: G_op carries the 1/(2 pi i) factor (G_op(1) = n); J_op and
// T_n_op are the bare contour integrals.

#include <functional>
#include <optional>

#include "symprod/contour.hpp"
#include "symprod/domain.hpp"
#include "symprod/roots.hpp"

namespace symprod {

enum class Route { direct, integral };

const char* to_string(Route r);

struct InducedMapResult {
  SymPoint value;
  Route route = Route::direct;
  int quadrature_nodes = 0;   // nodes per curve of the accepted rule
  double est_error = 0.0;     // N vs 2N difference; 0 for the direct route
};

struct QuadOptions {
  int nodes = 1024;           // starting node count per boundary circle
  double tol = 1e-10;         // relative N vs 2N acceptance threshold
  int max_nodes = 1 << 16;
  double delta = 1e-3;        // minimum root distance from the boundary
};

/// pi(phi(z_1), ..., phi(z_n)) over the roots of q(s;t).
InducedMapResult sigma_phi_direct(const HoloMap& phi, const SymPoint& s);

/// (1/2 pi i) int_{bU} g(t) q'(s;t)/q(s;t) dt.
QuadResult G_op(const Integrand& g, const SymPoint& s, const DomainSpec& d,
                const QuadOptions& opts = {});
QuadResult G_op(const HoloMap& g, const SymPoint& s, const DomainSpec& d,
                const QuadOptions& opts = {});

/// newton_P(Psi_1, ..., Psi_n) with Psi_m = G_op(phi^m, s).
InducedMapResult sigma_phi_integral(const HoloMap& phi, const SymPoint& s, const DomainSpec& d,
                                    const QuadOptions& opts = {});

struct DiscSpec {
  cplx center;
  double radius = 0.0;
  int multiplicity = 1;
};

/// Local inverse of pi near a stratum: for each disc, the barycenter
/// (1/(2 pi i mult)) int t q'/q dt of the roots it encloses, repeated mult
/// times.  Each disc's root count is verified by the argument principle.
RootMultiset gamma_inverse(const SymPoint& s, const std::vector<DiscSpec>& discs,
                           const std::optional<DomainSpec>& d = std::nullopt,
                           const QuadOptions& opts = {});

/// int_{bU} t^weight u(t) / q(s;t)^m dt.
QuadResult J_op(const Integrand& u, const SymPoint& s, int m, int weight_exponent,
                const DomainSpec& d, const QuadOptions& opts = {});
QuadResult J_op(const HoloMap& u, const SymPoint& s, int m, int weight_exponent,
                const DomainSpec& d, const QuadOptions& opts = {});

/// J_op with geometrically graded Gauss panels toward a boundary point of the
/// outer circle where u is only Holder continuous.
cplx J_op_graded(const Integrand& u, const SymPoint& s, int m, int weight_exponent,
                 const DomainSpec& d, cplx singular_point, const GradedOptions& graded = {},
                 const QuadOptions& opts = {});

/// int_{bU} u(t) / prod_j (t - z_j)^m dt.
QuadResult T_n_op(const Integrand& u, std::span<const cplx> z, int m, const DomainSpec& d,
                  const QuadOptions& opts = {});
QuadResult T_n_op(const HoloMap& u, std::span<const cplx> z, int m, const DomainSpec& d,
                  const QuadOptions& opts = {});

/// dG/ds_j through the boundary identity
/// (-1)^{j+1} (1/2 pi i) int t^{n-j} g'(t) / q(s;t) dt.
QuadResult G_partial(const HoloMap& g, const SymPoint& s, std::size_t j, const DomainSpec& d,
                     const QuadOptions& opts = {});

using SymMap = std::function<SymPoint(const SymPoint&)>;

struct FactorRecovery {
  cplx value;
  double residual = 0.0;
};

/// phi(w) from the diagonal: Phi(diagonal_embed(w, n)) must again be diagonal,
/// and its first coordinate divided by n is phi(w).  Throws NotInducedMap when
/// the image is off the diagonal by more than tol (relative to scale).
FactorRecovery recover_factor(const SymMap& Phi, cplx w, std::size_t n, double tol = 1e-8);

}  // namespace symprod
