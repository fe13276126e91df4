#pragma once

// Planar domains with circular boundary: a disc minus finitely many closed,
// pairwise disjoint discs.

#include <json.hpp>
#include <vector>

#include "symprod/contour.hpp"

namespace symprod {

enum class Membership { inside, boundary_band, outside };

const char* to_string(Membership m);

class DomainSpec {
 public:
  /// Validates every invariant; throws InvalidInput naming the one violated.
  DomainSpec(Circle outer, std::vector<Circle> holes = {});

  static DomainSpec unit_disc() { return DomainSpec(Circle{0.0, 1.0}); }

  const Circle& outer() const { return outer_; }
  const std::vector<Circle>& holes() const { return holes_; }

 private:
  Circle outer_;
  std::vector<Circle> holes_;
};

/// max(|z - c0|/R0, max_j r_j/|z - z_j|) - 1.  Negative exactly on the domain.
/// Throws PoleError at a hole center.
double psi_defining(const DomainSpec& d, cplx z);

/// Bound on |grad psi| over the disc D(z, rho); infinite if that disc reaches
/// a hole center.
double psi_lipschitz(const DomainSpec& d, cplx z, double rho);

Membership contains_point(const DomainSpec& d, cplx z, double margin = 0.0);

/// Distance from z to the nearest boundary circle.
double boundary_distance(const DomainSpec& d, cplx z);

/// Nearest point of the closed domain along the ray from the offending
/// circle's center; z itself when z already lies in the closure.
cplx project_to_closure(const DomainSpec& d, cplx z);

/// Positively oriented boundary: outer circle counterclockwise, holes clockwise.
Contour boundary_contour(const DomainSpec& d, int nodes_per_curve);

/// {"outer": {"center": [re, im], "radius": r}, "holes": [...]}.
DomainSpec domain_from_json(const nlohmann::json& j);
nlohmann::json domain_to_json(const DomainSpec& d);

}  // namespace symprod
