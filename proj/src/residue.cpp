#include "symprod/residue.hpp"

#include <numbers>

namespace symprod {

cplx residue_reference(const HoloMap& u, const RootMultiset& poles, int m, const DomainSpec& d) {
  if (m < 1) throw InvalidInput("residue_reference: m must be >= 1");
  constexpr double kMinBoundaryDistance = 1e-6;
  const auto& clusters = poles.clusters();
  for (const auto& c : clusters) {
    if (contains_point(d, c.center) != Membership::inside ||
        boundary_distance(d, c.center) < kMinBoundaryDistance)
      throw PreconditionError("residue_reference: pole must lie inside the domain at distance >= 1e-6 from its boundary");
    if (c.multiplicity * m > kMaxDerivativeOrder)
      throw UnsupportedOrder("residue_reference: pole order " +
                             std::to_string(c.multiplicity * m) + " exceeds " +
                             std::to_string(kMaxDerivativeOrder));
  }

  cplx total{0.0, 0.0};
  for (std::size_t j = 0; j < clusters.size(); ++j) {
    const int order = clusters[j].multiplicity * m;
    const int jet = order - 1;
    const cplx v = clusters[j].center;
    // Residue = coefficient of h^{order-1} in u(v+h) * prod_{l != j} (v - v_l + h)^{-p_l}.
    auto product = u.taylor(v, jet);
    for (std::size_t l = 0; l < clusters.size(); ++l) {
      if (l == j) continue;
      product = series::multiply(
          product, series::inverse_power(v - clusters[l].center, clusters[l].multiplicity * m, jet),
          jet);
    }
    total += product[static_cast<std::size_t>(jet)];
  }
  return cplx{0.0, 2.0 * std::numbers::pi} * total;
}

}  // namespace symprod
