#pragma once

// Residue-theorem reference values for Cauchy-type integrals; the exact
// counterpart of the boundary quadratures.

#include "symprod/domain.hpp"
#include "symprod/holomap.hpp"
#include "symprod/roots.hpp"

namespace symprod {

/// 2 pi i * sum over clusters v_j of Res_{t=v_j} u(t) / prod_l (t - v_l)^{m * mult_l},
/// i.e. the value of the contour integral over the boundary of d.
/// Requires every cluster at distance >= 1e-6 inside d and m * mult <= 12.
cplx residue_reference(const HoloMap& u, const RootMultiset& poles, int m, const DomainSpec& d);

}  // namespace symprod
