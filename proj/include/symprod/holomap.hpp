#pragma once

// One-variable holomorphic maps with exact Taylor jets.

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "symprod/error.hpp"

namespace symprod {

/// Highest derivative order available in closed form.
inline constexpr int kMaxDerivativeOrder = 12;

using Integrand = std::function<cplx(cplx)>;

/// A holomorphic function descriptor: polynomial, finite Blaschke product,
/// power law (base - t)^beta on the principal branch, identity, constant, or a
/// composition of these.  Immutable; copies share structure.
class HoloMap {
 public:
  enum class Kind { polynomial, blaschke, power_law, identity, constant, composition };

  /// coeffs[k] multiplies t^k.
  static HoloMap polynomial(std::vector<cplx> coeffs);
  /// factor * prod (t - a) / (1 - conj(a) t); |factor| must be 1, |a| < 1.
  static HoloMap blaschke(std::vector<cplx> zeros, cplx factor = 1.0);
  static HoloMap power_law(double beta, cplx base = 1.0);
  static HoloMap identity();
  static HoloMap constant(cplx value);
  /// outer o inner.
  static HoloMap compose(const HoloMap& outer, const HoloMap& inner);
  /// t -> f(t)^m, built as composition with the monomial z^m.
  static HoloMap power(const HoloMap& f, int m);

  Kind kind() const;
  cplx operator()(cplx t) const;

  /// Taylor coefficients c_k = f^{(k)}(t)/k! for k = 0..order.
  std::vector<cplx> taylor(cplx t, int order) const;
  cplx derivative(cplx t, int k) const;

  /// False where the map has a pole or lies on its branch cut.
  bool analytic_at(cplx t) const;

  Integrand as_integrand() const;
  std::string describe() const;

 private:
  struct Polynomial { std::vector<cplx> coeffs; };
  struct Blaschke { std::vector<cplx> zeros; cplx factor; };
  struct PowerLaw { double beta; cplx base; };
  struct Identity {};
  struct Constant { cplx value; };
  struct Composition {
    std::shared_ptr<const HoloMap> outer;
    std::shared_ptr<const HoloMap> inner;
  };
  using Node = std::variant<Polynomial, Blaschke, PowerLaw, Identity, Constant, Composition>;

  explicit HoloMap(Node node) : node_(std::move(node)) {}
  Node node_;
};

/// Truncated power-series helpers shared with the residue evaluator.
namespace series {
std::vector<cplx> multiply(const std::vector<cplx>& a, const std::vector<cplx>& b, int order);
/// Coefficients of (d + h)^{-p} in powers of h, d != 0.
std::vector<cplx> inverse_power(cplx d, int p, int order);
}  // namespace series

}  // namespace symprod
