#include "symprod/holomap.hpp"

#include <cmath>
#include <sstream>

namespace symprod {

namespace series {

std::vector<cplx> multiply(const std::vector<cplx>& a, const std::vector<cplx>& b, int order) {
  std::vector<cplx> out(static_cast<std::size_t>(order) + 1, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < a.size() && i < out.size(); ++i)
    for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<cplx> inverse_power(cplx d, int p, int order) {
  std::vector<cplx> out(static_cast<std::size_t>(order) + 1);
  const cplx inv = 1.0 / d;
  cplx lead = 1.0;
  for (int i = 0; i < p; ++i) lead *= inv;
  // binom(-p, k) (1/d)^k, built incrementally.
  out[0] = lead;
  for (int k = 1; k <= order; ++k) {
    lead *= -static_cast<double>(p + k - 1) / static_cast<double>(k) * inv;
    out[static_cast<std::size_t>(k)] = lead;
  }
  return out;
}

}  // namespace series

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_order(int order) {
  if (order < 0 || order > kMaxDerivativeOrder)
    throw UnsupportedOrder("derivative order " + std::to_string(order) +
                           " outside 0.." + std::to_string(kMaxDerivativeOrder));
}

// Points within rounding distance of the cut count as on it.
bool on_branch_cut(cplx d) {
  return d.real() <= 0.0 && std::abs(d.imag()) <= 1e-12 * std::max(1.0, std::abs(d));
}

std::string fmt(cplx z) {
  std::ostringstream os;
  os << "(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
  return os.str();
}

}  // namespace

HoloMap HoloMap::polynomial(std::vector<cplx> coeffs) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  for (const auto& c : coeffs)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw InvalidInput("polynomial: non-finite coefficient");
  return HoloMap(Polynomial{std::move(coeffs)});
}

HoloMap HoloMap::blaschke(std::vector<cplx> zeros, cplx factor) {
  if (std::abs(std::abs(factor) - 1.0) > 1e-12)
    throw InvalidInput("blaschke: factor must be unimodular");
  for (const auto& a : zeros)
    if (!(std::abs(a) < 1.0)) throw InvalidInput("blaschke: zeros must lie in the open unit disc");
  return HoloMap(Blaschke{std::move(zeros), factor});
}

HoloMap HoloMap::power_law(double beta, cplx base) {
  if (!std::isfinite(beta)) throw InvalidInput("power_law: exponent must be finite");
  return HoloMap(PowerLaw{beta, base});
}

HoloMap HoloMap::identity() { return HoloMap(Identity{}); }

HoloMap HoloMap::constant(cplx value) { return HoloMap(Constant{value}); }

HoloMap HoloMap::compose(const HoloMap& outer, const HoloMap& inner) {
  return HoloMap(Composition{std::make_shared<const HoloMap>(outer),
                             std::make_shared<const HoloMap>(inner)});
}

HoloMap HoloMap::power(const HoloMap& f, int m) {
  if (m < 0) throw InvalidInput("power: exponent must be >= 0");
  std::vector<cplx> mono(static_cast<std::size_t>(m) + 1, cplx{0.0, 0.0});
  mono.back() = 1.0;
  return compose(polynomial(std::move(mono)), f);
}

HoloMap::Kind HoloMap::kind() const {
  return static_cast<Kind>(node_.index());
}

cplx HoloMap::operator()(cplx t) const {
  return std::visit(
      overloaded{
          [&](const Polynomial& p) {
            cplx acc{0.0, 0.0};
            for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * t + *it;
            return acc;
          },
          [&](const Blaschke& b) {
            cplx acc = b.factor;
            for (const auto& a : b.zeros) acc *= (t - a) / (1.0 - std::conj(a) * t);
            return acc;
          },
          [&](const PowerLaw& p) {
            const cplx d = p.base - t;
            if (d == cplx{0.0, 0.0}) return cplx{p.beta > 0 ? 0.0 : HUGE_VAL, 0.0};
            return std::exp(p.beta * std::log(d));
          },
          [&](const Identity&) { return t; },
          [&](const Constant& c) { return c.value; },
          [&](const Composition& c) { return (*c.outer)((*c.inner)(t)); },
      },
      node_);
}

std::vector<cplx> HoloMap::taylor(cplx t, int order) const {
  require_order(order);
  const auto len = static_cast<std::size_t>(order) + 1;
  return std::visit(
      overloaded{
          [&](const Polynomial& p) {
            // Repeated synthetic division by (x - t) yields the shifted coefficients.
            std::vector<cplx> work(p.coeffs);
            std::vector<cplx> out(len, cplx{0.0, 0.0});
            for (std::size_t k = 0; k < len && !work.empty(); ++k) {
              cplx acc{0.0, 0.0};
              std::vector<cplx> quotient(work.size() > 1 ? work.size() - 1 : 0);
              for (std::size_t i = work.size(); i-- > 0;) {
                acc = acc * t + work[i];
                if (i > 0) quotient[i - 1] = acc;
              }
              out[k] = acc;
              work = std::move(quotient);
            }
            return out;
          },
          [&](const Blaschke& b) {
            std::vector<cplx> out(len, cplx{0.0, 0.0});
            out[0] = b.factor;
            for (const auto& a : b.zeros) {
              const cplx ac = std::conj(a);
              const cplx d0 = 1.0 - ac * t;
              if (d0 == cplx{0.0, 0.0}) throw DomainError("blaschke: evaluated at a pole");
              std::vector<cplx> inv(len);
              cplx term = 1.0 / d0;
              for (std::size_t k = 0; k < len; ++k) {
                inv[k] = term;
                term *= ac / d0;
              }
              std::vector<cplx> num(len, cplx{0.0, 0.0});
              num[0] = t - a;
              if (len > 1) num[1] = 1.0;
              out = series::multiply(out, series::multiply(num, inv, order), order);
            }
            return out;
          },
          [&](const PowerLaw& p) {
            const cplx d = p.base - t;
            if (d == cplx{0.0, 0.0}) throw DomainError("power_law: derivative at the branch point");
            std::vector<cplx> out(len);
            cplx term = std::exp(p.beta * std::log(d));
            const cplx inv = -1.0 / d;
            for (std::size_t k = 0; k < len; ++k) {
              out[k] = term;
              term *= (p.beta - static_cast<double>(k)) / static_cast<double>(k + 1) * inv;
            }
            return out;
          },
          [&](const Identity&) {
            std::vector<cplx> out(len, cplx{0.0, 0.0});
            out[0] = t;
            if (len > 1) out[1] = 1.0;
            return out;
          },
          [&](const Constant& c) {
            std::vector<cplx> out(len, cplx{0.0, 0.0});
            out[0] = c.value;
            return out;
          },
          [&](const Composition& c) {
            auto inner = c.inner->taylor(t, order);
            const auto outer = c.outer->taylor(inner[0], order);
            inner[0] = 0.0;
            std::vector<cplx> out(len, cplx{0.0, 0.0});
            std::vector<cplx> power(len, cplx{0.0, 0.0});
            power[0] = 1.0;
            for (std::size_t k = 0; k < len; ++k) {
              for (std::size_t i = 0; i < len; ++i) out[i] += outer[k] * power[i];
              power = series::multiply(power, inner, order);
            }
            return out;
          },
      },
      node_);
}

cplx HoloMap::derivative(cplx t, int k) const {
  require_order(k);
  const auto coeffs = taylor(t, k);
  double factorial = 1.0;
  for (int i = 2; i <= k; ++i) factorial *= i;
  return coeffs[static_cast<std::size_t>(k)] * factorial;
}

bool HoloMap::analytic_at(cplx t) const {
  return std::visit(
      overloaded{
          [&](const Polynomial&) { return true; },
          [&](const Blaschke& b) {
            for (const auto& a : b.zeros)
              if (1.0 - std::conj(a) * t == cplx{0.0, 0.0}) return false;
            return true;
          },
          [&](const PowerLaw& p) { return !on_branch_cut(p.base - t); },
          [&](const Identity&) { return true; },
          [&](const Constant&) { return true; },
          [&](const Composition& c) {
            return c.inner->analytic_at(t) && c.outer->analytic_at((*c.inner)(t));
          },
      },
      node_);
}

Integrand HoloMap::as_integrand() const {
  return [self = *this](cplx t) { return self(t); };
}

std::string HoloMap::describe() const {
  return std::visit(
      overloaded{
          [](const Polynomial& p) {
            std::string out = "polynomial[";
            for (std::size_t i = 0; i < p.coeffs.size(); ++i)
              out += (i ? "," : "") + fmt(p.coeffs[i]);
            return out + "]";
          },
          [](const Blaschke& b) {
            std::string out = "blaschke[";
            for (std::size_t i = 0; i < b.zeros.size(); ++i)
              out += (i ? "," : "") + fmt(b.zeros[i]);
            return out + ";" + fmt(b.factor) + "]";
          },
          [](const PowerLaw& p) {
            std::ostringstream os;
            os << "power_law[" << p.beta << ";" << fmt(p.base) << "]";
            return os.str();
          },
          [](const Identity&) { return std::string("identity"); },
          [](const Constant& c) { return "constant[" + fmt(c.value) + "]"; },
          [](const Composition& c) {
            return "compose[" + c.outer->describe() + "," + c.inner->describe() + "]";
          },
      },
      node_);
}

}  // namespace symprod
