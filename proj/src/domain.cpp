#include "symprod/domain.hpp"

#include <cmath>
#include <sstream>

namespace symprod {

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_circle(const Circle& c, const std::string& name) {
  if (!finite(c.center)) throw InvalidInput(name + ": center must be finite");
  if (!(c.radius > 0.0) || !std::isfinite(c.radius))
    throw InvalidInput(name + ": radius must be a positive finite number");
}

cplx point_from_json(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("field '" + field + "' must be a [re, im] pair of numbers");
  return {j[0].get<double>(), j[1].get<double>()};
}

Circle circle_from_json(const nlohmann::json& j, const std::string& field) {
  if (!j.is_object()) throw ParseError("field '" + field + "' must be an object");
  if (!j.contains("center")) throw ParseError("field '" + field + ".center' is missing");
  if (!j.contains("radius")) throw ParseError("field '" + field + ".radius' is missing");
  if (!j["radius"].is_number())
    throw ParseError("field '" + field + ".radius' must be a number");
  return Circle{point_from_json(j["center"], field + ".center"), j["radius"].get<double>()};
}

nlohmann::json circle_to_json(const Circle& c) {
  return {{"center", {c.center.real(), c.center.imag()}}, {"radius", c.radius}};
}

}  // namespace

const char* to_string(Membership m) {
  switch (m) {
    case Membership::inside: return "inside";
    case Membership::boundary_band: return "boundary-band";
    case Membership::outside: return "outside";
  }
  return "?";
}

DomainSpec::DomainSpec(Circle outer, std::vector<Circle> holes)
    : outer_(outer), holes_(std::move(holes)) {
  check_circle(outer_, "outer");
  for (std::size_t j = 0; j < holes_.size(); ++j) {
    const auto name = "hole " + std::to_string(j);
    check_circle(holes_[j], name);
    if (!(std::abs(holes_[j].center - outer_.center) + holes_[j].radius < outer_.radius))
      throw InvalidInput(name + ": closed hole must lie strictly inside the open outer disc");
    for (std::size_t i = 0; i < j; ++i) {
      if (!(std::abs(holes_[j].center - holes_[i].center) > holes_[j].radius + holes_[i].radius))
        throw InvalidInput(name + " and hole " + std::to_string(i) +
                           ": closed holes must be pairwise disjoint");
    }
  }
}

double psi_defining(const DomainSpec& d, cplx z) {
  double value = std::abs(z - d.outer().center) / d.outer().radius;
  for (std::size_t j = 0; j < d.holes().size(); ++j) {
    const double dist = std::abs(z - d.holes()[j].center);
    if (dist == 0.0)
      throw PoleError("psi: point coincides with the center of hole " + std::to_string(j));
    value = std::max(value, d.holes()[j].radius / dist);
  }
  return value - 1.0;
}

double psi_lipschitz(const DomainSpec& d, cplx z, double rho) {
  double bound = 1.0 / d.outer().radius;
  for (const auto& h : d.holes()) {
    const double dist = std::abs(z - h.center) - rho;
    if (dist <= 0.0) return std::numeric_limits<double>::infinity();
    bound = std::max(bound, h.radius / (dist * dist));
  }
  return bound;
}

Membership contains_point(const DomainSpec& d, cplx z, double margin) {
  if (!(margin >= 0.0)) throw InvalidInput("contains_point: margin must be >= 0");
  const double psi = psi_defining(d, z);
  if (psi < -margin) return Membership::inside;
  if (psi > margin) return Membership::outside;
  return Membership::boundary_band;
}

double boundary_distance(const DomainSpec& d, cplx z) {
  double best = std::abs(std::abs(z - d.outer().center) - d.outer().radius);
  for (const auto& h : d.holes())
    best = std::min(best, std::abs(std::abs(z - h.center) - h.radius));
  return best;
}

cplx project_to_closure(const DomainSpec& d, cplx z) {
  const auto& o = d.outer();
  const double r0 = std::abs(z - o.center);
  if (r0 > o.radius) return o.center + (z - o.center) * (o.radius / r0);
  for (const auto& h : d.holes()) {
    const double r = std::abs(z - h.center);
    if (r < h.radius) {
      // The center itself has no preferred ray; pick the positive real direction.
      if (r == 0.0) return h.center + h.radius;
      return h.center + (z - h.center) * (h.radius / r);
    }
  }
  return z;
}

Contour boundary_contour(const DomainSpec& d, int nodes_per_curve) {
  std::vector<std::pair<Circle, int>> circles;
  circles.emplace_back(d.outer(), 1);
  for (const auto& h : d.holes()) circles.emplace_back(h, -1);
  return Contour(std::move(circles), nodes_per_curve);
}

DomainSpec domain_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("domain spec must be a JSON object");
  if (!j.contains("outer")) throw ParseError("field 'outer' is missing");
  const Circle outer = circle_from_json(j["outer"], "outer");
  std::vector<Circle> holes;
  if (j.contains("holes")) {
    if (!j["holes"].is_array()) throw ParseError("field 'holes' must be an array");
    for (std::size_t i = 0; i < j["holes"].size(); ++i)
      holes.push_back(circle_from_json(j["holes"][i], "holes[" + std::to_string(i) + "]"));
  }
  return DomainSpec(outer, std::move(holes));
}

nlohmann::json domain_to_json(const DomainSpec& d) {
  nlohmann::json holes = nlohmann::json::array();
  for (const auto& h : d.holes()) holes.push_back(circle_to_json(h));
  return {{"outer", circle_to_json(d.outer())}, {"holes", holes}};
}

}  // namespace symprod
