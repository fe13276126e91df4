#include "symprod/config.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

namespace symprod {

namespace {

using nlohmann::json;

std::string join(const std::string& field, const std::string& key) {
  return field.empty() ? key : field + "." + key;
}

const json& require(const json& j, const std::string& field, const std::string& key) {
  if (!j.contains(key)) throw ParseError("field '" + join(field, key) + "' is missing");
  return j[key];
}

double number(const json& j, const std::string& name) {
  if (!j.is_number()) throw ParseError("field '" + name + "' must be a number");
  return j.get<double>();
}

long integer(const json& j, const std::string& name, long min) {
  if (!j.is_number_integer()) throw ParseError("field '" + name + "' must be an integer");
  const long v = j.get<long>();
  if (v < min)
    throw ParseError("field '" + name + "' must be >= " + std::to_string(min));
  return v;
}

cplx complex_value(const json& j, const std::string& name) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ParseError("field '" + name + "' must be a number or a [re, im] pair");
}

std::vector<cplx> complex_list(const json& j, const std::string& name) {
  if (!j.is_array()) throw ParseError("field '" + name + "' must be an array");
  std::vector<cplx> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(complex_value(j[i], name + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<double> real_list(const json& j, const std::string& name) {
  if (!j.is_array()) throw ParseError("field '" + name + "' must be an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(number(j[i], name + "[" + std::to_string(i) + "]"));
  return out;
}

void reject_unknown(const json& j, const std::string& field,
                    std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ParseError("field '" + join(field, key) + "' is not recognized");
  }
}

void require_object(const json& j, const std::string& name) {
  if (!j.is_object()) throw ParseError(name.empty() ? std::string("configuration must be a JSON object")
                                                    : "field '" + name + "' must be an object");
}

GradedOptions graded_from_json(const json& j, const std::string& name, GradedOptions out) {
  require_object(j, name);
  reject_unknown(j, name, {"levels", "order"});
  if (j.contains("levels")) out.levels = static_cast<int>(integer(j["levels"], name + ".levels", 1));
  if (j.contains("order")) out.order = static_cast<int>(integer(j["order"], name + ".order", 1));
  return out;
}

}  // namespace

HoloMap holomap_from_json(const json& j, const std::string& field) {
  require_object(j, field);
  const auto& kind_json = require(j, field, "kind");
  if (!kind_json.is_string()) throw ParseError("field '" + join(field, "kind") + "' must be a string");
  const auto kind = kind_json.get<std::string>();
  try {
    if (kind == "polynomial") {
      reject_unknown(j, field, {"kind", "coeffs"});
      return HoloMap::polynomial(
          complex_list(require(j, field, "coeffs"), join(field, "coeffs")));
    }
    if (kind == "blaschke") {
      reject_unknown(j, field, {"kind", "zeros", "factor"});
      const cplx factor =
          j.contains("factor") ? complex_value(j["factor"], join(field, "factor")) : cplx{1.0, 0.0};
      return HoloMap::blaschke(complex_list(require(j, field, "zeros"), join(field, "zeros")),
                               factor);
    }
    if (kind == "power_law") {
      reject_unknown(j, field, {"kind", "beta", "base"});
      const cplx base =
          j.contains("base") ? complex_value(j["base"], join(field, "base")) : cplx{1.0, 0.0};
      return HoloMap::power_law(number(require(j, field, "beta"), join(field, "beta")), base);
    }
    if (kind == "identity") {
      reject_unknown(j, field, {"kind"});
      return HoloMap::identity();
    }
    if (kind == "constant") {
      reject_unknown(j, field, {"kind", "value"});
      return HoloMap::constant(complex_value(require(j, field, "value"), join(field, "value")));
    }
    if (kind == "compose") {
      reject_unknown(j, field, {"kind", "outer", "inner"});
      return HoloMap::compose(holomap_from_json(require(j, field, "outer"), join(field, "outer")),
                              holomap_from_json(require(j, field, "inner"), join(field, "inner")));
    }
  } catch (const InvalidInput& e) {
    throw ParseError("field '" + field + "': " + e.what());
  }
  throw ParseError("field '" + join(field, "kind") + "': unknown map kind '" + kind + "'");
}

LipschitzConfig lipschitz_config_from_json(const json& j) {
  require_object(j, "");
  reject_unknown(j, "", {"a", "b", "t_values", "margin"});
  LipschitzConfig c;
  c.a = complex_value(require(j, "", "a"), "a");
  c.b = complex_value(require(j, "", "b"), "b");
  if (j.contains("t_values")) c.t_values = real_list(j["t_values"], "t_values");
  for (std::size_t i = 0; i < c.t_values.size(); ++i)
    if (!(c.t_values[i] > 0.0 && c.t_values[i] < 1.0))
      throw ParseError("field 't_values[" + std::to_string(i) + "]' must lie in (0, 1)");
  if (j.contains("margin")) c.margin = number(j["margin"], "margin");
  return c;
}

SmoothnessConfig smoothness_config_from_json(const json& j) {
  require_object(j, "");
  reject_unknown(j, "", {"m", "n", "beta", "w_grid", "graded", "reference", "rel_tol",
                         "min_points"});
  SmoothnessConfig c;
  c.m = static_cast<int>(integer(require(j, "", "m"), "m", 1));
  c.n = static_cast<int>(integer(require(j, "", "n"), "n", 1));
  c.beta = number(require(j, "", "beta"), "beta");
  c.w_grid = j.contains("w_grid") ? real_list(j["w_grid"], "w_grid") : linspace(0.5, 0.99, 12);
  if (j.contains("graded")) c.options.graded = graded_from_json(j["graded"], "graded", c.options.graded);
  if (j.contains("reference"))
    c.options.reference = graded_from_json(j["reference"], "reference", c.options.reference);
  if (j.contains("rel_tol")) c.options.rel_tol = number(j["rel_tol"], "rel_tol");
  if (j.contains("min_points"))
    c.options.min_points = static_cast<std::size_t>(integer(j["min_points"], "min_points", 2));
  return c;
}

SweepConfig sweep_config_from_json(const json& j, const std::string& base_dir) {
  require_object(j, "");
  reject_unknown(j, "", {"domain", "domain_path", "n", "samples", "seed", "suites", "max_rows",
                         "band", "route_tol", "functoriality_tol", "properness_radius",
                         "quadrature"});
  SweepConfig c;
  if (j.contains("domain") && j.contains("domain_path"))
    throw ParseError("fields 'domain' and 'domain_path' are mutually exclusive");
  auto parse_domain = [](const json& dj, const std::string& name) {
    try {
      return domain_from_json(dj);
    } catch (const ParseError& e) {
      throw ParseError(name + ": " + e.what());
    } catch (const InvalidInput& e) {
      throw ParseError(name + ": " + e.what());
    }
  };
  if (j.contains("domain")) c.domain = parse_domain(j["domain"], "field 'domain'");
  if (j.contains("domain_path")) {
    if (!j["domain_path"].is_string()) throw ParseError("field 'domain_path' must be a string");
    std::filesystem::path p = j["domain_path"].get<std::string>();
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    json dj;
    try {
      dj = read_json_file(p.string());
    } catch (const ParseError& e) {
      throw ParseError(std::string("field 'domain_path': ") + e.what());
    }
    c.domain = parse_domain(dj, "field 'domain_path' (" + p.string() + ")");
  }
  if (j.contains("n")) c.n = static_cast<std::size_t>(integer(j["n"], "n", 1));
  if (j.contains("samples")) c.samples = static_cast<std::size_t>(integer(j["samples"], "samples", 0));
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw ParseError("field 'seed' must be a non-negative integer");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("suites")) {
    const auto& sj = j["suites"];
    if (!sj.is_array()) throw ParseError("field 'suites' must be an array");
    for (std::size_t i = 0; i < sj.size(); ++i) {
      const std::string name = "suites[" + std::to_string(i) + "]";
      if (!sj[i].is_string()) throw ParseError("field '" + name + "' must be a string");
      const auto suite = sj[i].get<std::string>();
      const auto& known = known_suites();
      if (std::find(known.begin(), known.end(), suite) == known.end())
        throw ParseError("field '" + name + "': unknown suite '" + suite + "'");
      c.suites.push_back(suite);
    }
  } else {
    // Every suite that applies; the closed-form bidisc test needs n = 2 on the unit disc.
    const auto& o = c.domain.outer();
    const bool unit_disc = c.domain.holes().empty() && o.center == cplx{0.0, 0.0} && o.radius == 1.0;
    for (const auto& suite : known_suites())
      if (suite != "bidisc-equivalence" || (c.n == 2 && unit_disc)) c.suites.push_back(suite);
  }
  if (j.contains("max_rows")) c.max_rows = static_cast<std::size_t>(integer(j["max_rows"], "max_rows", 0));
  if (j.contains("band")) c.band = number(j["band"], "band");
  if (j.contains("route_tol")) c.route_tol = number(j["route_tol"], "route_tol");
  if (j.contains("functoriality_tol"))
    c.functoriality_tol = number(j["functoriality_tol"], "functoriality_tol");
  if (j.contains("properness_radius"))
    c.properness_radius = number(j["properness_radius"], "properness_radius");
  if (j.contains("quadrature")) {
    const auto& q = j["quadrature"];
    require_object(q, "quadrature");
    reject_unknown(q, "quadrature", {"nodes", "tol", "max_nodes", "delta"});
    if (q.contains("nodes")) c.quad.nodes = static_cast<int>(integer(q["nodes"], "quadrature.nodes", 1));
    if (q.contains("tol")) c.quad.tol = number(q["tol"], "quadrature.tol");
    if (q.contains("max_nodes"))
      c.quad.max_nodes = static_cast<int>(integer(q["max_nodes"], "quadrature.max_nodes", 1));
    if (q.contains("delta")) c.quad.delta = number(q["delta"], "quadrature.delta");
  }
  return c;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  std::vector<double> out;
  if (count == 1) return {lo};
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
  return out;
}

}  // namespace symprod
