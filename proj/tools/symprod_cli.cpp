#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "symprod/config.hpp"
#include "symprod/geometry.hpp"
#include "symprod/induced.hpp"
#include "symprod/probes.hpp"

using namespace symprod;
using nlohmann::json;

namespace {

// Inline JSON when the argument starts with '{', otherwise a file path.
json json_argument(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') {
    try {
      return json::parse(arg);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("inline JSON is not valid: ") + e.what());
    }
  }
  return read_json_file(arg);
}

SymPoint point_from_reals(const std::vector<double>& v) {
  if (v.empty() || v.size() % 2 != 0)
    throw InvalidInput("s must be given as 2n reals: re(s_1) im(s_1) ... re(s_n) im(s_n)");
  std::vector<cplx> c;
  for (std::size_t i = 0; i < v.size(); i += 2) c.emplace_back(v[i], v[i + 1]);
  return SymPoint(std::move(c));
}

json complex_json(cplx z) { return {z.real(), z.imag()}; }

json point_json(std::span<const cplx> v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(complex_json(z));
  return out;
}

json map_result_json(const InducedMapResult& r) {
  return {{"route", to_string(r.route)},
          {"value", point_json(r.value.span())},
          {"quadrature_nodes", r.quadrature_nodes},
          {"est_error", r.est_error}};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric products of planar domains: membership, induced maps, probes"};
  app.require_subcommand(1);

  // contains
  auto* contains = app.add_subcommand("contains", "Classify s against Sigma^n U");
  std::string contains_domain;
  std::vector<double> contains_s;
  double contains_margin = 0.0;
  contains->add_option("--domain", contains_domain, "Domain JSON (file path or inline)");
  contains->add_option("--margin", contains_margin, "Boundary band half-width");
  contains->add_option("s", contains_s, "re/im pairs of s_1..s_n")->required();

  // map
  auto* map = app.add_subcommand("map", "Evaluate the induced map Sigma^n phi");
  std::string map_phi, map_domain, map_route = "direct";
  std::vector<double> map_s;
  QuadOptions map_quad;
  map->add_option("--phi", map_phi, "Map spec JSON (file path or inline)")->required();
  map->add_option("--route", map_route, "direct | integral | both")
      ->check(CLI::IsMember({"direct", "integral", "both"}));
  map->add_option("--domain", map_domain, "Domain JSON for the integral route (default unit disc)");
  map->add_option("--nodes", map_quad.nodes, "Initial quadrature nodes per circle");
  map->add_option("--tol", map_quad.tol, "Relative N vs 2N tolerance");
  map->add_option("s", map_s, "re/im pairs of s_1..s_n")->required();

  // gamma
  auto* gamma = app.add_subcommand("gamma", "Recover roots from separating discs");
  std::vector<std::string> gamma_discs;
  std::string gamma_domain;
  std::vector<double> gamma_s;
  gamma->add_option("--disc", gamma_discs, "Disc as re,im,radius[,multiplicity]; repeatable")
      ->allow_extra_args(false)
      ->required();
  gamma->add_option("--domain", gamma_domain, "Domain JSON the discs must lie in");
  gamma->add_option("s", gamma_s, "re/im pairs of s_1..s_n")->required();

  // probe
  auto* probe = app.add_subcommand("probe", "Run an experiment probe");
  std::string probe_kind, probe_config, probe_out, probe_csv;
  std::optional<std::uint64_t> probe_seed;
  probe->add_option("kind", probe_kind, "lipschitz | smoothness | sweep")
      ->required()
      ->check(CLI::IsMember({"lipschitz", "smoothness", "sweep"}));
  probe->add_option("config", probe_config, "Configuration JSON path")->required();
  probe->add_option("--seed", probe_seed, "Override the configured seed");
  probe->add_option("--out", probe_out, "Write the JSON report here instead of stdout");
  probe->add_option("--csv", probe_csv, "Also write per-sample rows as CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*contains) {
      const DomainSpec d =
          contains_domain.empty() ? DomainSpec::unit_disc() : domain_from_json(json_argument(contains_domain));
      const auto r = symprod_contains(d, point_from_reals(contains_s), contains_margin);
      json clusters = json::array();
      for (const auto& c : r.roots.clusters())
        clusters.push_back({{"center", complex_json(c.center)},
                            {"multiplicity", c.multiplicity},
                            {"radius", c.radius}});
      json out{{"classification", to_string(r.classification)},
               {"roots", point_json(r.roots.roots())},
               {"clusters", clusters},
               {"stratum", {{"k", r.stratum.k}, {"multiplicities", r.stratum.multiplicities}}}};
      std::cout << out.dump(2) << "\n";
    } else if (*map) {
      const auto phi = holomap_from_json(json_argument(map_phi));
      const auto s = point_from_reals(map_s);
      const DomainSpec d =
          map_domain.empty() ? DomainSpec::unit_disc() : domain_from_json(json_argument(map_domain));
      json out{{"phi", phi.describe()}};
      std::optional<InducedMapResult> direct, integral;
      if (map_route != "integral") {
        direct = sigma_phi_direct(phi, s);
        out["direct"] = map_result_json(*direct);
      }
      if (map_route != "direct") {
        integral = sigma_phi_integral(phi, s, d, map_quad);
        out["integral"] = map_result_json(*integral);
      }
      if (direct && integral)
        out["max_difference"] = max_abs_diff(direct->value.span(), integral->value.span());
      std::cout << out.dump(2) << "\n";
    } else if (*gamma) {
      std::vector<DiscSpec> discs;
      for (const auto& text : gamma_discs) {
        std::vector<double> parts;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) parts.push_back(std::stod(item));
        if (parts.size() != 3 && parts.size() != 4)
          throw InvalidInput("--disc expects re,im,radius[,multiplicity], got '" + text + "'");
        discs.push_back({{parts[0], parts[1]}, parts[2], parts.size() == 4 ? static_cast<int>(parts[3]) : 1});
      }
      std::optional<DomainSpec> d;
      if (!gamma_domain.empty()) d = domain_from_json(json_argument(gamma_domain));
      const auto r = gamma_inverse(point_from_reals(gamma_s), discs, d);
      std::cout << json{{"roots", point_json(r.roots())}}.dump(2) << "\n";
    } else if (*probe) {
      const json cfg = read_json_file(probe_config);
      ProbeReport report;
      if (probe_kind == "lipschitz") {
        const auto c = lipschitz_config_from_json(cfg);
        report = lipschitz_cone_probe(c.a, c.b, c.t_values, c.margin);
        if (probe_seed) report.seed = *probe_seed;
      } else if (probe_kind == "smoothness") {
        const auto c = smoothness_config_from_json(cfg);
        report = smoothness_loss_probe(c.m, c.n, c.beta, c.w_grid, c.options);
        if (probe_seed) report.seed = *probe_seed;
      } else {
        const auto base = std::filesystem::path(probe_config).parent_path().string();
        auto c = sweep_config_from_json(cfg, base.empty() ? "." : base);
        if (probe_seed) c.seed = *probe_seed;
        report = sweep_report(c);
      }
      if (probe_out.empty()) std::cout << report.to_json_string();
      else write_file(probe_out, report.to_json_string());
      if (!probe_csv.empty()) write_file(probe_csv, report.to_csv());
      return report.verdict == Verdict::fail ? 1 : 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
