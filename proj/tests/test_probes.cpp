#include <doctest.h>

#include "symprod/config.hpp"
#include "symprod/probes.hpp"

using namespace symprod;
using nlohmann::json;

namespace {

std::vector<std::string> column(const ProbeReport& r, const std::string& name) {
  std::vector<std::string> out;
  for (const auto& row : r.samples)
    for (const auto& [key, value] : row.cells)
      if (key == name) out.push_back(std::get<std::string>(value));
  return out;
}

}  // namespace

TEST_CASE("Lipschitz cone examples") {
  SUBCASE("a = i, b = 0: outside") {
    const auto r = lipschitz_cone_probe({0.0, 1.0}, 0.0, {1e-2, 1e-3, 1e-4});
    CHECK(r.verdict == Verdict::pass);
    for (const auto& c : column(r, "roots_class")) CHECK(c == "outside");
    for (const auto& c : column(r, "bidisc_class")) CHECK(c == "outside");
  }
  SUBCASE("a = 1, b = 2: inside") {
    const auto r = lipschitz_cone_probe(1.0, 2.0, {0.1, 0.3, 0.5, 0.7, 0.9});
    CHECK(r.verdict == Verdict::pass);
    for (const auto& c : column(r, "roots_class")) CHECK(c == "inside");
  }
  SUBCASE("a = b = 1: boundary band") {
    const auto r = lipschitz_cone_probe(1.0, 1.0, {0.1, 0.5, 0.9});
    CHECK(r.verdict == Verdict::pass);
    for (const auto& c : column(r, "bidisc_class")) CHECK(c == "boundary-band");
    for (const auto& c : column(r, "roots_class")) CHECK(c == "boundary-band");
  }
  CHECK_THROWS_AS(lipschitz_cone_probe(1.0, 1.0, {1.5}), InvalidInput);
}

TEST_CASE("smoothness probe") {
  const auto grid = linspace(0.5, 0.99, 10);
  const auto r = smoothness_loss_probe(1, 2, 0.5, grid);
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.fitted["slope"].get<double>() == doctest::Approx(-0.5).epsilon(0.01));
  CHECK(r.quadrature.contains("levels"));
  const auto smooth = smoothness_loss_probe(1, 2, 2.0, grid);
  CHECK(smooth.verdict == Verdict::pass);
  CHECK(smooth.fitted["slope"].get<double>() >= -0.05);
  CHECK_THROWS_AS(smoothness_loss_probe(1, 2, 0.5, {0.3}), PreconditionError);
  CHECK_THROWS_AS(smoothness_loss_probe(2, 2, 1.5, grid), PreconditionError);
  // Too few points survive: the verdict fails instead of fitting noise.
  const auto sparse = smoothness_loss_probe(1, 2, 0.5, {0.5, 0.6, 0.7});
  CHECK(sparse.verdict == Verdict::fail);
}

TEST_CASE("line fit") {
  const auto fit = fit_line({0.0, 1.0, 2.0, 3.0}, {1.0, 3.0, 5.0, 7.0});
  CHECK(fit.slope == doctest::Approx(2.0));
  CHECK(fit.intercept == doctest::Approx(1.0));
  CHECK(fit.slope_stderr == doctest::Approx(0.0));
  CHECK_THROWS_AS(fit_line({1.0, 1.0}, {0.0, 1.0}), InvalidInput);
}

TEST_CASE("sweep suites") {
  SweepConfig c;
  c.samples = 200;
  c.seed = 5;
  c.suites = known_suites();
  const auto r = sweep_report(c);
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.fitted["lojasiewicz"]["verdict"] == "informational");
  CHECK(r.fitted["bidisc-equivalence"]["disagreements"] == 0);
  CHECK(r.seed == 5);

  SweepConfig one;
  one.n = 1;
  one.samples = 100;
  one.suites = {"membership-f", "round-trip", "properness", "route-agreement", "functoriality"};
  CHECK(sweep_report(one).verdict == Verdict::pass);

  SweepConfig bad;
  bad.n = 3;
  bad.suites = {"bidisc-equivalence"};
  CHECK_THROWS_AS(sweep_report(bad), InvalidInput);

  SweepConfig only_info;
  only_info.samples = 50;
  only_info.suites = {"lojasiewicz"};
  CHECK(sweep_report(only_info).verdict == Verdict::informational);
}

TEST_CASE("reports are deterministic and record their inputs") {
  SweepConfig c;
  c.samples = 100;
  c.seed = 9;
  c.suites = {"round-trip", "route-agreement"};
  const auto a = sweep_report(c);
  const auto b = sweep_report(c);
  CHECK(a.to_json_string() == b.to_json_string());
  CHECK(a.to_csv() == b.to_csv());
  const auto j = json::parse(a.to_json_string());
  CHECK(j["quadrature"]["initial_nodes"] == 2048);
  CHECK(j["parameters"]["n"] == 2);
  CHECK(j["seed"] == 9);
  c.seed = 10;
  CHECK(sweep_report(c).to_json_string() != a.to_json_string());
}

TEST_CASE("CSV layout") {
  ProbeReport r;
  r.samples.push_back(SampleRow{}.add("z", cplx{1.0, -2.0}).add("label", std::string("a,b")));
  r.samples.push_back(SampleRow{}.add("k", 3L));
  CHECK(r.to_csv() == "z_re,z_im,label,k\n1.0,-2.0,\"a,b\",\n,,,3\n");
}

TEST_CASE("configuration parsing") {
  SUBCASE("map specs") {
    const auto p = holomap_from_json(json::parse(R"({"kind":"polynomial","coeffs":[[0,0],[1,0],0.5]})"));
    CHECK(p(2.0) == cplx{4.0, 0.0});
    const auto c = holomap_from_json(json::parse(
        R"({"kind":"compose","outer":{"kind":"power_law","beta":2},"inner":{"kind":"blaschke","zeros":[[0.5,0]]}})"));
    CHECK(std::abs(c(0.5) - 1.0) <= 1e-15);
    CHECK(holomap_from_json(json::parse(R"({"kind":"constant","value":[1,2]})"))(0.0) == cplx{1.0, 2.0});
    CHECK_THROWS_WITH_AS(holomap_from_json(json::parse(R"({"kind":"compose","outer":{"kind":"identity"}})")),
                         doctest::Contains("phi.inner"), ParseError);
    CHECK_THROWS_WITH_AS(holomap_from_json(json::parse(R"({"kind":"blaschke","zeros":[[2,0]]})")),
                         doctest::Contains("phi"), ParseError);
    CHECK_THROWS_WITH_AS(holomap_from_json(json::parse(R"({"kind":"spline"})")),
                         doctest::Contains("phi.kind"), ParseError);
  }
  SUBCASE("sweep config") {
    const auto c = sweep_config_from_json(json::parse(
        R"({"n":3,"samples":10,"seed":4,"quadrature":{"nodes":512},"domain":{"outer":{"center":[0,0],"radius":2}}})"));
    CHECK(c.n == 3);
    CHECK(c.quad.nodes == 512);
    CHECK(c.domain.outer().radius == 2.0);
    CHECK(std::find(c.suites.begin(), c.suites.end(), "bidisc-equivalence") == c.suites.end());
    CHECK_THROWS_WITH_AS(sweep_config_from_json(json::parse(R"({"domain":{"outer":{"center":[0,0]}}})")),
                         doctest::Contains("outer.radius"), ParseError);
    CHECK_THROWS_WITH_AS(sweep_config_from_json(json::parse(R"({"n":"two"})")),
                         doctest::Contains("'n'"), ParseError);
    CHECK_THROWS_WITH_AS(sweep_config_from_json(json::parse(R"({"suites":["nope"]})")),
                         doctest::Contains("suites[0]"), ParseError);
    CHECK_THROWS_WITH_AS(sweep_config_from_json(json::parse(R"({"sample":3})")),
                         doctest::Contains("'sample'"), ParseError);
    CHECK_THROWS_WITH_AS(sweep_config_from_json(json::parse(R"({"quadrature":{"nodes":0}})")),
                         doctest::Contains("quadrature.nodes"), ParseError);
  }
  SUBCASE("probe configs") {
    const auto l = lipschitz_config_from_json(json::parse(R"({"a":[0,1],"b":0})"));
    CHECK(l.a == cplx{0.0, 1.0});
    CHECK(l.t_values.size() == 3);
    CHECK_THROWS_WITH_AS(lipschitz_config_from_json(json::parse(R"({"a":[0,1],"b":0,"t_values":[2]})")),
                         doctest::Contains("t_values[0]"), ParseError);
    const auto s = smoothness_config_from_json(json::parse(R"({"m":2,"n":2,"beta":2.5,"graded":{"levels":30}})"));
    CHECK(s.options.graded.levels == 30);
    CHECK(s.w_grid.size() == 12);
    CHECK_THROWS_WITH_AS(smoothness_config_from_json(json::parse(R"({"m":0,"n":2,"beta":1})")),
                         doctest::Contains("'m'"), ParseError);
  }
}
