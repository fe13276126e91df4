#include <doctest.h>

#include "oracles.hpp"
#include "symprod/geometry.hpp"
#include "symprod/roots.hpp"

using namespace symprod;

TEST_CASE("roots of small polynomials") {
  SUBCASE("double root at 1") {
    const auto r = roots_of(SymPoint({2.0, 1.0}));
    REQUIRE(r.n() == 2);
    for (const auto& z : r.roots()) CHECK(std::abs(z - 1.0) <= 1e-7);
    const auto p = partition_type(r);
    CHECK(p.k == 1);
    CHECK(p.multiplicities == std::vector<int>{2});
    REQUIRE(r.clusters().size() == 1);
    CHECK(std::abs(r.clusters()[0].center - 1.0) <= 1e-12);
  }
  SUBCASE("t^2 - 1") {
    const auto r = roots_of(SymPoint({0.0, -1.0}));
    CHECK(multiset_distance(r.roots(), std::vector<cplx>{1.0, -1.0}) <= 1e-14);
  }
  SUBCASE("n = 1") {
    const auto r = roots_of(SymPoint({cplx{0.3, -0.2}}));
    CHECK(r.roots() == std::vector<cplx>{cplx{0.3, -0.2}});
  }
  SUBCASE("all roots zero") {
    const auto r = roots_of(SymPoint(std::vector<cplx>(6, 0.0)));
    for (const auto& z : r.roots()) CHECK(std::abs(z) <= 1e-12);
    CHECK(partition_type(r).multiplicities == std::vector<int>{6});
  }
}

TEST_CASE("partition types") {
  CHECK(partition_type(roots_of(elem_sym(std::vector<cplx>{1.0, 1.0, 2.0}))) ==
        PartitionType{2, {1, 2}});
  const cplx w{0.3, -0.4};
  CHECK(partition_type(roots_of(diagonal_embed(w, 3))) == PartitionType{1, {3}});
  const RootMultiset close({1.0, 1.0 + 1e-12}, 1e-6);
  CHECK(partition_type(close) == PartitionType{1, {2}});
  CHECK(partition_type(close, 1e-14) == PartitionType{2, {1, 1}});
  const RootMultiset spread({0.0, 1.0, 2.0, 3.0});
  CHECK(partition_type(spread) == PartitionType{4, {1, 1, 1, 1}});
}

TEST_CASE("round trip on random multisets") {
  oracle::Rng rng(21);
  for (std::size_t n = 2; n <= 10; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto z = rng.points(n, 2.0);
      const auto r = roots_of(elem_sym(z));
      CHECK(hausdorff_distance(r.roots(), z) <= 1e-8 * scale_of(z));
      CHECK(multiset_distance(r.roots(), z) <= 1e-8 * scale_of(z));
    }
  }
}

TEST_CASE("inclusion radii contain the true roots") {
  oracle::Rng rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const auto z = rng.separated(static_cast<std::size_t>(rng.integer(2, 8)), 1.0, 0.05);
    const auto r = roots_of(elem_sym(z));
    REQUIRE(r.radii().size() == r.n());
    for (std::size_t i = 0; i < r.n(); ++i) {
      double nearest = INFINITY;
      for (const auto& x : z) nearest = std::min(nearest, std::abs(x - r.roots()[i]));
      // The radius is a bound up to floating point evaluation of the bound itself.
      CHECK(nearest <= r.radii()[i] * (1.0 + 1e-6) + 1e-15);
    }
  }
}

TEST_CASE("companion roots agree with Aberth") {
  oracle::Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto z = rng.points(static_cast<std::size_t>(rng.integer(1, 9)), 1.5);
    const auto s = elem_sym(z);
    CHECK(multiset_distance(companion_roots(s), roots_of(s).roots()) <= 1e-8 * scale_of(z));
  }
}

TEST_CASE("properness bound") {
  oracle::Rng rng(24);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 8));
    const double r = rng.uniform(0.01, 5.0);
    std::vector<cplx> s(n);
    double norm = 0.0;
    for (auto& c : s) {
      c = rng.in_box(1.0);
      norm += std::norm(c);
    }
    const double scale = r * rng.uniform(0.0, 1.0) / std::sqrt(norm);
    for (auto& c : s) c *= scale;
    const double bound = std::max(std::sqrt(static_cast<double>(n)) * r, 1.0);
    for (const auto& z : roots_of(SymPoint(s)).roots()) CHECK(std::abs(z) <= bound * (1.0 + 1e-8));
  }
}

TEST_CASE("roots depend continuously on coefficients") {
  // Near a k-fold root the perturbation scales like |ds|^{1/k}.
  const cplx w{0.2, 0.1};
  const auto base = diagonal_embed(w, 3);
  for (double eps : {1e-6, 1e-9, 1e-12}) {
    auto c = base.coeffs();
    c[2] += eps;
    const auto r = roots_of(SymPoint(c));
    for (const auto& z : r.roots()) CHECK(std::abs(z - w) <= 4.0 * std::cbrt(eps));
  }
}

TEST_CASE("multiset distances") {
  const std::vector<cplx> a{0.0, 1.0, 1.0};
  const std::vector<cplx> b{1.0, 0.0, 1.1};
  CHECK(multiset_distance(a, b) == doctest::Approx(0.1));
  CHECK(hausdorff_distance(a, b) == doctest::Approx(0.1));
  // Sets agree but multiplicities differ: Hausdorff 0, bottleneck 1.
  const std::vector<cplx> c{0.0, 0.0, 1.0};
  CHECK(hausdorff_distance(a, c) == 0.0);
  CHECK(multiset_distance(a, c) == doctest::Approx(1.0));
  CHECK_THROWS_AS(multiset_distance(a, std::vector<cplx>{0.0}), InvalidInput);
}

TEST_CASE("large and tiny scales") {
  for (double scale : {1e-6, 1e6}) {
    const std::vector<cplx> z{scale * cplx{1.0, 0.5}, scale * cplx{-0.3, 0.2}, scale * cplx{0.1, -0.9}};
    const auto r = roots_of(elem_sym(z));
    CHECK(multiset_distance(r.roots(), z) <= 1e-10 * scale_of(z));
  }
}
