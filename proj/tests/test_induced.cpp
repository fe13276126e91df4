#include <doctest.h>

#include "oracles.hpp"
#include "symprod/geometry.hpp"
#include "symprod/induced.hpp"

using namespace symprod;

namespace {

const DomainSpec kDisc = DomainSpec::unit_disc();

HoloMap square() { return HoloMap::polynomial({0.0, 0.0, 1.0}); }

}  // namespace

TEST_CASE("direct route examples") {
  const SymPoint s({3.0, 2.0});
  CHECK(oracle::max_diff(sigma_phi_direct(HoloMap::identity(), s).value.coeffs(), s.coeffs()) <=
        1e-14);
  CHECK(oracle::max_diff(sigma_phi_direct(square(), s).value.coeffs(), {5.0, 4.0}) <= 1e-13);
  const cplx c{0.2, -0.7};
  CHECK(oracle::max_diff(sigma_phi_direct(HoloMap::constant(c), SymPoint({0.1, 0.2, 0.3})).value.coeffs(),
                         diagonal_embed(c, 3).coeffs()) <= 1e-15);
  CHECK_THROWS_AS(sigma_phi_direct(HoloMap::power_law(0.5, 1.0), SymPoint({3.0, 2.0})), DomainError);
}

TEST_CASE("G operator examples") {
  const auto z = std::vector<cplx>{cplx{0.2, 0.1}, cplx{-0.4, 0.3}, cplx{0.1, -0.5}};
  const auto s = elem_sym(z);
  CHECK(std::abs(G_op(HoloMap::constant(1.0), s, kDisc).value - 3.0) <= 1e-10);
  CHECK(std::abs(G_op(HoloMap::identity(), s, kDisc).value - s[0]) <= 1e-10);
  const auto s2 = SymPoint({0.6, 0.08});
  CHECK(std::abs(G_op(square(), s2, kDisc).value - (0.36 - 0.16)) <= 1e-10);
  CHECK_THROWS_AS(G_op(HoloMap::identity(), SymPoint({3.0, 2.0}), kDisc), PreconditionError);
}

TEST_CASE("integral route examples") {
  oracle::Rng rng(61);
  const QuadOptions quad{1024};
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = elem_sym(rng.points(static_cast<std::size_t>(rng.integer(1, 5)), 0.9));
    const auto r = sigma_phi_integral(HoloMap::identity(), s, kDisc, quad);
    CHECK(oracle::max_diff(r.value.coeffs(), s.coeffs()) <= 1e-10);
    CHECK(r.route == Route::integral);
  }
  const SymPoint scaled({0.6, 0.08});
  CHECK(oracle::max_diff(sigma_phi_integral(square(), scaled, kDisc, quad).value.coeffs(),
                         sigma_phi_direct(square(), scaled).value.coeffs()) <= 1e-8);
  const auto b = HoloMap::blaschke({cplx{0.3, 0.2}, cplx{-0.1, -0.6}}, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = elem_sym(rng.points(3, 0.9));
    CHECK(oracle::max_diff(sigma_phi_integral(b, s, kDisc, quad).value.coeffs(),
                           sigma_phi_direct(b, s).value.coeffs()) <= 1e-6);
  }
}

TEST_CASE("integral route on a domain with a hole") {
  const DomainSpec annulus(Circle{0.0, 2.0}, {Circle{cplx{0.5, 0.0}, 0.3}});
  const auto s = elem_sym(std::vector<cplx>{cplx{-1.0, 0.4}, cplx{1.2, 0.8}});
  // 1/(t - 0.5) is holomorphic on the annulus with its pole in the hole.
  const Integrand g = [](cplx t) { return 1.0 / (t - 0.5); };
  const cplx want = 1.0 / (cplx{-1.0, 0.4} - 0.5) + 1.0 / (cplx{1.2, 0.8} - 0.5);
  CHECK(std::abs(G_op(g, s, annulus).value - want) <= 1e-10);
}

TEST_CASE("functoriality") {
  oracle::Rng rng(62);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = elem_sym(rng.points(static_cast<std::size_t>(rng.integer(1, 6)), 0.9));
    const auto phi = HoloMap::blaschke({rng.in_disc(0.8)}, std::polar(1.0, rng.uniform(0, 6)));
    const auto psi = HoloMap::polynomial({rng.in_disc(0.3), rng.in_disc(0.3), rng.in_disc(0.3)});
    const auto lhs = sigma_phi_direct(HoloMap::compose(psi, phi), s).value;
    const auto rhs = sigma_phi_direct(psi, sigma_phi_direct(phi, s).value).value;
    CHECK(oracle::max_diff(lhs.coeffs(), rhs.coeffs()) <= 1e-8);
  }
}

TEST_CASE("gamma inverse") {
  const auto s = elem_sym(std::vector<cplx>{0.0, 0.5});
  const auto r = gamma_inverse(s, {{0.0, 0.1, 1}, {0.5, 0.1, 1}}, kDisc);
  CHECK(std::abs(r.roots()[0]) <= 1e-10);
  CHECK(std::abs(r.roots()[1] - 0.5) <= 1e-10);

  const cplx w{0.3, -0.2};
  const auto dbl = gamma_inverse(diagonal_embed(w, 2), {{w, 0.1, 2}}, kDisc);
  CHECK(dbl.n() == 2);
  for (const auto& z : dbl.roots()) CHECK(std::abs(z - w) <= 1e-10);

  try {
    gamma_inverse(s, {{0.0, 0.1, 1}, {cplx{0.0, 0.7}, 0.1, 1}});
    FAIL("expected WrongDisc");
  } catch (const WrongDisc& e) {
    CHECK(e.disc() == 1);
    CHECK(e.count() == 0);
  }
  CHECK_THROWS_AS(gamma_inverse(s, {{0.0, 0.3, 1}, {0.5, 0.3, 1}}), PreconditionError);
  CHECK_THROWS_AS(gamma_inverse(s, {{0.0, 0.1, 1}}), PreconditionError);
  CHECK_THROWS_AS(gamma_inverse(s, {{0.0, 0.5, 2}}), PreconditionError);  // root on the circle
  CHECK_THROWS_AS(gamma_inverse(s, {{0.0, 0.1, 1}, {0.5, 0.6, 1}}, kDisc), PreconditionError);
}

TEST_CASE("gamma inverse round trip") {
  oracle::Rng rng(63);
  for (int trial = 0; trial < 100; ++trial) {
    const auto z = rng.separated(static_cast<std::size_t>(rng.integer(1, 6)), 1.0, 0.2);
    std::vector<DiscSpec> discs;
    for (const auto& c : z) discs.push_back({c, 0.08, 1});
    const auto s = elem_sym(z);
    const auto r = gamma_inverse(s, discs);
    CHECK(oracle::max_diff(elem_sym(r.roots()).coeffs(), s.coeffs()) <= 1e-8);
  }
}

TEST_CASE("J operator examples") {
  CHECK(std::abs(J_op(HoloMap::constant(0.0), SymPoint({0.1, 0.2}), 1, 0, kDisc).value) == 0.0);
  for (int m = 1; m <= 2; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const int k = m * static_cast<int>(n) - 1;
      std::vector<cplx> mono(static_cast<std::size_t>(k) + 1, 0.0);
      mono.back() = 1.0;
      const auto v = J_op(HoloMap::polynomial(mono), diagonal_embed(0.0, n), m, 0, kDisc);
      CHECK(std::abs(v.value - oracle::kTwoPiI) <= 1e-12);
    }
  }
}

TEST_CASE("diagonal Cauchy identity") {
  oracle::Rng rng(64);
  const std::vector<cplx> ws{0.0, 0.3, std::polar(0.6, std::numbers::pi / 4.0)};
  for (auto [m, n] : std::vector<std::pair<int, std::size_t>>{{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}}) {
    const int k = m * static_cast<int>(n) - 1;
    std::vector<cplx> c(static_cast<std::size_t>(k) + 4);
    for (auto& x : c) x = rng.in_box(1.0);
    const auto u = HoloMap::polynomial(c);
    for (const auto& w : ws) {
      const cplx want = oracle::kTwoPiI / oracle::factorial(k) * oracle::poly_derivative(c, w, k);
      CHECK(std::abs(J_op(u, diagonal_embed(w, n), m, 0, kDisc).value - want) <= 1e-8);
      const std::vector<cplx> z(n, w);
      CHECK(std::abs(T_n_op(u, z, m, kDisc).value - want) <= 1e-8);
    }
  }
}

TEST_CASE("T_n operator") {
  oracle::Rng rng(65);
  for (int trial = 0; trial < 50; ++trial) {
    auto z = rng.separated(static_cast<std::size_t>(rng.integer(1, 5)), 0.8, 0.2);
    const auto u = HoloMap::polynomial({rng.in_box(1.0), rng.in_box(1.0), rng.in_box(1.0)});
    // Partial fractions: sum_j u(z_j) / prod_{l != j} (z_j - z_l).
    cplx want = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) {
      cplx den = 1.0;
      for (std::size_t l = 0; l < z.size(); ++l)
        if (l != j) den *= z[j] - z[l];
      want += u(z[j]) / den;
    }
    want *= oracle::kTwoPiI;
    const cplx t = T_n_op(u, z, 1, kDisc).value;
    CHECK(std::abs(t - want) <= 1e-8);
    CHECK(std::abs(t - J_op(u, elem_sym(z), 1, 0, kDisc).value) <= 1e-12 * (1.0 + std::abs(t)));
    const cplx before = T_n_op(u, z, 2, kDisc).value;
    std::shuffle(z.begin(), z.end(), rng.engine());
    CHECK(T_n_op(u, z, 2, kDisc).value == before);
  }
  CHECK_THROWS_AS(T_n_op(HoloMap::identity(), std::vector<cplx>{0.9995}, 1, kDisc), PreconditionError);
}

TEST_CASE("derivative of G in s_j") {
  oracle::Rng rng(66);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(2, 5));
    const auto s = elem_sym(rng.points(n, 0.8));
    const auto g = HoloMap::polynomial({rng.in_box(1.0), rng.in_box(1.0), rng.in_box(1.0), rng.in_box(1.0)});
    for (std::size_t j = 1; j <= n; ++j) {
      const double h = 1e-5;
      auto plus = s.coeffs(), minus = s.coeffs();
      plus[j - 1] += h;
      minus[j - 1] -= h;
      const cplx fd = (G_op(g, SymPoint(plus), kDisc).value - G_op(g, SymPoint(minus), kDisc).value) /
                      (2.0 * h);
      const cplx via_j = G_partial(g, s, j, kDisc).value;
      CHECK(std::abs(fd - via_j) <= 1e-4 * std::max(1.0, std::abs(via_j)));
    }
  }
}

TEST_CASE("J stays bounded near the diagonal") {
  oracle::Rng rng(67);
  const auto u = HoloMap::polynomial({1.0, cplx{0.0, 0.5}, -0.3, 0.2});
  double reference = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto z = rng.separated(2, 0.6, 0.3);
    reference = std::max(reference, std::abs(J_op(u, elem_sym(z), 1, 0, kDisc).value));
  }
  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const cplx c = rng.in_disc(0.6);
    const double sep = std::pow(10.0, rng.uniform(-3.0, -0.5));
    const std::vector<cplx> z{c, c + std::polar(sep, rng.uniform(0.0, 6.3))};
    worst = std::max(worst, std::abs(J_op(u, elem_sym(z), 1, 0, kDisc).value));
  }
  CHECK(worst <= 10.0 * reference);
}

TEST_CASE("factor recovery") {
  const cplx w{0.3, 0.4};
  const SymMap sq = [](const SymPoint& s) { return sigma_phi_direct(square(), s).value; };
  CHECK(std::abs(recover_factor(sq, w, 2).value - w * w) <= 1e-12);
  const SymMap id = [](const SymPoint& s) { return s; };
  CHECK(std::abs(recover_factor(id, w, 3).value - w) <= 1e-15);
  const SymMap off = [](const SymPoint&) { return SymPoint({0.0, 1.0}); };
  CHECK_THROWS_AS(recover_factor(off, w, 2), NotInducedMap);
}
