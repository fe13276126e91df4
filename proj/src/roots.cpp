#include "symprod/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace symprod {

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<std::vector<std::size_t>> components(DisjointSets& sets, std::size_t n) {
  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[sets.find(i)].push_back(i);
  std::erase_if(groups, [](const auto& g) { return g.empty(); });
  return groups;
}

std::vector<Cluster> single_linkage(const std::vector<cplx>& roots,
                                    const std::vector<double>& radii, double tol) {
  const std::size_t n = roots.size();
  const double threshold = tol * scale_of(roots);
  DisjointSets sets(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(roots[i] - roots[j]) <= threshold) sets.unite(i, j);

  std::vector<Cluster> out;
  for (const auto& group : components(sets, n)) {
    cplx sum{0.0, 0.0};
    for (auto i : group) sum += roots[i];
    Cluster c;
    c.center = sum / static_cast<double>(group.size());
    c.multiplicity = static_cast<int>(group.size());
    for (auto i : group)
      c.radius = std::max(c.radius, std::abs(roots[i] - c.center) + radii[i]);
    out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const Cluster& a, const Cluster& b) {
    if (a.center.real() != b.center.real()) return a.center.real() < b.center.real();
    return a.center.imag() < b.center.imag();
  });
  return out;
}

double max_residual(const SymPoint& s, const std::vector<cplx>& z) {
  double worst = 0.0;
  for (const auto& r : z) {
    cplx q, qt;
    eval_q_qt(s.span(), r, q, qt);
    worst = std::max(worst, std::abs(q) / std::max(q_rounding_bound(s.span(), r), 1e-300));
  }
  return worst;
}

struct AberthOutcome {
  std::vector<cplx> z;
  bool converged = false;
};

AberthOutcome aberth(const SymPoint& s, const RootSolveOptions& opts) {
  const std::size_t n = s.n();
  double radius = 0.0;
  for (std::size_t k = 1; k <= n; ++k)
    radius = std::max(radius, std::pow(std::abs(s.s(k)), 1.0 / static_cast<double>(k)));
  radius += 1.0;

  AberthOutcome out;
  out.z.resize(n);
  // The angular offset keeps the start off any real or imaginary symmetry axis.
  constexpr double kOffset = 0.4;
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                             static_cast<double>(n) + kOffset;
    out.z[k] = std::polar(radius, angle);
  }
  std::vector<bool> done(n, false);

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    const double scale = scale_of(out.z);
    std::size_t active = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      cplx q, qt;
      eval_q_qt(s.span(), out.z[i], q, qt);
      if (std::abs(q) <= q_rounding_bound(s.span(), out.z[i])) {
        done[i] = true;
        continue;
      }
      ++active;
      cplx repulsion{0.0, 0.0};
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const cplx d = out.z[i] - out.z[j];
        if (d != cplx{0.0, 0.0}) repulsion += 1.0 / d;
      }
      cplx step;
      if (qt == cplx{0.0, 0.0}) {
        // Stationary point of q: nudge off it.
        step = cplx{1e-8 * scale, 1e-8 * scale};
      } else {
        const cplx ratio = q / qt;
        step = ratio / (1.0 - ratio * repulsion);
      }
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
        step = cplx{1e-8 * scale, 0.0};
      }
      out.z[i] -= step;
      if (std::abs(step) < opts.step_tol * scale) done[i] = true;
    }
    if (active == 0 || std::all_of(done.begin(), done.end(), [](bool b) { return b; })) {
      out.converged = true;
      return out;
    }
  }
  return out;
}

// Braess-Hadeler inclusion radii: each disc D(z_i, n|q(z_i)| / |prod_{j!=i}(z_i - z_j)|)
// and every connected union of k such discs holds exactly k roots.
std::vector<double> inclusion_radii(const SymPoint& s, const std::vector<cplx>& z) {
  const std::size_t n = z.size();
  std::vector<double> rho(n);
  for (std::size_t i = 0; i < n; ++i) {
    cplx q, qt;
    eval_q_qt(s.span(), z[i], q, qt);
    const double num = std::max(std::abs(q), q_rounding_bound(s.span(), z[i]));
    double den = 1.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) den *= std::abs(z[i] - z[j]);
    rho[i] = den > 0.0 ? static_cast<double>(n) * num / den
                       : std::numeric_limits<double>::infinity();
  }
  return rho;
}

// Newton on q^{(k-1)}, which has a simple root at a k-fold root of q.  The
// members of a k-fold cluster are only accurate to about eps^{1/k}; the
// refined center recovers full accuracy for exact multiple roots.
cplx refine_center(const SymPoint& s, cplx start, std::size_t k, double reach) {
  const std::size_t n = s.n();
  // Descending coefficients of q, then differentiate k - 1 times.
  std::vector<cplx> a(n + 1);
  a[0] = 1.0;
  for (std::size_t j = 1; j <= n; ++j) a[j] = (j % 2 == 0 ? 1.0 : -1.0) * s.s(j);
  for (std::size_t d = 1; d < k; ++d) {
    const std::size_t deg = a.size() - 1;
    std::vector<cplx> next(deg);
    for (std::size_t j = 0; j < deg; ++j) next[j] = a[j] * static_cast<double>(deg - j);
    a = std::move(next);
  }
  cplx t = start;
  for (int iter = 0; iter < 30; ++iter) {
    cplx p = 0.0, dp = 0.0;
    for (const auto& c : a) {
      dp = dp * t + p;
      p = p * t + c;
    }
    if (dp == cplx{0.0, 0.0}) break;
    const cplx step = p / dp;
    t -= step;
    if (!(std::abs(t - start) <= reach)) return start;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * scale_of({&t, 1})) break;
  }
  return t;
}

// Replaces every overlapping group of inclusion discs by one center repeated
// k times: the barycenter, sharpened by refine_center.
void collapse_clusters(const SymPoint& s, std::vector<cplx>& z, std::vector<double>& rho) {
  const std::size_t n = z.size();
  DisjointSets sets(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(z[i] - z[j]) <= rho[i] + rho[j]) sets.unite(i, j);
  for (const auto& group : components(sets, n)) {
    if (group.size() < 2) continue;
    cplx sum{0.0, 0.0};
    for (auto i : group) sum += z[i];
    const cplx barycenter = sum / static_cast<double>(group.size());
    double reach = 0.0;
    for (auto i : group) reach = std::max(reach, std::abs(z[i] - barycenter) + rho[i]);
    const cplx center = refine_center(s, barycenter, group.size(), reach);
    double radius = 0.0;
    for (auto i : group) radius = std::max(radius, std::abs(z[i] - center) + rho[i]);
    for (auto i : group) {
      z[i] = center;
      rho[i] = radius;
    }
  }
}

}  // namespace

RootMultiset::RootMultiset(std::vector<cplx> roots, double cluster_tol,
                           std::vector<double> radii)
    : roots_(std::move(roots)), radii_(std::move(radii)), cluster_tol_(cluster_tol) {
  if (roots_.empty()) throw InvalidInput("RootMultiset: empty");
  if (!(cluster_tol_ >= 0.0)) throw InvalidInput("RootMultiset: cluster_tol must be >= 0");
  if (radii_.empty()) radii_.assign(roots_.size(), 0.0);
  if (radii_.size() != roots_.size())
    throw InvalidInput("RootMultiset: radii length differs from roots");
  clusters_ = single_linkage(roots_, radii_, cluster_tol_);
}

std::vector<cplx> companion_roots(const SymPoint& s) {
  const auto n = static_cast<Eigen::Index>(s.n());
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  // q(t) = t^n + a_1 t^{n-1} + ... + a_n with a_k = (-1)^k s_k.
  for (Eigen::Index k = 0; k < n; ++k) {
    const cplx sk = s[static_cast<std::size_t>(k)];
    const cplx ak = ((k + 1) % 2 == 1) ? -sk : sk;
    companion(0, k) = -ak;
  }
  for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("companion eigenvalue solve failed");
  const auto& ev = solver.eigenvalues();
  return std::vector<cplx>(ev.data(), ev.data() + ev.size());
}

RootMultiset roots_of(const SymPoint& s, const RootSolveOptions& opts) {
  if (s.n() == 0) throw InvalidInput("roots_of: n must be >= 1");
  std::vector<cplx> z;
  if (s.n() == 1) {
    z = {s[0]};
  } else {
    auto outcome = aberth(s, opts);
    z = std::move(outcome.z);
    if (!outcome.converged) {
      if (!opts.companion_fallback)
        throw NumericalFailure("roots_of: Aberth iteration did not converge", z);
      auto alt = companion_roots(s);
      if (max_residual(s, alt) < max_residual(s, z)) z = std::move(alt);
      // Accept only if each residual is within a modest multiple of the
      // attainable rounding level.
      if (max_residual(s, z) > 1e4)
        throw NumericalFailure("roots_of: no converged root set", z);
    }
  }
  auto rho = inclusion_radii(s, z);
  if (s.n() == 1) rho[0] = 0.0;
  collapse_clusters(s, z, rho);
  return RootMultiset(std::move(z), opts.cluster_tol, std::move(rho));
}

PartitionType partition_type(const RootMultiset& r) {
  return partition_type(r, r.cluster_tol());
}

PartitionType partition_type(const RootMultiset& r, double cluster_tol) {
  const auto clusters = single_linkage(r.roots(), r.radii(), cluster_tol);
  PartitionType p;
  p.k = static_cast<int>(clusters.size());
  for (const auto& c : clusters) p.multiplicities.push_back(c.multiplicity);
  std::sort(p.multiplicities.begin(), p.multiplicities.end());
  return p;
}

double multiset_distance(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size())
    throw InvalidInput("multiset_distance: multisets differ in size");
  const std::size_t n = a.size();
  if (n == 0) return 0.0;
  std::vector<double> dist(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dist[i * n + j] = std::abs(a[i] - b[j]);
  std::vector<double> candidates(dist);
  std::sort(candidates.begin(), candidates.end());

  // Perfect matching using only edges of length <= limit (Kuhn's algorithm).
  auto has_matching = [&](double limit) {
    std::vector<long> match_b(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<bool> seen(n, false);
      auto augment = [&](auto&& self, std::size_t u) -> bool {
        for (std::size_t v = 0; v < n; ++v) {
          if (dist[u * n + v] > limit || seen[v]) continue;
          seen[v] = true;
          if (match_b[v] < 0 || self(self, static_cast<std::size_t>(match_b[v]))) {
            match_b[v] = static_cast<long>(u);
            return true;
          }
        }
        return false;
      };
      if (!augment(augment, i)) return false;
    }
    return true;
  };

  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (has_matching(candidates[mid])) hi = mid; else lo = mid + 1;
  }
  return candidates[lo];
}

double hausdorff_distance(std::span<const cplx> a, std::span<const cplx> b) {
  auto directed = [](std::span<const cplx> x, std::span<const cplx> y) {
    double worst = 0.0;
    for (const auto& p : x) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : y) best = std::min(best, std::abs(p - q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace symprod
