#pragma once

// Root multisets of q(s;t): the fibre pi^{-1}(s) with multiplicity clustering.

#include <span>
#include <vector>

#include "symprod/sympoly.hpp"

namespace symprod {

inline constexpr double kDefaultClusterTol = 1e-6;

struct Cluster {
  cplx center;
  int multiplicity = 0;
  double radius = 0.0;  // covers every member and its inclusion disc
};

/// Unordered n-tuple of roots.  Each root carries an inclusion radius: a disc
/// around it that provably (up to floating point evaluation of the bound)
/// contains a true root.  Exactly-given roots have radius 0.
class RootMultiset {
 public:
  RootMultiset() = default;
  explicit RootMultiset(std::vector<cplx> roots,
                        double cluster_tol = kDefaultClusterTol,
                        std::vector<double> radii = {});

  std::size_t n() const { return roots_.size(); }
  const std::vector<cplx>& roots() const { return roots_; }
  const std::vector<double>& radii() const { return radii_; }
  double cluster_tol() const { return cluster_tol_; }
  /// Single-linkage clusters at cluster_tol * scale, ordered canonically.
  const std::vector<Cluster>& clusters() const { return clusters_; }
  double scale() const { return scale_of(roots_); }

 private:
  std::vector<cplx> roots_;
  std::vector<double> radii_;
  double cluster_tol_ = kDefaultClusterTol;
  std::vector<Cluster> clusters_;
};

/// Stratum label of a root multiset: k distinct values with the given
/// multiplicity profile (sorted ascending).
struct PartitionType {
  int k = 0;
  std::vector<int> multiplicities;
  bool operator==(const PartitionType&) const = default;
};

struct RootSolveOptions {
  double cluster_tol = kDefaultClusterTol;
  int max_iterations = 500;
  double step_tol = 1e-14;  // relative to scale
  bool companion_fallback = true;
};

/// All n roots of q(s;t) by Aberth-Ehrlich iteration, with companion-matrix
/// eigenvalues as fallback.  Throws NumericalFailure if neither converges.
RootMultiset roots_of(const SymPoint& s, const RootSolveOptions& opts = {});

/// Companion-matrix eigenvalues of q(s;t); exposed for cross-checks.
std::vector<cplx> companion_roots(const SymPoint& s);

PartitionType partition_type(const RootMultiset& r);
PartitionType partition_type(const RootMultiset& r, double cluster_tol);

/// Bottleneck distance between two multisets of equal size: the smallest d
/// such that a bijection moves no point further than d.
double multiset_distance(std::span<const cplx> a, std::span<const cplx> b);

/// Symmetric Hausdorff distance between the underlying sets.
double hausdorff_distance(std::span<const cplx> a, std::span<const cplx> b);

}  // namespace symprod
