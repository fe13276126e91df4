#pragma once

// Elementary symmetric polynomials, power sums and the Newton transforms
// between them, plus evaluation of q(s;t) = t^n - s_1 t^{n-1} + ... + (-1)^n s_n.

#include <span>
#include <vector>

#include "symprod/error.hpp"

namespace symprod {

/// Coefficient tuple (s_1, ..., s_n) of the monic polynomial q(s;t).
class SymPoint {
 public:
  SymPoint() = default;
  explicit SymPoint(std::vector<cplx> coeffs);

  std::size_t n() const { return coeffs_.size(); }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  std::span<const cplx> span() const { return coeffs_; }
  /// 1-based access: s(1) = s_1.
  cplx s(std::size_t k) const { return coeffs_.at(k - 1); }
  cplx operator[](std::size_t i) const { return coeffs_[i]; }

  bool operator==(const SymPoint&) const = default;

 private:
  std::vector<cplx> coeffs_;
};

/// Power sums (tau_1, ..., tau_n), tau_j = sum_l z_l^j.
class PowerSumPoint {
 public:
  PowerSumPoint() = default;
  explicit PowerSumPoint(std::vector<cplx> sums);

  std::size_t n() const { return sums_.size(); }
  const std::vector<cplx>& sums() const { return sums_; }
  cplx operator[](std::size_t i) const { return sums_[i]; }

  bool operator==(const PowerSumPoint&) const = default;

 private:
  std::vector<cplx> sums_;
};

struct QEval {
  cplx q;
  cplx q_t;                  // dq/dt
  std::vector<cplx> q_s;     // q_s[j-1] = dq/ds_j = (-1)^j t^{n-j}
};

/// The symmetrization map pi. Input order does not affect the result bitwise.
SymPoint elem_sym(std::span<const cplx> z);

PowerSumPoint power_sums(std::span<const cplx> z);

/// Power sums -> elementary symmetric functions (backward Newton recurrence).
SymPoint newton_P(const PowerSumPoint& tau);

/// Elementary symmetric functions -> power sums (forward Newton recurrence).
PowerSumPoint newton_Q(const SymPoint& s);

QEval eval_q(const SymPoint& s, cplx t);

/// q(s;t) and dq/dt only; the hot path of every boundary integral.
void eval_q_qt(std::span<const cplx> s, cplx t, cplx& q, cplx& q_t);

/// Running rounding-error bound for the Horner evaluation of q at t.
double q_rounding_bound(std::span<const cplx> s, cplx t);

/// 1 + max modulus over the tuple.
double scale_of(std::span<const cplx> v);

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b);

}  // namespace symprod
