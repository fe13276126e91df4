#include "symprod/sympoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace symprod {

namespace {

void require_finite(std::span<const cplx> v, const char* what) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag())) {
      throw InvalidInput(std::string(what) + ": entry " + std::to_string(i) +
                         " is not finite");
    }
  }
}

void require_nonempty(std::size_t n, const char* what) {
  if (n == 0) throw InvalidInput(std::string(what) + ": n must be >= 1");
}

// Total order on complex numbers, including signed zeros.
bool canonical_less(const cplx& a, const cplx& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  if (a.imag() != b.imag()) return a.imag() < b.imag();
  bool sa = std::signbit(a.real()), sb = std::signbit(b.real());
  if (sa != sb) return sa;
  return std::signbit(a.imag()) && !std::signbit(b.imag());
}

std::vector<cplx> canonical(std::span<const cplx> z) {
  std::vector<cplx> sorted(z.begin(), z.end());
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  return sorted;
}

cplx pairwise_sum(std::span<const cplx> v) {
  if (v.size() <= 16) {
    cplx acc{0.0, 0.0};
    for (const auto& x : v) acc += x;
    return acc;
  }
  std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

}  // namespace

SymPoint::SymPoint(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  require_nonempty(coeffs_.size(), "SymPoint");
  require_finite(coeffs_, "SymPoint");
}

PowerSumPoint::PowerSumPoint(std::vector<cplx> sums) : sums_(std::move(sums)) {
  require_nonempty(sums_.size(), "PowerSumPoint");
  require_finite(sums_, "PowerSumPoint");
}

SymPoint elem_sym(std::span<const cplx> z) {
  require_nonempty(z.size(), "elem_sym");
  require_finite(z, "elem_sym");
  const auto sorted = canonical(z);
  const std::size_t n = sorted.size();
  // e[k] holds pi_k of the roots consumed so far; e[0] = 1.
  std::vector<cplx> e(n + 1, cplx{0.0, 0.0});
  e[0] = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k >= 1; --k) e[k] += sorted[j] * e[k - 1];
  }
  return SymPoint(std::vector<cplx>(e.begin() + 1, e.end()));
}

PowerSumPoint power_sums(std::span<const cplx> z) {
  require_nonempty(z.size(), "power_sums");
  require_finite(z, "power_sums");
  const auto sorted = canonical(z);
  const std::size_t n = sorted.size();
  std::vector<cplx> powers(sorted);
  std::vector<cplx> tau(n);
  for (std::size_t j = 0; j < n; ++j) {
    tau[j] = pairwise_sum(powers);
    for (std::size_t l = 0; l < n; ++l) powers[l] *= sorted[l];
  }
  return PowerSumPoint(std::move(tau));
}

SymPoint newton_P(const PowerSumPoint& tau) {
  const std::size_t n = tau.n();
  // k s_k = sum_{i=1}^k (-1)^{i-1} s_{k-i} tau_i, with s_0 = 1.
  std::vector<cplx> s(n + 1);
  s[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 1; i <= k; ++i) {
      const cplx term = s[k - i] * tau[i - 1];
      acc += (i % 2 == 1) ? term : -term;
    }
    s[k] = acc / static_cast<double>(k);
  }
  return SymPoint(std::vector<cplx>(s.begin() + 1, s.end()));
}

PowerSumPoint newton_Q(const SymPoint& s) {
  const std::size_t n = s.n();
  // tau_k = sum_{i=1}^{k-1} (-1)^{i-1} s_i tau_{k-i} + (-1)^{k-1} k s_k.
  std::vector<cplx> tau(n);
  for (std::size_t k = 1; k <= n; ++k) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 1; i < k; ++i) {
      const cplx term = s[i - 1] * tau[k - i - 1];
      acc += (i % 2 == 1) ? term : -term;
    }
    const cplx last = static_cast<double>(k) * s[k - 1];
    acc += (k % 2 == 1) ? last : -last;
    tau[k - 1] = acc;
  }
  return PowerSumPoint(std::move(tau));
}

void eval_q_qt(std::span<const cplx> s, cplx t, cplx& q, cplx& q_t) {
  q = 1.0;
  q_t = 0.0;
  for (std::size_t k = 1; k <= s.size(); ++k) {
    q_t = q_t * t + q;
    q = q * t + ((k % 2 == 1) ? -s[k - 1] : s[k - 1]);
  }
}

QEval eval_q(const SymPoint& s, cplx t) {
  QEval out;
  eval_q_qt(s.span(), t, out.q, out.q_t);
  const std::size_t n = s.n();
  out.q_s.resize(n);
  // q_s[j-1] = (-1)^j t^{n-j}; fill from j = n downward.
  cplx power = 1.0;
  for (std::size_t j = n; j >= 1; --j) {
    out.q_s[j - 1] = (j % 2 == 1) ? -power : power;
    power *= t;
  }
  return out;
}

double q_rounding_bound(std::span<const cplx> s, cplx t) {
  // Standard running bound for Horner: |sum |a_k| |t|^{n-k}| * 4 n eps.
  const double at = std::abs(t);
  double acc = 1.0;
  for (std::size_t k = 1; k <= s.size(); ++k) acc = acc * at + std::abs(s[k - 1]);
  return 4.0 * static_cast<double>(s.size() + 1) *
         std::numeric_limits<double>::epsilon() * acc;
}

double scale_of(std::span<const cplx> v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return 1.0 + m;
}

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  double m = 0.0;
  const std::size_t len = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace symprod
