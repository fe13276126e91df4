#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace symprod {

using cplx = std::complex<double>;

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// ψ or f evaluated exactly at a hole center.
class PoleError : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

/// A point lies outside the region where a HoloMap is analytic.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Integrand was NaN or infinite at a quadrature node.
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& what, std::size_t curve, std::size_t node)
      : Error(what), curve_(curve), node_(node) {}
  std::size_t curve() const { return curve_; }
  std::size_t node() const { return node_; }

 private:
  std::size_t curve_;
  std::size_t node_;
};

/// Iterative method did not converge; carries the best iterate found.
class NumericalFailure : public Error {
 public:
  NumericalFailure(const std::string& what, std::vector<cplx> best = {},
                   double est_error = 0.0)
      : Error(what), best_(std::move(best)), est_error_(est_error) {}
  const std::vector<cplx>& best_iterate() const { return best_; }
  double est_error() const { return est_error_; }

 private:
  std::vector<cplx> best_;
  double est_error_;
};

class WrongDisc : public Error {
 public:
  WrongDisc(const std::string& what, std::size_t disc, long count)
      : Error(what), disc_(disc), count_(count) {}
  std::size_t disc() const { return disc_; }
  long count() const { return count_; }

 private:
  std::size_t disc_;
  long count_;
};

class NotInducedMap : public Error {
 public:
  NotInducedMap(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace symprod
