#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ratvar {

using Complex = std::complex<double>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or violated precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

class PoleError : public Error {
 public:
  explicit PoleError(Complex z);
  Complex point() const { return z_; }

 private:
  Complex z_;
};

class RootFindingError : public Error {
 public:
  RootFindingError(const std::string& what, std::vector<double> residuals);
  const std::vector<double>& residuals() const { return residuals_; }

 private:
  std::vector<double> residuals_;
};

class CollisionError : public Error {
 public:
  CollisionError(std::size_t i, std::size_t j, double distance);
  std::size_t first() const { return i_; }
  std::size_t second() const { return j_; }

 private:
  std::size_t i_, j_;
};

// Level curve passes too close to a critical point of r.
class ClearanceError : public Error {
 public:
  using Error::Error;
};

// Sublevel set reaches the window boundary.
class WindowError : public Error {
 public:
  using Error::Error;
};

// Point outside the disc of convergence of a representation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class SingularError : public Error {
 public:
  SingularError(const std::string& what, double condition);
  double condition() const { return condition_; }

 private:
  double condition_;
};

// No validated separator found.
class SeparationError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double achieved);
  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

}  // namespace ratvar
