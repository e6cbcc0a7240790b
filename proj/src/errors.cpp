#include "ratvar/errors.hpp"

#include <sstream>

namespace ratvar {

namespace {

std::string point_message(Complex z) {
  std::ostringstream os;
  os << "pole of r at z = (" << z.real() << ", " << z.imag() << ")";
  return os.str();
}

std::string number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

PoleError::PoleError(Complex z) : Error(point_message(z)), z_(z) {}

RootFindingError::RootFindingError(const std::string& what, std::vector<double> residuals)
    : Error(what), residuals_(std::move(residuals)) {}

CollisionError::CollisionError(std::size_t i, std::size_t j, double distance)
    : Error("nodes " + std::to_string(i) + " and " + std::to_string(j) +
            " coincide (distance " + number(distance) + ")"),
      i_(i),
      j_(j) {}

SingularError::SingularError(const std::string& what, double condition)
    : Error(what + " (condition " + number(condition) + ")"), condition_(condition) {}

ConvergenceError::ConvergenceError(const std::string& what, double achieved)
    : Error(what + " (achieved " + number(achieved) + ")"), achieved_(achieved) {}

}  // namespace ratvar
