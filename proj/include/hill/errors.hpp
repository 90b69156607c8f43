#ifndef HILL_ERRORS_HPP
#define HILL_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hill {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument or violated precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed potential file or flag value.
class ParseError : public Error {
 public:
  using Error::Error;
};

// ODE integration failed (step underflow, step budget, non-finite state).
class IntegrationError : public Error {
 public:
  IntegrationError(const std::string& what, double x)
      : Error(what + " at x=" + std::to_string(x)), x_(x) {}
  double where() const noexcept { return x_; }

 private:
  double x_;
};

// A product term in the Picard recursion acquired shifted exponent zero,
// so its antiderivative would not be 2pi-periodic.
class ZeroExponentError : public Error {
 public:
  ZeroExponentError(std::int64_t mode, std::int64_t exponent)
      : Error("picard step: product of mode " + std::to_string(mode) + " and exponent " +
              std::to_string(exponent) + " lands at exponent m=" +
              std::to_string(mode + exponent) +
              "; the shifted exponent m" + (mode + exponent == 1 ? "-1" : "+1") +
              " is zero, so the antiderivative is not periodic"),
        mode_(mode),
        exponent_(exponent) {}
  std::int64_t mode() const noexcept { return mode_; }
  std::int64_t exponent() const noexcept { return exponent_; }

 private:
  std::int64_t mode_;
  std::int64_t exponent_;
};

// Input potential has a stored mode k < 1.
class NotGasymovClassError : public Error {
 public:
  using Error::Error;
};

}  // namespace hill

#endif
