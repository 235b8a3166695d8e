#pragma once

#include <stdexcept>
#include <string>

namespace mtc {

enum class ErrorKind {
  unsupported_root,
  invalid_automorphism,
  non_invertible,
  unsupported_twist,
  insufficient_precision,
  divergent_product,
  domain,
  unknown_name,
  convergence_failure,
  unsupported,
  parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Numeric failure that still carries the error estimate reached.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double achieved)
      : Error(ErrorKind::convergence_failure, what), achieved_(achieved) {}

  double achieved_error() const noexcept { return achieved_; }

 private:
  double achieved_;
};

}  // namespace mtc
