#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace alterfold {

using Complex = std::complex<double>;

enum class ErrorKind {
  Parse,
  Index,
  Inconsistent,
  UnknownName,
  InvalidParams,
  Mismatch,
  NonEndomorphism,
  Inapplicable,
  Unglued,
  NonInvolutive,
  NonOrientable,
  Decomposition,
  Unsupported,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline bool close(Complex a, Complex b, double tol) { return std::abs(a - b) < tol; }

}  // namespace alterfold
