#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace isofield {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Thrown when an argument is outside the documented domain of an operation.
class domain_error : public std::invalid_argument {
 public:
  explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when an internal numerical certificate fails (convention bug trap,
/// reality residual above tolerance, rank-deficient intertwiner, ...).
class internal_error : public std::runtime_error {
 public:
  explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw domain_error(what);
}

/// (-1)^k for possibly negative k.
inline double parity_sign(long k) { return (k % 2 == 0) ? 1.0 : -1.0; }

}  // namespace isofield
