#include "catenoid/kernels/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace catenoid::kernels {

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
  // lgamma_r does not touch the global signgam.
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double beta(double s, double t) {
  if (!(s > 0.0) || !(t > 0.0)) throw std::domain_error("beta: arguments must be positive");
  return std::exp(log_gamma(s) + log_gamma(t) - log_gamma(s + t));
}

BigInt binomial_exact(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i) here
  }
  return result;
}

double log_binomial(double n, double k) {
  if (k < 0.0 || k > n) return -std::numeric_limits<double>::infinity();
  if (k == 0.0 || k == n) return 0.0;
  return log_gamma(n + 1.0) - log_gamma(k + 1.0) - log_gamma(n - k + 1.0);
}

double log_of(const BigInt& value) {
  if (value <= 0) throw std::domain_error("log_of: value must be positive");
  const auto bits = static_cast<long>(boost::multiprecision::msb(value)) + 1;
  if (bits <= 1000) return std::log(value.convert_to<double>());
  const long shift = bits - 64;
  const BigInt top = value >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

double log_add(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double hi = std::max(a, b), lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

}  // namespace catenoid::kernels
