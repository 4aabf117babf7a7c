#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace catenoid::kernels {

using BigInt = boost::multiprecision::cpp_int;

/// ln Γ(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

/// Euler's Beta function B(s, t) = Γ(s)Γ(t)/Γ(s+t), s, t > 0.
double beta(double s, double t);

/// Binomial coefficient C(n, k) as an exact integer; 0 when k < 0 or k > n.
BigInt binomial_exact(long n, long k);

/// ln C(n, k) through log_gamma; -inf when k < 0 or k > n.
double log_binomial(double n, double k);

/// Natural log of a positive big integer, to double precision.
double log_of(const BigInt& value);

/// ln(exp(a) + exp(b)) without overflow; either argument may be -inf.
double log_add(double a, double b);

}  // namespace catenoid::kernels
