#include "hahn/special.hpp"

#include <cmath>
#include <numbers>

namespace hahn {
namespace {

constexpr double kNearIntegerSin = 1e-8;

void check_radius(Complex z, double radius) {
  if (std::abs(z) > radius)
    throw HahnError(ErrorKind::RadiusExceeded, "|z| = " + std::to_string(std::abs(z)) + " exceeds the oracle radius");
}

}  // namespace

double gamma_fn(double x) {
  if (!(x > 0) || !std::isfinite(x)) throw HahnError(ErrorKind::DomainError, "gamma_fn needs a finite positive argument");
  return std::tgamma(x);
}

double rgamma(double x) {
  if (!std::isfinite(x)) throw HahnError(ErrorKind::DomainError, "rgamma needs a finite argument");
  if (x > 0) return x > 171.0 ? 0.0 : 1.0 / std::tgamma(x);
  if (x == std::floor(x)) return 0.0;
  // reflection: 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi
  return std::sin(std::numbers::pi * x) * std::tgamma(1.0 - x) / std::numbers::pi;
}

double digamma(int k) {
  if (k < 1) throw HahnError(ErrorKind::DomainError, "digamma is provided at positive integers only");
  double h = 0.0;
  for (int j = 1; j < k; ++j) h += 1.0 / j;
  return -kEulerGamma + h;
}

std::vector<double> h_coeffs(double nu, int K) {
  if (K < 0) throw HahnError(ErrorKind::InvalidArgument, "h_coeffs needs K >= 0");
  std::vector<double> a(static_cast<std::size_t>(K) + 1);
  double c = 1.0;  // (-1/4)^k / k!
  for (int k = 0; k <= K; ++k) {
    if (k > 0) c *= -0.25 / k;
    a[static_cast<std::size_t>(k)] = c * rgamma(k + nu + 1.0);
  }
  return a;
}

Complex h_function(double nu, Complex z, double radius) {
  check_radius(z, radius);
  const Complex z2 = z * z;
  Complex sum = 0.0;
  Complex power = 1.0;
  double c = 1.0;
  int small = 0;
  for (int k = 0; k < 1000; ++k) {
    if (k > 0) {
      c *= -0.25 / k;
      power *= z2;
    }
    const Complex term = c * rgamma(k + nu + 1.0) * power;
    sum += term;
    // stop after two consecutive negligible terms past the peak
    if (k > std::abs(z) && std::abs(term) <= 1e-17 * std::abs(sum)) {
      if (++small == 2) break;
    } else {
      small = 0;
    }
  }
  return sum;
}

Complex bessel_J(double nu, const LogPoint& z, double radius) {
  const Complex half_log = z.log() - std::log(2.0);
  return std::exp(nu * half_log) * h_function(nu, z.value(), radius);
}

Complex bessel_Y_integer(int n, const LogPoint& z, double radius) {
  if (n < 0) throw HahnError(ErrorKind::DomainError, "bessel_Y_integer needs n >= 0");
  const Complex w = z.value();
  check_radius(w, radius);
  const double pi = std::numbers::pi;
  const Complex log_half = z.log() - std::log(2.0);
  const Complex half = std::exp(log_half);  // z / 2
  const Complex q = half * half;

  Complex finite = 0.0;
  Complex qk = 1.0;
  for (int k = 0; k < n; ++k) {
    finite += std::tgamma(n - k) / std::tgamma(k + 1.0) * qk;
    qk *= q;
  }
  finite *= std::exp(-static_cast<double>(n) * log_half) / pi;

  Complex series = 0.0;
  Complex term_power = 1.0;  // (-z^2/4)^k
  double fact = 1.0 / std::tgamma(n + 1.0);  // 1 / (k! (n+k)!)
  int small = 0;
  for (int k = 0; k < 1000; ++k) {
    if (k > 0) {
      term_power *= -q;
      fact /= static_cast<double>(k) * (n + k);
    }
    const Complex term = (digamma(k + 1) + digamma(n + k + 1)) * fact * term_power;
    series += term;
    if (k > std::abs(w) && std::abs(term) <= 1e-17 * std::abs(series)) {
      if (++small == 2) break;
    } else {
      small = 0;
    }
  }
  series *= std::exp(static_cast<double>(n) * log_half) / pi;

  return -finite + (2.0 / pi) * log_half * bessel_J(n, z, radius) - series;
}

Complex hankel_H1(double nu, const LogPoint& z, double radius) {
  const double pi = std::numbers::pi;
  if (nu == std::floor(nu)) {
    const int n = static_cast<int>(std::abs(nu));
    Complex h = bessel_J(n, z, radius) + Complex(0, 1) * bessel_Y_integer(n, z, radius);
    // H_{-n} = (-1)^n H_n
    if (nu < 0 && n % 2 == 1) h = -h;
    return h;
  }
  const double s = std::sin(nu * pi);
  if (std::abs(s) < kNearIntegerSin)
    throw HahnError(ErrorKind::NearIntegerOrder, "order too close to an integer for the non-integer Hankel formula");
  const Complex i(0, 1);
  return (i / s) * (bessel_J(nu, z, radius) * std::exp(-i * nu * pi) - bessel_J(-nu, z, radius));
}

}  // namespace hahn
