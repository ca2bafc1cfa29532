#pragma once

#include <vector>

#include "hahn/log_cover.hpp"
#include "hahn/ring.hpp"

namespace hahn {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
/// Largest |z| accepted by the power-series Bessel oracles.
inline constexpr double kBesselRadius = 20.0;

/// Gamma on the positive reals. Throws DomainError otherwise.
double gamma_fn(double x);
/// 1/Gamma(x) on the whole real line (zero at non-positive integers).
double rgamma(double x);
/// psi(k) = -gamma_E + H_{k-1} for integers k >= 1.
double digamma(int k);

/// a_k = (-1)^k / (4^k k! Gamma(k + nu + 1)), k = 0..K, for any real nu.
std::vector<double> h_coeffs(double nu, int K);

/// h_nu(z) = sum_k a_k z^{2k}, summed until the terms fall below the
/// working precision. Throws RadiusExceeded beyond `radius`.
Complex h_function(double nu, Complex z, double radius = kBesselRadius);

/// J_nu(z) = (z/2)^nu h_nu(z) with the power taken on the cover.
Complex bessel_J(double nu, const LogPoint& z, double radius = kBesselRadius);
/// Y_n for integer n >= 0 from the explicit logarithmic expansion.
Complex bessel_Y_integer(int n, const LogPoint& z, double radius = kBesselRadius);
/// H^(1)_nu. Integer nu uses J_n + i Y_n; otherwise
/// (i / sin(nu pi)) (J_nu e^{-i nu pi} - J_{-nu}). Throws NearIntegerOrder
/// when |sin(nu pi)| < 1e-8 for a non-integer nu.
Complex hankel_H1(double nu, const LogPoint& z, double radius = kBesselRadius);

}  // namespace hahn
