#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <vector>

#include "hahn/meromorphic.hpp"
#include "hahn/series.hpp"

namespace hahn {

/// Point of the logarithmic cover: modulus r > 0 and unbounded argument phi.
struct LogPoint {
  double r = 1.0;
  double phi = 0.0;

  LogPoint() = default;
  LogPoint(double r_, double phi_);

  /// log r + i phi, without branch reduction.
  Complex log() const { return {std::log(r), phi}; }
  /// Image in the punctured plane.
  Complex value() const { return std::polar(r, phi); }
  /// Principal-sheet lift of a nonzero complex number.
  static LogPoint principal(Complex z);
};

/// {0 < |z| < radius, |arg z| < sigma}; sigma unset means the whole cover.
struct SectorDisc {
  double radius = 1.0;
  std::optional<double> sigma;
};

/// z^alpha (-log z)^{-beta} at p. Log factors are only defined for r < 1.
Complex basis_eval(const Exponent& e, const LogPoint& p);

/// Tail model for truncated series: the omitted part is bounded by
/// M |e_bound(p)| / (1 - q) where bound is the validity order.
struct TailModel {
  double M = 1.0;
  double q = 0.5;
};

struct EvalResult {
  Complex value;
  double residual_bound = 0.0;
  /// Set when the series is truncated and no tail model was supplied.
  bool truncation_only = false;
};

EvalResult series_eval(const Series<Complex>& f, const LogPoint& p, std::optional<TailModel> tail = std::nullopt);
EvalResult series_eval(const Meromorphic<Complex>& f, const LogPoint& p,
                       std::optional<TailModel> tail = std::nullopt);

/// Estimate of sum |a| sup_d |e|. Pure powers use radius^alpha exactly;
/// log factors are sampled on |z| = radius over a nested dyadic grid of at
/// least `samples` arguments, so the estimate never decreases with `samples`.
double majorant(const Series<Complex>& f, const SectorDisc& d, int samples);

using CoverFunction = std::function<Complex(const LogPoint&)>;

/// Trapezoidal Lambda_{R,L}: the mean of f over |z| = R, |phi| <= pi L,
/// with L * nodes_per_turn intervals.
Complex spiral_average(const CoverFunction& f, double R, int L, int nodes_per_turn = 64);

/// spiral_average of z^{-alpha} f(z). Rejects exponents of lexicographic groups.
Complex extract_coefficient(const CoverFunction& f, const Exponent& alpha, double R, int L, int nodes_per_turn = 64);

/// Rows "r,phi,re,im,residual_bound" for a sweep of points.
void write_eval_csv(std::ostream& out, const Series<Complex>& f, const std::vector<LogPoint>& points,
                    std::optional<TailModel> tail = std::nullopt);

}  // namespace hahn
