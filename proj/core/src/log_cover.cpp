#include "hahn/log_cover.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>

namespace hahn {

LogPoint::LogPoint(double r_, double phi_) : r(r_), phi(phi_) {
  if (!(r > 0) || !std::isfinite(r) || !std::isfinite(phi))
    throw HahnError(ErrorKind::InvalidArgument, "cover point needs finite r > 0 and finite phi");
}

LogPoint LogPoint::principal(Complex z) { return {std::abs(z), std::arg(z)}; }

Complex basis_eval(const Exponent& e, const LogPoint& p) {
  const Complex L = p.log();
  const double alpha = e.alpha_value();
  Complex value = alpha == 0.0 ? Complex(1.0) : std::exp(alpha * L);
  if (e.beta() != 0) {
    if (p.r >= 1.0)
      throw HahnError(ErrorKind::BranchCutHit, "log factors are only evaluated inside the unit disc (r < 1)");
    value *= std::exp(-e.beta_value() * std::log(-L));
  }
  return value;
}

EvalResult series_eval(const Series<Complex>& f, const LogPoint& p, std::optional<TailModel> tail) {
  EvalResult out;
  Complex sum = 0.0;
  for (const auto& [e, c] : f.terms()) sum += c * basis_eval(e, p);
  out.value = sum;
  if (!f.validity().is_exact()) {
    if (tail) {
      if (!(tail->q >= 0 && tail->q < 1) || !(tail->M >= 0))
        throw HahnError(ErrorKind::InvalidArgument, "tail model needs M >= 0 and 0 <= q < 1");
      out.residual_bound = tail->M * std::abs(basis_eval(f.validity().bound(), p)) / (1.0 - tail->q);
    } else {
      out.truncation_only = true;
    }
  }
  return out;
}

EvalResult series_eval(const Meromorphic<Complex>& f, const LogPoint& p, std::optional<TailModel> tail) {
  EvalResult unit = series_eval(f.unit, p, tail);
  const Complex factor = basis_eval(f.pivot, p);
  unit.value *= factor;
  unit.residual_bound *= std::abs(factor);
  return unit;
}

namespace {

double sampled_log_sup(const Exponent& e, const SectorDisc& d, int samples) {
  const double inf = std::numeric_limits<double>::infinity();
  double sigma = std::numbers::pi;
  if (!d.sigma) {
    // |L|^{-beta} grows without bound in phi when beta < 0
    if (e.beta() < 0) return inf;
  } else {
    sigma = *d.sigma;
  }
  int grid = 2;
  while (grid < samples) grid *= 2;
  double sup = 0.0;
  for (int j = 0; j <= grid; ++j) {
    const double phi = -sigma + 2.0 * sigma * j / grid;
    sup = std::max(sup, std::abs(basis_eval(e, LogPoint(d.radius, phi))));
  }
  return sup;
}

}  // namespace

double majorant(const Series<Complex>& f, const SectorDisc& d, int samples) {
  if (samples < 1) throw HahnError(ErrorKind::InvalidArgument, "samples must be positive");
  if (!(d.radius > 0)) throw HahnError(ErrorKind::InvalidArgument, "sector radius must be positive");
  const double inf = std::numeric_limits<double>::infinity();
  double total = 0.0;
  for (const auto& [e, c] : f.terms()) {
    const double a = std::abs(c);
    const double alpha = e.alpha_value();
    double sup;
    if (e.beta() == 0) {
      if (alpha < 0) return inf;
      sup = alpha == 0 ? 1.0 : std::pow(d.radius, alpha);
    } else {
      sup = sampled_log_sup(e, d, samples);
    }
    total += a * sup;
  }
  return total;
}

Complex spiral_average(const CoverFunction& f, double R, int L, int nodes_per_turn) {
  if (!(R > 0) || L < 1 || nodes_per_turn < 1)
    throw HahnError(ErrorKind::InvalidArgument, "spiral average needs R > 0, L >= 1, nodes_per_turn >= 1");
  const long n = static_cast<long>(L) * nodes_per_turn;
  const double span = std::numbers::pi * L;
  const double h = 2.0 * span / static_cast<double>(n);
  Complex sum = 0.5 * (f(LogPoint(R, -span)) + f(LogPoint(R, span)));
  for (long j = 1; j < n; ++j) sum += f(LogPoint(R, -span + h * static_cast<double>(j)));
  return sum * h / (2.0 * span);
}

Complex extract_coefficient(const CoverFunction& f, const Exponent& alpha, double R, int L, int nodes_per_turn) {
  if (alpha.group()->is_lex_pair())
    throw HahnError(ErrorKind::UnsupportedGroup, "coefficient extraction is defined for pure power groups only");
  const double a = alpha.alpha_value();
  auto g = [&](const LogPoint& p) { return std::exp(-a * p.log()) * f(p); };
  return spiral_average(g, R, L, nodes_per_turn);
}

void write_eval_csv(std::ostream& out, const Series<Complex>& f, const std::vector<LogPoint>& points,
                    std::optional<TailModel> tail) {
  out << "r,phi,re,im,residual_bound\n";
  out << std::setprecision(17);
  for (const LogPoint& p : points) {
    const EvalResult res = series_eval(f, p, tail);
    out << p.r << ',' << p.phi << ',' << res.value.real() << ',' << res.value.imag() << ',' << res.residual_bound
        << '\n';
  }
}

}  // namespace hahn
