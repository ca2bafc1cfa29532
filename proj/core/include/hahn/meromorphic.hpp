#pragma once

#include "hahn/series.hpp"

namespace hahn {

/// e_pivot * unit, with unit(0) invertible.
template <class C>
struct Meromorphic {
  Exponent pivot;
  Series<C> unit;

  /// The same function as a single series (keys may be negative).
  Series<C> to_series() const { return shift(unit, -pivot); }
};

/// f / g as e_{v(f) - v(g)} * shift(f) * shift(g)^{-1}. `order` bounds the
/// unit when both inputs are exact.
template <class C>
Meromorphic<C> divide_scalar(const Series<C>& f, const Series<C>& g, std::optional<Exponent> order = std::nullopt,
                             IterationOptions options = {}) {
  detail::require_same(f, g);
  if (g.empty()) throw HahnError(ErrorKind::DivisionByZeroSeries, "denominator is zero to its validity order");
  if (f.empty()) throw HahnError(ErrorKind::DomainError, "numerator is zero to its validity order");
  const Exponent vf = *f.valuation();
  const Exponent vg = *g.valuation();
  const Series<C> fs = shift(f, vf);
  const Series<C> gs = shift(g, vg);
  // an exact denominator still needs an order for its inverse; use the numerator's
  if (!order && gs.validity().is_exact() && !fs.validity().is_exact()) order = fs.validity().bound();
  Series<C> unit = mul(fs, neumann_invert(gs, order, options));
  return {vf - vg, std::move(unit)};
}

}  // namespace hahn
