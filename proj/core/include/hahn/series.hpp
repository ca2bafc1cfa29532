#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hahn/error.hpp"
#include "hahn/exponent.hpp"
#include "hahn/ring.hpp"

namespace hahn {

/// Truncated Hahn series: finitely many terms with strictly increasing
/// exponents, exact modulo e_gamma for gamma at or beyond the validity bound.
template <class C>
class Series {
 public:
  using Ring = RingTraits<C>;
  using Term = std::pair<Exponent, C>;

  Series(GroupPtr group, Validity validity, C zero = C(0))
      : group_(std::move(group)), validity_(std::move(validity)), zero_(Ring::zero_like(zero)) {
    if (!validity_.is_exact() && !same_group(validity_.bound().group(), group_))
      throw HahnError(ErrorKind::GroupMismatch, "validity bound from a different group");
  }

  /// Sorts, merges equal exponents, drops zeros and terms beyond validity.
  static Series from_terms(GroupPtr group, std::vector<Term> terms, Validity validity, C zero = C(0)) {
    Series s(std::move(group), std::move(validity), std::move(zero));
    for (const Term& t : terms)
      if (!same_group(t.first.group(), s.group_))
        throw HahnError(ErrorKind::GroupMismatch, "term exponent from a different group");
    std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    s.absorb_sorted(std::move(terms));
    return s;
  }

  static Series constant(GroupPtr group, const C& c, Validity validity) {
    std::vector<Term> t;
    t.emplace_back(Exponent::zero(group), c);
    return from_terms(group, std::move(t), std::move(validity), Ring::zero_like(c));
  }
  static Series one(GroupPtr group, Validity validity, const C& sample = C(0)) {
    return constant(std::move(group), Ring::one_like(sample), std::move(validity));
  }
  static Series monomial(const Exponent& e, const C& c, Validity validity) {
    std::vector<Term> t;
    t.emplace_back(e, c);
    return from_terms(e.group(), std::move(t), std::move(validity), Ring::zero_like(c));
  }

  const GroupPtr& group() const { return group_; }
  const Validity& validity() const { return validity_; }
  const std::vector<Term>& terms() const { return terms_; }
  const C& zero_element() const { return zero_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Least exponent in the support; nullopt when zero to order.
  std::optional<Exponent> valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().first;
  }

  C coefficient(const Exponent& e) const {
    for (const Term& t : terms_) {
      const Ordering o = compare(t.first, e);
      if (o == Ordering::Equal) return t.second;
      if (o == Ordering::Greater) break;
    }
    return zero_;
  }

  /// Terms stored exactly, so two series are equal iff group, validity and terms match.
  friend bool operator==(const Series& a, const Series& b) {
    if (!same_group(a.group_, b.group_) || !(a.validity_ == b.validity_) || a.terms_.size() != b.terms_.size())
      return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].first == b.terms_[i].first) || !(a.terms_[i].second == b.terms_[i].second)) return false;
    return true;
  }

 private:
  void absorb_sorted(std::vector<Term> sorted) {
    terms_.clear();
    for (Term& t : sorted) {
      if (!validity_.admits(t.first)) break;
      if (!terms_.empty() && terms_.back().first == t.first) {
        terms_.back().second = terms_.back().second + t.second;
      } else {
        terms_.push_back(std::move(t));
      }
    }
    std::erase_if(terms_, [](const Term& t) { return Ring::is_zero(t.second); });
  }

  GroupPtr group_;
  Validity validity_;
  C zero_;
  std::vector<Term> terms_;
};

namespace detail {

template <class C>
void require_same(const Series<C>& f, const Series<C>& g) {
  if (!same_group(f.group(), g.group())) throw HahnError(ErrorKind::GroupMismatch, "series from different groups");
}

/// Valuation for the multiplication validity rule: the least key, the
/// validity bound when zero to order, or nullopt (+infinity) for exact zero.
template <class C>
std::optional<Exponent> effective_valuation(const Series<C>& f) {
  if (!f.empty()) return f.terms().front().first;
  return f.validity().bound_opt();
}

/// Merges two ascending term lists, combining equal keys with `op`.
template <class C, class Op>
std::vector<typename Series<C>::Term> merge(const Series<C>& f, const Series<C>& g, Op op) {
  using Term = typename Series<C>::Term;
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  auto i = f.terms().begin();
  auto j = g.terms().begin();
  const C& z = f.zero_element();
  while (i != f.terms().end() || j != g.terms().end()) {
    if (j == g.terms().end() || (i != f.terms().end() && i->first < j->first)) {
      out.emplace_back(i->first, op(i->second, z));
      ++i;
    } else if (i == f.terms().end() || j->first < i->first) {
      out.emplace_back(j->first, op(z, j->second));
      ++j;
    } else {
      out.emplace_back(i->first, op(i->second, j->second));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace detail

template <class C>
Series<C> add(const Series<C>& f, const Series<C>& g) {
  detail::require_same(f, g);
  auto terms = detail::merge(f, g, [](const C& a, const C& b) { return a + b; });
  return Series<C>::from_terms(f.group(), std::move(terms), min(f.validity(), g.validity()), f.zero_element());
}

template <class C>
Series<C> sub(const Series<C>& f, const Series<C>& g) {
  detail::require_same(f, g);
  auto terms = detail::merge(f, g, [](const C& a, const C& b) { return a - b; });
  return Series<C>::from_terms(f.group(), std::move(terms), min(f.validity(), g.validity()), f.zero_element());
}

template <class C>
Series<C> neg(const Series<C>& f) {
  std::vector<typename Series<C>::Term> terms;
  for (const auto& [e, c] : f.terms()) terms.emplace_back(e, -c);
  return Series<C>::from_terms(f.group(), std::move(terms), f.validity(), f.zero_element());
}

/// c * f (coefficients multiplied on the left).
template <class C>
Series<C> scale_left(const C& c, const Series<C>& f) {
  std::vector<typename Series<C>::Term> terms;
  for (const auto& [e, a] : f.terms()) terms.emplace_back(e, c * a);
  return Series<C>::from_terms(f.group(), std::move(terms), f.validity(), f.zero_element());
}

/// f * c (coefficients multiplied on the right).
template <class C>
Series<C> scale_right(const Series<C>& f, const C& c) {
  std::vector<typename Series<C>::Term> terms;
  for (const auto& [e, a] : f.terms()) terms.emplace_back(e, a * c);
  return Series<C>::from_terms(f.group(), std::move(terms), f.validity(), f.zero_element());
}

/// Validity of a product f*g: min(VB_f + v(g), VB_g + v(f)).
template <class C>
Validity product_validity(const Series<C>& f, const Series<C>& g) {
  Validity v = Validity::exact();
  if (!f.validity().is_exact()) {
    if (auto vg = detail::effective_valuation(g)) v = min(v, Validity::below(f.validity().bound() + *vg));
  }
  if (!g.validity().is_exact()) {
    if (auto vf = detail::effective_valuation(f)) v = min(v, Validity::below(g.validity().bound() + *vf));
  }
  return v;
}

/// Cauchy product with factor order preserved; terms at or beyond `cap`
/// (if tighter than the product validity) are not formed.
template <class C>
Series<C> mul(const Series<C>& f, const Series<C>& g, std::optional<Validity> cap = std::nullopt) {
  detail::require_same(f, g);
  Validity v = product_validity(f, g);
  if (cap) v = min(v, *cap);
  std::vector<typename Series<C>::Term> products;
  products.reserve(f.size() * g.size());
  for (const auto& [ef, cf] : f.terms()) {
    for (const auto& [eg, cg] : g.terms()) {
      Exponent e = ef + eg;
      // g is sorted, so once beyond validity the rest of the row is too
      if (!v.admits(e)) break;
      products.emplace_back(std::move(e), cf * cg);
    }
  }
  return Series<C>::from_terms(f.group(), std::move(products), std::move(v), f.zero_element());
}

/// e_{-m} * f: every key and the validity bound translated by -m.
template <class C>
Series<C> shift(const Series<C>& f, const Exponent& m) {
  if (!same_group(m.group(), f.group())) throw HahnError(ErrorKind::GroupMismatch, "shift from a different group");
  const Exponent by = -m;
  std::vector<typename Series<C>::Term> terms;
  for (const auto& [e, c] : f.terms()) terms.emplace_back(e + by, c);
  return Series<C>::from_terms(f.group(), std::move(terms), f.validity().shifted(by), f.zero_element());
}

/// Drops terms at or beyond `bound` and tightens the validity accordingly.
template <class C>
Series<C> truncate(const Series<C>& f, const Validity& bound) {
  return Series<C>::from_terms(f.group(), f.terms(), min(f.validity(), bound), f.zero_element());
}

/// Equality of all coefficients below the common validity bound.
template <class C>
bool equal_modulo(const Series<C>& f, const Series<C>& g) {
  const Validity v = min(f.validity(), g.validity());
  const Series<C> a = truncate(f, v);
  const Series<C> b = truncate(g, v);
  return a == b;
}

struct IterationOptions {
  int max_iterations = 4096;
};

/// f^{-1} via the Neumann series. With f = a0 (1 - h), the inverse is
/// (sum h^k) a0^{-1}. `order` tightens (or, for exact f, supplies) the
/// validity bound of the result.
template <class C>
Series<C> neumann_invert(const Series<C>& f, std::optional<Exponent> order = std::nullopt,
                         IterationOptions options = {}) {
  using Ring = RingTraits<C>;
  const GroupPtr& group = f.group();
  const Exponent zero = Exponent::zero(group);
  if (f.empty() || compare(f.terms().front().first, zero) != Ordering::Equal)
    throw HahnError(ErrorKind::NotInvertibleConstant, "series has no invertible constant coefficient");
  const C a0 = f.terms().front().second;
  const C a0_inv = Ring::inverse(a0);

  Validity v = f.validity();
  if (order) v = min(v, Validity::below(*order));

  // h = 1 - a0^{-1} f, with strictly positive support
  std::vector<typename Series<C>::Term> hterms;
  for (std::size_t i = 1; i < f.size(); ++i) hterms.emplace_back(f.terms()[i].first, -(a0_inv * f.terms()[i].second));
  const Series<C> h = Series<C>::from_terms(group, std::move(hterms), v, f.zero_element());

  Series<C> acc = Series<C>::one(group, v, a0);
  if (!h.empty() && v.is_exact())
    throw HahnError(ErrorKind::IterationCapExceeded, "exact input with nonconstant part needs a validity order");
  Series<C> power = acc;
  for (int k = 1; !h.empty(); ++k) {
    if (k > options.max_iterations)
      throw HahnError(ErrorKind::IterationCapExceeded, "Neumann series did not reach the validity order");
    power = mul(power, h, v);
    if (power.empty()) break;
    acc = add(acc, power);
  }
  return scale_right(truncate(acc, v), a0_inv);
}

struct ComposeOptions {
  int max_iterations = 4096;
  /// Treat the coefficient list as a polynomial (missing coefficients are 0).
  bool polynomial = false;
};

/// sum_k a_k (f - f(0))^k after re-centring the power series at f(0).
/// Requires a commutative ring.
template <class C>
Series<C> compose_entire(const std::vector<C>& coeffs, const Series<C>& f, ComposeOptions options = {}) {
  using Ring = RingTraits<C>;
  static_assert(Ring::commutative, "compose_entire requires a commutative coefficient ring");
  const GroupPtr& group = f.group();
  const Exponent zero = Exponent::zero(group);
  if (coeffs.empty()) return Series<C>(group, f.validity(), f.zero_element());
  if (!f.empty() && f.terms().front().first < zero)
    throw HahnError(ErrorKind::NotAdmissible, "composition needs a series without negative exponents");

  const C f0 = f.coefficient(zero);
  std::vector<typename Series<C>::Term> gterms;
  for (const auto& t : f.terms())
    if (!(t.first == zero)) gterms.push_back(t);
  const Series<C> g = Series<C>::from_terms(group, std::move(gterms), f.validity(), f.zero_element());

  std::vector<C> b = coeffs;
  if (!Ring::is_zero(f0)) {
    if (!options.polynomial)
      throw HahnError(ErrorKind::InvalidArgument,
                      "re-centring at a nonzero constant term needs the full (polynomial) coefficient list");
    // b_j = sum_{k >= j} a_k C(k, j) f0^{k-j}, by repeated synthetic division
    const std::size_t m = coeffs.size();
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = m - 1; k > j; --k) b[k - 1] = b[k - 1] + f0 * b[k];
  }

  Validity v = f.validity();
  Series<C> acc = Series<C>::constant(group, b[0], v);
  Series<C> power = Series<C>::one(group, v, f.zero_element());
  for (std::size_t k = 1; !g.empty(); ++k) {
    if (static_cast<int>(k) > options.max_iterations)
      throw HahnError(ErrorKind::IterationCapExceeded, "composition did not reach the validity order");
    power = mul(power, g, v);
    if (power.empty()) break;
    if (k >= b.size()) {
      if (options.polynomial) break;
      // unknown coefficients beyond the list: the result is only determined below v(g^k)
      v = min(v, Validity::below(*power.valuation()));
      break;
    }
    acc = add(acc, scale_left(b[k], power));
  }
  return truncate(acc, v);
}

/// True when no key has first component 0 with negative logarithmic part
/// and none is negative, i.e. the support fits a holomorphic part.
template <class C>
bool has_holomorphic_support(const Series<C>& f) {
  const Exponent zero = Exponent::zero(f.group());
  return std::none_of(f.terms().begin(), f.terms().end(), [&](const auto& t) { return t.first < zero; });
}

}  // namespace hahn
