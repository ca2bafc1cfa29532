#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hahn/log_cover.hpp"
#include "hahn/series.hpp"

namespace hahn {

inline constexpr std::size_t kDefaultDimensionCap = 6;

/// n x n grid of scalar series over one group, truncated to a common validity.
template <class C>
class MatrixSeries {
 public:
  MatrixSeries(std::size_t n, std::vector<Series<C>> entries) : n_(n), entries_(std::move(entries)) {
    if (n_ == 0 || entries_.size() != n_ * n_)
      throw HahnError(ErrorKind::InvalidArgument, "matrix series needs n*n entries with n >= 1");
    Validity v = entries_.front().validity();
    for (const auto& e : entries_) {
      detail::require_same(entries_.front(), e);
      v = min(v, e.validity());
    }
    for (auto& e : entries_) e = truncate(e, v);
  }

  static MatrixSeries identity(std::size_t n, const GroupPtr& group, const Validity& v) {
    std::vector<Series<C>> entries;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        entries.push_back(i == j ? Series<C>::one(group, v) : Series<C>(group, v));
    return {n, std::move(entries)};
  }
  static MatrixSeries zero(std::size_t n, const GroupPtr& group, const Validity& v) {
    return {n, std::vector<Series<C>>(n * n, Series<C>(group, v))};
  }

  std::size_t dim() const { return n_; }
  const Series<C>& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  const std::vector<Series<C>>& entries() const { return entries_; }
  const GroupPtr& group() const { return entries_.front().group(); }
  const Validity& validity() const { return entries_.front().validity(); }

  /// One series with n x n matrix coefficients.
  Series<SquareMatrix<C>> to_matrix_coefficients() const {
    using M = SquareMatrix<C>;
    std::vector<typename Series<M>::Term> terms;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (const auto& [e, c] : (*this)(i, j).terms()) {
          M m(n_);
          m(i, j) = c;
          terms.emplace_back(e, std::move(m));
        }
    return Series<M>::from_terms(group(), std::move(terms), validity(), M(n_));
  }

  static MatrixSeries from_matrix_coefficients(const Series<SquareMatrix<C>>& s) {
    const std::size_t n = s.zero_element().dim();
    std::vector<std::vector<typename Series<C>::Term>> grid(n * n);
    for (const auto& [e, m] : s.terms())
      for (std::size_t k = 0; k < n * n; ++k)
        if (!RingTraits<C>::is_zero(m.data()[k])) grid[k].emplace_back(e, m.data()[k]);
    std::vector<Series<C>> entries;
    for (auto& terms : grid) entries.push_back(Series<C>::from_terms(s.group(), std::move(terms), s.validity()));
    return {n, std::move(entries)};
  }

  friend bool operator==(const MatrixSeries& a, const MatrixSeries& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t n_;
  std::vector<Series<C>> entries_;
};

template <class C>
MatrixSeries<C> matrix_sub(const MatrixSeries<C>& a, const MatrixSeries<C>& b) {
  std::vector<Series<C>> entries;
  for (std::size_t k = 0; k < a.entries().size(); ++k) entries.push_back(sub(a.entries()[k], b.entries()[k]));
  return {a.dim(), std::move(entries)};
}

template <class C>
MatrixSeries<C> matrix_mul(const MatrixSeries<C>& a, const MatrixSeries<C>& b) {
  const std::size_t n = a.dim();
  if (b.dim() != n) throw HahnError(ErrorKind::InvalidArgument, "matrix dimension mismatch");
  std::vector<Series<C>> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Series<C> s = mul(a(i, 0), b(0, j));
      for (std::size_t k = 1; k < n; ++k) s = add(s, mul(a(i, k), b(k, j)));
      entries.push_back(std::move(s));
    }
  return {n, std::move(entries)};
}

namespace detail {

template <class C>
Series<C> cofactor_det(const std::vector<const Series<C>*>& m, std::size_t n) {
  if (n == 1) return *m[0];
  std::optional<Series<C>> total;
  std::vector<const Series<C>*> minor((n - 1) * (n - 1));
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != col) minor[(i - 1) * (n - 1) + jj++] = m[i * n + j];
    Series<C> term = mul(*m[col], cofactor_det(minor, n - 1));
    if (col % 2 == 1) term = neg(term);
    total = total ? add(*total, term) : term;
  }
  return *total;
}

template <class C>
void check_cap(const MatrixSeries<C>& m, std::size_t cap) {
  if (m.dim() > cap)
    throw HahnError(ErrorKind::DimensionCapExceeded,
                    "dimension " + std::to_string(m.dim()) + " exceeds cap " + std::to_string(cap));
}

}  // namespace detail

/// Determinant by cofactor expansion along the first row.
template <class C>
Series<C> det(const MatrixSeries<C>& m, std::size_t cap = kDefaultDimensionCap) {
  detail::check_cap(m, cap);
  std::vector<const Series<C>*> ptrs;
  for (const auto& e : m.entries()) ptrs.push_back(&e);
  return detail::cofactor_det(ptrs, m.dim());
}

/// Transposed matrix of signed cofactors.
template <class C>
MatrixSeries<C> adjugate(const MatrixSeries<C>& m, std::size_t cap = kDefaultDimensionCap) {
  detail::check_cap(m, cap);
  const std::size_t n = m.dim();
  if (n == 1) return MatrixSeries<C>::identity(1, m.group(), m.validity());
  std::vector<Series<C>> entries(n * n, Series<C>(m.group(), m.validity()));
  std::vector<const Series<C>*> minor((n - 1) * (n - 1));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t i = 0, ii = 0; i < n; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, jj = 0; j < n; ++j)
          if (j != c) minor[ii * (n - 1) + jj++] = &m(i, j);
        ++ii;
      }
      Series<C> cof = detail::cofactor_det(minor, n - 1);
      if ((r + c) % 2 == 1) cof = neg(cof);
      entries[c * n + r] = std::move(cof);
    }
  return {n, std::move(entries)};
}

/// numer / denom with (Id - F) numer = denom Id modulo validity.
template <class C>
struct MeromorphicMatrix {
  Series<C> denom;
  MatrixSeries<C> numer;

  /// Entries of numer / denom as series; negative keys appear when denom(0) = 0.
  /// `order` bounds the expansion of an exact denominator.
  MatrixSeries<C> expand(std::optional<Exponent> order = std::nullopt, IterationOptions options = {}) const {
    const Exponent v = *denom.valuation();
    if (order) order = *order + v;
    const Series<C> inv = neumann_invert(shift(denom, v), order, options);
    std::vector<Series<C>> entries;
    for (const auto& e : numer.entries()) entries.push_back(shift(mul(e, inv), v));
    return {numer.dim(), std::move(entries)};
  }
};

/// det(Id - F) vanishes to the stated validity order.
struct NowhereInvertible {
  Validity validity;
};

template <class C>
std::variant<MeromorphicMatrix<C>, NowhereInvertible> resolve_identity_minus(const MatrixSeries<C>& F,
                                                                             std::size_t cap = kDefaultDimensionCap) {
  detail::check_cap(F, cap);
  const auto A = matrix_sub(MatrixSeries<C>::identity(F.dim(), F.group(), F.validity()), F);
  Series<C> d = det(A, cap);
  if (d.empty()) return NowhereInvertible{d.validity()};
  return MeromorphicMatrix<C>{std::move(d), adjugate(A, cap)};
}

template <class C>
Series<Complex> to_complex_series(const Series<C>& f) {
  std::vector<Series<Complex>::Term> terms;
  for (const auto& [e, c] : f.terms()) terms.emplace_back(e, RingTraits<C>::to_complex(c));
  return Series<Complex>::from_terms(f.group(), std::move(terms), f.validity());
}

/// Pointwise values of a matrix series.
template <class C>
SquareMatrix<Complex> evaluate(const MatrixSeries<C>& m, const LogPoint& p) {
  SquareMatrix<Complex> out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = series_eval(to_complex_series(m(i, j)), p).value;
  return out;
}

inline double inf_norm(const SquareMatrix<Complex>& m) {
  double best = 0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    double row = 0;
    for (std::size_t j = 0; j < m.dim(); ++j) row += std::abs(m(i, j));
    best = std::max(best, row);
  }
  return best;
}

/// max over points of ||(Id - F(z)) N(z) / d(z) - Id||_inf.
template <class C>
double verify_inverse(const MatrixSeries<C>& F, const MeromorphicMatrix<C>& G, const std::vector<LogPoint>& points) {
  const std::size_t n = F.dim();
  double worst = 0;
  for (const LogPoint& p : points) {
    const auto A = SquareMatrix<Complex>::identity(n) - evaluate(F, p);
    const Complex d = series_eval(to_complex_series(G.denom), p).value;
    auto prod = A * evaluate(G.numer, p);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) prod(i, j) /= d;
    worst = std::max(worst, inf_norm(prod - SquareMatrix<Complex>::identity(n)));
  }
  return worst;
}

}  // namespace hahn
