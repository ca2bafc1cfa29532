#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <type_traits>
#include <cstddef>
#include <vector>

#include "hahn/error.hpp"
#include "hahn/rational.hpp"

namespace hahn {

using Complex = std::complex<double>;

/// Dense n x n matrix over a scalar ring, row-major.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, const T& fill = T(0)) : n_(n), data_(n * n, fill) {}

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t dim() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

  friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
    check(a, b);
    SquareMatrix r(a.n_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
    return r;
  }
  friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
    check(a, b);
    SquareMatrix r(a.n_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
    return r;
  }
  friend SquareMatrix operator-(const SquareMatrix& a) {
    SquareMatrix r(a.n_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = -a.data_[i];
    return r;
  }
  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    check(a, b);
    SquareMatrix r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < a.n_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  SquareMatrix& operator+=(const SquareMatrix& b) { return *this = *this + b; }

 private:
  static void check(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.n_ != b.n_) throw HahnError(ErrorKind::InvalidArgument, "matrix dimension mismatch");
  }

  std::size_t n_ = 0;
  std::vector<T> data_;
};

template <class T>
SquareMatrix<T> gauss_jordan_inverse(const SquareMatrix<T>& m) {
  const std::size_t n = m.dim();
  SquareMatrix<T> a = m;
  SquareMatrix<T> inv = SquareMatrix<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    if constexpr (std::is_same_v<T, Complex>) {
      for (std::size_t r = col + 1; r < n; ++r)
        if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    } else {
      while (pivot < n && a(pivot, col) == T(0)) ++pivot;
    }
    if (pivot == n || a(pivot, col) == T(0))
      throw HahnError(ErrorKind::NotInvertibleConstant, "singular matrix coefficient");
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const T p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == T(0)) continue;
      const T f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

/// Coefficient ring interface used by the series arithmetic.
template <class C>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static constexpr bool commutative = true;
  static constexpr bool exact = true;
  static Rational zero_like(const Rational&) { return 0; }
  static Rational one_like(const Rational&) { return 1; }
  static bool is_zero(const Rational& x) { return x == 0; }
  static double norm(const Rational& x) { return std::abs(to_double(x)); }
  static Rational inverse(const Rational& x) {
    if (x == 0) throw HahnError(ErrorKind::NotInvertibleConstant, "zero constant coefficient");
    return 1 / x;
  }
  static Complex to_complex(const Rational& x) { return {to_double(x), 0.0}; }
};

template <>
struct RingTraits<Complex> {
  static constexpr bool commutative = true;
  static constexpr bool exact = false;
  static Complex zero_like(const Complex&) { return 0.0; }
  static Complex one_like(const Complex&) { return 1.0; }
  static bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }
  static double norm(const Complex& x) { return std::abs(x); }
  static Complex inverse(const Complex& x) {
    if (is_zero(x)) throw HahnError(ErrorKind::NotInvertibleConstant, "zero constant coefficient");
    return 1.0 / x;
  }
  static Complex to_complex(const Complex& x) { return x; }
};

template <class T>
struct RingTraits<SquareMatrix<T>> {
  using M = SquareMatrix<T>;
  static constexpr bool commutative = false;
  static constexpr bool exact = RingTraits<T>::exact;
  static M zero_like(const M& sample) { return M(sample.dim()); }
  static M one_like(const M& sample) { return M::identity(sample.dim()); }
  static bool is_zero(const M& x) {
    return std::all_of(x.data().begin(), x.data().end(), [](const T& v) { return RingTraits<T>::is_zero(v); });
  }
  /// Frobenius norm, an upper bound for the operator norm.
  static double norm(const M& x) {
    double s = 0;
    for (const T& v : x.data()) {
      const double a = RingTraits<T>::norm(v);
      s += a * a;
    }
    return std::sqrt(s);
  }
  static M inverse(const M& x) { return gauss_jordan_inverse(x); }
};

}  // namespace hahn
