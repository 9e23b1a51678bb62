#pragma once

#include <algorithm>
#include <complex>
#include <sstream>
#include <string>
#include <vector>

#include "janowski/errors.hpp"
#include "janowski/rational.hpp"

namespace janowski {

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* backend_name = "rational";
  using real_type = Rational;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x) { return x == 0; }
  static bool is_one(const Rational& x) { return x == 1; }
  static Rational conj(const Rational& x) { return x; }
  static Rational abs(const Rational& x) { return janowski::abs(x); }
  static Rational from_int(long n) { return Rational(n); }
  static std::string str(const Rational& x) { return format_rational(x); }
};

template <>
struct scalar_traits<std::complex<double>> {
  static constexpr bool exact = false;
  static constexpr const char* backend_name = "complex";
  using C = std::complex<double>;
  using real_type = double;
  // Tolerance used only for normalization prechecks, never for results.
  static constexpr double eps = 1e-9;
  static C zero() { return {0.0, 0.0}; }
  static C one() { return {1.0, 0.0}; }
  static bool is_zero(const C& x) { return std::abs(x) <= eps; }
  static bool is_one(const C& x) { return std::abs(x - 1.0) <= eps; }
  static C conj(const C& x) { return std::conj(x); }
  static double abs(const C& x) { return std::abs(x); }
  static C from_int(long n) { return {static_cast<double>(n), 0.0}; }
  static std::string str(const C& x) {
    std::ostringstream os;
    os.precision(17);
    os << x.real() << "," << x.imag();
    return os.str();
  }
};

using Complex = std::complex<double>;

/// Dense truncated power series: coeffs[k] is the coefficient of z^k,
/// k = 0..order. Truncation order is explicit and every binary operation
/// propagates the minimum of the operand orders.
template <class T>
class Series {
 public:
  using scalar_type = T;
  using traits = scalar_traits<T>;

  explicit Series(int order)
      : coeffs_(static_cast<std::size_t>(order) + 1, traits::zero()) {
    if (order < 0) throw InvalidIndex("series order must be >= 0");
  }

  Series(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InvalidIndex("series needs >= 1 coefficient");
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const T& operator[](int k) const {
    if (k < 0 || k > order())
      throw InvalidIndex("coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(k)];
  }
  T& operator[](int k) {
    if (k < 0 || k > order())
      throw InvalidIndex("coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(k)];
  }

  const std::vector<T>& coeffs() const { return coeffs_; }

  bool operator==(const Series& rhs) const = default;

  static Series constant(T value, int order) {
    Series s(order);
    s[0] = std::move(value);
    return s;
  }
  static Series one(int order) { return constant(traits::one(), order); }
  /// The identity series z (requires order >= 1).
  static Series z(int order) {
    Series s(order);
    s[1] = traits::one();
    return s;
  }

  /// Drops coefficients above n; n must not exceed the stored order.
  Series truncated(int n) const {
    if (n > order())
      throw TruncationTooShort("cannot truncate to a higher order");
    std::vector<T> c(coeffs_.begin(), coeffs_.begin() + n + 1);
    return Series(std::move(c));
  }

  /// Zero-pads up to order n. Padded coefficients are *unknown* in the
  /// truncated-series sense; callers must only rely on positions that a
  /// subsequent computation actually determines.
  Series padded(int n) const {
    if (n < order()) throw InvalidIndex("padding must not shrink the series");
    std::vector<T> c = coeffs_;
    c.resize(static_cast<std::size_t>(n) + 1, traits::zero());
    return Series(std::move(c));
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const T& c) { return traits::is_zero(c); });
  }

 private:
  std::vector<T> coeffs_;
};

using RationalSeries = Series<Rational>;
using ComplexSeries = Series<Complex>;

template <class T>
Series<T> operator+(const Series<T>& a, const Series<T>& b) {
  const int n = std::min(a.order(), b.order());
  Series<T> r(n);
  for (int k = 0; k <= n; ++k) r[k] = a[k] + b[k];
  return r;
}

template <class T>
Series<T> operator-(const Series<T>& a, const Series<T>& b) {
  const int n = std::min(a.order(), b.order());
  Series<T> r(n);
  for (int k = 0; k <= n; ++k) r[k] = a[k] - b[k];
  return r;
}

template <class T>
Series<T> operator-(const Series<T>& a) {
  Series<T> r(a.order());
  for (int k = 0; k <= a.order(); ++k) r[k] = -a[k];
  return r;
}

template <class T>
Series<T> scale(const Series<T>& a, const T& c) {
  Series<T> r(a.order());
  for (int k = 0; k <= a.order(); ++k) r[k] = c * a[k];
  return r;
}

/// Cauchy product truncated at min(order(a), order(b)).
template <class T>
Series<T> mul(const Series<T>& a, const Series<T>& b) {
  const int n = std::min(a.order(), b.order());
  Series<T> r(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n - i; ++j) r[i + j] += a[i] * b[j];
  return r;
}

template <class T>
Series<T> operator*(const Series<T>& a, const Series<T>& b) {
  return mul(a, b);
}

/// Multiplication by z; keeps all information, order grows by one.
template <class T>
Series<T> shift_up(const Series<T>& a) {
  Series<T> r(a.order() + 1);
  for (int k = 0; k <= a.order(); ++k) r[k + 1] = a[k];
  return r;
}

/// Division by z; requires a vanishing constant term.
template <class T>
Series<T> shift_down(const Series<T>& a) {
  if (!scalar_traits<T>::is_zero(a[0]))
    throw NotNormalized("cannot divide by z: nonzero constant term");
  if (a.order() < 1) return Series<T>(0);
  Series<T> r(a.order() - 1);
  for (int k = 1; k <= a.order(); ++k) r[k - 1] = a[k];
  return r;
}

template <class T>
Series<T> differentiate(const Series<T>& a) {
  if (a.order() == 0) return Series<T>(0);
  Series<T> r(a.order() - 1);
  for (int k = 1; k <= a.order(); ++k)
    r[k - 1] = scalar_traits<T>::from_int(k) * a[k];
  return r;
}

/// Antiderivative with zero constant term; order grows by one.
template <class T>
Series<T> integrate(const Series<T>& a) {
  Series<T> r(a.order() + 1);
  for (int k = 0; k <= a.order(); ++k)
    r[k + 1] = a[k] / scalar_traits<T>::from_int(k + 1);
  return r;
}

/// Multiplicative inverse: mul(a, recip(a)) = 1 up to order.
template <class T>
Series<T> recip(const Series<T>& a) {
  if (scalar_traits<T>::is_zero(a[0])) throw NotInvertible();
  const int n = a.order();
  Series<T> r(n);
  r[0] = scalar_traits<T>::one() / a[0];
  for (int k = 1; k <= n; ++k) {
    T acc = scalar_traits<T>::zero();
    for (int j = 1; j <= k; ++j) acc += a[j] * r[k - j];
    r[k] = -acc / a[0];
  }
  return r;
}

/// Formal logarithm of a series with unit constant term; result has zero
/// constant term and satisfies (log a)' = a'/a up to order-1.
template <class T>
Series<T> log_unit(const Series<T>& a) {
  if (!scalar_traits<T>::is_one(a[0]))
    throw NotNormalized("log requires constant term 1");
  if (a.order() == 0) return Series<T>(0);
  return integrate(mul(differentiate(a), recip(a)));
}

/// Formal exponential of a series with zero constant term.
template <class T>
Series<T> exp_zero(const Series<T>& a) {
  if (!scalar_traits<T>::is_zero(a[0]))
    throw NotNormalized("exp requires constant term 0");
  const int n = a.order();
  Series<T> r(n);
  r[0] = scalar_traits<T>::one();
  // k e_k = sum_{j=1..k} j a_j e_{k-j}, from e' = a' e.
  for (int k = 1; k <= n; ++k) {
    T acc = scalar_traits<T>::zero();
    for (int j = 1; j <= k; ++j)
      acc += scalar_traits<T>::from_int(j) * a[j] * r[k - j];
    r[k] = acc / scalar_traits<T>::from_int(k);
  }
  return r;
}

/// Real power a^mu of a series with unit constant term, via exp(mu log a).
/// In the rational backend mu is an exact rational and so is the result.
template <class T>
Series<T> pow_real(const Series<T>& a, const T& mu) {
  if (!scalar_traits<T>::is_one(a[0]))
    throw NotNormalized("pow requires constant term 1");
  return exp_zero(scale(log_unit(a), mu));
}

inline RationalSeries pow_real(const RationalSeries& a, const Rational& mu) {
  return pow_real<Rational>(a, mu);
}
inline ComplexSeries pow_real(const ComplexSeries& a, double mu) {
  return pow_real<Complex>(a, Complex(mu, 0.0));
}

/// Composition a(b(z)); the inner series must vanish at the origin.
template <class T>
Series<T> compose(const Series<T>& a, const Series<T>& b) {
  if (!scalar_traits<T>::is_zero(b[0])) throw NotComposable();
  const int n = std::min(a.order(), b.order());
  const Series<T> bt = b.order() == n ? b : b.truncated(n);
  Series<T> r = Series<T>::constant(a[a.order()], n);
  for (int k = a.order() - 1; k >= 0; --k) {
    r = mul(r, bt);
    r[0] += a[k];
  }
  return r;
}

/// Compositional inverse: compose(f, revert(f)) = z up to order.
/// Newton iteration; each step doubles the number of correct coefficients.
template <class T>
Series<T> revert(const Series<T>& f) {
  if (!scalar_traits<T>::is_zero(f[0]) || f.order() < 1 ||
      !scalar_traits<T>::is_one(f[1]))
    throw NotNormalizedForReversion();
  const int n = f.order();
  const Series<T> id = Series<T>::z(n);
  const Series<T> df = differentiate(f).padded(n);
  Series<T> g = id;  // correct through order 1
  for (int correct = 1; correct < n; correct *= 2) {
    const Series<T> residual = compose(f, g) - id;
    g = g - mul(residual, recip(compose(df, g)));
  }
  return g;
}

/// Horner evaluation of the truncated polynomial at a point.
template <class T>
T evaluate(const Series<T>& a, const T& zval) {
  T acc = a[a.order()];
  for (int k = a.order() - 1; k >= 0; --k) acc = acc * zval + a[k];
  return acc;
}

inline ComplexSeries to_complex(const RationalSeries& a) {
  ComplexSeries r(a.order());
  for (int k = 0; k <= a.order(); ++k) r[k] = Complex(to_double(a[k]), 0.0);
  return r;
}

}  // namespace janowski
