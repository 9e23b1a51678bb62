#pragma once

#include <string>
#include <vector>

#include "janowski/bounds.hpp"
#include "janowski/errors.hpp"
#include "janowski/series.hpp"
#include "janowski/starlike.hpp"

namespace janowski {

/// Inverse function F of f, F(w) = w + sum A_n w^n, with the method that
/// produced the coefficients.
template <class T>
struct InverseExpansion {
  StarlikeFunction<T> source;
  Series<T> F;
  std::string method;
};

/// Inverse G(w) = w (1 + sum B_n w^-n) of g(z) = 1/f(1/z), stored through
/// its Taylor data B_1..B_N.
template <class T>
struct MeroInverseExpansion {
  StarlikeFunction<T> source;
  std::vector<T> B;  // B[i] is B_{i+1}
  std::string method;
};

template <class T>
InverseExpansion<T> inverse_direct(const StarlikeFunction<T>& f) {
  return {f, revert(f.series), "direct-reversion"};
}

/// A_n through the contour-integral identity A_n = (1/n) a_{n-1}(-n, f).
template <class T>
T inverse_via_negpow(const StarlikeFunction<T>& f, long n) {
  if (n < 2) throw InvalidIndex("inverse coefficient index must be >= 2");
  const Series<T> a = neg_power_coeffs(f, Rational(n), static_cast<int>(n) - 1);
  return a[static_cast<int>(n) - 1] / scalar_traits<T>::from_int(n);
}

/// Coefficient n of (F/w)^t computed directly from the reverted series.
template <class T>
T inverse_power_coeff_direct(const StarlikeFunction<T>& f, long t, long n) {
  const Series<T> Fw = shift_down(revert(f.series));  // F/w, constant 1
  if (n > Fw.order())
    throw TruncationTooShort("series order too small for requested index");
  T mu;
  if constexpr (scalar_traits<T>::exact)
    mu = Rational(t);
  else
    mu = Complex(static_cast<double>(t), 0.0);
  return pow_real<T>(Fw, mu)[static_cast<int>(n)];
}

/// The coefficient-transfer relation between powers of f and powers of its
/// inverse: A_n(t, F) = (t/(t+n)) a_n(-(t+n), f), valid for t+n != 0.
template <class T>
T jabotinsky(const StarlikeFunction<T>& f, long t, long n) {
  if (n < 1) throw InvalidIndex("coefficient index must be >= 1");
  if (t == 0) throw InvalidIndex("t must be a nonzero integer");
  if (t + n == 0)
    throw InvalidIndex("t + n = 0 is outside the transfer relation");
  const Series<T> a = neg_power_coeffs(f, Rational(t + n), static_cast<int>(n));
  const T ratio = scalar_traits<T>::from_int(t) / scalar_traits<T>::from_int(t + n);
  return ratio * a[static_cast<int>(n)];
}

/// One instance of the generating identity behind the excluded t+n = 0
/// index: coefficient m of f'/f (Laurent part dropped) against coefficient
/// m+1 of (w/F)^{m+1}.
struct LogDerivativeInstance {
  int m = 0;
  bool checked = false;  // false when truncation is too short
  bool equal = false;
};

template <class T>
std::vector<LogDerivativeInstance> log_derivative_identity_check(
    const StarlikeFunction<T>& f, int m_max) {
  std::vector<LogDerivativeInstance> out;
  // z f'/f = 1 + (coefficients of f'/f shifted by one)
  const Series<T> s = mul(differentiate(f.series), recip(shift_down(f.series)));
  const Series<T> Fw = shift_down(revert(f.series));
  for (int m = 0; m <= m_max; ++m) {
    LogDerivativeInstance inst;
    inst.m = m;
    if (m + 1 > s.order() || m + 1 > Fw.order()) {
      out.push_back(inst);
      continue;
    }
    inst.checked = true;
    T mu;
    if constexpr (scalar_traits<T>::exact)
      mu = Rational(-(m + 1));
    else
      mu = Complex(-(m + 1.0), 0.0);
    const T rhs = pow_real<T>(Fw, mu)[m + 1];
    const T lhs = s[m + 1];
    if constexpr (scalar_traits<T>::exact)
      inst.equal = lhs == rhs;
    else
      inst.equal = std::abs(lhs - rhs) <= 1e-9;
    out.push_back(inst);
  }
  return out;
}

/// B_n via the transfer relations B_1 = a_2, B_{n+1} = -(1/n) a_{n+1}(-n, f).
template <class T>
MeroInverseExpansion<T> mero_inverse(const StarlikeFunction<T>& f, int n_max) {
  if (n_max < 1) throw InvalidIndex("need n_max >= 1");
  if (f.series.order() < n_max + 2)
    throw TruncationTooShort("need series order >= n_max + 2");
  std::vector<T> B;
  B.push_back(f.series[2]);  // B_1 = a_2
  for (int n = 1; n + 1 <= n_max; ++n) {
    const Series<T> a = neg_power_coeffs(f, Rational(n), n + 1);
    B.push_back(-a[n + 1] / scalar_traits<T>::from_int(n));
  }
  return {f, std::move(B), "negpow-identity"};
}

/// B_n from G(w) = 1/F(1/w): with u = 1/w the tail coefficients are those
/// of the reciprocal of F(u)/u.
template <class T>
MeroInverseExpansion<T> mero_inverse_via_reversion(const StarlikeFunction<T>& f,
                                                   int n_max) {
  if (n_max < 1) throw InvalidIndex("need n_max >= 1");
  const Series<T> Fw = shift_down(revert(f.series));
  if (Fw.order() < n_max)
    throw TruncationTooShort("need series order >= n_max + 1");
  const Series<T> g = recip(Fw);
  std::vector<T> B;
  for (int n = 1; n <= n_max; ++n) B.push_back(g[n]);
  return {f, std::move(B), "direct-reversion"};
}

}  // namespace janowski
