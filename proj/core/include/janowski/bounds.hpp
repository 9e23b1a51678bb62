#pragma once

#include <string>
#include <tuple>

#include "janowski/errors.hpp"
#include "janowski/params.hpp"
#include "janowski/rational.hpp"
#include "janowski/starlike.hpp"

namespace janowski {

/// Closed-form bound together with the case that produced it and the
/// cutoff index M separating the full-product regime from the tail.
struct BoundValue {
  Rational value;
  std::string case_fired;
  long cutoff_M = 0;
};

/// Which cell of the delta partition applies for a given lambda > 1.
/// Cells are half-open; membership is decided by exact comparison.
struct PartitionCell {
  bool in_J = false;     // delta in [0, (lambda-[lambda])/lambda)
  long k = -1;           // delta in I_k otherwise
  bool integer_case = false;  // lambda(1-delta) is a positive integer
};

inline PartitionCell classify_cell(const Rational& lambda,
                                   const Rational& delta) {
  if (lambda <= 0) throw InvalidLambda();
  if (delta < 0 || delta >= 1)
    throw InvalidParams("delta must lie in [0,1)");
  PartitionCell cell;
  cell.integer_case = is_integer(lambda * (1 - delta));
  if (lambda <= 1) return cell;  // no partition needed below 1
  const BigInt fl = floor_rational(lambda);
  const Rational frac = lambda - Rational(fl);
  if (lambda * delta < frac) {
    cell.in_J = true;
    return cell;
  }
  cell.k = static_cast<long>(floor_rational(lambda * delta - frac));
  return cell;
}

/// Largest index for which the full product bound applies:
/// M = floor(lambda (1-delta)) + 1.
inline long cutoff_M(const Rational& lambda, const Rational& delta) {
  if (lambda <= 0) throw InvalidLambda();
  if (delta < 0 || delta >= 1)
    throw InvalidParams("delta must lie in [0,1)");
  return static_cast<long>(floor_rational(lambda * (1 - delta))) + 1;
}

namespace detail {

/// prod_{j=0}^{count-1} (lambda(A-B)+Bj)/(j+1)
inline Rational factor_product(const JanowskiParams& p, const Rational& lambda,
                               long count) {
  const Rational base = lambda * (p.A() - p.B());
  Rational prod(1);
  for (long j = 0; j < count; ++j)
    prod *= (base + p.B() * j) / Rational(j + 1);
  return prod;
}

inline std::string negpow_tag(const Rational& lambda, const Rational& delta,
                              long l, long M) {
  if (l > M) return "Thm2.2-tail";
  if (lambda <= 1) return "Thm2.2-i";
  const PartitionCell cell = classify_cell(lambda, delta);
  if (cell.in_J) return "Thm2.2-iii";
  return cell.integer_case ? "Thm2.2-ii-integer" : "Thm2.2-ii";
}

}  // namespace detail

/// Bound on |a_l| of (f/z)^{-lambda} over the class: the full factor
/// product for l <= M, the decreasing tail (M/l) * product(M) beyond.
inline BoundValue bound_neg_power(const JanowskiParams& p,
                                  const Rational& lambda, long l) {
  if (lambda <= 0) throw InvalidLambda();
  if (l < 1) throw InvalidIndex("coefficient index must be >= 1");
  const long M = cutoff_M(lambda, p.delta());
  BoundValue out;
  out.cutoff_M = M;
  out.case_fired = detail::negpow_tag(lambda, p.delta(), l, M);
  if (l <= M)
    out.value = detail::factor_product(p, lambda, l);
  else
    out.value = Rational(M, l) * detail::factor_product(p, lambda, M);
  return out;
}

/// Coefficients of (f/z)^{-lambda} up to `order`.
template <class T, class E>
Series<T> neg_power_coeffs(const StarlikeFunction<T>& f, const E& lambda,
                           int order) {
  const Series<T> u = shift_down(f.series);  // f/z, unit constant term
  if (order > u.order())
    throw TruncationTooShort("series order too small for requested order");
  return pow_real<T>(u, -T(lambda)).truncated(order);
}

inline RationalSeries neg_power_coeffs(const StarlikeFunction<Rational>& f,
                                       const Rational& lambda, int order) {
  return neg_power_coeffs<Rational, Rational>(f, lambda, order);
}
inline ComplexSeries neg_power_coeffs(const StarlikeFunction<Complex>& f,
                                      const Rational& lambda, int order) {
  return neg_power_coeffs<Complex, Complex>(f, Complex(to_double(lambda), 0.0),
                                            order);
}

/// Both sides of the telescoping product identity
///   lambda^2(A-B)^2
///   + sum_{n=1}^{l-1} [(lambda(A-B)+nB)^2 - n^2] prod_{j<n} (...)^2
///   = (1/((l-1)!)^2) prod_{j<l} (lambda(A-B)+Bj)^2.
struct IdentitySides {
  Rational lhs;
  Rational rhs;
  bool equal = false;
};

inline IdentitySides lemma_identity_check(const JanowskiParams& p,
                                          const Rational& lambda, long l) {
  if (l < 1) throw InvalidIndex("identity index must be >= 1");
  const Rational base = lambda * (p.A() - p.B());
  Rational lhs = base * base;
  Rational prod_sq(1);
  for (long n = 1; n <= l - 1; ++n) {
    const Rational fac = (base + p.B() * (n - 1)) / Rational(n);
    prod_sq *= fac * fac;
    const Rational term = base + p.B() * n;
    lhs += (term * term - Rational(n) * Rational(n)) * prod_sq;
  }
  Rational rhs(1);
  BigInt fact(1);
  for (long j = 0; j < l; ++j) {
    const Rational fac = base + p.B() * j;
    rhs *= fac * fac;
    if (j >= 1) fact *= j;
  }
  rhs /= Rational(fact * fact);
  return {lhs, rhs, lhs == rhs};
}

/// Bound on |A_n| for the inverse F of f, routed through the negative-power
/// bound via A_n = (1/n) a_{n-1}(-n, f).
inline BoundValue bound_inverse(const JanowskiParams& p, long n) {
  if (n < 2) throw InvalidIndex("inverse coefficient index must be >= 2");
  BoundValue out = bound_neg_power(p, Rational(n), n - 1);
  out.value /= n;
  const long k = static_cast<long>(floor_rational(Rational(n) * p.delta()));
  if (k == n - 1)
    out.case_fired = "Thm3.2-iii";
  else if (k <= 1)
    out.case_fired = "Thm3.2-i";
  else
    out.case_fired = "Thm3.2-ii";
  return out;
}

/// Bound on |B_n| for the inverse G of the corresponding meromorphic
/// member; n is the subscript of B_n. Indices 1 and 2 have fixed bounds
/// A-B and (A-B)/2; higher indices dispatch on the delta cell.
inline BoundValue bound_mero_inverse(const JanowskiParams& p, long n) {
  if (n < 1) throw InvalidIndex("mero inverse index must be >= 1");
  if (n == 1) return {p.A() - p.B(), "Thm3.4-i", 0};
  if (n == 2) return {(p.A() - p.B()) / 2, "Thm3.4-i", 0};
  const long m = n - 1;  // B_n = B_{m+1}
  BoundValue out = bound_neg_power(p, Rational(m), m + 1);
  out.value /= m;
  const long k = static_cast<long>(floor_rational(Rational(m) * p.delta()));
  out.case_fired = (k == m - 1) ? "Thm3.4-iii" : "Thm3.4-ii";
  return out;
}

}  // namespace janowski
