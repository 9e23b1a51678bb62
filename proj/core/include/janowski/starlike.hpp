#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "janowski/errors.hpp"
#include "janowski/params.hpp"
#include "janowski/schwarz.hpp"
#include "janowski/series.hpp"

namespace janowski {

/// A class member f with f(0) = 0, f'(0) = 1, together with the parameters
/// and the construction it came from.
template <class T>
struct StarlikeFunction {
  JanowskiParams params;
  Series<T> series;
  std::string provenance;
  std::optional<SchwarzSpec> spec;
};

template <class T>
T param_scalar(const Rational& x) {
  if constexpr (scalar_traits<T>::exact)
    return x;
  else
    return Complex(to_double(x), 0.0);
}

/// Solves zf'/f = (1+Az omega)/(1+Bz omega) for f, as
/// f = z exp(int (A-B) omega / (1 + Bt omega(t)) dt).
template <class T>
StarlikeFunction<T> from_schwarz(const SchwarzSpec& spec,
                                 const JanowskiParams& p, int order) {
  if (order < 1) throw InvalidIndex("order must be >= 1");
  const T A = param_scalar<T>(p.A());
  const T B = param_scalar<T>(p.B());
  Series<T> inner(std::max(order - 1, 0));
  if (order >= 2) {
    const Series<T> w = spec.omega<T>(order - 2);
    Series<T> den = shift_up(scale(w, B));  // 1 + Bt*omega(t), order-1
    den[0] += scalar_traits<T>::one();
    const Series<T> integrand =
        mul(scale(w, T(A - B)), recip(den.truncated(order - 2)));
    inner = integrate(integrand);
  }
  Series<T> f = shift_up(exp_zero(inner));
  return {p, std::move(f), "schwarz:" + spec.describe(), spec};
}

/// The extremal member: z e^{Az} when B = 0, z(1+Bz)^{A/B-1} otherwise.
template <class T>
StarlikeFunction<T> extremal(const JanowskiParams& p, int order) {
  if (order < 1) throw InvalidIndex("order must be >= 1");
  const T A = param_scalar<T>(p.A());
  const T B = param_scalar<T>(p.B());
  Series<T> body(std::max(order - 1, 0));
  if (p.B() == 0) {
    Series<T> az(order - 1);
    if (order >= 2) az[1] = A;
    body = exp_zero(az);
  } else {
    Series<T> u = Series<T>::one(order - 1);
    if (order >= 2) u[1] = B;
    const T mu = A / B - scalar_traits<T>::one();
    body = pow_real<T>(u, mu);
  }
  return {p, shift_up(body), "extremal", std::nullopt};
}

/// Root transform of the extremal: (k(z^n))^{1/n}; only exponents
/// congruent to 1 mod n carry nonzero coefficients.
template <class T>
StarlikeFunction<T> extremal_root(const JanowskiParams& p, int n, int order) {
  if (n <= 0) throw InvalidIndex("root index must be >= 1");
  if (order < 1) throw InvalidIndex("order must be >= 1");
  if (n == 1) return extremal<T>(p, order);
  const int m = std::max(order - 1, 0);
  const Series<T> body = shift_down(extremal<T>(p, m + 1).series);
  Series<T> zn(m);
  if (n <= m) zn[n] = scalar_traits<T>::one();
  Series<T> composed = compose(body, zn);
  T mu;
  if constexpr (scalar_traits<T>::exact)
    mu = Rational(1, n);
  else
    mu = Complex(1.0 / n, 0.0);
  return {p, shift_up(pow_real<T>(composed, mu)),
          "extremal_root(" + std::to_string(n) + ")", std::nullopt};
}

/// Recovers omega from zf'/f = (1+Az omega)/(1+Bz omega); the result has
/// order two lower than f.
template <class T>
Series<T> recover_omega(const StarlikeFunction<T>& f) {
  const int n = f.series.order();
  if (n < 2) throw TruncationTooShort("need order >= 2 to recover omega");
  const T A = param_scalar<T>(f.params.A());
  const T B = param_scalar<T>(f.params.B());
  const Series<T> u = shift_down(f.series);                // f/z
  const Series<T> pser = mul(differentiate(f.series), recip(u));  // zf'/f
  Series<T> num = pser;
  num[0] -= scalar_traits<T>::one();
  Series<T> den = scale(pser, T(-B));
  den[0] += A;
  return shift_down(mul(num, recip(den)));
}

/// Deterministic sampler over the constructive spec families.
template <class T>
StarlikeFunction<T> sample(const JanowskiParams& p, std::uint64_t seed,
                           int order) {
  SchwarzSampler sampler(seed, /*complex_allowed=*/!scalar_traits<T>::exact);
  return from_schwarz<T>(sampler.draw(), p, order);
}

/// Heuristic membership diagnostic for arbitrary series: recovers omega and
/// reports its largest modulus on the circle r = 0.99 (256 angles). Values
/// materially above 1 indicate the series is not a class member; truncation
/// makes the check approximate by nature.
template <class T>
double omega_boundary_max(const StarlikeFunction<T>& f) {
  const Series<T> w = recover_omega(f);
  ComplexSeries wc = [&] {
    if constexpr (scalar_traits<T>::exact)
      return to_complex(w);
    else
      return w;
  }();
  double worst = 0.0;
  constexpr int kAngles = 256;
  constexpr double kRadius = 0.99;
  for (int i = 0; i < kAngles; ++i) {
    const double theta = 2.0 * 3.14159265358979323846 * i / kAngles;
    const Complex zv = std::polar(kRadius, theta);
    worst = std::max(worst, std::abs(evaluate(wc, zv)));
  }
  return worst;
}

}  // namespace janowski
