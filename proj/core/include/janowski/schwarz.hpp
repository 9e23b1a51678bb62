#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "janowski/errors.hpp"
#include "janowski/rational.hpp"
#include "janowski/series.hpp"

namespace janowski {

/// Complex number with exact rational real and imaginary parts. Real-valued
/// specs (im = 0 everywhere) are the only ones admitted by the rational
/// series backend.
struct ComplexRational {
  Rational re;
  Rational im{0};

  bool is_real() const { return im == 0; }
  Rational norm_sq() const { return re * re + im * im; }
  Complex to_complex() const { return {to_double(re), to_double(im)}; }

  bool operator==(const ComplexRational&) const = default;
};

template <class T>
T to_scalar(const ComplexRational& c);

template <>
inline Rational to_scalar<Rational>(const ComplexRational& c) {
  if (!c.is_real())
    throw InvalidSchwarz("complex parameter in exact-rational backend");
  return c.re;
}

template <>
inline Complex to_scalar<Complex>(const ComplexRational& c) {
  return c.to_complex();
}

/// Finite description of an analytic self-map omega of the unit disk with
/// |omega| <= 1, unit-bounded by construction in every variant.
class SchwarzSpec {
 public:
  struct Constant {
    ComplexRational c;  // |c| <= 1
  };
  struct Monomial {
    int m = 1;  // omega(z) = z^m
  };
  struct Blaschke {
    ComplexRational a;  // |a| < 1; omega(z) = (z+a)/(1+conj(a) z)
  };
  struct Poly {
    std::vector<ComplexRational> coeffs;  // sum |c_k| <= 1
  };
  struct Product {
    std::vector<SchwarzSpec> factors;
  };
  using Variant = std::variant<Constant, Monomial, Blaschke, Poly, Product>;

  SchwarzSpec(Variant v) : v_(std::move(v)) { validate(); }

  const Variant& variant() const { return v_; }

  bool is_real() const {
    return std::visit(
        [](const auto& node) {
          using N = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<N, Constant>) return node.c.is_real();
          if constexpr (std::is_same_v<N, Monomial>) return true;
          if constexpr (std::is_same_v<N, Blaschke>) return node.a.is_real();
          if constexpr (std::is_same_v<N, Poly>) {
            for (const auto& c : node.coeffs)
              if (!c.is_real()) return false;
            return true;
          }
          if constexpr (std::is_same_v<N, Product>) {
            for (const auto& f : node.factors)
              if (!f.is_real()) return false;
            return true;
          }
        },
        v_);
  }

  /// Expands omega as a truncated series in the requested backend.
  template <class T>
  Series<T> omega(int order) const {
    return std::visit(
        [order](const auto& node) { return expand<T>(node, order); }, v_);
  }

  std::string describe() const {
    return std::visit(
        [](const auto& node) -> std::string {
          using N = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<N, Constant>)
            return "constant(" + str(node.c) + ")";
          if constexpr (std::is_same_v<N, Monomial>)
            return "monomial(" + std::to_string(node.m) + ")";
          if constexpr (std::is_same_v<N, Blaschke>)
            return "blaschke(" + str(node.a) + ")";
          if constexpr (std::is_same_v<N, Poly>) {
            std::string s = "poly(";
            for (std::size_t i = 0; i < node.coeffs.size(); ++i)
              s += (i ? "," : "") + str(node.coeffs[i]);
            return s + ")";
          }
          if constexpr (std::is_same_v<N, Product>) {
            std::string s = "product(";
            for (std::size_t i = 0; i < node.factors.size(); ++i)
              s += (i ? "*" : "") + node.factors[i].describe();
            return s + ")";
          }
        },
        v_);
  }

 private:
  static std::string str(const ComplexRational& c) {
    if (c.is_real()) return format_rational(c.re);
    return format_rational(c.re) + "," + format_rational(c.im);
  }

  // |c| <= bound, decided exactly on the rational data.
  static bool modulus_at_most(const ComplexRational& c, const Rational& bound) {
    return c.norm_sq() <= bound * bound;
  }

  void validate() const {
    std::visit(
        [](const auto& node) {
          using N = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<N, Constant>) {
            if (!modulus_at_most(node.c, 1))
              throw InvalidSchwarz("constant with |c| > 1");
          } else if constexpr (std::is_same_v<N, Monomial>) {
            if (node.m < 0) throw InvalidSchwarz("negative monomial degree");
          } else if constexpr (std::is_same_v<N, Blaschke>) {
            if (node.a.norm_sq() >= 1)
              throw InvalidSchwarz("blaschke point with |a| >= 1");
          } else if constexpr (std::is_same_v<N, Poly>) {
            // sum(|re|+|im|) <= 1 implies the modulus-sum bound and stays
            // decidable in exact arithmetic.
            Rational s(0);
            for (const auto& c : node.coeffs)
              s += abs(c.re) + abs(c.im);
            if (s > 1)
              throw InvalidSchwarz("poly coefficient sum exceeds 1");
          } else if constexpr (std::is_same_v<N, Product>) {
            if (node.factors.empty())
              throw InvalidSchwarz("empty product");
          }
        },
        v_);
  }

  template <class T>
  static Series<T> expand(const Constant& node, int order) {
    return Series<T>::constant(to_scalar<T>(node.c), order);
  }
  template <class T>
  static Series<T> expand(const Monomial& node, int order) {
    Series<T> s(order);
    if (node.m <= order) s[node.m] = scalar_traits<T>::one();
    return s;
  }
  template <class T>
  static Series<T> expand(const Blaschke& node, int order) {
    const T a = to_scalar<T>(node.a);
    Series<T> num = Series<T>::z(order);
    num[0] = a;
    Series<T> den = Series<T>::one(order);
    if (order >= 1) den[1] = scalar_traits<T>::conj(a);
    return mul(num, recip(den));
  }
  template <class T>
  static Series<T> expand(const Poly& node, int order) {
    Series<T> s(order);
    for (std::size_t k = 0; k < node.coeffs.size(); ++k)
      if (static_cast<int>(k) <= order)
        s[static_cast<int>(k)] = to_scalar<T>(node.coeffs[k]);
    return s;
  }
  template <class T>
  static Series<T> expand(const Product& node, int order) {
    Series<T> s = node.factors.front().omega<T>(order);
    for (std::size_t i = 1; i < node.factors.size(); ++i)
      s = mul(s, node.factors[i].omega<T>(order));
    return s;
  }

  Variant v_;
};

/// Deterministic spec sampler. Draws only from the constructively valid
/// families; real-valued parameters unless complex_allowed.
class SchwarzSampler {
 public:
  explicit SchwarzSampler(std::uint64_t seed, bool complex_allowed)
      : rng_(seed), complex_allowed_(complex_allowed) {}

  SchwarzSpec draw() { return draw_spec(true); }

 private:
  // Avoids std distributions so that streams are identical across
  // standard library implementations.
  std::uint64_t next(std::uint64_t n) { return rng_() % n; }

  Rational rational_in_unit() {
    const std::int64_t q = 1 + static_cast<std::int64_t>(next(16));
    const std::int64_t p =
        static_cast<std::int64_t>(next(2 * static_cast<std::uint64_t>(q) + 1)) - q;
    return Rational(p, q);
  }

  ComplexRational point_in_closed_disk() {
    ComplexRational c{rational_in_unit()};
    if (complex_allowed_ && next(2) == 0) {
      // |re| + |im| <= 1 keeps the modulus bound exact.
      c.im = rational_in_unit() * (1 - abs(c.re));
    }
    return c;
  }

  SchwarzSpec draw_spec(bool allow_product) {
    switch (next(allow_product ? 5 : 4)) {
      case 0:
        return SchwarzSpec(SchwarzSpec::Constant{point_in_closed_disk()});
      case 1:
        return SchwarzSpec(
            SchwarzSpec::Monomial{static_cast<int>(next(6))});
      case 2: {
        ComplexRational a = point_in_closed_disk();
        a.re *= Rational(15, 16);
        a.im *= Rational(15, 16);
        return SchwarzSpec(SchwarzSpec::Blaschke{a});
      }
      case 3: {
        const int deg = static_cast<int>(next(7));
        std::vector<ComplexRational> cs;
        Rational weight(0);
        for (int k = 0; k <= deg; ++k) {
          cs.push_back(point_in_closed_disk());
          weight += abs(cs.back().re) + abs(cs.back().im);
        }
        if (weight > 1) {
          for (auto& c : cs) {
            c.re /= weight;
            c.im /= weight;
          }
        }
        return SchwarzSpec(SchwarzSpec::Poly{std::move(cs)});
      }
      default: {
        std::vector<SchwarzSpec> factors;
        const std::size_t count = 2 + next(2);
        for (std::size_t i = 0; i < count; ++i)
          factors.push_back(draw_spec(false));
        return SchwarzSpec(SchwarzSpec::Product{std::move(factors)});
      }
    }
  }

  std::mt19937_64 rng_;
  bool complex_allowed_;
};

}  // namespace janowski
