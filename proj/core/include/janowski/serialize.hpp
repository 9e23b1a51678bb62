#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "janowski/errors.hpp"
#include "janowski/schwarz.hpp"
#include "janowski/series.hpp"
#include "janowski/starlike.hpp"

namespace janowski {

using json = nlohmann::json;

inline std::string coeff_string(const Rational& x) { return format_rational(x); }
inline std::string coeff_string(const Complex& x) {
  return scalar_traits<Complex>::str(x);
}

inline Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    return {std::stod(text), 0.0};
  return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

template <class T>
json series_to_json(const Series<T>& s) {
  json coeffs = json::array();
  for (const T& c : s.coeffs()) coeffs.push_back(coeff_string(c));
  return {{"backend", scalar_traits<T>::backend_name},
          {"order", s.order()},
          {"coeffs", coeffs}};
}

/// Runtime-typed series used at serialization and CLI boundaries; the two
/// backends never mix inside one operation.
class DynSeries {
 public:
  DynSeries(RationalSeries s) : v_(std::move(s)) {}
  DynSeries(ComplexSeries s) : v_(std::move(s)) {}

  bool is_exact() const { return std::holds_alternative<RationalSeries>(v_); }
  const RationalSeries& rational() const {
    return std::get<RationalSeries>(v_);
  }
  const ComplexSeries& complex() const { return std::get<ComplexSeries>(v_); }

  int order() const {
    return is_exact() ? rational().order() : complex().order();
  }

  friend DynSeries operator+(const DynSeries& a, const DynSeries& b) {
    return a.binary(b, [](const auto& x, const auto& y) { return x + y; });
  }
  friend DynSeries operator*(const DynSeries& a, const DynSeries& b) {
    return a.binary(b, [](const auto& x, const auto& y) { return mul(x, y); });
  }

  json to_json() const {
    return is_exact() ? series_to_json(rational()) : series_to_json(complex());
  }

  static DynSeries from_json(const json& j) {
    const std::string backend = j.at("backend").get<std::string>();
    const int order = j.at("order").get<int>();
    const auto& coeffs = j.at("coeffs");
    if (static_cast<int>(coeffs.size()) != order + 1)
      throw ParseError("coefficient count does not match order");
    if (backend == "rational") {
      RationalSeries s(order);
      for (int k = 0; k <= order; ++k)
        s[k] = parse_rational(coeffs[k].get<std::string>());
      return DynSeries(std::move(s));
    }
    if (backend == "complex") {
      ComplexSeries s(order);
      for (int k = 0; k <= order; ++k)
        s[k] = parse_complex(coeffs[k].get<std::string>());
      return DynSeries(std::move(s));
    }
    throw ParseError("unknown backend '" + backend + "'");
  }

 private:
  template <class F>
  DynSeries binary(const DynSeries& rhs, F&& op) const {
    if (is_exact() != rhs.is_exact()) throw BackendMismatch();
    if (is_exact()) return DynSeries(op(rational(), rhs.rational()));
    return DynSeries(op(complex(), rhs.complex()));
  }

  std::variant<RationalSeries, ComplexSeries> v_;
};

inline json complex_rational_to_json(const ComplexRational& c) {
  if (c.is_real()) return format_rational(c.re);
  return format_rational(c.re) + "," + format_rational(c.im);
}

inline ComplexRational complex_rational_from_json(const json& j) {
  const std::string text = j.get<std::string>();
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_rational(text)};
  return {parse_rational(text.substr(0, comma)),
          parse_rational(text.substr(comma + 1))};
}

inline json schwarz_to_json(const SchwarzSpec& spec) {
  return std::visit(
      [](const auto& node) -> json {
        using N = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<N, SchwarzSpec::Constant>)
          return {{"variant", "constant"},
                  {"c", complex_rational_to_json(node.c)}};
        if constexpr (std::is_same_v<N, SchwarzSpec::Monomial>)
          return {{"variant", "monomial"}, {"m", node.m}};
        if constexpr (std::is_same_v<N, SchwarzSpec::Blaschke>)
          return {{"variant", "blaschke"},
                  {"a", complex_rational_to_json(node.a)}};
        if constexpr (std::is_same_v<N, SchwarzSpec::Poly>) {
          json coeffs = json::array();
          for (const auto& c : node.coeffs)
            coeffs.push_back(complex_rational_to_json(c));
          return {{"variant", "poly"}, {"coeffs", coeffs}};
        }
        if constexpr (std::is_same_v<N, SchwarzSpec::Product>) {
          json factors = json::array();
          for (const auto& f : node.factors)
            factors.push_back(schwarz_to_json(f));
          return {{"variant", "product"}, {"factors", factors}};
        }
      },
      spec.variant());
}

inline SchwarzSpec schwarz_from_json(const json& j) {
  const std::string variant = j.at("variant").get<std::string>();
  if (variant == "constant")
    return SchwarzSpec(
        SchwarzSpec::Constant{complex_rational_from_json(j.at("c"))});
  if (variant == "monomial")
    return SchwarzSpec(SchwarzSpec::Monomial{j.at("m").get<int>()});
  if (variant == "blaschke")
    return SchwarzSpec(
        SchwarzSpec::Blaschke{complex_rational_from_json(j.at("a"))});
  if (variant == "poly") {
    std::vector<ComplexRational> coeffs;
    for (const auto& c : j.at("coeffs"))
      coeffs.push_back(complex_rational_from_json(c));
    return SchwarzSpec(SchwarzSpec::Poly{std::move(coeffs)});
  }
  if (variant == "product") {
    std::vector<SchwarzSpec> factors;
    for (const auto& f : j.at("factors"))
      factors.push_back(schwarz_from_json(f));
    return SchwarzSpec(SchwarzSpec::Product{std::move(factors)});
  }
  throw ParseError("unknown schwarz variant '" + variant + "'");
}

template <class T>
json starlike_to_json(const StarlikeFunction<T>& f) {
  json j = series_to_json(f.series);
  j["A"] = format_rational(f.params.A());
  j["B"] = format_rational(f.params.B());
  j["provenance"] = f.provenance;
  if (f.spec) j["schwarz"] = schwarz_to_json(*f.spec);
  return j;
}

}  // namespace janowski
