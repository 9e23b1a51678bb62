#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <janowski/serialize.hpp>

using namespace janowski;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-1.5") == Rational(-3, 2));
  CHECK(format_rational(Rational(6, 8)) == "3/4");
  CHECK(format_rational(Rational(-2)) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("series round-trips through JSON") {
  RationalSeries s(3);
  s[0] = Rational(1);
  s[1] = Rational(-4, 3);
  s[3] = Rational(7, 2);
  const json j = series_to_json(s);
  CHECK(j["order"] == 3);
  CHECK(j["backend"] == "rational");
  const DynSeries round = DynSeries::from_json(j);
  CHECK(round.is_exact());
  CHECK(round.rational() == s);

  ComplexSeries c(2);
  c[0] = {1.5, -0.25};
  c[2] = {0.0, 2.0};
  const DynSeries round_c = DynSeries::from_json(series_to_json(c));
  CHECK_FALSE(round_c.is_exact());
  CHECK(round_c.complex() == c);
}

TEST_CASE("mixed backends are rejected at the dynamic boundary") {
  const DynSeries r(RationalSeries::one(4));
  const DynSeries c(ComplexSeries::one(4));
  CHECK_THROWS_AS(r + c, BackendMismatch);
  CHECK_THROWS_AS(r * c, BackendMismatch);
  CHECK_NOTHROW(r + r);
  CHECK_NOTHROW(c * c);
}

TEST_CASE("schwarz specs round-trip through JSON") {
  const std::vector<SchwarzSpec> specs = {
      SchwarzSpec(SchwarzSpec::Constant{{Rational(1, 2), Rational(1, 4)}}),
      SchwarzSpec(SchwarzSpec::Monomial{4}),
      SchwarzSpec(SchwarzSpec::Blaschke{{Rational(-1, 3)}}),
      SchwarzSpec(SchwarzSpec::Poly{{{Rational(1, 2)}, {Rational(1, 4)}}}),
      SchwarzSpec(SchwarzSpec::Product{
          {SchwarzSpec(SchwarzSpec::Monomial{1}),
           SchwarzSpec(SchwarzSpec::Constant{{Rational(1, 2)}})}}),
  };
  for (const auto& spec : specs) {
    const SchwarzSpec round = schwarz_from_json(schwarz_to_json(spec));
    CHECK(round.describe() == spec.describe());
    CHECK(round.omega<Complex>(8).coeffs() == spec.omega<Complex>(8).coeffs());
  }
}

TEST_CASE("malformed schwarz JSON is rejected") {
  CHECK_THROWS_AS(schwarz_from_json(json{{"variant", "nope"}}), ParseError);
  CHECK_THROWS_AS(schwarz_from_json(json{{"variant", "constant"}, {"c", "2"}}),
                  InvalidSchwarz);
}

TEST_CASE("starlike export carries parameters and provenance") {
  const JanowskiParams p(Rational(1), Rational(-1));
  const auto f = sample<Rational>(p, 5, 8);
  const json j = starlike_to_json(f);
  CHECK(j["A"] == "1");
  CHECK(j["B"] == "-1");
  CHECK(j["order"] == 8);
  CHECK(j.contains("schwarz"));
  const SchwarzSpec round = schwarz_from_json(j["schwarz"]);
  CHECK(round.describe() == f.spec->describe());
}
