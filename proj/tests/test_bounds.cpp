#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <janowski/bounds.hpp>
#include <janowski/inversion.hpp>

#include <random>

using namespace janowski;

namespace {

const JanowskiParams kKoebe{Rational(1), Rational(-1)};

Rational product_oracle(const JanowskiParams& p, const Rational& lambda,
                        long count) {
  Rational prod(1);
  for (long j = 0; j < count; ++j)
    prod *= (lambda * (p.A() - p.B()) + p.B() * j) / Rational(j + 1);
  return prod;
}

/// The three theorem cases coded literally, one branch each, as an
/// independent oracle for the unified cutoff dispatch.
Rational literal_bound(const JanowskiParams& p, const Rational& lambda,
                       long l) {
  const Rational delta = p.delta();
  if (lambda <= 1) return lambda * (p.A() - p.B()) / l;
  const BigInt fl_big = floor_rational(lambda);
  const long fl = static_cast<long>(fl_big);
  const Rational frac = lambda - Rational(fl_big);
  if (lambda * delta < frac) {
    // delta in J(lambda)
    if (l <= fl + 1) return product_oracle(p, lambda, l);
    return Rational(fl + 1, l) * product_oracle(p, lambda, fl + 1);
  }
  const long k = static_cast<long>(floor_rational(lambda * delta - frac));
  if (is_integer(lambda * (1 - delta))) {
    if (l <= fl - k + 1) return product_oracle(p, lambda, l);
    return Rational(fl - k, l) * product_oracle(p, lambda, fl - k);
  }
  if (l <= fl - k) return product_oracle(p, lambda, l);
  return Rational(fl - k, l) * product_oracle(p, lambda, fl - k);
}

Rational literal_inverse_bound(const JanowskiParams& p, long n) {
  const long k = static_cast<long>(floor_rational(Rational(n) * p.delta()));
  if (k == n - 1) return (p.A() - p.B()) / Rational(n - 1);
  if (k <= 1)
    return product_oracle(p, Rational(n), n - 1) / n;
  return Rational(n - k, n * (n - 1)) * product_oracle(p, Rational(n), n - k);
}

Rational literal_mero_bound(const JanowskiParams& p, long subscript) {
  if (subscript == 1) return p.A() - p.B();
  if (subscript == 2) return (p.A() - p.B()) / 2;
  const long n = subscript - 1;
  const long k = static_cast<long>(floor_rational(Rational(n) * p.delta()));
  if (k == n - 1) return (p.A() - p.B()) / Rational(n + 1);
  return Rational(n - k, n * (n + 1)) * product_oracle(p, Rational(n), n - k);
}

Rational random_rational(std::mt19937_64& rng, long lo_num, long hi_num,
                         long max_den) {
  const long q = 1 + static_cast<long>(rng() % max_den);
  const long span = hi_num - lo_num + 1;
  const long p = lo_num + static_cast<long>(rng() % span);
  return Rational(p, q);
}

}  // namespace

TEST_CASE("cutoff index") {
  CHECK(cutoff_M(Rational(5, 2), Rational(3, 10)) == 2);  // [lambda]-k
  CHECK(cutoff_M(Rational(2), Rational(0)) == 3);         // integer branch
  CHECK(cutoff_M(Rational(1), Rational(1, 2)) == 1);
  CHECK(cutoff_M(Rational(7, 2), Rational(1, 7)) == 4);   // edge of I_0
  CHECK_THROWS_AS(cutoff_M(Rational(0), Rational(0)), InvalidLambda);
  CHECK_THROWS_AS(cutoff_M(Rational(1), Rational(1)), InvalidParams);
}

TEST_CASE("partition cells are disjoint and cover [0,1)") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const Rational lambda = random_rational(rng, 1, 40, 7);
    if (lambda <= 1) continue;
    const Rational delta = random_rational(rng, 0, 48, 49);
    if (delta >= 1) continue;
    const PartitionCell cell = classify_cell(lambda, delta);
    const BigInt fl = floor_rational(lambda);
    const Rational frac = lambda - Rational(fl);
    if (cell.in_J) {
      CHECK(delta < frac / lambda);
      CHECK(cell.k == -1);
    } else {
      CHECK(cell.k >= 0);
      CHECK(cell.k < static_cast<long>(fl));
      CHECK(delta >= (frac + cell.k) / lambda);
      CHECK(delta < (frac + cell.k + 1) / lambda);
    }
  }
  // J(lambda) is empty for integer lambda
  for (long lam = 2; lam <= 6; ++lam)
    CHECK_FALSE(classify_cell(Rational(lam), Rational(0)).in_J);
}

TEST_CASE("negative-power bound worked values") {
  CHECK(bound_neg_power(kKoebe, Rational(1), 3).value == Rational(2, 3));

  // lambda=2, A=1, B=-1: 4, 6, 4, then the tail (3/4)*4 = 3
  const long expected[] = {4, 6, 4, 3};
  for (long l = 1; l <= 4; ++l) {
    const BoundValue b = bound_neg_power(kKoebe, Rational(2), l);
    CHECK(b.value == expected[l - 1]);
    CHECK(b.cutoff_M == 3);
  }
  CHECK(bound_neg_power(kKoebe, Rational(2), 4).case_fired == "Thm2.2-tail");

  // B=0: the product collapses to powers over factorials
  const JanowskiParams singh{Rational(1), Rational(0)};
  CHECK(bound_neg_power(singh, Rational(3), 2).value == Rational(9, 2));

  CHECK_THROWS_AS(bound_neg_power(kKoebe, Rational(-1), 1), InvalidLambda);
  CHECK_THROWS_AS(bound_neg_power(kKoebe, Rational(1), 0), InvalidIndex);
}

TEST_CASE("unified dispatch equals the literal theorem cases") {
  std::mt19937_64 rng(97);
  int checked = 0;
  while (checked < 2000) {
    const Rational lambda = random_rational(rng, 1, 64, 8);
    if (lambda <= 0) continue;
    const Rational delta = random_rational(rng, 0, 63, 64);
    if (delta >= 1) continue;
    const Rational B = random_rational(rng, -8, 0, 8) - Rational(1, 9);
    if (B < -1) continue;
    const Rational A = 1 - delta * (1 - B);
    const JanowskiParams p{A, B};
    REQUIRE(p.delta() == delta);
    const long top = static_cast<long>(floor_rational(lambda)) + 4;
    for (long l = 1; l <= top; ++l)
      CHECK(bound_neg_power(p, lambda, l).value == literal_bound(p, lambda, l));
    ++checked;
  }
}

TEST_CASE("dispatch at exact cell boundaries") {
  // place delta exactly on the integer-branch edges (lambda(1-delta) in N)
  for (long fl = 2; fl <= 5; ++fl) {
    const Rational lambda(2 * fl + 1, 2);  // half-integer lambda
    for (long k = 0; k < fl; ++k) {
      const Rational delta = (lambda - fl + k) / lambda;
      const Rational B(-1, 2);
      const Rational A = 1 - delta * (1 - B);
      const JanowskiParams p{A, B};
      CHECK(is_integer(lambda * (1 - p.delta())));
      CHECK(cutoff_M(lambda, p.delta()) == fl - k + 1);
      for (long l = 1; l <= fl + 3; ++l) {
        CHECK(bound_neg_power(p, lambda, l).value ==
              literal_bound(p, lambda, l));
      }
    }
  }
}

TEST_CASE("all product factors in the bound regime are positive") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 300; ++i) {
    const Rational lambda = random_rational(rng, 1, 48, 6);
    if (lambda <= 0) continue;
    const Rational B = random_rational(rng, -6, 5, 6);
    if (B < -1 || B >= 1) continue;
    const Rational A = random_rational(rng, -5, 6, 6);
    if (!(B < A && A <= 1)) continue;
    const JanowskiParams p{A, B};
    const long M = cutoff_M(lambda, p.delta());
    for (long j = 0; j < M; ++j)
      CHECK(lambda * (A - B) + B * j > 0);
  }
}

TEST_CASE("tail bound is strictly decreasing") {
  for (const Rational lambda : {Rational(2), Rational(7, 2), Rational(5)}) {
    const long M = cutoff_M(lambda, kKoebe.delta());
    Rational prev = bound_neg_power(kKoebe, lambda, M).value;
    for (long l = M + 1; l <= M + 6; ++l) {
      const Rational cur = bound_neg_power(kKoebe, lambda, l).value;
      CHECK(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("product identity: both sides agree exactly") {
  const auto trivial = lemma_identity_check(kKoebe, Rational(5, 3), 1);
  CHECK(trivial.lhs == trivial.rhs);
  CHECK(trivial.lhs == Rational(25, 9) * 4);

  // hand-evaluated l=2 instance
  const auto l2 = lemma_identity_check(kKoebe, Rational(1), 2);
  CHECK(l2.lhs == 4);
  CHECK(l2.rhs == 4);

  std::mt19937_64 rng(103);
  for (int i = 0; i < 100; ++i) {
    const Rational lambda = random_rational(rng, 1, 30, 6);
    if (lambda <= 0 || lambda > 5) continue;
    const Rational B = random_rational(rng, -6, 5, 6);
    if (B < -1 || B >= 1) continue;
    const Rational A = random_rational(rng, -5, 6, 6);
    if (!(B < A && A <= 1)) continue;
    const JanowskiParams p{A, B};
    const long l = 1 + static_cast<long>(rng() % 20);
    const auto sides = lemma_identity_check(p, lambda, l);
    CHECK(sides.equal);
  }
  CHECK_THROWS_AS(lemma_identity_check(kKoebe, Rational(1), 0), InvalidIndex);
}

TEST_CASE("sharpness: extremal attains the full-product bound") {
  std::mt19937_64 rng(107);
  int done = 0;
  while (done < 25) {
    const Rational lambda = random_rational(rng, 1, 24, 5);
    if (lambda <= 0) continue;
    const Rational B = random_rational(rng, -6, 5, 6);
    if (B < -1 || B >= 1) continue;
    const Rational A = random_rational(rng, -5, 6, 6);
    if (!(B < A && A <= 1)) continue;
    const JanowskiParams p{A, B};
    const long M = cutoff_M(lambda, p.delta());
    const auto ext = extremal<Rational>(p, static_cast<int>(M) + 2);
    const RationalSeries a =
        neg_power_coeffs(ext, lambda, static_cast<int>(M));
    for (long l = 1; l <= M; ++l)
      CHECK(abs(a[static_cast<int>(l)]) ==
            bound_neg_power(p, lambda, l).value);
    ++done;
  }
}

TEST_CASE("inverse bound worked values") {
  const long catalan[] = {2, 5, 14, 42, 132};
  for (long n = 2; n <= 6; ++n)
    CHECK(bound_inverse(kKoebe, n).value == catalan[n - 2]);

  // delta = 1/2, n=2: bound 1, attained by the inverse of z/(1-z)
  const JanowskiParams half{Rational(0), Rational(-1)};
  CHECK(bound_inverse(half, 2).value == 1);
  RationalSeries f(4);
  for (int k = 1; k <= 4; ++k) f[k] = 1;
  CHECK(revert(f)[2] == -1);

  // delta = 1/2 in I_2(5)
  const JanowskiParams mid{Rational(3, 10), Rational(-2, 5)};
  CHECK(mid.delta() == Rational(1, 2));
  const BoundValue b5 = bound_inverse(mid, 5);
  CHECK(b5.value == Rational(5859, 8000));  // 0.732375
  CHECK(b5.case_fired == "Thm3.2-ii");

  CHECK_THROWS_AS(bound_inverse(kKoebe, 1), InvalidIndex);
}

TEST_CASE("inverse bound equals the literal per-case formulas") {
  std::mt19937_64 rng(109);
  int done = 0;
  while (done < 300) {
    const Rational B = random_rational(rng, -12, 11, 12);
    if (B < -1 || B >= 1) continue;
    const Rational A = random_rational(rng, -11, 12, 12);
    if (!(B < A && A <= 1)) continue;
    const JanowskiParams p{A, B};
    for (long n = 2; n <= 9; ++n)
      CHECK(bound_inverse(p, n).value == literal_inverse_bound(p, n));
    ++done;
  }
}

TEST_CASE("bounds coincide at the remark boundary delta = 2/n") {
  for (long n = 4; n <= 8; ++n) {
    const Rational delta(2, n);
    const Rational B(-1, 3);
    const Rational A = 1 - delta * (1 - B);
    const JanowskiParams p{A, B};
    const Rational via_full = product_oracle(p, Rational(n), n - 1) / n;
    const Rational via_tail =
        Rational(n - 2, n * (n - 1)) * product_oracle(p, Rational(n), n - 2);
    CHECK(via_full == via_tail);
    CHECK(bound_inverse(p, n).value == via_full);
  }
}

TEST_CASE("meromorphic inverse bound worked values") {
  CHECK(bound_mero_inverse(kKoebe, 1).value == 2);
  CHECK(bound_mero_inverse(kKoebe, 2).value == 1);
  CHECK(bound_mero_inverse(kKoebe, 3).value == 2);  // attained by Koebe
  CHECK(bound_mero_inverse(kKoebe, 1).case_fired == "Thm3.4-i");
  CHECK(bound_mero_inverse(kKoebe, 3).case_fired == "Thm3.4-ii");

  // Catalan values for B_{n+1} in the starlike case
  const long catalan[] = {1, 2, 5, 14, 42};
  for (long n = 1; n <= 5; ++n)
    CHECK(bound_mero_inverse(kKoebe, n + 1).value == catalan[n - 1]);

  CHECK_THROWS_AS(bound_mero_inverse(kKoebe, 0), InvalidIndex);
}

TEST_CASE("mero bound equals the literal per-case formulas") {
  std::mt19937_64 rng(113);
  int done = 0;
  while (done < 300) {
    const Rational B = random_rational(rng, -12, 11, 12);
    if (B < -1 || B >= 1) continue;
    const Rational A = random_rational(rng, -11, 12, 12);
    if (!(B < A && A <= 1)) continue;
    const JanowskiParams p{A, B};
    for (long n = 1; n <= 9; ++n)
      CHECK(bound_mero_inverse(p, n).value == literal_mero_bound(p, n));
    ++done;
  }
}
