#include <random>

#include "corelate/exactnum.hpp"
#include "support.hpp"

using namespace corelate;

TEST_CASE("ext_gcd examples") {
  auto r = ext_gcd(0, 5);
  CHECK(r.g == 5);
  CHECK(r.u == 0);
  CHECK(r.v == 1);
  r = ext_gcd(7, 0);
  CHECK(r.g == 7);
  CHECK(r.u == 1);
  CHECK(r.v == 0);
  r = ext_gcd(4, 6);
  CHECK(r.g == 2);
  CHECK(r.u * 4 + r.v * 6 == 2);
  r = ext_gcd(-4, 6);
  CHECK(r.g == 2);
  CHECK(r.u * -4 + r.v * 6 == 2);
  CHECK(ext_gcd(0, 0).g == 0);
}

TEST_CASE("ext_gcd Bezout on random pairs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-1'000'000, 1'000'000);
  for (int i = 0; i < 10'000; ++i) {
    BigInt a = d(rng), b = d(rng);
    auto r = ext_gcd(a, b);
    CHECK(r.g >= 0);
    CHECK(r.u * a + r.v * b == r.g);
    if (r.g != 0) {
      CHECK(a % r.g == 0);
      CHECK(b % r.g == 0);
    }
    BigInt ref;
    mpz_gcd(ref.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    CHECK(r.g == ref);
  }
}

TEST_CASE("floor_div rounds toward minus infinity") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, -2) == -4);
  CHECK(floor_div(-6, 3) == -2);
}

TEST_CASE("scalar_inv") {
  for (const Ring& r : {Ring::gf(2), Ring::gf(7), Ring::rational(), Ring::integer()}) {
    CHECK(scalar_inv(r.one(), r) == r.one());
  }
  Ring g7 = Ring::gf(7);
  CHECK(scalar_inv(g7.from_int(3), g7) == g7.from_int(5));
  Ring z = Ring::integer();
  CHECK_KIND(scalar_inv(z.from_int(2), z), ErrorKind::NotAUnit);
  CHECK(scalar_inv(z.from_int(-1), z) == z.from_int(-1));
  CHECK_KIND(scalar_inv(g7.zero(), g7), ErrorKind::ZeroInverse);
  CHECK_KIND(scalar_inv(z.zero(), z), ErrorKind::ZeroInverse);
  Ring q = Ring::rational();
  CHECK(q.format(scalar_inv(q.parse("-2/3"), q)) == "-3/2");
}

TEST_CASE("scalar_inv is an involution and inverts") {
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 13ul}) {
    Ring r = Ring::gf(p);
    for (unsigned long x = 1; x < p; ++x) {
      Scalar s = r.from_int(static_cast<long>(x));
      Scalar i = scalar_inv(s, r);
      CHECK(r.mul(s, i) == r.one());
      CHECK(scalar_inv(i, r) == s);
    }
  }
  Ring q = Ring::rational();
  for (long n = -5; n <= 5; ++n) {
    for (long d = 1; d <= 5; ++d) {
      if (n == 0) continue;
      Scalar s = q.from_fraction(n, d);
      CHECK(q.mul(s, scalar_inv(s, q)) == q.one());
      CHECK(scalar_inv(scalar_inv(s, q), q) == s);
    }
  }
}

TEST_CASE("rational_normalize") {
  Ring q = Ring::rational();
  CHECK(q.format(rational_normalize(2, -4)) == "-1/2");
  CHECK(rational_normalize(0, 7).value().get_den() == 1);
  CHECK(rational_normalize(0, 7).is_zero());
  CHECK(q.format(rational_normalize(6, 4)) == "3/2");
  CHECK_KIND(rational_normalize(1, 0), ErrorKind::ZeroDenominator);
}

TEST_CASE("rational_normalize respects equality of fractions") {
  for (long n = -6; n <= 6; ++n) {
    for (long d = -6; d <= 6; ++d) {
      if (d == 0) continue;
      Scalar s = rational_normalize(n, d);
      CHECK(s.value().get_den() > 0);
      CHECK(rational_normalize(s.value().get_num(), s.value().get_den()) == s);
      for (long n2 = -6; n2 <= 6; ++n2) {
        for (long d2 = 1; d2 <= 6; ++d2) {
          CHECK((n * d2 == n2 * d) == (rational_normalize(n2, d2) == s));
        }
      }
    }
  }
}

TEST_CASE("rings") {
  CHECK_KIND(Ring::gf(4), ErrorKind::InvalidLiteral);
  CHECK_KIND(Ring::gf(1), ErrorKind::InvalidLiteral);
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
  CHECK(Ring::from_tag("gf5") == Ring::gf(5));
  CHECK(Ring::from_tag("Q") == Ring::rational());
  CHECK(Ring::from_tag("z") == Ring::integer());
  CHECK_FALSE(Ring::gf(5) == Ring::gf(7));
  CHECK(Ring::gf(5).tag() == "gf5");
  CHECK(Ring::integer().display_name() == "Z");

  Ring g5 = Ring::gf(5);
  CHECK(g5.format(g5.parse("7")) == "2");
  CHECK(g5.format(g5.parse("-1")) == "4");
  CHECK(g5.format(g5.parse("1/2")) == "3");
  CHECK_KIND(g5.parse("1/5"), ErrorKind::InvalidLiteral);

  Ring z = Ring::integer();
  CHECK(z.format(z.parse("-12")) == "-12");
  CHECK(z.format(z.parse("6/3")) == "2");
  CHECK_KIND(z.parse("1/2"), ErrorKind::InvalidLiteral);
  CHECK_KIND(z.parse("1/0"), ErrorKind::ZeroDenominator);
  CHECK_KIND(z.parse("abc"), ErrorKind::InvalidLiteral);
  CHECK(z.is_unit(z.from_int(-1)));
  CHECK_FALSE(z.is_unit(z.from_int(2)));

  // No machine-width overflow.
  Scalar big = z.parse("123456789012345678901234567890");
  CHECK(z.format(z.mul(big, big)) == "15241578753238836750495351562536198787501905199875019052100");
}
