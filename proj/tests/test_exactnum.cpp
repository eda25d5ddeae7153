#include <doctest.h>

#include "lowrank/errors.hpp"
#include "lowrank/exactnum.hpp"
#include "lowrank/random.hpp"

using namespace lowrank;

TEST_CASE("factorial small values") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
}

TEST_CASE("factorial matches repeated multiplication") {
  BigInt acc = 1;
  for (unsigned n = 1; n <= 100; ++n) {
    acc *= n;
    CHECK(factorial(n) == acc);
    CHECK(factorial(n) == factorial(n - 1) * n);
  }
  CHECK(to_string(factorial(20)) == "2432902008176640000");
}

TEST_CASE("factorial has more than 1000 digits at 500") {
  CHECK(to_string(factorial(500)).size() > 1000);
}

TEST_CASE("p2_valuation") {
  CHECK(p2_valuation(12) == 2);
  CHECK(p2_valuation(1024) == 10);
  CHECK(p2_valuation(20) == 2);
  CHECK_THROWS_AS(p2_valuation(0), std::domain_error);
  CHECK_THROWS_AS(p2_valuation(-8), std::domain_error);

  StreamRng rng(11, 0);
  for (int i = 0; i < 200; ++i) {
    const unsigned k = static_cast<unsigned>(rng.uniform(0, 64));
    BigInt odd = BigInt(static_cast<long>(rng.uniform(0, 1'000'000))) * 2 + 1;
    BigInt v = odd;
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), k);
    // Trial-division oracle.
    unsigned count = 0;
    BigInt w = v;
    while (w % 2 == 0) {
      w /= 2;
      ++count;
    }
    CHECK(count == k);
    CHECK(p2_valuation(v) == k);
  }
}

TEST_CASE("gcd") {
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(0, 7) == 7);
  CHECK(gcd(-4, 6) == 2);
  CHECK(gcd(0, 0) == 0);

  StreamRng rng(12, 0);
  for (int i = 0; i < 200; ++i) {
    const BigInt a = static_cast<long>(rng.uniform(-100000, 100000));
    const BigInt b = static_cast<long>(rng.uniform(-100000, 100000));
    const BigInt g = gcd(a, b);
    CHECK(g >= 0);
    if (g == 0) continue;
    CHECK(a % g == 0);
    CHECK(b % g == 0);
    CHECK(gcd(a / g, b / g) == 1);
  }
}

TEST_CASE("rationals are canonical") {
  const Rational q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(to_string(q) == "-3/2");
  CHECK(to_string(make_rational(8, 4)) == "2");
  CHECK_THROWS(make_rational(1, 0));
}

TEST_CASE("parsing numbers") {
  CHECK(parse_bigint("-123") == -123);
  CHECK(parse_bigint("+7") == 7);
  CHECK(parse_rational("10/4") == make_rational(5, 2));
  CHECK(parse_rational("-3") == -3);

  SUBCASE("errors name the token") {
    try {
      parse_rational("1/x");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.token() == "x");
    }
    CHECK_THROWS_AS(parse_bigint(""), ParseError);
    CHECK_THROWS_AS(parse_bigint("12a"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  }
}

TEST_CASE("big values round trip") {
  const std::string digits(1200, '7');
  CHECK(to_string(parse_bigint(digits)) == digits);
  CHECK(to_string(parse_rational("-" + digits + "/2")) == "-" + digits + "/2");
}
