#include <doctest.h>

#include "lowrank/io.hpp"
#include "lowrank/realroots.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace lowrank;
using namespace lowrank::testing;

TEST_CASE("squarefree part") {
  const auto v = vars({"x"});
  CHECK(squarefree_part(P("x^2-2*x+1", v)) == P("x-1", v));
  CHECK(squarefree_part(P("x^2+1", v)) == P("x^2+1", v));
  CHECK(squarefree_part(P("x^3-x^2", v)) == P("x^2-x", v));
}

TEST_CASE("count real roots examples") {
  const auto v = vars({"x"});
  CHECK(count_real_roots(P("x^2+1", v)) == 0);
  CHECK(count_real_roots(P("x^3-6*x^2+11*x-6", v)) == 3);
  CHECK(count_real_roots(P("5", v)) == 0);
  CHECK(count_real_roots(P("x^4", v)) == 1);
  CHECK_THROWS(count_real_roots(Polynomial(v)));
}

TEST_CASE("roots in an interval") {
  const auto v = vars({"x"});
  const Polynomial f = P("x^3-6*x^2+11*x-6", v);
  CHECK(count_real_roots_between(f, make_rational(3, 2), make_rational(5, 2)) == 1);
  CHECK(count_real_roots_between(f, 0, 10) == 3);
  CHECK(count_real_roots_between(f, make_rational(7, 2), 10) == 0);
}

TEST_CASE("homogeneous nonzero real root") {
  const auto v = vars({"a", "b"});
  CHECK_FALSE(homogeneous_has_nonzero_real_root(P("a^2+b^2", v)));
  CHECK(homogeneous_has_nonzero_real_root(P("a*b", v)));
  CHECK(homogeneous_has_nonzero_real_root(P("a^2-2*b^2", v)));
  CHECK_THROWS(homogeneous_has_nonzero_real_root(P("a^2+b", v)));
}

TEST_CASE("bundled golden polynomials have no nonzero real root") {
  for (const char* name : {"golden_thm43_f0.txt", "golden_thm33_f0.txt"}) {
    CAPTURE(name);
    const std::string text = read_text_file(data_dir() / name);
    const auto v = std::string(name).find("43") != std::string::npos ? vars({"x34", "x44"}) : vars({"x43", "x44"});
    const Polynomial f = parse_polynomial(text, v);
    CHECK(f.is_homogeneous());
    CHECK(count_real_roots(dehomogenize(f)) == 0);
    CHECK_FALSE(homogeneous_has_nonzero_real_root(f));
  }
}

TEST_CASE("constructed polynomials: oracle, scaling, squarefree and interval consistency") {
  StreamRng rng(41, 0);
  const auto v = vars({"x"});
  for (int i = 0; i < 200; ++i) {
    const auto [f, expected] = constructed_polynomial(rng, v, 12);
    CHECK(count_real_roots(f) == expected);
    const Rational c = make_rational(BigInt(static_cast<long>(rng.uniform(1, 50))) * (i % 2 ? -1 : 1),
                                     BigInt(static_cast<long>(rng.uniform(1, 9))));
    CHECK(count_real_roots(f.scaled(c)) == expected);
    CHECK(count_real_roots(squarefree_part(f)) == expected);
    // Roots lie in [-12, 12]; split at a point that is not a root of anything
    // the constructor can produce.
    const Rational mid = make_rational(1, 7);
    CHECK(count_real_roots_between(f, -13, mid) + count_real_roots_between(f, mid, 13) == expected);
  }
}
