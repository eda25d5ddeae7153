#include <doctest.h>

#include "lowrank/io.hpp"
#include "lowrank/projections.hpp"
#include "support.hpp"

using namespace lowrank;
using namespace lowrank::testing;

namespace {

RationalVector vec(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

RationalVector random_vector(StreamRng& rng, std::size_t n) {
  RationalVector v(n);
  for (auto& x : v) x = static_cast<long>(rng.uniform(-5, 5));
  return v;
}

/// Straight 2^m enumeration with ranks of column submatrices.
bool complement_oracle(const std::vector<RationalVector>& vs) {
  const std::size_t n = vs.front().size();
  const std::size_t m = vs.size();
  auto spans = [&](const std::vector<RationalVector>& cols) {
    return !cols.empty() && rank(RationalMatrix::from_columns(cols)) == n;
  };
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<RationalVector> in, out;
    for (std::size_t i = 0; i < m; ++i) ((mask >> i) & 1U ? in : out).push_back(vs[i]);
    if (!spans(in) && !spans(out)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("projection matrix examples") {
  const RationalMatrix p = projection_matrix({vec({1, 0, 0}), vec({0, 1, 0})});
  RationalMatrix expected(3, 3);
  expected(0, 0) = 1;
  expected(1, 1) = 1;
  CHECK(p == expected);

  const RationalMatrix half = projection_matrix({vec({1, 1})});
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < 2; ++k) CHECK(half(i, k) == make_rational(1, 2));
  }

  const RationalVector u = vec({1, 0, -4, -3});
  const RationalVector w = vec({-17, 4, -2, -3});
  RationalMatrix sum(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t k = 0; k < 4; ++k) sum(i, k) = u[i] * u[k] / 26 + w[i] * w[k] / 318;
  }
  CHECK(projection_matrix({u, w}) == sum);

  CHECK_THROWS(projection_matrix({vec({1, 2}), vec({2, 4})}));
  CHECK_THROWS(Subspace({}));
  CHECK_THROWS(Subspace({vec({1, 2}), vec({1})}));
}

TEST_CASE("projector laws and basis invariance") {
  StreamRng rng(41, 0);
  int checked = 0;
  while (checked < 30) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 5));
    const std::size_t k = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n)));
    std::vector<RationalVector> basis;
    for (std::size_t i = 0; i < k; ++i) basis.push_back(random_vector(rng, n));
    if (rank(RationalMatrix::from_columns(basis)) < k) continue;
    ++checked;
    const Subspace s(basis);
    const RationalMatrix& p = s.projector();
    CHECK(s.dimension() == k);
    CHECK(s.ambient_dimension() == n);
    CHECK(p * p == p);
    CHECK(p.is_symmetric());
    CHECK(p.trace() == static_cast<long>(k));
    for (const auto& b : basis) CHECK(p * b == b);

    // Invertible integer change of basis: add multiples of the first vector.
    std::vector<RationalVector> other = basis;
    for (std::size_t i = 1; i < k; ++i) {
      const long c = static_cast<long>(rng.uniform(-3, 3));
      for (std::size_t j = 0; j < n; ++j) other[i][j] += c * basis[0][j];
    }
    other[0] = RationalVector(basis[0].size());
    for (std::size_t j = 0; j < n; ++j) other[0][j] = basis[0][j] * 3;
    CHECK(projection_matrix(other) == p);
  }
}

TEST_CASE("complement property examples") {
  CHECK(complement_property({vec({1, 0}), vec({0, 1}), vec({1, 1})}));
  CHECK_FALSE(complement_property({vec({1, 0}), vec({0, 1})}));
  CHECK_FALSE(complement_property({vec({1, 0}), vec({1, 0}), vec({0, 1})}));
  ComplementOptions small;
  small.max_vectors = 2;
  CHECK_THROWS(complement_property({vec({1, 0}), vec({0, 1}), vec({1, 1})}, small));
}

TEST_CASE("complement property against the brute-force oracle") {
  StreamRng rng(42, 0);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
    const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 9));
    std::vector<RationalVector> vs;
    for (std::size_t i = 0; i < m; ++i) {
      RationalVector v(n);
      for (auto& x : v) x = static_cast<long>(rng.uniform(-1, 1));
      vs.push_back(v);
    }
    const bool expected = complement_oracle(vs);
    CHECK(complement_property(vs) == expected);
    ComplementOptions serial;
    serial.execution = Execution::Serial;
    CHECK(complement_property(vs, serial) == expected);
    if (m <= 2 * n - 2) CHECK_FALSE(expected);
  }
}

TEST_CASE("projection ensembles") {
  const Subspace a({vec({1, 0, 0})});
  const Subspace b({vec({1, 1, 0}), vec({0, 0, 1})});
  const MeasurementEnsemble e = projection_ensemble({a, b}, 3);
  CHECK(e.n == 3);
  CHECK(e.r == 1);
  CHECK(e.symmetric);
  REQUIRE(e.size() == 2);
  CHECK(e.matrices[0] == a.projector());
  CHECK(e.matrices[1] == b.projector());
  CHECK_THROWS(projection_ensemble({a}, 4));
}

TEST_CASE("four subspaces of R^3 are never injective") {
  StreamRng rng(43, 0);
  for (int t = 0; t < 4; ++t) {
    std::vector<Subspace> subspaces;
    while (subspaces.size() < 4) {
      const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 2));
      std::vector<RationalVector> basis;
      for (std::size_t i = 0; i < k; ++i) basis.push_back(random_vector(rng, 3));
      if (rank(RationalMatrix::from_columns(basis)) == k) subspaces.emplace_back(basis);
    }
    CHECK(certify_phase_retrieval(subspaces).verdict != Verdict::Injective);
  }
}

TEST_CASE("bundled subspaces certify") {
  const SubspaceFile f = subspaces_from_json(parse_json(read_text_file(data_dir() / "thm43_subspaces.json")));
  REQUIRE(f.subspaces.size() == 6);
  for (const auto& s : f.subspaces) {
    REQUIRE(s.dimension() == 2);
    CHECK(dot(s.basis()[0], s.basis()[1]) == 0);
  }
  const Certificate c = certify_phase_retrieval(f.subspaces);
  CHECK(c.verdict == Verdict::Injective);
  REQUIRE(c.f0.has_value());
  CHECK(c.f0->degree() == 10);
}
