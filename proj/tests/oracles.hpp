#pragma once

// Independent reference computations used only by tests.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "lowrank/exactnum.hpp"
#include "lowrank/poly.hpp"
#include "lowrank/random.hpp"

namespace lowrank::testing {

/// Determinant by plain Gaussian elimination with rational pivots.
inline Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

/// Resultant of f, g with respect to variable 0 of a two-variable ring,
/// by evaluating the Sylvester determinant at integer values of variable 1
/// and interpolating.
inline Polynomial resultant_in_first(const Polynomial& f, const Polynomial& g) {
  const auto& v = f.variables();
  const int df = f.degree_in(0);
  const int dg = g.degree_in(0);
  const int points = f.degree() * g.degree() + 1;
  auto coeffs_at = [&](const Polynomial& p, int d, const Rational& y0) {
    std::vector<Rational> c(static_cast<std::size_t>(d + 1));
    for (const auto& t : p.terms()) {
      Rational term = t.coef;
      for (unsigned k = 0; k < t.mono[1]; ++k) term *= y0;
      c[t.mono[0]] += term;
    }
    return c;
  };
  std::vector<Rational> xs, ys;
  for (int i = 0; i < points; ++i) {
    const Rational y0 = i;
    const auto a = coeffs_at(f, df, y0);
    const auto b = coeffs_at(g, dg, y0);
    const auto size = static_cast<std::size_t>(df + dg);
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
    for (int r = 0; r < dg; ++r) {
      for (int k = 0; k <= df; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + df - k)] = a[static_cast<std::size_t>(k)];
    }
    for (int r = 0; r < df; ++r) {
      for (int k = 0; k <= dg; ++k) {
        s[static_cast<std::size_t>(dg + r)][static_cast<std::size_t>(r + dg - k)] = b[static_cast<std::size_t>(k)];
      }
    }
    xs.push_back(y0);
    ys.push_back(determinant(std::move(s)));
  }
  // Newton divided differences.
  std::vector<Rational> coef = ys;
  for (std::size_t j = 1; j < xs.size(); ++j) {
    for (std::size_t i = xs.size() - 1; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
  }
  const Polynomial y = Polynomial::variable(v, 1);
  Polynomial out = Polynomial::constant(v, coef.back());
  for (std::size_t i = xs.size() - 1; i-- > 0;) {
    out = out * (y - Polynomial::constant(v, xs[i])) + Polynomial::constant(v, coef[i]);
  }
  return out;
}

/// Product of random distinct linear factors (a x - b), random repeated
/// factors and random quadratics with negative discriminant. Returns the
/// polynomial and its number of distinct real roots.
inline std::pair<Polynomial, std::size_t> constructed_polynomial(StreamRng& rng, const VarSetPtr& v,
                                                                  int max_degree) {
  const Polynomial x = Polynomial::variable(v, 0);
  Polynomial f = Polynomial::constant(v, static_cast<long>(rng.uniform(1, 5)) * (rng.uniform(0, 1) ? 1 : -1));
  std::vector<Rational> roots;
  int degree = 0;
  const int target = static_cast<int>(rng.uniform(1, max_degree));
  while (degree < target) {
    const auto kind = rng.uniform(0, 2);
    if (kind == 2 && degree + 2 <= target) {
      // x^2 + p x + q with p^2 < 4q.
      const long p = static_cast<long>(rng.uniform(-6, 6));
      const long q = p * p / 4 + static_cast<long>(rng.uniform(1, 9));
      f = f * (x * x + Polynomial::constant(v, p) * x + Polynomial::constant(v, q));
      degree += 2;
      continue;
    }
    Rational root = make_rational(BigInt(static_cast<long>(rng.uniform(-12, 12))),
                                  BigInt(static_cast<long>(rng.uniform(1, 4))));
    if (kind == 1 && !roots.empty()) root = roots[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(roots.size()) - 1))];
    if (std::find(roots.begin(), roots.end(), root) == roots.end()) roots.push_back(root);
    f = f * (x - Polynomial::constant(v, root));
    degree += 1;
  }
  return {f, roots.size()};
}

}  // namespace lowrank::testing
