#pragma once

#include <string>
#include <vector>

#include "lowrank/exactnum.hpp"
#include "lowrank/poly.hpp"
#include "lowrank/random.hpp"

namespace lowrank::testing {

inline VarSetPtr vars(std::vector<std::string> names) { return make_variables(std::move(names)); }

inline Polynomial P(const std::string& text, const VarSetPtr& v, MonomialOrder order = MonomialOrder::grevlex()) {
  return parse_polynomial(text, v, order);
}

/// Random polynomial with at most `terms` terms, total degree <= max_deg and
/// integer coefficients in [-9, 9].
inline Polynomial random_polynomial(StreamRng& rng, const VarSetPtr& v, unsigned max_deg, int terms,
                                    MonomialOrder order = MonomialOrder::grevlex()) {
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    std::vector<Monomial::Exponent> e(v->size(), 0);
    unsigned budget = static_cast<unsigned>(rng.uniform(0, max_deg));
    for (unsigned k = 0; k < budget; ++k) ++e[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(v->size()) - 1))];
    out.push_back({Rational(static_cast<long>(rng.uniform(-9, 9))), Monomial(std::move(e))});
  }
  return Polynomial::from_terms(v, std::move(out), order);
}

inline std::vector<Rational> random_point(StreamRng& rng, std::size_t n) {
  std::vector<Rational> p(n);
  for (auto& x : p) {
    x = make_rational(BigInt(static_cast<long>(rng.uniform(-20, 20))), BigInt(static_cast<long>(rng.uniform(1, 7))));
  }
  return p;
}

}  // namespace lowrank::testing
