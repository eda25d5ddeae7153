#pragma once

#include <cstddef>
#include <vector>

#include "lowrank/poly.hpp"

namespace lowrank {

// "Univariate" below means a polynomial in which at most one variable of its
// VariableSet occurs; results live in the same VariableSet.

/// p0 = squarefree part of f, p1 = p0', p_{i+1} = -rem(p_{i-1}, p_i) up to a
/// positive factor, ending at a nonzero constant.
struct SturmSequence {
  std::vector<Polynomial> polys;
};

/// f / gcd(f, f'), primitive. Throws std::domain_error for zero.
Polynomial squarefree_part(const Polynomial& f);

SturmSequence sturm_sequence(const Polynomial& f);

/// Sign variations of the sequence at a finite point.
std::size_t sign_variations(const SturmSequence& seq, const Rational& x);
std::size_t sign_variations_at_pos_infinity(const SturmSequence& seq);
std::size_t sign_variations_at_neg_infinity(const SturmSequence& seq);

/// Number of distinct real roots. Throws std::domain_error for zero.
std::size_t count_real_roots(const Polynomial& f);

/// Distinct real roots in (lo, hi). Requires lo < hi, neither a root.
std::size_t count_real_roots_between(const Polynomial& f, const Rational& lo, const Rational& hi);

/// For F(a, b) homogeneous over a two-variable set: does F vanish at some
/// real (a, b) != (0, 0)? Roots with b != 0 are found by Sturm on F(a, 1);
/// the line b = 0 contributes a root exactly when the a^deg coefficient is 0.
bool homogeneous_has_nonzero_real_root(const Polynomial& bivariate);

}  // namespace lowrank
