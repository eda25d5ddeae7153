#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lowrank/exactnum.hpp"

namespace lowrank {

/// Ordered, duplicate-free list of variable names. Index 0 is the largest
/// variable under every order below.
class VariableSet {
 public:
  explicit VariableSet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const VariableSet& a, const VariableSet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using VarSetPtr = std::shared_ptr<const VariableSet>;

VarSetPtr make_variables(std::vector<std::string> names);

bool same_variables(const VarSetPtr& a, const VarSetPtr& b);

class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t num_vars, std::size_t index, Exponent power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  Exponent degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<Exponent> exps_;
  Exponent degree_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Total, multiplicative monomial orders. In all of them variable 0 is the
/// largest. `block(split)` compares variables [0, split) by grevlex first and
/// breaks ties with grevlex on [split, n); it eliminates the first block.
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder block(std::size_t split) { return MonomialOrder(Kind::Block, split); }

  Kind kind() const noexcept { return kind_; }
  std::size_t split() const noexcept { return split_; }

  /// Negative, zero, or positive as a < b, a == b, a > b. Works on raw
  /// exponent spans so the Groebner engine can use packed storage.
  int compare(std::span<const Monomial::Exponent> a, std::span<const Monomial::Exponent> b) const;
  int compare(const Monomial& a, const Monomial& b) const { return compare(a.exponents(), b.exponents()); }

  std::string describe() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.split_ == b.split_;
  }

 private:
  MonomialOrder(Kind kind, std::size_t split) : kind_(kind), split_(split) {}

  Kind kind_;
  std::size_t split_;
};

struct Term {
  Rational coef;
  Monomial mono;
};

/// Degree reported for the zero polynomial.
inline constexpr int kZeroPolynomialDegree = std::numeric_limits<int>::min();

/// Sparse polynomial over Q. Terms are kept sorted strictly descending under
/// the polynomial's order, with no zero coefficients and no repeats.
class Polynomial {
 public:
  explicit Polynomial(VarSetPtr vars, MonomialOrder order = MonomialOrder::grevlex());

  static Polynomial constant(VarSetPtr vars, const Rational& c,
                             MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial variable(VarSetPtr vars, std::size_t index,
                             MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial variable(VarSetPtr vars, std::string_view name,
                             MonomialOrder order = MonomialOrder::grevlex());
  /// Merges repeated monomials and drops zeros.
  static Polynomial from_terms(VarSetPtr vars, std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::grevlex());

  const VarSetPtr& variables() const noexcept { return vars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  /// Total degree; kZeroPolynomialDegree for zero.
  int degree() const noexcept;
  /// Degree in a single variable; kZeroPolynomialDegree for zero.
  int degree_in(std::size_t var) const;
  /// The zero polynomial counts as homogeneous.
  bool is_homogeneous() const noexcept;
  /// Indices of variables that occur with a positive exponent.
  std::vector<std::size_t> support() const;

  Polynomial with_order(MonomialOrder order) const;

  /// Same ray, integer coefficients with gcd 1 and positive leading
  /// coefficient. Zero stays zero.
  Polynomial primitive() const;

  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(VarSetPtr vars, MonomialOrder order, std::vector<Term> sorted_terms);
  void sort_and_merge();

  VarSetPtr vars_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial subtract(const Polynomial& p, const Polynomial& q);
Polynomial multiply(const Polynomial& p, const Polynomial& q);
Polynomial power(const Polynomial& p, unsigned exponent);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return subtract(p, q); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return multiply(p, q); }

/// Replaces variables of p (by index into p's VariableSet) with polynomials
/// over the same VariableSet. Unassigned variables map to themselves.
Polynomial substitute(const Polynomial& p, const std::map<std::size_t, Polynomial>& assignment);
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignment);

/// Ring map into another VariableSet: variable i of p goes to images[i].
/// All images must share `target` and its order.
Polynomial map_variables(const Polynomial& p, const VarSetPtr& target,
                         std::span<const Polynomial> images);

/// Exact value at a rational point (one entry per variable).
Rational evaluate(const Polynomial& p, std::span<const Rational> point);

/// Maximal term under `order`. Throws std::domain_error for zero.
Term leading_term(const Polynomial& p, const MonomialOrder& order);
inline Term leading_term(const Polynomial& p) { return leading_term(p, p.order()); }

/// F(a, b) over a two-variable set -> F(a, 1) over the set {a}.
Polynomial dehomogenize(const Polynomial& bivariate);

/// d/d(var).
Polynomial derivative(const Polynomial& p, std::size_t var);

/// Text format: terms like "3*x11^2*x12" or "-7/2*y", joined by + and -.
std::string to_string(const Polynomial& p);
Polynomial parse_polynomial(std::string_view text, const VarSetPtr& vars,
                            MonomialOrder order = MonomialOrder::grevlex());

/// True when p == c * q for some nonzero rational c (both nonzero).
bool proportional(const Polynomial& p, const Polynomial& q);

}  // namespace lowrank
