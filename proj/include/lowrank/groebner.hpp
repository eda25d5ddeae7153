#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lowrank/errors.hpp"
#include "lowrank/poly.hpp"

namespace lowrank {

/// Caps for a single Groebner computation. Exceeding one throws
/// ResourceExceeded.
struct ResourceLimits {
  std::size_t max_pairs = 1'000'000;
  /// Bound on the lcm degree of any S-pair that gets reduced.
  unsigned max_degree = 64;
  std::optional<std::chrono::milliseconds> time_limit;
};

struct GroebnerStats {
  std::size_t pairs_processed = 0;
  std::size_t pairs_pruned = 0;
  std::size_t zero_reductions = 0;
  std::size_t reduction_steps = 0;
  unsigned max_degree = 0;
  std::size_t basis_size = 0;
};

/// Generators over a shared VariableSet. Zero generators are dropped, so an
/// ideal built only from zeros is the zero ideal.
class Ideal {
 public:
  /// Takes the variable set from the first generator; needs at least one.
  explicit Ideal(std::vector<Polynomial> generators);
  Ideal(VarSetPtr vars, std::vector<Polynomial> generators);

  const VarSetPtr& variables() const noexcept { return vars_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }

 private:
  VarSetPtr vars_;
  std::vector<Polynomial> gens_;
};

/// Reduced Groebner basis: primitive integer polynomials with positive
/// leading coefficient, sorted by ascending leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(VarSetPtr vars, MonomialOrder order, std::vector<Polynomial> basis, GroebnerStats stats);

  const VarSetPtr& variables() const noexcept { return vars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Polynomial>& polynomials() const noexcept { return basis_; }
  const GroebnerStats& stats() const noexcept { return stats_; }
  std::size_t size() const noexcept { return basis_.size(); }
  bool is_unit() const noexcept;

 private:
  VarSetPtr vars_;
  MonomialOrder order_;
  std::vector<Polynomial> basis_;
  GroebnerStats stats_;
};

/// Buchberger's algorithm with the normal selection strategy (sugar
/// tie-break), Gebauer-Moeller pair pruning and fraction-free reduction.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const ResourceLimits& limits = {});

/// Remainder of f on division by the basis. Reducers are chosen as the first
/// basis element (in basis order) whose leading monomial divides.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Checks that the S-polynomial of every basis pair reduces to zero. No pair
/// criteria are applied, so this is independent of how the basis was built.
bool satisfies_buchberger_criterion(const GroebnerBasis& basis);

/// True iff 1 is in the ideal. Stops as soon as a constant appears.
bool contains_one(const Ideal& ideal, const MonomialOrder& order = MonomialOrder::grevlex(),
                  const ResourceLimits& limits = {});

struct EliminationResult {
  /// Kept variables, in the order requested.
  VarSetPtr kept;
  /// Generators of the elimination ideal over `kept` (grevlex), primitive,
  /// sorted by ascending degree. Empty for the zero ideal.
  std::vector<Polynomial> generators;
  GroebnerStats stats;
};

/// Intersection of the ideal with Q[keep], read off a block-order basis in
/// which every non-kept variable sits in the eliminated block.
EliminationResult elimination_ideal(const Ideal& ideal, std::span<const std::size_t> keep,
                                    const ResourceLimits& limits = {});
EliminationResult elimination_ideal(const Ideal& ideal, std::span<const std::string> keep,
                                    const ResourceLimits& limits = {});

/// Text dump: "# order: <order>", "# variables: a b c", then one polynomial
/// per line.
std::string dump_basis(const GroebnerBasis& basis);

struct BasisDump {
  VarSetPtr variables;
  MonomialOrder order = MonomialOrder::grevlex();
  std::vector<Polynomial> polynomials;
};

BasisDump parse_basis_dump(std::string_view text);

}  // namespace lowrank
