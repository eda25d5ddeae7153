#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lowrank/groebner.hpp"
#include "lowrank/matrix.hpp"
#include "lowrank/parallel.hpp"
#include "lowrank/poly.hpp"

namespace lowrank {

/// Measurement matrices A_1..A_m acting on n x n unknowns of rank <= r.
/// With `symmetric` set the unknown is restricted to symmetric matrices; the
/// A_j themselves may be arbitrary.
struct MeasurementEnsemble {
  int n = 0;
  int r = 1;
  bool symmetric = false;
  std::vector<RationalMatrix> matrices;

  std::size_t size() const noexcept { return matrices.size(); }
  /// Throws std::invalid_argument on shape errors (n < 2, m < 1, non n x n).
  void validate() const;
};

/// n x n grid of variables x11..xnn in row-major order. The symmetric grid
/// uses the upper-triangular names for both (j,k) and (k,j).
class SymbolicMatrix {
 public:
  SymbolicMatrix(int n, bool symmetric);

  int n() const noexcept { return n_; }
  bool symmetric() const noexcept { return symmetric_; }
  const VarSetPtr& variables() const noexcept { return vars_; }
  std::size_t var_index(int row, int col) const { return grid_.at(static_cast<std::size_t>(row * n_ + col)); }
  Polynomial entry(int row, int col) const;

 private:
  int n_;
  bool symmetric_;
  VarSetPtr vars_;
  std::vector<std::size_t> grid_;
};

SymbolicMatrix symbolic_unknown(int n, bool symmetric);

/// All s x s minors, rows chosen before columns. Exact duplicates (which
/// occur for symmetric unknowns) are dropped.
std::vector<Polynomial> minors(const SymbolicMatrix& q, int s);

/// l_j = <A_j, Q> = sum_{i,k} (A_j)_{ik} Q_{ik}.
std::vector<Polynomial> measurement_forms(const MeasurementEnsemble& ensemble, const SymbolicMatrix& q);

/// Result of solving a homogeneous linear system for pivot variables.
struct LinearReduction {
  VarSetPtr original;
  /// Original variables minus the pivots, in original order.
  VarSetPtr reduced;
  /// Pivot variables (indices into `original`).
  std::vector<std::size_t> pivots;
  /// Image of every original variable, over `reduced`.
  std::vector<Polynomial> variable_images;
  /// Images of the `others` argument, over `reduced`.
  std::vector<Polynomial> images;
  /// Linear forms that could not be solved for a non-kept variable; they
  /// stay as generators (over `reduced`).
  std::vector<Polynomial> residual_linears;

  Polynomial apply(const Polynomial& p) const;
  /// Pivot variable -> its solution in terms of the other original variables.
  Polynomial substitution_for(std::size_t pivot) const;
};

/// Gaussian elimination over Q on the linear forms; pivots are never taken
/// from `keep`. The ideal generated by linears + others is mapped
/// isomorphically onto residual_linears + images.
LinearReduction linear_preprocess(const std::vector<Polynomial>& linears, const std::vector<Polynomial>& others,
                                  const std::vector<std::size_t>& keep);

enum class Verdict { Injective, Fail, Indeterminate };

std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& text);

struct SliceResult {
  std::string variable;
  /// Set when the slice computation finished.
  std::optional<bool> contains_one;
};

/// Deterministic counters only, so certificates are reproducible byte for
/// byte.
struct CertificateStats {
  std::size_t linear_pivots = 0;
  std::size_t reduced_variables = 0;
  std::size_t elimination_pairs = 0;
  std::size_t elimination_basis_size = 0;
  unsigned elimination_max_degree = 0;
  std::size_t elimination_generators = 0;
};

struct Certificate {
  Verdict verdict = Verdict::Indeterminate;
  std::string reason;
  int n = 0;
  int r = 0;
  bool symmetric = false;
  std::size_t m = 0;
  std::array<std::string, 2> kept;
  /// Homogeneous element of the elimination ideal over the kept pair.
  std::optional<Polynomial> f0;
  /// Distinct real roots of f0(a, 1).
  std::optional<std::size_t> real_root_count;
  std::vector<SliceResult> slices;
  CertificateStats stats;
};

struct CertifyConfig {
  /// Defaults to the last two variables of the unknown.
  std::optional<std::array<std::string, 2>> keep;
  ResourceLimits limits;
  bool preprocess_linear = true;
  /// How the independent slice checks are scheduled.
  Execution execution = Execution::Parallel;
};

/// Eliminate to a binary form f0 in the kept pair, show it has no nonzero
/// real root, then show every slice x_v = 1, a = b = 0 is empty.
/// INJECTIVE is a proof; FAIL only says which check did not go through.
Certificate vinzant_certify(const MeasurementEnsemble& ensemble, const CertifyConfig& config = {});

/// Slice checks alone (exposed for benchmarking the parallel kernel).
/// Returns one entry per variable of the unknown.
std::vector<SliceResult> slice_checks(const MeasurementEnsemble& ensemble, const std::array<std::string, 2>& kept,
                                      const CertifyConfig& config);

/// trace(A_j^T M) for every j.
std::vector<Rational> evaluate_measurements(const MeasurementEnsemble& ensemble, const RationalMatrix& m);

struct AuditReport {
  bool f0_present = false;
  bool f0_homogeneous = false;
  bool f0_in_ideal = false;
  bool pure_power_nonzero = false;
  bool no_nonzero_real_root = false;
  bool slices_recomputed = false;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Re-checks an INJECTIVE certificate without the construction path: f0 is
/// reduced against a grevlex basis of the full ideal (no linear
/// preprocessing) and every slice is recomputed on the full ideal.
AuditReport audit_certificate(const MeasurementEnsemble& ensemble, const Certificate& cert,
                              const ResourceLimits& limits = {}, Execution execution = Execution::Parallel);

/// Random nonzero integer matrices of rank <= 2r (sums of 2r outer products,
/// entries in [-5, 5]; signed u u^T terms for symmetric ensembles). Returns
/// how many of them have an all-zero measurement vector. Sample i depends
/// only on (seed, i).
std::size_t count_kernel_hits(const MeasurementEnsemble& ensemble, std::size_t samples, std::uint64_t seed,
                              Execution execution = Execution::Parallel);

RationalMatrix random_low_rank_matrix(int n, int rank, bool symmetric, std::uint64_t seed, std::uint64_t index);

}  // namespace lowrank
