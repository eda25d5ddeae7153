#pragma once

#include <cstddef>
#include <vector>

#include "lowrank/certify.hpp"
#include "lowrank/matrix.hpp"

namespace lowrank {

using RationalVector = std::vector<Rational>;

/// Span of linearly independent rational vectors, with its orthogonal
/// projector computed once at construction.
class Subspace {
 public:
  /// Throws std::invalid_argument on an empty, ragged or dependent basis.
  explicit Subspace(std::vector<RationalVector> basis);

  std::size_t ambient_dimension() const noexcept { return projector_.rows(); }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<RationalVector>& basis() const noexcept { return basis_; }
  const RationalMatrix& projector() const noexcept { return projector_; }

 private:
  std::vector<RationalVector> basis_;
  RationalMatrix projector_;
};

/// P = B (B^T B)^{-1} B^T.
RationalMatrix projection_matrix(const std::vector<RationalVector>& basis);

/// Symmetric rank-1 ensemble with A_j the projector onto W_j.
MeasurementEnsemble projection_ensemble(const std::vector<Subspace>& subspaces, std::size_t n);

Certificate certify_phase_retrieval(const std::vector<Subspace>& subspaces, const CertifyConfig& config = {});

struct ComplementOptions {
  std::size_t max_vectors = 24;
  Execution execution = Execution::Parallel;
};

/// Every index subset or its complement spans R^n. Exhaustive over 2^m
/// subsets (each unordered pair {I, I^c} once).
bool complement_property(const std::vector<RationalVector>& vectors, const ComplementOptions& options = {});

}  // namespace lowrank
