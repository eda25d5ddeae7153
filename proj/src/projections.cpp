#include "lowrank/projections.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lowrank {

RationalMatrix projection_matrix(const std::vector<RationalVector>& basis) {
  if (basis.empty()) throw std::invalid_argument("projection needs a nonempty basis");
  const std::size_t n = basis.front().size();
  if (n == 0) throw std::invalid_argument("basis vectors are empty");
  for (const auto& v : basis) {
    if (v.size() != n) throw std::invalid_argument("basis vectors have different lengths");
  }
  const RationalMatrix b = RationalMatrix::from_columns(basis);
  const RationalMatrix bt = b.transpose();
  const RationalMatrix gram = bt * b;
  if (rank(gram) != basis.size()) throw std::invalid_argument("basis is linearly dependent");
  return b * inverse(gram) * bt;
}

Subspace::Subspace(std::vector<RationalVector> basis)
    : basis_(std::move(basis)), projector_(projection_matrix(basis_)) {}

MeasurementEnsemble projection_ensemble(const std::vector<Subspace>& subspaces, std::size_t n) {
  MeasurementEnsemble e;
  e.n = static_cast<int>(n);
  e.r = 1;
  e.symmetric = true;
  for (std::size_t j = 0; j < subspaces.size(); ++j) {
    if (subspaces[j].ambient_dimension() != n) {
      throw std::invalid_argument("subspace " + std::to_string(j + 1) + " is not in R^" + std::to_string(n));
    }
    e.matrices.push_back(subspaces[j].projector());
  }
  return e;
}

Certificate certify_phase_retrieval(const std::vector<Subspace>& subspaces, const CertifyConfig& config) {
  if (subspaces.empty()) throw std::invalid_argument("no subspaces");
  const std::size_t n = subspaces.front().ambient_dimension();
  if (n < 2) throw std::invalid_argument("phase retrieval needs n >= 2");
  return vinzant_certify(projection_ensemble(subspaces, n), config);
}

bool complement_property(const std::vector<RationalVector>& vectors, const ComplementOptions& options) {
  const std::size_t m = vectors.size();
  if (m == 0) throw std::invalid_argument("complement property needs at least one vector");
  if (m > options.max_vectors) {
    throw std::invalid_argument("complement property is exhaustive; " + std::to_string(m) + " vectors exceed the cap of " +
                                std::to_string(options.max_vectors));
  }
  const std::size_t n = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != n) throw std::invalid_argument("vectors have different lengths");
  }
  auto spans = [&](std::uint64_t mask, bool inside) {
    std::vector<RationalVector> cols;
    for (std::size_t j = 0; j < m; ++j) {
      if (((mask >> j) & 1U) == (inside ? 1U : 0U)) cols.push_back(vectors[j]);
    }
    if (cols.size() < n) return false;
    return rank(RationalMatrix::from_columns(cols)) == n;
  };
  // Fixing the last index inside I visits each pair {I, I^c} once.
  const std::uint64_t half = std::uint64_t{1} << (m - 1);
  constexpr std::uint64_t kChunk = 1024;
  const std::uint64_t chunks = (half + kChunk - 1) / kChunk;
  std::atomic<bool> ok{true};
  for_each_index(static_cast<std::size_t>(chunks), options.execution, [&](std::size_t c) {
    const std::uint64_t end = std::min<std::uint64_t>(half, (c + 1) * kChunk);
    for (std::uint64_t k = c * kChunk; k < end && ok.load(std::memory_order_relaxed); ++k) {
      const std::uint64_t mask = k | half;
      if (!spans(mask, true) && !spans(mask, false)) ok.store(false, std::memory_order_relaxed);
    }
  });
  return ok.load();
}

}  // namespace lowrank
