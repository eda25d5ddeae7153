#include "lowrank/variety.hpp"

#include <stdexcept>

namespace lowrank {

namespace {

void require_rank_range(int n, int r) {
  if (n < 0 || r < 0 || r > n) {
    throw std::invalid_argument("rank bound out of range: n=" + std::to_string(n) + " r=" + std::to_string(r));
  }
}

long binom2(long k) { return k * (k - 1) / 2; }

}  // namespace

void validate(const ProblemSpec& spec) {
  if (spec.r < 1 || 2 * spec.r > spec.n) {
    throw std::invalid_argument("need 1 <= r <= n/2, got n=" + std::to_string(spec.n) + " r=" +
                                std::to_string(spec.r));
  }
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::General: return "general";
    case Variant::Symmetric: return "symmetric";
    case Variant::WeakRecovery: return "weak-recovery";
  }
  return "?";
}

std::string to_string(Field f) { return f == Field::Real ? "real" : "complex"; }

std::string to_string(Tightness t) {
  switch (t) {
    case Tightness::TightByTheorem: return "tight";
    case Tightness::KnownNotTight: return "not-tight";
    case Tightness::Unknown: return "unknown";
  }
  return "?";
}

long dim_lowrank(int n, int r, Variant variant) {
  require_rank_range(n, r);
  const long ln = n, lr = r;
  if (variant == Variant::Symmetric) return binom2(ln + 1) - binom2(ln - lr + 1);
  return 2 * ln * lr - lr * lr;
}

BigInt degree_determinantal(int n, int r) {
  require_rank_range(n, r);
  Rational product = 1;
  for (int i = 0; i < n - r; ++i) {
    const auto u = [](int k) { return static_cast<unsigned>(k); };
    product *= Rational(factorial(u(n + i)) * factorial(u(i)));
    product /= Rational(factorial(u(r + i)) * factorial(u(n - r + i)));
  }
  product.canonicalize();
  if (product.get_den() != 1) throw std::logic_error("determinantal degree is not an integer");
  return product.get_num();
}

bool is_odd_degree(int n, int r2) { return p2_valuation(degree_determinantal(n, r2)) == 0; }

long min_measurement_bound(const ProblemSpec& spec) {
  validate(spec);
  const long n = spec.n, r = spec.r;
  switch (spec.variant) {
    case Variant::General: return 4 * n * r - 4 * r * r;
    case Variant::Symmetric: return 2 * n * r + r - 2 * r * r;
    case Variant::WeakRecovery: return 2 * n * r - r * r + 1;
  }
  return 0;
}

bool is_positive_power_of_two(long v) { return v >= 2 && (v & (v - 1)) == 0; }

TightnessVerdict tightness_classify(const ProblemSpec& spec) {
  validate(spec);
  const long n = spec.n, r = spec.r;
  const bool odd_degree_case = is_positive_power_of_two(n - r);
  if (spec.variant == Variant::General) {
    if (spec.field == Field::Complex) {
      return {Tightness::TightByTheorem, "complex dimension count: below 4nr-4r^2 the kernel meets rank <= 2r"};
    }
    if (odd_degree_case) {
      return {Tightness::TightByTheorem, "n-r is a power of two: the rank <= 2r variety has odd degree"};
    }
    if (n == 2 * r + 1) return {Tightness::TightByTheorem, "n = 2r+1: the rank <= 2r variety has odd degree 2r+1"};
    if (n == 4 && r == 1) return {Tightness::KnownNotTight, "explicit certified ensemble of 11 = 4n-5 matrices"};
    return {};
  }
  if (spec.variant == Variant::Symmetric && spec.field == Field::Real) {
    if (odd_degree_case) {
      return {Tightness::TightByTheorem,
              "n-r is a power of two: the symmetric rank <= 2r variety has odd degree"};
    }
    if (n == 4 && r == 1) return {Tightness::KnownNotTight, "explicit certified ensemble of 6 = 2n-2 projections"};
  }
  return {};
}

}  // namespace lowrank
