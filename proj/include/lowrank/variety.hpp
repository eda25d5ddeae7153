#pragma once

#include <string>

#include "lowrank/exactnum.hpp"

namespace lowrank {

enum class Variant { General, Symmetric, WeakRecovery };
enum class Field { Real, Complex };

/// Problem parameters: n x n matrices of rank at most r.
struct ProblemSpec {
  int n = 0;
  int r = 0;
  Variant variant = Variant::General;
  Field field = Field::Real;
};

/// Throws std::invalid_argument unless 1 <= r <= n/2.
void validate(const ProblemSpec& spec);

enum class Tightness { TightByTheorem, KnownNotTight, Unknown };

struct TightnessVerdict {
  Tightness value = Tightness::Unknown;
  /// Empty exactly when value is Unknown.
  std::string citation;
};

std::string to_string(Variant v);
std::string to_string(Field f);
std::string to_string(Tightness t);

/// Affine dimension of the n x n matrices of rank <= r: 2nr - r^2 in general,
/// C(n+1,2) - C(n-r+1,2) for symmetric. Weak recovery uses the general set.
long dim_lowrank(int n, int r, Variant variant);

/// Degree of the determinantal variety of n x n matrices of rank <= r:
/// prod_{i=0}^{n-r-1} (n+i)! i! / ((r+i)! (n-r+i)!).
BigInt degree_determinantal(int n, int r);

bool is_odd_degree(int n, int r2);

/// General 4nr - 4r^2, symmetric 2nr + r - 2r^2, weak recovery 2nr - r^2 + 1.
long min_measurement_bound(const ProblemSpec& spec);

/// Only cases settled by proved results are classified; everything else is
/// Unknown.
TightnessVerdict tightness_classify(const ProblemSpec& spec);

/// True for 2, 4, 8, ...
bool is_positive_power_of_two(long v);

}  // namespace lowrank
