#pragma once

#include <vector>

#include "iwkit/matrix.hpp"

namespace iwkit {

inline constexpr int kDefaultMargin = 4;

// Elementary divisors of a matrix over Z/p^N, one per row (generator) of the
// presented module coker(A : Z_p^cols -> Z_p^rows). An exponent equal to N
// means the divisor is zero at this precision, i.e. a free generator.
struct SnfResult {
  int precision = 0;
  std::vector<int> exponents;  // sorted nondecreasing
  int rank_indicators = 0;     // number of exponents equal to precision
  // False when some exponent sits in [N - margin, N): rank and length cannot
  // be told apart at this precision.
  bool transform_valid = true;

  int torsion_length() const noexcept;
};

// Valuation-minimal pivoting; ties go to the smallest (row, col).
SnfResult snf(const ResidueMatrix& a, int margin = kDefaultMargin);
SnfResult snf(std::span<const std::vector<PadicInt>> rows, int margin = kDefaultMargin);

struct ModuleInvariants {
  int free_rank = 0;
  int length = 0;

  friend bool operator==(const ModuleInvariants&, const ModuleInvariants&) = default;
};

// Z_p-rank and torsion length of the module presented by `presentation`.
// Throws PrecisionError when an exponent lies within `margin` of N.
ModuleInvariants module_invariants(const ResidueMatrix& presentation, int margin = kDefaultMargin);

}  // namespace iwkit
