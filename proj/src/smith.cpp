#include "iwkit/smith.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "iwkit/errors.hpp"
#include "iwkit/kernels.hpp"

namespace iwkit {

int SnfResult::torsion_length() const noexcept {
  int total = 0;
  for (int e : exponents) {
    if (e < precision) total += e;
  }
  return total;
}

SnfResult snf(const ResidueMatrix& input, int margin) {
  const Modulus& mod = input.modulus();
  const int n_prec = mod.precision();
  const u64 m = mod.value();
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();

  ResidueMatrix a = input;
  std::vector<int> exponents;
  exponents.reserve(rows);

  // The least valuation in the trailing block never decreases under
  // elimination, so the search resumes from the previous pivot's level.
  int level = 0;
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    std::size_t pr = rows, pc = cols;
    while (level < n_prec && pr == rows) {
      const u64 next = mod.power(level + 1);  // entries with valuation exactly `level` are not divisible by this
      for (std::size_t r = t; r < rows && pr == rows; ++r) {
        const auto row = a.row(r);
        for (std::size_t c = t; c < cols; ++c) {
          const u64 x = row[c];
          if (x != 0 && x % next != 0) {
            pr = r;
            pc = c;
            break;
          }
        }
      }
      if (pr == rows) ++level;
    }
    if (pr == rows) break;  // trailing block is zero mod p^N

    if (pr != t) std::swap_ranges(a.row(pr).begin(), a.row(pr).end(), a.row(t).begin());
    if (pc != t) {
      for (std::size_t r = t; r < rows; ++r) std::swap(a(r, pc), a(r, t));
    }

    const u64 pivot = a(t, t);
    const u64 scale = mod.power(level);
    const u64 unit_inv = mod.unit_inverse(pivot / scale);
    const auto pivot_row = a.row(t).subspan(t);
    for (std::size_t r = t + 1; r < rows; ++r) {
      const u64 x = a(r, t);
      if (x == 0) continue;
      const u64 factor = mod.mul(x / scale, unit_inv);
      kernels::axpy_mod(a.row(r).subspan(t), pivot_row, mod.neg(factor), m);
    }
    // Column operations would only clear the rest of the pivot row, since the
    // pivot column is now zero below the pivot.
    exponents.push_back(level);
  }
  exponents.resize(rows, n_prec);

  SnfResult out;
  out.precision = n_prec;
  out.exponents = std::move(exponents);
  std::sort(out.exponents.begin(), out.exponents.end());
  out.rank_indicators = static_cast<int>(std::count(out.exponents.begin(), out.exponents.end(), n_prec));
  out.transform_valid = std::none_of(out.exponents.begin(), out.exponents.end(),
                                     [&](int e) { return e >= n_prec - margin && e < n_prec; });
  return out;
}

SnfResult snf(std::span<const std::vector<PadicInt>> rows, int margin) {
  return snf(ResidueMatrix::from_padic(rows), margin);
}

ModuleInvariants module_invariants(const ResidueMatrix& presentation, int margin) {
  const SnfResult s = snf(presentation, margin);
  if (!s.transform_valid) {
    throw PrecisionError("elementary divisor within " + std::to_string(margin) + " of precision " +
                         std::to_string(s.precision) + "; cannot separate rank from length");
  }
  return {s.rank_indicators, s.torsion_length()};
}

}  // namespace iwkit
