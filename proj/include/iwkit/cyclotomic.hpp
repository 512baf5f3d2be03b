#pragma once

#include <memory>
#include <vector>

#include "iwkit/series.hpp"
#include "iwkit/smith.hpp"

namespace iwkit {

// Residue in Z_p[X] / (Phi_m, p^N), i.e. in Z_p[zeta_{p^m}] via X -> zeta - 1,
// stored densely in the power basis 1, X, ..., X^{d-1}, d = deg Phi_m.
class CyclotomicElement {
 public:
  // Reduces `coeffs` (any length) modulo Phi_level.
  CyclotomicElement(const Modulus& mod, int level, std::vector<u64> coeffs);

  const Modulus& modulus() const noexcept { return mod_; }
  u64 prime() const noexcept { return mod_.prime(); }
  int level() const noexcept { return level_; }
  int degree() const noexcept { return static_cast<int>(phi_->size()) - 1; }
  std::span<const u64> coeffs() const noexcept { return coeffs_; }
  PadicInt coefficient(int i) const { return PadicInt(mod_, coeffs_.at(static_cast<std::size_t>(i))); }

  bool is_zero() const noexcept;
  // Least coefficient valuation in the power basis; precision for zero.
  int min_valuation() const noexcept;

  // Set by cyclo_eval when the source series filled its cap and its cut-off
  // tail could still be visible at this precision after evaluation.
  bool truncated() const noexcept { return truncated_; }
  void mark_truncated() noexcept { truncated_ = true; }

  friend CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) noexcept;

  // v_p of the norm down to Z_p, from the elementary divisors of the
  // multiplication map. Throws PrecisionError if the norm is not determined.
  int norm_valuation(int margin = kDefaultMargin) const;

 private:
  Modulus mod_;
  int level_;
  std::shared_ptr<const std::vector<u64>> phi_;  // Phi_level, monic
  std::vector<u64> coeffs_;
  bool truncated_ = false;
};

// f evaluated at zeta_{p^m} - 1, i.e. f mod (Phi_m, p^N).
CyclotomicElement cyclo_eval(const IwasawaSeries& f, int level);

}  // namespace iwkit
