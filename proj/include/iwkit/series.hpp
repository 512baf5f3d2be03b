#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "iwkit/padic.hpp"

namespace iwkit {

// Coefficient ring Z/p^N together with the degree cap D of the truncation
// Z_p[[X]] -> (Z/p^N)[X]/(X^{D+1}).
struct SeriesRing {
  Modulus modulus;
  int degree_cap;

  SeriesRing(const Modulus& mod, int cap);
  SeriesRing(u64 prime, int precision, int cap) : SeriesRing(Modulus(prime, precision), cap) {}

  friend bool operator==(const SeriesRing&, const SeriesRing&) = default;
};

// Truncated element of Lambda = Z_p[[X]]. Coefficients beyond the cap do not
// exist; equality is coefficientwise mod p^N up to the cap. Binary operations
// require a common prime and produce min(precision) and min(cap).
class IwasawaSeries {
 public:
  explicit IwasawaSeries(const SeriesRing& ring);
  IwasawaSeries(const SeriesRing& ring, std::vector<u64> residues);

  static IwasawaSeries from_integers(const SeriesRing& ring, std::span<const i64> coeffs);
  static IwasawaSeries from_integers(const SeriesRing& ring, std::initializer_list<i64> coeffs) {
    return from_integers(ring, std::span<const i64>(coeffs.begin(), coeffs.size()));
  }
  static IwasawaSeries constant(const SeriesRing& ring, i64 c);
  // c * X^k; throws DegreeOverflow if k exceeds the cap.
  static IwasawaSeries monomial(const SeriesRing& ring, int k, u64 c = 1);

  const Modulus& modulus() const noexcept { return ring_.modulus; }
  const SeriesRing& ring() const noexcept { return ring_; }
  u64 prime() const noexcept { return ring_.modulus.prime(); }
  int precision() const noexcept { return ring_.modulus.precision(); }
  int degree_cap() const noexcept { return ring_.degree_cap; }

  // -1 for the zero series.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // True unless the stored coefficients reach the cap (a possibly nonzero tail was cut).
  bool is_polynomial() const noexcept { return degree() < degree_cap(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

  u64 residue(int i) const noexcept {
    return i >= 0 && static_cast<std::size_t>(i) < coeffs_.size() ? coeffs_[static_cast<std::size_t>(i)] : 0;
  }
  PadicInt coefficient(int i) const { return PadicInt(modulus(), residue(i)); }
  std::span<const u64> residues() const noexcept { return coeffs_; }

  // Least coefficient valuation; precision() for zero.
  int valuation() const noexcept;

  IwasawaSeries operator-() const;
  friend IwasawaSeries operator+(const IwasawaSeries& a, const IwasawaSeries& b);
  friend IwasawaSeries operator-(const IwasawaSeries& a, const IwasawaSeries& b);
  // Truncated at the cap.
  friend IwasawaSeries operator*(const IwasawaSeries& a, const IwasawaSeries& b);
  IwasawaSeries scaled(u64 residue) const;
  IwasawaSeries scaled(const PadicInt& c) const;

  // Product that must fit under the cap; throws DegreeOverflow otherwise.
  IwasawaSeries multiply_exact(const IwasawaSeries& other) const;

  // X^k * f, truncated.
  IwasawaSeries shifted_up(int k) const;
  // sum_{i >= k} a_i X^{i-k}; cap drops by k.
  IwasawaSeries shifted_down(int k) const;
  // Terms of degree < k.
  IwasawaSeries low_part(int k) const;

  // f / p^k; all coefficients must be divisible by p^k. Precision drops by k.
  IwasawaSeries divided_by_p_power(int k) const;
  IwasawaSeries with_precision(int precision) const;
  // Raising the cap treats the stored coefficients as a polynomial.
  IwasawaSeries with_degree_cap(int cap) const;

  // Multiplicative inverse in the truncated ring; constant term must be a unit.
  IwasawaSeries inverse() const;

  friend bool operator==(const IwasawaSeries& a, const IwasawaSeries& b) noexcept;

 private:
  void trim() noexcept;

  SeriesRing ring_;
  std::vector<u64> coeffs_;  // trailing zeros removed
};

// Ring both operands embed into (common prime, min precision, min cap).
SeriesRing common_ring(const IwasawaSeries& a, const IwasawaSeries& b);

}  // namespace iwkit
