#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace iwkit {

using u64 = std::uint64_t;
using i64 = std::int64_t;

bool is_odd_prime(u64 n) noexcept;

// Largest supported p^N. Residues and their sums must fit comfortably in 64 bits.
inline constexpr u64 kMaxModulus = u64{1} << 62;

// The residue ring Z/p^N. Cheap to copy; all arithmetic on raw residues goes
// through it.
class Modulus {
 public:
  // Throws InputError unless prime is an odd prime, precision >= 1 and
  // prime^precision <= kMaxModulus.
  Modulus(u64 prime, int precision);

  u64 prime() const noexcept { return prime_; }
  int precision() const noexcept { return precision_; }
  u64 value() const noexcept { return value_; }

  // p^k for 0 <= k <= precision.
  u64 power(int k) const;

  u64 reduce(i64 x) const noexcept;
  u64 reduce_unsigned(u64 x) const noexcept { return x % value_; }
  u64 add(u64 a, u64 b) const noexcept {
    const u64 s = a + b;
    return s >= value_ ? s - value_ : s;
  }
  u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + value_ - b; }
  u64 neg(u64 a) const noexcept { return a == 0 ? 0 : value_ - a; }
  u64 mul(u64 a, u64 b) const noexcept {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % value_);
  }

  // Largest k <= precision with p^k | a; precision for a == 0.
  int valuation(u64 a) const noexcept;
  bool is_unit(u64 a) const noexcept { return a % prime_ != 0; }
  // Throws InputError if a is not a unit.
  u64 unit_inverse(u64 a) const;

  // Parses a decimal integer (optional leading '-') of any length and reduces it.
  u64 parse_decimal(std::string_view text) const;

  // Same prime, smaller precision.
  Modulus lowered(int precision) const;

  friend bool operator==(const Modulus& a, const Modulus& b) noexcept {
    return a.prime_ == b.prime_ && a.precision_ == b.precision_;
  }

 private:
  u64 prime_;
  int precision_;
  u64 value_;
};

// Element of Z_p known modulo p^N.
class PadicInt {
 public:
  PadicInt(u64 prime, int precision, i64 value);
  PadicInt(const Modulus& mod, u64 residue);

  static PadicInt parse(u64 prime, int precision, std::string_view decimal);

  u64 prime() const noexcept { return prime_; }
  int precision() const noexcept { return precision_; }
  u64 residue() const noexcept { return residue_; }
  Modulus modulus() const { return Modulus(prime_, precision_); }

  // precision() when indistinguishable from zero.
  int valuation() const noexcept;
  bool is_zero() const noexcept { return residue_ == 0; }
  bool is_unit() const noexcept { return residue_ % prime_ != 0; }

  PadicInt operator-() const;
  friend PadicInt operator+(const PadicInt& a, const PadicInt& b);
  friend PadicInt operator-(const PadicInt& a, const PadicInt& b);
  friend PadicInt operator*(const PadicInt& a, const PadicInt& b);
  // b must be a unit; the result keeps min(precision) digits.
  friend PadicInt operator/(const PadicInt& a, const PadicInt& b);
  PadicInt inverse() const;

  // Same value at a lower precision.
  PadicInt lowered(int precision) const;

  std::string to_string() const { return std::to_string(residue_); }

  friend bool operator==(const PadicInt& a, const PadicInt& b) noexcept = default;

 private:
  u64 prime_;
  int precision_;
  u64 residue_;
};

}  // namespace iwkit
