#include "iwkit/padic.hpp"

#include <algorithm>

#include "iwkit/errors.hpp"

namespace iwkit {

using u128 = unsigned __int128;
using i128 = __int128;

bool is_odd_prime(u64 n) noexcept {
  if (n < 3 || n % 2 == 0) return false;
  for (u64 d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Modulus::Modulus(u64 prime, int precision) : prime_(prime), precision_(precision), value_(1) {
  if (!is_odd_prime(prime)) {
    throw InputError("modulus: " + std::to_string(prime) + " is not an odd prime");
  }
  if (precision < 1) {
    throw InputError("modulus: precision must be >= 1");
  }
  for (int k = 0; k < precision; ++k) {
    if (value_ > kMaxModulus / prime) {
      throw InputError("modulus: " + std::to_string(prime) + "^" + std::to_string(precision) +
                       " exceeds the supported range (2^62)");
    }
    value_ *= prime;
  }
}

u64 Modulus::power(int k) const {
  if (k < 0 || k > precision_) {
    throw InputError("modulus: exponent " + std::to_string(k) + " outside [0, precision]");
  }
  u64 r = 1;
  for (int i = 0; i < k; ++i) r *= prime_;
  return r;
}

u64 Modulus::reduce(i64 x) const noexcept {
  if (x >= 0) return static_cast<u64>(x) % value_;
  const u64 r = static_cast<u64>(-(x + 1)) % value_;  // avoids overflow at INT64_MIN
  return value_ - 1 - r;
}

int Modulus::valuation(u64 a) const noexcept {
  if (a == 0) return precision_;
  int v = 0;
  while (a % prime_ == 0) {
    a /= prime_;
    ++v;
  }
  return v;
}

u64 Modulus::unit_inverse(u64 a) const {
  if (!is_unit(a)) {
    throw InputError("modulus: " + std::to_string(a) + " is not a unit mod " + std::to_string(prime_));
  }
  i128 r0 = static_cast<i128>(value_), r1 = static_cast<i128>(a % value_);
  i128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    const i128 q = r0 / r1;
    i128 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  i128 inv = t0 % static_cast<i128>(value_);
  if (inv < 0) inv += static_cast<i128>(value_);
  return static_cast<u64>(inv);
}

u64 Modulus::parse_decimal(std::string_view text) const {
  bool negative = false;
  std::size_t pos = 0;
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw InputError("expected a decimal integer, got '" + std::string(text) + "'");
  }
  u64 r = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') {
      throw InputError("expected a decimal integer, got '" + std::string(text) + "'");
    }
    r = static_cast<u64>((static_cast<u128>(r) * 10 + static_cast<u64>(c - '0')) % value_);
  }
  return negative ? neg(r) : r;
}

Modulus Modulus::lowered(int precision) const {
  if (precision > precision_) {
    throw InputError("modulus: cannot raise precision from " + std::to_string(precision_) + " to " +
                     std::to_string(precision));
  }
  return Modulus(prime_, precision);
}

PadicInt::PadicInt(u64 prime, int precision, i64 value)
    : prime_(prime), precision_(precision), residue_(Modulus(prime, precision).reduce(value)) {}

PadicInt::PadicInt(const Modulus& mod, u64 residue)
    : prime_(mod.prime()), precision_(mod.precision()), residue_(mod.reduce_unsigned(residue)) {}

PadicInt PadicInt::parse(u64 prime, int precision, std::string_view decimal) {
  const Modulus mod(prime, precision);
  return PadicInt(mod, mod.parse_decimal(decimal));
}

int PadicInt::valuation() const noexcept {
  if (residue_ == 0) return precision_;
  int v = 0;
  for (u64 a = residue_; a % prime_ == 0; a /= prime_) ++v;
  return v;
}

namespace {

Modulus common(const PadicInt& a, const PadicInt& b) {
  if (a.prime() != b.prime()) {
    throw InputError("p-adic arithmetic on different primes " + std::to_string(a.prime()) + " and " +
                     std::to_string(b.prime()));
  }
  return Modulus(a.prime(), std::min(a.precision(), b.precision()));
}

}  // namespace

PadicInt PadicInt::operator-() const { return PadicInt(modulus(), modulus().neg(residue_)); }

PadicInt operator+(const PadicInt& a, const PadicInt& b) {
  const Modulus m = common(a, b);
  return PadicInt(m, m.add(m.reduce_unsigned(a.residue_), m.reduce_unsigned(b.residue_)));
}

PadicInt operator-(const PadicInt& a, const PadicInt& b) {
  const Modulus m = common(a, b);
  return PadicInt(m, m.sub(m.reduce_unsigned(a.residue_), m.reduce_unsigned(b.residue_)));
}

PadicInt operator*(const PadicInt& a, const PadicInt& b) {
  const Modulus m = common(a, b);
  return PadicInt(m, m.mul(m.reduce_unsigned(a.residue_), m.reduce_unsigned(b.residue_)));
}

PadicInt operator/(const PadicInt& a, const PadicInt& b) {
  const Modulus m = common(a, b);
  return PadicInt(m, m.mul(m.reduce_unsigned(a.residue_), m.unit_inverse(m.reduce_unsigned(b.residue_))));
}

PadicInt PadicInt::inverse() const {
  const Modulus m = modulus();
  return PadicInt(m, m.unit_inverse(residue_));
}

PadicInt PadicInt::lowered(int precision) const {
  const Modulus m = modulus().lowered(precision);
  return PadicInt(m, residue_);
}

}  // namespace iwkit
