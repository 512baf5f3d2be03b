#include "iwkit/series.hpp"

#include <algorithm>
#include <string>

#include "iwkit/errors.hpp"
#include "iwkit/kernels.hpp"

namespace iwkit {

SeriesRing::SeriesRing(const Modulus& mod, int cap) : modulus(mod), degree_cap(cap) {
  if (cap < 0) throw InputError("series: degree cap must be >= 0");
}

IwasawaSeries::IwasawaSeries(const SeriesRing& ring) : ring_(ring) {}

IwasawaSeries::IwasawaSeries(const SeriesRing& ring, std::vector<u64> residues)
    : ring_(ring), coeffs_(std::move(residues)) {
  if (coeffs_.size() > static_cast<std::size_t>(ring_.degree_cap) + 1) {
    coeffs_.resize(static_cast<std::size_t>(ring_.degree_cap) + 1);
  }
  for (auto& c : coeffs_) c = ring_.modulus.reduce_unsigned(c);
  trim();
}

IwasawaSeries IwasawaSeries::from_integers(const SeriesRing& ring, std::span<const i64> coeffs) {
  std::vector<u64> r(coeffs.size());
  std::transform(coeffs.begin(), coeffs.end(), r.begin(), [&](i64 c) { return ring.modulus.reduce(c); });
  return IwasawaSeries(ring, std::move(r));
}

IwasawaSeries IwasawaSeries::constant(const SeriesRing& ring, i64 c) {
  return IwasawaSeries(ring, std::vector<u64>{ring.modulus.reduce(c)});
}

IwasawaSeries IwasawaSeries::monomial(const SeriesRing& ring, int k, u64 c) {
  if (k > ring.degree_cap) throw DegreeOverflow("series: monomial X^" + std::to_string(k), k);
  std::vector<u64> r(static_cast<std::size_t>(k) + 1, 0);
  r.back() = c;
  return IwasawaSeries(ring, std::move(r));
}

void IwasawaSeries::trim() noexcept {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int IwasawaSeries::valuation() const noexcept {
  int v = precision();
  for (u64 c : coeffs_) v = std::min(v, modulus().valuation(c));
  return v;
}

SeriesRing common_ring(const IwasawaSeries& a, const IwasawaSeries& b) {
  if (a.prime() != b.prime()) {
    throw InputError("series over different primes " + std::to_string(a.prime()) + " and " +
                     std::to_string(b.prime()));
  }
  return SeriesRing(Modulus(a.prime(), std::min(a.precision(), b.precision())),
                    std::min(a.degree_cap(), b.degree_cap()));
}

IwasawaSeries IwasawaSeries::operator-() const {
  IwasawaSeries r = *this;
  for (auto& c : r.coeffs_) c = modulus().neg(c);
  return r;
}

IwasawaSeries operator+(const IwasawaSeries& a, const IwasawaSeries& b) {
  const SeriesRing ring = common_ring(a, b);
  const Modulus& m = ring.modulus;
  const std::size_t len = std::min(std::max(a.coeffs_.size(), b.coeffs_.size()),
                                   static_cast<std::size_t>(ring.degree_cap) + 1);
  std::vector<u64> r(len);
  for (std::size_t i = 0; i < len; ++i) {
    r[i] = m.add(m.reduce_unsigned(a.residue(static_cast<int>(i))),
                 m.reduce_unsigned(b.residue(static_cast<int>(i))));
  }
  return IwasawaSeries(ring, std::move(r));
}

IwasawaSeries operator-(const IwasawaSeries& a, const IwasawaSeries& b) { return a + (-b); }

IwasawaSeries operator*(const IwasawaSeries& a, const IwasawaSeries& b) {
  const SeriesRing ring = common_ring(a, b);
  if (a.is_zero() || b.is_zero()) return IwasawaSeries(ring);
  const Modulus& mod = ring.modulus;
  const u64 m = mod.value();
  const std::size_t cap = static_cast<std::size_t>(ring.degree_cap);
  const std::size_t len = std::min(a.coeffs_.size() + b.coeffs_.size() - 1, cap + 1);

  std::vector<u64> bb(b.coeffs_.size());
  std::transform(b.coeffs_.begin(), b.coeffs_.end(), bb.begin(), [&](u64 c) { return mod.reduce_unsigned(c); });
  std::vector<u64> r(len, 0);
  for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
    const u64 w = mod.reduce_unsigned(a.coeffs_[i]);
    if (w == 0) continue;
    const std::size_t span_len = std::min(bb.size(), len - i);
    kernels::axpy_mod(std::span<u64>(r).subspan(i, span_len), bb, w, m);
  }
  return IwasawaSeries(ring, std::move(r));
}

IwasawaSeries IwasawaSeries::scaled(u64 residue) const {
  IwasawaSeries r = *this;
  kernels::scale_mod(r.coeffs_, modulus().reduce_unsigned(residue), modulus().value());
  r.trim();
  return r;
}

IwasawaSeries IwasawaSeries::scaled(const PadicInt& c) const {
  if (c.prime() != prime()) throw InputError("series: scalar over a different prime");
  const SeriesRing ring(Modulus(prime(), std::min(precision(), c.precision())), degree_cap());
  return IwasawaSeries(ring, coeffs_).scaled(c.residue());
}

IwasawaSeries IwasawaSeries::multiply_exact(const IwasawaSeries& other) const {
  if (!is_zero() && !other.is_zero()) {
    const int needed = degree() + other.degree();
    const int cap = std::min(degree_cap(), other.degree_cap());
    if (needed > cap) throw DegreeOverflow("series: exact product of degree " + std::to_string(needed), needed);
  }
  return *this * other;
}

IwasawaSeries IwasawaSeries::shifted_up(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<u64> r(static_cast<std::size_t>(k), 0);
  r.insert(r.end(), coeffs_.begin(), coeffs_.end());
  return IwasawaSeries(ring_, std::move(r));
}

IwasawaSeries IwasawaSeries::shifted_down(int k) const {
  const SeriesRing ring(modulus(), std::max(0, degree_cap() - k));
  if (static_cast<std::size_t>(k) >= coeffs_.size()) return IwasawaSeries(ring);
  return IwasawaSeries(ring, std::vector<u64>(coeffs_.begin() + k, coeffs_.end()));
}

IwasawaSeries IwasawaSeries::low_part(int k) const {
  const std::size_t len = std::min(coeffs_.size(), static_cast<std::size_t>(std::max(k, 0)));
  return IwasawaSeries(ring_, std::vector<u64>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(len)));
}

IwasawaSeries IwasawaSeries::divided_by_p_power(int k) const {
  if (k == 0) return *this;
  if (k > precision()) throw PrecisionError("series: cannot divide by p^" + std::to_string(k));
  const u64 pk = modulus().power(k);
  const SeriesRing ring(modulus().lowered(precision() - k), degree_cap());
  std::vector<u64> r(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] % pk != 0) {
      throw InputError("series: coefficient " + std::to_string(i) + " is not divisible by p^" + std::to_string(k));
    }
    r[i] = coeffs_[i] / pk;
  }
  return IwasawaSeries(ring, std::move(r));
}

IwasawaSeries IwasawaSeries::with_precision(int precision) const {
  return IwasawaSeries(SeriesRing(modulus().lowered(precision), degree_cap()), coeffs_);
}

IwasawaSeries IwasawaSeries::with_degree_cap(int cap) const {
  return IwasawaSeries(SeriesRing(modulus(), cap), coeffs_);
}

IwasawaSeries IwasawaSeries::inverse() const {
  const Modulus& mod = modulus();
  if (is_zero() || !mod.is_unit(coeffs_[0])) {
    throw InputError("series: inverse requires a unit constant term");
  }
  const std::size_t len = static_cast<std::size_t>(degree_cap()) + 1;
  const u64 c0_inv = mod.unit_inverse(coeffs_[0]);
  // Row-oriented recurrence: after step k, inv[k] is final and its
  // contribution to the later coefficients has been pushed forward.
  std::vector<u64> inv(len, 0), acc(len, 0);
  acc[0] = 1;
  for (std::size_t k = 0; k < len; ++k) {
    inv[k] = mod.mul(acc[k], c0_inv);
    if (inv[k] == 0 || k + 1 == len) continue;
    const std::size_t span_len = std::min(coeffs_.size() - 1, len - k - 1);
    if (span_len == 0) continue;
    kernels::axpy_mod(std::span<u64>(acc).subspan(k + 1, span_len),
                      std::span<const u64>(coeffs_).subspan(1, span_len), mod.neg(inv[k]), mod.value());
  }
  return IwasawaSeries(ring_, std::move(inv));
}

bool operator==(const IwasawaSeries& a, const IwasawaSeries& b) noexcept {
  return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
}

}  // namespace iwkit
