#include "iwkit/cyclotomic.hpp"

#include <algorithm>

#include "iwkit/errors.hpp"
#include "iwkit/iwasawa_algebra.hpp"
#include "iwkit/kernels.hpp"
#include "iwkit/matrix.hpp"

namespace iwkit {
namespace {

std::shared_ptr<const std::vector<u64>> phi_residues(const Modulus& mod, int level) {
  const long deg = phi_degree(mod.prime(), level);
  const IwasawaSeries f = phi(SeriesRing(mod, static_cast<int>(deg)), level);
  return std::make_shared<const std::vector<u64>>(f.residues().begin(), f.residues().end());
}

void reduce_in_place(const Modulus& mod, std::vector<u64>& a, std::span<const u64> phi) {
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = a.size(); i-- > d;) {
    const u64 c = a[i];
    if (c == 0) continue;
    kernels::axpy_mod(std::span<u64>(a).subspan(i - d, d + 1), phi, mod.neg(c), mod.value());
  }
  a.resize(d, 0);
}

void check_compatible(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (!(a.modulus() == b.modulus()) || a.level() != b.level()) {
    throw InputError("cyclotomic: operands live in different rings");
  }
}

}  // namespace

CyclotomicElement::CyclotomicElement(const Modulus& mod, int level, std::vector<u64> coeffs)
    : mod_(mod), level_(level), coeffs_(std::move(coeffs)) {
  if (level < 0) throw InputError("cyclotomic: level must be >= 0");
  phi_ = phi_residues(mod, level);
  for (auto& c : coeffs_) c = mod_.reduce_unsigned(c);
  reduce_in_place(mod_, coeffs_, *phi_);
}

bool CyclotomicElement::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](u64 c) { return c == 0; });
}

int CyclotomicElement::min_valuation() const noexcept {
  int v = mod_.precision();
  for (u64 c : coeffs_) v = std::min(v, mod_.valuation(c));
  return v;
}

CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b) {
  check_compatible(a, b);
  CyclotomicElement r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.mod_.add(a.coeffs_[i], b.coeffs_[i]);
  r.truncated_ = a.truncated_ || b.truncated_;
  return r;
}

CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b) {
  check_compatible(a, b);
  CyclotomicElement r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.mod_.sub(a.coeffs_[i], b.coeffs_[i]);
  r.truncated_ = a.truncated_ || b.truncated_;
  return r;
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
  check_compatible(a, b);
  const std::size_t d = a.coeffs_.size();
  std::vector<u64> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coeffs_[i] != 0) {
      kernels::axpy_mod(std::span<u64>(prod).subspan(i, d), b.coeffs_, a.coeffs_[i], a.mod_.value());
    }
  }
  reduce_in_place(a.mod_, prod, *a.phi_);
  CyclotomicElement r = a;
  r.coeffs_ = std::move(prod);
  r.truncated_ = a.truncated_ || b.truncated_;
  return r;
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) noexcept {
  return a.mod_ == b.mod_ && a.level_ == b.level_ && a.coeffs_ == b.coeffs_;
}

int CyclotomicElement::norm_valuation(int margin) const {
  const std::size_t d = coeffs_.size();
  ResidueMatrix mult(mod_, d, d);
  std::vector<u64> column = coeffs_;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) mult(i, j) = column[i];
    column.insert(column.begin(), 0);  // times X
    reduce_in_place(mod_, column, *phi_);
  }
  const SnfResult s = snf(mult, margin);
  if (s.rank_indicators > 0 || !s.transform_valid) {
    throw PrecisionError("cyclotomic: norm valuation not determined at precision " + std::to_string(mod_.precision()));
  }
  return s.torsion_length();
}

CyclotomicElement cyclo_eval(const IwasawaSeries& f, int level) {
  CyclotomicElement r(f.modulus(), level, std::vector<u64>(f.residues().begin(), f.residues().end()));
  if (level >= 1 && !f.is_polynomial()) {
    // A dropped term a_i X^i has valuation >= i / deg Phi_m at zeta - 1.
    const long reach = static_cast<long>(f.degree_cap() + 1);
    if (reach < static_cast<long>(f.precision()) * r.degree()) r.mark_truncated();
  }
  return r;
}

}  // namespace iwkit
