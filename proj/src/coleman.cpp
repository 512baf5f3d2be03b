#include "iwkit/coleman.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "iwkit/errors.hpp"
#include "iwkit/iwasawa_algebra.hpp"

namespace iwkit {

FrobeniusData::FrobeniusData(const SeriesRing& ring, int g, const ResidueMatrix& cp)
    : ring_(ring), g_(g), cp_(cp), cp_inv_(cp) {
  if (g < 1) throw InputError("frobenius: g must be >= 1");
  if (cp.rows() != dim() || cp.cols() != dim()) throw InputError("frobenius: C_p must be 2g x 2g");
  if (!(cp.modulus() == ring.modulus)) throw InputError("frobenius: C_p over a different modulus than the ring");
  if (!ring.modulus.is_unit(cp.determinant())) throw InputError("frobenius: det C_p is not a unit mod p");
  cp_inv_ = cp.inverse();
}

FrobeniusData FrobeniusData::elliptic(const SeriesRing& ring) {
  return FrobeniusData(ring, 1, ResidueMatrix::from_integers(ring.modulus, {{0, -1}, {1, 0}}));
}

bool is_block_anti_diagonal(const ResidueMatrix& m) {
  const std::size_t g = m.rows() / 2;
  for (std::size_t r = 0; r < g; ++r) {
    for (std::size_t c = 0; c < g; ++c) {
      if (m(r, c) != 0 || m(g + r, g + c) != 0) return false;
    }
  }
  return true;
}

bool FrobeniusData::block_anti_diagonal() const noexcept { return is_block_anti_diagonal(cp_); }

LogMatrix::LogMatrix(std::size_t dim, std::vector<IwasawaSeries> entries, int denom_exponent)
    : dim_(dim), entries_(std::move(entries)), denom_(denom_exponent) {
  if (dim == 0 || entries_.size() != dim * dim) throw InputError("log matrix: entry count is not dim^2");
  if (denom_exponent < 0) throw InputError("log matrix: negative denominator exponent");
  normalize();
}

LogMatrix LogMatrix::identity(const SeriesRing& ring, std::size_t dim) {
  return constant(ring, ResidueMatrix::identity(ring.modulus, dim));
}

LogMatrix LogMatrix::constant(const SeriesRing& ring, const ResidueMatrix& m, int denom_exponent) {
  if (m.rows() != m.cols()) throw InputError("log matrix: not square");
  std::vector<IwasawaSeries> e;
  e.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) e.emplace_back(ring, std::vector<u64>{m(r, c)});
  }
  return LogMatrix(m.rows(), std::move(e), denom_exponent);
}

int LogMatrix::precision() const noexcept {
  int prec = entries_.front().precision();
  for (const auto& e : entries_) prec = std::min(prec, e.precision());
  return prec;
}

void LogMatrix::normalize() {
  while (denom_ > 0) {
    bool divisible = true;
    for (const auto& e : entries_) {
      if (e.valuation() < 1) {
        divisible = false;
        break;
      }
    }
    if (!divisible || precision() <= 1) return;
    for (auto& e : entries_) e = e.divided_by_p_power(1);
    --denom_;
  }
}

LogMatrix operator*(const LogMatrix& a, const LogMatrix& b) {
  if (a.dim_ != b.dim_) throw InputError("log matrix: dimension mismatch");
  const std::size_t n = a.dim_;
  std::vector<IwasawaSeries> e;
  e.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      IwasawaSeries acc(common_ring(a(r, 0), b(0, c)));
      for (std::size_t k = 0; k < n; ++k) acc = acc + a(r, k).multiply_exact(b(k, c));
      e.push_back(std::move(acc));
    }
  }
  return LogMatrix(n, std::move(e), a.denom_ + b.denom_);
}

bool operator==(const LogMatrix& a, const LogMatrix& b) noexcept {
  return a.dim_ == b.dim_ && a.denom_ == b.denom_ && a.entries_ == b.entries_;
}

IwasawaSeries LogMatrix::entries_minor(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  const std::size_t k = rows.size();
  if (cols.size() != k || k == 0 || k > 16) throw InputError("log matrix: bad minor shape");
  // dp[mask]: signed sum over placements of the first popcount(mask) rows into
  // the columns of mask.
  std::vector<std::optional<IwasawaSeries>> dp(std::size_t{1} << k);
  dp[0] = IwasawaSeries::constant(entries_.front().ring(), 1);
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (!dp[mask]) continue;
    const std::size_t r = static_cast<std::size_t>(std::popcount(mask));
    if (r == k) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (mask & (std::size_t{1} << j)) continue;
      const IwasawaSeries& entry = (*this)(rows[r], cols[j]);
      if (entry.is_zero()) continue;
      IwasawaSeries term = dp[mask]->multiply_exact(entry);
      if (std::popcount(mask >> j) % 2 == 1) term = -term;
      auto& slot = dp[mask | (std::size_t{1} << j)];
      slot = slot ? *slot + term : term;
    }
  }
  const auto& full = dp.back();
  return full ? *full : IwasawaSeries(entries_.front().ring());
}

IwasawaSeries LogMatrix::entries_determinant() const {
  std::vector<std::size_t> idx(dim_);
  for (std::size_t i = 0; i < dim_; ++i) idx[i] = i;
  return entries_minor(idx, idx);
}

LogMatrix c_phi(const FrobeniusData& f) {
  ResidueMatrix m = f.cp();
  const Modulus& mod = m.modulus();
  for (std::size_t r = 0; r < f.dim(); ++r) {
    for (std::size_t c = 0; c < static_cast<std::size_t>(f.g()); ++c) m(r, c) = mod.mul(m(r, c), mod.prime());
  }
  return LogMatrix::constant(f.ring(), m, 1);
}

LogMatrix c_n(const FrobeniusData& f, int n) {
  if (n < 1) throw DomainError("C_{p,n} needs n >= 1");
  const IwasawaSeries phi_n = phi(f.ring(), n);
  const ResidueMatrix& inv = f.cp_inverse();
  std::vector<IwasawaSeries> e;
  for (std::size_t r = 0; r < f.dim(); ++r) {
    for (std::size_t c = 0; c < f.dim(); ++c) {
      if (r < static_cast<std::size_t>(f.g())) {
        e.emplace_back(f.ring(), std::vector<u64>{inv(r, c)});
      } else {
        e.push_back(phi_n.scaled(inv(r, c)));
      }
    }
  }
  return LogMatrix(f.dim(), std::move(e));
}

LogMatrix h_n(const FrobeniusData& f, int n) {
  if (n < 0) throw DomainError("H_{p,n} needs n >= 0");
  LogMatrix h = LogMatrix::identity(f.ring(), f.dim());
  for (int k = 1; k <= n; ++k) h = c_n(f, k) * h;
  return h;
}

LogMatrix m_n(const FrobeniusData& f, int n) {
  if (n < 1) throw DomainError("M_{p,n} needs n >= 1");
  const LogMatrix cphi = c_phi(f);
  LogMatrix m = h_n(f, n);
  for (int k = 0; k <= n; ++k) m = cphi * m;
  return m;
}

std::vector<IndexSet> index_sets(int g) {
  std::vector<IndexSet> out;
  const int n = 2 * g;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != g) continue;
    IndexSet s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.push_back(i + 1);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<std::size_t> zero_based(const IndexSet& s) {
  std::vector<std::size_t> out;
  for (int i : s) out.push_back(static_cast<std::size_t>(i - 1));
  return out;
}

}  // namespace

MinorTable minors(const FrobeniusData& f, int n) {
  if (f.g() > 3) throw InputError("minors: g must be <= 3");
  const LogMatrix h = h_n(f, n);
  MinorTable t;
  t.n = n;
  t.g = f.g();
  const auto sets = index_sets(f.g());
  for (const auto& i : sets) {
    for (const auto& j : sets) t.values.emplace(std::make_pair(i, j), h.entries_minor(zero_based(i), zero_based(j)));
  }
  return t;
}

CharacterCondition condition_character(const FrobeniusData& f, int n, std::span<const IwasawaSeries> col_values,
                                       int theta_level, int margin) {
  const auto sets = index_sets(f.g());
  if (col_values.size() != sets.size()) {
    throw InputError("condition: expected " + std::to_string(sets.size()) + " column values");
  }
  const LogMatrix h = h_n(f, n);
  IndexSet i0;
  for (int i = 1; i <= f.g(); ++i) i0.push_back(i);
  const auto rows = zero_based(i0);
  IwasawaSeries sum(f.ring());
  for (std::size_t k = 0; k < sets.size(); ++k) {
    if (col_values[k].is_zero()) continue;
    sum = sum + h.entries_minor(rows, zero_based(sets[k])).multiply_exact(col_values[k]);
  }
  CyclotomicElement value = cyclo_eval(sum, theta_level);
  const int prec = value.modulus().precision();
  if (value.is_zero()) return {false, prec, std::move(value)};
  const int v = value.min_valuation();
  if (v >= prec - margin) {
    throw PrecisionError("condition: character value has valuation " + std::to_string(v) + " within " +
                         std::to_string(margin) + " of precision " + std::to_string(prec));
  }
  return {true, v, std::move(value)};
}

bool change_basis_check(const FrobeniusData& f, const ResidueMatrix& b11, const ResidueMatrix& b22,
                        std::span<const std::vector<IwasawaSeries>> vectors) {
  if (!f.block_anti_diagonal()) throw InputError("change of basis: C_p is not block anti-diagonal");
  const std::size_t g = static_cast<std::size_t>(f.g());
  for (const ResidueMatrix* b : {&b11, &b22}) {
    if (b->rows() != g || b->cols() != g) throw InputError("change of basis: blocks must be g x g");
    if (!(b->modulus() == f.cp().modulus())) throw InputError("change of basis: block over a different modulus");
  }
  const ResidueMatrix blocks[] = {b11, b22};
  const ResidueMatrix bp = ResidueMatrix::block_diagonal(b11.modulus(), blocks);
  const ResidueMatrix bp_inv = bp.inverse();  // throws if a block is singular
  bool ok = is_block_anti_diagonal(bp * f.cp() * bp_inv);

  for (const auto& v : vectors) {
    if (v.size() != 2 * g) throw InputError("change of basis: vectors must have 2g components");
    for (std::size_t half = 0; half < 2; ++half) {
      const ResidueMatrix& b = half == 0 ? b11 : b22;
      const std::size_t off = half * g;
      bool before = true, after = true;
      for (std::size_t i = 0; i < g; ++i) {
        before = before && v[off + i].is_zero();
        IwasawaSeries w(v[off].ring());
        for (std::size_t k = 0; k < g; ++k) w = w + v[off + k].scaled(b(i, k));
        after = after && w.is_zero();
      }
      ok = ok && before == after;
    }
  }
  return ok;
}

}  // namespace iwkit
