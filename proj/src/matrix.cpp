#include "iwkit/matrix.hpp"

#include <algorithm>
#include <utility>

#include "iwkit/errors.hpp"
#include "iwkit/kernels.hpp"

namespace iwkit {

ResidueMatrix::ResidueMatrix(const Modulus& mod, std::size_t rows, std::size_t cols)
    : mod_(mod), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

ResidueMatrix ResidueMatrix::from_padic(std::span<const std::vector<PadicInt>> rows) {
  if (rows.empty() || rows.front().empty()) {
    throw InputError("matrix: empty input");
  }
  const PadicInt& first = rows.front().front();
  const Modulus mod(first.prime(), first.precision());
  ResidueMatrix m(mod, rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw InputError("matrix: ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) {
      const PadicInt& x = rows[r][c];
      if (x.prime() != mod.prime()) throw InputError("matrix: entries over different primes");
      if (x.precision() != mod.precision()) throw InputError("matrix: entries at different precisions");
      m(r, c) = x.residue();
    }
  }
  return m;
}

ResidueMatrix ResidueMatrix::from_integers(const Modulus& mod, const std::vector<std::vector<i64>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  ResidueMatrix m(mod, rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw InputError("matrix: ragged rows");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = mod.reduce(rows[r][c]);
  }
  return m;
}

ResidueMatrix ResidueMatrix::identity(const Modulus& mod, std::size_t n) {
  ResidueMatrix m(mod, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ResidueMatrix ResidueMatrix::block_diagonal(const Modulus& mod, std::span<const ResidueMatrix> blocks) {
  std::size_t nr = 0, nc = 0;
  for (const auto& b : blocks) {
    if (!(b.modulus() == mod)) throw InputError("matrix: block over a different modulus");
    nr += b.rows();
    nc += b.cols();
  }
  ResidueMatrix m(mod, nr, nc);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      std::copy(b.row(r).begin(), b.row(r).end(), m.row(r0 + r).begin() + static_cast<std::ptrdiff_t>(c0));
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

ResidueMatrix ResidueMatrix::hconcat(const ResidueMatrix& other) const {
  if (rows_ != other.rows_) throw InputError("matrix: hconcat row mismatch");
  if (!(mod_ == other.mod_)) throw InputError("matrix: hconcat modulus mismatch");
  ResidueMatrix m(mod_, rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto dst = m.row(r);
    std::copy(row(r).begin(), row(r).end(), dst.begin());
    std::copy(other.row(r).begin(), other.row(r).end(), dst.begin() + static_cast<std::ptrdiff_t>(cols_));
  }
  return m;
}

ResidueMatrix ResidueMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw InputError("matrix: submatrix out of range");
  ResidueMatrix m(mod_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  }
  return m;
}

ResidueMatrix ResidueMatrix::transposed() const {
  ResidueMatrix t(mod_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix: product shape mismatch");
  if (!(a.mod_ == b.mod_)) throw InputError("matrix: product modulus mismatch");
  ResidueMatrix c(a.mod_, a.rows_, b.cols_);
  const u64 m = a.mod_.value();
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (const u64 w = a(i, k); w != 0) kernels::axpy_mod(c.row(i), b.row(k), w, m);
    }
  }
  return c;
}

ResidueMatrix operator+(const ResidueMatrix& a, const ResidueMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix: sum shape mismatch");
  if (!(a.mod_ == b.mod_)) throw InputError("matrix: sum modulus mismatch");
  ResidueMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.mod_.add(a.data_[i], b.data_[i]);
  return c;
}

bool operator==(const ResidueMatrix& a, const ResidueMatrix& b) noexcept {
  return a.mod_ == b.mod_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool ResidueMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](u64 x) { return x == 0; });
}

ResidueMatrix ResidueMatrix::inverse() const {
  if (rows_ != cols_) throw InputError("matrix: inverse of a non-square matrix");
  const std::size_t n = rows_;
  const u64 m = mod_.value();
  ResidueMatrix work = hconcat(identity(mod_, n));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r) {
      if (mod_.is_unit(work(r, col))) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) throw InputError("matrix: not invertible over Z_p (determinant not a unit)");
    if (pivot != col) std::swap_ranges(work.row(pivot).begin(), work.row(pivot).end(), work.row(col).begin());
    kernels::scale_mod(work.row(col), mod_.unit_inverse(work(col, col)), m);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work(r, col) == 0) continue;
      kernels::axpy_mod(work.row(r), work.row(col), mod_.neg(work(r, col)), m);
    }
  }
  return work.submatrix(0, n, n, n);
}

u64 ResidueMatrix::determinant() const {
  if (rows_ != cols_) throw InputError("matrix: determinant of a non-square matrix");
  const std::size_t n = rows_;
  const u64 m = mod_.value();
  ResidueMatrix work = *this;
  u64 det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    // Pivot on the entry of least valuation; over a local ring the remaining
    // entries in the column are multiples of it.
    std::size_t pivot = n;
    int best = mod_.precision();
    for (std::size_t r = col; r < n; ++r) {
      const int v = mod_.valuation(work(r, col));
      if (v < best) {
        best = v;
        pivot = r;
      }
    }
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap_ranges(work.row(pivot).begin(), work.row(pivot).end(), work.row(col).begin());
      det = mod_.neg(det);
    }
    const u64 piv = work(col, col);
    det = mod_.mul(det, piv);
    const u64 scale = mod_.power(best);
    const u64 unit_inv = mod_.unit_inverse(piv / scale);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (work(r, col) == 0) continue;
      const u64 factor = mod_.mul(work(r, col) / scale, unit_inv);
      kernels::axpy_mod(work.row(r), work.row(col), mod_.neg(factor), m);
    }
  }
  return det;
}

}  // namespace iwkit
