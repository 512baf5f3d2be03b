#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "iwkit/padic.hpp"

namespace iwkit {

// Dense row-major matrix over Z/p^N.
class ResidueMatrix {
 public:
  ResidueMatrix(const Modulus& mod, std::size_t rows, std::size_t cols);

  // Entries must share one prime and one precision; throws InputError otherwise.
  static ResidueMatrix from_padic(std::span<const std::vector<PadicInt>> rows);
  static ResidueMatrix from_integers(const Modulus& mod, const std::vector<std::vector<i64>>& rows);
  static ResidueMatrix identity(const Modulus& mod, std::size_t n);
  static ResidueMatrix block_diagonal(const Modulus& mod, std::span<const ResidueMatrix> blocks);

  const Modulus& modulus() const noexcept { return mod_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  u64& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  u64 operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  PadicInt entry(std::size_t r, std::size_t c) const { return PadicInt(mod_, (*this)(r, c)); }

  std::span<u64> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const u64> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

  // [this | other]; row counts must agree.
  ResidueMatrix hconcat(const ResidueMatrix& other) const;
  ResidueMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  ResidueMatrix transposed() const;

  friend ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b);
  friend ResidueMatrix operator+(const ResidueMatrix& a, const ResidueMatrix& b);
  friend bool operator==(const ResidueMatrix& a, const ResidueMatrix& b) noexcept;

  bool is_zero() const noexcept;

  // Gauss-Jordan over Z/p^N. Throws InputError unless square with unit determinant.
  ResidueMatrix inverse() const;
  u64 determinant() const;

 private:
  Modulus mod_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<u64> data_;
};

}  // namespace iwkit
