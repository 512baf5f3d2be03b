#pragma once

#include <map>
#include <utility>
#include <vector>

#include "iwkit/cyclotomic.hpp"
#include "iwkit/matrix.hpp"
#include "iwkit/series.hpp"
#include "iwkit/smith.hpp"

namespace iwkit {

// Frobenius data in a Hodge-compatible basis: C_p in GL_{2g}(Z_p), together
// with the series ring every derived matrix lives in.
class FrobeniusData {
 public:
  // Throws InputError unless cp is 2g x 2g with det a unit mod p.
  FrobeniusData(const SeriesRing& ring, int g, const ResidueMatrix& cp);
  // g = 1, C_p = (0, -1; 1, 0).
  static FrobeniusData elliptic(const SeriesRing& ring);

  int g() const noexcept { return g_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(2 * g_); }
  u64 prime() const noexcept { return ring_.modulus.prime(); }
  const SeriesRing& ring() const noexcept { return ring_; }
  const ResidueMatrix& cp() const noexcept { return cp_; }
  const ResidueMatrix& cp_inverse() const noexcept { return cp_inv_; }

  // Top-left and bottom-right g x g blocks vanish.
  bool block_anti_diagonal() const noexcept;

 private:
  SeriesRing ring_;
  int g_;
  ResidueMatrix cp_;
  ResidueMatrix cp_inv_;
};

bool is_block_anti_diagonal(const ResidueMatrix& m);

// p^{-d} * entries, square, with d minimal: d > 0 only if some entry is not
// divisible by p. Normalizing divides by p and so lowers the precision.
class LogMatrix {
 public:
  LogMatrix(std::size_t dim, std::vector<IwasawaSeries> entries, int denom_exponent = 0);
  static LogMatrix identity(const SeriesRing& ring, std::size_t dim);
  static LogMatrix constant(const SeriesRing& ring, const ResidueMatrix& m, int denom_exponent = 0);

  std::size_t dim() const noexcept { return dim_; }
  int denom_exponent() const noexcept { return denom_; }
  const IwasawaSeries& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  std::span<const IwasawaSeries> entries() const noexcept { return entries_; }
  int precision() const noexcept;

  // Exact product; throws DegreeOverflow if an entry exceeds the cap.
  friend LogMatrix operator*(const LogMatrix& a, const LogMatrix& b);
  friend bool operator==(const LogMatrix& a, const LogMatrix& b) noexcept;

  // Determinant of the integral part; the matrix's determinant is this times
  // p^{-dim * d}.
  IwasawaSeries entries_determinant() const;
  // Determinant of the submatrix on 0-based rows and columns.
  IwasawaSeries entries_minor(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

 private:
  void normalize();

  std::size_t dim_;
  std::vector<IwasawaSeries> entries_;
  int denom_;
};

// C_{phi,p} = C_p diag(I_g, p^{-1} I_g).
LogMatrix c_phi(const FrobeniusData& f);
// C_{p,n} = diag(I_g, Phi_n I_g) C_p^{-1}, n >= 1.
LogMatrix c_n(const FrobeniusData& f, int n);
// H_{p,n} = C_{p,n} ... C_{p,1}; the identity for n = 0.
LogMatrix h_n(const FrobeniusData& f, int n);
// M_{p,n} = C_{phi,p}^{n+1} H_{p,n}.
LogMatrix m_n(const FrobeniusData& f, int n);

// Sorted 1-based index set.
using IndexSet = std::vector<int>;

// All g-element subsets of {1..2g} in lexicographic order.
std::vector<IndexSet> index_sets(int g);

struct MinorTable {
  int n = 0;
  int g = 0;
  std::map<std::pair<IndexSet, IndexSet>, IwasawaSeries> values;

  const IwasawaSeries& at(const IndexSet& rows, const IndexSet& cols) const { return values.at({rows, cols}); }
};

// (I, J)-minors of H_{p,n} for all g-subsets I, J; g <= 3.
MinorTable minors(const FrobeniusData& f, int n);

struct CharacterCondition {
  bool nonzero = false;
  int min_valuation = 0;
  CyclotomicElement value;
};

// Evaluates sum_J H_{I0,J,n} col[J] at zeta_{p^m} - 1, m = theta_level, with
// col given in index_sets(g) order and I0 = {1..g}. A sum that vanishes mod p^N
// gives (false, N); one whose every coefficient lies within margin of N
// throws PrecisionError.
CharacterCondition condition_character(const FrobeniusData& f, int n, std::span<const IwasawaSeries> col_values,
                                       int theta_level, int margin = kDefaultMargin);

// For B_p = diag(b11, b22): every vector keeps the vanishing pattern of its
// first g and last g components, and B_p C_p B_p^{-1} stays block
// anti-diagonal. Requires f block anti-diagonal and invertible blocks.
bool change_basis_check(const FrobeniusData& f, const ResidueMatrix& b11, const ResidueMatrix& b22,
                        std::span<const std::vector<IwasawaSeries>> vectors);

}  // namespace iwkit
