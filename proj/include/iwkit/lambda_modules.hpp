#pragma once

#include <optional>
#include <vector>

#include "iwkit/matrix.hpp"
#include "iwkit/series.hpp"
#include "iwkit/smith.hpp"

namespace iwkit {

// The torsion Lambda-module  (+)_i Lambda/(f_i), optionally plus a finite
// Z_p-module on which Gamma acts trivially. The finite part models the gap
// between a module and its elementary normal form.
class ElementaryModule {
 public:
  // Generators must be nonzero mod p^N and share the ring's prime.
  ElementaryModule(const SeriesRing& ring, std::vector<IwasawaSeries> generators);
  // (+)_i Lambda/Phi_{c_i}.
  static ElementaryModule mw_shaped(const SeriesRing& ring, std::span<const int> levels);

  const SeriesRing& ring() const noexcept { return ring_; }
  u64 prime() const noexcept { return ring_.modulus.prime(); }
  std::span<const IwasawaSeries> generators() const noexcept { return generators_; }
  const std::optional<ResidueMatrix>& finite_part() const noexcept { return finite_part_; }

  // Adds a finite summand given by a presentation matrix; throws InputError
  // if it presents a module of positive rank.
  ElementaryModule with_finite_part(const ResidueMatrix& presentation, int margin = kDefaultMargin) const;

  int mu() const;
  int lambda() const;
  IwasawaSeries characteristic_series() const;

  // The levels c_i when every generator equals some Phi_{c_i}.
  std::optional<std::vector<int>> mw_levels() const;
  bool is_mw_shaped() const { return mw_levels().has_value(); }

  // Generators concatenated; finite parts combine block-diagonally.
  ElementaryModule direct_sum(const ElementaryModule& other) const;

 private:
  SeriesRing ring_;
  std::vector<IwasawaSeries> generators_;
  std::optional<ResidueMatrix> finite_part_;
};

// Multiplication by f on Z_p[X]/omega_n in the monomial basis (p^n x p^n).
ResidueMatrix multiplication_matrix(const IwasawaSeries& f, int n);

// Presentation of M/omega_n M as a Z_p-module: block diagonal, one
// multiplication block per generator, then the finite part.
ResidueMatrix quotient_presentation(const ElementaryModule& m, int n);

// rank_{Z_p} Lambda/(Phi_c, omega_n): 1 for c = 0, deg Phi_c for c <= n, else 0.
long rank_phi_omega(u64 p, int c, int n);

// lambda + (p^n - p^{n-1}) mu.
long nabla_closed(u64 p, long lambda, long mu, int n);

// Kobayashi rank len(ker pi_n) - len(coker pi_n) + rank N_{n-1} of the
// projection pi_n : M/omega_n -> M/omega_{n-1}, from elementary divisors of
// explicit matrices. nullopt when the kernel or cokernel is infinite.
std::optional<long> nabla_brute(const ElementaryModule& m, int n, int margin = kDefaultMargin);

// Checks nabla(M' (+) M'') = nabla(M') + nabla(M'') at level n. Returns false
// if exactly two of the three are defined (the third must be), nullopt if
// fewer than two are.
std::optional<bool> nabla_additivity_check(const ElementaryModule& first, const ElementaryModule& second, int n,
                                           int margin = kDefaultMargin);

struct TowerLevel {
  int n = 0;
  int zp_rank = 0;        // of M/omega_n
  int finite_length = 0;  // torsion length of M/omega_n
  std::optional<long> nabla;
  long closed_form = 0;
  bool matches = false;
};

struct TowerReport {
  u64 prime = 0;
  int lambda = 0;
  int mu = 0;
  std::vector<TowerLevel> levels;  // n = 1..n_max
  // Least s with nabla == closed form on every level in (s, n_max]; none if
  // the top level disagrees.
  std::optional<int> stabilization_level;
  // Present when every M/omega_n (n = 0..n_max) is finite: s_0..s_{n_max}.
  std::optional<std::vector<int>> total_lengths;
  // nabla_n == s_n - s_{n-1} on every level, when total_lengths is present.
  std::optional<bool> finite_difference_law;
};

// Levels are independent and evaluated concurrently; the result does not
// depend on scheduling.
TowerReport tower_report(const ElementaryModule& m, int n_max, int margin = kDefaultMargin);

}  // namespace iwkit
