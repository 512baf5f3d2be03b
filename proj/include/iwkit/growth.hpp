#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "iwkit/lambda_modules.hpp"

namespace iwkit {

struct SelmerInvariants {
  long lambda = 0;
  long mu = 0;
};

// Levels c_i of (+)_i Lambda/Phi_{c_i}.
struct MWShape {
  std::vector<int> c_list;

  // max c_i, or 0 when empty.
  int default_n0() const noexcept;
};

// mu p^n + lambda n.
long ordinary_growth(u64 p, long lambda, long mu, int n);

// lambda + (p^n - p^{n-1}) mu - sum_{c_i <= n0} rank Lambda/(Phi_{c_i}, omega_{n0}).
// Throws DomainError unless n > n0 >= 0.
long final_increment(u64 p, const SelmerInvariants& inv, const MWShape& shape, int n, int n0);

// As final_increment with r_seq[k] summands Lambda/Phi_k.
long elliptic_increment(u64 p, const SelmerInvariants& inv, std::span<const long> r_seq, int n, int n0);

// Admissible (r_k^+, r_k^-) for one k.
struct RkLevel {
  int k = 0;
  long e = 0;
  long a = 0;
  std::vector<std::pair<long, long>> pairs;  // increasing r^+
};

// k = 0: the single pair (e_0, e_0). k > 0: a_k = max(0, e_k - 1) and all
// pairs with min >= a_k, sum e_k + a_k. Throws InputError on negative e_k.
std::vector<RkLevel> rk_solver(std::span<const long> e);

// e_0 = rank_0, e_n = (rank_n - rank_{n-1}) / (p^n - p^{n-1}); throws
// InputError when a quotient is not a nonnegative integer.
std::vector<long> ledger_from_ranks(u64 p, std::span<const long> ranks);

struct GrowthLevel {
  int n = 0;
  std::optional<long> sha_length;  // none when Sha_n is infinite
  std::optional<long> increment;  // s_n - s_{n-1}, n >= 1
  std::optional<long> predicted;  // final-increment formula, n >= 1
  bool matches = false;
};

struct GrowthReport {
  u64 prime = 0;
  long lambda = 0;
  long mu = 0;
  int n0 = 0;
  std::vector<GrowthLevel> levels;  // n = 0..n_max
  // Least s with observed == predicted on every level in (s, n_max].
  std::optional<int> stabilization_level;
  // Least n0' for which the formula with n0' holds on every level in (n0', n_max].
  std::optional<int> minimal_n0;
  std::vector<int> non_finite_levels;
  // Every level beyond n0 agrees.
  bool holds_past_n0 = false;
};

// Sha_n = coker(M/omega_n -> S/omega_n) for M = (+) Lambda/Phi_{c_i}. Each
// summand Lambda/Phi_c embeds into the first generator f of S divisible by
// Phi_c that has not yet received level c, via multiplication by f/Phi_c.
// Throws InputError if some summand finds no such generator.
GrowthReport synthetic_tower_verify(const ElementaryModule& selmer, const MWShape& shape, int n_max,
                                    std::optional<int> n0 = std::nullopt, int margin = kDefaultMargin);

}  // namespace iwkit
