#include "iwkit/growth.hpp"

#include <algorithm>
#include <future>

#include "iwkit/errors.hpp"
#include "iwkit/iwasawa_algebra.hpp"

namespace iwkit {

int MWShape::default_n0() const noexcept {
  return c_list.empty() ? 0 : *std::max_element(c_list.begin(), c_list.end());
}

long ordinary_growth(u64 p, long lambda, long mu, int n) {
  if (n < 0) throw DomainError("ordinary_growth: negative level");
  return mu * p_power(p, n) + lambda * n;
}

namespace {

long increment_formula(u64 p, const SelmerInvariants& inv, std::span<const long> multiplicity, int n, int n0) {
  long sum = 0;
  for (std::size_t k = 0; k < multiplicity.size() && static_cast<int>(k) <= n0; ++k) {
    sum += multiplicity[k] * rank_phi_omega(p, static_cast<int>(k), n0);
  }
  return nabla_closed(p, inv.lambda, inv.mu, n) - sum;
}

std::vector<long> multiplicities(const MWShape& shape) {
  std::vector<long> m(static_cast<std::size_t>(shape.default_n0()) + 1, 0);
  for (int c : shape.c_list) {
    if (c < 0) throw InputError("shape: negative level");
    ++m[static_cast<std::size_t>(c)];
  }
  return m;
}

}  // namespace

long final_increment(u64 p, const SelmerInvariants& inv, const MWShape& shape, int n, int n0) {
  if (n0 < 0 || n <= n0) throw DomainError("final_increment: requires n > n0 >= 0");
  return increment_formula(p, inv, multiplicities(shape), n, n0);
}

long elliptic_increment(u64 p, const SelmerInvariants& inv, std::span<const long> r_seq, int n, int n0) {
  if (n0 < 0 || n <= n0) throw DomainError("elliptic_increment: requires n > n0 >= 0");
  for (std::size_t k = 0; k < r_seq.size(); ++k) {
    if (r_seq[k] < 0) throw InputError("elliptic_increment: negative multiplicity");
    if (r_seq[k] > 0 && static_cast<int>(k) > n0) throw DomainError("elliptic_increment: r_k > 0 beyond n0");
  }
  return increment_formula(p, inv, r_seq, n, n0);
}

std::vector<RkLevel> rk_solver(std::span<const long> e) {
  std::vector<RkLevel> out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] < 0) throw InputError("rk_solver: e_k must be nonnegative");
    RkLevel lv;
    lv.k = static_cast<int>(k);
    lv.e = e[k];
    if (k == 0) {
      lv.a = e[0];
      lv.pairs = {{e[0], e[0]}};
    } else {
      lv.a = std::max(0L, e[k] - 1);
      const long sum = e[k] + lv.a;
      for (long r = lv.a; sum - r >= lv.a; ++r) lv.pairs.emplace_back(r, sum - r);
    }
    out.push_back(std::move(lv));
  }
  return out;
}

std::vector<long> ledger_from_ranks(u64 p, std::span<const long> ranks) {
  std::vector<long> e;
  for (std::size_t n = 0; n < ranks.size(); ++n) {
    if (ranks[n] < 0) throw InputError("ranks must be nonnegative");
    if (n == 0) {
      e.push_back(ranks[0]);
      continue;
    }
    const long diff = ranks[n] - ranks[n - 1];
    const long step = phi_degree(p, static_cast<int>(n));
    if (diff < 0 || diff % step != 0) {
      throw InputError("rank jump at level " + std::to_string(n) + " is not a nonnegative multiple of " +
                       std::to_string(step));
    }
    e.push_back(diff / step);
  }
  return e;
}

namespace {

// Per generator of S: the multipliers f/Phi_c of the summands mapped into it.
std::vector<std::vector<IwasawaSeries>> allocate(const ElementaryModule& s, const MWShape& shape) {
  const auto gens = s.generators();
  std::vector<std::vector<IwasawaSeries>> mult(gens.size());
  std::vector<std::vector<int>> used(gens.size());
  for (int c : shape.c_list) {
    bool placed = false;
    for (std::size_t j = 0; j < gens.size() && !placed; ++j) {
      if (std::find(used[j].begin(), used[j].end(), c) != used[j].end()) continue;
      const IwasawaSeries& f = gens[j];
      if (phi_degree(f.prime(), c) > f.degree()) continue;
      const SeriesRing ring(f.modulus(), f.degree() + 1);
      const DivisionResult qr = divide_distinguished(f.with_degree_cap(ring.degree_cap), phi(ring, c));
      if (!qr.remainder.is_zero()) continue;
      mult[j].push_back(qr.quotient);
      used[j].push_back(c);
      placed = true;
    }
    if (!placed) {
      throw InputError("synthetic tower: no generator of S is divisible by Phi_" + std::to_string(c) +
                       " with that level still free");
    }
  }
  return mult;
}

std::optional<long> sha_length(const ElementaryModule& s, const std::vector<std::vector<IwasawaSeries>>& mult, int n,
                              int margin) {
  const auto gens = s.generators();
  ModuleInvariants total;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    ResidueMatrix block = multiplication_matrix(gens[j], n);
    for (const auto& h : mult[j]) block = block.hconcat(multiplication_matrix(h, n));
    const ModuleInvariants inv = module_invariants(block, margin);
    total.free_rank += inv.free_rank;
    total.length += inv.length;
  }
  if (const auto& f = s.finite_part()) total.length += module_invariants(*f, margin).length;
  if (total.free_rank > 0) return std::nullopt;
  return total.length;
}

}  // namespace

GrowthReport synthetic_tower_verify(const ElementaryModule& selmer, const MWShape& shape, int n_max,
                                    std::optional<int> n0, int margin) {
  if (n_max < 1) throw InputError("synthetic tower: n_max must be >= 1");
  const u64 p = selmer.prime();
  if (p_power(p, n_max) > selmer.ring().degree_cap) {
    throw DegreeOverflow("synthetic tower at level " + std::to_string(n_max), static_cast<int>(p_power(p, n_max)));
  }
  const auto mult = allocate(selmer, shape);
  const std::vector<long> mults = multiplicities(shape);

  GrowthReport r;
  r.prime = p;
  r.lambda = selmer.lambda();
  r.mu = selmer.mu();
  r.n0 = n0.value_or(shape.default_n0());
  if (r.n0 < 0) throw InputError("synthetic tower: n0 must be >= 0");
  const SelmerInvariants inv{r.lambda, r.mu};

  std::vector<std::future<std::optional<long>>> jobs;
  for (int n = 0; n <= n_max; ++n) {
    jobs.push_back(std::async(std::launch::async, [&, n] { return sha_length(selmer, mult, n, margin); }));
  }
  for (int n = 0; n <= n_max; ++n) {
    GrowthLevel lv;
    lv.n = n;
    lv.sha_length = jobs[static_cast<std::size_t>(n)].get();
    if (!lv.sha_length) r.non_finite_levels.push_back(n);
    if (n >= 1) {
      const auto& prev = r.levels.back().sha_length;
      if (lv.sha_length && prev) lv.increment = *lv.sha_length - *prev;
      lv.predicted = increment_formula(p, inv, mults, n, r.n0);
      lv.matches = lv.increment && *lv.increment == *lv.predicted;
    }
    r.levels.push_back(lv);
  }

  int s = n_max;
  while (s >= 1 && r.levels[static_cast<std::size_t>(s)].matches) --s;
  if (s < n_max) r.stabilization_level = s;

  r.holds_past_n0 = r.n0 < n_max;
  for (int n = r.n0 + 1; n <= n_max; ++n) r.holds_past_n0 = r.holds_past_n0 && r.levels[static_cast<std::size_t>(n)].matches;

  for (int cand = 0; cand < n_max && !r.minimal_n0; ++cand) {
    bool ok = true;
    for (int n = cand + 1; n <= n_max && ok; ++n) {
      const auto& inc = r.levels[static_cast<std::size_t>(n)].increment;
      ok = inc && *inc == increment_formula(p, inv, mults, n, cand);
    }
    if (ok) r.minimal_n0 = cand;
  }
  return r;
}

}  // namespace iwkit
