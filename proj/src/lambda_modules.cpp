#include "iwkit/lambda_modules.hpp"

#include <algorithm>
#include <future>
#include <utility>

#include "iwkit/errors.hpp"
#include "iwkit/iwasawa_algebra.hpp"
#include "iwkit/kernels.hpp"

namespace iwkit {

ElementaryModule::ElementaryModule(const SeriesRing& ring, std::vector<IwasawaSeries> generators)
    : ring_(ring), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.prime() != ring_.modulus.prime()) throw InputError("module: generator over a different prime");
    if (g.is_zero()) throw ZeroSeriesError();
  }
}

ElementaryModule ElementaryModule::mw_shaped(const SeriesRing& ring, std::span<const int> levels) {
  std::vector<IwasawaSeries> gens;
  gens.reserve(levels.size());
  for (int c : levels) {
    if (c < 0) throw InputError("module: negative cyclotomic level");
    gens.push_back(phi(ring, c));
  }
  return ElementaryModule(ring, std::move(gens));
}

ElementaryModule ElementaryModule::with_finite_part(const ResidueMatrix& presentation, int margin) const {
  if (presentation.modulus().prime() != prime()) throw InputError("module: finite part over a different prime");
  if (presentation.rows() == 0) return *this;
  if (module_invariants(presentation, margin).free_rank != 0) {
    throw InputError("module: finite part presents a module of positive rank");
  }
  ElementaryModule out = *this;
  if (finite_part_) {
    const ResidueMatrix blocks[] = {*finite_part_, presentation};
    out.finite_part_ = ResidueMatrix::block_diagonal(presentation.modulus(), blocks);
  } else {
    out.finite_part_ = presentation;
  }
  return out;
}

int ElementaryModule::mu() const {
  int total = 0;
  for (const auto& g : generators_) total += iwasawa_invariants(g).mu;
  return total;
}

int ElementaryModule::lambda() const {
  int total = 0;
  for (const auto& g : generators_) total += iwasawa_invariants(g).lambda;
  return total;
}

IwasawaSeries ElementaryModule::characteristic_series() const {
  IwasawaSeries acc = IwasawaSeries::constant(ring_, 1);
  for (const auto& g : generators_) acc = acc.multiply_exact(g);
  return acc;
}

std::optional<std::vector<int>> ElementaryModule::mw_levels() const {
  std::vector<int> levels;
  for (const auto& g : generators_) {
    const u64 p = g.prime();
    int c = 0;
    while (phi_degree(p, c) < g.degree()) ++c;
    if (phi_degree(p, c) != g.degree() || !(phi(g.ring(), c) == g)) return std::nullopt;
    levels.push_back(c);
  }
  return levels;
}

ElementaryModule ElementaryModule::direct_sum(const ElementaryModule& other) const {
  if (!(ring_ == other.ring_)) throw InputError("module: direct sum over different rings");
  std::vector<IwasawaSeries> gens = generators_;
  gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
  ElementaryModule out(ring_, std::move(gens));
  out.finite_part_ = finite_part_;
  if (other.finite_part_) {
    if (out.finite_part_) {
      if (!(out.finite_part_->modulus() == other.finite_part_->modulus())) {
        throw InputError("module: finite parts at different precisions");
      }
      const ResidueMatrix blocks[] = {*out.finite_part_, *other.finite_part_};
      out.finite_part_ = ResidueMatrix::block_diagonal(other.finite_part_->modulus(), blocks);
    } else {
      out.finite_part_ = other.finite_part_;
    }
  }
  return out;
}

namespace {

// Residues of omega_n below X^{p^n}.
std::vector<u64> omega_tail(const Modulus& mod, int n) {
  const int d = static_cast<int>(p_power(mod.prime(), n));
  const IwasawaSeries w = omega(SeriesRing(mod, d), n);
  std::vector<u64> tail(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) tail[static_cast<std::size_t>(i)] = w.residue(i);
  return tail;
}

// f mod omega_n as a dense vector of length p^n.
std::vector<u64> reduce_mod_omega(const IwasawaSeries& f, int n) {
  const Modulus& mod = f.modulus();
  const int d = static_cast<int>(p_power(mod.prime(), n));
  const int cap = std::max(d, f.degree()) + 1;
  const SeriesRing ring(mod, cap);
  const DivisionResult qr = divide_distinguished(f.with_degree_cap(cap), omega(ring, n));
  std::vector<u64> v(static_cast<std::size_t>(d), 0);
  for (int i = 0; i <= qr.remainder.degree(); ++i) v[static_cast<std::size_t>(i)] = qr.remainder.residue(i);
  return v;
}

// v <- X v mod omega_n, with tail the lower coefficients of omega_n.
void times_x(std::vector<u64>& v, std::span<const u64> tail, const Modulus& mod) {
  const u64 top = v.back();
  std::copy_backward(v.begin(), v.end() - 1, v.end());
  v.front() = 0;
  if (top != 0) kernels::axpy_mod(v, tail, mod.neg(top), mod.value());
}

void check_cap(const SeriesRing& ring, int n) {
  const long d = p_power(ring.modulus.prime(), n);
  if (d > ring.degree_cap) throw DegreeOverflow("presentation at level " + std::to_string(n), static_cast<int>(d));
}

// Columns omega_{n-1} X^j, j < p^n - p^{n-1}: generators of the kernel of
// Z_p[X]/omega_n -> Z_p[X]/omega_{n-1}.
ResidueMatrix kernel_generators(const Modulus& mod, int n) {
  const std::size_t d = static_cast<std::size_t>(p_power(mod.prime(), n));
  const std::size_t d_prev = static_cast<std::size_t>(p_power(mod.prime(), n - 1));
  const IwasawaSeries w = omega(SeriesRing(mod, static_cast<int>(d_prev)), n - 1);
  ResidueMatrix m(mod, d, d - d_prev);
  for (std::size_t j = 0; j < d - d_prev; ++j) {
    for (std::size_t i = 0; i <= d_prev; ++i) m(i + j, j) = w.residue(static_cast<int>(i));
  }
  return m;
}

// The reduction Z_p[X]/omega_n -> Z_p[X]/omega_{n-1}: column j is X^j mod omega_{n-1}.
ResidueMatrix projection_matrix(const Modulus& mod, int n) {
  const std::size_t d = static_cast<std::size_t>(p_power(mod.prime(), n));
  const std::size_t d_prev = static_cast<std::size_t>(p_power(mod.prime(), n - 1));
  const std::vector<u64> tail = omega_tail(mod, n - 1);
  ResidueMatrix m(mod, d_prev, d);
  std::vector<u64> v(d_prev, 0);
  v[0] = 1;
  for (std::size_t j = 0; j < d; ++j) {
    if (j > 0) times_x(v, tail, mod);
    for (std::size_t i = 0; i < d_prev; ++i) m(i, j) = v[i];
  }
  return m;
}

ModuleInvariants& operator+=(ModuleInvariants& a, const ModuleInvariants& b) {
  a.free_rank += b.free_rank;
  a.length += b.length;
  return a;
}

// Invariants of one level. The presentation is block diagonal and so is every
// matrix built from it, so each block is reduced on its own.
struct LevelData {
  ModuleInvariants quotient;      // M/omega_n
  ModuleInvariants mod_kernel;    // (M/omega_n) / ker pi_n
  ModuleInvariants cokernel;      // coker pi_n
};

LevelData level_data(const ElementaryModule& m, int n, int margin) {
  check_cap(m.ring(), n);
  LevelData out;
  for (const auto& g : m.generators()) {
    const ResidueMatrix a = multiplication_matrix(g, n);
    out.quotient += module_invariants(a, margin);
    if (n == 0) continue;
    out.mod_kernel += module_invariants(a.hconcat(kernel_generators(g.modulus(), n)), margin);
    const ResidueMatrix b = multiplication_matrix(g, n - 1);
    out.cokernel += module_invariants(b.hconcat(projection_matrix(g.modulus(), n)), margin);
  }
  if (const auto& f = m.finite_part()) {
    // Gamma acts trivially: every transition is the identity.
    const ModuleInvariants inv = module_invariants(*f, margin);
    out.quotient += inv;
    if (n > 0) {
      out.mod_kernel += inv;
      out.cokernel += module_invariants(f->hconcat(ResidueMatrix::identity(f->modulus(), f->rows())), margin);
    }
  }
  return out;
}

std::optional<long> nabla_from(const LevelData& cur, const ModuleInvariants& prev) {
  if (cur.quotient.free_rank != cur.mod_kernel.free_rank) return std::nullopt;
  if (cur.cokernel.free_rank != 0) return std::nullopt;
  const long ker = cur.quotient.length - cur.mod_kernel.length;
  return ker - cur.cokernel.length + prev.free_rank;
}

}  // namespace

ResidueMatrix multiplication_matrix(const IwasawaSeries& f, int n) {
  if (n < 0) throw InputError("multiplication_matrix: negative level");
  const Modulus& mod = f.modulus();
  const std::size_t d = static_cast<std::size_t>(p_power(mod.prime(), n));
  const std::vector<u64> tail = omega_tail(mod, n);
  std::vector<u64> v = reduce_mod_omega(f, n);
  ResidueMatrix m(mod, d, d);
  for (std::size_t j = 0; j < d; ++j) {
    if (j > 0) times_x(v, tail, mod);
    for (std::size_t i = 0; i < d; ++i) m(i, j) = v[i];
  }
  return m;
}

ResidueMatrix quotient_presentation(const ElementaryModule& m, int n) {
  check_cap(m.ring(), n);
  std::vector<ResidueMatrix> blocks;
  for (const auto& g : m.generators()) blocks.push_back(multiplication_matrix(g, n));
  if (m.finite_part()) blocks.push_back(*m.finite_part());
  if (blocks.empty()) return ResidueMatrix(m.ring().modulus, 0, 0);
  return ResidueMatrix::block_diagonal(blocks.front().modulus(), blocks);
}

long rank_phi_omega(u64 p, int c, int n) {
  if (c < 0 || n < 0) throw DomainError("rank_phi_omega: negative index");
  if (c == 0) return 1;
  return c <= n ? phi_degree(p, c) : 0;
}

long nabla_closed(u64 p, long lambda, long mu, int n) {
  if (n < 1) throw DomainError("nabla_closed: level must be >= 1");
  return lambda + (p_power(p, n) - p_power(p, n - 1)) * mu;
}

std::optional<long> nabla_brute(const ElementaryModule& m, int n, int margin) {
  if (n < 1) throw DomainError("nabla_brute: level must be >= 1");
  const LevelData cur = level_data(m, n, margin);
  const LevelData prev = level_data(m, n - 1, margin);
  return nabla_from(cur, prev.quotient);
}

std::optional<bool> nabla_additivity_check(const ElementaryModule& first, const ElementaryModule& second, int n,
                                           int margin) {
  const auto whole = nabla_brute(first.direct_sum(second), n, margin);
  const auto a = nabla_brute(first, n, margin);
  const auto b = nabla_brute(second, n, margin);
  const int defined = int(whole.has_value()) + int(a.has_value()) + int(b.has_value());
  if (defined == 3) return *whole == *a + *b;
  if (defined == 2) return false;
  return std::nullopt;
}

TowerReport tower_report(const ElementaryModule& m, int n_max, int margin) {
  if (n_max < 1) throw InputError("tower: n_max must be >= 1");
  check_cap(m.ring(), n_max);
  std::vector<std::future<LevelData>> jobs;
  for (int n = 0; n <= n_max; ++n) {
    jobs.push_back(std::async(std::launch::async, [&m, n, margin] { return level_data(m, n, margin); }));
  }
  std::vector<LevelData> data;
  for (auto& j : jobs) data.push_back(j.get());

  TowerReport r;
  r.prime = m.prime();
  r.lambda = m.lambda();
  r.mu = m.mu();
  for (int n = 1; n <= n_max; ++n) {
    TowerLevel lv;
    lv.n = n;
    lv.zp_rank = data[static_cast<std::size_t>(n)].quotient.free_rank;
    lv.finite_length = data[static_cast<std::size_t>(n)].quotient.length;
    lv.nabla = nabla_from(data[static_cast<std::size_t>(n)], data[static_cast<std::size_t>(n - 1)].quotient);
    lv.closed_form = nabla_closed(r.prime, r.lambda, r.mu, n);
    lv.matches = lv.nabla && *lv.nabla == lv.closed_form;
    r.levels.push_back(lv);
  }
  int s = n_max;
  while (s >= 1 && r.levels[static_cast<std::size_t>(s - 1)].matches) --s;
  if (s < n_max) r.stabilization_level = s;

  const bool all_finite =
      std::all_of(data.begin(), data.end(), [](const LevelData& d) { return d.quotient.free_rank == 0; });
  if (all_finite) {
    std::vector<int> lengths;
    for (const auto& d : data) lengths.push_back(d.quotient.length);
    bool law = true;
    for (int n = 1; n <= n_max; ++n) {
      const auto& nb = r.levels[static_cast<std::size_t>(n - 1)].nabla;
      law = law && nb && *nb == lengths[static_cast<std::size_t>(n)] - lengths[static_cast<std::size_t>(n - 1)];
    }
    r.total_lengths = std::move(lengths);
    r.finite_difference_law = law;
  }
  return r;
}

}  // namespace iwkit
