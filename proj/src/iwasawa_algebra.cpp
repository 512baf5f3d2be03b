#include "iwkit/iwasawa_algebra.hpp"

#include <string>

#include "iwkit/errors.hpp"
#include "iwkit/kernels.hpp"

namespace iwkit {
namespace {

// Coefficients of (1+X)^k mod p^N, by Pascal's rule.
std::vector<u64> binomial_row(const Modulus& mod, long k) {
  std::vector<u64> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (long i = 1; i <= k; ++i) {
    for (long j = i; j >= 1; --j) {
      row[static_cast<std::size_t>(j)] = mod.add(row[static_cast<std::size_t>(j)], row[static_cast<std::size_t>(j - 1)]);
    }
  }
  return row;
}

std::vector<u64> omega_residues(const Modulus& mod, u64 p, int n) {
  std::vector<u64> row = binomial_row(mod, p_power(p, n));
  row[0] = 0;
  return row;
}

// Long division of a (as a polynomial) by the monic b, in place: on return a
// holds the remainder and the returned vector the quotient.
std::vector<u64> long_divide(const Modulus& mod, std::vector<u64>& a, std::span<const u64> b) {
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) return {};
  std::vector<u64> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const u64 c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    kernels::axpy_mod(std::span<u64>(a).subspan(i - db, db + 1), b, mod.neg(c), mod.value());
  }
  a.resize(db);
  return q;
}

}  // namespace

long p_power(u64 p, int n) {
  long r = 1;
  for (int i = 0; i < n; ++i) r *= static_cast<long>(p);
  return r;
}

long phi_degree(u64 p, int n) { return n == 0 ? 1 : p_power(p, n) - p_power(p, n - 1); }

IwasawaSeries phi(const SeriesRing& ring, int n) {
  if (n < 0) throw InputError("phi: level must be >= 0");
  const u64 p = ring.modulus.prime();
  const long deg = phi_degree(p, n);
  if (deg > ring.degree_cap) {
    throw DegreeOverflow("phi: Phi_" + std::to_string(n) + " has degree " + std::to_string(deg),
                         static_cast<int>(deg));
  }
  if (n == 0) return IwasawaSeries::monomial(ring, 1);
  std::vector<u64> num = omega_residues(ring.modulus, p, n);
  const std::vector<u64> den = omega_residues(ring.modulus, p, n - 1);
  // omega_{n-1} has zero constant term; divide X out of both first so the
  // divisor stays monic and the division is exact.
  num.erase(num.begin());
  std::vector<u64> den_shift(den.begin() + 1, den.end());
  std::vector<u64> q = long_divide(ring.modulus, num, den_shift);
  for (u64 r : num) {
    if (r != 0) throw Error("phi: internal error, inexact cyclotomic division");
  }
  return IwasawaSeries(ring, std::move(q));
}

IwasawaSeries omega(const SeriesRing& ring, int n) {
  if (n < 0) throw InputError("omega: level must be >= 0");
  const long deg = p_power(ring.modulus.prime(), n);
  if (deg > ring.degree_cap) {
    throw DegreeOverflow("omega: omega_" + std::to_string(n) + " has degree " + std::to_string(deg),
                         static_cast<int>(deg));
  }
  return IwasawaSeries(ring, omega_residues(ring.modulus, ring.modulus.prime(), n));
}

DivisionResult divide_distinguished(const IwasawaSeries& f, const IwasawaSeries& divisor) {
  const SeriesRing ring = common_ring(f, divisor);
  if (!divisor.is_monic()) throw InputError("divide: divisor is not monic");
  if (!divisor.is_polynomial()) throw InputError("divide: divisor reaches its degree cap");
  const Modulus& mod = ring.modulus;
  std::vector<u64> a(f.residues().begin(), f.residues().end());
  for (auto& x : a) x = mod.reduce_unsigned(x);
  std::vector<u64> b(divisor.residues().begin(), divisor.residues().end());
  for (auto& x : b) x = mod.reduce_unsigned(x);
  std::vector<u64> q = long_divide(mod, a, b);
  return {IwasawaSeries(ring, std::move(q)), IwasawaSeries(ring, std::move(a))};
}

IwasawaInvariants iwasawa_invariants(const IwasawaSeries& f) {
  if (f.is_zero()) throw ZeroSeriesError();
  const Modulus& mod = f.modulus();
  const int mu = f.valuation();
  int lambda = 0;
  while (mod.valuation(f.residue(lambda)) != mu) ++lambda;
  return {mu, lambda};
}

IwasawaSeries WeierstrassFactorization::reconstruct() const {
  const Modulus inner = distinguished.modulus();
  const Modulus outer(inner.prime(), inner.precision() + mu);
  const IwasawaSeries pu = distinguished * unit;
  const u64 scale = outer.power(mu);
  std::vector<u64> r(pu.residues().begin(), pu.residues().end());
  for (auto& c : r) c = outer.mul(c, scale);
  return IwasawaSeries(SeriesRing(outer, pu.degree_cap()), std::move(r));
}

WeierstrassFactorization weierstrass_prepare(const IwasawaSeries& f) {
  if (f.is_zero()) throw ZeroSeriesError();
  const int mu = f.valuation();
  const IwasawaSeries g = f.divided_by_p_power(mu);
  const Modulus& mod = g.modulus();
  const int cap = f.degree_cap();

  int lambda = 0;
  while (!mod.is_unit(g.residue(lambda))) ++lambda;  // terminates: some coefficient has valuation mu

  const SeriesRing out_ring(mod, cap);
  if (lambda == 0) {
    return {mu, 0, IwasawaSeries::constant(out_ring, 1), g};
  }

  // Errors from truncating the quotient at the working cap drift down by at
  // most lambda degrees per iteration while gaining a factor p, so this cap
  // keeps every coefficient up to `cap` exact mod p^{N - mu}.
  const int work_cap = cap + lambda * (mod.precision() + 1);
  const IwasawaSeries gw = g.with_degree_cap(work_cap);
  const IwasawaSeries low = gw.low_part(lambda);
  const IwasawaSeries high_inv = gw.shifted_down(lambda).inverse();

  // Weierstrass division of X^lambda by g: maintain h = X^lambda - q*g as its
  // part below degree lambda and its shifted part from degree lambda on.
  IwasawaSeries h_low(SeriesRing(mod, work_cap));
  IwasawaSeries h_high = IwasawaSeries::constant(SeriesRing(mod, work_cap - lambda), 1);
  IwasawaSeries q(SeriesRing(mod, work_cap - lambda));
  for (int iter = 0; iter <= mod.precision() + 1 && !h_high.is_zero(); ++iter) {
    const IwasawaSeries t = h_high * high_inv;
    q = q + t;
    const IwasawaSeries tv = t.with_degree_cap(work_cap) * low;
    h_low = h_low - tv.low_part(lambda);
    h_high = -tv.shifted_down(lambda);
  }
  if (!h_high.is_zero()) {
    throw PrecisionError("weierstrass: division did not converge");
  }

  const IwasawaSeries distinguished =
      IwasawaSeries::monomial(out_ring, lambda) - h_low.with_degree_cap(cap);
  const IwasawaSeries unit = q.with_degree_cap(cap).inverse();
  return {mu, lambda, distinguished, unit};
}

}  // namespace iwkit
