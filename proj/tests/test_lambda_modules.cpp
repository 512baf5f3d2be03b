#include <algorithm>
#include <random>

#include "doctest.h"
#include "iwkit/errors.hpp"
#include "iwkit/iwasawa_algebra.hpp"
#include "iwkit/lambda_modules.hpp"
#include "oracle/exact.hpp"

using namespace iwkit;

namespace {

SeriesRing ring3() { return SeriesRing(3, 24, 89); }

IwasawaSeries px(const SeriesRing& ring, i64 c) { return IwasawaSeries::from_integers(ring, {c, 1}); }

ElementaryModule mod(const SeriesRing& ring, std::vector<IwasawaSeries> gens) {
  return ElementaryModule(ring, std::move(gens));
}

// Generators drawn from a small pool with known exact integer forms.
struct PoolEntry {
  IwasawaSeries series;
  oracle::Poly exact;
};

std::vector<PoolEntry> pool(const SeriesRing& ring) {
  const auto p = static_cast<long long>(ring.modulus.prime());
  std::vector<PoolEntry> out;
  out.push_back({IwasawaSeries::constant(ring, p), oracle::make({p})});
  out.push_back({phi(ring, 0), oracle::phi(p, 0)});
  out.push_back({phi(ring, 1), oracle::phi(p, 1)});
  out.push_back({px(ring, p), oracle::make({p, 1})});
  out.push_back({IwasawaSeries::from_integers(ring, {p, 0, 1}), oracle::make({p, 0, 1})});
  out.push_back({IwasawaSeries::from_integers(ring, {p, 0, 0, 1}), oracle::make({p, 0, 0, 1})});
  out.push_back({phi(ring, 1).scaled(ring.modulus.prime()), oracle::scale(oracle::phi(p, 1), p)});
  return out;
}

}  // namespace

TEST_SUITE("lambda_modules") {
  TEST_CASE("construction and invariants") {
    const SeriesRing ring = ring3();
    const auto m = mod(ring, {IwasawaSeries::constant(ring, 9), phi(ring, 1), px(ring, 3)});
    CHECK(m.mu() == 2);
    CHECK(m.lambda() == 3);
    CHECK(iwasawa_invariants(m.characteristic_series()).lambda == 3);
    CHECK(iwasawa_invariants(m.characteristic_series()).mu == 2);
    CHECK_THROWS_AS(mod(ring, {IwasawaSeries(ring)}), InputError);
    CHECK_THROWS_AS(mod(ring, {IwasawaSeries::constant(SeriesRing(5, 10, 30), 1)}), InputError);
    const int levels[] = {0, 2, 1};
    const auto mw = ElementaryModule::mw_shaped(ring, levels);
    REQUIRE(mw.mw_levels());
    CHECK(*mw.mw_levels() == std::vector<int>{0, 2, 1});
    CHECK_FALSE(m.is_mw_shaped());
    CHECK(mod(ring, {}).mu() == 0);
  }

  TEST_CASE("quotient presentations") {
    const SeriesRing ring = ring3();
    CHECK(quotient_presentation(mod(ring, {phi(ring, 0)}), 1).rows() == 3);
    CHECK(module_invariants(quotient_presentation(mod(ring, {phi(ring, 0)}), 1)) == ModuleInvariants{1, 0});
    const auto p_block = quotient_presentation(mod(ring, {IwasawaSeries::constant(ring, 3)}), 1);
    CHECK(p_block == ResidueMatrix::from_integers(ring.modulus, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}}));
    CHECK(module_invariants(p_block) == ModuleInvariants{0, 3});
    // Lambda/(Phi_1, omega_2) in the basis of Z_p[X]/omega_2: a 9x9 presentation.
    const auto phi1 = quotient_presentation(mod(ring, {phi(ring, 1)}), 2);
    CHECK(phi1.rows() == 9);
    CHECK(module_invariants(phi1) == ModuleInvariants{2, 0});
    CHECK_THROWS_AS(quotient_presentation(mod(SeriesRing(3, 24, 20), {phi(SeriesRing(3, 24, 20), 1)}), 3), DegreeOverflow);
  }

  TEST_CASE("multiplication matrix matches exact reduction") {
    const SeriesRing ring = ring3();
    for (const auto& e : pool(ring)) {
      for (int n = 0; n <= 2; ++n) {
        const oracle::Mat ex = oracle::mult_matrix(e.exact, oracle::omega(3, n));
        const ResidueMatrix m = multiplication_matrix(e.series, n);
        for (std::size_t i = 0; i < ex.size(); ++i) {
          for (std::size_t j = 0; j < ex.size(); ++j) CHECK(m(i, j) == oracle::residue(ex[i][j], ring.modulus.value()));
        }
      }
    }
  }

  TEST_CASE("rank_phi_omega closed form against SNF") {
    const SeriesRing ring = ring3();
    CHECK(rank_phi_omega(3, 0, 3) == 1);
    CHECK(rank_phi_omega(3, 1, 2) == 2);
    CHECK(rank_phi_omega(3, 3, 2) == 0);
    for (int c = 0; c <= 4; ++c) {
      for (int n = 0; n <= 4; ++n) {
        const auto inv = module_invariants(quotient_presentation(mod(ring, {phi(ring, c)}), n));
        CHECK(inv.free_rank == rank_phi_omega(3, c, n));
      }
    }
  }

  TEST_CASE("closed form") {
    CHECK(nabla_closed(3, 0, 1, 2) == 6);
    for (int n = 1; n <= 5; ++n) CHECK(nabla_closed(7, 5, 0, n) == 5);
    CHECK(nabla_closed(5, 2, 1, 3) == 102);
    CHECK_THROWS_AS(nabla_closed(3, 1, 1, 0), DomainError);
  }

  TEST_CASE("brute Kobayashi rank examples") {
    const SeriesRing ring = ring3();
    CHECK(nabla_brute(mod(ring, {IwasawaSeries::constant(ring, 3)}), 2) == 6);
    for (int n = 2; n <= 4; ++n) CHECK(nabla_brute(mod(ring, {phi(ring, 1)}), n) == 2);
    CHECK(nabla_brute(mod(ring, {phi(ring, 0)}), 1) == 1);
    CHECK(nabla_brute(mod(ring, {}), 3) == 0);
    // Phi_1 at level 1: the kernel of Z_p[X]/(Phi_1, omega_1) -> Z_p is infinite.
    CHECK_FALSE(nabla_brute(mod(ring, {phi(ring, 1)}), 1).has_value());
  }

  TEST_CASE("brute Kobayashi rank agrees with the exact-integer oracle") {
    std::mt19937_64 rng(71);
    for (u64 p : {3ULL, 5ULL}) {
      const SeriesRing ring(p, 24, 30);
      const auto entries = pool(ring);
      const int nmax = p == 3 ? 3 : 2;
      for (int trial = 0; trial < 12; ++trial) {
        std::vector<IwasawaSeries> gens;
        std::vector<oracle::Poly> exact;
        const int k = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < k; ++i) {
          const auto& e = entries[rng() % entries.size()];
          gens.push_back(e.series);
          exact.push_back(e.exact);
        }
        const ElementaryModule m(ring, gens);
        for (int n = 1; n <= nmax; ++n) {
          const auto o = oracle::nabla(exact, static_cast<long long>(p), n);
          const auto b = nabla_brute(m, n);
          REQUIRE(b.has_value() == o.defined);
          if (o.defined) CHECK(*b == o.value);
          const auto q = module_invariants(quotient_presentation(m, n));
          CHECK(q.free_rank == o.quotient.free_rank);
          CHECK(q.length == o.quotient.length);
        }
      }
    }
  }

  TEST_CASE("additivity over direct sums") {
    const SeriesRing ring = ring3();
    CHECK(nabla_additivity_check(mod(ring, {IwasawaSeries::constant(ring, 3)}), mod(ring, {phi(ring, 1)}), 2) == true);
    CHECK(nabla_brute(mod(ring, {IwasawaSeries::constant(ring, 3), phi(ring, 1)}), 2) == 8);
    CHECK(nabla_additivity_check(mod(ring, {phi(ring, 0)}), mod(ring, {phi(ring, 0)}), 1) == true);
    CHECK_FALSE(nabla_additivity_check(mod(ring, {phi(ring, 1)}), mod(ring, {phi(ring, 1)}), 1).has_value());

    std::mt19937_64 rng(72);
    for (u64 p : {3ULL, 5ULL}) {
      const SeriesRing r(p, 24, 130);
      const auto entries = pool(r);
      for (int trial = 0; trial < 20; ++trial) {
        const ElementaryModule a(r, {entries[rng() % entries.size()].series});
        const ElementaryModule b(r, {entries[rng() % entries.size()].series, entries[rng() % entries.size()].series});
        const int n = 1 + static_cast<int>(rng() % 3);
        const auto check = nabla_additivity_check(a, b, n);
        if (check) CHECK(*check);
        const auto whole = module_invariants(quotient_presentation(a.direct_sum(b), n));
        const auto ia = module_invariants(quotient_presentation(a, n));
        const auto ib = module_invariants(quotient_presentation(b, n));
        CHECK(whole.free_rank == ia.free_rank + ib.free_rank);
        CHECK(whole.length == ia.length + ib.length);
      }
    }
  }

  TEST_CASE("a finite summand does not move the Kobayashi rank") {
    std::mt19937_64 rng(73);
    const SeriesRing ring = ring3();
    const auto entries = pool(ring);
    for (int trial = 0; trial < 20; ++trial) {
      const ElementaryModule m(ring, {entries[rng() % entries.size()].series, entries[rng() % entries.size()].series});
      ResidueMatrix f(ring.modulus, 3, 3);
      for (std::size_t i = 0; i < 3; ++i) f(i, i) = ring.modulus.power(1 + static_cast<int>(rng() % 3));
      f(0, 1) = rng() % ring.modulus.value();
      const ElementaryModule fuzzed = m.with_finite_part(f);
      for (int n = 1; n <= 3; ++n) {
        CHECK(nabla_brute(fuzzed, n) == nabla_brute(m, n));
        const auto a = module_invariants(quotient_presentation(fuzzed, n));
        const auto b = module_invariants(quotient_presentation(m, n));
        CHECK(a.length == b.length + module_invariants(f).length);
      }
    }
    CHECK_THROWS_AS(mod(ring, {phi(ring, 0)}).with_finite_part(ResidueMatrix(ring.modulus, 2, 2)), InputError);
  }

  TEST_CASE("MW-shaped modules stabilize to the rank sum") {
    const SeriesRing ring = ring3();
    const std::vector<std::vector<int>> shapes{{0}, {1}, {2}, {0, 1}, {1, 2}, {0, 0, 2}, {1, 1, 2}};
    for (const auto& shape : shapes) {
      const auto m = ElementaryModule::mw_shaped(ring, shape);
      const int n0 = *std::max_element(shape.begin(), shape.end());
      long expect = 0;
      for (int c : shape) expect += rank_phi_omega(3, c, n0);
      for (int n = n0 + 1; n <= 4; ++n) CHECK(nabla_brute(m, n) == expect);
    }
  }

  TEST_CASE("tower reports") {
    const SeriesRing ring = ring3();
    const TowerReport t2 = tower_report(mod(ring, {phi(ring, 2)}), 4);
    REQUIRE(t2.levels.size() == 4);
    CHECK(t2.levels[2].nabla == 6);
    CHECK(t2.levels[3].nabla == 6);
    REQUIRE(t2.stabilization_level);
    CHECK(*t2.stabilization_level <= 3);
    CHECK_FALSE(t2.total_lengths);

    const TowerReport tp = tower_report(mod(ring, {phi(ring, 1).scaled(3)}), 4);
    CHECK(tp.lambda == 2);
    CHECK(tp.mu == 1);
    for (int n = 2; n <= 4; ++n) CHECK(tp.levels[static_cast<std::size_t>(n - 1)].nabla == nabla_closed(3, 2, 1, n));
    CHECK(tp.stabilization_level == 1);

    const TowerReport t0 = tower_report(mod(ring, {}), 3);
    for (const auto& lv : t0.levels) {
      CHECK(lv.zp_rank == 0);
      CHECK(lv.finite_length == 0);
      CHECK(lv.nabla == 0);
    }
    CHECK(t0.stabilization_level == 0);

    const TowerReport tf = tower_report(mod(ring, {IwasawaSeries::constant(ring, 3)}), 3);
    REQUIRE(tf.total_lengths);
    CHECK(*tf.total_lengths == std::vector<int>{1, 3, 9, 27});
    CHECK(tf.finite_difference_law == true);
    CHECK(tf.levels[2].nabla == 18);
  }

  TEST_CASE("tower reports are deterministic") {
    const SeriesRing ring = ring3();
    const auto m = mod(ring, {phi(ring, 1), px(ring, 3), IwasawaSeries::constant(ring, 3)});
    const TowerReport a = tower_report(m, 4), b = tower_report(m, 4);
    for (std::size_t i = 0; i < a.levels.size(); ++i) {
      CHECK(a.levels[i].nabla == b.levels[i].nabla);
      CHECK(a.levels[i].finite_length == b.levels[i].finite_length);
    }
    CHECK(a.stabilization_level == b.stabilization_level);
  }
}
