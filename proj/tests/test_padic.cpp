#include <random>

#include "doctest.h"
#include "iwkit/errors.hpp"
#include "iwkit/kernels.hpp"
#include "iwkit/matrix.hpp"
#include "iwkit/padic.hpp"
#include "iwkit/smith.hpp"
#include "oracle/exact.hpp"
#include "support/random.hpp"

using namespace iwkit;

namespace {

using support::random_matrix;
using support::random_unimodular;

ResidueMatrix diag_powers(const Modulus& mod, std::initializer_list<int> exps) {
  ResidueMatrix m(mod, exps.size(), exps.size());
  std::size_t i = 0;
  for (int e : exps) {
    m(i, i) = e >= mod.precision() ? 0 : mod.power(e);
    ++i;
  }
  return m;
}

}  // namespace

TEST_SUITE("padic") {
  TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(Modulus(2, 5), InputError);
    CHECK_THROWS_AS(Modulus(9, 5), InputError);
    CHECK_THROWS_AS(Modulus(3, 0), InputError);
    CHECK_THROWS_AS(Modulus(7, 23), InputError);
    CHECK_NOTHROW(Modulus(7, 22));
    CHECK(Modulus(3, 4).value() == 81);
    CHECK(is_odd_prime(101));
    CHECK_FALSE(is_odd_prime(91));
  }

  TEST_CASE("valuation and unit inverse") {
    const Modulus m(5, 6);
    CHECK(m.valuation(0) == 6);
    CHECK(m.valuation(25 * 3) == 2);
    CHECK(m.valuation(1) == 0);
    for (u64 a : {1ULL, 2ULL, 7ULL, 15624ULL, 1234ULL}) {
      CHECK(m.mul(a, m.unit_inverse(a)) == 1);
    }
    CHECK_THROWS_AS(m.unit_inverse(10), InputError);
  }

  TEST_CASE("decimal parsing reduces arbitrary-length integers") {
    const Modulus m(3, 24);
    const std::string big = "-123456789012345678901234567890123456789";
    const oracle::Int x(big);
    CHECK(m.parse_decimal(big) == oracle::residue(x, m.value()));
    CHECK(m.parse_decimal("-1") == m.value() - 1);
    CHECK(m.parse_decimal("0") == 0);
    CHECK_THROWS_AS(m.parse_decimal("12a"), InputError);
    CHECK_THROWS_AS(m.parse_decimal(""), InputError);
  }

  TEST_CASE("padic arithmetic keeps the smaller precision") {
    const PadicInt a(3, 10, 5), b(3, 6, 7);
    CHECK((a + b).precision() == 6);
    CHECK((a * b).residue() == 35);
    CHECK((a - b).residue() == Modulus(3, 6).value() - 2);
    CHECK((a / b * b).residue() == 5);
    CHECK_THROWS_AS(a / PadicInt(3, 6, 3), InputError);
    CHECK(PadicInt(3, 10, 0).valuation() == 10);
    CHECK(PadicInt(3, 10, 18).valuation() == 2);
    CHECK(PadicInt(3, 10, 18).lowered(1).is_zero());
    CHECK_THROWS_AS(PadicInt(3, 4, 1) + PadicInt(5, 4, 1), InputError);
  }
}

TEST_SUITE("matrix") {
  TEST_CASE("inverse and determinant against exact integers") {
    std::mt19937_64 rng(21);
    const Modulus mod(5, 12);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 1 + trial % 6;
      ResidueMatrix a(mod, n, n);
      oracle::Mat ex(n, std::vector<oracle::Int>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const long long v = static_cast<long long>(rng() % 41) - 20;
          a(i, j) = mod.reduce(v);
          ex[i][j] = v;
        }
      }
      CHECK(a.determinant() == oracle::residue(oracle::determinant(ex), mod.value()));
      if (mod.is_unit(a.determinant())) {
        CHECK(a * a.inverse() == ResidueMatrix::identity(mod, n));
      } else {
        CHECK_THROWS_AS(a.inverse(), InputError);
      }
    }
  }

  TEST_CASE("from_padic rejects mixed input") {
    std::vector<std::vector<PadicInt>> rows{{PadicInt(3, 5, 1), PadicInt(3, 4, 1)}};
    CHECK_THROWS_AS(ResidueMatrix::from_padic(rows), InputError);
    rows = {{PadicInt(3, 5, 1), PadicInt(5, 5, 1)}};
    CHECK_THROWS_AS(ResidueMatrix::from_padic(rows), InputError);
    rows = {{PadicInt(3, 5, 1)}, {PadicInt(3, 5, 1), PadicInt(3, 5, 2)}};
    CHECK_THROWS_AS(ResidueMatrix::from_padic(rows), InputError);
  }
}

TEST_SUITE("smith") {
  TEST_CASE("small fixed cases") {
    const Modulus m5(3, 5);
    CHECK(snf(ResidueMatrix::from_integers(m5, {{3}})).exponents == std::vector<int>{1});
    CHECK(snf(ResidueMatrix::identity(m5, 2)).exponents == std::vector<int>{0, 0});
    const SnfResult z = snf(ResidueMatrix(m5, 3, 3));
    CHECK(z.exponents == std::vector<int>{5, 5, 5});
    CHECK(z.rank_indicators == 3);
  }

  TEST_CASE("scrambled diag(3, 9) over Z/3^8") {
    std::mt19937_64 rng(31);
    const Modulus mod(3, 8);
    for (int trial = 0; trial < 20; ++trial) {
      const ResidueMatrix a = random_unimodular(rng, mod, 2) * diag_powers(mod, {1, 2}) * random_unimodular(rng, mod, 2);
      CHECK(snf(a).exponents == std::vector<int>{1, 2});
    }
  }

  TEST_CASE("exponents are invariant under unimodular scrambles") {
    std::mt19937_64 rng(32);
    for (u64 p : {3ULL, 5ULL}) {
      const Modulus mod(p, 10);
      for (int trial = 0; trial < 100; ++trial) {
        const std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
        ResidueMatrix a = random_matrix(rng, mod, r, c);
        // push some entries towards higher valuation so the test sees nontrivial divisors
        for (std::size_t i = 0; i < r; ++i) {
          if (rng() % 2) kernels::scale_mod(a.row(i), mod.power(static_cast<int>(rng() % 4)), mod.value());
        }
        const auto base = snf(a, 0).exponents;
        const ResidueMatrix b = random_unimodular(rng, mod, r) * a * random_unimodular(rng, mod, c);
        CHECK(snf(b, 0).exponents == base);
      }
    }
  }

  TEST_CASE("exponents match an exact integer diagonalization") {
    std::mt19937_64 rng(33);
    const Modulus mod(3, 30);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
      ResidueMatrix a(mod, r, c);
      oracle::Mat ex(r, std::vector<oracle::Int>(c));
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
          const long long v = static_cast<long long>(rng() % 19) - 9;
          ex[i][j] = v * (rng() % 3 == 0 ? 9 : 1);
          a(i, j) = oracle::residue(ex[i][j], mod.value());
        }
      }
      const auto o = oracle::local_invariants(ex, 3);
      const ModuleInvariants inv = module_invariants(a);
      CHECK(inv.free_rank == o.free_rank);
      CHECK(inv.length == o.length);
    }
  }

  TEST_CASE("module invariants") {
    const Modulus mod(3, 24);
    CHECK(module_invariants(ResidueMatrix::from_integers(mod, {{0, 0}, {0, 3}})) == ModuleInvariants{1, 1});
    CHECK(module_invariants(ResidueMatrix(mod, 3, 3)) == ModuleInvariants{3, 0});
    const ResidueMatrix a = ResidueMatrix::from_integers(mod, {{1, 2}, {0, 27}});
    const ResidueMatrix b = ResidueMatrix::from_integers(mod, {{9, 0}, {0, 0}});
    const ResidueMatrix blocks[] = {a, b};
    const auto sum = module_invariants(ResidueMatrix::block_diagonal(mod, blocks));
    CHECK(sum.free_rank == module_invariants(a).free_rank + module_invariants(b).free_rank);
    CHECK(sum.length == module_invariants(a).length + module_invariants(b).length);
  }

  TEST_CASE("exponents near the precision are refused") {
    const Modulus mod(3, 24);
    const ResidueMatrix a = diag_powers(mod, {2, 21});
    CHECK_THROWS_AS(module_invariants(a, 4), PrecisionError);
    CHECK(module_invariants(a, 2) == ModuleInvariants{0, 23});
    const SnfResult s = snf(a, 4);
    CHECK_FALSE(s.transform_valid);
  }

  TEST_CASE("snf from padic rows") {
    const std::vector<std::vector<PadicInt>> rows{{PadicInt(3, 5, 3), PadicInt(3, 5, 0)},
                                                  {PadicInt(3, 5, 0), PadicInt(3, 5, 9)}};
    CHECK(snf(rows).exponents == std::vector<int>{1, 2});
  }
}
