#pragma once

#include <string>
#include <vector>

#include "iwkit/growth.hpp"
#include "oracle/exact.hpp"

namespace support {

// Synthetic (S, M) pairs at p = 3 with Sha lengths s_0..s_4 frozen from
// sha_lengths_exact() below; -1 marks an infinite Sha_n.
struct GrowthScenario {
  std::string name;
  std::vector<oracle::Poly> generators;
  std::vector<int> shape;
  std::vector<long> lengths;
};

inline oracle::Poly phi3(int n) { return oracle::phi(3, n); }

inline oracle::Poly times(std::initializer_list<oracle::Poly> fs) {
  oracle::Poly r = oracle::make({1});
  for (const auto& f : fs) r = oracle::mul(r, f);
  return r;
}

inline std::vector<GrowthScenario> growth_scenarios() {
  using oracle::make;
  return {
      {"Phi_1 (X+3) / {1}", {times({phi3(1), make({3, 1})})}, {1}, {1, 2, 3, 4, 5}},
      {"3 / {}", {make({3})}, {}, {1, 3, 9, 27, 81}},
      {"Phi_0 / {0}", {phi3(0)}, {0}, {0, 0, 0, 0, 0}},
      {"Phi_0 Phi_1 / {0,1}", {times({phi3(0), phi3(1)})}, {0, 1}, {1, 1, 1, 1, 1}},
      {"Phi_1, Phi_2 / {1,2}", {phi3(1), phi3(2)}, {1, 2}, {0, 0, 0, 0, 0}},
      {"3 Phi_1 / {1}", {times({make({3}), phi3(1)})}, {1}, {1, 3, 9, 27, 81}},
      {"Phi_2 (X^2+3) / {2}", {times({phi3(2), make({3, 0, 1})})}, {2}, {1, 4, 6, 8, 10}},
      {"Phi_0 (X+3), 3 / {0}", {times({phi3(0), make({3, 1})}), make({3})}, {0}, {2, 5, 12, 31, 86}},
      {"Phi_1 Phi_2 / {1,2}", {times({phi3(1), phi3(2)})}, {1, 2}, {1, 2, 2, 2, 2}},
      {"Phi_1, Phi_1 (X+3) / {1,1}", {phi3(1), times({phi3(1), make({3, 1})})}, {1, 1}, {1, 2, 3, 4, 5}},
      {"3 Phi_2 / {2}", {times({make({3}), phi3(2)})}, {2}, {1, 3, 9, 27, 81}},
      {"Phi_1 (X^3+3) / {1}", {times({phi3(1), make({3, 0, 0, 1})})}, {1}, {1, 3, 6, 9, 12}},
      {"Phi_0 Phi_1 Phi_2 / {0,1,2}", {times({phi3(0), phi3(1), phi3(2)})}, {0, 1, 2}, {2, 4, 4, 4, 4}},
  };
}

// Sha_n lengths from exact integer elimination, with the same allocation
// rule as the library: each Phi_c goes to the first generator divisible by
// it that has not received c yet, through the multiplier f / Phi_c.
inline std::vector<long> sha_lengths_exact(const GrowthScenario& sc, long long p, int n_max) {
  std::vector<std::vector<oracle::Poly>> mult(sc.generators.size());
  std::vector<std::vector<int>> used(sc.generators.size());
  for (int c : sc.shape) {
    for (std::size_t j = 0; j < sc.generators.size(); ++j) {
      if (std::find(used[j].begin(), used[j].end(), c) != used[j].end()) continue;
      auto [q, r] = oracle::divmod_monic(sc.generators[j], oracle::phi(p, c));
      if (!r.empty()) continue;
      mult[j].push_back(q);
      used[j].push_back(c);
      break;
    }
  }
  std::vector<long> out;
  for (int n = 0; n <= n_max; ++n) {
    const oracle::Poly w = oracle::omega(p, n);
    long len = 0;
    bool finite = true;
    for (std::size_t j = 0; j < sc.generators.size(); ++j) {
      oracle::Mat m = oracle::mult_matrix(sc.generators[j], w);
      for (const auto& h : mult[j]) m = oracle::hconcat(m, oracle::mult_matrix(h, w));
      const auto inv = oracle::local_invariants(m, p);
      finite = finite && inv.free_rank == 0;
      len += inv.length;
    }
    out.push_back(finite ? len : -1);
  }
  return out;
}

}  // namespace support
