#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "starcode/perm.hpp"

namespace starcode {

struct BitradeSearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t solutions = 0;
  bool complete = true;
};

// Exhaustive backtracking over ternary vertex states (outside / in T0 /
// in T1) with per-ball propagation of the bitrade counting condition.
// The identity is pinned into T0, which is harmless for volume spectra
// because right translations are automorphisms. Vertices are explored in
// breadth-first order from the identity; branching picks the most
// constrained unbalanced ball. on_solution gets the sorted ranks of both
// halves and returns false to stop. budget_seconds <= 0 means no budget.
BitradeSearchStats enumerate_bitrade_assignments(
    int degree, double budget_seconds,
    const std::function<bool(const std::vector<Rank>&, const std::vector<Rank>&)>&
        on_solution);

}  // namespace starcode
