#pragma once

#include <cstdint>

namespace catmood {

// Arithmetic-cost meter for the interface-flux algorithm. Charges follow
// the per-phase accounting used by the cost formulas (a fused
// multiply-accumulate counts as one flop; per-step coefficient tables are
// charged per cell), so totals are a cost model, not hardware counters.
struct FlopCounter {
  std::int64_t flops = 0;
  std::int64_t fevals = 0;

  void merge(const FlopCounter& o) {
    flops += o.flops;
    fevals += o.fevals;
  }
};

struct FlopBudget {
  std::int64_t flops = 0;
  std::int64_t fevals = 0;
};

// Closed-form per-cell per-step operation count for the order-2P scheme in
// the 1D scalar case.
inline FlopBudget flop_budget(int p) {
  const std::int64_t q = 2 * p;
  return FlopBudget{7 * q * q * q / 2 - 3 * q * q / 2 + q,
                    q * q * q - 2 * q * q + q + 1};
}

}  // namespace catmood
