#pragma once

#include <map>
#include <span>
#include <vector>

namespace catmood {

// Evaluation offset in units of the grid spacing. Exact rational with
// denominator 1 or 2, stored as twice its value so it can key a map.
struct Offset {
  int twice = 0;

  static constexpr Offset at_node(int j) { return Offset{2 * j}; }
  static constexpr Offset half() { return Offset{1}; }

  bool operator<(const Offset& o) const { return twice < o.twice; }
  bool operator==(const Offset& o) const { return twice == o.twice; }
  double value() const { return 0.5 * twice; }
};

// Finite-difference / interpolation weights on the 2P-point stencil
// {(-P+1)*d, ..., P*d}: the k-th derivative of the degree-(2P-1)
// interpolant evaluated at offset q*d. The caller supplies the 1/d^k
// factor when applying the weights.
class CoeffTable {
 public:
  // Builds every (P, k, q) entry for P = 1..max_p, k = 0..2P-1 and
  // q in {-P+1, ..., P} plus the midpoint 1/2. Read-only afterwards.
  explicit CoeffTable(int max_p);

  int max_p() const { return max_p_; }

  // Weights for one operator; throws std::invalid_argument when k >= 2P
  // (the interpolant degree cannot support the requested derivative).
  std::span<const double> coeffs(int half_width, int order, Offset q) const;

 private:
  struct Key {
    int p, k, q2;
    bool operator<(const Key& o) const {
      if (p != o.p) return p < o.p;
      if (k != o.k) return k < o.k;
      return q2 < o.q2;
    }
  };
  int max_p_;
  std::map<Key, std::vector<double>> table_;
};

// Computes the weights directly (no cache); exposed for cross-checks.
std::vector<double> derivative_weights(int half_width, int order, double at);

// (1/delta^k) * sum_j w_j * samples_j for one component set of samples.
double apply_weights(std::span<const double> w, std::span<const double> samples,
                     double delta, int order);

}  // namespace catmood
