#include "catmood/stencil.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace catmood {

namespace {

// Solves the square system A x = b with partial pivoting, in place.
std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a[col * n + c], a[pivot * n + c]);
      std::swap(b[col], b[pivot]);
    }
    const double d = a[col * n + col];
    if (d == 0.0) throw std::runtime_error("singular stencil system");
    for (int r = col + 1; r < n; ++r) {
      const double m = a[r * n + col] / d;
      if (m == 0.0) continue;
      for (int c = col; c < n; ++c) a[r * n + c] -= m * a[col * n + c];
      b[r] -= m * b[col];
    }
  }
  std::vector<double> x(n);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a[r * n + c] * x[c];
    x[r] = s / a[r * n + r];
  }
  return x;
}

}  // namespace

std::vector<double> derivative_weights(int half_width, int order, double at) {
  const int p = half_width;
  const int n = 2 * p;
  if (p < 1) throw std::invalid_argument("stencil half-width must be >= 1");
  if (order < 0 || order >= n)
    throw std::invalid_argument("derivative order " + std::to_string(order) +
                                " exceeds 2P-1 for P=" + std::to_string(p));
  // Exactness on monomials x^m, m = 0..2P-1, at the evaluation point:
  // sum_j w_j * node_j^m = (d^order/dx^order x^m)(at).
  std::vector<double> a(static_cast<size_t>(n) * n), b(n);
  for (int m = 0; m < n; ++m) {
    for (int j = 0; j < n; ++j) {
      const double node = static_cast<double>(j - p + 1);
      a[m * n + j] = std::pow(node, m);
    }
    if (m < order) {
      b[m] = 0.0;
    } else {
      double c = 1.0;
      for (int i = 0; i < order; ++i) c *= static_cast<double>(m - i);
      b[m] = c * std::pow(at, m - order);
    }
  }
  return solve_dense(std::move(a), std::move(b));
}

CoeffTable::CoeffTable(int max_p) : max_p_(max_p) {
  for (int p = 1; p <= max_p; ++p) {
    for (int k = 0; k < 2 * p; ++k) {
      for (int j = -p + 1; j <= p; ++j) {
        const Offset q = Offset::at_node(j);
        table_[Key{p, k, q.twice}] = derivative_weights(p, k, q.value());
      }
      const Offset q = Offset::half();
      table_[Key{p, k, q.twice}] = derivative_weights(p, k, q.value());
    }
  }
}

std::span<const double> CoeffTable::coeffs(int half_width, int order,
                                           Offset q) const {
  if (order >= 2 * half_width)
    throw std::invalid_argument("derivative order " + std::to_string(order) +
                                " exceeds 2P-1 for P=" +
                                std::to_string(half_width));
  auto it = table_.find(Key{half_width, order, q.twice});
  if (it == table_.end())
    throw std::invalid_argument("stencil entry not built: P=" +
                                std::to_string(half_width) +
                                " k=" + std::to_string(order) +
                                " 2q=" + std::to_string(q.twice));
  return it->second;
}

double apply_weights(std::span<const double> w, std::span<const double> samples,
                     double delta, int order) {
  if (w.size() != samples.size())
    throw std::invalid_argument("weight/sample length mismatch");
  double s = 0.0;
  for (size_t j = 0; j < w.size(); ++j) s += w[j] * samples[j];
  return s / std::pow(delta, order);
}

}  // namespace catmood
