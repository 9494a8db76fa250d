#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "catmood/stencil.hpp"

using namespace catmood;

TEST_CASE("known derivative and interpolation weights") {
  CoeffTable table(3);

  auto w = table.coeffs(1, 0, Offset::half());
  CHECK(w[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(w[1] == doctest::Approx(0.5).epsilon(1e-14));

  w = table.coeffs(1, 1, Offset::at_node(0));
  CHECK(w[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(w[1] == doctest::Approx(1.0).epsilon(1e-14));

  w = table.coeffs(2, 1, Offset::at_node(0));
  CHECK(w[0] == doctest::Approx(-1.0 / 3.0).epsilon(1e-13));
  CHECK(w[1] == doctest::Approx(-0.5).epsilon(1e-13));
  CHECK(w[2] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(w[3] == doctest::Approx(-1.0 / 6.0).epsilon(1e-13));

  w = table.coeffs(2, 0, Offset::half());
  CHECK(w[0] == doctest::Approx(-1.0 / 16.0).epsilon(1e-13));
  CHECK(w[1] == doctest::Approx(9.0 / 16.0).epsilon(1e-13));
  CHECK(w[2] == doctest::Approx(9.0 / 16.0).epsilon(1e-13));
  CHECK(w[3] == doctest::Approx(-1.0 / 16.0).epsilon(1e-13));
}

TEST_CASE("partition of unity and constant annihilation for every entry") {
  CoeffTable table(4);
  for (int p = 1; p <= 4; ++p)
    for (int k = 0; k < 2 * p; ++k) {
      std::vector<Offset> offsets;
      for (int j = -p + 1; j <= p; ++j) offsets.push_back(Offset::at_node(j));
      offsets.push_back(Offset::half());
      for (const Offset q : offsets) {
        auto w = table.coeffs(p, k, q);
        double sum = 0.0;
        for (double c : w) sum += c;
        if (k == 0)
          CHECK(sum == doctest::Approx(1.0).epsilon(1e-11));
        else
          CHECK(std::abs(sum) < 1e-9);
      }
    }
}

TEST_CASE("order above 2P-1 is rejected") {
  CoeffTable table(2);
  CHECK_THROWS_AS(table.coeffs(1, 2, Offset::at_node(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(table.coeffs(2, 4, Offset::half()), std::invalid_argument);
  CHECK_THROWS_AS(derivative_weights(2, 4, 0.5), std::invalid_argument);
}

TEST_CASE("apply on simple samples") {
  CoeffTable table(2);

  // constant data, any derivative weights -> 0
  const double c4[4] = {3.5, 3.5, 3.5, 3.5};
  auto w = table.coeffs(2, 1, Offset::at_node(0));
  CHECK(std::abs(apply_weights(w, std::span<const double>(c4, 4), 0.1, 1)) <
        1e-11);

  // samples of x on nodes {-1,0,1,2} * dx -> slope 1
  const double dx = 0.37;
  double lin[4];
  for (int s = 0; s < 4; ++s) lin[s] = (s - 1) * dx;
  CHECK(apply_weights(w, std::span<const double>(lin, 4), dx, 1) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // samples of x^3 at unit spacing, first derivative at 0 -> 0
  double cub[4];
  for (int s = 0; s < 4; ++s) cub[s] = std::pow(s - 1.0, 3);
  CHECK(std::abs(apply_weights(w, std::span<const double>(cub, 4), 1.0, 1)) <
        1e-12);

  CHECK_THROWS(apply_weights(w, std::span<const double>(cub, 3), 1.0, 1));
}

namespace {

double poly_eval(const std::vector<double>& coef, double x) {
  double v = 0.0;
  for (size_t i = coef.size(); i-- > 0;) v = v * x + coef[i];
  return v;
}

std::vector<double> poly_derivative(std::vector<double> coef, int k) {
  for (int d = 0; d < k; ++d) {
    for (size_t i = 1; i < coef.size(); ++i) coef[i - 1] = coef[i] * i;
    coef.pop_back();
    if (coef.empty()) return {0.0};
  }
  return coef;
}

}  // namespace

TEST_CASE("polynomial exactness up to degree 2P-1") {
  CoeffTable table(4);
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_int_distribution<int> pick_p(1, 4);

  for (int trial = 0; trial < 300; ++trial) {
    const int p = pick_p(rng);
    std::uniform_int_distribution<int> pick_k(0, 2 * p - 1);
    const int k = pick_k(rng);
    std::uniform_int_distribution<int> pick_q(-p + 1, p + 1);
    const int qsel = pick_q(rng);
    const Offset q = qsel == p + 1 ? Offset::half() : Offset::at_node(qsel);

    std::vector<double> poly(2 * p);
    for (auto& c : poly) c = coef(rng);

    const double delta = 0.31;
    std::vector<double> samples(2 * p);
    for (int s = 0; s < 2 * p; ++s)
      samples[s] = poly_eval(poly, (s - p + 1) * delta);

    const auto w = table.coeffs(p, k, q);
    const double got = apply_weights(w, samples, delta, k);
    const double want = poly_eval(poly_derivative(poly, k), q.value() * delta);
    CHECK(got == doctest::Approx(want).epsilon(1e-10));
  }
}

TEST_CASE("the same weights differentiate in time") {
  // gamma^{k,0} applied to samples of a polynomial in t at spacing dt gives
  // its k-th time derivative at t = 0.
  CoeffTable table(3);
  const double dt = 0.013;
  const std::vector<double> poly = {0.4, -1.2, 0.7, 0.3, -0.9, 0.05};
  for (int k = 1; k <= 5; ++k) {
    std::vector<double> samples(6);
    for (int r = 0; r < 6; ++r) samples[r] = poly_eval(poly, (r - 2) * dt);
    const auto w = table.coeffs(3, k, Offset::at_node(0));
    const double got = apply_weights(w, samples, dt, k);
    const double want = poly_eval(poly_derivative(poly, k), 0.0);
    CHECK(got == doctest::Approx(want).epsilon(1e-8));
  }
}
