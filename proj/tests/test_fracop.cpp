#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

#include "fracseq/fracop.hpp"

using namespace fracseq;

TEST_CASE("order zero is the identity") {
  const Seq x{3.0, -1.0, 4.0, -1.5, 9.0};
  CHECK(apply_forward(FracOrder(0.0), x) == x);
  CHECK(apply_inverse(FracOrder(0.0), x) == x);
}

TEST_CASE("order one is the backward difference") {
  const Seq x{2.0, 5.0, 4.0, 4.0, 7.0};
  const Seq y = apply_forward(FracOrder(1.0), x);
  REQUIRE(y.size() == 5);
  CHECK(y[0] == 2.0);
  for (std::size_t k = 1; k < 5; ++k) CHECK(y[k] == x[k] - x[k - 1]);

  // Its inverse is the partial-sum operator.
  const Seq z = apply_inverse(FracOrder(1.0), y);
  for (std::size_t k = 0; k < 5; ++k) CHECK(z[k] == doctest::Approx(x[k]).epsilon(1e-14));
}

TEST_CASE("forward then inverse round trip") {
  std::mt19937 rng(915);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (double alpha : {0.5, -0.5, 2.0 / 3.0, 1.7}) {
    Seq x(200);
    for (double& v : x) v = dist(rng);
    const Seq y = apply_forward(FracOrder(alpha), x);
    const Seq z = apply_inverse(FracOrder(alpha), y);
    REQUIRE(z.size() == x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
      const double scale = std::max(1.0, std::fabs(x[k]));
      CHECK(std::fabs(z[k] - x[k]) / scale < 1e-9);
    }
  }
}

TEST_CASE("operator semigroup on sequences") {
  std::mt19937 rng(916);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Seq x(64);
  for (double& v : x) v = dist(rng);
  for (auto [a, b] : {std::pair{0.5, 0.25}, {0.3, -0.8}, {1.2, 0.6}}) {
    const Seq two_step = apply_forward(FracOrder(a), apply_forward(FracOrder(b), x));
    const Seq one_step = apply_forward(FracOrder(a + b), x);
    for (std::size_t k = 0; k < x.size(); ++k)
      CHECK(two_step[k] == doctest::Approx(one_step[k]).epsilon(1e-10));
  }
}

TEST_CASE("operator matrix matches the direct transform") {
  const FracOrder half(0.5);
  const TriMatrix t = operator_matrix(half, 12);
  const CoeffSeries c = frac_coeffs(half, 12);
  for (std::size_t n = 0; n < 12; ++n)
    for (std::size_t k = 0; k <= n; ++k) CHECK(t.at(n, k) == c[n - k]);
  CHECK(t.at(2, 5) == 0.0);

  Seq x{1.0, 2.0, 0.0, -3.0, 0.5, 1.0, 1.0, -1.0, 2.0, 0.0, 4.0, -2.0};
  const Seq via_matrix = t.apply(x);
  const Seq direct = apply_forward(half, x);
  for (std::size_t k = 0; k < x.size(); ++k)
    CHECK(via_matrix[k] == doctest::Approx(direct[k]).epsilon(1e-14));
}

TEST_CASE("sequence validation") {
  CHECK_THROWS_AS(apply_forward(FracOrder(0.5), Seq{}), std::invalid_argument);
  CHECK_THROWS_AS(apply_forward(FracOrder(0.5), Seq{1.0, std::nan("")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      apply_inverse(FracOrder(0.5), Seq{std::numeric_limits<double>::infinity()}),
      std::invalid_argument);
}
