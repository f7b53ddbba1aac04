#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heunflow/parallel.hpp"
#include "heunflow/residual.hpp"

#include <cmath>
#include <vector>

using namespace heunflow;

TEST_CASE("parallel_for writes every slot exactly like serial_for") {
  const std::size_t n = 10000;
  std::vector<double> a(n), b(n);
  auto body_a = [&](std::size_t i) { a[i] = std::sin(0.001 * double(i)); };
  auto body_b = [&](std::size_t i) { b[i] = std::sin(0.001 * double(i)); };
  serial_for(n, body_a);
  parallel_for(n, body_b);
  for (std::size_t i = 0; i < n; ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("exceptions thrown inside parallel bodies reach the caller") {
  CHECK_THROWS_AS(
      parallel_for(64, [](std::size_t i) {
        if (i == 13) throw std::runtime_error("boom");
      }),
      std::runtime_error);
}

TEST_CASE("residual grid is independent of execution order") {
  // a function that exactly solves f'' - f = 0
  auto f = [](cplx z) { return std::exp(z); };
  auto eq = [](cplx) { return ode_coeffs{1.0, 0.0, -1.0}; };
  std::vector<cplx> zs;
  for (int i = 0; i < 200; ++i) zs.push_back(cplx(0.01 * i - 1.0, 0.3));
  auto r = residual_grid(f, eq, zs);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    double direct = ode_residual(f, eq, zs[i]);
    CHECK(r[i] == direct);
    CHECK(r[i] < 5e-9); // noise floor of the h = 1e-3 stencil

  }
}
