#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heunflow/gswe.hpp"
#include "heunflow/ince.hpp"

#include <cmath>
#include <complex>
#include <vector>

using namespace heunflow;
using namespace heunflow::ince;
using heunflow::cplx;

namespace {

const cplx I(0.0, 1.0);

gswe_params sample_gswe() { return {-0.5, 1.3, 0.0, 1.0, 1.1}; }
dche_params sample_dche() { return {-0.5, 1.3, 0.0, 1.1}; }

// characteristic values at the sample parameters, pinned from an
// independent high-precision run of the same continued fractions
const cplx g_root1(0.75887521263824931, 0.0);
const cplx g_root2(0.020927372035593764, 0.0);
const cplx g_root3(-0.1808435570470531, 0.0);
const cplx g_root4(0.72350639312094756, 0.0);
const cplx d_root1(-0.53864098474196240, 0.0);
const cplx d_root2(-0.50020404345138360, 0.0);

} // namespace

TEST_CASE("limit projection keeps the surviving fields") {
  gswe::params pg{-0.5, 1.3, 0.2, 1.0, 0.7, 0.4};
  gswe_params ig = ince_limit(pg, 1.1);
  CHECK(ig.b1 == pg.b1);
  CHECK(ig.b2 == pg.b2);
  CHECK(ig.b3 == pg.b3);
  CHECK(ig.z0 == pg.z0);
  CHECK(ig.q == cplx(1.1));

  dche::params pd{-0.5, 1.3, 0.2, 0.7, 0.4};
  dche_params id = ince_limit(pd, 1.1);
  CHECK(id.b1 == pd.b1);
  CHECK(id.b3 == pd.b3);
  CHECK(id.q == cplx(1.1));

  CHECK_THROWS_AS(ince_limit(pg, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(validate(gswe_params{1.0, 1.0, 0.0, 0.0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate(dche_params{0.0, 1.0, 0.0, 1.0}),
                  std::invalid_argument);
}

TEST_CASE("first-set recurrences match their displayed form") {
  gswe_params p = sample_gswe();
  p.b3 = 0.37;
  gswe_set s = make_set(p, 1);
  CHECK(s.image.b2 == p.b2); // J orders start at B2 - 1
  for (long n = 0; n <= 20; ++n) {
    double nd = double(n);
    auto [al, be, ga] = s.power_system.coeff(n, p.b3);
    CHECK(std::abs(al - p.z0 * (nd + p.b2 + p.b1 / p.z0) * (nd + 1.0)) < 1e-14);
    CHECK(std::abs(be - (nd * (nd + p.b2 - 1.0) + p.b3)) < 1e-14);
    CHECK(std::abs(ga - p.q) < 1e-14);
  }

  dche_params pd = sample_dche();
  pd.b3 = 0.37;
  for (int idx : {1, 2}) {
    dche_set sd = make_set(pd, idx);
    double sgn = idx == 1 ? 1.0 : -1.0;
    cplx shift = idx == 1 ? cplx(0.0) : 2.0 - pd.b2;
    cplx b2eff = idx == 1 ? pd.b2 : 4.0 - pd.b2;
    for (long n = 0; n <= 20; ++n) {
      double nd = double(n);
      auto [al, be, ga] = sd.system.coeff(n, pd.b3);
      CHECK(std::abs(al - (nd + 1.0)) < 1e-14);
      CHECK(std::abs(be - (nd * (nd + b2eff - 1.0) + pd.b3 + shift)) < 1e-13);
      CHECK(std::abs(ga - sgn * pd.q * pd.b1) < 1e-14);
    }
  }
}

TEST_CASE("frozen characteristic values, both chains agreeing") {
  gswe_params p = sample_gswe();
  const cplx frozen[4] = {g_root1, g_root2, g_root3, g_root4};
  for (int idx = 1; idx <= 4; ++idx) {
    gswe_set s = make_set(p, idx);
    root_result rc = solve_b3(s, default_guess(s));
    CHECK(std::abs(rc.root - frozen[idx - 1]) < 1e-9);
    root_result rb = solve_characteristic(s.power_system, rc.root);
    CHECK(std::abs(rb.root - rc.root) < 1e-10);
  }

  dche_params pd = sample_dche();
  const cplx frozen_d[2] = {d_root1, d_root2};
  for (int idx : {1, 2}) {
    dche_set s = make_set(pd, idx);
    root_result r = solve_b3(s, default_guess(s));
    CHECK(std::abs(r.root - frozen_d[idx - 1]) < 1e-9);
  }
}

TEST_CASE("connection ratio carries one chain into the other") {
  gswe_params p = sample_gswe();
  for (int idx = 1; idx <= 4; ++idx) {
    gswe_set s0 = make_set(p, idx);
    p.b3 = solve_b3(s0, default_guess(s0)).root;
    gswe_set s = make_set(p, idx);
    std::vector<cplx> b = power_coeffs(s, 56);
    std::vector<cplx> c = hyper_coeffs(s, 56);
    double worst = 0.0, direct = 0.0;
    std::vector<cplx> ct(56);
    for (long n = 0; n < 56; ++n) ct[n] = connection_ratio(s, n) * b[n];
    for (long n = 1; n <= 50; ++n) {
      auto [al, be, ga] = s.hyper_system.coeff(n, p.b3);
      cplx lhs = al * ct[n + 1] + be * ct[n] + ga * ct[n - 1];
      double scale = std::abs(al * ct[n + 1]) + std::abs(be * ct[n]) +
                     std::abs(ga * ct[n - 1]) + 1e-300;
      worst = std::max(worst, std::abs(lhs) / scale);
      if (std::abs(c[n]) > 1e-200)
        direct = std::max(direct, std::abs(ct[n] - c[n]) / std::abs(c[n]));
    }
    CHECK(worst < 1e-10);
    CHECK(direct < 1e-10);
  }
}

TEST_CASE("every set and expansion kind solves its equation") {
  gswe_params p = sample_gswe();
  const cplx frozen[4] = {g_root1, g_root2, g_root3, g_root4};
  const std::vector<cplx> inner = {0.45, 0.8, 1.4, 1.75};
  const std::vector<cplx> everywhere = {0.3, {0.7, 0.2}, 1.5, 2.2, 2.5, {0.5, -0.4}};
  const std::vector<cplx> outer = {1.6, 2.2, 3.0, {2.0, 1.0}, {1.4, -0.6}};
  for (int idx = 1; idx <= 4; ++idx) {
    p.b3 = frozen[idx - 1];
    gswe_set s = make_set(p, idx);
    std::vector<cplx> b = power_coeffs(s, 70);
    std::vector<cplx> c = hyper_coeffs(s, 120);
    for (cplx z : inner)
      CHECK(residual_at(s, series_kind::power, b, z) < 1e-8);
    for (cplx z : everywhere)
      CHECK(residual_at(s, series_kind::bessel_j, c, z) < 1e-8);
    for (cplx z : outer)
      CHECK(residual_at(s, series_kind::bessel_k, c, z) < 1e-8);
  }
}

TEST_CASE("both reduced sets solve the degenerate equation") {
  dche_params p = sample_dche();
  const cplx frozen[2] = {d_root1, d_root2};
  const std::vector<cplx> inner = {0.3, {0.7, 0.2}, 1.5, 2.5};
  const std::vector<cplx> outer = {1.6, 2.2, 3.0, {1.4, -0.6}};
  for (int idx : {1, 2}) {
    p.b3 = frozen[idx - 1];
    dche_set s = make_set(p, idx);
    std::vector<cplx> c = set_coeffs(s, 120);
    for (cplx z : inner) {
      CHECK(residual_at(s, series_kind::power, c, z) < 1e-8);
      CHECK(residual_at(s, series_kind::bessel_j, c, z) < 1e-8);
    }
    for (cplx z : outer)
      CHECK(residual_at(s, series_kind::bessel_k, c, z) < 1e-8);
  }
}

TEST_CASE("K series carries the square-root exponential at infinity") {
  // after stripping exp(-2i sqrt(qz)) the envelope is z^{1/4 - B2/2}
  gswe_params p = sample_gswe();
  p.b3 = g_root1;
  gswe_set s = make_set(p, 1);
  std::vector<cplx> c = hyper_coeffs(s, 60);
  cplx z1 = 1600.0, z2 = 6400.0;
  cplx u1 = evaluate(s, series_kind::bessel_k, c, z1);
  cplx u2 = evaluate(s, series_kind::bessel_k, c, z2);
  cplx ratio = u2 / u1 *
               std::exp(2.0 * I * (std::sqrt(p.q * z2) - std::sqrt(p.q * z1))) *
               std::pow(z2 / z1, -(0.25 - p.b2 / 2.0));
  CHECK(std::abs(ratio - 1.0) < 5e-2);
}

TEST_CASE("domain refusals name the offending region") {
  gswe_params p = sample_gswe();
  p.b3 = g_root1;
  gswe_set s = make_set(p, 1);
  std::vector<cplx> b = power_coeffs(s, 40);
  std::vector<cplx> c = hyper_coeffs(s, 60);
  CHECK_THROWS_AS(evaluate(s, series_kind::power, b, 2.5), solver_error);
  CHECK_THROWS_AS(evaluate(s, series_kind::bessel_k, c, 0.5), solver_error);
  try {
    evaluate(s, series_kind::bessel_j, c, 0.0);
    CHECK(false);
  } catch (const solver_error& e) {
    CHECK(e.code() == errc::outside_domain);
  }

  dche_params pd = sample_dche();
  pd.b3 = d_root2;
  dche_set sd = make_set(pd, 2);
  std::vector<cplx> cd = set_coeffs(sd, 40);
  try {
    evaluate(sd, series_kind::power, cd, 1e-9);
    CHECK(false);
  } catch (const solver_error& e) {
    CHECK(e.code() == errc::outside_domain);
  }
}

TEST_CASE("degenerate chain link is reported") {
  gswe_params p{-1.0, 1.0, 0.0, 1.0, 1.1};
  try {
    make_set(p, 1);
    CHECK(false);
  } catch (const solver_error& e) {
    CHECK(e.code() == errc::connection_undefined);
  }
}

TEST_CASE("direct rebuild of the K series from the halved chain") {
  gswe_params p = sample_gswe();
  p.b3 = g_root1;
  appendix_report rep =
      appendix_a_verify(p, {1.6, 2.2, 3.0, {2.0, 1.0}});
  CHECK(rep.max_chain_mismatch < 1e-10);
  CHECK(rep.max_residual < 1e-8);
  CHECK_THROWS_AS(appendix_a_verify(p, {0.5}), solver_error);
}

TEST_CASE("vanishing-z0 continuity lands on the degenerate sets") {
  gswe_params pg = sample_gswe();
  pg.z0 = 1e-4;
  gswe_set sg0 = make_set(pg, 1);
  cplx root_g = solve_b3(sg0, d_root1).root;
  CHECK(std::abs(root_g - d_root1) < 1e-3);

  pg.b3 = root_g;
  gswe_set sg = make_set(pg, 1);
  dche_params pd = sample_dche();
  pd.b3 = d_root1;
  dche_set sd = make_set(pd, 1);
  std::vector<cplx> cg = hyper_coeffs(sg, 120);
  std::vector<cplx> cd = set_coeffs(sd, 120);
  for (cplx z : {cplx(0.5), cplx(1.0), cplx(2.0)}) {
    cplx ug = evaluate(sg, series_kind::bessel_k, cg, z);
    cplx ud = evaluate(sd, series_kind::bessel_k, cd, z);
    CHECK(std::abs(ug - ud) / std::abs(ud) < 1e-3);
  }
}

TEST_CASE("small-frequency spheroidal solutions approach the limit sets") {
  // omega -> 0 with the product 2 eta omega = -q held fixed
  cplx q = 1.1;
  double om = 1e-3;
  gswe::params pg{-0.5, 1.3, 0.0, 1.0, om, (-q / (2.0 * om)).real()};
  gswe::solution_set sg0 = gswe::make_set(pg, 1);
  cplx root_g = gswe::solve_b3(sg0, g_root1).root;
  CHECK(std::abs(root_g - g_root1) < 1e-2);

  pg.b3 = root_g;
  gswe::solution_set sg = gswe::make_set(pg, 1);
  gswe_params pi = sample_gswe();
  pi.b3 = g_root1;
  gswe_set si = make_set(pi, 1);
  std::vector<cplx> bg = gswe::power_coeffs(sg, 140);
  std::vector<cplx> bi = power_coeffs(si, 140);
  for (cplx z : {cplx(0.5), cplx(1.5)}) {
    cplx ug = gswe::evaluate(sg, gswe::series_kind::power, bg, z) *
              std::exp(-I * pg.omega * z);
    cplx ui = evaluate(si, series_kind::power, bi, z);
    CHECK(std::abs(ug - ui) / std::abs(ui) < 1e-2);
  }
}
