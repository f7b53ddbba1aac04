#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heunflow/dche.hpp"
#include "heunflow/gswe.hpp"

using namespace heunflow;
using namespace heunflow::dche;

namespace {

const cplx I(0, 1);

params sample() {
  params p;
  p.b1 = -0.5;
  p.b2 = 1.3;
  p.b3 = 0.0;
  p.omega = 0.7;
  p.eta = 0.4;
  return p;
}

// frozen characteristic values at the sample parameters
const cplx root_set1(0.16707147658992713, 0.0);
const cplx root_set2(-0.81754312288858311, 0.0);

// two-sided offset at B1=1, B2=1.4, B3=0.35, omega=0.8, eta=0.3
const cplx nu_frozen(-0.5, 0.675110204952358);

params nu_sample() {
  params p;
  p.b1 = 1.0;
  p.b2 = 1.4;
  p.b3 = 0.35;
  p.omega = 0.8;
  p.eta = 0.3;
  return p;
}

} // namespace

TEST_CASE("dropping z0 is a field projection guarded against degeneracy") {
  gswe::params g;
  g.b1 = 1.0;
  g.b2 = 2.0;
  g.b3 = 3.0;
  g.z0 = 0.1;
  g.omega = 1.0;
  g.eta = 0.5;
  params p = leaver_limit(g);
  CHECK(p.b1 == cplx(1.0));
  CHECK(p.b2 == cplx(2.0));
  CHECK(p.b3 == cplx(3.0));
  CHECK(p.omega == cplx(1.0));
  CHECK(p.eta == cplx(0.5));
  g.b1 = 0.0;
  CHECK_THROWS_AS(leaver_limit(g), solver_error);
  try {
    leaver_limit(g);
  } catch (const solver_error& e) {
    CHECK(e.code() == errc::degenerate_target);
  }
}

TEST_CASE("rescaled z0->0 limit of the spheroidal chain gives this chain") {
  // with b_n = B1^{-n} c_n the first spheroidal set's recurrence at z0 -> 0
  // turns into the first chain here
  gswe::params g;
  g.b1 = -0.5;
  g.b2 = 1.3;
  g.b3 = 0.21;
  g.z0 = 1e-12;
  g.omega = 0.7;
  g.eta = 0.4;
  gswe::solution_set gs = gswe::make_set(g, 1);
  params p = leaver_limit(g);
  solution_set ds = make_set(p, 1);
  for (long n = 0; n <= 12; ++n) {
    auto [ab, bb, gb] = gs.power_system.coeff(n, g.b3);
    auto [ac, bc, gc] = ds.system.coeff(n, p.b3);
    CHECK(std::abs(ab / p.b1 - ac) < 1e-9 * std::abs(ac));
    CHECK(std::abs(bb - bc) < 1e-9 * std::max(1.0, std::abs(bc)));
    CHECK(std::abs(gb * p.b1 - gc) < 1e-9 * std::abs(gc));
  }
}

TEST_CASE("third spheroidal prefactor collapses to the essential factor") {
  // z^{1+B1/z0} (z-z0)^{1-B2-B1/z0} -> z^{2-B2} e^{B1/z}, compared in logs
  cplx b1 = -0.5, b2 = 1.3;
  double z0 = 1e-6;
  for (cplx z : {cplx(0.8), cplx(1.7), cplx(2.4, 0.3)}) {
    cplx lhs = (1.0 + b1 / z0) * std::log(z) +
               (1.0 - b2 - b1 / z0) * std::log(z - z0);
    cplx rhs = (2.0 - b2) * std::log(z) + b1 / z;
    CHECK(std::abs(lhs - rhs) < 1e-5);
  }
}

TEST_CASE("recurrence entries match the hand-written displays") {
  params p = sample();
  p.b3 = 0.21;
  solution_set s1 = make_set(p, 1);
  solution_set s2 = make_set(p, 2);
  cplx iw = I * p.omega, ie = I * p.eta;
  for (long n = 0; n <= 8; ++n) {
    double nd = double(n);
    auto [a1, b1c, g1] = s1.system.coeff(n, p.b3);
    CHECK(std::abs(a1 - (nd + 1.0)) < 1e-15);
    CHECK(std::abs(b1c - (nd * (nd + p.b2 - 1.0) + iw * p.b1 + p.b3)) < 1e-14);
    CHECK(std::abs(g1 - 2.0 * iw * p.b1 * (nd + ie + p.b2 / 2.0 - 1.0)) < 1e-14);
    auto [a2, b2c, g2] = s2.system.coeff(n, p.b3);
    CHECK(std::abs(a2 - (nd + 1.0)) < 1e-15);
    CHECK(std::abs(b2c - (nd * (nd + 3.0 - p.b2) + 2.0 - iw * p.b1 - p.b2 + p.b3)) < 1e-13);
    CHECK(std::abs(g2 - (-2.0 * iw * p.b1) * (nd + 1.0 + ie - p.b2 / 2.0)) < 1e-14);
  }
  CHECK(std::abs(s2.pow_z - (2.0 - p.b2)) < 1e-15);
  CHECK(s2.exp_inv == p.b1);
}

TEST_CASE("characteristic values of both sets match frozen references") {
  params p = sample();
  solution_set s1 = make_set(p, 1);
  root_result r1 = solve_b3(s1, default_guess(s1));
  CHECK(std::abs(r1.root - root_set1) < 1e-9);
  solution_set s2 = make_set(p, 2);
  root_result r2 = solve_b3(s2, default_guess(s2));
  CHECK(std::abs(r2.root - root_set2) < 1e-9);
}

TEST_CASE("both sets and all expansion kinds solve the equation") {
  params p = sample();
  for (int i = 1; i <= 2; ++i) {
    p.b3 = (i == 1) ? root_set1 : root_set2;
    solution_set s = make_set(p, i);
    auto c = set_coeffs(s, 110);
    for (cplx z : {cplx(0.3), cplx(0.7, 0.2), cplx(1.5), cplx(2.5), cplx(0.5, -0.4)}) {
      CHECK(residual_at(s, series_kind::power, c, z) < 1e-8);
      CHECK(residual_at(s, series_kind::kummer, c, z) < 1e-8);
    }
    // the Tricomi sums carry more cancellation, so the stencil needs a wider
    // step to keep the evaluation noise under the tolerance
    residual_options wide;
    wide.h = 3e-3;
    for (cplx z : {cplx(1.6), cplx(2.2), cplx(3.0), cplx(-0.5, 2.5), cplx(1.1, 1.1)}) {
      CHECK(residual_at(s, series_kind::tricomi, c, z, wide) < 1e-8);
    }
  }
}

TEST_CASE("a detuned characteristic value is rejected") {
  params p = sample();
  p.b3 = root_set1 + 0.01;
  solution_set s = make_set(p, 1);
  CHECK_THROWS_AS(set_coeffs(s, 60), solver_error);
}

TEST_CASE("the regular branch tends to one at the origin") {
  params p = sample();
  p.b3 = root_set1;
  solution_set s = make_set(p, 1);
  auto c = set_coeffs(s, 80);
  cplx v = evaluate(s, series_kind::power, c, cplx(1e-12), 1e-12, true);
  CHECK(std::abs(v - 1.0) < 1e-10);
}

TEST_CASE("points hugging the essential singularity are refused") {
  params p = sample();
  p.b3 = root_set1;
  solution_set s = make_set(p, 1);
  auto c = set_coeffs(s, 80);
  CHECK_THROWS_AS(evaluate(s, series_kind::power, c, cplx(1e-9)), solver_error);
  try {
    evaluate(s, series_kind::power, c, cplx(1e-9));
  } catch (const solver_error& e) {
    CHECK(e.code() == errc::outside_domain);
  }
}

TEST_CASE("asymptotic exponent at infinity follows the Thome normal form") {
  params p = sample();
  p.b3 = root_set1;
  solution_set s = make_set(p, 1);
  auto c = set_coeffs(s, 80);
  auto stripped = [&](cplx z) {
    return evaluate(s, series_kind::tricomi, c, z) / std::exp(I * p.omega * z);
  };
  cplx q1 = stripped(200.0), q2 = stripped(400.0);
  cplx slope = std::log(q2 / q1) / std::log(cplx(2.0));
  cplx want = -I * p.eta - p.b2 / 2.0;
  CHECK(std::abs(slope - want) < 1e-2);
}

TEST_CASE("coefficient tail ratio decays like -2 i omega B1 / n") {
  params p = sample();
  p.b3 = root_set1;
  solution_set s = make_set(p, 1);
  cplx r = tail_ratio(s.system, p.b3, 400);
  cplx want = -2.0 * I * p.omega * p.b1 / 400.0;
  CHECK(std::abs(r / want - 1.0) < 0.02);
}

TEST_CASE("flipping the signs of omega and eta yields a partner solution") {
  params p = sample();
  solution_set s = make_set(p, 1);
  root_result r = solve_b3(s, default_guess(s));
  params q = p;
  q.omega = -p.omega;
  q.eta = -p.eta;
  solution_set sf = make_set(q, 1);
  root_result rf = solve_b3(sf, default_guess(sf));
  // the equation is invariant under the flip, so the characteristic value
  // is shared and the flipped series solves the original equation
  CHECK(std::abs(rf.root - r.root) < 1e-9);
  q.b3 = rf.root;
  sf = make_set(q, 1);
  auto cf = set_coeffs(sf, 90);
  auto f = [&](cplx w) { return evaluate(sf, series_kind::power, cf, w, 1e-15); };
  p.b3 = r.root;
  auto eq = [&](cplx w) { return equation_coeffs(p, w); };
  CHECK(ode_residual(f, eq, cplx(1.2)) < 1e-8);
}

TEST_CASE("two-sided chain entries match frozen and hand-computed values") {
  two_sided_set s = make_two_sided(nu_sample());
  auto m1 = s.system.coeff(-1, cplx(0.25));
  CHECK(std::abs(m1[0] - cplx(0.352, 0.29333333333333333333)) < 1e-14);
  CHECK(std::abs(m1[1] - cplx(0.7565, 0.0)) < 1e-14);
  CHECK(std::abs(m1[2] - cplx(0.1344, 0.336)) < 1e-14);
  auto m0 = s.system.coeff(0, cplx(0.3));
  CHECK(std::abs(m0[0] - cplx(0.082051282051282056, 0.35555555555555558)) < 1e-14);
  CHECK(std::abs(m0[1] - cplx(0.76538461538461533, 0.0)) < 1e-13);
  // gamma_0 vanishes identically when nu = 1 - B2/2
  CHECK(std::abs(m0[2]) < 1e-15);
}

TEST_CASE("two-sided characteristic offset matches the frozen root") {
  two_sided_set s = make_two_sided(nu_sample());
  root_result r = solve_nu(s, cplx(-0.45, 0.6));
  CHECK(std::abs(r.root - nu_frozen) < 1e-9);
}

TEST_CASE("offsets on the half-integer lattice are inadmissible") {
  two_sided_set s = make_two_sided(nu_sample());
  CHECK_THROWS_AS(s.system.coeff(0, cplx(0.5)), solver_error);
  CHECK_THROWS_AS(s.system.coeff(0, cplx(-2.0, 1e-9)), solver_error);
  try {
    s.system.coeff(0, cplx(1.0));
  } catch (const solver_error& e) {
    CHECK(e.code() == errc::inadmissible_nu);
  }
}

TEST_CASE("all four two-sided expansions solve the equation") {
  params p = nu_sample();
  two_sided_set s = make_two_sided(p);
  root_result r = solve_nu(s, cplx(-0.45, 0.6));
  minimal_options mo;
  mo.pad = 25;
  auto b = minimal_solution_two_sided(s.system, r.root, 34, mo);
  auto eq = [&](cplx w) { return equation_coeffs(p, w); };
  auto check = [&](ts_kind k, cplx z, double tol) {
    auto f = [&](cplx w) { return evaluate_two_sided(s, k, b, r.root, w); };
    CHECK(ode_residual(f, eq, z) < tol);
  };
  check(ts_kind::origin, cplx(0.8), 1e-7);
  check(ts_kind::origin, cplx(1.5), 1e-7);
  check(ts_kind::origin_kummer, cplx(0.8), 1e-7);
  check(ts_kind::origin_kummer, cplx(1.5), 1e-7);
  check(ts_kind::tricomi, cplx(1.2), 1e-7);
  check(ts_kind::tricomi, cplx(2.4), 1e-7);
  check(ts_kind::kummer, cplx(1.2), 1e-7);
  check(ts_kind::kummer, cplx(2.4), 1e-7);
}

TEST_CASE("small-z0 spheroidal two-sided problem approaches this one") {
  params p = nu_sample();
  two_sided_set ds = make_two_sided(p);
  root_result dr = solve_nu(ds, cplx(-0.45, 0.6));

  gswe::params g;
  g.b1 = p.b1;
  g.b2 = p.b2;
  g.b3 = p.b3;
  g.z0 = 1e-3;
  g.omega = p.omega;
  g.eta = p.eta;
  gswe::two_sided_set gs = gswe::make_two_sided(g, 1);
  root_result gr = gswe::solve_nu(gs, dr.root);
  CHECK(std::abs(gr.root - dr.root) < 1e-2);

  minimal_options mo;
  mo.pad = 25;
  auto db = minimal_solution_two_sided(ds.system, dr.root, 30, mo);
  auto gb = minimal_solution_two_sided(gs.system, gr.root, 30, mo);
  // the expansions about infinity share their term structure, so the values
  // converge directly as z0 -> 0
  for (cplx z : {cplx(0.8), cplx(1.5)}) {
    cplx dv = evaluate_two_sided(ds, ts_kind::tricomi, db, dr.root, z);
    cplx gv = gswe::evaluate_two_sided(gs, gswe::ts_kind::tricomi, gb, gr.root, z);
    CHECK(std::abs(gv - dv) < 1e-2 * std::abs(dv));
  }
}
