#ifndef HEUNFLOW_PERIODIC_HPP
#define HEUNFLOW_PERIODIC_HPP

#include <functional>
#include <optional>
#include <vector>

#include "heunflow/dche.hpp"
#include "heunflow/gswe.hpp"
#include "heunflow/ince.hpp"
#include "heunflow/recurrence.hpp"
#include "heunflow/residual.hpp"

// The Whittaker-Hill equation
//
//   W'' + kappa^2 [ theta - xi^2/8 - (p+1) xi cos(2 kappa u)
//                   + (xi^2/8) cos(4 kappa u) ] W = 0,   kappa in {1, i},
//
// and the Mathieu equation
//
//   W'' + sigma^2 [ a - 2 k^2 cos(2 sigma u) ] W = 0,    sigma in {1, i},
//
// are both reachable from the equations of the gswe, dche and ince modules by
// changes of variable.  Each reduction carries its own solution sets whose
// parity and periodicity on the real axis differ, so the same characteristic
// value can be computed along independent routes and cross-checked.
namespace heunflow::periodic {

enum class route_kind {
  spheroidal,       // z = cos^2(kappa u), two regular points
  double_confluent, // z = e^{2 i kappa u}, two irregular points
  ince_limit,       // z = cos^2(sigma u), vanishing-frequency family
};

enum class parity_kind { even, odd, none };

enum class period_kind { pi, two_pi, four_pi, two_m_pi, aperiodic };

struct solution_meta {
  parity_kind parity = parity_kind::none;
  // absent when no periodicity statement applies (oscillation axis rotated,
  // kappa or sigma = i)
  std::optional<period_kind> period;
  long m = 1; // denominator filling in the two_m_pi case
  route_kind route = route_kind::spheroidal;
};

struct whe_params {
  cplx theta, xi, p;
  cplx kappa = 1.0;
};

// kappa must be exactly 1 or i.  (Route compositions below build carrier
// structs with kappa = sigma/2 internally without passing through here.)
void validate(const whe_params& w);

struct mathieu_params {
  cplx a, k;
  cplx sigma = 1.0;
};

void validate(const mathieu_params& m);

// W(u) = U(z), z = cos^2(kappa u); U solves the spheroidal-family equation.
struct trig_map {
  gswe::params par;
  cplx kappa;
  cplx z(cplx u) const;
};

trig_map whe_as_gswe(const whe_params& w);

// W(u) = z^{1+p/2} e^{xi/(8z)} U(z), z = e^{2 i kappa u}; U solves the
// double-confluent equation.  sign = +1 or -1 picks the simultaneous branch
// of omega and eta; the same sign must be used throughout one computation.
struct exp_map {
  dche::params par;
  cplx kappa, xi, p;
  int sign = +1;
  cplx z(cplx u) const;
};

exp_map whe_as_dche(const whe_params& w, int sign = +1);

// Period of the exponential-route solutions on the real axis (kappa = 1),
// read off the factor e^{i(p+2)u}: pi for even integer p, 2 pi for odd,
// 2 m pi for p = l/m in lowest terms with l < m, aperiodic otherwise.
struct period_info {
  period_kind kind = period_kind::aperiodic;
  long m = 1;
};

period_info exp_route_period(cplx p);

// The three reductions of the Mathieu equation plus its rewriting as a
// Whittaker-Hill equation at half the angle.
struct mathieu_route_set {
  trig_map half_angle;      // z = cos^2(sigma u / 2)
  exp_map exponential;      // z = e^{i sigma u}
  ince::gswe_params limit;  // z = cos^2(sigma u), q = k^2
  whe_params as_whe;        // kappa = sigma/2, p = -1; carrier only, validate
                            // on whe_params rejects the half kappa
  cplx sigma;
};

mathieu_route_set mathieu_routes(const mathieu_params& m, int sign = +1);

struct char_options {
  solve_options solve{};
  long hill_n = 40; // truncation of the seeding eigenvalue oracle
};

// Truncated-matrix eigenvalue oracle for the characteristic values a of the
// parity class cls (1..4): symmetrized tridiagonal form of the ince-limit
// chain.  Ascending; needs a positive real k^2.
std::vector<double> hill_characteristic_values(const mathieu_params& m,
                                               int cls, int count,
                                               long n = 40);

// Same oracle for the family with no definite parity (period 4 pi on the
// real axis), from the exponential-route chain.
std::vector<double> hill_fractional_values(const mathieu_params& m, int count,
                                           long n = 40);

// Characteristic value a of parity class cls (1: even/pi, 2: even/2pi,
// 3: odd/pi, 4: odd/2pi on the real axis) through the chosen route, seeded
// from the matrix oracle when k^2 is positive real and from m.a otherwise.
// The double-confluent route carries no definite-parity family: NoRoot.
cplx characteristic_a(const mathieu_params& m, int cls, route_kind route,
                      const char_options& opt = {});

// Member `index` (ascending from 0) of the no-parity family through the
// spheroidal or double-confluent route; the ince-limit route reports NoRoot.
cplx fractional_a(const mathieu_params& m, int index, route_kind route,
                  const char_options& opt = {});

// Solve theta so the route's set-indexed characteristic equation holds,
// seeded from w.theta.  Spheroidal sets are 1..4, double-confluent 1..2;
// the ince-limit route does not apply to a nonzero xi: RuleInapplicable.
root_result solve_whe_theta(const whe_params& w, int set_index,
                            route_kind route, int sign = +1,
                            const solve_options& opt = {});

ode_coeffs whe_equation_coeffs(const whe_params& w, cplx u);
ode_coeffs mathieu_equation_coeffs(const mathieu_params& m, cplx u);

// ---- solutions in the original variable ------------------------------------
//
// The series bodies are functions of z alone, but the algebraic prefactors
// z^{pow} carry branch cuts that would break parity when composed with
// z(u).  The evaluators below therefore assemble the prefactors from integer
// powers of cos and sin directly, which keeps W smooth across the zeros of
// the map.

// Spheroidal-route solution of the WHE or (at kappa = sigma/2) the Mathieu
// equation.  The characteristic parameter inside `set` is already solved.
struct trig_solution {
  cplx kappa;
  gswe::solution_set set;
  gswe::series_kind kind;
  std::vector<cplx> coeff;
  std::function<ode_coeffs(cplx)> equation; // original equation in u
  solution_meta meta;
};

// theta must satisfy the set's characteristic equation (solve_whe_theta);
// the coefficient chain check raises CharacteristicUnsatisfied otherwise.
trig_solution whe_trig_solution(const whe_params& w, int set_index,
                                gswe::series_kind kind, long n_coeff = 120);

// a must be characteristic_a(.., cls = set_index, spheroidal) for sets 1 and
// 3, or a member of fractional_a for sets 2 and 4.
trig_solution mathieu_trig_solution(const mathieu_params& m, int set_index,
                                    gswe::series_kind kind, long n_coeff = 120,
                                    int sign = +1);

// Ince-limit-route Mathieu solution: power form or the Bessel expansions.
struct limit_solution {
  cplx sigma, k;
  ince::gswe_set set;
  ince::series_kind kind;
  std::vector<cplx> coeff;
  std::function<ode_coeffs(cplx)> equation;
  solution_meta meta;
};

limit_solution mathieu_limit_solution(const mathieu_params& m, int set_index,
                                      ince::series_kind kind,
                                      long n_coeff = 120);

// Exponential-route solution; no definite parity.  The infinity-side series
// keeps the principal branch of the Tricomi terms, so it shows a jump where
// the argument circle crosses the cut.
struct exp_solution {
  exp_map map;
  dche::solution_set set;
  dche::series_kind kind;
  std::vector<cplx> coeff;
  std::function<ode_coeffs(cplx)> equation;
  solution_meta meta;
};

exp_solution whe_exp_solution(const whe_params& w, int set_index,
                              dche::series_kind kind, long n_coeff = 120,
                              int sign = +1);

exp_solution mathieu_exp_solution(const mathieu_params& m, int set_index,
                                  dche::series_kind kind, long n_coeff = 120,
                                  int sign = +1);

// Two-sided cosine solution of the WHE with fractional index l/m: the offset
// nu = (l/m - 1)/2 replaces the missing free constant and theta is solved
// from the doubly infinite characteristic equation, seeded from w.theta.
// Requires kappa = 1, xi != 0; gcd(l, m) = 1 with 1 <= l < m, else
// InadmissibleFraction.  Period 2 m pi, even.
struct fractional_solution {
  cplx theta, xi, p;
  long l = 0, m = 0;
  double nu = 0.0;
  std::vector<cplx> coeff; // coeff[j] holds b_{j - wing}
  long wing = 0;
  root_result theta_root;
  std::function<ode_coeffs(cplx)> equation;
  solution_meta meta;
};

fractional_solution ince_whe_solution(long l, long m, const whe_params& w,
                                      long wing = 60,
                                      const solve_options& opt = {});

cplx evaluate_periodic(const trig_solution& s, cplx u, double tol = 1e-12);
cplx evaluate_periodic(const limit_solution& s, cplx u, double tol = 1e-12);
cplx evaluate_periodic(const exp_solution& s, cplx u, double tol = 1e-12);
cplx evaluate_periodic(const fractional_solution& s, cplx u,
                       double tol = 1e-12);

double residual_at(const trig_solution& s, cplx u,
                   const residual_options& opt = {});
double residual_at(const limit_solution& s, cplx u,
                   const residual_options& opt = {});
double residual_at(const exp_solution& s, cplx u,
                   const residual_options& opt = {});
double residual_at(const fractional_solution& s, cplx u,
                   const residual_options& opt = {});

} // namespace heunflow::periodic

#endif
