#include "heunflow/periodic.hpp"

#include <array>
#include <cmath>
#include <numeric>

#include "heunflow/detail.hpp"
#include "heunflow/numerics.hpp"
#include "heunflow/tridiag.hpp"

namespace heunflow::periodic {

namespace {

const cplx I(0.0, 1.0);

using detail::accumulate;

// integer powers of the trigonometric factors; negative exponents divide,
// callers keep the base away from zero in that case
cplx powint(cplx b, long e) {
  cplx r = 1.0;
  for (long j = 0; j < e; ++j) r *= b;
  for (long j = 0; j > e; --j) r /= b;
  return r;
}

long half_exponent(cplx pow) { return std::lround(2.0 * pow.real()); }

bool is_unit_or_i(cplx v) { return v == cplx(1.0) || v == I; }

// positive real k^2, the regime where the chain symmetrizes to a real
// tridiagonal matrix
bool oracle_ready(cplx k) {
  cplx q = k * k;
  return q.real() > 0.0 &&
         std::abs(q.imag()) <= 1e-12 * std::max(1.0, std::abs(q));
}

struct meta_row {
  parity_kind parity;
  period_kind period;
};

constexpr std::array<meta_row, 4> whe_trig_meta = {{
    {parity_kind::even, period_kind::pi},
    {parity_kind::even, period_kind::two_pi},
    {parity_kind::odd, period_kind::pi},
    {parity_kind::odd, period_kind::two_pi},
}};

constexpr std::array<meta_row, 4> mathieu_trig_meta = {{
    {parity_kind::even, period_kind::two_pi},
    {parity_kind::even, period_kind::four_pi},
    {parity_kind::odd, period_kind::two_pi},
    {parity_kind::odd, period_kind::four_pi},
}};

} // namespace

void validate(const whe_params& w) {
  require_finite(w.theta, "theta");
  require_finite(w.xi, "xi");
  require_finite(w.p, "p");
  require_finite(w.kappa, "kappa");
  if (!is_unit_or_i(w.kappa))
    throw std::invalid_argument("kappa must be 1 or i");
}

void validate(const mathieu_params& m) {
  require_finite(m.a, "a");
  require_finite(m.k, "k");
  require_finite(m.sigma, "sigma");
  if (!is_unit_or_i(m.sigma))
    throw std::invalid_argument("sigma must be 1 or i");
}

cplx trig_map::z(cplx u) const {
  cplx c = std::cos(kappa * u);
  return c * c;
}

cplx exp_map::z(cplx u) const { return std::exp(2.0 * I * kappa * u); }

trig_map whe_as_gswe(const whe_params& w) {
  require_finite(w.theta, "theta");
  require_finite(w.xi, "xi");
  require_finite(w.p, "p");
  require_finite(w.kappa, "kappa");
  trig_map out;
  out.kappa = w.kappa;
  out.par.b1 = -0.5;
  out.par.b2 = 1.0;
  out.par.b3 = ((w.p + 1.0) * w.xi - w.theta) / 4.0;
  out.par.z0 = 1.0;
  out.par.omega = -0.5 * I * w.xi;        // i omega = xi / 2
  out.par.eta = -0.5 * I * (w.p + 1.0);   // i eta = (p + 1) / 2
  return out;
}

exp_map whe_as_dche(const whe_params& w, int sign) {
  require_finite(w.theta, "theta");
  require_finite(w.xi, "xi");
  require_finite(w.p, "p");
  require_finite(w.kappa, "kappa");
  if (w.xi == 0.0)
    throw std::invalid_argument("the exponential reduction needs xi != 0");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("sign must be +1 or -1");
  double s = sign;
  exp_map out;
  out.kappa = w.kappa;
  out.xi = w.xi;
  out.p = w.p;
  out.sign = sign;
  out.par.b1 = -w.xi / 4.0;
  out.par.b2 = w.p + 3.0;
  cplx half = w.p / 2.0 + 1.0;
  out.par.b3 = half * half + w.xi * w.xi / 32.0 - w.theta / 4.0;
  out.par.omega = -I * s * w.xi / 8.0;       // i omega = +- xi / 8
  out.par.eta = -I * s * (w.p + 1.0) / 2.0;  // i eta = +- (p + 1) / 2
  return out;
}

period_info exp_route_period(cplx p) {
  if (std::abs(p.imag()) > 1e-12) return {period_kind::aperiodic, 1};
  double x = p.real();
  double r = std::round(x);
  if (std::abs(x - r) < 1e-9) {
    long n = std::lround(r);
    return {(n % 2 == 0) ? period_kind::pi : period_kind::two_pi, 1};
  }
  for (long m = 2; m <= 64; ++m) {
    double lm = x * double(m);
    double lr = std::round(lm);
    if (std::abs(lm - lr) >= 1e-9 * double(m)) continue;
    long l = std::lround(lr);
    if (std::gcd(std::labs(l), m) != 1) continue;
    return {period_kind::two_m_pi, m};
  }
  return {period_kind::aperiodic, 1};
}

mathieu_route_set mathieu_routes(const mathieu_params& m, int sign) {
  validate(m);
  if (m.k == 0.0)
    throw std::invalid_argument("the reductions need k != 0");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("sign must be +1 or -1");
  cplx ksq = m.k * m.k;
  mathieu_route_set out;
  out.sigma = m.sigma;
  out.as_whe.theta = 4.0 * m.a - 8.0 * ksq;
  out.as_whe.xi = double(sign) * 8.0 * I * m.k;
  out.as_whe.p = -1.0;
  out.as_whe.kappa = m.sigma / 2.0;
  out.half_angle = whe_as_gswe(out.as_whe);
  out.exponential = whe_as_dche(out.as_whe, +1);
  out.limit = ince::gswe_params{-0.5, 1.0, (2.0 * ksq - m.a) / 4.0, 1.0, ksq};
  return out;
}

std::vector<double> hill_characteristic_values(const mathieu_params& m,
                                               int cls, int count, long n) {
  validate(m);
  if (cls < 1 || cls > 4)
    throw std::invalid_argument("class index must be 1..4");
  if (count < 1 || n < count)
    throw std::invalid_argument("need 1 <= count <= n");
  if (!oracle_ready(m.k))
    throw std::invalid_argument(
        "the symmetric eigenvalue oracle needs a positive real k^2");
  cplx q = m.k * m.k;
  auto set = ince::make_set(ince::gswe_params{-0.5, 1.0, q / 2.0, 1.0, q}, cls);
  // beta_n depends on the characteristic value only through -a/4, so the
  // chain at a = 0 supplies the matrix entries
  cplx t0 = q / 2.0;
  std::vector<double> diag(n), off(n - 1);
  for (long j = 0; j < n; ++j) {
    auto cj = set.hyper_system.coeff(j, t0);
    diag[j] = 4.0 * cj[1].real();
    if (j + 1 < n) {
      auto cn = set.hyper_system.coeff(j + 1, t0);
      double prod = cj[0].real() * cn[2].real();
      if (prod <= 0.0)
        fail(errc::branch_error,
             "chain symmetrization needs positive coefficient products");
      off[j] = 4.0 * std::sqrt(prod);
    }
  }
  return tridiag_eigenvalues(diag, off, count);
}

std::vector<double> hill_fractional_values(const mathieu_params& m, int count,
                                           long n) {
  validate(m);
  if (count < 1 || n < count)
    throw std::invalid_argument("need 1 <= count <= n");
  if (!oracle_ready(m.k))
    throw std::invalid_argument(
        "the symmetric eigenvalue oracle needs a positive real k^2");
  auto set = dche::make_set(
      dche::params{-2.0 * I * m.k, 2.0, 0.25, m.k, 0.0}, 1);
  cplx t0 = 0.25;
  std::vector<double> diag(n), off(n - 1);
  for (long j = 0; j < n; ++j) {
    auto cj = set.system.coeff(j, t0);
    diag[j] = cj[1].real();
    if (j + 1 < n) {
      auto cn = set.system.coeff(j + 1, t0);
      double prod = cj[0].real() * cn[2].real();
      if (prod <= 0.0)
        fail(errc::branch_error,
             "chain symmetrization needs positive coefficient products");
      off[j] = std::sqrt(prod);
    }
  }
  return tridiag_eigenvalues(diag, off, count);
}

cplx characteristic_a(const mathieu_params& m, int cls, route_kind route,
                      const char_options& opt) {
  validate(m);
  if (cls < 1 || cls > 4)
    throw std::invalid_argument("class index must be 1..4");
  if (m.k == 0.0)
    throw std::invalid_argument("the reductions need k != 0");
  if (route == route_kind::double_confluent)
    fail(errc::no_root,
         "the exponential reduction carries no definite-parity family");
  cplx a_seed = oracle_ready(m.k)
                    ? cplx(hill_characteristic_values(m, cls, 1, opt.hill_n)[0])
                    : m.a;
  cplx ksq = m.k * m.k;
  if (route == route_kind::ince_limit) {
    cplx guess = (2.0 * ksq - a_seed) / 4.0;
    auto set =
        ince::make_set(ince::gswe_params{-0.5, 1.0, guess, 1.0, ksq}, cls);
    auto r = ince::solve_b3(set, guess, opt.solve);
    return 2.0 * ksq - 4.0 * r.root;
  }
  // spheroidal: the half-angle sets 1 and 3 carry the even and odd
  // definite-parity families; sets 2 and 4 belong to the no-parity branch
  cplx guess = 2.0 * ksq - a_seed;
  auto set = gswe::make_set(
      gswe::params{-0.5, 1.0, guess, 1.0, 4.0 * m.k, 0.0}, cls <= 2 ? 1 : 3);
  auto r = gswe::solve_b3(set, guess, opt.solve);
  return 2.0 * ksq - r.root;
}

cplx fractional_a(const mathieu_params& m, int index, route_kind route,
                  const char_options& opt) {
  validate(m);
  if (index < 0) throw std::invalid_argument("index must be nonnegative");
  if (m.k == 0.0)
    throw std::invalid_argument("the reductions need k != 0");
  if (route == route_kind::ince_limit)
    fail(errc::no_root,
         "the vanishing-frequency sets carry definite parity only");
  cplx a_seed =
      oracle_ready(m.k)
          ? cplx(hill_fractional_values(m, index + 1, opt.hill_n)[index])
          : m.a;
  cplx ksq = m.k * m.k;
  if (route == route_kind::double_confluent) {
    cplx guess = 0.25 - a_seed;
    auto set = dche::make_set(
        dche::params{-2.0 * I * m.k, 2.0, guess, m.k, 0.0}, 1);
    auto r = dche::solve_b3(set, guess, opt.solve);
    return 0.25 - r.root;
  }
  cplx guess = 2.0 * ksq - a_seed;
  auto set = gswe::make_set(
      gswe::params{-0.5, 1.0, guess, 1.0, 4.0 * m.k, 0.0}, 2);
  auto r = gswe::solve_b3(set, guess, opt.solve);
  return 2.0 * ksq - r.root;
}

root_result solve_whe_theta(const whe_params& w, int set_index,
                            route_kind route, int sign,
                            const solve_options& opt) {
  validate(w);
  switch (route) {
    case route_kind::spheroidal: {
      if (set_index < 1 || set_index > 4)
        throw std::invalid_argument("set index must be 1..4");
      auto map = whe_as_gswe(w);
      auto set = gswe::make_set(map.par, set_index);
      auto r = gswe::solve_b3(set, map.par.b3, opt);
      cplx theta = (w.p + 1.0) * w.xi - 4.0 * r.root;
      return {theta, r.iterations, r.residual};
    }
    case route_kind::double_confluent: {
      if (set_index < 1 || set_index > 2)
        throw std::invalid_argument("set index must be 1..2");
      auto map = whe_as_dche(w, sign);
      auto set = dche::make_set(map.par, set_index);
      auto r = dche::solve_b3(set, map.par.b3, opt);
      cplx half = w.p / 2.0 + 1.0;
      cplx theta = 4.0 * (half * half + w.xi * w.xi / 32.0 - r.root);
      return {theta, r.iterations, r.residual};
    }
    case route_kind::ince_limit:
      fail(errc::rule_inapplicable,
           "the vanishing-frequency family has no nonzero-xi member");
  }
  throw std::invalid_argument("unknown route");
}

ode_coeffs whe_equation_coeffs(const whe_params& w, cplx u) {
  cplx k2 = w.kappa * w.kappa;
  cplx r = w.theta - w.xi * w.xi / 8.0 -
           (w.p + 1.0) * w.xi * std::cos(2.0 * w.kappa * u) +
           (w.xi * w.xi / 8.0) * std::cos(4.0 * w.kappa * u);
  return {1.0, 0.0, k2 * r};
}

ode_coeffs mathieu_equation_coeffs(const mathieu_params& m, cplx u) {
  cplx s2 = m.sigma * m.sigma;
  cplx r = m.a - 2.0 * m.k * m.k * std::cos(2.0 * m.sigma * u);
  return {1.0, 0.0, s2 * r};
}

// ---- solution builders ------------------------------------------------------

namespace {

std::vector<cplx> trig_coeffs(const gswe::solution_set& set,
                              gswe::series_kind kind, long n_coeff) {
  return kind == gswe::series_kind::power ? gswe::power_coeffs(set, n_coeff)
                                          : gswe::hyper_coeffs(set, n_coeff);
}

} // namespace

trig_solution whe_trig_solution(const whe_params& w, int set_index,
                                gswe::series_kind kind, long n_coeff) {
  validate(w);
  if (set_index < 1 || set_index > 4)
    throw std::invalid_argument("set index must be 1..4");
  auto map = whe_as_gswe(w);
  trig_solution s;
  s.kappa = w.kappa;
  s.set = gswe::make_set(map.par, set_index);
  s.kind = kind;
  s.coeff = trig_coeffs(s.set, kind, n_coeff);
  s.equation = [w](cplx u) { return whe_equation_coeffs(w, u); };
  auto row = whe_trig_meta[set_index - 1];
  s.meta.parity = row.parity;
  if (w.kappa == cplx(1.0)) s.meta.period = row.period;
  s.meta.route = route_kind::spheroidal;
  return s;
}

trig_solution mathieu_trig_solution(const mathieu_params& m, int set_index,
                                    gswe::series_kind kind, long n_coeff,
                                    int sign) {
  validate(m);
  if (set_index < 1 || set_index > 4)
    throw std::invalid_argument("set index must be 1..4");
  auto routes = mathieu_routes(m, sign);
  trig_solution s;
  s.kappa = routes.half_angle.kappa;
  s.set = gswe::make_set(routes.half_angle.par, set_index);
  s.kind = kind;
  s.coeff = trig_coeffs(s.set, kind, n_coeff);
  s.equation = [m](cplx u) { return mathieu_equation_coeffs(m, u); };
  auto row = mathieu_trig_meta[set_index - 1];
  s.meta.parity = row.parity;
  if (m.sigma == cplx(1.0)) s.meta.period = row.period;
  s.meta.route = route_kind::spheroidal;
  return s;
}

limit_solution mathieu_limit_solution(const mathieu_params& m, int set_index,
                                      ince::series_kind kind, long n_coeff) {
  validate(m);
  if (set_index < 1 || set_index > 4)
    throw std::invalid_argument("set index must be 1..4");
  auto routes = mathieu_routes(m, +1);
  limit_solution s;
  s.sigma = m.sigma;
  s.k = m.k;
  s.set = ince::make_set(routes.limit, set_index);
  s.kind = kind;
  s.coeff = kind == ince::series_kind::power
                ? ince::power_coeffs(s.set, n_coeff)
                : ince::hyper_coeffs(s.set, n_coeff);
  s.equation = [m](cplx u) { return mathieu_equation_coeffs(m, u); };
  auto row = whe_trig_meta[set_index - 1]; // same parity/period table
  s.meta.parity = row.parity;
  if (m.sigma == cplx(1.0)) s.meta.period = row.period;
  s.meta.route = route_kind::ince_limit;
  return s;
}

exp_solution whe_exp_solution(const whe_params& w, int set_index,
                              dche::series_kind kind, long n_coeff, int sign) {
  validate(w);
  if (set_index < 1 || set_index > 2)
    throw std::invalid_argument("set index must be 1..2");
  exp_solution s;
  s.map = whe_as_dche(w, sign);
  s.set = dche::make_set(s.map.par, set_index);
  s.kind = kind;
  s.coeff = dche::set_coeffs(s.set, n_coeff);
  s.equation = [w](cplx u) { return whe_equation_coeffs(w, u); };
  s.meta.parity = parity_kind::none;
  if (w.kappa == cplx(1.0)) {
    auto pi = exp_route_period(w.p);
    s.meta.period = pi.kind;
    s.meta.m = pi.m;
  }
  s.meta.route = route_kind::double_confluent;
  return s;
}

exp_solution mathieu_exp_solution(const mathieu_params& m, int set_index,
                                  dche::series_kind kind, long n_coeff,
                                  int sign) {
  validate(m);
  if (set_index < 1 || set_index > 2)
    throw std::invalid_argument("set index must be 1..2");
  auto routes = mathieu_routes(m, sign);
  exp_solution s;
  s.map = routes.exponential;
  s.set = dche::make_set(s.map.par, set_index);
  s.kind = kind;
  s.coeff = dche::set_coeffs(s.set, n_coeff);
  s.equation = [m](cplx u) { return mathieu_equation_coeffs(m, u); };
  s.meta.parity = parity_kind::none;
  if (m.sigma == cplx(1.0)) s.meta.period = period_kind::four_pi;
  s.meta.route = route_kind::double_confluent;
  return s;
}

fractional_solution ince_whe_solution(long l, long m, const whe_params& w,
                                      long wing, const solve_options& opt) {
  require_finite(w.theta, "theta");
  require_finite(w.xi, "xi");
  require_finite(w.p, "p");
  if (w.kappa != cplx(1.0))
    throw std::invalid_argument(
        "the fractional-index construction is stated for kappa = 1");
  if (w.xi == 0.0)
    throw std::invalid_argument("the two-sided chain needs xi != 0");
  if (m < 2 || l < 1 || l >= m || std::gcd(l, m) != 1)
    fail(errc::inadmissible_fraction,
         "need a reduced fraction l/m with 1 <= l < m");
  fractional_solution s;
  s.l = l;
  s.m = m;
  s.xi = w.xi;
  s.p = w.p;
  s.nu = (double(l) / double(m) - 1.0) / 2.0;
  double nu = s.nu;
  cplx xi = w.xi, p = w.p;
  recurrence_system sys;
  sys.two_sided = true;
  sys.coeff = [xi, p, nu](long n, cplx t) -> std::array<cplx, 3> {
    cplx x = double(n) + nu;
    cplx al = xi * (x + 0.5 - p / 2.0);
    cplx be = t - (2.0 * x + 1.0) * (2.0 * x + 1.0);
    cplx ga = -xi * (x + 0.5 + p / 2.0);
    return {al, be, ga};
  };
  s.theta_root = solve_characteristic(sys, w.theta, opt);
  s.theta = s.theta_root.root;
  s.wing = wing;
  s.coeff = minimal_solution_two_sided(sys, s.theta, wing);
  whe_params solved = w;
  solved.theta = s.theta;
  s.equation = [solved](cplx u) { return whe_equation_coeffs(solved, u); };
  s.meta.parity = parity_kind::even;
  s.meta.period = period_kind::two_m_pi;
  s.meta.m = m;
  s.meta.route = route_kind::spheroidal;
  return s;
}

// ---- evaluation -------------------------------------------------------------

cplx evaluate_periodic(const trig_solution& s, cplx u, double tol) {
  require_finite(u, "evaluation point");
  const gswe::params& b = s.set.base;
  const gswe::params& q = s.set.image;
  cplx c = std::cos(s.kappa * u);
  cplx sn = std::sin(s.kappa * u);
  cplx z = c * c;
  cplx pref = std::exp(I * b.omega * z) *
              powint(c, half_exponent(s.set.pow_z)) *
              powint(sn, half_exponent(s.set.pow_zz0));
  cplx y = -2.0 * I * b.omega * z;
  cplx sum;
  switch (s.kind) {
    case gswe::series_kind::power: {
      // at a characteristic value the chain is minimal and the series is
      // entire in z, so no disc restriction applies here
      cplx w = z - b.z0, wn = 1.0;
      sum = accumulate(long(s.coeff.size()), tol, [&](long n) {
        cplx t = s.coeff[n] * wn;
        wn *= w;
        return t;
      });
      break;
    }
    case gswe::series_kind::tricomi: {
      if (std::abs(z) <= std::abs(b.z0))
        fail(errc::outside_domain,
             "infinity-side series needs |cos| > 1, off the real axis");
      sum = accumulate(long(s.coeff.size()), tol, [&](long n) {
        return s.coeff[n] * tricomi_psi(double(n) + I * b.eta + q.b2 / 2.0,
                                        double(n) + q.b2, y);
      });
      break;
    }
    case gswe::series_kind::kummer: {
      sum = accumulate(long(s.coeff.size()), tol, [&](long n) {
        double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        return s.coeff[n] * sgn *
               regularized_phi(double(n) + I * b.eta + q.b2 / 2.0,
                               double(n) + q.b2, y);
      });
      break;
    }
    default:
      throw std::invalid_argument("unknown series kind");
  }
  return pref * sum;
}

cplx evaluate_periodic(const limit_solution& s, cplx u, double tol) {
  require_finite(u, "evaluation point");
  cplx c = std::cos(s.sigma * u);
  cplx sn = std::sin(s.sigma * u);
  cplx z = c * c;
  long cpw = half_exponent(s.set.pow_z);
  long spw = half_exponent(s.set.pow_zz0);
  switch (s.kind) {
    case ince::series_kind::power: {
      cplx pref = powint(c, cpw) * powint(sn, spw);
      cplx w = z - s.set.base.z0, wn = 1.0;
      cplx sum = accumulate(long(s.coeff.size()), tol, [&](long n) {
        cplx t = s.coeff[n] * wn;
        wn *= w;
        return t;
      });
      return pref * sum;
    }
    case ince::series_kind::bessel_j: {
      if (c == 0.0)
        fail(errc::outside_domain,
             "the Bessel form degenerates where the map touches the origin");
      long extra = 1 - std::lround(s.set.image.b2.real());
      cplx pref = powint(c, cpw + extra) * powint(sn, spw);
      cplx arg = 2.0 * s.k * c;
      cplx inv = -1.0 / (s.k * c), wn = 1.0;
      cplx sum = accumulate(long(s.coeff.size()), tol, [&](long n) {
        cplx t = s.coeff[n] * wn *
                 bessel_j(double(n) + s.set.image.b2 - 1.0, arg);
        wn *= inv;
        return t;
      });
      return pref * sum;
    }
    case ince::series_kind::bessel_k: {
      if (std::abs(c) <= 1.0)
        fail(errc::outside_domain,
             "infinity-side series needs |cos| > 1, off the real axis");
      long extra = 1 - std::lround(s.set.image.b2.real());
      cplx pref = powint(c, cpw + extra) * powint(sn, spw);
      cplx arg = 2.0 * I * s.k * c;
      cplx inv = 1.0 / (I * s.k * c), wn = 1.0;
      cplx sum = accumulate(long(s.coeff.size()), tol, [&](long n) {
        cplx t = s.coeff[n] * wn *
                 bessel_k(double(n) + s.set.image.b2 - 1.0, arg);
        wn *= inv;
        return t;
      });
      return pref * sum;
    }
  }
  throw std::invalid_argument("unknown series kind");
}

cplx evaluate_periodic(const exp_solution& s, cplx u, double tol) {
  require_finite(u, "evaluation point");
  const dche::params& b = s.set.base;
  const dche::params& q = s.set.image;
  cplx e = std::exp(2.0 * I * s.map.kappa * u);
  // z^{1+p/2} e^{xi/(8z)} times the set prefactors, written as smooth
  // exponentials of u so the period is not cut by a branch
  cplx expo = I * (2.0 + s.map.p + 2.0 * s.set.pow_z) * s.map.kappa * u +
              I * b.omega * e + (s.map.xi / 8.0 + s.set.exp_inv) / e;
  cplx pref = std::exp(expo);
  cplx y = -2.0 * I * b.omega * e;
  cplx sum;
  switch (s.kind) {
    case dche::series_kind::power: {
      cplx w = e / q.b1, wn = 1.0;
      sum = accumulate(long(s.coeff.size()), tol, [&](long n) {
        cplx t = s.coeff[n] * wn;
        wn *= w;
        return t;
      });
      break;
    }
    case dche::series_kind::tricomi: {
      sum = accumulate(long(s.coeff.size()), tol, [&](long n) {
        return s.coeff[n] * tricomi_psi(double(n) + I * b.eta + q.b2 / 2.0,
                                        double(n) + q.b2, y);
      });
      break;
    }
    case dche::series_kind::kummer: {
      sum = accumulate(long(s.coeff.size()), tol, [&](long n) {
        double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        return s.coeff[n] * sgn *
               regularized_phi(double(n) + I * b.eta + q.b2 / 2.0,
                               double(n) + q.b2, y);
      });
      break;
    }
    default:
      throw std::invalid_argument("unknown series kind");
  }
  return pref * sum;
}

cplx evaluate_periodic(const fractional_solution& s, cplx u, double) {
  require_finite(u, "evaluation point");
  cplx c = std::cos(u);
  cplx pref = std::exp(s.xi / 2.0 * c * c);
  double frac = double(s.l) / double(s.m);
  cplx sum = 0.0;
  for (long j = 0; j < long(s.coeff.size()); ++j) {
    double n = double(j - s.wing);
    sum += s.coeff[j] * std::cos((2.0 * n + frac) * u);
  }
  return pref * sum;
}

namespace {

template <typename Solution>
double residual_impl(const Solution& s, cplx u, const residual_options& opt) {
  auto f = [&](cplx v) { return evaluate_periodic(s, v, 1e-15); };
  return ode_residual(f, s.equation, u, opt);
}

} // namespace

double residual_at(const trig_solution& s, cplx u,
                   const residual_options& opt) {
  return residual_impl(s, u, opt);
}

double residual_at(const limit_solution& s, cplx u,
                   const residual_options& opt) {
  return residual_impl(s, u, opt);
}

double residual_at(const exp_solution& s, cplx u,
                   const residual_options& opt) {
  return residual_impl(s, u, opt);
}

double residual_at(const fractional_solution& s, cplx u,
                   const residual_options& opt) {
  return residual_impl(s, u, opt);
}

} // namespace heunflow::periodic
