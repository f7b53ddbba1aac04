#include "heunflow/gswe.hpp"
#include "heunflow/detail.hpp"
#include "heunflow/numerics.hpp"

namespace heunflow::gswe {

namespace {

const cplx I(0.0, 1.0);

using detail::accumulate;
using detail::cpow;

} // namespace

void validate(const params& p) {
  require_finite(p.b1, "b1");
  require_finite(p.b2, "b2");
  require_finite(p.b3, "b3");
  require_finite(p.z0, "z0");
  require_finite(p.omega, "omega");
  require_finite(p.eta, "eta");
  if (p.z0 == 0.0) throw std::invalid_argument("z0 must be nonzero");
  if (p.omega == 0.0) throw std::invalid_argument("omega must be nonzero");
}

rule_image apply_rule(const params& p, rule r) {
  validate(p);
  rule_image out;
  switch (r) {
    case rule::t1:
      out.p = p;
      out.p.b1 = -p.b1 - 2.0 * p.z0;
      out.p.b2 = 2.0 + p.b2 + 2.0 * p.b1 / p.z0;
      out.p.b3 = p.b3 + (1.0 + p.b1 / p.z0) * (p.b2 + p.b1 / p.z0);
      out.pow_z = 1.0 + p.b1 / p.z0;
      break;
    case rule::t2:
      out.p = p;
      out.p.b2 = 2.0 - p.b2 - 2.0 * p.b1 / p.z0;
      out.p.b3 = p.b3 + (p.b1 / p.z0) * (p.b1 / p.z0 + p.b2 - 1.0);
      out.pow_zz0 = 1.0 - p.b2 - p.b1 / p.z0;
      break;
    case rule::t3:
      out.p = p;
      out.p.omega = -p.omega;
      out.p.eta = -p.eta;
      break;
    case rule::t4:
      out.p = p;
      out.p.b1 = -p.b1 - p.b2 * p.z0;
      out.p.b3 = p.b3 + 2.0 * p.eta * p.omega * p.z0;
      out.p.omega = -p.omega;
      out.reflect = true;
      break;
  }
  return out;
}

solution_set make_set(const params& p, int index) {
  validate(p);
  if (index < 1 || index > 4) throw std::invalid_argument("set index must be 1..4");
  solution_set s;
  s.base = p;
  s.index = index;
  cplx b1 = p.b1, b2 = p.b2, z0 = p.z0;
  switch (index) {
    case 1:
      s.image_of = [p](cplx t) {
        params q = p;
        q.b3 = t;
        return q;
      };
      break;
    case 2:
      s.image_of = [p](cplx t) {
        params q = p;
        q.b3 = t;
        return apply_rule(q, rule::t1).p;
      };
      s.pow_z = 1.0 + b1 / z0;
      break;
    case 3:
      s.image_of = [p](cplx t) {
        params q = p;
        q.b3 = t;
        return apply_rule(apply_rule(q, rule::t2).p, rule::t1).p;
      };
      s.pow_z = 1.0 + b1 / z0;
      s.pow_zz0 = 1.0 - b2 - b1 / z0;
      break;
    case 4:
      s.image_of = [p](cplx t) {
        params q = p;
        q.b3 = t;
        return apply_rule(q, rule::t2).p;
      };
      s.pow_zz0 = 1.0 - b2 - b1 / z0;
      break;
  }
  s.image = s.image_of(p.b3);
  s.conn = s.image.b2 + s.image.b1 / z0;
  if (is_nonpositive_integer(s.conn))
    fail(errc::connection_undefined,
         "gamma link between the coefficient chains degenerates");
  cplx omega = p.omega, eta = p.eta;
  auto img = s.image_of;
  s.power_system.coeff = [img, omega, eta, z0](long n, cplx t) -> std::array<cplx, 3> {
    params q = img(t);
    double nd = double(n);
    cplx iw = I * omega;
    cplx al = (z0 * (nd + q.b2) + q.b1) * (nd + 1.0);
    cplx be = nd * (nd + q.b2 - 1.0 + 2.0 * iw * z0) + iw * (z0 * q.b2 + q.b1) + q.b3;
    cplx ga = 2.0 * iw * (nd - 1.0 + I * eta + q.b2 / 2.0);
    return {al, be, ga};
  };
  s.hyper_system.coeff = [img, omega, eta, z0](long n, cplx t) -> std::array<cplx, 3> {
    params q = img(t);
    double nd = double(n);
    cplx iw = I * omega;
    cplx al = nd + 1.0;
    cplx be = nd * (nd + q.b2 - 1.0 + 2.0 * iw * z0) + iw * (z0 * q.b2 + q.b1) + q.b3;
    cplx ga = 2.0 * iw * z0 * (nd - 1.0 + q.b2 + q.b1 / z0) *
              (nd - 1.0 + I * eta + q.b2 / 2.0);
    return {al, be, ga};
  };
  return s;
}

cplx default_guess(const solution_set& s) {
  // beta_0(t) = i omega (z0 B2' + B1') + shift + t = 0
  params at0 = s.image_of(0.0);
  return -(I * s.base.omega * (s.base.z0 * at0.b2 + at0.b1) + at0.b3);
}

root_result solve_b3(const solution_set& s, cplx guess, const solve_options& opt) {
  return solve_characteristic(s.hyper_system, guess, opt);
}

long default_pad(const params& p) {
  return 30 + long(std::ceil(10.0 * std::abs(p.omega * p.z0)));
}

std::vector<cplx> power_coeffs(const solution_set& s, long n_max) {
  minimal_options opt;
  opt.pad = default_pad(s.base);
  return minimal_solution(s.power_system, s.base.b3, n_max, opt);
}

std::vector<cplx> hyper_coeffs(const solution_set& s, long n_max) {
  minimal_options opt;
  opt.pad = default_pad(s.base);
  return minimal_solution(s.hyper_system, s.base.b3, n_max, opt);
}

cplx connection_ratio(const solution_set& s, long n) {
  if (n < 0) throw std::invalid_argument("connection index must be nonnegative");
  if (is_nonpositive_integer(s.conn))
    fail(errc::connection_undefined, "connection parameter at a gamma pole");
  cplx r = 1.0;
  for (long j = 0; j < n; ++j) r *= s.base.z0 * (s.conn + double(j));
  return r;
}

cplx evaluate(const solution_set& s, series_kind kind,
              const std::vector<cplx>& coeffs, cplx z, double tol) {
  require_finite(z, "evaluation point");
  const params& b = s.base;
  const params& q = s.image;
  cplx pref = std::exp(I * b.omega * z) * cpow(z, s.pow_z) *
              cpow(z - b.z0, s.pow_zz0);
  cplx y = -2.0 * I * b.omega * z;
  switch (kind) {
    case series_kind::power: {
      if (std::abs(z - b.z0) >= std::abs(b.z0))
        fail(errc::outside_domain, "power series valid only for |z-z0| < |z0|");
      cplx w = z - b.z0, wn = 1.0;
      cplx sum = accumulate(long(coeffs.size()), tol, [&](long n) {
        cplx t = coeffs[n] * wn;
        wn *= w;
        return t;
      });
      return pref * sum;
    }
    case series_kind::tricomi: {
      if (std::abs(z) <= std::abs(b.z0))
        fail(errc::outside_domain, "asymptotic series valid only for |z| > |z0|");
      cplx sum = accumulate(long(coeffs.size()), tol, [&](long n) {
        return coeffs[n] * tricomi_psi(double(n) + I * b.eta + q.b2 / 2.0,
                                       double(n) + q.b2, y);
      });
      return pref * sum;
    }
    case series_kind::kummer: {
      if (z == 0.0 || z == b.z0)
        fail(errc::outside_domain, "evaluation at a singular point");
      cplx sum = accumulate(long(coeffs.size()), tol, [&](long n) {
        double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        return coeffs[n] * sgn *
               regularized_phi(double(n) + I * b.eta + q.b2 / 2.0,
                               double(n) + q.b2, y);
      });
      return pref * sum;
    }
  }
  throw std::invalid_argument("unknown series kind");
}

ode_coeffs equation_coeffs(const params& p, cplx z) {
  cplx pp = z * (z - p.z0);
  cplx qq = p.b1 + p.b2 * z;
  cplx rr = p.b3 - 2.0 * p.eta * p.omega * (z - p.z0) + p.omega * p.omega * pp;
  return {pp, qq, rr};
}

double residual_at(const solution_set& s, series_kind kind,
                   const std::vector<cplx>& coeffs, cplx z,
                   const residual_options& opt) {
  // the stencil divides by h^2, so the series must be summed well past the
  // accuracy wanted from the residual itself
  auto f = [&](cplx w) { return evaluate(s, kind, coeffs, w, 1e-15); };
  auto eq = [&](cplx w) { return equation_coeffs(s.base, w); };
  return ode_residual(f, eq, z, opt);
}

two_sided_set make_two_sided(const params& p, int index) {
  validate(p);
  if (index != 1 && index != 2)
    throw std::invalid_argument("two-sided index must be 1 or 2");
  two_sided_set s;
  s.base = p;
  s.index = index;
  if (index == 1) {
    s.image = p;
  } else {
    s.image = apply_rule(p, rule::t2).p;
    s.pow_zz0 = 1.0 - p.b2 - p.b1 / p.z0;
  }
  cplx conn = s.image.b2 + s.image.b1 / p.z0;
  if (is_nonpositive_integer(conn))
    fail(errc::connection_undefined,
         "two-sided expansion parameter at a gamma pole");
  params q = s.image;
  s.system.two_sided = true;
  s.system.coeff = [q](long n, cplx nu) -> std::array<cplx, 3> {
    if (dist_to_half_integers(nu) <= 1e-6)
      fail(errc::inadmissible_nu, "nu too close to a half-integer");
    cplx x = double(n) + nu;
    cplx iw = I * q.omega;
    cplx ie = I * q.eta;
    cplx h = q.b2 / 2.0;
    cplx al = iw * q.z0 * (x + 2.0 - h) * (x + 1.0 - h - q.b1 / q.z0) *
              (x + 1.0 - ie) / (2.0 * (x + 1.0) * (x + 1.5));
    cplx be = -q.b3 - q.eta * q.omega * q.z0 - (x + 1.0 - h) * (x + h) -
              q.eta * q.omega * q.z0 * (h - 1.0) * (h + q.b1 / q.z0) /
                  (x * (x + 1.0));
    cplx ga = -iw * q.z0 * (x + h - 1.0) * (x + h + q.b1 / q.z0) * (x + ie) /
              (2.0 * (x - 0.5) * x);
    return {al, be, ga};
  };
  return s;
}

root_result solve_nu(const two_sided_set& s, cplx guess, const solve_options& opt) {
  return solve_characteristic(s.system, guess, opt);
}

cplx evaluate_two_sided(const two_sided_set& s, ts_kind kind,
                        const std::vector<cplx>& coeffs, cplx nu, cplx z) {
  require_finite(z, "evaluation point");
  if (coeffs.size() % 2 == 0)
    throw std::invalid_argument("two-sided coefficients must be odd-sized");
  long half = (long(coeffs.size()) - 1) / 2;
  const params& q = s.image;
  cplx pref = std::exp(I * q.omega * z) * cpow(z - q.z0, s.pow_zz0);
  cplx h = q.b2 / 2.0;
  cplx ie = I * q.eta;
  cplx sum = 0.0;
  switch (kind) {
    case ts_kind::gauss: {
      cplx arg = (q.z0 - z) / q.z0;
      if (std::abs(arg) >= 1.0)
        fail(errc::outside_domain, "expansion about z0 needs |z - z0| < |z0|");
      for (long n = -half; n <= half; ++n) {
        cplx x = double(n) + nu;
        sum += coeffs[half + n] *
               gauss_f(h - x - 1.0, x + h, q.b2 + q.b1 / q.z0, arg);
      }
      return pref * sum;
    }
    case ts_kind::gauss_infinity: {
      cplx w = q.z0 - z;
      if (std::abs(w) <= std::abs(q.z0))
        fail(errc::outside_domain, "expansion about infinity needs |z - z0| > |z0|");
      cplx arg = q.z0 / w;
      for (long n = -half; n <= half; ++n) {
        cplx x = double(n) + nu;
        double sgn = (((n % 2) + 2) % 2 == 0) ? 1.0 : -1.0;
        cplx bh = sgn * gamma_fn(x + 2.0 - h) *
                  gamma_fn(x + 1.0 - q.b1 / q.z0 - h) * coeffs[half + n];
        sum += bh * std::pow(w / q.z0, -x - h) *
               regularized_f(x + h, x + 1.0 - h - q.b1 / q.z0, 2.0 * x + 2.0, arg);
      }
      return pref * sum;
    }
    case ts_kind::tricomi: {
      if (std::abs(z) <= std::abs(q.z0))
        fail(errc::outside_domain, "expansion about infinity needs |z| > |z0|");
      cplx y = -2.0 * I * q.omega * z;
      for (long n = -half; n <= half; ++n) {
        cplx x = double(n) + nu;
        sum += coeffs[half + n] * std::pow(y, x) *
               tricomi_psi(x + 1.0 + ie, 2.0 * x + 2.0, y);
      }
      return pref * std::pow(z, 1.0 - h) * sum;
    }
    case ts_kind::kummer: {
      if (std::abs(z) <= std::abs(q.z0))
        fail(errc::outside_domain, "expansion about infinity needs |z| > |z0|");
      cplx y = -2.0 * I * q.omega * z;
      for (long n = -half; n <= half; ++n) {
        cplx x = double(n) + nu;
        sum += coeffs[half + n] * std::pow(2.0 * I * q.omega * z, x) *
               gamma_fn(x + 1.0 - ie) *
               regularized_phi(x + 1.0 + ie, 2.0 * x + 2.0, y);
      }
      return pref * std::pow(z, 1.0 - h) * sum;
    }
  }
  throw std::invalid_argument("unknown two-sided kind");
}

} // namespace heunflow::gswe
