#include "heunflow/dche.hpp"

#include "heunflow/detail.hpp"
#include "heunflow/numerics.hpp"

namespace heunflow::dche {

namespace {

const cplx I(0.0, 1.0);

using detail::accumulate;
using detail::cpow;

} // namespace

void validate(const params& p) {
  require_finite(p.b1, "b1");
  require_finite(p.b2, "b2");
  require_finite(p.b3, "b3");
  require_finite(p.omega, "omega");
  require_finite(p.eta, "eta");
  if (p.b1 == 0.0) throw std::invalid_argument("b1 must be nonzero");
  if (p.omega == 0.0) throw std::invalid_argument("omega must be nonzero");
}

params leaver_limit(const gswe::params& p) {
  gswe::validate(p);
  if (p.b1 == 0.0)
    fail(errc::degenerate_target,
         "b1 = 0 leaves a confluent hypergeometric equation, not this one");
  params q;
  q.b1 = p.b1;
  q.b2 = p.b2;
  q.b3 = p.b3;
  q.omega = p.omega;
  q.eta = p.eta;
  return q;
}

solution_set make_set(const params& p, int index) {
  validate(p);
  if (index != 1 && index != 2)
    throw std::invalid_argument("set index must be 1 or 2");
  solution_set s;
  s.base = p;
  s.index = index;
  if (index == 1) {
    s.image_of = [p](cplx t) {
      params q = p;
      q.b3 = t;
      return q;
    };
  } else {
    // the second set is the first one at mirrored parameters, carrying the
    // essential-singularity prefactor e^{B1/z} z^{2-B2}
    s.image_of = [p](cplx t) {
      params q = p;
      q.b1 = -p.b1;
      q.b2 = 4.0 - p.b2;
      q.b3 = t + 2.0 - p.b2;
      return q;
    };
    s.pow_z = 2.0 - p.b2;
    s.exp_inv = p.b1;
  }
  s.image = s.image_of(p.b3);
  auto img = s.image_of;
  cplx omega = p.omega, eta = p.eta;
  s.system.coeff = [img, omega, eta](long n, cplx t) -> std::array<cplx, 3> {
    params q = img(t);
    double nd = double(n);
    cplx iw = I * omega;
    cplx al = nd + 1.0;
    cplx be = nd * (nd + q.b2 - 1.0) + iw * q.b1 + q.b3;
    cplx ga = 2.0 * iw * q.b1 * (nd - 1.0 + I * eta + q.b2 / 2.0);
    return {al, be, ga};
  };
  return s;
}

cplx default_guess(const solution_set& s) {
  // beta_0(t) = i omega B1' + t' vanishes
  params at0 = s.image_of(0.0);
  return -(I * s.base.omega * at0.b1 + at0.b3);
}

root_result solve_b3(const solution_set& s, cplx guess, const solve_options& opt) {
  return solve_characteristic(s.system, guess, opt);
}

std::vector<cplx> set_coeffs(const solution_set& s, long n_max) {
  minimal_options opt;
  opt.pad = 30 + long(std::ceil(10.0 * std::abs(s.base.omega * s.base.b1)));
  return minimal_solution(s.system, s.base.b3, n_max, opt);
}

cplx evaluate(const solution_set& s, series_kind kind,
              const std::vector<cplx>& coeffs, cplx z, double tol,
              bool stripped) {
  require_finite(z, "evaluation point");
  if (!stripped && std::abs(z) < 1e-8)
    fail(errc::outside_domain,
         "prefactors are meaningless this close to the essential singularity");
  const params& q = s.image;
  cplx y = -2.0 * I * s.base.omega * z;
  cplx sum;
  switch (kind) {
    case series_kind::power: {
      cplx w = z / q.b1, wn = 1.0;
      sum = accumulate(long(coeffs.size()), tol, [&](long n) {
        cplx t = coeffs[n] * wn;
        wn *= w;
        return t;
      });
      break;
    }
    case series_kind::tricomi: {
      if (z == 0.0)
        fail(errc::outside_domain, "expansion about infinity needs z != 0");
      sum = accumulate(long(coeffs.size()), tol, [&](long n) {
        return coeffs[n] * tricomi_psi(double(n) + I * s.base.eta + q.b2 / 2.0,
                                       double(n) + q.b2, y);
      });
      break;
    }
    case series_kind::kummer: {
      if (z == 0.0)
        fail(errc::outside_domain, "evaluation at a singular point");
      sum = accumulate(long(coeffs.size()), tol, [&](long n) {
        double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        return coeffs[n] * sgn *
               regularized_phi(double(n) + I * s.base.eta + q.b2 / 2.0,
                               double(n) + q.b2, y);
      });
      break;
    }
    default:
      throw std::invalid_argument("unknown series kind");
  }
  if (stripped) return sum;
  return std::exp(I * s.base.omega * z + s.exp_inv / z) * cpow(z, s.pow_z) * sum;
}

ode_coeffs equation_coeffs(const params& p, cplx z) {
  cplx pp = z * z;
  cplx qq = p.b1 + p.b2 * z;
  cplx rr = p.b3 - 2.0 * p.eta * p.omega * z + p.omega * p.omega * z * z;
  return {pp, qq, rr};
}

double residual_at(const solution_set& s, series_kind kind,
                   const std::vector<cplx>& coeffs, cplx z,
                   const residual_options& opt) {
  auto f = [&](cplx w) { return evaluate(s, kind, coeffs, w, 1e-15); };
  auto eq = [&](cplx w) { return equation_coeffs(s.base, w); };
  return ode_residual(f, eq, z, opt);
}

two_sided_set make_two_sided(const params& p) {
  validate(p);
  two_sided_set s;
  s.base = p;
  cplx b1 = p.b1, b2 = p.b2, b3 = p.b3, omega = p.omega, eta = p.eta;
  s.system.two_sided = true;
  s.system.coeff = [b1, b2, b3, omega, eta](long n, cplx nu) -> std::array<cplx, 3> {
    if (dist_to_half_integers(nu) < 1e-6)
      fail(errc::inadmissible_nu,
           "offset too close to the half-integer lattice");
    cplx x = double(n) + nu;
    cplx iw = I * omega;
    cplx ie = I * eta;
    cplx al = iw * b1 * (x + 2.0 - b2 / 2.0) * (x + 1.0 - ie) /
              (2.0 * (x + 1.0) * (x + 1.5));
    cplx be = b3 - (b2 - 1.0) * (b2 - 1.0) / 4.0 + (x + 0.5) * (x + 0.5) +
              eta * omega * b1 * (b2 / 2.0 - 1.0) / (x * (x + 1.0));
    cplx ga = iw * b1 * (x + b2 / 2.0 - 1.0) * (x + ie) /
              (2.0 * x * (x - 0.5));
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
  if (std::abs(z) < 1e-8)
    fail(errc::outside_domain,
         "prefactors are meaningless this close to the essential singularity");
  if (coeffs.size() % 2 == 0)
    throw std::invalid_argument("two-sided coefficients must be odd-sized");
  long half = (long(coeffs.size()) - 1) / 2;
  const params& q = s.base;
  cplx pref = std::exp(I * q.omega * z);
  cplx h = q.b2 / 2.0;
  cplx ie = I * q.eta;
  cplx sum = 0.0;
  switch (kind) {
    case ts_kind::origin: {
      cplx y = q.b1 / z;
      for (long n = -half; n <= half; ++n) {
        cplx x = double(n) + nu;
        sum += coeffs[half + n] * std::pow(y, x) *
               tricomi_psi(x + h, 2.0 * x + 2.0, y);
      }
      return pref * std::pow(z, -h) * sum;
    }
    case ts_kind::origin_kummer: {
      cplx y = q.b1 / z;
      for (long n = -half; n <= half; ++n) {
        cplx x = double(n) + nu;
        sum += coeffs[half + n] * std::pow(-y, x) * gamma_fn(x + 2.0 - h) *
               regularized_phi(x + h, 2.0 * x + 2.0, y);
      }
      return pref * std::pow(z, -h) * sum;
    }
    case ts_kind::tricomi: {
      cplx y = -2.0 * I * q.omega * z;
      for (long n = -half; n <= half; ++n) {
        cplx x = double(n) + nu;
        sum += coeffs[half + n] * std::pow(y, x) *
               tricomi_psi(x + 1.0 + ie, 2.0 * x + 2.0, y);
      }
      return pref * std::pow(z, 1.0 - h) * sum;
    }
    case ts_kind::kummer: {
      cplx y = -2.0 * I * q.omega * z;
      for (long n = -half; n <= half; ++n) {
        cplx x = double(n) + nu;
        sum += coeffs[half + n] * std::pow(-y, x) * gamma_fn(x + 1.0 - ie) *
               regularized_phi(x + 1.0 + ie, 2.0 * x + 2.0, y);
      }
      return pref * std::pow(z, 1.0 - h) * sum;
    }
  }
  throw std::invalid_argument("unknown two-sided kind");
}

} // namespace heunflow::dche
