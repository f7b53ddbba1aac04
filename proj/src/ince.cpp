#include "heunflow/ince.hpp"
#include "heunflow/detail.hpp"
#include "heunflow/numerics.hpp"

namespace heunflow::ince {

namespace {

const cplx I(0.0, 1.0);

using detail::accumulate;
using detail::cpow;

// the two substitution rules that generate the solution sets; both leave q
// alone, so only the exponents and the B's move
gswe_params map_t1(const gswe_params& p, cplx* pow_z) {
  gswe_params out = p;
  out.b1 = -p.b1 - 2.0 * p.z0;
  out.b2 = 2.0 + p.b2 + 2.0 * p.b1 / p.z0;
  out.b3 = p.b3 + (1.0 + p.b1 / p.z0) * (p.b2 + p.b1 / p.z0);
  if (pow_z) *pow_z = 1.0 + p.b1 / p.z0;
  return out;
}

gswe_params map_t2(const gswe_params& p, cplx* pow_zz0) {
  gswe_params out = p;
  out.b2 = 2.0 - p.b2 - 2.0 * p.b1 / p.z0;
  out.b3 = p.b3 + (p.b1 / p.z0) * (p.b1 / p.z0 + p.b2 - 1.0);
  if (pow_zz0) *pow_zz0 = 1.0 - p.b2 - p.b1 / p.z0;
  return out;
}

long default_pad(cplx scale) {
  return 30 + long(std::ceil(10.0 * std::sqrt(std::abs(scale))));
}

} // namespace

void validate(const gswe_params& p) {
  require_finite(p.b1, "b1");
  require_finite(p.b2, "b2");
  require_finite(p.b3, "b3");
  require_finite(p.z0, "z0");
  require_finite(p.q, "q");
  if (p.z0 == 0.0) throw std::invalid_argument("z0 must be nonzero");
  if (p.q == 0.0) throw std::invalid_argument("q must be nonzero");
}

void validate(const dche_params& p) {
  require_finite(p.b1, "b1");
  require_finite(p.b2, "b2");
  require_finite(p.b3, "b3");
  require_finite(p.q, "q");
  if (p.b1 == 0.0) throw std::invalid_argument("b1 must be nonzero");
  if (p.q == 0.0) throw std::invalid_argument("q must be nonzero");
}

gswe_params ince_limit(const gswe::params& p, cplx q) {
  gswe::validate(p);
  gswe_params out{p.b1, p.b2, p.b3, p.z0, q};
  validate(out);
  return out;
}

dche_params ince_limit(const dche::params& p, cplx q) {
  dche::validate(p);
  dche_params out{p.b1, p.b2, p.b3, q};
  validate(out);
  return out;
}

gswe_set make_set(const gswe_params& p, int index) {
  validate(p);
  if (index < 1 || index > 4) throw std::invalid_argument("set index must be 1..4");
  gswe_set s;
  s.base = p;
  s.index = index;
  switch (index) {
    case 1:
      s.image_of = [p](cplx t) {
        gswe_params q = p;
        q.b3 = t;
        return q;
      };
      break;
    case 2:
      s.image_of = [p](cplx t) {
        gswe_params q = p;
        q.b3 = t;
        return map_t1(q, nullptr);
      };
      map_t1(p, &s.pow_z);
      break;
    case 3:
      s.image_of = [p](cplx t) {
        gswe_params q = p;
        q.b3 = t;
        return map_t1(map_t2(q, nullptr), nullptr);
      };
      map_t1(p, &s.pow_z);
      map_t2(p, &s.pow_zz0);
      break;
    case 4:
      s.image_of = [p](cplx t) {
        gswe_params q = p;
        q.b3 = t;
        return map_t2(q, nullptr);
      };
      map_t2(p, &s.pow_zz0);
      break;
  }
  s.image = s.image_of(p.b3);
  s.conn = s.image.b2 + s.image.b1 / p.z0;
  if (is_nonpositive_integer(s.conn))
    fail(errc::connection_undefined,
         "gamma link between the coefficient chains degenerates");
  cplx z0 = p.z0;
  auto img = s.image_of;
  s.power_system.coeff = [img, z0](long n, cplx t) -> std::array<cplx, 3> {
    gswe_params q = img(t);
    double nd = double(n);
    cplx al = (z0 * (nd + q.b2) + q.b1) * (nd + 1.0);
    cplx be = nd * (nd + q.b2 - 1.0) + q.b3;
    cplx ga = q.q;
    return {al, be, ga};
  };
  s.hyper_system.coeff = [img, z0](long n, cplx t) -> std::array<cplx, 3> {
    gswe_params q = img(t);
    double nd = double(n);
    cplx al = nd + 1.0;
    cplx be = nd * (nd + q.b2 - 1.0) + q.b3;
    cplx ga = q.q * (z0 * (nd + q.b2 - 1.0) + q.b1);
    return {al, be, ga};
  };
  return s;
}

dche_set make_set(const dche_params& p, int index) {
  validate(p);
  if (index != 1 && index != 2)
    throw std::invalid_argument("set index must be 1 or 2");
  dche_set s;
  s.base = p;
  s.index = index;
  if (index == 1) {
    s.image_of = [p](cplx t) {
      dche_params q = p;
      q.b3 = t;
      return q;
    };
  } else {
    s.image_of = [p](cplx t) {
      dche_params q = p;
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
  s.system.coeff = [img](long n, cplx t) -> std::array<cplx, 3> {
    dche_params q = img(t);
    double nd = double(n);
    cplx al = nd + 1.0;
    cplx be = nd * (nd + q.b2 - 1.0) + q.b3;
    cplx ga = q.q * q.b1;
    return {al, be, ga};
  };
  return s;
}

cplx default_guess(const gswe_set& s) {
  // beta_0(t) = shift + t = 0
  return -s.image_of(0.0).b3;
}

cplx default_guess(const dche_set& s) {
  return -s.image_of(0.0).b3;
}

root_result solve_b3(const gswe_set& s, cplx guess, const solve_options& opt) {
  return solve_characteristic(s.hyper_system, guess, opt);
}

root_result solve_b3(const dche_set& s, cplx guess, const solve_options& opt) {
  return solve_characteristic(s.system, guess, opt);
}

std::vector<cplx> power_coeffs(const gswe_set& s, long n_max) {
  minimal_options opt;
  opt.pad = default_pad(s.base.q * s.base.z0);
  return minimal_solution(s.power_system, s.base.b3, n_max, opt);
}

std::vector<cplx> hyper_coeffs(const gswe_set& s, long n_max) {
  minimal_options opt;
  opt.pad = default_pad(s.base.q * s.base.z0);
  return minimal_solution(s.hyper_system, s.base.b3, n_max, opt);
}

std::vector<cplx> set_coeffs(const dche_set& s, long n_max) {
  minimal_options opt;
  opt.pad = default_pad(s.base.q * s.base.b1);
  return minimal_solution(s.system, s.base.b3, n_max, opt);
}

cplx connection_ratio(const gswe_set& s, long n) {
  if (n < 0) throw std::invalid_argument("connection index must be nonnegative");
  if (is_nonpositive_integer(s.conn))
    fail(errc::connection_undefined, "connection parameter at a gamma pole");
  cplx r = 1.0;
  for (long j = 0; j < n; ++j) r *= s.base.z0 * (s.conn + double(j));
  return r;
}

cplx evaluate(const gswe_set& s, series_kind kind,
              const std::vector<cplx>& coeffs, cplx z, double tol) {
  require_finite(z, "evaluation point");
  const gswe_params& b = s.base;
  const gswe_params& q = s.image;
  cplx pref = cpow(z, s.pow_z) * cpow(z - b.z0, s.pow_zz0);
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
    case series_kind::bessel_k: {
      if (std::abs(z) <= std::abs(b.z0))
        fail(errc::outside_domain, "K series valid only for |z| > |z0|");
      cplx r = std::sqrt(b.q * z);
      cplx inv = 1.0 / (I * r);
      cplx invn = 1.0;
      cplx sum = accumulate(long(coeffs.size()), tol, [&](long n) {
        cplx t = coeffs[n] * invn * bessel_k(double(n) + q.b2 - 1.0, 2.0 * I * r);
        invn *= inv;
        return t;
      });
      return pref * cpow(z, (1.0 - q.b2) / 2.0) * sum;
    }
    case series_kind::bessel_j: {
      if (z == 0.0 || z == b.z0)
        fail(errc::outside_domain, "evaluation at a singular point");
      cplx r = std::sqrt(b.q * z);
      cplx inv = -1.0 / r;
      cplx invn = 1.0;
      cplx sum = accumulate(long(coeffs.size()), tol, [&](long n) {
        cplx t = coeffs[n] * invn * bessel_j(double(n) + q.b2 - 1.0, 2.0 * r);
        invn *= inv;
        return t;
      });
      return pref * cpow(z, (1.0 - q.b2) / 2.0) * sum;
    }
  }
  throw std::invalid_argument("unknown series kind");
}

cplx evaluate(const dche_set& s, series_kind kind,
              const std::vector<cplx>& coeffs, cplx z, double tol) {
  require_finite(z, "evaluation point");
  const dche_params& q = s.image;
  if (s.exp_inv != 0.0 && std::abs(z) < 1e-8)
    fail(errc::outside_domain,
         "prefactors are meaningless this close to the essential singularity");
  cplx pref = cpow(z, s.pow_z);
  if (s.exp_inv != 0.0) pref *= std::exp(s.exp_inv / z);
  switch (kind) {
    case series_kind::power: {
      cplx w = z / q.b1, wn = 1.0;
      cplx sum = accumulate(long(coeffs.size()), tol, [&](long n) {
        cplx t = coeffs[n] * wn;
        wn *= w;
        return t;
      });
      return pref * sum;
    }
    case series_kind::bessel_k: {
      if (z == 0.0) fail(errc::outside_domain, "evaluation at a singular point");
      cplx r = std::sqrt(s.base.q * z);
      cplx inv = 1.0 / (I * r);
      cplx invn = 1.0;
      cplx sum = accumulate(long(coeffs.size()), tol, [&](long n) {
        cplx t = coeffs[n] * invn * bessel_k(double(n) + q.b2 - 1.0, 2.0 * I * r);
        invn *= inv;
        return t;
      });
      return pref * cpow(z, (1.0 - q.b2) / 2.0) * sum;
    }
    case series_kind::bessel_j: {
      if (z == 0.0) fail(errc::outside_domain, "evaluation at a singular point");
      cplx r = std::sqrt(s.base.q * z);
      cplx inv = -1.0 / r;
      cplx invn = 1.0;
      cplx sum = accumulate(long(coeffs.size()), tol, [&](long n) {
        cplx t = coeffs[n] * invn * bessel_j(double(n) + q.b2 - 1.0, 2.0 * r);
        invn *= inv;
        return t;
      });
      return pref * cpow(z, (1.0 - q.b2) / 2.0) * sum;
    }
  }
  throw std::invalid_argument("unknown series kind");
}

ode_coeffs equation_coeffs(const gswe_params& p, cplx z) {
  cplx pp = z * (z - p.z0);
  cplx qq = p.b1 + p.b2 * z;
  cplx rr = p.b3 + p.q * (z - p.z0);
  return {pp, qq, rr};
}

ode_coeffs equation_coeffs(const dche_params& p, cplx z) {
  cplx pp = z * z;
  cplx qq = p.b1 + p.b2 * z;
  cplx rr = p.b3 + p.q * z;
  return {pp, qq, rr};
}

double residual_at(const gswe_set& s, series_kind kind,
                   const std::vector<cplx>& coeffs, cplx z,
                   const residual_options& opt) {
  auto f = [&](cplx w) { return evaluate(s, kind, coeffs, w, 1e-15); };
  auto eq = [&](cplx w) { return equation_coeffs(s.base, w); };
  return ode_residual(f, eq, z, opt);
}

double residual_at(const dche_set& s, series_kind kind,
                   const std::vector<cplx>& coeffs, cplx z,
                   const residual_options& opt) {
  auto f = [&](cplx w) { return evaluate(s, kind, coeffs, w, 1e-15); };
  auto eq = [&](cplx w) { return equation_coeffs(s.base, w); };
  return ode_residual(f, eq, z, opt);
}

appendix_report appendix_a_verify(const gswe_params& solved,
                                  const std::vector<cplx>& z_samples) {
  gswe_set s = make_set(solved, 1);
  const long n_max = 110;
  std::vector<cplx> c = hyper_coeffs(s, n_max);

  // the halved chain in the variable t: d_n should reproduce 2^n c_n
  cplx b1 = solved.b1, b2 = solved.b2, b3 = solved.b3, z0 = solved.z0,
       qq = solved.q;
  recurrence_system dsys;
  dsys.coeff = [b1, b2, z0, qq](long n, cplx t) -> std::array<cplx, 3> {
    double nd = double(n);
    cplx al = 0.5 * (nd + 1.0);
    cplx be = nd * (nd + b2 - 1.0) + t;
    cplx ga = 2.0 * z0 * qq * (nd + b2 + b1 / z0 - 1.0);
    return {al, be, ga};
  };
  minimal_options mopt;
  mopt.pad = default_pad(qq * z0);
  std::vector<cplx> d = minimal_solution(dsys, b3, n_max, mopt);

  appendix_report rep{0.0, 0.0};
  cplx two_n = 1.0;
  for (long n = 0; n <= n_max; ++n) {
    if (std::abs(d[n]) > 1e-250) {
      double mis = std::abs(two_n * c[n] - d[n]) / std::abs(d[n]);
      rep.max_chain_mismatch = std::max(rep.max_chain_mismatch, mis);
    }
    two_n *= 2.0;
  }

  // U = t^{1-B2} sum_n d_n t^{-n} K_{n+B2-1}(t) at t = 2i sqrt(qz); this is
  // the K series again up to a constant, built from the other chain
  auto f = [&](cplx z) {
    cplx t = 2.0 * I * std::sqrt(qq * z);
    cplx invn = 1.0;
    cplx sum = detail::accumulate(n_max + 1, 1e-15, [&](long n) {
      cplx term = d[n] * invn * bessel_k(double(n) + b2 - 1.0, t);
      invn /= t;
      return term;
    });
    return detail::cpow(t, 1.0 - b2) * sum;
  };
  auto eq = [&](cplx z) { return equation_coeffs(solved, z); };
  for (cplx z : z_samples) {
    if (std::abs(z) <= std::abs(z0))
      fail(errc::outside_domain, "K series valid only for |z| > |z0|");
    rep.max_residual = std::max(rep.max_residual, ode_residual(f, eq, z));
  }
  return rep;
}

} // namespace heunflow::ince
