#include "heunflow/recurrence.hpp"

namespace heunflow {

cf_result continued_fraction(const std::function<cplx(long)>& num,
                             const std::function<cplx(long)>& den,
                             const cf_options& opt) {
  const double floor = 1e-30;
  cf_result res;
  cplx f = floor, c = f, d = 0.0;
  long cap = capped(opt.max_terms);
  for (long j = 1; j <= cap; ++j) {
    cplx a = num(j), b = den(j);
    if (a == 0.0) {
      // fraction terminates exactly; everything below contributes nothing
      res.terms = j - 1;
      res.value = (j == 1) ? cplx(0.0) : f;
      return res;
    }
    d = b + a * d;
    if (std::abs(d) < floor) {
      d = floor;
      ++res.tiny_hits;
    }
    d = 1.0 / d;
    c = b + a / c;
    if (std::abs(c) < floor) {
      c = floor;
      ++res.tiny_hits;
    }
    cplx delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < opt.tol) {
      res.terms = j;
      res.value = f;
      return res;
    }
  }
  fail(errc::non_convergence, "continued fraction did not settle");
}

cplx characteristic_residual(const recurrence_system& sys, cplx t,
                             const cf_options& opt) {
  auto c0 = sys.coeff(0, t);
  cplx beta0 = c0[1];
  // upward fraction over n >= 1
  auto up_num = [&](long j) {
    if (j == 1) return sys.coeff(0, t)[0] * sys.coeff(1, t)[2];
    return -sys.coeff(j - 1, t)[0] * sys.coeff(j, t)[2];
  };
  auto up_den = [&](long j) { return sys.coeff(j, t)[1]; };
  cplx up = continued_fraction(up_num, up_den, opt).value;
  if (!sys.two_sided) return beta0 - up;
  // downward fraction over n <= -1
  auto dn_num = [&](long j) {
    if (j == 1) return sys.coeff(-1, t)[0] * sys.coeff(0, t)[2];
    return -sys.coeff(-j, t)[0] * sys.coeff(-j + 1, t)[2];
  };
  auto dn_den = [&](long j) { return sys.coeff(-j, t)[1]; };
  cplx dn = continued_fraction(dn_num, dn_den, opt).value;
  return beta0 - up - dn;
}

root_result solve_characteristic(const recurrence_system& sys, cplx guess,
                                 const solve_options& opt) {
  require_finite(guess, "characteristic guess");
  cplx x0 = guess;
  cplx x1 = guess * (1.0 + 1e-4) + 1e-4;
  if (std::abs(x1 - x0) < 1e-12 * std::max(1.0, std::abs(x0)))
    x1 = x0 + 1e-3 * std::max(1.0, std::abs(x0));
  cplx f0 = characteristic_residual(sys, x0, opt.cf);
  cplx f1 = characteristic_residual(sys, x1, opt.cf);
  double scale = std::max(1.0, std::abs(guess));
  long cap = capped(opt.max_iter);
  root_result best{x1, 0, std::abs(f1)};
  for (long it = 1; it <= cap; ++it) {
    if (f1 == f0) break; // flat secant; fall through to the residual gate
    cplx x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
    if (!is_finite(x2) || std::abs(x2) > 1e10 * scale)
      fail(errc::diverged, "secant iterate left the search region");
    cplx f2 = characteristic_residual(sys, x2, opt.cf);
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = f2;
    if (std::abs(f1) < best.residual) best = {x1, it, std::abs(f1)};
    if (std::abs(x1 - x0) < 1e-14 * std::max(1.0, std::abs(x1))) {
      best.iterations = it;
      break;
    }
  }
  double beta0 = std::abs(sys.coeff(0, best.root)[1]);
  if (best.residual > opt.tol * std::max(1.0, beta0))
    fail(errc::no_root, "secant stalled away from a characteristic root");
  return best;
}

namespace {

void check_characteristic(const recurrence_system& sys, cplx t,
                          const minimal_options& opt) {
  cplx res = characteristic_residual(sys, t, opt.cf);
  double beta0 = std::abs(sys.coeff(0, t)[1]);
  if (std::abs(res) > opt.check_tol * std::max(1.0, beta0))
    fail(errc::characteristic_unsatisfied,
         "parameter does not satisfy the characteristic equation");
}

} // namespace

std::vector<cplx> minimal_solution(const recurrence_system& sys, cplx t,
                                   long n_max, const minimal_options& opt) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  check_characteristic(sys, t, opt);
  long m = n_max + std::max<long>(1, opt.pad);
  // Terminating systems: gamma_N == 0 cuts the backward chain, and every
  // coefficient from N up is exactly zero.
  long start = m;
  for (long n = 1; n <= m; ++n) {
    if (sys.coeff(n, t)[2] == 0.0) {
      start = n - 1;
      break;
    }
  }
  std::vector<cplx> f(m + 2, 0.0);
  f[start] = 1e-280;
  for (long n = start; n >= 1; --n) {
    auto [al, be, ga] = sys.coeff(n, t);
    f[n - 1] = -(al * f[n + 1] + be * f[n]) / ga;
    if (!is_finite(f[n - 1]))
      fail(errc::underflow, "backward recurrence lost the minimal solution");
    if (std::abs(f[n - 1]) > 1e260) {
      double s = 1.0 / std::abs(f[n - 1]);
      for (long k = n - 1; k <= start + 1; ++k) f[k] *= s;
    }
  }
  if (f[0] == 0.0 || !is_finite(f[0]))
    fail(errc::underflow, "minimal solution vanished at n = 0");
  cplx norm = f[0];
  std::vector<cplx> out(n_max + 1);
  for (long n = 0; n <= n_max; ++n) out[n] = f[n] / norm;
  return out;
}

std::vector<cplx> minimal_solution_two_sided(const recurrence_system& sys,
                                             cplx t, long n_max,
                                             const minimal_options& opt) {
  if (!sys.two_sided)
    throw std::invalid_argument("system is not two-sided");
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  check_characteristic(sys, t, opt);
  long m = n_max + std::max<long>(1, opt.pad);
  // upper wing, backward from +m toward 0
  std::vector<cplx> up(m + 2, 0.0);
  up[m] = 1e-280;
  for (long n = m; n >= 1; --n) {
    auto [al, be, ga] = sys.coeff(n, t);
    up[n - 1] = -(al * up[n + 1] + be * up[n]) / ga;
    if (!is_finite(up[n - 1]))
      fail(errc::underflow, "upper wing lost the minimal solution");
    if (std::abs(up[n - 1]) > 1e260) {
      double s = 1.0 / std::abs(up[n - 1]);
      for (long k = n - 1; k <= m + 1; ++k) up[k] *= s;
    }
  }
  // lower wing, forward in storage index but backward in |n| from -m
  std::vector<cplx> dn(m + 2, 0.0); // dn[j] = f_{-j}
  dn[m] = 1e-280;
  for (long j = m; j >= 1; --j) {
    auto [al, be, ga] = sys.coeff(-j, t);
    dn[j - 1] = -(be * dn[j] + ga * dn[j + 1]) / al;
    if (!is_finite(dn[j - 1]))
      fail(errc::underflow, "lower wing lost the minimal solution");
    if (std::abs(dn[j - 1]) > 1e260) {
      double s = 1.0 / std::abs(dn[j - 1]);
      for (long k = j - 1; k <= m + 1; ++k) dn[k] *= s;
    }
  }
  if (up[0] == 0.0 || dn[0] == 0.0)
    fail(errc::underflow, "two-sided minimal solution vanished at n = 0");
  std::vector<cplx> out(2 * n_max + 1);
  for (long n = 0; n <= n_max; ++n) out[n_max + n] = up[n] / up[0];
  for (long j = 1; j <= n_max; ++j) out[n_max - j] = dn[j] / dn[0];
  return out;
}

cplx tail_ratio(const recurrence_system& sys, cplx t, long n,
                const cf_options& opt) {
  auto num = [&](long j) {
    if (j == 1) return -sys.coeff(n + 1, t)[2];
    return -sys.coeff(n + j - 1, t)[0] * sys.coeff(n + j, t)[2];
  };
  auto den = [&](long j) { return sys.coeff(n + j, t)[1]; };
  return continued_fraction(num, den, opt).value;
}

cplx hill_determinant(const recurrence_system& sys, cplx t, long dim) {
  if (dim < 1) throw std::invalid_argument("dim must be positive");
  cplx dm1 = 1.0, d0 = sys.coeff(0, t)[1];
  for (long k = 1; k < dim; ++k) {
    cplx dk = sys.coeff(k, t)[1] * d0 -
              sys.coeff(k - 1, t)[0] * sys.coeff(k, t)[2] * dm1;
    dm1 = d0;
    d0 = dk;
  }
  return d0;
}

std::optional<long> detect_finite_series(const recurrence_system& sys, cplx t,
                                         long cap) {
  long lim = capped(cap);
  for (long n = 1; n <= lim; ++n) {
    auto [al, be, ga] = sys.coeff(n, t);
    double scale = 1.0 + std::abs(al) + std::abs(be);
    if (std::abs(ga) < 1e-12 * scale) return n;
  }
  return std::nullopt;
}

} // namespace heunflow
