#include "heunflow/numerics.hpp"

#include <array>
#include <vector>

namespace heunflow {

namespace {

// Lanczos coefficients, g = 7, 9 terms.
constexpr std::array<double, 9> lanczos_g7 = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double ln_sqrt_2pi = 0.91893853320467274178;

cplx lanczos_sum(cplx z) {
  // z is the already-shifted argument: caller passes z with Re z >= 0.5
  // and evaluates A(z - 1).
  cplx x = lanczos_g7[0];
  for (int i = 1; i < 9; ++i) x += lanczos_g7[i] / (z - 1.0 + double(i));
  return x;
}

// log(sin(pi z)) without overflow for large |Im z|.
cplx log_sin_pi(cplx z) {
  cplx th = pi * z;
  if (th.imag() < 0.0) {
    // e^{i th} dominates
    return cplx(0, 1) * th + std::log(1.0 - std::exp(cplx(0, -2) * th)) -
           std::log(cplx(0, 2));
  }
  return cplx(0, -1) * th + std::log(1.0 - std::exp(cplx(0, 2) * th)) +
         std::log(cplx(0, 0.5));
}

double eps_mag(cplx z) { return std::abs(z); }

} // namespace

cplx gamma_fn(cplx z) {
  require_finite(z, "gamma argument");
  if (is_nonpositive_integer(z))
    fail(errc::pole_error, "gamma pole at nonpositive integer");
  if (z.real() < 0.5) {
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return pi / (std::sin(pi * z) * gamma_fn(1.0 - z));
  }
  cplx a = lanczos_sum(z);
  cplx t = z - 1.0 + 7.5;
  return std::sqrt(2.0 * pi) * std::pow(t, z - 0.5) * std::exp(-t) * a;
}

cplx log_gamma(cplx z) {
  require_finite(z, "log_gamma argument");
  if (is_nonpositive_integer(z))
    fail(errc::pole_error, "log_gamma pole at nonpositive integer");
  if (z.real() < 0.5)
    return std::log(cplx(pi)) - log_sin_pi(z) - log_gamma(1.0 - z);
  cplx a = lanczos_sum(z);
  cplx t = z - 1.0 + 7.5;
  return ln_sqrt_2pi + (z - 0.5) * std::log(t) - t + std::log(a);
}

cplx recip_gamma(cplx z) {
  require_finite(z, "recip_gamma argument");
  if (is_nonpositive_integer(z)) return 0.0;
  if (z.real() < 0.5) {
    // entire representation, no pole to dodge
    return std::sin(pi * z) * gamma_fn(1.0 - z) / pi;
  }
  if (z.real() > 140.0) return std::exp(-log_gamma(z));
  return 1.0 / gamma_fn(z);
}

cplx kummer_phi(cplx a, cplx b, cplx y) {
  require_finite(a, "phi a");
  require_finite(b, "phi b");
  require_finite(y, "phi argument");
  if (is_nonpositive_integer(b))
    fail(errc::pole_error, "phi undefined for nonpositive integer b");
  cplx term = 1.0, sum = 1.0;
  double peak = 1.0;
  int small_streak = 0;
  long cap = capped(10000);
  for (long k = 0; k < cap; ++k) {
    term *= (a + double(k)) * y / ((b + double(k)) * double(k + 1));
    sum += term;
    peak = std::max(peak, eps_mag(sum));
    if (eps_mag(term) < 1e-16 * peak) {
      if (++small_streak >= 2) return sum;
    } else {
      small_streak = 0;
    }
  }
  fail(errc::non_convergence, "phi series exhausted its term cap");
}

cplx regularized_phi(cplx a, cplx b, cplx y) {
  require_finite(a, "phi a");
  require_finite(b, "phi b");
  require_finite(y, "phi argument");
  cplx term, sum;
  long k0;
  if (is_nonpositive_integer(b)) {
    // 1/Gamma(b+k) kills every term before k0 = 1 - b; seed there.
    long m = std::lround(b.real());
    k0 = 1 - m;
    term = 1.0;
    for (long j = 0; j < k0; ++j)
      term *= (a + double(j)) * y / double(j + 1);
    term *= recip_gamma(b + double(k0)); // Gamma(1 + (b - m)) ~ 1
  } else {
    k0 = 0;
    term = recip_gamma(b);
  }
  sum = term;
  double peak = std::max(1e-300, eps_mag(sum));
  int small_streak = 0;
  long cap = capped(10000);
  for (long k = k0; k < k0 + cap; ++k) {
    term *= (a + double(k)) * y / ((b + double(k)) * double(k + 1));
    sum += term;
    peak = std::max(peak, eps_mag(sum));
    if (eps_mag(term) < 1e-16 * peak) {
      if (++small_streak >= 2) return sum;
    } else {
      small_streak = 0;
    }
  }
  fail(errc::non_convergence, "regularized phi series exhausted its term cap");
}

namespace {

// Complex digamma: reflection below Re z = 1/2, recurrence up to Re z >= 12,
// then the Bernoulli asymptotic series.
cplx digamma(cplx z) {
  if (z.real() < 0.5) {
    cplx t = pi * z;
    return digamma(1.0 - z) - pi * std::cos(t) / std::sin(t);
  }
  cplx acc = 0.0;
  while (z.real() < 12.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  static const double bern[] = {1.0 / 6,  -1.0 / 30,    1.0 / 42, -1.0 / 30,
                                5.0 / 66, -691.0 / 2730, 7.0 / 6};
  cplx w = 1.0 / (z * z), pw = w;
  cplx s = std::log(z) - 0.5 / z;
  for (int n = 0; n < 7; ++n) {
    s -= bern[n] / (2.0 * double(n + 1)) * pw;
    pw *= w;
  }
  return acc + s;
}

// Logarithmic-case Psi for b = n+1, n >= 0, as the z^k log z series plus the
// finite principal part.  When `scaled`, returns Gamma(a+1-b) Psi(a,b;y);
// the gamma ratio against the series prefactor is then exactly one, which
// keeps the result finite for very large a.
cplx psi_log_case(cplx a, long n, cplx y, bool scaled) {
  // descending finite sum: (n-1)!/Gamma(a) sum_{k=0}^{n-1} (a-n)_k y^{k-n}
  //                        / ((1-n)_k k!)
  cplx fin = 0.0;
  if (n > 0) {
    cplx term = std::pow(y, -double(n)), sum = term;
    for (long k = 1; k < n; ++k) {
      term *= (a - double(n) + double(k - 1)) * y /
              ((1.0 - double(n) + double(k - 1)) * double(k));
      sum += term;
    }
    double fact = 1.0;
    for (long j = 2; j < n; ++j) fact *= double(j); // (n-1)!
    cplx pref = scaled
                    ? fact * std::exp(log_gamma(a - double(n)) - log_gamma(a))
                    : fact * recip_gamma(a);
    fin = pref * sum;
  }
  // ascending log-coupled sum
  cplx ly = std::log(y);
  cplx term = 1.0;
  cplx psi_a = digamma(a);
  double h1 = -0.57721566490153286061;  // psi(1)
  double hn = h1;
  for (long j = 1; j <= n; ++j) hn += 1.0 / double(j); // psi(n+1)
  cplx acc = 0.0;
  double peak = 1e-300;
  int small_streak = 0;
  long cap = capped(10000);
  bool done = false;
  for (long k = 0; k < cap; ++k) {
    cplx piece = term * (ly + psi_a - h1 - hn);
    acc += piece;
    peak = std::max(peak, std::abs(acc));
    if (std::abs(piece) < 1e-16 * peak && k > 0) {
      if (++small_streak >= 2) {
        done = true;
        break;
      }
    } else {
      small_streak = 0;
    }
    term *= (a + double(k)) * y / ((double(n) + double(k) + 1.0) * double(k + 1));
    psi_a += 1.0 / (a + double(k));
    h1 += 1.0 / double(k + 1);
    hn += 1.0 / (double(n) + double(k) + 1.0);
  }
  if (!done) fail(errc::non_convergence, "psi log-case series exhausted its cap");
  double nfact = 1.0;
  for (long j = 2; j <= n; ++j) nfact *= double(j);
  cplx pref = (n % 2 == 0 ? -1.0 : 1.0) / nfact; // (-1)^{n+1}/n!
  if (!scaled) pref *= recip_gamma(a - double(n));
  return pref * acc + fin;
}

// Divergent asymptotic series y^{-a} sum_k (a)_k (a-b+1)_k / (k! (-y)^k),
// summed to its smallest term.  Returns false if the smallest term is not
// yet below the accuracy floor.
bool psi_asymptotic(cplx a, cplx b, cplx y, cplx& out) {
  cplx term = 1.0, sum = 1.0;
  double best = 1e300;
  for (long k = 0; k < 2 * 1024; ++k) {
    cplx next = term * (a + double(k)) * (a - b + 1.0 + double(k)) /
                (-(double(k) + 1.0) * y);
    double mag = eps_mag(next);
    if (mag >= best) break; // past the smallest term
    term = next;
    sum += term;
    best = mag;
  }
  if (best > 1e-14 * std::max(1.0, eps_mag(sum))) return false;
  out = std::pow(y, -a) * sum;
  return true;
}

cplx psi_two_phi(cplx a, cplx b, cplx y) {
  // Psi = Gamma(1-b)/Gamma(a+1-b) Phi(a,b;y)
  //     + Gamma(b-1)/Gamma(a) y^{1-b} Phi(a+1-b,2-b;y)
  cplx t1 = gamma_fn(1.0 - b) * recip_gamma(a + 1.0 - b) * kummer_phi(a, b, y);
  cplx t2 = gamma_fn(b - 1.0) * recip_gamma(a) * std::pow(y, 1.0 - b) *
            kummer_phi(a + 1.0 - b, 2.0 - b, y);
  return t1 + t2;
}

} // namespace

cplx tricomi_psi(cplx a, cplx b, cplx y) {
  require_finite(a, "psi a");
  require_finite(b, "psi b");
  require_finite(y, "psi argument");
  if (y == 0.0) fail(errc::pole_error, "psi argument must be nonzero");
  if (y.imag() == 0.0 && y.real() < 0.0)
    fail(errc::branch_error, "psi on the negative real cut");
  if (is_nonpositive_integer(a)) {
    // terminating polynomial: sum_k C(m,k) (b+k)_{m-k} (-y)^k, sign (-1)^m
    long m = -std::lround(a.real());
    cplx sum = 0.0, binom = 1.0;
    for (long k = 0; k <= m; ++k) {
      cplx poch = 1.0;
      for (long j = 0; j < m - k; ++j) poch *= b + double(k + j);
      sum += binom * poch * std::pow(-y, double(k));
      binom *= double(m - k) / double(k + 1);
    }
    return (m % 2 ? -sum : sum);
  }
  if (std::abs(y) > 30.0 &&
      std::abs(y) > 4.0 * (std::abs(a) + std::abs(a - b + 1.0))) {
    cplx out;
    if (psi_asymptotic(a, b, y, out)) return out;
  }
  if (is_integer(b, 1e-10)) {
    long m = std::lround(b.real());
    if (m >= 1) return psi_log_case(a, m - 1, y, false);
    // reflect b <= 0 into the b >= 2 log case
    return std::pow(y, 1.0 - b) * psi_log_case(a + 1.0 - b, 1 - m, y, false);
  }
  return psi_two_phi(a, b, y);
}

cplx tricomi_psi_scaled(cplx a, cplx b, cplx y) {
  require_finite(a, "psi a");
  require_finite(b, "psi b");
  require_finite(y, "psi argument");
  if (y == 0.0) fail(errc::pole_error, "psi argument must be nonzero");
  if (y.imag() == 0.0 && y.real() < 0.0)
    fail(errc::branch_error, "psi on the negative real cut");
  if (is_integer(b, 1e-10)) {
    long m = std::lround(b.real());
    if (m >= 1) return psi_log_case(a, m - 1, y, true);
    // reflected scaled form carries Gamma(a) rather than Gamma(a+1-b);
    // restore the intended factor through a log-gamma ratio
    return std::pow(y, 1.0 - b) *
           std::exp(log_gamma(a + 1.0 - b) - log_gamma(a)) *
           psi_log_case(a + 1.0 - b, 1 - m, y, true);
  }
  // Gamma(a+1-b) Psi(a,b;y) with the gamma ratio taken in log form
  cplx t1 = gamma_fn(1.0 - b) * kummer_phi(a, b, y);
  cplx ratio = std::exp(log_gamma(a + 1.0 - b) - log_gamma(a));
  cplx t2 = gamma_fn(b - 1.0) * ratio * std::pow(y, 1.0 - b) *
            kummer_phi(a + 1.0 - b, 2.0 - b, y);
  return t1 + t2;
}

namespace {

// Raw Gauss series with the caller's leading term; shared by gauss_f and
// regularized_f.  Large cap: near-unit arguments from confluence checks
// need O(10^5) terms.
cplx gauss_series(cplx a, cplx b, cplx c, cplx x, cplx t0, long k0) {
  cplx term = t0, sum = t0;
  double peak = std::max(1e-300, eps_mag(sum));
  int small_streak = 0;
  long cap = capped(2000000);
  for (long k = k0; k < k0 + cap; ++k) {
    term *= (a + double(k)) * (b + double(k)) * x /
            ((c + double(k)) * double(k + 1));
    sum += term;
    peak = std::max(peak, eps_mag(sum));
    if (eps_mag(term) < 1e-16 * peak) {
      if (++small_streak >= 2) return sum;
    } else {
      small_streak = 0;
    }
  }
  fail(errc::non_convergence, "gauss series exhausted its term cap");
}

} // namespace

cplx gauss_f(cplx a, cplx b, cplx c, cplx x) {
  require_finite(a, "gauss a");
  require_finite(b, "gauss b");
  require_finite(c, "gauss c");
  require_finite(x, "gauss argument");
  if (is_nonpositive_integer(c))
    fail(errc::pole_error, "gauss F undefined for nonpositive integer c");
  if (x == 0.0) return 1.0;
  if (std::abs(x) <= 0.9) return gauss_series(a, b, c, x, 1.0, 0);
  cplx w = x / (x - 1.0);
  if (std::abs(w) <= 0.9999) {
    // Pfaff: (1-x)^{-a} F(a, c-b; c; x/(x-1))
    return std::pow(1.0 - x, -a) * gauss_series(a, c - b, c, w, 1.0, 0);
  }
  if (std::abs(x) < 1.0) return gauss_series(a, b, c, x, 1.0, 0);
  fail(errc::outside_domain, "gauss argument outside the convergence region");
}

cplx regularized_f(cplx a, cplx b, cplx c, cplx x) {
  require_finite(a, "gauss a");
  require_finite(b, "gauss b");
  require_finite(c, "gauss c");
  require_finite(x, "gauss argument");
  auto reg_series = [&](cplx aa, cplx bb, cplx arg) {
    if (is_nonpositive_integer(c)) {
      long m = std::lround(c.real());
      long k0 = 1 - m;
      cplx t0 = 1.0;
      for (long j = 0; j < k0; ++j)
        t0 *= (aa + double(j)) * (bb + double(j)) / double(j + 1);
      t0 *= std::pow(arg, double(k0)) * recip_gamma(c + double(k0));
      return gauss_series(aa, bb, c, arg, t0, k0);
    }
    return gauss_series(aa, bb, c, arg, recip_gamma(c), 0);
  };
  if (x == 0.0) return recip_gamma(c);
  if (std::abs(x) <= 0.9) return reg_series(a, b, x);
  cplx w = x / (x - 1.0);
  if (std::abs(w) <= 0.9999) return std::pow(1.0 - x, -a) * reg_series(a, c - b, w);
  if (std::abs(x) < 1.0) return reg_series(a, b, x);
  fail(errc::outside_domain, "gauss argument outside the convergence region");
}

cplx bessel_j(cplx lambda, cplx t) {
  require_finite(lambda, "bessel order");
  require_finite(t, "bessel argument");
  if (t == 0.0) {
    if (lambda == 0.0) return 1.0;
    if (lambda.real() > 0.0) return 0.0;
    fail(errc::pole_error, "J singular at t = 0 for this order");
  }
  // J = (t/2)^lambda sum_k (-t^2/4)^k / (k! Gamma(lambda+k+1))
  cplx q = -t * t / 4.0;
  cplx term, sum;
  long k0 = 0;
  if (is_nonpositive_integer(lambda + 1.0)) {
    // negative integer order: first surviving term at k = -lambda
    long m = -std::lround(lambda.real());
    k0 = m;
    term = 1.0;
    for (long j = 1; j <= m; ++j) term *= q / double(j);
  } else {
    term = recip_gamma(lambda + 1.0);
  }
  sum = term;
  double peak = std::max(1e-300, eps_mag(sum));
  int small_streak = 0;
  long cap = capped(4000);
  for (long k = k0; k < k0 + cap; ++k) {
    term *= q / ((double(k) + 1.0) * (lambda + double(k) + 1.0));
    sum += term;
    peak = std::max(peak, eps_mag(sum));
    if (eps_mag(term) < 1e-17 * peak) {
      if (++small_streak >= 2) return std::pow(t / 2.0, lambda) * sum;
    } else {
      small_streak = 0;
    }
  }
  fail(errc::non_convergence, "bessel J series exhausted its term cap");
}

namespace {

// Modified Bessel I by ascending series, with the same reciprocal-gamma
// seeding as bessel_j.
cplx bessel_i(cplx lambda, cplx t) {
  cplx q = t * t / 4.0;
  cplx term;
  long k0 = 0;
  if (is_nonpositive_integer(lambda + 1.0)) {
    long m = -std::lround(lambda.real());
    k0 = m;
    term = 1.0;
    for (long j = 1; j <= m; ++j) term *= q / double(j);
  } else {
    term = recip_gamma(lambda + 1.0);
  }
  cplx sum = term;
  double peak = std::max(1e-300, eps_mag(sum));
  int small_streak = 0;
  long cap = capped(4000);
  for (long k = k0; k < k0 + cap; ++k) {
    term *= q / ((double(k) + 1.0) * (lambda + double(k) + 1.0));
    sum += term;
    peak = std::max(peak, eps_mag(sum));
    if (eps_mag(term) < 1e-17 * peak) {
      if (++small_streak >= 2) return std::pow(t / 2.0, lambda) * sum;
    } else {
      small_streak = 0;
    }
  }
  fail(errc::non_convergence, "bessel I series exhausted its term cap");
}

double digamma_int(long n) {
  // psi(n) = -gamma + H_{n-1}, integer n >= 1
  constexpr double euler_gamma = 0.57721566490153286061;
  double h = 0.0;
  for (long j = 1; j < n; ++j) h += 1.0 / double(j);
  return -euler_gamma + h;
}

// K_m for integer m >= 0 via the logarithmic series (finite part plus
// log-coupled sum), valid for moderate |t|.
cplx bessel_k_int(long m, cplx t) {
  cplx half_t = t / 2.0;
  cplx lt = std::log(half_t);
  cplx sum = 0.0;
  // finite sum: 1/2 (t/2)^{-m} sum_{k=0}^{m-1} (m-k-1)!/k! (-t^2/4)^k
  if (m > 0) {
    cplx q = -t * t / 4.0;
    cplx term = 1.0;
    for (long j = 1; j < m; ++j) term *= double(j); // (m-1)!
    cplx acc = term;
    for (long k = 1; k < m; ++k) {
      term *= q / (double(k) * double(m - k));
      acc += term;
    }
    sum += 0.5 * std::pow(half_t, -double(m)) * acc;
  }
  // log-coupled series: (-1)^{m+1} sum_k [log(t/2) - (psi(k+1)+psi(m+k+1))/2]
  //                     * (t^2/4)^k (t/2)^m / (k! (m+k)!)
  cplx q = t * t / 4.0;
  cplx base = std::pow(half_t, double(m));
  for (long j = 1; j <= m; ++j) base /= double(j); // / m!
  cplx term = base;
  cplx acc = 0.0;
  double peak = 1e-300;
  int small_streak = 0;
  for (long k = 0; k < 4000; ++k) {
    cplx piece = term * (lt - 0.5 * (digamma_int(k + 1) + digamma_int(m + k + 1)));
    acc += piece;
    peak = std::max(peak, eps_mag(acc));
    if (eps_mag(piece) < 1e-17 * peak && k > 0) {
      if (++small_streak >= 2) break;
    } else {
      small_streak = 0;
    }
    term *= q / (double(k + 1) * double(m + k + 1));
  }
  double sgn = (m % 2 == 0) ? -1.0 : 1.0;
  return sum + sgn * acc;
}

bool k_asymptotic(cplx lambda, cplx t, cplx& out) {
  // sqrt(pi/(2t)) e^{-t} sum_k prod_j (4l^2-(2j-1)^2)/(8t j)
  cplx mu = 4.0 * lambda * lambda;
  cplx term = 1.0, sum = 1.0;
  double best = 1e300;
  for (long k = 0; k < 256; ++k) {
    cplx next = term * (mu - std::pow(2.0 * double(k) + 1.0, 2)) /
                (8.0 * t * double(k + 1));
    double mag = eps_mag(next);
    if (mag >= best) break;
    term = next;
    sum += term;
    best = mag;
  }
  if (best > 1e-12 * std::max(1.0, eps_mag(sum))) return false;
  out = std::sqrt(pi / (2.0 * t)) * std::exp(-t) * sum;
  return true;
}

} // namespace

cplx bessel_k(cplx lambda, cplx t) {
  require_finite(lambda, "bessel order");
  require_finite(t, "bessel argument");
  if (t == 0.0) fail(errc::pole_error, "K singular at t = 0");
  if (std::abs(t) >= 13.0) {
    cplx out;
    if (k_asymptotic(lambda, t, out)) return out;
  }
  if (is_integer(lambda, 1e-12)) {
    long m = std::lround(lambda.real());
    return bessel_k_int(m < 0 ? -m : m, t); // K_{-m} = K_m
  }
  // K = pi/2 (I_{-l} - I_l) / sin(pi l)
  return 0.5 * pi * (bessel_i(-lambda, t) - bessel_i(lambda, t)) /
         std::sin(pi * lambda);
}

} // namespace heunflow
