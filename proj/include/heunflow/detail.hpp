#ifndef HEUNFLOW_DETAIL_HPP
#define HEUNFLOW_DETAIL_HPP

#include "heunflow/common.hpp"

// small helpers shared by the series-evaluation modules
namespace heunflow::detail {

// z^e with the conventions 0^0 = 1 and 0^e = 0 for Re e > 0.
inline cplx cpow(cplx base, cplx e) {
  if (e == 0.0) return 1.0;
  if (base == 0.0) {
    if (e.real() > 0.0) return 0.0;
    fail(errc::pole_error, "zero base with nonpositive exponent");
  }
  return std::pow(base, e);
}

// accumulate terms until three consecutive ones drop below tol relative to
// the running magnitude
template <typename TermFn>
cplx accumulate(long count, double tol, TermFn&& term_at) {
  cplx sum = 0.0;
  double peak = 1e-300;
  int streak = 0;
  for (long n = 0; n < count; ++n) {
    cplx t = term_at(n);
    sum += t;
    peak = std::max(peak, std::abs(sum));
    if (std::abs(t) < tol * peak) {
      if (++streak >= 3) return sum;
    } else {
      streak = 0;
    }
  }
  if (streak == 0)
    fail(errc::non_convergence, "series truncation tolerance not reached");
  return sum;
}

} // namespace heunflow::detail

#endif
