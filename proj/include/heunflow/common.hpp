#ifndef HEUNFLOW_COMMON_HPP
#define HEUNFLOW_COMMON_HPP

#include <complex>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace heunflow {

using cplx = std::complex<double>;

constexpr double pi = 3.14159265358979323846;

// Failure codes shared by every solver in the library.  Numerical failures
// raise solver_error carrying one of these; precondition violations raise
// std::invalid_argument instead.
enum class errc {
  pole_error,
  non_convergence,
  branch_error,
  tiny_denominator,
  inadmissible_nu,
  no_root,
  diverged,
  characteristic_unsatisfied,
  underflow,
  rule_inapplicable,
  connection_undefined,
  outside_domain,
  step_underflow,
  degenerate_target,
  root_count,
  ratio_not_constant,
  grid_too_coarse,
  indicial_clash,
  inadmissible_fraction,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::pole_error: return "PoleError";
    case errc::non_convergence: return "NonConvergence";
    case errc::branch_error: return "BranchError";
    case errc::tiny_denominator: return "TinyDenominator";
    case errc::inadmissible_nu: return "InadmissibleNu";
    case errc::no_root: return "NoRoot";
    case errc::diverged: return "Diverged";
    case errc::characteristic_unsatisfied: return "CharacteristicUnsatisfied";
    case errc::underflow: return "Underflow";
    case errc::rule_inapplicable: return "RuleInapplicable";
    case errc::connection_undefined: return "ConnectionUndefined";
    case errc::outside_domain: return "OutsideDomain";
    case errc::step_underflow: return "StepUnderflow";
    case errc::degenerate_target: return "DegenerateTarget";
    case errc::root_count: return "RootCount";
    case errc::ratio_not_constant: return "RatioNotConstant";
    case errc::grid_too_coarse: return "GridTooCoarse";
    case errc::indicial_clash: return "IndicialClash";
    case errc::inadmissible_fraction: return "InadmissibleFraction";
  }
  return "UnknownError";
}

class solver_error : public std::runtime_error {
public:
  solver_error(errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) {
  throw solver_error(c, msg);
}

// Global iteration ceiling.  HEUNFLOW_MAX_ITER, when set, caps every
// iterative loop in the library; loops that hit the cap raise
// NonConvergence rather than spin.
inline long max_iter_cap() {
  const char* s = std::getenv("HEUNFLOW_MAX_ITER");
  if (!s || !*s) return -1;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || v <= 0) return -1;
  return v;
}

inline long capped(long requested) {
  long cap = max_iter_cap();
  if (cap > 0 && cap < requested) return cap;
  return requested;
}

inline bool is_finite(cplx z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(cplx z, const char* what) {
  if (!is_finite(z)) throw std::invalid_argument(std::string(what) + " must be finite");
}

// True when z sits within tol of a real integer <= 0.
inline bool is_nonpositive_integer(cplx z, double tol = 1e-12) {
  double r = std::round(z.real());
  return r <= 0.5 && std::abs(z.real() - r) <= tol && std::abs(z.imag()) <= tol &&
         r <= 0.0;
}

inline bool is_integer(cplx z, double tol = 1e-12) {
  return std::abs(z.real() - std::round(z.real())) <= tol && std::abs(z.imag()) <= tol;
}

// Complex distance from nu to the nearest half-integer (... -1/2, 0, 1/2 ...),
// the degeneracy test for two-sided expansions.
inline double dist_to_half_integers(cplx nu) {
  double two = 2.0 * nu.real();
  double frac = two - std::round(two);
  return std::abs(cplx(frac / 2.0, nu.imag()));
}

} // namespace heunflow

#endif
