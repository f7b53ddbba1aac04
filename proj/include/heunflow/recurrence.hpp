#ifndef HEUNFLOW_RECURRENCE_HPP
#define HEUNFLOW_RECURRENCE_HPP

#include "heunflow/common.hpp"

#include <array>
#include <functional>
#include <optional>
#include <vector>

namespace heunflow {

// A three-term recurrence  alpha_n f_{n+1} + beta_n f_n + gamma_n f_{n-1} = 0
// with one free scalar parameter t (the quantity the characteristic equation
// determines).  One-sided systems run over n >= 0, two-sided systems over
// all integers n.
struct recurrence_system {
  // coeff(n, t) -> {alpha_n, beta_n, gamma_n}
  std::function<std::array<cplx, 3>(long, cplx)> coeff;
  bool two_sided = false;
};

struct cf_options {
  double tol = 1e-14;
  long max_terms = 100000;
};

struct cf_result {
  cplx value;
  long terms = 0;
  long tiny_hits = 0; // denominator floors applied by the Lentz recurrence
};

// Evaluate a1/(b1 + a2/(b2 + ...)) by the modified Lentz algorithm.
// num(j), den(j) supply a_j, b_j for j >= 1.  A zero numerator terminates
// the fraction exactly.
cf_result continued_fraction(const std::function<cplx(long)>& num,
                             const std::function<cplx(long)>& den,
                             const cf_options& opt = {});

// Characteristic residual at trial parameter t: beta_0 minus the upward
// continued fraction, minus the downward one as well for two-sided systems.
// Roots of this function are the admissible characteristic values.
cplx characteristic_residual(const recurrence_system& sys, cplx t,
                             const cf_options& opt = {});

struct root_result {
  cplx root;
  long iterations = 0;
  double residual = 0.0;
};

struct solve_options {
  double tol = 1e-10;
  long max_iter = 200;
  cf_options cf;
};

// Secant iteration on the characteristic residual from the given guess.
root_result solve_characteristic(const recurrence_system& sys, cplx guess,
                                 const solve_options& opt = {});

struct minimal_options {
  long pad = 40;        // extra backward-start margin beyond n_max
  double check_tol = 1e-6; // characteristic residual gate
  cf_options cf;
};

// Minimal solution f_0..f_{n_max} by backward recurrence, normalized to
// f_0 = 1.  t must already satisfy the characteristic equation; the
// residual is checked and CharacteristicUnsatisfied raised otherwise.
std::vector<cplx> minimal_solution(const recurrence_system& sys, cplx t,
                                   long n_max, const minimal_options& opt = {});

// Two-sided minimal solution f_{-n_max}..f_{n_max}, normalized to f_0 = 1;
// result[k] holds f_{k - n_max}.
std::vector<cplx> minimal_solution_two_sided(const recurrence_system& sys,
                                             cplx t, long n_max,
                                             const minimal_options& opt = {});

// Ratio f_{n+1}/f_n of the minimal solution via the continued fraction.
cplx tail_ratio(const recurrence_system& sys, cplx t, long n,
                const cf_options& opt = {});

// Determinant of the dim x dim leading tridiagonal block by the standard
// three-term determinant recurrence.
cplx hill_determinant(const recurrence_system& sys, cplx t, long dim);

// Smallest N >= 1 with gamma_N negligible against alpha_N, beta_N; the
// series then terminates at index N-1.  nullopt if none is found below cap.
std::optional<long> detect_finite_series(const recurrence_system& sys, cplx t,
                                         long cap = 600);

} // namespace heunflow

#endif
