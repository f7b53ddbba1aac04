#ifndef HEUNFLOW_GSWE_HPP
#define HEUNFLOW_GSWE_HPP

#include "heunflow/recurrence.hpp"
#include "heunflow/residual.hpp"

#include <vector>

namespace heunflow::gswe {

// Parameters of  z(z-z0) U'' + (B1 + B2 z) U'
//                + [B3 - 2 eta omega (z - z0) + omega^2 z(z-z0)] U = 0
// with regular points 0 and z0 and an irregular point at infinity.
struct params {
  cplx b1, b2, b3;
  cplx z0;    // nonzero
  cplx omega; // nonzero
  cplx eta;
};

void validate(const params& p);

// The four index-shift / reflection substitutions that permute the solution
// sets.  t1 and t2 adjust exponents at the regular points, t3 flips the
// frequency pair, t4 reflects z -> z0 - z.
enum class rule { t1, t2, t3, t4 };

struct rule_image {
  params p;
  cplx pow_z = 0.0;    // factor z^{pow_z} carried by the substitution
  cplx pow_zz0 = 0.0;  // factor (z-z0)^{pow_zz0}
  bool reflect = false; // solution argument becomes z0 - z
};

rule_image apply_rule(const params& p, rule r);

// A solution set: transformed parameters, algebraic prefactor, and the two
// coefficient chains (power-series b_n and hypergeometric c_n) sharing one
// characteristic equation in the untransformed b3.
struct solution_set {
  params base;  // original parameters; base.b3 is the characteristic value
  int index;    // 1..4
  params image; // parameters the series formulas use
  cplx pow_z = 0.0, pow_zz0 = 0.0;
  cplx conn; // s = B2' + B1'/z0 entering the b_n <-> c_n link
  std::function<params(cplx)> image_of; // image as a function of base b3
  recurrence_system power_system; // b_n chain, free parameter = base b3
  recurrence_system hyper_system; // c_n chain, same free parameter
};

// Raises ConnectionUndefined when the gamma-function link between the two
// chains degenerates (nonpositive integer s).
solution_set make_set(const params& p, int index);

// Root of beta_0 = 0 in the base b3, the standard starting guess.
cplx default_guess(const solution_set& s);

// Characteristic value from the hypergeometric chain's continued fraction.
root_result solve_b3(const solution_set& s, cplx guess,
                     const solve_options& opt = {});

// Backward-start margin matched to the coefficient growth scale.
long default_pad(const params& p);

std::vector<cplx> power_coeffs(const solution_set& s, long n_max);
std::vector<cplx> hyper_coeffs(const solution_set& s, long n_max);

// c_n / b_n: z0^n (s)_n with s the connection parameter.
cplx connection_ratio(const solution_set& s, long n);

enum class series_kind {
  power,   // about z0, converges for |z - z0| < |z0|
  tricomi, // about infinity, |z| > |z0|
  kummer,  // regularized confluent form, entire in the exponent parameter
};

// Evaluate the selected expansion.  coeffs must come from power_coeffs for
// `power` and hyper_coeffs otherwise.
cplx evaluate(const solution_set& s, series_kind kind,
              const std::vector<cplx>& coeffs, cplx z, double tol = 1e-12);

ode_coeffs equation_coeffs(const params& p, cplx z);

// Convenience: residual of the given expansion at z against the base ODE.
double residual_at(const solution_set& s, series_kind kind,
                   const std::vector<cplx>& coeffs, cplx z,
                   const residual_options& opt = {});

// Two-sided (doubly infinite) expansions with a non-integer offset nu.
struct two_sided_set {
  params base;
  int index; // 1 or 2
  params image;
  cplx pow_zz0 = 0.0;
  recurrence_system system; // free parameter = nu
};

two_sided_set make_two_sided(const params& p, int index);

// Secant solve of the two-sided characteristic equation for nu.
root_result solve_nu(const two_sided_set& s, cplx guess,
                     const solve_options& opt = {});

enum class ts_kind {
  gauss,          // ordinary hypergeometric terms, argument (z0-z)/z0
  gauss_infinity, // hypergeometric terms in z0/(z0-z)
  tricomi,        // confluent terms about infinity
  kummer,         // regularized confluent terms
};

cplx evaluate_two_sided(const two_sided_set& s, ts_kind kind,
                        const std::vector<cplx>& coeffs, cplx nu, cplx z);

} // namespace heunflow::gswe

#endif
