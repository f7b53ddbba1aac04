#ifndef HEUNFLOW_INCE_HPP
#define HEUNFLOW_INCE_HPP

#include <functional>
#include <vector>

#include "heunflow/common.hpp"
#include "heunflow/dche.hpp"
#include "heunflow/gswe.hpp"
#include "heunflow/recurrence.hpp"
#include "heunflow/residual.hpp"

// The vanishing-frequency limit of the spheroidal family at fixed
// q = -2 eta omega.  Two equations survive the limit:
//
//   z(z-z0) U'' + (B1 + B2 z) U' + [B3 + q (z-z0)] U = 0      (four sets)
//   z^2 U''     + (B1 + B2 z) U' + [B3 + q z] U = 0           (two sets)
//
// Solutions about infinity become series of Bessel functions of argument
// 2 sqrt(qz), subnormal at the irregular point.
namespace heunflow::ince {

struct gswe_params {
  cplx b1, b2, b3;
  cplx z0; // nonzero
  cplx q;  // nonzero
};

struct dche_params {
  cplx b1, b2, b3; // b1 nonzero
  cplx q;          // nonzero
};

void validate(const gswe_params& p);
void validate(const dche_params& p);

// drop omega and eta, install the retained product q
gswe_params ince_limit(const gswe::params& p, cplx q);
dche_params ince_limit(const dche::params& p, cplx q);

struct gswe_set {
  gswe_params base; // base.b3 is the free characteristic parameter
  int index;        // 1..4
  gswe_params image;
  cplx pow_z = 0.0, pow_zz0 = 0.0;
  cplx conn; // gamma link parameter, as in the spheroidal sets
  std::function<gswe_params(cplx)> image_of;
  recurrence_system power_system; // b_n chain
  recurrence_system hyper_system; // c_n chain feeding the Bessel series
};

struct dche_set {
  dche_params base;
  int index; // 1 or 2
  dche_params image;
  cplx pow_z = 0.0;   // prefactor z^{pow_z}
  cplx exp_inv = 0.0; // prefactor exp(exp_inv / z)
  std::function<dche_params(cplx)> image_of;
  recurrence_system system; // c_n chain
};

gswe_set make_set(const gswe_params& p, int index);
dche_set make_set(const dche_params& p, int index);

cplx default_guess(const gswe_set& s);
cplx default_guess(const dche_set& s);

root_result solve_b3(const gswe_set& s, cplx guess, const solve_options& opt = {});
root_result solve_b3(const dche_set& s, cplx guess, const solve_options& opt = {});

std::vector<cplx> power_coeffs(const gswe_set& s, long n_max);
std::vector<cplx> hyper_coeffs(const gswe_set& s, long n_max);
std::vector<cplx> set_coeffs(const dche_set& s, long n_max);

// ratio c_n / b_n linking the two chains of a gswe_set
cplx connection_ratio(const gswe_set& s, long n);

enum class series_kind {
  power,    // ascending series about z0 (first equation) or 0 (second)
  bessel_k, // modified-Bessel series about infinity, |z| > |z0|
  bessel_j, // Bessel series valid for every z off the branch cut
};

cplx evaluate(const gswe_set& s, series_kind kind,
              const std::vector<cplx>& coeffs, cplx z, double tol = 1e-12);
cplx evaluate(const dche_set& s, series_kind kind,
              const std::vector<cplx>& coeffs, cplx z, double tol = 1e-12);

ode_coeffs equation_coeffs(const gswe_params& p, cplx z);
ode_coeffs equation_coeffs(const dche_params& p, cplx z);

double residual_at(const gswe_set& s, series_kind kind,
                   const std::vector<cplx>& coeffs, cplx z,
                   const residual_options& opt = {});
double residual_at(const dche_set& s, series_kind kind,
                   const std::vector<cplx>& coeffs, cplx z,
                   const residual_options& opt = {});

// Direct verification of the first-set K-series: rebuild it through the
// halved-coefficient chain d_n = 2^n c_n in the variable t = 2i sqrt(qz),
// check the two chains agree, and report the worst equation residual over
// the sample points.
struct appendix_report {
  double max_chain_mismatch; // worst |2^n c_n - d_n| / |d_n|
  double max_residual;       // worst normalized equation residual
};

appendix_report appendix_a_verify(const gswe_params& solved,
                                  const std::vector<cplx>& z_samples);

} // namespace heunflow::ince

#endif
