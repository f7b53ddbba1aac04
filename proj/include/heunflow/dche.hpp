#ifndef HEUNFLOW_DCHE_HPP
#define HEUNFLOW_DCHE_HPP

#include <functional>
#include <vector>

#include "heunflow/common.hpp"
#include "heunflow/gswe.hpp"
#include "heunflow/recurrence.hpp"
#include "heunflow/residual.hpp"

// Double-confluent reduction of the spheroidal family,
//
//   z^2 U'' + (B1 + B2 z) U' + [B3 - 2 eta omega z + omega^2 z^2] U = 0,
//
// with irregular singular points at 0 and infinity.  Two one-sided solution
// sets share a single coefficient chain each; a two-sided chain indexed by a
// complex offset nu provides expansions valid on both sides at once.
namespace heunflow::dche {

struct params {
  cplx b1, b2, b3;
  cplx omega; // nonzero
  cplx eta;
};

// b1 = 0 or omega = 0 leave the confluent-hypergeometric subfamily that this
// module does not cover
void validate(const params& p);

// drop z0 from a spheroidal parameter pack; DegenerateTarget if b1 = 0
params leaver_limit(const gswe::params& p);

struct solution_set {
  params base;  // base.b3 is the free characteristic parameter
  int index;    // 1 or 2
  params image; // parameters the series formulas use
  cplx pow_z = 0.0;   // prefactor z^{pow_z}
  cplx exp_inv = 0.0; // prefactor exp(exp_inv / z)
  std::function<params(cplx)> image_of;
  recurrence_system system; // c_n chain, free parameter = base b3
};

solution_set make_set(const params& p, int index);

// characteristic guess that zeroes the leading diagonal entry
cplx default_guess(const solution_set& s);

root_result solve_b3(const solution_set& s, cplx guess,
                     const solve_options& opt = {});

std::vector<cplx> set_coeffs(const solution_set& s, long n_max);

enum class series_kind {
  power,   // ascending powers of z, entire up to the prefactors
  tricomi, // expansion about infinity
  kummer,  // regularized confluent form, valid for z != 0
};

// Evaluate one expansion.  The essential singularity at the origin makes the
// prefactors meaningless for |z| below 1e-8; such points are refused unless
// `stripped` asks for the bare series sum without the prefactors.
cplx evaluate(const solution_set& s, series_kind kind,
              const std::vector<cplx>& coeffs, cplx z, double tol = 1e-12,
              bool stripped = false);

ode_coeffs equation_coeffs(const params& p, cplx z);

double residual_at(const solution_set& s, series_kind kind,
                   const std::vector<cplx>& coeffs, cplx z,
                   const residual_options& opt = {});

// ---- two-sided expansions -------------------------------------------------

struct two_sided_set {
  params base;
  recurrence_system system; // free parameter = nu
};

two_sided_set make_two_sided(const params& p);

root_result solve_nu(const two_sided_set& s, cplx guess,
                     const solve_options& opt = {});

enum class ts_kind {
  origin,        // Tricomi terms in the argument B1/z
  origin_kummer, // regularized confluent terms in B1/z
  tricomi,       // Tricomi terms in -2 i omega z
  kummer,        // regularized confluent terms in -2 i omega z
};

cplx evaluate_two_sided(const two_sided_set& s, ts_kind kind,
                        const std::vector<cplx>& coeffs, cplx nu, cplx z);

} // namespace heunflow::dche

#endif
