#ifndef HEUNFLOW_RESIDUAL_HPP
#define HEUNFLOW_RESIDUAL_HPP

#include "heunflow/common.hpp"

#include <functional>
#include <vector>

namespace heunflow {

// Coefficients of P(z) f'' + Q(z) f' + R(z) f = 0 at a point.
struct ode_coeffs {
  cplx p, q, r;
};

struct residual_options {
  double h = 1e-3; // stencil step, scaled by max(1, |z|)
};

// Relative defect of f against the equation at z, using fourth-order
// five-point stencils for the derivatives.  Normalized by the largest of
// the three terms so a perfect solution scores near machine epsilon.
double ode_residual(const std::function<cplx(cplx)>& f,
                    const std::function<ode_coeffs(cplx)>& eq, cplx z,
                    const residual_options& opt = {});

// ode_residual over a list of points; safe to run in parallel since each
// entry is independent.
std::vector<double> residual_grid(const std::function<cplx(cplx)>& f,
                                  const std::function<ode_coeffs(cplx)>& eq,
                                  const std::vector<cplx>& zs,
                                  const residual_options& opt = {});

} // namespace heunflow

#endif
