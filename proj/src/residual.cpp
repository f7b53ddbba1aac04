#include "heunflow/residual.hpp"
#include "heunflow/parallel.hpp"

#include <limits>

namespace heunflow {

double ode_residual(const std::function<cplx(cplx)>& f,
                    const std::function<ode_coeffs(cplx)>& eq, cplx z,
                    const residual_options& opt) {
  double scale = std::max(1.0, std::abs(z));
  double h = opt.h * scale;
  const double eps = std::numeric_limits<double>::epsilon();
  if (h < 64.0 * eps * scale)
    fail(errc::step_underflow, "stencil step vanished against the point");
  cplx fm2 = f(z - 2.0 * h), fm1 = f(z - h), f0 = f(z), fp1 = f(z + h),
       fp2 = f(z + 2.0 * h);
  cplx d1 = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
  cplx d2 = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
  ode_coeffs c = eq(z);
  cplx t2 = c.p * d2, t1 = c.q * d1, t0 = c.r * f0;
  double norm = std::max({std::abs(t2), std::abs(t1), std::abs(t0), 1e-300});
  return std::abs(t2 + t1 + t0) / norm;
}

std::vector<double> residual_grid(const std::function<cplx(cplx)>& f,
                                  const std::function<ode_coeffs(cplx)>& eq,
                                  const std::vector<cplx>& zs,
                                  const residual_options& opt) {
  std::vector<double> out(zs.size());
  parallel_for(zs.size(), [&](std::size_t i) {
    out[i] = ode_residual(f, eq, zs[i], opt);
  });
  return out;
}

} // namespace heunflow
