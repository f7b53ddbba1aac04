#include "heunflow/tridiag.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace heunflow {

namespace {

// Number of eigenvalues strictly less than x (Sturm count via the LDL^T
// pivot signs).
int count_below(const std::vector<double>& d, const std::vector<double>& e,
                double x) {
  const double tiny = 1e-300;
  int count = 0;
  double piv = d[0] - x;
  if (std::abs(piv) < tiny) piv = -tiny; // zero pivot counts as negative
  if (piv < 0.0) ++count;
  for (std::size_t i = 1; i < d.size(); ++i) {
    piv = d[i] - x - e[i - 1] * e[i - 1] / piv;
    if (std::abs(piv) < tiny) piv = -tiny;
    if (piv < 0.0) ++count;
  }
  return count;
}

} // namespace

std::vector<double> tridiag_eigenvalues(const std::vector<double>& diag,
                                        const std::vector<double>& off,
                                        int count) {
  const std::size_t n = diag.size();
  if (n == 0 || off.size() + 1 != n)
    throw std::invalid_argument("tridiagonal dimensions disagree");
  if (count < 1 || std::size_t(count) > n)
    throw std::invalid_argument("eigenvalue count out of range");
  // Gershgorin bounds
  double lo = diag[0], hi = diag[0];
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(off[i - 1]);
    if (i + 1 < n) r += std::abs(off[i]);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  double span = std::max(hi - lo, 1.0);
  lo -= 1e-10 * span;
  hi += 1e-10 * span;
  std::vector<double> out(count);
  for (int k = 0; k < count; ++k) {
    double a = lo, b = hi;
    // invariant: count_below(a) <= k < count_below(b)
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (a + b);
      if (mid == a || mid == b) break;
      if (count_below(diag, off, mid) <= k)
        a = mid;
      else
        b = mid;
      if (b - a < 1e-14 * std::max(1.0, std::abs(a) + std::abs(b))) break;
    }
    out[k] = 0.5 * (a + b);
  }
  return out;
}

} // namespace heunflow
