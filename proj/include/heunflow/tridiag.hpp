#ifndef HEUNFLOW_TRIDIAG_HPP
#define HEUNFLOW_TRIDIAG_HPP

#include <vector>

namespace heunflow {

// Lowest `count` eigenvalues (ascending) of the real symmetric tridiagonal
// matrix with the given diagonal and off-diagonal, by Sturm-sequence
// bisection.  off.size() must be diag.size() - 1.
std::vector<double> tridiag_eigenvalues(const std::vector<double>& diag,
                                        const std::vector<double>& off,
                                        int count);

} // namespace heunflow

#endif
