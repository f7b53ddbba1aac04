#ifndef HEUNFLOW_NUMERICS_HPP
#define HEUNFLOW_NUMERICS_HPP

#include "heunflow/common.hpp"

namespace heunflow {

// Complex gamma function (Lanczos, g = 7).  Raises PoleError at
// nonpositive integers.  Target accuracy 1e-12 relative for |z| <= 50.
cplx gamma_fn(cplx z);

// Principal branch of log Gamma.  exp(log_gamma(z)) agrees with gamma_fn(z)
// for Re z >= 0.5; the reflection region may differ by multiples of 2*pi*i.
cplx log_gamma(cplx z);

// 1/Gamma(z); entire, returns 0 at nonpositive integers.
cplx recip_gamma(cplx z);

// Kummer's confluent hypergeometric Phi(a, b; y) = 1F1(a; b; y) by direct
// series.  Raises PoleError when b is a nonpositive integer, NonConvergence
// when the term cap is exhausted.
cplx kummer_phi(cplx a, cplx b, cplx y);

// Phi(a, b; y)/Gamma(b), entire in b.  Nonpositive-integer b is handled by
// starting the series past the suppressed leading terms.
cplx regularized_phi(cplx a, cplx b, cplx y);

// Tricomi's confluent hypergeometric Psi(a, b; y), principal branch
// |arg y| < pi.  Branch selection: terminating polynomial when a is a
// nonpositive integer, divergent asymptotic series for large |y|, otherwise
// the two-Phi connection with an offset average when b is an integer.
cplx tricomi_psi(cplx a, cplx b, cplx y);

// Gamma(a + 1 - b) * Psi(a, b; y) evaluated without forming either factor,
// stable when a is large.
cplx tricomi_psi_scaled(cplx a, cplx b, cplx y);

// Gauss hypergeometric F(a, b; c; x) inside the unit disc, extended by the
// Pfaff transformation to Re x < 1/2.  Raises PoleError for nonpositive
// integer c, OutsideDomain when x is beyond both convergence regions.
cplx gauss_f(cplx a, cplx b, cplx c, cplx x);

// F(a, b; c; x)/Gamma(c), entire in c.
cplx regularized_f(cplx a, cplx b, cplx c, cplx x);

// Bessel J of complex order and argument by the ascending series.
// Negative integer orders are folded through J_{-m} = (-1)^m J_m.
cplx bessel_j(cplx lambda, cplx t);

// Modified Bessel K of complex order and argument.  Integer orders use the
// logarithmic series, other orders the I-difference formula, large |t| the
// divergent asymptotic expansion.  The band 8 < |Re t| < 13 loses accuracy
// to cancellation (about 1e-8 at worst); the library's series solutions
// never evaluate there.
cplx bessel_k(cplx lambda, cplx t);

} // namespace heunflow

#endif
