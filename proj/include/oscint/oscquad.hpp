#ifndef OSCINT_OSCQUAD_HPP
#define OSCINT_OSCQUAD_HPP

#include <vector>

#include "oscint/types.hpp"

namespace oscint {

// int_c^d e^{i x^2} dx. Segmented at the phase nodes x = +-sqrt(k pi) with a
// width cap, fixed-order Gauss rule per segment plus one bisection refinement.
// Budget exhaustion returns converged = false with the best estimate.
ComplexEstimate integrate_gauss_kernel(double c, double d, const QuadratureConfig& cfg = {});

// int_lo^hi w(x) e^{i(a x^2 + b x)} dx for finite lo <= hi, a > 0, any real b.
// Reduced to the e^{iu^2} kernel by completing the square; the weight-x part
// integrates exactly.
ComplexEstimate complex_partial(Weight weight, double a, double b, double lo, double hi,
                                const QuadratureConfig& cfg = {});

// P(T) = int_0^T of the spec's integrand.
RealEstimate partial_integral(const IntegrandSpec& spec, double T, const QuadratureConfig& cfg = {});

// int_lo^hi of the spec's integrand over an arbitrary finite range.
RealEstimate partial_integral_range(const IntegrandSpec& spec, double lo, double hi,
                                    const QuadratureConfig& cfg = {});

// All prefixes P(T_1), ..., P(T_n) for strictly increasing T_i in one sweep.
// Interval contributions are independent (and may run concurrently); the
// prefix sum is sequential in index order, so results are identical for any
// thread count.
std::vector<RealEstimate> partial_integral_prefix(const IntegrandSpec& spec,
                                                  const std::vector<double>& Ts,
                                                  const QuadratureConfig& cfg = {});

// Right side of the integration-by-parts identity for int_{-T1}^{T2} x e^{i(x^2+x)} dx:
//   (1/2i)[e^{i(T2^2+T2)} - e^{i(T1^2-T1)}] - (e^{-i/4}/2) int_{-T1+1/2}^{T2+1/2} e^{ix^2} dx
ComplexEstimate ibp_identity_rhs(double T1, double T2, const QuadratureConfig& cfg = {});

// A_T = int_{-T}^{T} x e^{i(x^2+x)} dx = e^{iT^2} sin T - convergent term.
ComplexEstimate symmetric_partial(double T, const QuadratureConfig& cfg = {});

// The convergent term (e^{-i/4}/2) int_{-T+1/2}^{T+1/2} e^{ix^2} dx, whose
// limit is (sqrt(pi)/2) e^{i(pi-1)/4}.
ComplexEstimate symmetric_partial_convergent_term(double T, const QuadratureConfig& cfg = {});

// The non-decaying boundary term produced by one integration by parts of a
// weight-x integrand, evaluated at the upper endpoint:
//   quad = cos:  sin(a T^2) lin(b T) / (2a)
//   quad = sin: -cos(a T^2) lin(b T) / (2a)
// P(T) - B(T) converges as T -> inf and its limit is the purported table value.
double boundary_term(const IntegrandSpec& spec, double T);

// Convergent weight-one families evaluated by phase-segmented summation with
// iterated-averaging acceleration of the alternating segment series past the
// stationary point. Never returns a wrong silent value: acceleration failure
// sets converged = false.
RealEstimate improper_value(const IntegrandSpec& spec, const QuadratureConfig& cfg = {});

}  // namespace oscint

#endif
