#ifndef OSCINT_DUI_HPP
#define OSCINT_DUI_HPP

#include "oscint/classify.hpp"
#include "oscint/types.hpp"

namespace oscint {

enum class InterchangeDecision { interchange_valid, interchange_invalid, inconclusive };

// Differentiation-under-the-integral diagnosis for F(b) = one of the
// convergent families. The function itself is differentiable (outer and
// analytic derivatives agree); validity of the interchange is judged from the
// behavior of the formally differentiated integrand's partial integrals.
struct DUIReport {
    double outer_derivative = 0.0;     // central finite difference of the closed form
    double analytic_derivative = 0.0;  // closed_form_b_derivative
    ConvergenceVerdict formal_verdict; // trace of the differentiated integrand
    double uniform_tail_sup = 0.0;     // sup_b |int_T^{2T} of the formal integrand|
    InterchangeDecision decision = InterchangeDecision::inconclusive;
};

// source_eq must be E5 or E6; a, b > 0. The formal integrand is the
// corresponding weight-x family member (E5 -> -x q(ax^2) sin(bx),
// E6 -> +x q(ax^2) cos(bx)), traced to T_max = 40 with 512 phase-uniform
// samples. decision:
//   - inconclusive       if quadrature accuracy failed or the verdict is Inconclusive
//   - interchange_valid  if the formal trace converges to the outer derivative
//                        within 1e-4 + classifier tol
//   - interchange_invalid otherwise
DUIReport check_interchange(FamilyEq source_eq, Trig quad_trig, double a, double b,
                            const QuadratureConfig& cfg = {});

// Positive control: F(b) = int_0^inf e^{-x} cos(bx) dx, formally differentiated
// integrand -x e^{-x} sin(bx) (absolutely dominated, interchange valid;
// formal limit -2b/(1+b^2)^2).
DUIReport check_interchange_control(double b, const QuadratureConfig& cfg = {});

// sup over an n_b-point b-grid in [b_lo, b_hi] of |int_T^{T2} (formal
// integrand) dx|. For the quadratic-phase families this does not tend to 0 as
// T grows with T2 = 2T: a numeric witness that the differentiated integrals
// do not converge uniformly in b.
double uniform_tail_probe(FamilyEq source_eq, Trig quad_trig, double a, double b_lo, double b_hi,
                          double T, double T2, int n_b, const QuadratureConfig& cfg = {});

// Control-family probe; bounded by int_T^{T2} x e^{-x} dx <= e^{-T} (T+2).
double uniform_tail_probe_control(double b_lo, double b_hi, double T, double T2, int n_b,
                                  const QuadratureConfig& cfg = {});

const char* to_string(InterchangeDecision d);

}  // namespace oscint

#endif
