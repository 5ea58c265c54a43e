#ifndef OSCINT_CLOSEDFORM_HPP
#define OSCINT_CLOSEDFORM_HPP

#include "oscint/types.hpp"

namespace oscint {

enum class ClosedFormStatus { valid, purported_erroneous };

struct ClosedFormValue {
    double value = 0.0;
    ClosedFormStatus status = ClosedFormStatus::valid;
    FamilyEq source_eq = FamilyEq::E5;
};

// Sign table for the four family closed forms, theta = b^2/(4a),
// r = sqrt(pi/(2a)), C/S in the paper normalization:
//
//   E5  int q(ax^2) cos(bx) dx      = (r/2) [cos(theta) -+ sin(theta)]
//   E6  int q(ax^2) sin(bx) dx      = r [ {cos;sin} C(theta) +- {sin;cos} S(theta) ]
//   E1  int x q(ax^2) sin(bx) "="     (b/(4a)) r [sin(theta) +- cos(theta)]
//   E2  int x q(ax^2) cos(bx) "="     (1/(2a)){1;0}
//                                      -+ (b/(2a)) r [ {sin;cos} C -+ {cos;sin} S ]
//
// where the upper entry/sign is quad = sin and the lower is quad = cos.
// E1 and E2 are the erroneous table entries, reproduced exactly as printed;
// they equal d/db of E5 (up to sign: E1 = -d/db E5) and of E6 (E2 = +d/db E6)
// after the invalid formal interchange.

// E5. Valid for a > 0, b >= 0.
ClosedFormValue eval_convergent_cos_family(double a, double b, Trig quad_trig);

// E6. Valid for a > 0, b >= 0.
ClosedFormValue eval_convergent_sin_family(double a, double b, Trig quad_trig);

// E1/E2 purported values; requires weight = x, a > 0, b > 0.
ClosedFormValue purported_value(const IntegrandSpec& spec);

// Analytic d/db of the E5/E6 right sides via C'(x) = cos x / sqrt(2 pi x),
// S'(x) = sin x / sqrt(2 pi x). Requires b > 0 (C', S' are singular at 0).
double closed_form_b_derivative(double a, double b, FamilyEq source_eq, Trig quad_trig);

// Dispatch on the spec's family: E5/E6 -> valid closed form, E1/E2 -> purported.
ClosedFormValue closed_form_for(const IntegrandSpec& spec);

const char* to_string(ClosedFormStatus s);

}  // namespace oscint

#endif
