#include "oscint/closedform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oscint/fresnel.hpp"

namespace oscint {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive_a(double a) {
    if (!std::isfinite(a) || a <= 0.0)
        throw std::domain_error("closed form: a must be positive and finite");
}

void require_b(double b, bool strictly_positive) {
    if (!std::isfinite(b) || b < 0.0 || (strictly_positive && b == 0.0))
        throw std::domain_error(strictly_positive ? "closed form: b must be positive"
                                                  : "closed form: b must be nonnegative");
}

double theta_of(double a, double b) { return b * b / (4.0 * a); }
double root_of(double a) { return std::sqrt(kPi / (2.0 * a)); }

}  // namespace

ClosedFormValue eval_convergent_cos_family(double a, double b, Trig quad_trig) {
    require_positive_a(a);
    require_b(b, false);
    const double th = theta_of(a, b);
    const double sign = quad_trig == Trig::sin ? -1.0 : 1.0;
    const double v = 0.5 * root_of(a) * (std::cos(th) + sign * std::sin(th));
    return {v, ClosedFormStatus::valid, FamilyEq::E5};
}

ClosedFormValue eval_convergent_sin_family(double a, double b, Trig quad_trig) {
    require_positive_a(a);
    require_b(b, false);
    const double th = theta_of(a, b);
    const FresnelPair f = fresnel_cs(th);
    double v;
    if (quad_trig == Trig::sin)
        v = root_of(a) * (std::cos(th) * f.c + std::sin(th) * f.s);
    else
        v = root_of(a) * (std::sin(th) * f.c - std::cos(th) * f.s);
    return {v, ClosedFormStatus::valid, FamilyEq::E6};
}

ClosedFormValue purported_value(const IntegrandSpec& spec) {
    if (spec.weight != Weight::x)
        throw std::invalid_argument("purported_value: tables cover the weight-x family only");
    require_positive_a(spec.a);
    require_b(spec.b, true);
    const double a = spec.a, b = spec.b;
    const double th = theta_of(a, b);
    const double r = root_of(a);
    double v;
    FamilyEq eq;
    if (spec.lin_trig == Trig::sin) {
        eq = FamilyEq::E1;
        const double sign = spec.quad_trig == Trig::sin ? 1.0 : -1.0;
        v = b / (4.0 * a) * r * (std::sin(th) + sign * std::cos(th));
    } else {
        eq = FamilyEq::E2;
        const FresnelPair f = fresnel_cs(th);
        if (spec.quad_trig == Trig::sin)
            v = 1.0 / (2.0 * a) - b / (2.0 * a) * r * (std::sin(th) * f.c - std::cos(th) * f.s);
        else
            v = b / (2.0 * a) * r * (std::cos(th) * f.c + std::sin(th) * f.s);
    }
    return {v, ClosedFormStatus::purported_erroneous, eq};
}

double closed_form_b_derivative(double a, double b, FamilyEq source_eq, Trig quad_trig) {
    require_positive_a(a);
    require_b(b, true);
    const double th = theta_of(a, b);
    const double dth = b / (2.0 * a);  // d theta / d b
    const double r = root_of(a);
    if (source_eq == FamilyEq::E5) {
        const double sign = quad_trig == Trig::sin ? -1.0 : 1.0;
        return 0.5 * r * dth * (-std::sin(th) + sign * std::cos(th));
    }
    if (source_eq != FamilyEq::E6)
        throw std::invalid_argument("closed_form_b_derivative: source must be E5 or E6");
    const FresnelPair f = fresnel_cs(th);
    const double cp = std::cos(th) / std::sqrt(2.0 * kPi * th);  // C'(theta)
    const double sp = std::sin(th) / std::sqrt(2.0 * kPi * th);  // S'(theta)
    double inner;
    if (quad_trig == Trig::sin)
        inner = -std::sin(th) * f.c + std::cos(th) * cp + std::cos(th) * f.s + std::sin(th) * sp;
    else
        inner = std::cos(th) * f.c + std::sin(th) * cp + std::sin(th) * f.s - std::cos(th) * sp;
    return r * dth * inner;
}

ClosedFormValue closed_form_for(const IntegrandSpec& spec) {
    switch (family_of(spec)) {
        case FamilyEq::E5: return eval_convergent_cos_family(spec.a, spec.b, spec.quad_trig);
        case FamilyEq::E6: return eval_convergent_sin_family(spec.a, spec.b, spec.quad_trig);
        default: return purported_value(spec);
    }
}

const char* to_string(ClosedFormStatus s) {
    return s == ClosedFormStatus::valid ? "valid" : "purported_erroneous";
}

}  // namespace oscint
