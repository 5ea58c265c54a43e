#include "oscint/dui.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "oscint/closedform.hpp"
#include "oscint/oscquad.hpp"
#include "oscint/parallel.hpp"

namespace oscint {

namespace {

constexpr double kTraceTmax = 40.0;
constexpr int kTraceSamples = 512;
constexpr double kClassifyTol = 1e-3;
// Agreement tolerance between the formal limit and the outer derivative.
constexpr double kCombinedTol = 1e-4 + kClassifyTol;

double closed_form_of(FamilyEq eq, Trig quad, double a, double b) {
    return eq == FamilyEq::E5 ? eval_convergent_cos_family(a, b, quad).value
                              : eval_convergent_sin_family(a, b, quad).value;
}

// Formally differentiating under the integral maps
//   E5 family d/db -> -x q(ax^2) sin(bx)    (an E1 integrand)
//   E6 family d/db -> +x q(ax^2) cos(bx)    (an E2 integrand)
IntegrandSpec formal_spec(FamilyEq eq, Trig quad, double a, double b, double* sign) {
    *sign = eq == FamilyEq::E5 ? -1.0 : 1.0;
    IntegrandSpec s;
    s.weight = Weight::x;
    s.quad_trig = quad;
    s.lin_trig = eq == FamilyEq::E5 ? Trig::sin : Trig::cos;
    s.a = a;
    s.b = b;
    return s;
}

void require_e5_or_e6(FamilyEq eq) {
    if (eq != FamilyEq::E5 && eq != FamilyEq::E6)
        throw std::invalid_argument("dui: source_eq must be E5 or E6");
}

// Composite Gauss for the absolutely convergent control integrands, one
// segment per unit length.
template <class F>
double control_quad(F&& f, double lo, double hi) {
    static constexpr double X[15] = {
        -0.98799251802048542849,  -0.937273392400705904308, -0.848206583410427216201,
        -0.724417731360170047416, -0.570972172608538847537, -0.394151347077563369897,
        -0.201194093997434522301, 0.0,                      0.201194093997434522301,
        0.394151347077563369897,  0.570972172608538847537,  0.724417731360170047416,
        0.848206583410427216201,  0.937273392400705904308,  0.98799251802048542849};
    static constexpr double W[15] = {
        0.0307532419961172683546, 0.0703660474881081247093, 0.107159220467171935012,
        0.139570677926154314448,  0.166269205816993933553,  0.186161000015562211027,
        0.198431485327111576456,  0.202578241925561272881,  0.198431485327111576456,
        0.186161000015562211027,  0.166269205816993933553,  0.139570677926154314448,
        0.107159220467171935012,  0.0703660474881081247093, 0.0307532419961172683546};
    const int nseg = std::max(1, static_cast<int>(std::ceil(hi - lo)));
    double acc = 0.0;
    for (int s = 0; s < nseg; ++s) {
        const double a = lo + (hi - lo) * s / nseg;
        const double b = lo + (hi - lo) * (s + 1) / nseg;
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        double seg = 0.0;
        for (int i = 0; i < 15; ++i) seg += W[i] * f(mid + half * X[i]);
        acc += half * seg;
    }
    return acc;
}

double control_value(double b, double T) {
    return control_quad([b](double x) { return std::exp(-x) * std::cos(b * x); }, 0.0, T);
}

double control_formal_partial(double b, double lo, double hi) {
    return control_quad([b](double x) { return -x * std::exp(-x) * std::sin(b * x); }, lo, hi);
}

void require_b_grid(double b_lo, double b_hi, int n_b) {
    if (!(b_lo < b_hi) || n_b < 8)
        throw std::invalid_argument("uniform_tail_probe: need b_lo < b_hi and n_b >= 8");
}

void require_T_range(double T, double T2) {
    if (!(0.0 < T) || !(T <= T2))
        throw std::invalid_argument("uniform_tail_probe: need 0 < T <= T2");
}

}  // namespace

DUIReport check_interchange(FamilyEq source_eq, Trig quad_trig, double a, double b,
                            const QuadratureConfig& cfg) {
    require_e5_or_e6(source_eq);
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("check_interchange: need a, b > 0");

    DUIReport report;
    const double h = b * 1e-5;
    report.outer_derivative = (closed_form_of(source_eq, quad_trig, a, b + h) -
                               closed_form_of(source_eq, quad_trig, a, b - h)) /
                              (2.0 * h);
    report.analytic_derivative = closed_form_b_derivative(a, b, source_eq, quad_trig);

    double sign = 1.0;
    const IntegrandSpec formal = formal_spec(source_eq, quad_trig, a, b, &sign);
    const PartialIntegralTrace trace =
        build_trace(formal, kTraceTmax, kTraceSamples, GridKind::uniform_phase, cfg);
    report.formal_verdict = classify(trace, kClassifyTol);
    report.uniform_tail_sup =
        uniform_tail_probe(source_eq, quad_trig, a, 0.5 * b, 1.5 * b, 10.0, 20.0, 9, cfg);

    if (!trace.all_converged || report.formal_verdict.kind == VerdictKind::Inconclusive) {
        report.decision = InterchangeDecision::inconclusive;
    } else if (report.formal_verdict.kind != VerdictKind::Convergent) {
        report.decision = InterchangeDecision::interchange_invalid;
    } else {
        const double formal_limit = sign * report.formal_verdict.limit_estimate->real();
        report.decision = std::abs(formal_limit - report.outer_derivative) <= kCombinedTol
                              ? InterchangeDecision::interchange_valid
                              : InterchangeDecision::interchange_invalid;
    }
    return report;
}

DUIReport check_interchange_control(double b, const QuadratureConfig& cfg) {
    if (!(b > 0.0)) throw std::domain_error("check_interchange_control: need b > 0");

    DUIReport report;
    // F(b) = int_0^inf e^{-x} cos(bx) dx, evaluated numerically; the tail past
    // T = 46 is below e^{-46}.
    constexpr double kT = 46.0;
    const double h = b * 1e-5;
    report.outer_derivative = (control_value(b + h, kT) - control_value(b - h, kT)) / (2.0 * h);
    report.analytic_derivative = -2.0 * b / ((1.0 + b * b) * (1.0 + b * b));

    PartialIntegralTrace trace;
    trace.grid = GridKind::uniform_T;
    const int n = kTraceSamples;
    trace.T.resize(n);
    trace.p.resize(n);
    trace.error_bound.assign(n, 0.0);
    double acc = 0.0, prev = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = kTraceTmax * (i + 1) / n;
        acc += control_formal_partial(b, prev, t);
        trace.T[i] = t;
        trace.p[i] = {acc, 0.0};
        prev = t;
    }
    report.formal_verdict = classify(trace, kClassifyTol);
    report.uniform_tail_sup = uniform_tail_probe_control(0.5 * b, 1.5 * b, 10.0, 20.0, 9, cfg);

    if (report.formal_verdict.kind == VerdictKind::Convergent) {
        const double formal_limit = report.formal_verdict.limit_estimate->real();
        report.decision = std::abs(formal_limit - report.outer_derivative) <= kCombinedTol
                              ? InterchangeDecision::interchange_valid
                              : InterchangeDecision::interchange_invalid;
    } else if (report.formal_verdict.kind == VerdictKind::Inconclusive) {
        report.decision = InterchangeDecision::inconclusive;
    } else {
        report.decision = InterchangeDecision::interchange_invalid;
    }
    return report;
}

double uniform_tail_probe(FamilyEq source_eq, Trig quad_trig, double a, double b_lo, double b_hi,
                          double T, double T2, int n_b, const QuadratureConfig& cfg) {
    require_e5_or_e6(source_eq);
    require_T_range(T, T2);
    require_b_grid(b_lo, b_hi, n_b);
    if (T == T2) return 0.0;

    std::vector<double> vals(n_b);
    parallel_for(n_b, [&](std::size_t i) {
        const double b = b_lo + (b_hi - b_lo) * static_cast<double>(i) / (n_b - 1);
        double sign = 1.0;  // |sign| = 1, irrelevant under the absolute value
        const IntegrandSpec formal = formal_spec(source_eq, quad_trig, a, b, &sign);
        vals[i] = std::abs(partial_integral_range(formal, T, T2, cfg).value);
    });
    return *std::max_element(vals.begin(), vals.end());
}

double uniform_tail_probe_control(double b_lo, double b_hi, double T, double T2, int n_b,
                                  const QuadratureConfig&) {
    require_T_range(T, T2);
    require_b_grid(b_lo, b_hi, n_b);
    if (T == T2) return 0.0;
    std::vector<double> vals(n_b);
    parallel_for(n_b, [&](std::size_t i) {
        const double b = b_lo + (b_hi - b_lo) * static_cast<double>(i) / (n_b - 1);
        vals[i] = std::abs(control_formal_partial(b, T, T2));
    });
    return *std::max_element(vals.begin(), vals.end());
}

const char* to_string(InterchangeDecision d) {
    switch (d) {
        case InterchangeDecision::interchange_valid: return "interchange_valid";
        case InterchangeDecision::interchange_invalid: return "interchange_invalid";
        case InterchangeDecision::inconclusive: return "inconclusive";
    }
    return "?";
}

}  // namespace oscint
