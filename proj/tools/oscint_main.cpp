// Command-line surface for the oscillatory-integral verification library.
// Exit codes: 0 success, 1 usage or I/O error, 2 numerical/accuracy failure.

#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <numbers>
#include <string>

#include <CLI11.hpp>

#include "oscint/classify.hpp"
#include "oscint/closedform.hpp"
#include "oscint/corpus.hpp"
#include "oscint/dui.hpp"
#include "oscint/fresnel.hpp"
#include "oscint/oscquad.hpp"
#include "oscint/report.hpp"

namespace {

using namespace oscint;

void print_value(const char* name, double v) { std::printf("%s = %.17g\n", name, v); }

IntegrandSpec spec_from_flags(const std::string& family, const std::string& quad,
                              const std::string& lin, double a, double b) {
    const FamilyEq eq = family_from_string(family);
    IntegrandSpec spec = spec_for(eq, trig_from_string(quad), a, b);
    if (!lin.empty() && trig_from_string(lin) != spec.lin_trig)
        throw CLI::ValidationError("--lin " + lin + " contradicts family " + family + " (expects " +
                                   to_string(spec.lin_trig) + ")");
    return spec;
}

void print_verdict(const ConvergenceVerdict& v) {
    std::printf("verdict: %s\n", to_string(v.kind));
    if (v.limit_estimate) {
        if (v.limit_estimate->imag() == 0.0)
            print_value("limit_estimate", v.limit_estimate->real());
        else
            std::printf("limit_estimate = %.17g + %.17gi\n", v.limit_estimate->real(),
                        v.limit_estimate->imag());
    }
    if (v.oscillation_envelope) print_value("oscillation_envelope", *v.oscillation_envelope);
    std::printf("windows (t_lo, t_hi, oscillation, samples):\n");
    for (const auto& w : v.window_report)
        std::printf("  %10.4f %10.4f %14.6g %6d\n", w.t_lo, w.t_hi, w.oscillation, w.samples);
}

int run(int argc, char** argv) {
    CLI::App app{"oscint: numerical verification of oscillatory trigonometric integrals"};
    app.require_subcommand(1);

    QuadratureConfig quad;
    app.add_option("--abs-tol", quad.abs_tol, "quadrature absolute tolerance");
    app.add_option("--rel-tol", quad.rel_tol, "quadrature relative tolerance");
    app.add_option("--max-segments", quad.max_segments, "quadrature segment budget");
    app.add_option("--accel-depth", quad.acceleration_depth, "series acceleration depth");

    // fresnel
    auto* cmd_fresnel = app.add_subcommand("fresnel", "evaluate the Fresnel pair C(x), S(x)");
    double fres_x = 0.0;
    std::string convention = "paper";
    cmd_fresnel->add_option("--x", fres_x, "argument (paper convention)")->required();
    cmd_fresnel->add_option("--convention", convention, "paper|classical|amplitude");

    // eval
    auto* cmd_eval = app.add_subcommand("eval", "evaluate a family closed form / purported value");
    std::string family, quad_trig, lin_trig;
    double a = 1.0, b = 0.0;
    cmd_eval->add_option("--family", family, "E1|E2|E5|E6")->required();
    cmd_eval->add_option("--quad", quad_trig, "trig applied to a*x^2: sin|cos")->required();
    cmd_eval->add_option("--lin", lin_trig, "trig applied to b*x (implied by family)");
    cmd_eval->add_option("--a", a, "quadratic coefficient (a > 0)")->required();
    cmd_eval->add_option("--b", b, "linear coefficient")->required();

    // trace / classify
    double t_max = 40.0;
    int samples = 512;
    std::string grid = "phase";
    std::string out_csv;
    auto add_trace_flags = [&](CLI::App* cmd, bool with_out) {
        cmd->add_option("--family", family, "E1|E2|E5|E6")->required();
        cmd->add_option("--quad", quad_trig, "sin|cos")->required();
        cmd->add_option("--lin", lin_trig, "implied by family");
        cmd->add_option("--a", a, "quadratic coefficient")->required();
        cmd->add_option("--b", b, "linear coefficient")->required();
        cmd->add_option("--tmax", t_max, "truncation limit");
        cmd->add_option("--samples", samples, "number of samples (>= 32)");
        cmd->add_option("--grid", grid, "phase|uniform");
        if (with_out) cmd->add_option("--out", out_csv, "output CSV path")->required();
    };
    auto* cmd_trace = app.add_subcommand("trace", "write a partial-integral trace CSV");
    add_trace_flags(cmd_trace, true);
    auto* cmd_classify = app.add_subcommand("classify", "classify convergence of a family");
    add_trace_flags(cmd_classify, false);

    // ibp-check
    auto* cmd_ibp = app.add_subcommand("ibp-check",
                                       "check the integration-by-parts identity for "
                                       "int_{-T1}^{T2} x e^{i(x^2+x)} dx");
    double t1 = 1.0, t2 = 1.0;
    cmd_ibp->add_option("--t1", t1, "lower truncation (> 0)")->required();
    cmd_ibp->add_option("--t2", t2, "upper truncation (> 0)")->required();

    // pv-probe
    auto* cmd_pv = app.add_subcommand("pv-probe", "principal-value probe of A_T");
    double pv_tmax = 40.0;
    int pv_samples = 512;
    cmd_pv->add_option("--tmax", pv_tmax, "truncation limit")->required();
    cmd_pv->add_option("--samples", pv_samples, "number of samples (>= 32)");

    // dui
    auto* cmd_dui = app.add_subcommand("dui", "differentiation-under-the-integral diagnosis");
    cmd_dui->add_option("--family", family, "E5|E6")->required();
    cmd_dui->add_option("--quad", quad_trig, "sin|cos")->required();
    cmd_dui->add_option("--a", a, "quadratic coefficient")->required();
    cmd_dui->add_option("--b", b, "linear coefficient (> 0)")->required();

    // report
    auto* cmd_report = app.add_subcommand("report", "run the built-in corpus and write a report");
    std::string report_out = "oscint_report.json";
    bool no_traces = false;
    cmd_report->add_option("--out", report_out, "report JSON path");
    cmd_report->add_flag("--no-traces", no_traces, "skip trace CSV emission");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // --help: exit 0
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // usage error
    }

    if (cmd_fresnel->parsed()) {
        FresnelPair p = fresnel_cs(fres_x);
        p = convert_normalization(p, fresnel_convention_from_string(convention));
        std::printf("convention = %s\n", to_string(p.convention));
        print_value("argument", p.argument);
        print_value("C", p.c);
        print_value("S", p.s);
        return 0;
    }

    if (cmd_eval->parsed()) {
        const IntegrandSpec spec = spec_from_flags(family, quad_trig, lin_trig, a, b);
        const ClosedFormValue v = closed_form_for(spec);
        std::printf("family = %s  integrand = %s * %s(a x^2) * %s(b x), a=%g b=%g\n",
                    to_string(v.source_eq), to_string(spec.weight), to_string(spec.quad_trig),
                    to_string(spec.lin_trig), spec.a, spec.b);
        if (v.status == ClosedFormStatus::purported_erroneous) {
            std::printf("status=purported_erroneous: this is the value printed by the classical "
                        "tables; the integral itself DIVERGES (see `classify`).\n");
        } else {
            std::printf("status=valid\n");
        }
        print_value("value", v.value);
        return 0;
    }

    if (cmd_trace->parsed() || cmd_classify->parsed()) {
        const IntegrandSpec spec = spec_from_flags(family, quad_trig, lin_trig, a, b);
        const PartialIntegralTrace trace =
            build_trace(spec, t_max, samples, grid_from_string(grid), quad);
        if (cmd_trace->parsed()) {
            write_trace_csv(out_csv, trace);
            std::printf("wrote %d samples to %s\n", samples, out_csv.c_str());
        } else {
            print_verdict(classify(trace));
        }
        return trace.all_converged ? 0 : 2;
    }

    if (cmd_ibp->parsed()) {
        const ComplexEstimate rhs = ibp_identity_rhs(t1, t2, quad);
        const ComplexEstimate lhs = complex_partial(Weight::x, 1.0, 1.0, -t1, t2, quad);
        const double diff = std::abs(lhs.value - rhs.value);
        std::printf("lhs  = %.17g + %.17gi\n", lhs.value.real(), lhs.value.imag());
        std::printf("rhs  = %.17g + %.17gi\n", rhs.value.real(), rhs.value.imag());
        print_value("diff", diff);
        if (!lhs.converged || !rhs.converged) return 2;
        return diff <= 1e-8 ? 0 : 2;
    }

    if (cmd_pv->parsed()) {
        const ConvergenceVerdict v = principal_value_probe(pv_tmax, pv_samples, quad);
        print_verdict(v);
        const ComplexEstimate term = symmetric_partial_convergent_term(pv_tmax, quad);
        const std::complex<double> target =
            std::sqrt(std::numbers::pi) / 2.0 *
            std::complex<double>(std::cos((std::numbers::pi - 1.0) / 4.0),
                                 std::sin((std::numbers::pi - 1.0) / 4.0));
        std::printf("convergent term at T=%g = %.17g + %.17gi\n", pv_tmax, term.value.real(),
                    term.value.imag());
        std::printf("limit sqrt(pi)/2 e^{i(pi-1)/4} = %.17g + %.17gi  (|diff| = %.3g)\n",
                    target.real(), target.imag(), std::abs(term.value - target));
        return term.converged ? 0 : 2;
    }

    if (cmd_dui->parsed()) {
        const DUIReport r = check_interchange(family_from_string(family),
                                              trig_from_string(quad_trig), a, b, quad);
        print_value("outer_derivative", r.outer_derivative);
        print_value("analytic_derivative", r.analytic_derivative);
        std::printf("formal_verdict: %s\n", to_string(r.formal_verdict.kind));
        print_value("uniform_tail_sup", r.uniform_tail_sup);
        std::printf("decision: %s\n", to_string(r.decision));
        return r.decision == InterchangeDecision::inconclusive ? 2 : 0;
    }

    if (cmd_report->parsed()) {
        ReportOptions opt;
        opt.quad = quad;
        opt.out_path = report_out;
        opt.write_traces = !no_traces;
        const RunReport r = run_report(builtin_corpus(), opt);
        std::printf("report written to %s (%zu entries)\n", report_out.c_str(),
                    r.doc["entries"].size());
        return r.exit_code;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
