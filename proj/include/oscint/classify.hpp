#ifndef OSCINT_CLASSIFY_HPP
#define OSCINT_CLASSIFY_HPP

#include <complex>
#include <optional>
#include <vector>

#include "oscint/types.hpp"

namespace oscint {

enum class GridKind { uniform_T, uniform_phase };

// Ordered samples (T_k, P(T_k)) of a partial integral. Real traces keep the
// imaginary parts at zero. When the generating spec is known its quadratic
// phase lets the classifier measure windowed oscillation without aliasing.
struct PartialIntegralTrace {
    std::vector<double> T;
    std::vector<std::complex<double>> p;
    bool complex_valued = false;
    std::optional<IntegrandSpec> spec;
    GridKind grid = GridKind::uniform_phase;
    std::vector<double> error_bound;
    bool all_converged = true;

    std::size_t size() const { return T.size(); }
};

enum class VerdictKind { Convergent, DivergentBounded, DivergentUnbounded, Inconclusive };

struct WindowStat {
    double t_lo = 0.0;
    double t_hi = 0.0;
    double oscillation = 0.0;  // peak-to-peak estimate within the window
    int samples = 0;
};

struct ConvergenceVerdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    std::optional<std::complex<double>> limit_estimate;  // present iff Convergent
    std::optional<double> oscillation_envelope;          // present iff DivergentBounded
    std::vector<WindowStat> window_report;
};

// Samples P(T) on a monotone grid. uniform_phase spaces the samples uniformly
// in the quadratic phase a T^2 (denser in T toward T_max), which keeps the
// e^{i a T^2} boundary term visible at large T; uniform_T spaces them evenly.
// Requires T_max > 0 and n >= 32.
PartialIntegralTrace build_trace(const IntegrandSpec& spec, double T_max, int n, GridKind grid,
                                 const QuadratureConfig& cfg = {});

// Same grid, samples P(T) - B(T) (weight-x specs only).
PartialIntegralTrace build_residual_trace(const IntegrandSpec& spec, double T_max, int n,
                                          GridKind grid, const QuadratureConfig& cfg = {});

// Verdict from geometric windows (T_hi/2^{k+1}, T_hi/2^k]. tol is an absolute
// noise floor, seven orders above the quadrature tolerance, so verdicts do not
// hinge on quadrature noise; the Convergent/Divergent split itself is decided
// by scale-free oscillation trends.
ConvergenceVerdict classify(const PartialIntegralTrace& trace, double tol = 1e-3, int windows = 8);

// Classifies the trace of A_T = int_{-T}^{T} x e^{i(x^2+x)} dx, which keeps a
// unit-magnitude e^{iT^2} sin T oscillation: the integral fails to exist even
// as a Cauchy principal value.
ConvergenceVerdict principal_value_probe(double T_max, int n, const QuadratureConfig& cfg = {});

const char* to_string(VerdictKind k);
const char* to_string(GridKind g);
GridKind grid_from_string(const std::string& s);

}  // namespace oscint

#endif
