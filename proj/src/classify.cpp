#include "oscint/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "oscint/oscquad.hpp"

namespace oscint {

namespace {

using cplx = std::complex<double>;

std::vector<double> make_grid(const IntegrandSpec& spec, double T_max, int n, GridKind grid) {
    std::vector<double> T(n);
    if (grid == GridKind::uniform_phase) {
        const double phi_max = spec.a * T_max * T_max;
        for (int j = 1; j <= n; ++j) T[j - 1] = std::sqrt(phi_max * j / n / spec.a);
    } else {
        for (int j = 1; j <= n; ++j) T[j - 1] = T_max * j / n;
    }
    return T;
}

// ---- small dense linear algebra -------------------------------------------

// Solves A x = rhs in place (row-major m x m), partial pivoting.
bool solve_dense(std::vector<double>& A, std::vector<double>& rhs, int m) {
    for (int col = 0; col < m; ++col) {
        int piv = col;
        for (int r = col + 1; r < m; ++r)
            if (std::abs(A[r * m + col]) > std::abs(A[piv * m + col])) piv = r;
        if (A[piv * m + col] == 0.0) return false;
        if (piv != col) {
            for (int c = 0; c < m; ++c) std::swap(A[piv * m + c], A[col * m + c]);
            std::swap(rhs[piv], rhs[col]);
        }
        const double d = A[col * m + col];
        for (int r = col + 1; r < m; ++r) {
            const double f = A[r * m + col] / d;
            if (f == 0.0) continue;
            for (int c = col; c < m; ++c) A[r * m + c] -= f * A[col * m + c];
            rhs[r] -= f * rhs[col];
        }
    }
    for (int r = m - 1; r >= 0; --r) {
        double acc = rhs[r];
        for (int c = r + 1; c < m; ++c) acc -= A[r * m + c] * rhs[c];
        rhs[r] = acc / A[r * m + r];
    }
    return true;
}

// Ridge-regularized least squares on rms-normalized columns.
// cols: m vectors of length n. Returns coefficients, or empty on failure.
std::vector<double> ridge_ls(const std::vector<std::vector<double>>& cols,
                             const std::vector<double>& y, double ridge) {
    const int m = static_cast<int>(cols.size());
    const std::size_t n = y.size();
    std::vector<double> scale(m, 1.0);
    for (int j = 0; j < m; ++j) {
        double s2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) s2 += cols[j][i] * cols[j][i];
        scale[j] = std::sqrt(s2 / n);
        if (scale[j] == 0.0) scale[j] = 1.0;
    }
    std::vector<double> G(m * m, 0.0), rhs(m, 0.0);
    for (int j = 0; j < m; ++j) {
        for (int k = j; k < m; ++k) {
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i) acc += cols[j][i] * cols[k][i];
            acc /= scale[j] * scale[k];
            G[j * m + k] = acc;
            G[k * m + j] = acc;
        }
        G[j * m + j] += ridge * n;
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += cols[j][i] * y[i];
        rhs[j] = acc / scale[j];
    }
    if (!solve_dense(G, rhs, m)) return {};
    for (int j = 0; j < m; ++j) rhs[j] /= scale[j];
    return rhs;
}

// ---- oscillation model ------------------------------------------------------

// Deviations of the traced partials follow  sum_s trig(psi_s) * amplitude,
// psi_s = a T^2 + s b T, with amplitude constant (boundary terms of weight-x
// integrands) or decaying like 1/(2aT + s b) and higher odd powers
// (tails of the convergent families). Fitting both shapes on the densely
// sampled span gives an unaliased estimate of the windowed oscillation that
// sampled ranges cannot provide near the Nyquist spacing of phase grids.
struct OscModel {
    double a = 0.0, b = 0.0;
    bool two_signs = false;
    std::vector<double> coef;  // [L, then per sign: cos, sin, cos/d, sin/d, cos/d3, sin/d3]
    bool ok = false;
};

OscModel fit_osc_model(const std::vector<double>& T, const std::vector<double>& p, double a,
                       double b) {
    OscModel model;
    model.a = a;
    model.b = b;
    model.two_signs = b > 1e-12;
    const std::size_t n = T.size();
    std::vector<std::vector<double>> cols;
    cols.emplace_back(n, 1.0);
    const double signs[2] = {1.0, -1.0};
    const int ns = model.two_signs ? 2 : 1;
    for (int si = 0; si < ns; ++si) {
        const double s = signs[si];
        std::vector<double> c0(n), s0(n), c1(n), s1(n), c3(n), s3(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double ph = a * T[i] * T[i] + s * b * T[i];
            const double d = 2.0 * a * T[i] + s * b;
            const double cv = std::cos(ph), sv = std::sin(ph);
            c0[i] = cv;
            s0[i] = sv;
            c1[i] = cv / d;
            s1[i] = sv / d;
            c3[i] = cv / (d * d * d);
            s3[i] = sv / (d * d * d);
        }
        cols.push_back(std::move(c0));
        cols.push_back(std::move(s0));
        cols.push_back(std::move(c1));
        cols.push_back(std::move(s1));
        cols.push_back(std::move(c3));
        cols.push_back(std::move(s3));
    }
    model.coef = ridge_ls(cols, p, 1e-9);
    model.ok = !model.coef.empty();
    return model;
}

double eval_osc_part(const OscModel& m, double t) {
    double acc = 0.0;
    const double signs[2] = {1.0, -1.0};
    const int ns = m.two_signs ? 2 : 1;
    int i = 1;
    for (int si = 0; si < ns; ++si) {
        const double s = signs[si];
        const double ph = m.a * t * t + s * m.b * t;
        const double d = 2.0 * m.a * t + s * m.b;
        const double cv = std::cos(ph), sv = std::sin(ph);
        acc += m.coef[i] * cv + m.coef[i + 1] * sv;
        acc += (m.coef[i + 2] * cv + m.coef[i + 3] * sv) / d;
        acc += (m.coef[i + 4] * cv + m.coef[i + 5] * sv) / (d * d * d);
        i += 6;
    }
    return acc;
}

double eval_full(const OscModel& m, double t) { return m.coef[0] + eval_osc_part(m, t); }

double model_window_osc(const OscModel& m, double lo, double hi) {
    constexpr int kDense = 512;
    double mn = std::numeric_limits<double>::infinity();
    double mx = -mn;
    for (int i = 0; i <= kDense; ++i) {
        const double v = eval_osc_part(m, lo + (hi - lo) * i / kDense);
        mn = std::min(mn, v);
        mx = std::max(mx, v);
    }
    return mx - mn;
}

// ---- windows ----------------------------------------------------------------

struct BasicWindow {
    double lo = 0.0, hi = 0.0;
    int count = 0;
    double range_osc = 0.0;
};

std::vector<BasicWindow> sampled_windows(const std::vector<double>& T,
                                         const std::vector<double>& p, int windows,
                                         int min_count) {
    const double t_hi = T.back();
    std::vector<BasicWindow> out;
    for (int k = windows - 1; k >= 0; --k) {
        BasicWindow w;
        w.lo = t_hi / std::pow(2.0, k + 1);
        w.hi = t_hi / std::pow(2.0, k);
        double mn = std::numeric_limits<double>::infinity(), mx = -mn;
        for (std::size_t i = 0; i < T.size(); ++i) {
            if (T[i] > w.lo && T[i] <= w.hi) {
                ++w.count;
                mn = std::min(mn, p[i]);
                mx = std::max(mx, p[i]);
            }
        }
        if (w.count >= min_count) {
            w.range_osc = mx - mn;
            out.push_back(w);
        }
    }
    return out;
}

// ---- limit estimate -----------------------------------------------------------

// Least-squares limit over the last window using the decaying-oscillation
// basis; the constant term is the limit.
bool ls_limit(const std::vector<double>& T, const std::vector<double>& p, double a, double b,
              double t_hi, double* out) {
    std::vector<double> Tw, pw;
    for (std::size_t i = 0; i < T.size(); ++i) {
        if (T[i] > 0.5 * t_hi) {
            Tw.push_back(T[i]);
            pw.push_back(p[i]);
        }
    }
    if (Tw.size() < 24) return false;
    const std::size_t n = Tw.size();
    std::vector<std::vector<double>> cols;
    cols.emplace_back(n, 1.0);
    const double signs[2] = {1.0, -1.0};
    const int ns = b > 1e-12 ? 2 : 1;
    for (int si = 0; si < ns; ++si) {
        const double s = signs[si];
        std::vector<double> c1(n), s1(n), c3(n), s3(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double ph = a * Tw[i] * Tw[i] + s * b * Tw[i];
            const double d = 2.0 * a * Tw[i] + s * b;
            c1[i] = std::cos(ph) / d;
            s1[i] = std::sin(ph) / d;
            c3[i] = c1[i] / (d * d);
            s3[i] = s1[i] / (d * d);
        }
        cols.push_back(std::move(c1));
        cols.push_back(std::move(s1));
        cols.push_back(std::move(c3));
        cols.push_back(std::move(s3));
    }
    const std::vector<double> coef = ridge_ls(cols, pw, 1e-12);
    if (coef.empty()) return false;
    *out = coef[0];
    return true;
}

double fallback_limit(const std::vector<double>& T, const std::vector<double>& p, double t_hi,
                      bool flat) {
    if (flat) {
        const std::size_t n = std::max<std::size_t>(8, p.size() / 16);
        double acc = 0.0;
        for (std::size_t i = p.size() - n; i < p.size(); ++i) acc += p[i];
        return acc / n;
    }
    double acc = 0.0;
    std::size_t cnt = 0;
    for (std::size_t i = 0; i < T.size(); ++i) {
        if (T[i] > 0.5 * t_hi) {
            acc += p[i];
            ++cnt;
        }
    }
    return cnt ? acc / cnt : p.back();
}

struct ComponentVerdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    double limit = 0.0;
    double envelope = 0.0;
    std::vector<WindowStat> windows;
};

ComponentVerdict classify_component(const std::vector<double>& T, const std::vector<double>& p,
                                    const std::optional<IntegrandSpec>& spec, double tol,
                                    int windows) {
    ComponentVerdict out;
    const double t_hi = T.back();

    // model path when the generating phases are known and the span is dense
    OscModel model;
    bool use_model = false;
    if (spec) {
        std::vector<double> Tm, pm;
        for (std::size_t i = 0; i < T.size(); ++i) {
            if (T[i] > t_hi / 8.0) {
                Tm.push_back(T[i]);
                pm.push_back(p[i]);
            }
        }
        if (Tm.size() >= 40) {
            model = fit_osc_model(Tm, pm, spec->a, spec->b);
            if (model.ok) {
                double rss = 0.0, mean = 0.0;
                for (double v : pm) mean += v;
                mean /= Tm.size();
                double css = 0.0;
                for (std::size_t i = 0; i < Tm.size(); ++i) {
                    const double r = pm[i] - eval_full(model, Tm[i]);
                    rss += r * r;
                    css += (pm[i] - mean) * (pm[i] - mean);
                }
                use_model = rss <= 0.09 * std::max(css, 1e-300);  // rms ratio 0.3
            }
        }
    }

    std::vector<double> osc;
    if (use_model) {
        for (int k = windows - 1; k >= 0; --k) {
            WindowStat w;
            w.t_lo = t_hi / std::pow(2.0, k + 1);
            w.t_hi = t_hi / std::pow(2.0, k);
            if (w.t_lo < t_hi / 8.0 - 1e-12) continue;
            for (std::size_t i = 0; i < T.size(); ++i)
                if (T[i] > w.t_lo && T[i] <= w.t_hi) ++w.samples;
            if (w.samples < 1) continue;
            w.oscillation = model_window_osc(model, w.t_lo, w.t_hi);
            out.windows.push_back(w);
            osc.push_back(w.oscillation);
        }
    } else {
        for (const auto& bw : sampled_windows(T, p, windows, 16)) {
            out.windows.push_back({bw.lo, bw.hi, bw.range_osc, bw.count});
            osc.push_back(bw.range_osc);
        }
    }
    if (osc.size() < 3) {
        out.kind = VerdictKind::Inconclusive;
        return out;
    }

    const std::size_t q = osc.size();
    const double o0 = osc[q - 3], o1 = osc[q - 2], o2 = osc[q - 1];
    std::vector<double> sorted = osc;
    std::sort(sorted.begin(), sorted.end());
    const double median = sorted[sorted.size() / 2];

    // sampled ranges see unbounded growth regardless of aliasing
    bool growth = false;
    {
        const auto rw = sampled_windows(T, p, windows, 24);
        if (rw.size() >= 3) {
            const double g0 = rw[rw.size() - 3].range_osc;
            const double g1 = rw[rw.size() - 2].range_osc;
            const double g2 = rw[rw.size() - 1].range_osc;
            growth = g2 >= 2.0 * g0 && g1 >= 1.2 * g0 && g2 >= 1.2 * g1 && g2 > tol;
        }
    }

    bool flat = false;
    if (std::max({o0, o1, o2}) <= tol) {
        out.kind = VerdictKind::Convergent;
        flat = true;
    } else if (growth) {
        out.kind = VerdictKind::DivergentUnbounded;
    } else {
        const double r1 = o1 / std::max(o0, tol);
        const double r2 = o2 / std::max(o1, tol);
        const double total = o2 / std::max(o0, tol);
        if (r1 <= 0.95 && r2 <= 0.95 && total <= 0.5) {
            out.kind = VerdictKind::Convergent;
        } else if (o0 >= tol && o1 >= tol && o2 >= tol &&
                   std::max({o0, o1, o2}) <= 10.0 * std::max(median, tol)) {
            out.kind = VerdictKind::DivergentBounded;
        } else {
            out.kind = VerdictKind::Inconclusive;
        }
    }

    if (out.kind == VerdictKind::Convergent) {
        bool have = false;
        if (spec) have = ls_limit(T, p, spec->a, spec->b, t_hi, &out.limit);
        if (!have) out.limit = fallback_limit(T, p, t_hi, flat);
    } else if (out.kind != VerdictKind::Inconclusive) {
        out.envelope = 0.5 * osc.back();
    }
    return out;
}

int severity(VerdictKind k) {
    switch (k) {
        case VerdictKind::Convergent: return 0;
        case VerdictKind::Inconclusive: return 1;
        case VerdictKind::DivergentBounded: return 2;
        case VerdictKind::DivergentUnbounded: return 3;
    }
    return 1;
}

}  // namespace

PartialIntegralTrace build_trace(const IntegrandSpec& spec, double T_max, int n, GridKind grid,
                                 const QuadratureConfig& cfg) {
    validate(spec);
    if (!(T_max > 0.0) || !std::isfinite(T_max))
        throw std::invalid_argument("build_trace: need T_max > 0");
    if (n < 32) throw std::invalid_argument("build_trace: need n >= 32");

    PartialIntegralTrace trace;
    trace.T = make_grid(spec, T_max, n, grid);
    trace.spec = spec;
    trace.grid = grid;
    const auto prefix = partial_integral_prefix(spec, trace.T, cfg);
    trace.p.resize(n);
    trace.error_bound.resize(n);
    for (int i = 0; i < n; ++i) {
        trace.p[i] = {prefix[i].value, 0.0};
        trace.error_bound[i] = prefix[i].error_bound;
        trace.all_converged = trace.all_converged && prefix[i].converged;
    }
    return trace;
}

PartialIntegralTrace build_residual_trace(const IntegrandSpec& spec, double T_max, int n,
                                          GridKind grid, const QuadratureConfig& cfg) {
    if (spec.weight != Weight::x)
        throw std::invalid_argument("build_residual_trace: weight-x specs only");
    PartialIntegralTrace trace = build_trace(spec, T_max, n, grid, cfg);
    for (int i = 0; i < static_cast<int>(trace.size()); ++i)
        trace.p[i] -= boundary_term(spec, trace.T[i]);
    return trace;
}

ConvergenceVerdict classify(const PartialIntegralTrace& trace, double tol, int windows) {
    if (trace.size() < 32)
        throw std::invalid_argument("classify: trace needs at least 32 samples");
    if (trace.p.size() != trace.T.size())
        throw std::invalid_argument("classify: malformed trace");
    for (std::size_t i = 1; i < trace.T.size(); ++i)
        if (!(trace.T[i] > trace.T[i - 1]))
            throw std::invalid_argument("classify: T must be strictly increasing");
    if (!(tol > 0.0) || windows < 3) throw std::invalid_argument("classify: bad tol/windows");

    const std::size_t n = trace.size();
    std::vector<double> re(n), im(n);
    for (std::size_t i = 0; i < n; ++i) {
        re[i] = trace.p[i].real();
        im[i] = trace.p[i].imag();
    }

    const ComponentVerdict vre = classify_component(trace.T, re, trace.spec, tol, windows);
    ConvergenceVerdict out;
    if (!trace.complex_valued) {
        out.kind = vre.kind;
        out.window_report = vre.windows;
        if (vre.kind == VerdictKind::Convergent) out.limit_estimate = cplx(vre.limit, 0.0);
        if (vre.kind == VerdictKind::DivergentBounded ||
            vre.kind == VerdictKind::DivergentUnbounded)
            out.oscillation_envelope = vre.envelope;
        return out;
    }

    const ComponentVerdict vim = classify_component(trace.T, im, trace.spec, tol, windows);
    const ComponentVerdict& worst = severity(vre.kind) >= severity(vim.kind) ? vre : vim;
    out.kind = worst.kind;
    out.window_report = vre.windows;
    for (std::size_t i = 0; i < out.window_report.size() && i < vim.windows.size(); ++i)
        out.window_report[i].oscillation =
            std::max(out.window_report[i].oscillation, vim.windows[i].oscillation);
    if (out.kind == VerdictKind::Convergent) out.limit_estimate = cplx(vre.limit, vim.limit);
    if (out.kind == VerdictKind::DivergentBounded || out.kind == VerdictKind::DivergentUnbounded)
        out.oscillation_envelope = std::max(vre.envelope, vim.envelope);
    return out;
}

ConvergenceVerdict principal_value_probe(double T_max, int n, const QuadratureConfig& cfg) {
    if (!(T_max > 0.0) || !std::isfinite(T_max))
        throw std::invalid_argument("principal_value_probe: need T_max > 0");
    if (n < 32) throw std::invalid_argument("principal_value_probe: need n >= 32");

    PartialIntegralTrace trace;
    trace.complex_valued = true;
    trace.grid = GridKind::uniform_phase;
    // A_T's oscillating term e^{iT^2} sin T has the phases T^2 +- T.
    IntegrandSpec probe_spec;
    probe_spec.weight = Weight::x;
    probe_spec.quad_trig = Trig::sin;
    probe_spec.lin_trig = Trig::sin;
    probe_spec.a = 1.0;
    probe_spec.b = 1.0;
    trace.spec = probe_spec;

    trace.T.resize(n);
    for (int j = 1; j <= n; ++j) trace.T[j - 1] = T_max * std::sqrt(static_cast<double>(j) / n);
    trace.p.resize(n);
    trace.error_bound.resize(n);

    // K(-T+1/2, T+1/2) grows by two edge strips per sample
    cplx kernel_acc{0.0, 0.0};
    double err_acc = 0.0;
    double prev_lo = 0.5, prev_hi = 0.5;
    for (int i = 0; i < n; ++i) {
        const double lo = -trace.T[i] + 0.5;
        const double hi = trace.T[i] + 0.5;
        const ComplexEstimate left = integrate_gauss_kernel(lo, prev_lo, cfg);
        const ComplexEstimate right = integrate_gauss_kernel(prev_hi, hi, cfg);
        kernel_acc += left.value + right.value;
        err_acc += left.error_bound + right.error_bound;
        trace.all_converged = trace.all_converged && left.converged && right.converged;
        const double t = trace.T[i];
        trace.p[i] = cplx(std::cos(t * t), std::sin(t * t)) * std::sin(t) -
                     0.5 * cplx(std::cos(-0.25), std::sin(-0.25)) * kernel_acc;
        trace.error_bound[i] = err_acc;
        prev_lo = lo;
        prev_hi = hi;
    }
    return classify(trace);
}

const char* to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Convergent: return "Convergent";
        case VerdictKind::DivergentBounded: return "DivergentBounded";
        case VerdictKind::DivergentUnbounded: return "DivergentUnbounded";
        case VerdictKind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

const char* to_string(GridKind g) { return g == GridKind::uniform_T ? "uniform" : "phase"; }

GridKind grid_from_string(const std::string& s) {
    if (s == "uniform" || s == "uniform_T") return GridKind::uniform_T;
    if (s == "phase" || s == "uniform_phase") return GridKind::uniform_phase;
    throw std::invalid_argument("unknown grid kind: " + s);
}

}  // namespace oscint
