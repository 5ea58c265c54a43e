#include "oscint/oscquad.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "oscint/parallel.hpp"

namespace oscint {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;

// Gauss-Legendre order 15 on [-1, 1]; exact through polynomial degree 29.
constexpr int kGaussN = 15;
constexpr double kGaussX[kGaussN] = {
    -0.98799251802048542849,  -0.937273392400705904308, -0.848206583410427216201,
    -0.724417731360170047416, -0.570972172608538847537, -0.394151347077563369897,
    -0.201194093997434522301, 0.0,                      0.201194093997434522301,
    0.394151347077563369897,  0.570972172608538847537,  0.724417731360170047416,
    0.848206583410427216201,  0.937273392400705904308,  0.98799251802048542849};
constexpr double kGaussW[kGaussN] = {
    0.0307532419961172683546, 0.0703660474881081247093, 0.107159220467171935012,
    0.139570677926154314448,  0.166269205816993933553,  0.186161000015562211027,
    0.198431485327111576456,  0.202578241925561272881,  0.198431485327111576456,
    0.186161000015562211027,  0.166269205816993933553,  0.139570677926154314448,
    0.107159220467171935012,  0.0703660474881081247093, 0.0307532419961172683546};

cplx gauss15_kernel(double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double re = 0.0, im = 0.0;
    for (int i = 0; i < kGaussN; ++i) {
        const double u = mid + half * kGaussX[i];
        const double phase = u * u;
        re += kGaussW[i] * std::cos(phase);
        im += kGaussW[i] * std::sin(phase);
    }
    return {half * re, half * im};
}

// Segment boundaries for int e^{iu^2}: the phase nodes +-sqrt(k pi) inside
// (lo, hi), the endpoints, and a width cap so the slow-phase region near 0
// stays well resolved.
std::vector<double> kernel_boundaries(double lo, double hi) {
    constexpr double kWidthCap = 1.5;
    std::vector<double> pts;
    pts.push_back(lo);
    if (hi > 0.0) {
        const double start = std::max(lo, 0.0);
        long k = static_cast<long>(std::floor(start * start / kPi)) + 1;
        for (double u = std::sqrt(static_cast<double>(k) * kPi); u < hi;
             u = std::sqrt(static_cast<double>(++k) * kPi)) {
            if (u > lo) pts.push_back(u);
        }
    }
    if (lo < 0.0) {
        const double start = std::max(-hi, 0.0);
        long k = static_cast<long>(std::floor(start * start / kPi)) + 1;
        for (double u = std::sqrt(static_cast<double>(k) * kPi); -u > lo;
             u = std::sqrt(static_cast<double>(++k) * kPi)) {
            if (-u < hi) pts.push_back(-u);
        }
    }
    pts.push_back(hi);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<double> out;
    out.reserve(pts.size());
    out.push_back(pts.front());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double a = pts[i], b = pts[i + 1];
        const double w = b - a;
        if (w > kWidthCap) {
            const int m = static_cast<int>(std::ceil(w / kWidthCap));
            for (int j = 1; j < m; ++j) out.push_back(a + w * j / m);
        }
        out.push_back(b);
    }
    return out;
}

struct KernelResult {
    cplx value{0.0, 0.0};
    double error = 0.0;
    long segments = 0;
    bool converged = true;
};

// int_lo^hi e^{iu^2} du. Per segment: one Gauss pass plus a bisected pass;
// the bisected value is kept and the difference feeds the error estimate.
// Segment evaluations are independent; the reduction runs in fixed segment
// order so results are identical for any thread count.
KernelResult kernel_integral(double lo, double hi, const QuadratureConfig& cfg) {
    KernelResult r;
    if (lo == hi) return r;
    const auto bounds = kernel_boundaries(lo, hi);
    const std::size_t nseg = bounds.size() - 1;
    if (static_cast<long>(nseg) * 3 > cfg.max_segments) {
        // budget cannot cover the interval: coarse single-pass estimate
        r.converged = false;
        std::size_t step = std::max<std::size_t>(1, nseg / std::max(1, cfg.max_segments / 3));
        for (std::size_t i = 0; i < nseg; i += step) {
            const double a = bounds[i];
            const double b = bounds[std::min(i + step, nseg)];
            r.value += gauss15_kernel(a, b);
            r.segments += 1;
        }
        r.error = std::abs(r.value);  // no trustworthy estimate
        return r;
    }

    std::vector<cplx> vals(nseg);
    std::vector<double> errs(nseg);
    auto eval_segment = [&](std::size_t i) {
        const double a = bounds[i], b = bounds[i + 1];
        const cplx whole = gauss15_kernel(a, b);
        const double m = 0.5 * (a + b);
        const cplx halves = gauss15_kernel(a, m) + gauss15_kernel(m, b);
        vals[i] = halves;
        errs[i] = std::abs(whole - halves) / 15.0;
    };
    if (nseg >= 256) {
        parallel_for(nseg, eval_segment);
    } else {
        for (std::size_t i = 0; i < nseg; ++i) eval_segment(i);
    }
    for (std::size_t i = 0; i < nseg; ++i) {
        r.value += vals[i];
        r.error += errs[i];
    }
    r.segments = static_cast<long>(3 * nseg);
    r.converged = r.error <= cfg.abs_tol + cfg.rel_tol * std::abs(r.value);
    return r;
}

cplx cis(double phase) { return {std::cos(phase), std::sin(phase)}; }

struct PartialCoeffs {
    // P = re_w * Re(G+) + im_w * Im(G+) + re_m * Re(G-) + im_m * Im(G-)
    double re_p = 0.0, im_p = 0.0, re_m = 0.0, im_m = 0.0;
};

// Product-to-sum split of quad_trig(a x^2) * lin_trig(b x) in terms of
// G+- = int w(x) e^{i(a x^2 +- b x)} dx.
PartialCoeffs partial_coeffs(const IntegrandSpec& spec) {
    PartialCoeffs c;
    if (spec.quad_trig == Trig::cos && spec.lin_trig == Trig::cos) {
        c.re_p = 0.5;
        c.re_m = 0.5;
    } else if (spec.quad_trig == Trig::sin && spec.lin_trig == Trig::cos) {
        c.im_p = 0.5;
        c.im_m = 0.5;
    } else if (spec.quad_trig == Trig::cos && spec.lin_trig == Trig::sin) {
        c.im_p = 0.5;
        c.im_m = -0.5;
    } else {  // sin, sin
        c.re_p = -0.5;
        c.re_m = 0.5;
    }
    return c;
}

RealEstimate combine_partials(const PartialCoeffs& c, const ComplexEstimate& gp,
                              const ComplexEstimate& gm) {
    RealEstimate r;
    r.value = c.re_p * gp.value.real() + c.im_p * gp.value.imag() + c.re_m * gm.value.real() +
              c.im_m * gm.value.imag();
    r.error_bound = 0.5 * (gp.error_bound + gm.error_bound);
    r.converged = gp.converged && gm.converged;
    return r;
}

// Tail int_alpha^inf e^{iu^2} du by phase-segmented summation: partial sums at
// the nodes u_k = sqrt(k pi) alternate around the limit with smoothly decaying
// amplitude, so iterated averaging turns them into a rapidly convergent
// sequence. Segmentation starts past the stationary point u = 0.
ComplexEstimate kernel_tail(double alpha, const QuadratureConfig& cfg) {
    ComplexEstimate out;
    const double start = std::max(std::abs(alpha), 0.0) + 2.0;
    long k = static_cast<long>(std::ceil(start * start / kPi));
    const KernelResult head = kernel_integral(alpha, std::sqrt(static_cast<double>(k) * kPi), cfg);
    out.error_bound = head.error;
    out.converged = head.converged;

    constexpr int kMaxNodes = 120;
    std::vector<cplx> sums;
    sums.reserve(kMaxNodes);
    cplx cur = head.value;
    cplx best{0.0, 0.0};
    double best_err = std::numeric_limits<double>::infinity();
    while (static_cast<int>(sums.size()) < kMaxNodes) {
        for (int j = 0; j < 12; ++j) {
            const double a = std::sqrt(static_cast<double>(k) * kPi);
            const double b = std::sqrt(static_cast<double>(k + 1) * kPi);
            const KernelResult seg = kernel_integral(a, b, cfg);
            out.error_bound += seg.error;
            cur += seg.value;
            sums.push_back(cur);
            ++k;
        }
        // iterated averaging, depth limited by available sums
        std::vector<cplx> col = sums;
        cplx prev_last{0.0, 0.0};
        const int depth = std::min<int>(cfg.acceleration_depth, static_cast<int>(col.size()) - 1);
        for (int d = 0; d < depth; ++d) {
            prev_last = col.back();
            for (std::size_t i = 0; i + 1 < col.size(); ++i) col[i] = 0.5 * (col[i] + col[i + 1]);
            col.pop_back();
        }
        const cplx est = col.back();
        double acc_err = std::abs(est - prev_last);
        if (col.size() >= 2) acc_err += std::abs(est - col[col.size() - 2]);
        if (acc_err < best_err) {
            best = est;
            best_err = acc_err;
        }
        if (acc_err <= cfg.abs_tol + cfg.rel_tol * std::abs(est)) {
            out.value = est;
            out.error_bound += acc_err;
            return out;
        }
    }
    out.value = best;
    out.error_bound += best_err;
    out.converged = false;  // non-shrinking accelerated differences
    return out;
}

// int_0^inf w=1, e^{i(a x^2 + s b x)} dx = mu / sqrt(a) * tail(alpha_s)
ComplexEstimate improper_exponential(double a, double b_signed, const QuadratureConfig& cfg) {
    const double sa = std::sqrt(a);
    const double c = b_signed / (2.0 * a);
    const cplx mu = cis(-b_signed * b_signed / (4.0 * a));
    ComplexEstimate tail = kernel_tail(sa * c, cfg);
    tail.value *= mu / sa;
    tail.error_bound /= sa;
    return tail;
}

}  // namespace

ComplexEstimate integrate_gauss_kernel(double c, double d, const QuadratureConfig& cfg) {
    validate(cfg);
    if (!std::isfinite(c) || !std::isfinite(d) || c > d)
        throw std::domain_error("integrate_gauss_kernel: need finite c <= d");
    const KernelResult r = kernel_integral(c, d, cfg);
    return {r.value, r.error, r.converged};
}

ComplexEstimate complex_partial(Weight weight, double a, double b, double lo, double hi,
                                const QuadratureConfig& cfg) {
    validate(cfg);
    if (!(a > 0.0) || !std::isfinite(a) || !std::isfinite(b))
        throw std::domain_error("complex_partial: need a > 0, finite b");
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi)
        throw std::domain_error("complex_partial: need finite lo <= hi");

    // complete the square: a x^2 + b x = u^2 - b^2/(4a), u = sqrt(a)(x + b/(2a))
    const double sa = std::sqrt(a);
    const double c = b / (2.0 * a);
    const double alpha = sa * (lo + c);
    const double beta = sa * (hi + c);
    const cplx mu = cis(-b * b / (4.0 * a));
    const KernelResult k = kernel_integral(alpha, beta, cfg);

    ComplexEstimate out;
    out.converged = k.converged;
    if (weight == Weight::one) {
        out.value = mu / sa * k.value;
        out.error_bound = k.error / sa;
        return out;
    }
    // int u e^{iu^2} du integrates exactly; only the kernel term carries error
    const cplx J = (cis(beta * beta) - cis(alpha * alpha)) / cplx(0.0, 2.0);
    out.value = mu * (J / a - b / (2.0 * a * sa) * k.value);
    out.error_bound = std::abs(b) / (2.0 * a * sa) * k.error;
    return out;
}

RealEstimate partial_integral_range(const IntegrandSpec& spec, double lo, double hi,
                                    const QuadratureConfig& cfg) {
    validate(spec);
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi)
        throw std::domain_error("partial_integral_range: need finite lo <= hi");
    if (lo == hi) return {0.0, 0.0, true};
    const PartialCoeffs c = partial_coeffs(spec);
    const ComplexEstimate gp = complex_partial(spec.weight, spec.a, spec.b, lo, hi, cfg);
    const ComplexEstimate gm =
        spec.b == 0.0 ? gp : complex_partial(spec.weight, spec.a, -spec.b, lo, hi, cfg);
    return combine_partials(c, gp, gm);
}

RealEstimate partial_integral(const IntegrandSpec& spec, double T, const QuadratureConfig& cfg) {
    if (!std::isfinite(T) || T < 0.0)
        throw std::domain_error("partial_integral: need T >= 0");
    return partial_integral_range(spec, 0.0, T, cfg);
}

std::vector<RealEstimate> partial_integral_prefix(const IntegrandSpec& spec,
                                                  const std::vector<double>& Ts,
                                                  const QuadratureConfig& cfg) {
    validate(spec);
    for (std::size_t i = 0; i < Ts.size(); ++i) {
        if (!std::isfinite(Ts[i]) || Ts[i] < 0.0 || (i > 0 && Ts[i] <= Ts[i - 1]))
            throw std::domain_error("partial_integral_prefix: need strictly increasing T >= 0");
    }
    const std::size_t n = Ts.size();
    std::vector<RealEstimate> pieces(n);
    const PartialCoeffs c = partial_coeffs(spec);
    parallel_for(n, [&](std::size_t i) {
        const double lo = i == 0 ? 0.0 : Ts[i - 1];
        const ComplexEstimate gp = complex_partial(spec.weight, spec.a, spec.b, lo, Ts[i], cfg);
        const ComplexEstimate gm =
            spec.b == 0.0 ? gp : complex_partial(spec.weight, spec.a, -spec.b, lo, Ts[i], cfg);
        pieces[i] = combine_partials(c, gp, gm);
    });
    // sequential prefix in index order keeps results bit-stable across thread counts
    std::vector<RealEstimate> out(n);
    double acc = 0.0, err = 0.0;
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        acc += pieces[i].value;
        err += pieces[i].error_bound;
        ok = ok && pieces[i].converged;
        out[i] = {acc, err, ok};
    }
    return out;
}

ComplexEstimate ibp_identity_rhs(double T1, double T2, const QuadratureConfig& cfg) {
    if (!(T1 > 0.0) || !(T2 > 0.0) || !std::isfinite(T1) || !std::isfinite(T2))
        throw std::domain_error("ibp_identity_rhs: need T1, T2 > 0");
    const cplx bracket = (cis(T2 * T2 + T2) - cis(T1 * T1 - T1)) / cplx(0.0, 2.0);
    ComplexEstimate k = integrate_gauss_kernel(-T1 + 0.5, T2 + 0.5, cfg);
    k.value = bracket - 0.5 * cis(-0.25) * k.value;
    k.error_bound *= 0.5;
    return k;
}

ComplexEstimate symmetric_partial_convergent_term(double T, const QuadratureConfig& cfg) {
    if (!(T > 0.0) || !std::isfinite(T))
        throw std::domain_error("symmetric_partial: need T > 0");
    ComplexEstimate k = integrate_gauss_kernel(-T + 0.5, T + 0.5, cfg);
    k.value *= 0.5 * cis(-0.25);
    k.error_bound *= 0.5;
    return k;
}

ComplexEstimate symmetric_partial(double T, const QuadratureConfig& cfg) {
    ComplexEstimate term = symmetric_partial_convergent_term(T, cfg);
    term.value = cis(T * T) * std::sin(T) - term.value;
    return term;
}

double boundary_term(const IntegrandSpec& spec, double T) {
    validate(spec);
    if (spec.weight != Weight::x)
        throw std::invalid_argument("boundary_term: defined for weight-x specs only");
    if (!std::isfinite(T)) throw std::domain_error("boundary_term: need finite T");
    const double lt = spec.lin_trig == Trig::sin ? std::sin(spec.b * T) : std::cos(spec.b * T);
    const double qt = spec.quad_trig == Trig::cos ? std::sin(spec.a * T * T)
                                                  : -std::cos(spec.a * T * T);
    return qt * lt / (2.0 * spec.a);
}

RealEstimate improper_value(const IntegrandSpec& spec, const QuadratureConfig& cfg) {
    validate(spec);
    validate(cfg);
    if (spec.weight != Weight::one)
        throw std::invalid_argument("improper_value: defined for weight-one specs only");
    const PartialCoeffs c = partial_coeffs(spec);
    const ComplexEstimate gp = improper_exponential(spec.a, spec.b, cfg);
    const ComplexEstimate gm = spec.b == 0.0 ? gp : improper_exponential(spec.a, -spec.b, cfg);
    return combine_partials(c, gp, gm);
}

}  // namespace oscint
