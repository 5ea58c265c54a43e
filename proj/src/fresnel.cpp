#include "oscint/fresnel.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace oscint {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesSplit = 9.0;

// Maclaurin series after t = u^2:
//   C(x) = sqrt(2/pi) sqrt(x) sum (-1)^k x^{2k}   / ((2k)!   (4k+1))
//   S(x) = sqrt(2/pi) sqrt(x) sum (-1)^k x^{2k+1} / ((2k+1)! (4k+3))
// Worst-case cancellation near the split keeps the absolute error below
// ~1e-13 in double.
FresnelPair fresnel_series(double x) {
    double c = 0.0, s = 0.0;
    double tc = 1.0;  // (-1)^k x^{2k} / (2k)!
    for (int k = 0; k < 200; ++k) {
        c += tc / (4 * k + 1);
        const double ts = tc * x / (2 * k + 1);
        s += ts / (4 * k + 3);
        const double tnext = ts * x / (2 * k + 2);
        if (k > 3 && std::abs(tnext) < 1e-18 * (std::abs(c) + std::abs(s))) break;
        tc = -tnext;
    }
    const double f = std::sqrt(2.0 / kPi) * std::sqrt(x);
    return {f * c, f * s, FresnelConvention::paper, x};
}

// For x > 9: E(w) = int_0^w e^{it^2} dt with w = sqrt(x), via
//   E(w) = (sqrt(pi)/2) e^{i pi/4} (1 - erfc(z)),  z = w e^{-i pi/4},
// and the erfc continued fraction evaluated by modified Lentz:
//   erfc(z) = e^{-z^2}/sqrt(pi) / (z + (1/2)/(z + 1/(z + (3/2)/(z + ...))))
// Here e^{-z^2} = e^{ix}, so this is the auxiliary amplitude/phase form.
// Converges in ~50 iterations at the 9.0 split and faster beyond.
FresnelPair fresnel_cf(double x) {
    using cplx = std::complex<double>;
    const double w = std::sqrt(x);
    const cplx z = w * std::exp(cplx(0.0, -kPi / 4.0));
    constexpr double tiny = 1e-300;

    cplx f = z, C = z, D = 0.0;
    for (int it = 1; it <= 400; ++it) {
        const double a = 0.5 * it;
        D = z + a * D;
        if (D == 0.0) D = tiny;
        C = z + a / C;
        if (C == 0.0) C = tiny;
        D = 1.0 / D;
        const cplx delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) {
            const cplx erfc = std::exp(cplx(0.0, x)) / std::sqrt(kPi) / f;
            const cplx E = std::sqrt(kPi) / 2.0 * std::exp(cplx(0.0, kPi / 4.0)) * (1.0 - erfc);
            const double scale = std::sqrt(2.0 / kPi);
            return {scale * E.real(), scale * E.imag(), FresnelConvention::paper, x};
        }
    }
    throw std::runtime_error("fresnel_cs: continued fraction failed to converge");
}

// paper argument x for a pair expressed in `from` convention at `arg`
double to_paper_argument(FresnelConvention from, double arg) {
    switch (from) {
        case FresnelConvention::paper: return arg;
        case FresnelConvention::classical: return kPi * arg * arg / 2.0;
        case FresnelConvention::amplitude: return arg * arg;
    }
    throw std::invalid_argument("unknown Fresnel convention tag");
}

double from_paper_argument(FresnelConvention to, double x) {
    switch (to) {
        case FresnelConvention::paper: return x;
        case FresnelConvention::classical: return std::sqrt(2.0 * x / kPi);
        case FresnelConvention::amplitude: return std::sqrt(x);
    }
    throw std::invalid_argument("unknown Fresnel convention tag");
}

// component scale factor relative to paper values
double scale_vs_paper(FresnelConvention c) {
    switch (c) {
        case FresnelConvention::paper: return 1.0;
        case FresnelConvention::classical: return 1.0;
        case FresnelConvention::amplitude: return std::sqrt(kPi / 2.0);
    }
    throw std::invalid_argument("unknown Fresnel convention tag");
}

}  // namespace

FresnelPair fresnel_cs(double x) {
    if (!std::isfinite(x) || x < 0.0)
        throw std::domain_error("fresnel_cs: argument must be finite and nonnegative");
    if (x == 0.0) return {0.0, 0.0, FresnelConvention::paper, 0.0};
    return x <= kSeriesSplit ? fresnel_series(x) : fresnel_cf(x);
}

std::complex<double> fresnel_limit() {
    const double v = std::sqrt(kPi / 2.0);
    return {v, v};
}

FresnelPair convert_normalization(const FresnelPair& p, FresnelConvention target) {
    if (!std::isfinite(p.c) || !std::isfinite(p.s) || !std::isfinite(p.argument))
        throw std::domain_error("convert_normalization: non-finite pair");
    const double x = to_paper_argument(p.convention, p.argument);
    const double ratio = scale_vs_paper(target) / scale_vs_paper(p.convention);
    return {p.c * ratio, p.s * ratio, target, from_paper_argument(target, x)};
}

const char* to_string(FresnelConvention c) {
    switch (c) {
        case FresnelConvention::paper: return "paper";
        case FresnelConvention::classical: return "classical";
        case FresnelConvention::amplitude: return "amplitude";
    }
    return "?";
}

FresnelConvention fresnel_convention_from_string(const std::string& s) {
    if (s == "paper") return FresnelConvention::paper;
    if (s == "classical") return FresnelConvention::classical;
    if (s == "amplitude") return FresnelConvention::amplitude;
    throw std::invalid_argument("unknown Fresnel convention: " + s);
}

}  // namespace oscint
