#ifndef OSCINT_FRESNEL_HPP
#define OSCINT_FRESNEL_HPP

#include <complex>

namespace oscint {

// Three common normalizations of the Fresnel integrals:
//
//   paper      C(x) = (2 pi)^{-1/2} int_0^x cos t dt/sqrt(t),   limit 1/2
//   classical  Ct(u) = int_0^u cos(pi t^2 / 2) dt,              limit 1/2
//   amplitude  Ca(w) = int_0^w cos(t^2) dt,                     limit sqrt(pi/8)
//
// and the sine counterparts. They are related by
//
//   C(x) = Ct(sqrt(2x/pi)) = sqrt(2/pi) * Ca(sqrt(x)),
//
// so converting between conventions rescales the component values
// (paper<->amplitude) and always remaps the argument. Converted pairs carry
// the transformed argument so call sites cannot silently mix parameterizations.
enum class FresnelConvention { paper, classical, amplitude };

struct FresnelPair {
    double c = 0.0;
    double s = 0.0;
    FresnelConvention convention = FresnelConvention::paper;
    double argument = 0.0;  // evaluation point in this convention's parameterization
};

// C(x), S(x) in the paper convention, |error| <= 1e-12 * max(1, |value|).
// Maclaurin series of the substituted integrand for x <= 9, complex
// erfc continued fraction (amplitude/phase form) above.
// Throws std::domain_error for negative or non-finite x.
FresnelPair fresnel_cs(double x);

// e^{i pi/4} sqrt(pi) = sqrt(2 pi) (C(inf) + i S(inf)); both components
// equal sqrt(pi/2).
std::complex<double> fresnel_limit();

FresnelPair convert_normalization(const FresnelPair& p, FresnelConvention target);

const char* to_string(FresnelConvention c);
FresnelConvention fresnel_convention_from_string(const std::string& s);

}  // namespace oscint

#endif
