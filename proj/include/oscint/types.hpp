#ifndef OSCINT_TYPES_HPP
#define OSCINT_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace oscint {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Weight { one, x };
enum class Trig { sin, cos };

// One member of the integrand family  w(x) * quad_trig(a x^2) * lin_trig(b x)
// on [0, inf). a must be positive; b = 0 is accepted for the weight-one
// families (well defined by continuity) but rejected where the closed forms
// are singular.
struct IntegrandSpec {
    Weight weight = Weight::one;
    Trig quad_trig = Trig::cos;  // applied to a*x^2
    Trig lin_trig = Trig::cos;   // applied to b*x
    double a = 1.0;
    double b = 0.0;
};

void validate(const IntegrandSpec& spec);

// Family ids as used by the CLI and the corpus. E5/E6 are the convergent
// weight-one families (cos(bx) resp. sin(bx) factor); E1/E2 are the divergent
// weight-x families that classical tables nevertheless print values for
// (sin(bx) resp. cos(bx) factor).
enum class FamilyEq { E1, E2, E5, E6 };

FamilyEq family_of(const IntegrandSpec& spec);
IntegrandSpec spec_for(FamilyEq family, Trig quad, double a, double b);

const char* to_string(Weight w);
const char* to_string(Trig t);
const char* to_string(FamilyEq f);
FamilyEq family_from_string(const std::string& s);
Trig trig_from_string(const std::string& s);

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_segments = 1'000'000;
    int acceleration_depth = 12;
};

void validate(const QuadratureConfig& cfg);

// Quadrature results carry a best estimate plus an error bound instead of
// aborting on budget exhaustion; the classifier consumes noisy traces
// deliberately.
struct RealEstimate {
    double value = 0.0;
    double error_bound = 0.0;
    bool converged = true;
};

struct ComplexEstimate {
    std::complex<double> value{0.0, 0.0};
    double error_bound = 0.0;
    bool converged = true;
};

}  // namespace oscint

#endif
