#include "oscint/types.hpp"

#include <cmath>

namespace oscint {

void validate(const IntegrandSpec& spec) {
    if (!std::isfinite(spec.a) || spec.a <= 0.0)
        throw std::domain_error("IntegrandSpec: a must be positive and finite");
    if (!std::isfinite(spec.b) || spec.b < 0.0)
        throw std::domain_error("IntegrandSpec: b must be nonnegative and finite");
}

void validate(const QuadratureConfig& cfg) {
    if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0))
        throw std::domain_error("QuadratureConfig: tolerances must be positive");
    if (cfg.max_segments < 1 || cfg.acceleration_depth < 1)
        throw std::domain_error("QuadratureConfig: depths must be >= 1");
}

FamilyEq family_of(const IntegrandSpec& spec) {
    if (spec.weight == Weight::one)
        return spec.lin_trig == Trig::cos ? FamilyEq::E5 : FamilyEq::E6;
    return spec.lin_trig == Trig::sin ? FamilyEq::E1 : FamilyEq::E2;
}

IntegrandSpec spec_for(FamilyEq family, Trig quad, double a, double b) {
    IntegrandSpec s;
    s.quad_trig = quad;
    s.a = a;
    s.b = b;
    switch (family) {
        case FamilyEq::E1: s.weight = Weight::x;   s.lin_trig = Trig::sin; break;
        case FamilyEq::E2: s.weight = Weight::x;   s.lin_trig = Trig::cos; break;
        case FamilyEq::E5: s.weight = Weight::one; s.lin_trig = Trig::cos; break;
        case FamilyEq::E6: s.weight = Weight::one; s.lin_trig = Trig::sin; break;
    }
    return s;
}

const char* to_string(Weight w) { return w == Weight::one ? "one" : "x"; }
const char* to_string(Trig t) { return t == Trig::sin ? "sin" : "cos"; }

const char* to_string(FamilyEq f) {
    switch (f) {
        case FamilyEq::E1: return "E1";
        case FamilyEq::E2: return "E2";
        case FamilyEq::E5: return "E5";
        case FamilyEq::E6: return "E6";
    }
    return "?";
}

FamilyEq family_from_string(const std::string& s) {
    if (s == "E1") return FamilyEq::E1;
    if (s == "E2") return FamilyEq::E2;
    if (s == "E5") return FamilyEq::E5;
    if (s == "E6") return FamilyEq::E6;
    throw std::invalid_argument("unknown family: " + s);
}

Trig trig_from_string(const std::string& s) {
    if (s == "sin") return Trig::sin;
    if (s == "cos") return Trig::cos;
    throw std::invalid_argument("unknown trig tag: " + s);
}

}  // namespace oscint
