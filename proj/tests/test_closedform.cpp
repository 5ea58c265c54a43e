#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oscint/closedform.hpp"
#include "oscint/fresnel.hpp"
#include "oscint/oscquad.hpp"

using namespace oscint;

namespace {
constexpr double kPi = std::numbers::pi;

IntegrandSpec make_spec(Weight w, Trig q, Trig l, double a, double b) {
    IntegrandSpec s;
    s.weight = w;
    s.quad_trig = q;
    s.lin_trig = l;
    s.a = a;
    s.b = b;
    return s;
}
}  // namespace

TEST_CASE("E5 anchors") {
    const auto v0 = eval_convergent_cos_family(1.0, 0.0, Trig::sin);
    CHECK(v0.value == doctest::Approx(0.5 * std::sqrt(kPi / 2.0)).epsilon(1e-15));
    CHECK(v0.status == ClosedFormStatus::valid);
    CHECK(v0.source_eq == FamilyEq::E5);

    const auto v1 = eval_convergent_cos_family(1.0, 2.0, Trig::cos);
    CHECK(v1.value ==
          doctest::Approx(0.5 * std::sqrt(kPi / 2.0) * (std::cos(1.0) + std::sin(1.0)))
              .epsilon(1e-15));
    CHECK(v1.value == doctest::Approx(0.86589799988461815).epsilon(1e-15));

    // the CAS regression case agrees with the independent quadrature route
    const auto maple = eval_convergent_cos_family(3.1, 2.2, Trig::sin);
    const auto numeric = improper_value(make_spec(Weight::one, Trig::sin, Trig::cos, 3.1, 2.2));
    CHECK(std::abs(maple.value - numeric.value) <= 1e-6);

    CHECK_THROWS_AS(eval_convergent_cos_family(0.0, 1.0, Trig::sin), std::domain_error);
    CHECK_THROWS_AS(eval_convergent_cos_family(-1.0, 1.0, Trig::sin), std::domain_error);
}

TEST_CASE("E6 anchors") {
    CHECK(eval_convergent_sin_family(1.0, 0.0, Trig::sin).value == 0.0);

    const FresnelPair f1 = fresnel_cs(1.0);
    const auto v = eval_convergent_sin_family(1.0, 2.0, Trig::sin);
    CHECK(v.value == doctest::Approx(std::sqrt(kPi / 2.0) *
                                     (std::cos(1.0) * f1.c + std::sin(1.0) * f1.s))
                         .epsilon(1e-14));
    const auto numeric = improper_value(make_spec(Weight::one, Trig::sin, Trig::sin, 1.0, 2.0));
    CHECK(std::abs(v.value - numeric.value) <= 1e-6);

    const auto vc = eval_convergent_sin_family(2.0, 1.0, Trig::cos);
    CHECK(vc.value == doctest::Approx(0.020796154431206343).epsilon(1e-13));
    const auto numc = improper_value(make_spec(Weight::one, Trig::cos, Trig::sin, 2.0, 1.0));
    CHECK(std::abs(vc.value - numc.value) <= 1e-6);
}

TEST_CASE("purported values reproduce the printed table entries") {
    // upper row of the sine-factor table: (b/4a) sqrt(pi/2a) [sin + cos](b^2/4a)
    const auto e1 = purported_value(make_spec(Weight::x, Trig::sin, Trig::sin, 1.0, 2.0));
    CHECK(e1.status == ClosedFormStatus::purported_erroneous);
    CHECK(e1.source_eq == FamilyEq::E1);
    CHECK(e1.value == doctest::Approx(0.5 * std::sqrt(kPi / 2.0) *
                                      (std::sin(1.0) + std::cos(1.0)))
                          .epsilon(1e-15));
    CHECK(e1.value == doctest::Approx(0.86589799988461815).epsilon(1e-14));

    // upper row of the cosine-factor table: 1/(2a) - (b/2a) sqrt(pi/2a) [sin C - cos S]
    const FresnelPair f1 = fresnel_cs(1.0);
    const auto e2 = purported_value(make_spec(Weight::x, Trig::sin, Trig::cos, 1.0, 2.0));
    CHECK(e2.source_eq == FamilyEq::E2);
    CHECK(e2.value ==
          doctest::Approx(0.5 - std::sqrt(kPi / 2.0) * (std::sin(1.0) * f1.c - std::cos(1.0) * f1.s))
              .epsilon(1e-14));
    CHECK(e2.value == doctest::Approx(-0.093492222389619497).epsilon(1e-13));

    // frozen values for the remaining (1,1) corpus rows
    CHECK(purported_value(make_spec(Weight::x, Trig::sin, Trig::sin, 1.0, 1.0)).value ==
          doctest::Approx(0.38110662892801763).epsilon(1e-14));
    CHECK(purported_value(make_spec(Weight::x, Trig::cos, Trig::sin, 1.0, 1.0)).value ==
          doctest::Approx(-0.22606918904725684).epsilon(1e-13));
    CHECK(purported_value(make_spec(Weight::x, Trig::sin, Trig::cos, 1.0, 1.0)).value ==
          doctest::Approx(0.45863020178049806).epsilon(1e-13));
    CHECK(purported_value(make_spec(Weight::x, Trig::cos, Trig::cos, 1.0, 1.0)).value ==
          doctest::Approx(0.24584983884691056).epsilon(1e-13));

    CHECK_THROWS_AS(purported_value(make_spec(Weight::one, Trig::sin, Trig::sin, 1.0, 1.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(purported_value(make_spec(Weight::x, Trig::sin, Trig::sin, 1.0, 0.0)),
                    std::domain_error);
}

TEST_CASE("b-derivatives match central finite differences") {
    const double h = 1e-5;
    for (const Trig q : {Trig::sin, Trig::cos}) {
        for (const auto& [a, b] : {std::pair{1.0, 1.0}, {2.0, 0.7}, {0.5, 2.0}}) {
            const double d5 = closed_form_b_derivative(a, b, FamilyEq::E5, q);
            const double fd5 = (eval_convergent_cos_family(a, b + h, q).value -
                                eval_convergent_cos_family(a, b - h, q).value) /
                               (2.0 * h);
            CHECK(std::abs(d5 - fd5) <= 1e-6);
            const double d6 = closed_form_b_derivative(a, b, FamilyEq::E6, q);
            const double fd6 = (eval_convergent_sin_family(a, b + h, q).value -
                                eval_convergent_sin_family(a, b - h, q).value) /
                               (2.0 * h);
            CHECK(std::abs(d6 - fd6) <= 1e-6);
        }
    }
    // frozen anchors
    CHECK(closed_form_b_derivative(1.0, 1.0, FamilyEq::E5, Trig::sin) ==
          doctest::Approx(-0.38110662892801763).epsilon(1e-13));
    CHECK(closed_form_b_derivative(1.0, 1.0, FamilyEq::E6, Trig::cos) ==
          doctest::Approx(0.24584983884691056).epsilon(1e-13));
}

TEST_CASE("E5 cos-family derivative vanishes as b -> 0+ (even in b)") {
    for (const double b : {1e-2, 1e-3, 1e-4}) {
        const double d = closed_form_b_derivative(1.0, b, FamilyEq::E5, Trig::cos);
        CHECK(std::abs(d) <= 0.5 * b);  // ~ (b/4) sqrt(pi/2)
    }
    CHECK_THROWS_AS(closed_form_b_derivative(1.0, 0.0, FamilyEq::E5, Trig::sin),
                    std::domain_error);
    CHECK_THROWS_AS(closed_form_b_derivative(1.0, -1.0, FamilyEq::E6, Trig::sin),
                    std::domain_error);
    CHECK_THROWS_AS(closed_form_b_derivative(1.0, 1.0, FamilyEq::E1, Trig::sin),
                    std::invalid_argument);
}

TEST_CASE("purported values are the formally interchanged derivatives") {
    // E1 = -d/db E5 and E2 = +d/db E6, exactly
    for (const double a : {0.5, 1.0, 2.0}) {
        for (const double b : {0.5, 1.0, 2.0}) {
            for (const Trig q : {Trig::sin, Trig::cos}) {
                const double e1 = purported_value(make_spec(Weight::x, q, Trig::sin, a, b)).value;
                CHECK(std::abs(e1 + closed_form_b_derivative(a, b, FamilyEq::E5, q)) <= 1e-10);
                const double e2 = purported_value(make_spec(Weight::x, q, Trig::cos, a, b)).value;
                CHECK(std::abs(e2 - closed_form_b_derivative(a, b, FamilyEq::E6, q)) <= 1e-10);
            }
        }
    }
}

TEST_CASE("valid closed forms agree with the quadrature engine on the 3x3 grid") {
    for (const double a : {0.5, 1.0, 2.0}) {
        for (const double b : {0.5, 1.0, 2.0}) {
            for (const Trig q : {Trig::sin, Trig::cos}) {
                const auto e5 = make_spec(Weight::one, q, Trig::cos, a, b);
                CHECK(std::abs(improper_value(e5).value -
                               eval_convergent_cos_family(a, b, q).value) <= 1e-6);
                const auto e6 = make_spec(Weight::one, q, Trig::sin, a, b);
                CHECK(std::abs(improper_value(e6).value -
                               eval_convergent_sin_family(a, b, q).value) <= 1e-6);
            }
        }
    }
}

TEST_CASE("residual limits reproduce the purported values") {
    // lim_{T} P(T) - B(T) equals the printed value; the tight accelerated
    // version of this identity lives with the classifier tests
    for (const auto& [q, l] : {std::pair{Trig::sin, Trig::sin}, {Trig::cos, Trig::cos}}) {
        const auto spec = make_spec(Weight::x, q, l, 1.0, 2.0);
        // probe the residual at phase-aligned T values via the identity route
        const double pv = purported_value(spec).value;
        const double residual40 =
            partial_integral(spec, 40.0).value - boundary_term(spec, 40.0);
        CHECK(std::abs(residual40 - pv) <= 0.05);  // crude: full check lives in classify tests
    }
}

TEST_CASE("status tagging invariant") {
    CHECK(closed_form_for(make_spec(Weight::one, Trig::sin, Trig::cos, 1.0, 1.0)).status ==
          ClosedFormStatus::valid);
    CHECK(closed_form_for(make_spec(Weight::x, Trig::sin, Trig::cos, 1.0, 1.0)).status ==
          ClosedFormStatus::purported_erroneous);
    for (const auto eq : {FamilyEq::E1, FamilyEq::E2}) {
        const auto v = closed_form_for(spec_for(eq, Trig::sin, 1.0, 1.0));
        CHECK(v.status == ClosedFormStatus::purported_erroneous);
        CHECK(v.source_eq == eq);
    }
    for (const auto eq : {FamilyEq::E5, FamilyEq::E6}) {
        const auto v = closed_form_for(spec_for(eq, Trig::sin, 1.0, 1.0));
        CHECK(v.status == ClosedFormStatus::valid);
        CHECK(v.source_eq == eq);
    }
}
