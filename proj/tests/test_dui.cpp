#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oscint/dui.hpp"
#include "oracle.hpp"

using namespace oscint;

TEST_CASE("interchange fails for the table families") {
    const auto r = check_interchange(FamilyEq::E5, Trig::sin, 1.0, 1.0);
    CHECK(r.decision == InterchangeDecision::interchange_invalid);
    CHECK(r.formal_verdict.kind == VerdictKind::DivergentBounded);
    CHECK(std::abs(r.outer_derivative - r.analytic_derivative) <= 1e-6);

    const auto r2 = check_interchange(FamilyEq::E6, Trig::cos, 2.0, 1.0);
    CHECK(r2.decision == InterchangeDecision::interchange_invalid);
    CHECK(std::abs(r2.outer_derivative - r2.analytic_derivative) <= 1e-6);
}

TEST_CASE("the closed forms stay differentiable even though the interchange fails") {
    // reduced grid; the full {0.5,1,2}^2 sweep runs in the acceptance suite
    for (const auto eq : {FamilyEq::E5, FamilyEq::E6}) {
        for (const Trig q : {Trig::sin, Trig::cos}) {
            for (const auto& [a, b] : {std::pair{0.5, 2.0}, {2.0, 0.5}}) {
                const auto r = check_interchange(eq, q, a, b);
                CHECK(r.decision == InterchangeDecision::interchange_invalid);
                CHECK(std::abs(r.outer_derivative - r.analytic_derivative) <= 1e-6);
                CHECK(r.formal_verdict.kind == VerdictKind::DivergentBounded);
            }
        }
    }
}

TEST_CASE("control family: interchange is valid and limits match the oracle") {
    const auto r1 = check_interchange_control(1.0);
    CHECK(r1.decision == InterchangeDecision::interchange_valid);
    REQUIRE(r1.formal_verdict.limit_estimate.has_value());
    const double limit1 = r1.formal_verdict.limit_estimate->real();
    // oracle: adaptive quadrature on [0, 40]; closed form -1/2 verified by it
    const double ref1 = oracle::control_formal(1.0, 40.0);
    CHECK(std::abs(ref1 - (-0.5)) <= 1e-9);
    CHECK(std::abs(limit1 - ref1) <= 1e-8);

    const auto r10 = check_interchange_control(10.0);
    CHECK(r10.decision == InterchangeDecision::interchange_valid);
    const double limit10 = r10.formal_verdict.limit_estimate->real();
    CHECK(std::abs(limit10) <= 0.01);
    CHECK(std::abs(limit10 - oracle::control_formal(10.0, 40.0)) <= 1e-8);

    for (const double b : {0.5, 1.0, 2.0}) {
        CHECK(check_interchange_control(b).decision == InterchangeDecision::interchange_valid);
    }
}

TEST_CASE("uniform tail probe: control family decays below its analytic bound") {
    for (const double T : {5.0, 10.0}) {
        const double sup = uniform_tail_probe_control(0.5, 2.0, T, 2.0 * T, 16);
        CHECK(sup <= std::exp(-T) * (T + 2.0));
    }
}

TEST_CASE("uniform tail probe: table families do not decay") {
    for (const double T : {10.0, 20.0, 40.0}) {
        const double sup = uniform_tail_probe(FamilyEq::E5, Trig::sin, 1.0, 0.5, 2.0, T, 2.0 * T, 16);
        CHECK(sup >= 0.1);
    }
}

TEST_CASE("uniform tail probe: empty interval gives zero") {
    CHECK(uniform_tail_probe(FamilyEq::E5, Trig::sin, 1.0, 0.5, 2.0, 10.0, 10.0, 16) == 0.0);
    CHECK(uniform_tail_probe_control(0.5, 2.0, 10.0, 10.0, 16) == 0.0);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(check_interchange(FamilyEq::E1, Trig::sin, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(check_interchange(FamilyEq::E5, Trig::sin, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(check_interchange_control(0.0), std::domain_error);
    CHECK_THROWS_AS(uniform_tail_probe(FamilyEq::E5, Trig::sin, 1.0, 2.0, 0.5, 10.0, 20.0, 16),
                    std::invalid_argument);
    CHECK_THROWS_AS(uniform_tail_probe(FamilyEq::E5, Trig::sin, 1.0, 0.5, 2.0, 10.0, 20.0, 4),
                    std::invalid_argument);
}

TEST_CASE("reports are deterministic for a fixed configuration") {
    const auto r1 = check_interchange(FamilyEq::E5, Trig::sin, 1.0, 1.5);
    const auto r2 = check_interchange(FamilyEq::E5, Trig::sin, 1.0, 1.5);
    CHECK(r1.outer_derivative == r2.outer_derivative);
    CHECK(r1.analytic_derivative == r2.analytic_derivative);
    CHECK(r1.uniform_tail_sup == r2.uniform_tail_sup);
    CHECK(r1.decision == r2.decision);
}
