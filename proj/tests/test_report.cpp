#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oscint/report.hpp"

using namespace oscint;
namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

fs::path temp_dir(const char* tag) {
    const fs::path dir = fs::temp_directory_path() / (std::string("oscint_test_") + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

std::string without_timing(const std::string& payload) {
    json doc = json::parse(payload);
    doc.erase("timing");
    return doc.dump(2);
}

ReportOptions fast_options(const fs::path& out) {
    ReportOptions opt;
    opt.out_path = out;
    return opt;
}

}  // namespace

TEST_CASE("builtin corpus shape") {
    const auto corpus = builtin_corpus();
    CHECK(corpus.size() >= 12);

    int divergent = 0, convergent = 0;
    bool saw_cas_case = false;
    for (const auto& e : corpus) {
        CHECK(!e.case_id.empty());
        if (e.truth == CorpusTruth::divergent) {
            ++divergent;
            REQUIRE(e.claimed_value.has_value());
            CHECK(e.claimed_value->status == ClosedFormStatus::purported_erroneous);
        } else {
            ++convergent;
        }
        if (e.cas_claim.has_value()) {
            saw_cas_case = true;
            CHECK(e.spec.a == doctest::Approx(3.1));
            CHECK(e.spec.b == doctest::Approx(2.2));
            CHECK(*e.cas_claim == 0.0);
            CHECK(e.cas_notes.find("0") != std::string::npos);
            CHECK(e.truth == CorpusTruth::convergent_with_closed_form);
        }
    }
    CHECK(divergent == 8);
    CHECK(convergent == 5);
    CHECK(saw_cas_case);

    // E2 entries carry the 1/(2a) structure and the de Haan alternate claim
    for (const auto& e : corpus) {
        if (e.truth == CorpusTruth::divergent && e.spec.lin_trig == Trig::cos) {
            CHECK(e.claimed_value->source_eq == FamilyEq::E2);
            CHECK(e.cas_notes.find("de Haan") != std::string::npos);
            if (e.spec.quad_trig == Trig::sin) {
                // sin row starts from the 1/(2a) constant
                const double expected = purported_value(e.spec).value;
                CHECK(e.claimed_value->value == doctest::Approx(expected));
            }
        }
    }
    // sorted by case_id
    for (std::size_t i = 1; i < corpus.size(); ++i) CHECK(corpus[i - 1].case_id < corpus[i].case_id);
}

TEST_CASE("empty corpus still produces a valid report") {
    const fs::path dir = temp_dir("empty");
    const auto report = run_report({}, fast_options(dir / "report.json"));
    CHECK(report.exit_code == 0);
    CHECK(report.doc["entries"].empty());
    CHECK(fs::exists(dir / "report.json"));
    const json parsed = json::parse(slurp(dir / "report.json"));
    CHECK(parsed["tool_version"] == kToolVersion);
}

TEST_CASE("convergent-only corpus agrees everywhere and exits 0") {
    std::vector<CorpusEntry> corpus;
    for (const Trig q : {Trig::sin, Trig::cos}) {
        CorpusEntry e;
        e.spec = spec_for(FamilyEq::E5, q, 1.0, 1.0);
        e.case_id = std::string("e5_only_") + to_string(q);
        e.truth = CorpusTruth::convergent_with_closed_form;
        e.claimed_value = closed_form_for(e.spec);
        e.source_label = "test";
        corpus.push_back(e);
    }
    const fs::path dir = temp_dir("e5only");
    const auto report = run_report(corpus, fast_options(dir / "report.json"));
    CHECK(report.exit_code == 0);
    for (const auto& entry : report.doc["entries"]) {
        CHECK(entry["agreement_flag"] == "match");
        CHECK(entry["verdict"]["kind"] == "Convergent");
    }
}

TEST_CASE("builtin corpus report: divergent claims are flagged, traces written") {
    const fs::path dir = temp_dir("builtin");
    const auto report = run_report(builtin_corpus(), fast_options(dir / "report.json"));
    CHECK(report.exit_code == 0);

    int mismatches = 0;
    for (const auto& entry : report.doc["entries"]) {
        if (entry["truth"] == "divergent") {
            CHECK(entry["verdict"]["kind"] == "DivergentBounded");
            CHECK(entry["agreement_flag"] == "mismatch");
            CHECK(!entry["residual_limit"].is_null());
            // the residual limit reproduces the claimed table value
            const double claimed = entry["claimed_value"]["value"].get<double>();
            CHECK(std::abs(entry["residual_limit"].get<double>() - claimed) <= 1e-4);
            ++mismatches;
        } else if (!entry["cas_claim"].is_null()) {
            CHECK(entry["agreement_flag"] == "mismatch");  // the recorded CAS zero is wrong
        } else {
            CHECK(entry["agreement_flag"] == "match");
            CHECK(entry["dui_decision"] == "interchange_invalid");
        }
        const auto csv = entry["trace_csv"].get<std::string>();
        CHECK(fs::exists(dir / csv));
    }
    CHECK(mismatches == 8);
}

TEST_CASE("report bytes are stable across runs and thread counts") {
    const fs::path dir = temp_dir("stable");
    const auto corpus = builtin_corpus();

    setenv("OSCINT_THREADS", "1", 1);
    run_report(corpus, fast_options(dir / "r1.json"));
    run_report(corpus, fast_options(dir / "r2.json"));
    setenv("OSCINT_THREADS", "4", 1);
    run_report(corpus, fast_options(dir / "r4.json"));
    unsetenv("OSCINT_THREADS");

    const std::string a = slurp(dir / "r1.json");
    const std::string b = slurp(dir / "r2.json");
    const std::string c = slurp(dir / "r4.json");
    CHECK(without_timing(a) == without_timing(b));
    CHECK(without_timing(a) == without_timing(c));
}

TEST_CASE("trace CSV round-trip is exact") {
    const fs::path dir = temp_dir("csv");
    const auto trace =
        build_trace(spec_for(FamilyEq::E1, Trig::sin, 1.0, 1.0), 20.0, 64, GridKind::uniform_phase);
    write_trace_csv(dir / "t.csv", trace);
    const auto back = read_trace_csv(dir / "t.csv");
    REQUIRE(back.size() == trace.size());
    CHECK_FALSE(back.complex_valued);
    for (std::size_t i = 0; i < trace.size(); ++i) {
        CHECK(back.T[i] == trace.T[i]);
        CHECK(back.p[i].real() == trace.p[i].real());
    }

    PartialIntegralTrace ctrace = trace;
    ctrace.complex_valued = true;
    for (std::size_t i = 0; i < ctrace.size(); ++i)
        ctrace.p[i] = {trace.p[i].real(), std::sin(static_cast<double>(i))};
    write_trace_csv(dir / "c.csv", ctrace);
    const auto cback = read_trace_csv(dir / "c.csv");
    REQUIRE(cback.complex_valued);
    for (std::size_t i = 0; i < ctrace.size(); ++i) {
        CHECK(cback.p[i].imag() == ctrace.p[i].imag());
    }
}

TEST_CASE("report rejects unwritable destinations") {
    const fs::path dir = temp_dir("unwritable");
    { std::ofstream(dir / "blocker") << "x"; }  // plain file where a directory is needed
    ReportOptions opt;
    opt.out_path = dir / "blocker" / "report.json";
    CHECK_THROWS(run_report({}, opt));
}
