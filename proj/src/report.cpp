#include "oscint/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "oscint/dui.hpp"
#include "oscint/oscquad.hpp"
#include "oscint/parallel.hpp"

namespace oscint {

namespace {

using json = nlohmann::ordered_json;

std::string render17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json json_verdict(const ConvergenceVerdict& v) {
    json j;
    j["kind"] = to_string(v.kind);
    if (v.limit_estimate)
        j["limit_estimate"] = v.limit_estimate->imag() == 0.0
                                  ? json(v.limit_estimate->real())
                                  : json({{"re", v.limit_estimate->real()},
                                          {"im", v.limit_estimate->imag()}});
    else
        j["limit_estimate"] = nullptr;
    j["oscillation_envelope"] = v.oscillation_envelope ? json(*v.oscillation_envelope) : json();
    json windows = json::array();
    for (const auto& w : v.window_report)
        windows.push_back(
            {{"t_lo", w.t_lo}, {"t_hi", w.t_hi}, {"oscillation", w.oscillation}, {"samples", w.samples}});
    j["windows"] = windows;
    return j;
}

json json_claimed(const ClosedFormValue& v) {
    return {{"value", v.value}, {"status", to_string(v.status)}, {"source_eq", to_string(v.source_eq)}};
}

struct EntryOutcome {
    json doc;
    double elapsed_ms = 0.0;
    bool numerical_failure = false;
};

EntryOutcome evaluate_entry(const CorpusEntry& entry, const ReportOptions& opt,
                            const std::filesystem::path& trace_dir) {
    const auto t0 = std::chrono::steady_clock::now();
    EntryOutcome out;
    json& j = out.doc;

    j["case_id"] = entry.case_id;
    j["family"] = to_string(family_of(entry.spec));
    j["weight"] = to_string(entry.spec.weight);
    j["quad_trig"] = to_string(entry.spec.quad_trig);
    j["lin_trig"] = to_string(entry.spec.lin_trig);
    j["a"] = entry.spec.a;
    j["b"] = entry.spec.b;
    j["truth"] = to_string(entry.truth);
    j["source_label"] = entry.source_label;
    j["cas_notes"] = entry.cas_notes;
    j["claimed_value"] = entry.claimed_value ? json_claimed(*entry.claimed_value) : json();
    j["cas_claim"] = entry.cas_claim ? json(*entry.cas_claim) : json();

    const PartialIntegralTrace trace =
        build_trace(entry.spec, opt.t_max, opt.samples, GridKind::uniform_phase, opt.quad);
    const ConvergenceVerdict verdict = classify(trace, opt.classify_tol, opt.classify_windows);
    j["verdict"] = json_verdict(verdict);

    bool inconclusive = verdict.kind == VerdictKind::Inconclusive || !trace.all_converged;

    if (entry.truth == CorpusTruth::convergent_with_closed_form) {
        const ClosedFormValue cf = closed_form_for(entry.spec);
        j["closed_form"] = cf.value;
        const RealEstimate numeric = improper_value(entry.spec, opt.quad);
        j["numeric_value"] = numeric.value;
        inconclusive = inconclusive || !numeric.converged;
        if (entry.spec.b > 0.0) {
            const DUIReport dui =
                check_interchange(family_of(entry.spec), entry.spec.quad_trig, entry.spec.a,
                                  entry.spec.b, opt.quad);
            j["dui_decision"] = to_string(dui.decision);
            inconclusive = inconclusive || dui.decision == InterchangeDecision::inconclusive;
        } else {
            j["dui_decision"] = nullptr;
        }
        j["residual_limit"] = nullptr;
    } else {
        j["closed_form"] = nullptr;
        j["numeric_value"] = nullptr;
        j["dui_decision"] = nullptr;
        // the erroneous table value re-emerges as the limit of P(T) - B(T)
        const PartialIntegralTrace residual = build_residual_trace(
            entry.spec, opt.t_max, opt.samples, GridKind::uniform_phase, opt.quad);
        const ConvergenceVerdict rv = classify(residual, opt.classify_tol, opt.classify_windows);
        j["residual_limit"] =
            rv.kind == VerdictKind::Convergent ? json(rv.limit_estimate->real()) : json();
        inconclusive = inconclusive || rv.kind != VerdictKind::Convergent;
    }

    // agreement flag
    std::string agreement = "match";
    if (inconclusive) {
        agreement = "inconclusive";
    } else if (entry.truth == CorpusTruth::divergent) {
        // a finite claim against a divergent integral can never agree
        if (entry.claimed_value) agreement = "mismatch";
    } else {
        const double numeric = j["numeric_value"].get<double>();
        if (entry.claimed_value &&
            std::abs(numeric - entry.claimed_value->value) > 1e-6 * std::max(1.0, std::abs(numeric)))
            agreement = "mismatch";
        if (verdict.kind != VerdictKind::Convergent) agreement = "mismatch";
        if (entry.cas_claim &&
            std::abs(numeric - *entry.cas_claim) > 0.1 * std::max(1.0, std::abs(numeric)))
            agreement = "mismatch";
    }
    j["agreement_flag"] = agreement;
    out.numerical_failure = inconclusive;

    if (opt.write_traces) {
        const std::string csv_name = entry.case_id + ".trace.csv";
        write_trace_csv(trace_dir / csv_name, trace);
        j["trace_csv"] = csv_name;
    } else {
        j["trace_csv"] = nullptr;
    }

    out.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return out;
}

void atomic_write(const std::filesystem::path& path, const std::string& payload) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("report: cannot open " + tmp.string());
        os << payload;
        if (!os.flush()) throw std::runtime_error("report: write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

RunReport run_report(const std::vector<CorpusEntry>& corpus, const ReportOptions& options) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<CorpusEntry> ordered = corpus;
    std::sort(ordered.begin(), ordered.end(),
              [](const CorpusEntry& a, const CorpusEntry& b) { return a.case_id < b.case_id; });

    std::filesystem::path out_path = options.out_path;
    std::filesystem::path dir = out_path.parent_path();
    if (dir.empty()) dir = ".";
    std::filesystem::create_directories(dir);

    std::vector<EntryOutcome> outcomes(ordered.size());
    parallel_for(ordered.size(),
                 [&](std::size_t i) { outcomes[i] = evaluate_entry(ordered[i], options, dir); });

    RunReport report;
    json& doc = report.doc;
    doc["tool_version"] = kToolVersion;
    doc["config"] = {
        {"quad",
         {{"abs_tol", options.quad.abs_tol},
          {"rel_tol", options.quad.rel_tol},
          {"max_segments", options.quad.max_segments},
          {"acceleration_depth", options.quad.acceleration_depth}}},
        {"trace", {{"t_max", options.t_max}, {"samples", options.samples}, {"grid", "phase"}}},
        {"classify", {{"tol", options.classify_tol}, {"windows", options.classify_windows}}}};
    doc["entries"] = json::array();
    json timing;
    timing["threads"] = thread_cap();
    json per_entry;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        doc["entries"].push_back(outcomes[i].doc);
        per_entry[ordered[i].case_id] = outcomes[i].elapsed_ms;
        if (outcomes[i].numerical_failure) report.exit_code = 2;
    }
    timing["per_entry_ms"] = per_entry;
    timing["total_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    doc["timing"] = timing;

    atomic_write(out_path, doc.dump(2) + "\n");
    return report;
}

void write_trace_csv(const std::filesystem::path& path, const PartialIntegralTrace& trace) {
    std::ostringstream os;
    os << (trace.complex_valued ? "T,p_re,p_im\n" : "T,p_re\n");
    for (std::size_t i = 0; i < trace.size(); ++i) {
        os << render17(trace.T[i]) << ',' << render17(trace.p[i].real());
        if (trace.complex_valued) os << ',' << render17(trace.p[i].imag());
        os << '\n';
    }
    atomic_write(path, os.str());
}

PartialIntegralTrace read_trace_csv(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open trace csv: " + path.string());
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("empty trace csv: " + path.string());
    PartialIntegralTrace trace;
    trace.complex_valued = line == "T,p_re,p_im";
    if (!trace.complex_valued && line != "T,p_re")
        throw std::runtime_error("bad trace csv header: " + line);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const char* s = line.c_str();
        char* end = nullptr;
        const double t = std::strtod(s, &end);
        if (end == s || *end != ',') throw std::runtime_error("bad trace csv row: " + line);
        s = end + 1;
        const double re = std::strtod(s, &end);
        double im = 0.0;
        if (trace.complex_valued) {
            if (*end != ',') throw std::runtime_error("bad trace csv row: " + line);
            s = end + 1;
            im = std::strtod(s, &end);
        }
        trace.T.push_back(t);
        trace.p.emplace_back(re, im);
    }
    trace.error_bound.assign(trace.size(), 0.0);
    return trace;
}

}  // namespace oscint
