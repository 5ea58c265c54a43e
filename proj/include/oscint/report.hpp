#ifndef OSCINT_REPORT_HPP
#define OSCINT_REPORT_HPP

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "oscint/classify.hpp"
#include "oscint/corpus.hpp"
#include "oscint/types.hpp"

namespace oscint {

struct ReportOptions {
    QuadratureConfig quad;
    double t_max = 40.0;
    int samples = 512;
    double classify_tol = 1e-3;
    int classify_windows = 8;
    std::filesystem::path out_path = "oscint_report.json";
    bool write_traces = true;
};

struct RunReport {
    nlohmann::ordered_json doc;
    // 0: success; 2: at least one entry hit a numerical/accuracy failure.
    int exit_code = 0;
};

// Evaluates every corpus entry (trace + verdict, closed form or purported
// value, DUI where applicable), assembles the report ordered by case_id and
// writes it atomically (temp file + rename). Trace CSVs are written next to
// the report and referenced by relative path. Entries may evaluate
// concurrently; output bytes do not depend on the thread count, and repeated
// runs differ only in the "timing" block.
RunReport run_report(const std::vector<CorpusEntry>& corpus, const ReportOptions& options);

// Trace CSV schema: header "T,p_re" (real traces) or "T,p_re,p_im", one row
// per sample, 17-significant-digit decimal rendering (lossless round-trip).
void write_trace_csv(const std::filesystem::path& path, const PartialIntegralTrace& trace);
PartialIntegralTrace read_trace_csv(const std::filesystem::path& path);

}  // namespace oscint

#endif
