#ifndef OSCINT_CORPUS_HPP
#define OSCINT_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "oscint/closedform.hpp"
#include "oscint/types.hpp"

namespace oscint {

enum class CorpusTruth { convergent_with_closed_form, divergent };

struct CorpusEntry {
    std::string case_id;
    IntegrandSpec spec;
    CorpusTruth truth = CorpusTruth::divergent;
    // Value printed by the historical tables for this case (present iff a
    // table printed a finite value). For the divergent families this is the
    // purported value, status purported_erroneous.
    std::optional<ClosedFormValue> claimed_value;
    // Numeric answer recorded from a computer algebra system, when one printed
    // a finite number that is wrong (e.g. 0 for the (3.1, 2.2) evaluation).
    std::optional<double> cas_claim;
    std::string source_label;
    std::string cas_notes;
};

// Built-in historical corpus: the eight divergent weight-x cases with their
// table values at (a,b) = (1,1) and (1,2), the four convergent weight-one
// families at (1,1), and the numeric CAS regression case (3.1, 2.2).
std::vector<CorpusEntry> builtin_corpus();

const char* to_string(CorpusTruth t);

}  // namespace oscint

#endif
