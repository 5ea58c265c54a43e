#include "oscint/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace oscint {

namespace {

std::string format_param(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string make_case_id(const IntegrandSpec& spec) {
    std::string id = to_string(family_of(spec));
    id += "_";
    id += to_string(spec.quad_trig);
    id += "q_a";
    id += format_param(spec.a);
    id += "_b";
    id += format_param(spec.b);
    std::transform(id.begin(), id.end(), id.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return id;
}

CorpusEntry divergent_entry(FamilyEq family, Trig quad, double a, double b) {
    CorpusEntry e;
    e.spec = spec_for(family, quad, a, b);
    e.case_id = make_case_id(e.spec);
    e.truth = CorpusTruth::divergent;
    e.claimed_value = purported_value(e.spec);
    e.source_label = family == FamilyEq::E1
                         ? "G&R 3.851; Prudnikov I 2.5.22; de Haan 1858 193.17-18, 1867 150.4/150.7"
                         : "G&R 3.851; Prudnikov I 2.5.22; de Haan 1862 p. 443";
    e.source_label += " (desk-scale parameters)";
    e.cas_notes = "Maple V.4 reports divergence; Mathematica 4.0 returns the tabulated value.";
    if (family == FamilyEq::E2)
        e.cas_notes += " de Haan 1862 p. 443 separately obtains 0 for these integrals.";
    return e;
}

CorpusEntry convergent_entry(FamilyEq family, Trig quad, double a, double b,
                             const std::string& label) {
    CorpusEntry e;
    e.spec = spec_for(family, quad, a, b);
    e.case_id = make_case_id(e.spec);
    e.truth = CorpusTruth::convergent_with_closed_form;
    e.claimed_value = closed_form_for(e.spec);
    e.source_label = label;
    e.cas_notes =
        "Maple V.4 and Mathematica 4.0 evaluate the symbolic closed form correctly for general "
        "a, b.";
    return e;
}

}  // namespace

std::vector<CorpusEntry> builtin_corpus() {
    std::vector<CorpusEntry> corpus;

    for (const double b : {1.0, 2.0}) {
        for (const Trig quad : {Trig::sin, Trig::cos}) {
            corpus.push_back(divergent_entry(FamilyEq::E1, quad, 1.0, b));
            corpus.push_back(divergent_entry(FamilyEq::E2, quad, 1.0, b));
        }
    }

    for (const Trig quad : {Trig::sin, Trig::cos}) {
        corpus.push_back(convergent_entry(FamilyEq::E5, quad, 1.0, 1.0,
                                          "Cauchy 1815/1825 (desk-scale parameters)"));
        corpus.push_back(convergent_entry(FamilyEq::E6, quad, 1.0, 1.0,
                                          "Cauchy 1815/1825 (desk-scale parameters)"));
    }

    {
        CorpusEntry e = convergent_entry(FamilyEq::E5, Trig::sin, 3.1, 2.2,
                                         "CAS numeric regression case (a=3.1, b=2.2)");
        e.cas_claim = 0.0;
        e.cas_notes =
            "Maple V.4 evaluates the symbolic form correctly but returns 0 for this numeric "
            "instance; the correct value is ~0.1937.";
        corpus.push_back(e);
    }

    std::sort(corpus.begin(), corpus.end(),
              [](const CorpusEntry& a, const CorpusEntry& b) { return a.case_id < b.case_id; });
    return corpus;
}

const char* to_string(CorpusTruth t) {
    return t == CorpusTruth::divergent ? "divergent" : "convergent_with_closed_form";
}

}  // namespace oscint
