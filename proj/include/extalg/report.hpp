#pragma once

#include "extalg/laws.hpp"

namespace extalg {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

struct SuiteReport {
    json document;
    bool any_failure = false;
    std::string text; // human-readable summary
};

// Runs the selected laws over the corpus. Deterministic for a fixed
// (corpus, config); entries may be evaluated in parallel, results merge in
// entry order. Unknown law ids raise ConfigInvalid.
SuiteReport run_suite(const std::vector<CorpusEntry>& corpus,
                      const std::vector<std::string>& law_filter, const HarnessConfig& cfg);

// Evaluates requested predicates on a single parsed file (extension or
// poset); prints witnesses into the returned document.
SuiteReport analyze_file(const std::string& path, const std::vector<std::string>& props,
                         const HarnessConfig& cfg);

// Poset file: hypotheses, maximal elements, equivalence counts.
SuiteReport analyze_poset(const std::string& path);

} // namespace extalg
