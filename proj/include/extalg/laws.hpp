#pragma once

#include <functional>

#include "extalg/corpus.hpp"
#include "extalg/prufer.hpp"

namespace extalg {

struct LawContribution {
    std::size_t instances = 0;
    std::size_t vacuous = 0;
    json failures = json::array();
    json notes = json::array();
};

// Per-entry working state: universes are built once and shared by all laws
// run against the entry. One context per thread.
struct EntryContext {
    const CorpusEntry& entry;
    const HarnessConfig& cfg;
    std::optional<FiniteUniverse> fin;
    std::optional<MixedUniverse> mix;
    std::optional<std::vector<PropertyVerdict>> all_verdicts; // memoized full evaluation

    EntryContext(const CorpusEntry& e, const HarnessConfig& c);
};

struct Law {
    std::string id;
    std::string statement;
    std::function<LawContribution(EntryContext&)> run;
};

// one law per verified statement; ids are stable CLI names
const std::vector<Law>& law_registry();
std::vector<std::string> law_ids();

// Standard predicate evaluation for one entry: extension-level verdicts plus
// per-curated-ideal verdicts, names like "weakly_surjective" and "pA.flat".
// An empty filter evaluates everything.
std::vector<PropertyVerdict> evaluate_entry(EntryContext& ctx,
                                            const std::vector<std::string>& props = {});

} // namespace extalg
