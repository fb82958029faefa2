#pragma once

#include <optional>
#include <string>

#include "extalg/mixed_universe.hpp"
#include "extalg/poset.hpp"
#include "extalg/valuation.hpp"

namespace extalg {

// One corpus instance: a finite or mixed extension, its curated ideals,
// optional valuation descriptions, and expected golden flags. `source` is
// the exact JSON description, kept for witness replay and determinism.
struct CorpusEntry {
    enum class Universe { finite, mixed };

    std::string id;
    Universe universe = Universe::finite;

    std::optional<ExtensionHandle> fin;
    std::vector<std::pair<std::string, Submodule>> fin_ideals;

    std::optional<MixedExtension> mix;
    std::vector<std::pair<std::string, MixedIdeal>> mix_ideals;

    // valuation descriptions by name
    std::vector<std::pair<std::string, FiniteValuation>> fin_valuations;
    std::vector<std::pair<std::string, PAdicRule>> mix_valuations;

    // expected flags: "<prop>" for extension-level, "<ideal>.<prop>" for
    // ideal-level; golden entries only
    std::map<std::string, bool> expected;

    json source;
};

// --- parsing -------------------------------------------------------------------

// dispatches on "kind": finite_extension | mixed_extension
CorpusEntry parse_extension_json(const json& j);
FinitePoset parse_poset_json(const json& j);

struct ParsedFile {
    enum class Kind { extension, poset, corpus } kind;
    std::optional<CorpusEntry> entry;
    std::optional<FinitePoset> poset;
    std::vector<CorpusEntry> corpus;
};

ParsedFile parse_file(const std::string& path);
json load_json_file(const std::string& path);

// --- serialization --------------------------------------------------------------

json extension_to_json(const CorpusEntry& e); // rebuilds a parseable description

} // namespace extalg
