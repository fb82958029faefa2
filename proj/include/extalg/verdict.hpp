#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace extalg {

using json = nlohmann::json;

// Outcome of one predicate evaluation. A witness is attached whenever a
// universally quantified predicate fails or an existential one holds;
// vacuous marks verdicts whose quantifier domain was empty or degenerate.
struct PropertyVerdict {
    std::string property;
    bool holds = false;
    bool vacuous = false;
    json witness; // null when absent
    std::string note;

    json to_json() const {
        json j;
        j["property"] = property;
        j["holds"] = holds;
        if (vacuous) j["vacuous"] = true;
        if (!witness.is_null()) j["witness"] = witness;
        if (!note.empty()) j["note"] = note;
        return j;
    }
};

inline PropertyVerdict make_verdict(std::string property, bool holds) {
    PropertyVerdict v;
    v.property = std::move(property);
    v.holds = holds;
    return v;
}

// An explicit certificate 1 = sum alpha_i z_i with alpha_i in S and
// z_i in [A : S].
template <class Elem>
struct Partition {
    std::vector<std::pair<Elem, Elem>> pairs;
};

struct BRegularity {
    bool holds = false;
    json certificate; // combination sum s_i b_i = 1 when holds
};

// aggregate of the finitely-generated B-regular invertibility sweep
struct RegularSweep {
    std::size_t ideals_seen = 0;
    std::size_t regular_seen = 0;
    std::size_t invertible = 0;
    json failures = json::array();
};

struct LocalFlat {
    bool ok = false;
    bool zero = false;
    json detail; // failure description or generator
};

} // namespace extalg
