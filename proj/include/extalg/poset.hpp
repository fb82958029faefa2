#pragma once

#include <string>
#include <vector>

#include "extalg/finite_universe.hpp"
#include "extalg/mixed_universe.hpp"

namespace extalg {

// Explicit finite poset with a distinguished subset gamma. Elements are
// opaque labels so that synthetic posets and ideal posets share one code
// path. The relation table is validated on construction.
class FinitePoset {
public:
    FinitePoset() = default; // empty poset

    static FinitePoset from_relation(std::vector<std::string> labels,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& leq_pairs,
                                     const std::vector<std::size_t>& gamma);
    // reflexive-transitive closure of cover pairs
    static FinitePoset from_covers(std::vector<std::string> labels,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& covers,
                                   const std::vector<std::size_t>& gamma);

    std::size_t size() const { return labels_.size(); }
    bool leq(std::size_t x, std::size_t y) const { return leq_[x][y]; }
    bool in_gamma(std::size_t x) const { return gamma_[x]; }
    const std::string& label(std::size_t x) const { return labels_[x]; }
    std::vector<std::size_t> gamma_indices() const;

private:
    void validate() const;

    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> leq_;
    std::vector<bool> gamma_;
};

std::vector<std::size_t> maximal_elements(const FinitePoset& p);

// no common upper bound
bool are_comaximal(const FinitePoset& p, std::size_t x, std::size_t y);

// maximal-by-inclusion comaximal subsets of { g in gamma : g >= above },
// enumerated exactly; guarded against oversized vertex sets
std::vector<std::vector<std::size_t>> comaximal_subsets_above(const FinitePoset& p,
                                                              std::size_t above,
                                                              std::size_t vertex_guard = 24);

struct HypothesesResult {
    PropertyVerdict a; // every element sits under a maximal one
    PropertyVerdict b; // gamma interpolates between pairs and their bounds
    PropertyVerdict c; // comaximal pairs refine to comaximal gamma pairs
    bool all_hold() const { return a.holds && b.holds && c.holds; }
};

HypothesesResult check_hypotheses(const FinitePoset& p);

// Evaluates both finiteness conditions exactly, with counts. On an explicit
// finite poset both are automatically true; the verdict records the counts
// as a consistency check of the enumeration machinery and says so.
PropertyVerdict check_equivalence(const FinitePoset& p, std::size_t vertex_guard = 24);

// --- bridge from extensions -----------------------------------------------------

template <class U>
struct RegularIdealPoset {
    FinitePoset poset;
    std::vector<typename U::Ideal> ideals; // aligned with poset indices
    PropertyVerdict bridge;                // the proof-claims verification
    bool empty_omega = false;
};

RegularIdealPoset<FiniteUniverse> build_regular_ideal_poset(const FiniteUniverse& u,
                                                            std::int64_t bound);
RegularIdealPoset<MixedUniverse> build_regular_ideal_poset(const MixedUniverse& u,
                                                           std::int64_t bound);

} // namespace extalg
