#pragma once

#include <optional>
#include <unordered_map>

#include "extalg/mixed.hpp"
#include "extalg/verdict.hpp"

namespace extalg {

// Values live in Z^d with lexicographic order, plus a formal infinity
// (nullopt). All finite totally ordered abelian groups are trivial, so
// finite-universe valuations are forced to be {0, infinity}-valued; higher
// rank is exercised by the axioms checker, not by the corpus.
using ValueVec = std::vector<std::int64_t>;
using MaybeValue = std::optional<ValueVec>; // nullopt = infinity

int value_cmp(const MaybeValue& a, const MaybeValue& b); // lex; infinity greatest
MaybeValue value_add(const MaybeValue& a, const MaybeValue& b);

// explicit table on a finite ring B
struct FiniteValuation {
    int rank = 1;
    std::unordered_map<Packed, MaybeValue> table;
};

struct FiniteManisCheck {
    PropertyVerdict verdict;
    std::optional<RingPtr> A_v;     // { v >= 0 }, on success
    std::optional<Submodule> p_v;   // { v > 0 }, prime ideal of A_v
};

// Verifies the four axioms by full enumeration and derives the pair.
// PartialAssignment if the table misses elements of B.
FiniteManisCheck check_manis_valuation(const RingPtr& B, const FiniteValuation& v);

// the {0, infinity} valuation attached to a prime ideal of B
FiniteValuation trivial_valuation(const RingPtr& B, const Submodule& prime_of_B);

// --- the classical valuation-pair criterion ----------------------------------
// (A', p') is a Manis pair in B iff for every x in B \ A' there is y in p'
// with x y in A' \ p'. Checked by enumeration here; the mixed overload works
// on the representable subring shapes.
PropertyVerdict is_manis_pair(const RingPtr& Asub, const Submodule& p, const RingPtr& B);

// --- mixed-world pairs --------------------------------------------------------

// subring of B = Q^r x F that is full in every component except possibly
// flavored slots and a tail subring
struct MixedSubring {
    struct SlotPart {
        bool full_Q = true;
        MixedSlot flavor; // meaningful when !full_Q
    };
    std::vector<SlotPart> slots;
    RingPtr tail; // subring of F
};

struct MixedPrime {
    enum class Kind { slot_positive, slot_zero, tail };
    Kind kind = Kind::slot_positive;
    std::size_t slot = 0;
    std::int64_t p = 0;  // slot_positive
    Submodule tail_prime; // tail kind: prime ideal of the tail subring
};

// p-adic rule on one slot of the mixed world
struct PAdicRule {
    std::size_t slot = 0;
    std::int64_t p = 2;
};

struct MixedManisCheck {
    PropertyVerdict verdict;
    std::optional<MixedSubring> A_v;
    std::optional<MixedPrime> p_v;
};

// Axioms for the p-adic rule: group image and the three identities hold by
// valuation arithmetic; the checker validates the rule shape and replays the
// identities on a deterministic sample of elements.
MixedManisCheck check_manis_valuation(const MixedExtension& ext, const PAdicRule& rule);

PropertyVerdict is_manis_pair(const MixedExtension& ext, const MixedSubring& Asub,
                              const MixedPrime& p);

std::string mixed_subring_str(const MixedExtension& ext, const MixedSubring& s);

} // namespace extalg
