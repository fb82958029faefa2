#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "extalg/factored.hpp"
#include "extalg/localization.hpp"
#include "extalg/submodule.hpp"

namespace extalg {

// The symbolic universe: A = S_1 x ... x S_r x F inside B = Q^r x F, where
// each slot S_i is Z, Z localized at a prime, or Z with finitely many primes
// inverted, and F is an explicit finite ring (possibly the zero ring).
// Every slot is a PID whose fractional ideals are cut out by one canonical
// rational, so ideal arithmetic reduces to exponent arithmetic.

enum class SlotFlavor { integers, local_at, inverted };

struct MixedSlot {
    SlotFlavor flavor = SlotFlavor::integers;
    std::int64_t p = 0;                 // for local_at
    std::vector<std::int64_t> inverted; // for inverted

    bool prime_admissible(std::int64_t q) const;
    // strip unit primes of the slot from a factored value
    Factored canonicalize(const Factored& f) const;
    // some admissible prime (deterministic smallest)
    std::int64_t smallest_prime() const;
    std::string str() const;
};

struct MixedRing {
    std::vector<MixedSlot> slots;
    RingPtr tail; // zero ring allowed

    std::size_t r() const { return slots.size(); }
    bool tail_trivial() const { return tail->size() == 1; }
};

// element of B = Q^r x F
struct MixedElem {
    std::vector<Rat64> slots;
    Packed tail = 0;

    friend bool operator==(const MixedElem&, const MixedElem&) = default;
};

// fractional ideal of A inside B: canonical rational per slot + a tail
// submodule of F
struct MixedIdeal {
    std::vector<Factored> slots;
    Submodule tail;

    bool same_as(const MixedIdeal& o) const {
        return slots == o.slots && tail.elements == o.tail.elements;
    }
};

struct MixedMax {
    bool is_tail = false;
    std::size_t slot = 0;  // slot index when !is_tail
    std::int64_t p = 0;    // slot prime when !is_tail
    std::size_t tail_idx = 0;

    friend bool operator==(const MixedMax&, const MixedMax&) = default;
};

struct MixedExtension {
    MixedRing A; // B = Q^r x tail, implied

    const RingPtr& tail() const { return A.tail; }
};

// --- elements ----------------------------------------------------------------

MixedElem mixed_zero(const MixedRing& R);
MixedElem mixed_one(const MixedRing& R);
MixedElem mixed_add(const MixedRing& R, const MixedElem& a, const MixedElem& b);
MixedElem mixed_mul(const MixedRing& R, const MixedElem& a, const MixedElem& b);
MixedElem mixed_neg(const MixedRing& R, const MixedElem& a);
bool elem_in_A(const MixedRing& R, const MixedElem& e);
bool elem_in_ideal(const MixedRing& R, const MixedElem& e, const MixedIdeal& a);
std::string elem_str(const MixedRing& R, const MixedElem& e);

// --- ideals ------------------------------------------------------------------

MixedIdeal mixed_ideal(const MixedRing& R, std::vector<Factored> slots, Submodule tail);
MixedIdeal mixed_unit_ideal(const MixedRing& R);
MixedIdeal mixed_zero_ideal(const MixedRing& R);
bool mixed_is_integral(const MixedRing& R, const MixedIdeal& a);
bool mixed_subset(const MixedRing& R, const MixedIdeal& a, const MixedIdeal& b);

MixedIdeal mixed_sum(const MixedRing& R, const MixedIdeal& a, const MixedIdeal& b);
MixedIdeal mixed_product(const MixedRing& R, const MixedIdeal& a, const MixedIdeal& b);
MixedIdeal mixed_intersection(const MixedRing& R, const MixedIdeal& a, const MixedIdeal& b);
// [a : b] inside B; the colon by a zero slot component is the whole slot ring
MixedIdeal mixed_colon_B(const MixedRing& R, const MixedIdeal& a, const MixedIdeal& b);
// [a : b] inside A
MixedIdeal mixed_colon_A(const MixedRing& R, const MixedIdeal& a, const MixedIdeal& b);

// explicit generators: q_i e_i per slot plus embedded tail generators
std::vector<MixedElem> mixed_generators(const MixedRing& R, const MixedIdeal& a);

// smallest ideal containing the listed elements
MixedIdeal mixed_ideal_from_elements(const MixedRing& R, const std::vector<MixedElem>& elems);
std::string mixed_ideal_str(const MixedRing& R, const MixedIdeal& a);

// --- support and localization --------------------------------------------------

struct MixedSupport {
    bool finite = true;
    std::vector<MixedMax> maxes; // meaningful when finite
};

// maximal ideals containing an integral ideal; infinite when a slot is zero
MixedSupport mixed_support(const MixedRing& R, const MixedIdeal& a);

// localization of an ideal at a maximal ideal: at a slot prime the result is
// the p-adic valuation (INT32_MAX for the zero component); at a tail maximal
// it is the class-set image in the localized finite ring.
struct MixedLocalized {
    bool is_tail = false;
    int slot_valuation = 0;
    std::vector<std::uint32_t> tail_classes;

    friend bool operator==(const MixedLocalized&, const MixedLocalized&) = default;
};

MixedIdeal ideal_of_mixed_max(const MixedRing& R, const MixedMax& m,
                              const std::vector<PrimeSpot>& tail_maxes);

// total quotient ring: A <= Q^r x F (every regular element of a finite ring
// is a unit, so the tail is untouched)
MixedExtension total_quotient_extension(const MixedRing& R);

} // namespace extalg
