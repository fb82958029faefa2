#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "extalg/finite_ring.hpp"

namespace extalg {

// An A-submodule of B: the closure of a generator list under addition and
// multiplication by every element of the owner ring A. When owner == carrier
// and the elements sit inside A, this is an ideal of A.
struct Submodule {
    RingPtr owner;   // A
    RingPtr carrier; // B
    std::vector<Packed> generators;
    std::vector<Packed> elements; // sorted, closed, contains 0

    bool contains(Packed e) const {
        return std::binary_search(elements.begin(), elements.end(), e);
    }
    std::size_t size() const { return elements.size(); }
    bool same_set(const Submodule& o) const { return elements == o.elements; }
    bool subset_of(const Submodule& o) const;
    bool is_zero() const { return elements.size() == 1; }
    bool is_whole_owner() const { return elements == owner->elements(); }
    bool is_whole_carrier() const { return elements == carrier->elements(); }
};

Submodule submodule_closure(const RingPtr& owner, const RingPtr& carrier,
                            const std::vector<Packed>& generators,
                            std::size_t cap = kDefaultRingCap);

Submodule module_sum(const Submodule& s, const Submodule& t);
Submodule module_product(const Submodule& s, const Submodule& t);

// [S : T] = { x in carrier : x T <= S }
Submodule colon(const Submodule& s, const Submodule& t);

// Same as colon but with membership restricted to `within` (e.g. [a :_A b]).
Submodule colon_within(const Submodule& s, const Submodule& t, const RingPtr& within);

// B viewed as an A-module, with a reduced generator list.
Submodule carrier_as_module(const RingPtr& owner, const RingPtr& carrier);

// Greedy minimal-ish generating set, deterministic: prefers a single
// generator when one exists, otherwise adds elements in ascending order.
std::vector<Packed> reduce_generators(const RingPtr& owner, const RingPtr& carrier,
                                      const std::vector<Packed>& elements);

// Module closure that tracks, for every element reached, one expression as
// an owner-linear combination of the generators. Used for invertibility
// certificates and B-regularity witnesses.
struct LinearCombo {
    // generator index -> coefficient in the owner ring
    std::map<std::size_t, Packed> terms;
};

struct TrackedSpan {
    std::vector<Packed> elements; // sorted
    std::unordered_map<Packed, LinearCombo> expr;
};

TrackedSpan span_with_certificates(const RingPtr& owner, const RingPtr& carrier,
                                   const std::vector<Packed>& generators,
                                   std::size_t cap = kDefaultRingCap);

} // namespace extalg
