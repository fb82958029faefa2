#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <vector>

#include "extalg/ambient.hpp"

namespace extalg {

constexpr std::size_t kDefaultRingCap = 4096;

// An explicitly enumerated subring of an ambient product ring. Always
// contains the ambient's 0 and 1; the element list is sorted and closed
// under +, - and *.
class FiniteRing {
public:
    FiniteRing(AmbientPtr ambient, std::vector<Packed> sorted_elements);

    const Ambient& ambient() const { return *amb_; }
    const AmbientPtr& ambient_ptr() const { return amb_; }
    const std::vector<Packed>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }

    bool contains(Packed e) const {
        return std::binary_search(elems_.begin(), elems_.end(), e);
    }
    std::size_t index_of(Packed e) const; // element must be present

    Packed zero() const { return amb_->zero(); }
    Packed one() const { return amb_->one(); }
    Packed add(Packed a, Packed b) const { return amb_->add(a, b); }
    Packed sub(Packed a, Packed b) const { return amb_->sub(a, b); }
    Packed neg(Packed a) const { return amb_->neg(a); }
    Packed mul(Packed a, Packed b) const { return amb_->mul(a, b); }

    bool subring_of(const FiniteRing& other) const;
    bool same_elements(const FiniteRing& other) const;

    // Multiplicative units of the ring (elements u with uv = 1 for some v).
    std::vector<Packed> units() const;
    bool is_unit(Packed e) const;
    bool is_zero_divisor(Packed e) const; // ex. nonzero x with ex = 0
    bool is_nilpotent(Packed e) const;

private:
    AmbientPtr amb_;
    std::vector<Packed> elems_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

// Smallest subring of the ambient containing 1 and the generators.
// Throws SizeCapExceeded if the closure grows past `cap`.
RingPtr close_subring(const AmbientPtr& ambient, const std::vector<Packed>& generators,
                      std::size_t cap = kDefaultRingCap);

// Ring from an explicit element set; validates closure under +, -, *.
RingPtr ring_from_elements(const AmbientPtr& ambient, std::vector<Packed> elements);

// A ring extension A <= B inside a shared ambient: every element of A lies
// in B, and both contain the ambient's 1.
struct ExtensionHandle {
    RingPtr A;
    RingPtr B;

    ExtensionHandle(RingPtr a, RingPtr b);
};

} // namespace extalg
