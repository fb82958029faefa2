#include "extalg/finite_ring.hpp"

#include <unordered_set>

namespace extalg {

FiniteRing::FiniteRing(AmbientPtr ambient, std::vector<Packed> sorted_elements)
    : amb_(std::move(ambient)), elems_(std::move(sorted_elements)) {}

std::size_t FiniteRing::index_of(Packed e) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), e);
    if (it == elems_.end() || *it != e) fail(errc::invalid_component, "element not in ring");
    return std::size_t(it - elems_.begin());
}

bool FiniteRing::subring_of(const FiniteRing& other) const {
    if (!amb_->same_as(other.ambient())) return false;
    for (Packed e : elems_)
        if (!other.contains(e)) return false;
    return true;
}

bool FiniteRing::same_elements(const FiniteRing& other) const {
    return amb_->same_as(other.ambient()) && elems_ == other.elems_;
}

bool FiniteRing::is_unit(Packed e) const {
    for (Packed v : elems_)
        if (mul(e, v) == one()) return true;
    return false;
}

std::vector<Packed> FiniteRing::units() const {
    std::vector<Packed> out;
    for (Packed e : elems_)
        if (is_unit(e)) out.push_back(e);
    return out;
}

bool FiniteRing::is_zero_divisor(Packed e) const {
    for (Packed v : elems_)
        if (v != zero() && mul(e, v) == zero()) return true;
    return false;
}

bool FiniteRing::is_nilpotent(Packed e) const {
    // e^(2^j) cycles within the finite ring; nilpotent iff a power hits 0.
    Packed x = e;
    for (std::size_t j = 0; j < 64; ++j) {
        if (x == zero()) return true;
        Packed next = mul(x, x);
        if (next == x) return x == zero();
        x = next;
    }
    return x == zero();
}

RingPtr close_subring(const AmbientPtr& ambient, const std::vector<Packed>& generators,
                      std::size_t cap) {
    std::unordered_set<Packed> seen;
    std::vector<Packed> all;
    auto push = [&](Packed e) {
        if (seen.insert(e).second) {
            all.push_back(e);
            if (all.size() > cap)
                fail(errc::size_cap_exceeded,
                     "subring closure exceeded cap " + std::to_string(cap));
        }
    };
    push(ambient->zero());
    push(ambient->one());
    for (Packed g : generators) push(g);

    // Process each element against every earlier one; all unordered pairs
    // get combined exactly once.
    for (std::size_t i = 0; i < all.size(); ++i) {
        Packed x = all[i];
        push(ambient->neg(x));
        for (std::size_t j = 0; j <= i; ++j) {
            Packed y = all[j];
            push(ambient->add(x, y));
            push(ambient->mul(x, y));
        }
    }
    std::sort(all.begin(), all.end());
    return std::make_shared<const FiniteRing>(ambient, std::move(all));
}

RingPtr ring_from_elements(const AmbientPtr& ambient, std::vector<Packed> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    FiniteRing r(ambient, std::move(elements));
    if (!r.contains(r.zero()) || !r.contains(r.one()))
        fail(errc::invalid_component, "element set lacks 0 or 1");
    for (Packed a : r.elements())
        for (Packed b : r.elements()) {
            if (!r.contains(r.add(a, b)) || !r.contains(r.mul(a, b)))
                fail(errc::invalid_component, "element set is not closed under ring operations");
        }
    return std::make_shared<const FiniteRing>(r);
}

ExtensionHandle::ExtensionHandle(RingPtr a, RingPtr b) : A(std::move(a)), B(std::move(b)) {
    if (!A->ambient().same_as(B->ambient()))
        fail(errc::not_subring, "extension rings live in different ambients");
    if (!A->subring_of(*B))
        fail(errc::not_subring, "A is not a subring of B");
}

} // namespace extalg
