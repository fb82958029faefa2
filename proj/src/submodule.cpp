#include "extalg/submodule.hpp"

#include <unordered_set>

namespace extalg {

namespace {

void check_same_context(const Submodule& s, const Submodule& t) {
    if (s.owner != t.owner && !s.owner->same_elements(*t.owner))
        fail(errc::mixed_owners, "submodules have different owners");
    if (s.carrier != t.carrier && !s.carrier->same_elements(*t.carrier))
        fail(errc::mixed_owners, "submodules have different carriers");
}

} // namespace

bool Submodule::subset_of(const Submodule& o) const {
    for (Packed e : elements)
        if (!o.contains(e)) return false;
    return true;
}

Submodule submodule_closure(const RingPtr& owner, const RingPtr& carrier,
                            const std::vector<Packed>& generators, std::size_t cap) {
    if (!owner->subring_of(*carrier)) fail(errc::not_subring, "owner is not a subring of carrier");
    const Ambient& amb = carrier->ambient();
    std::unordered_set<Packed> seen;
    std::vector<Packed> all;
    auto push = [&](Packed e) {
        if (seen.insert(e).second) {
            all.push_back(e);
            if (all.size() > cap)
                fail(errc::size_cap_exceeded, "module closure exceeded cap " + std::to_string(cap));
        }
    };
    push(amb.zero());
    for (Packed g : generators) {
        if (!carrier->contains(g)) fail(errc::not_subring, "generator outside carrier");
        push(g);
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        Packed x = all[i];
        for (Packed a : owner->elements()) push(amb.mul(a, x));
        for (std::size_t j = 0; j <= i; ++j) push(amb.add(x, all[j]));
    }
    std::sort(all.begin(), all.end());
    Submodule s;
    s.owner = owner;
    s.carrier = carrier;
    s.generators = generators;
    s.elements = std::move(all);
    return s;
}

Submodule module_sum(const Submodule& s, const Submodule& t) {
    check_same_context(s, t);
    // both closed: the sum is exactly the set of pairwise sums
    const Ambient& amb = s.carrier->ambient();
    std::unordered_set<Packed> seen;
    for (Packed x : s.elements)
        for (Packed y : t.elements) seen.insert(amb.add(x, y));
    std::vector<Packed> all(seen.begin(), seen.end());
    std::sort(all.begin(), all.end());
    Submodule out;
    out.owner = s.owner;
    out.carrier = s.carrier;
    out.generators = s.generators;
    out.generators.insert(out.generators.end(), t.generators.begin(), t.generators.end());
    out.elements = std::move(all);
    return out;
}

Submodule module_product(const Submodule& s, const Submodule& t) {
    check_same_context(s, t);
    const Ambient& amb = s.carrier->ambient();
    // generated by pairwise products of generators
    std::vector<Packed> gens;
    for (Packed x : s.generators)
        for (Packed y : t.generators) gens.push_back(amb.mul(x, y));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    Submodule out = submodule_closure(s.owner, s.carrier, gens);
    return out;
}

Submodule colon(const Submodule& s, const Submodule& t) {
    return colon_within(s, t, s.carrier);
}

Submodule colon_within(const Submodule& s, const Submodule& t, const RingPtr& within) {
    check_same_context(s, t);
    const Ambient& amb = s.carrier->ambient();
    std::vector<Packed> elems;
    for (Packed x : within->elements()) {
        bool ok = true;
        for (Packed g : t.generators) {
            if (!s.contains(amb.mul(x, g))) { ok = false; break; }
        }
        if (ok) elems.push_back(x);
    }
    std::sort(elems.begin(), elems.end());
    Submodule out;
    out.owner = s.owner;
    out.carrier = s.carrier;
    out.elements = std::move(elems);
    out.generators = reduce_generators(out.owner, out.carrier, out.elements);
    return out;
}

Submodule carrier_as_module(const RingPtr& owner, const RingPtr& carrier) {
    Submodule out;
    out.owner = owner;
    out.carrier = carrier;
    out.elements = carrier->elements();
    out.generators = reduce_generators(owner, carrier, out.elements);
    return out;
}

std::vector<Packed> reduce_generators(const RingPtr& owner, const RingPtr& carrier,
                                      const std::vector<Packed>& elements) {
    if (elements.empty() || (elements.size() == 1 && elements[0] == carrier->zero()))
        return {};
    // single generator, if any element alone spans the set
    for (Packed g : elements) {
        if (g == carrier->zero()) continue;
        Submodule span = submodule_closure(owner, carrier, {g}, elements.size());
        if (span.elements == elements) return {g};
    }
    std::vector<Packed> gens;
    Submodule span = submodule_closure(owner, carrier, {}, elements.size());
    for (Packed e : elements) {
        if (span.contains(e)) continue;
        gens.push_back(e);
        span = submodule_closure(owner, carrier, gens, elements.size());
        if (span.elements == elements) break;
    }
    return gens;
}

TrackedSpan span_with_certificates(const RingPtr& owner, const RingPtr& carrier,
                                   const std::vector<Packed>& generators, std::size_t cap) {
    const Ambient& amb = carrier->ambient();
    TrackedSpan out;
    std::vector<Packed> all;
    auto push = [&](Packed e, LinearCombo lc) {
        if (out.expr.find(e) != out.expr.end()) return;
        out.expr.emplace(e, std::move(lc));
        all.push_back(e);
        if (all.size() > cap) fail(errc::size_cap_exceeded, "tracked span exceeded cap");
    };
    push(amb.zero(), LinearCombo{});
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
        LinearCombo lc;
        lc.terms[gi] = owner->one();
        push(generators[gi], std::move(lc));
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        Packed x = all[i];
        LinearCombo lx = out.expr.at(x); // copy: map may rehash as we insert
        for (Packed a : owner->elements()) {
            Packed ax = amb.mul(a, x);
            if (out.expr.count(ax)) continue;
            LinearCombo lc;
            for (const auto& [gi, coeff] : lx.terms) {
                Packed c = amb.mul(a, coeff);
                if (c != amb.zero()) lc.terms[gi] = c;
            }
            push(ax, std::move(lc));
        }
        for (std::size_t j = 0; j <= i; ++j) {
            Packed y = all[j];
            Packed xy = amb.add(x, y);
            if (out.expr.count(xy)) continue;
            LinearCombo lc = lx;
            for (const auto& [gi, coeff] : out.expr.at(y).terms) {
                auto it = lc.terms.find(gi);
                if (it == lc.terms.end()) {
                    lc.terms[gi] = coeff;
                } else {
                    it->second = amb.add(it->second, coeff);
                    if (it->second == amb.zero()) lc.terms.erase(it);
                }
            }
            push(xy, std::move(lc));
        }
    }
    std::sort(all.begin(), all.end());
    out.elements = std::move(all);
    return out;
}

} // namespace extalg
