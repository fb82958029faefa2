#include "extalg/valuation.hpp"

#include <algorithm>
#include <set>

namespace extalg {

int value_cmp(const MaybeValue& a, const MaybeValue& b) {
    if (!a && !b) return 0;
    if (!a) return 1;  // infinity greatest
    if (!b) return -1;
    if (*a < *b) return -1;
    if (*b < *a) return 1;
    return 0;
}

MaybeValue value_add(const MaybeValue& a, const MaybeValue& b) {
    if (!a || !b) return std::nullopt;
    ValueVec out(a->size());
    for (std::size_t i = 0; i < a->size(); ++i) out[i] = (*a)[i] + (*b)[i];
    return out;
}

FiniteManisCheck check_manis_valuation(const RingPtr& B, const FiniteValuation& v) {
    FiniteManisCheck out;
    out.verdict.property = "manis_valuation";
    for (Packed e : B->elements())
        if (!v.table.count(e))
            fail(errc::partial_assignment,
                 "valuation table misses element " + B->ambient().describe(e));
    auto val = [&](Packed e) -> const MaybeValue& { return v.table.at(e); };

    // (4) v(0) = infinity
    if (val(B->zero())) {
        out.verdict.holds = false;
        out.verdict.witness = json{{"axiom", "v(0)=infinity"}, {"v0_finite", true}};
        return out;
    }
    // (2) v(rs) = v(r) + v(s)
    for (Packed r : B->elements())
        for (Packed s : B->elements()) {
            if (value_cmp(val(B->mul(r, s)), value_add(val(r), val(s))) != 0) {
                out.verdict.holds = false;
                out.verdict.witness = json{{"axiom", "v(rs)=v(r)+v(s)"},
                                           {"r", B->ambient().describe(r)},
                                           {"s", B->ambient().describe(s)}};
                return out;
            }
        }
    // (3) v(r+s) >= min
    for (Packed r : B->elements())
        for (Packed s : B->elements()) {
            const MaybeValue& lo = value_cmp(val(r), val(s)) <= 0 ? val(r) : val(s);
            if (value_cmp(val(B->add(r, s)), lo) < 0) {
                out.verdict.holds = false;
                out.verdict.witness = json{{"axiom", "v(r+s)>=min"},
                                           {"r", B->ambient().describe(r)},
                                           {"s", B->ambient().describe(s)}};
                return out;
            }
        }
    // (1) v(B) minus infinity is a group: nonempty, closed under subtraction
    std::set<ValueVec> image;
    for (Packed e : B->elements())
        if (val(e)) image.insert(*val(e));
    if (image.empty()) {
        out.verdict.holds = false;
        out.verdict.witness = json{{"axiom", "image group"}, {"reason", "empty image"}};
        return out;
    }
    for (const auto& x : image)
        for (const auto& y : image) {
            ValueVec d(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
            if (!image.count(d)) {
                out.verdict.holds = false;
                out.verdict.witness = json{{"axiom", "image group"},
                                           {"missing_difference", d}};
                return out;
            }
        }

    out.verdict.holds = true;
    // derived pair A_v = { v >= 0 }, p_v = { v > 0 }
    MaybeValue zero = ValueVec(std::size_t(v.rank), 0);
    std::vector<Packed> av, pv;
    for (Packed e : B->elements()) {
        int c = value_cmp(val(e), zero);
        if (c >= 0) av.push_back(e);
        if (c > 0) pv.push_back(e);
    }
    std::sort(av.begin(), av.end());
    std::sort(pv.begin(), pv.end());
    auto ring = std::make_shared<const FiniteRing>(B->ambient_ptr(), std::move(av));
    Submodule prime;
    prime.owner = ring;
    prime.carrier = ring;
    prime.elements = std::move(pv);
    prime.generators = reduce_generators(ring, ring, prime.elements);
    out.A_v = ring;
    out.p_v = std::move(prime);
    return out;
}

FiniteValuation trivial_valuation(const RingPtr& B, const Submodule& prime_of_B) {
    FiniteValuation v;
    v.rank = 0;
    for (Packed e : B->elements())
        v.table[e] = prime_of_B.contains(e) ? MaybeValue(std::nullopt) : MaybeValue(ValueVec{});
    return v;
}

PropertyVerdict is_manis_pair(const RingPtr& Asub, const Submodule& p, const RingPtr& B) {
    if (!Asub->subring_of(*B)) fail(errc::not_subring, "pair ring not inside B");
    if (!is_prime_ideal(Asub, p)) fail(errc::not_prime, "pair ideal is not prime");
    PropertyVerdict v = make_verdict("manis_pair", true);
    for (Packed x : B->elements()) {
        if (Asub->contains(x)) continue;
        bool found = false;
        for (Packed y : p.elements) {
            Packed xy = B->mul(x, y);
            if (Asub->contains(xy) && !p.contains(xy)) { found = true; break; }
        }
        if (!found) {
            v.holds = false;
            v.witness = json{{"x", B->ambient().describe(x)},
                             {"reason", "no y in p with x*y in A minus p"}};
            return v;
        }
    }
    if (B->size() == Asub->size()) v.note = "B equals A: criterion vacuous";
    return v;
}

MixedManisCheck check_manis_valuation(const MixedExtension& ext, const PAdicRule& rule) {
    MixedManisCheck out;
    out.verdict.property = "manis_valuation";
    if (rule.slot >= ext.A.r()) fail(errc::partial_assignment, "rule slot out of range");
    if (!ext.A.slots[rule.slot].prime_admissible(rule.p)) {
        out.verdict.holds = false;
        out.verdict.witness = json{{"reason", "prime is a unit of the slot ring"},
                                   {"prime", rule.p}};
        return out;
    }
    // replay the axioms on a deterministic sample: v(x) = v_p(slot coord)
    std::vector<Rat64> sample;
    for (std::int64_t n : {0, 1, 2, 3, 4, 6, 9, -2, -3})
        for (std::int64_t d : {1, 2, 3, 4, 9}) sample.push_back(Rat64(n, d));
    auto v_of = [&](const Rat64& x) -> MaybeValue {
        if (x.is_zero()) return std::nullopt;
        return ValueVec{rat_vp(x, rule.p)};
    };
    for (const auto& x : sample)
        for (const auto& y : sample) {
            if (value_cmp(v_of(rat_mul(x, y)), value_add(v_of(x), v_of(y))) != 0) {
                out.verdict.holds = false;
                out.verdict.witness = json{{"axiom", "v(rs)=v(r)+v(s)"}, {"r", x.str()}, {"s", y.str()}};
                return out;
            }
            const MaybeValue& lo = value_cmp(v_of(x), v_of(y)) <= 0 ? v_of(x) : v_of(y);
            if (value_cmp(v_of(rat_add(x, y)), lo) < 0) {
                out.verdict.holds = false;
                out.verdict.witness = json{{"axiom", "v(r+s)>=min"}, {"r", x.str()}, {"s", y.str()}};
                return out;
            }
        }
    out.verdict.holds = true;
    out.verdict.note = "p-adic rule: image is Z (a group); identities replayed on " +
                       std::to_string(sample.size() * sample.size()) + " sampled pairs";
    // derived pair: Z_(p) in the rule slot, everything else full
    MixedSubring A_v;
    A_v.slots.resize(ext.A.r());
    A_v.slots[rule.slot].full_Q = false;
    A_v.slots[rule.slot].flavor = MixedSlot{SlotFlavor::local_at, rule.p, {}};
    A_v.tail = ext.A.tail;
    MixedPrime p_v;
    p_v.kind = MixedPrime::Kind::slot_positive;
    p_v.slot = rule.slot;
    p_v.p = rule.p;
    out.A_v = std::move(A_v);
    out.p_v = std::move(p_v);
    return out;
}

std::string mixed_subring_str(const MixedExtension& ext, const MixedSubring& s) {
    std::string out;
    for (std::size_t i = 0; i < s.slots.size(); ++i) {
        if (i) out += " x ";
        out += s.slots[i].full_Q ? "Q" : s.slots[i].flavor.str();
    }
    if (!ext.A.tail_trivial()) {
        if (!s.slots.empty()) out += " x ";
        out += "tail(" + std::to_string(s.tail->size()) + ")";
    }
    return out.empty() ? "0" : out;
}

PropertyVerdict is_manis_pair(const MixedExtension& ext, const MixedSubring& Asub,
                              const MixedPrime& p) {
    PropertyVerdict v = make_verdict("manis_pair", true);
    if (Asub.slots.size() != ext.A.r()) fail(errc::not_prime, "subring slot count mismatch");

    std::vector<std::size_t> flavored;
    for (std::size_t i = 0; i < Asub.slots.size(); ++i)
        if (!Asub.slots[i].full_Q) flavored.push_back(i);
    bool tail_full = Asub.tail->size() == ext.A.tail->size();

    if (flavored.empty() && tail_full) {
        // A' = B: x in B minus A' never happens
        if (p.kind == MixedPrime::Kind::tail && !is_prime_ideal(Asub.tail, p.tail_prime))
            fail(errc::not_prime, "tail ideal is not prime");
        v.note = "A' = B: criterion vacuous";
        return v;
    }
    if (flavored.size() == 1 && tail_full) {
        std::size_t i = flavored[0];
        const MixedSlot& fl = Asub.slots[i].flavor;
        if (p.kind != MixedPrime::Kind::slot_positive || p.slot != i)
            fail(errc::not_prime, "pair prime must sit in the flavored slot");
        if (!fl.prime_admissible(p.p)) fail(errc::not_prime, "prime is a unit of the slot ring");
        if (fl.flavor == SlotFlavor::local_at && fl.p == p.p) {
            // discrete valuation pair: x with v_p(x) = -k < 0 takes y = p^k,
            // giving v_p(x y) = 0, so x y lands in A' minus p'
            v.note = "valuation ring Z_(p): y = p^k clears any pole";
            return v;
        }
        // some other prime q stays non-inverted: x = 1/q has no partner,
        // since x y in A' forces v_q(y) >= 1 while y in p' forces
        // v_p(x y) >= 1
        std::int64_t q = 2;
        for (;; ++q) {
            bool prime = true;
            for (std::int64_t d = 2; d * d <= q; ++d)
                if (q % d == 0) { prime = false; break; }
            if (prime && q != p.p && fl.prime_admissible(q)) break;
        }
        v.holds = false;
        v.witness = json{{"x", "1/" + std::to_string(q) + " in slot " + std::to_string(i)},
                         {"reason", "x*y in A' forces v_" + std::to_string(q) +
                                        "(y) >= 1, and then x*y stays in p'"}};
        return v;
    }
    if (flavored.empty() && !tail_full) {
        // finite question: for x_t outside the tail subring find y_t in the
        // tail prime with x_t y_t inside minus the prime (slot coordinates of
        // y can be zero)
        if (p.kind != MixedPrime::Kind::tail) fail(errc::not_prime, "expected a tail prime");
        if (!is_prime_ideal(Asub.tail, p.tail_prime)) fail(errc::not_prime, "tail ideal not prime");
        for (Packed x : ext.A.tail->elements()) {
            if (Asub.tail->contains(x)) continue;
            bool found = false;
            for (Packed y : p.tail_prime.elements) {
                Packed xy = ext.A.tail->mul(x, y);
                if (Asub.tail->contains(xy) && !p.tail_prime.contains(xy)) { found = true; break; }
            }
            if (!found) {
                v.holds = false;
                v.witness = json{{"x_tail", ext.A.tail->ambient().describe(x)}};
                return v;
            }
        }
        return v;
    }
    fail(errc::not_prime, "unsupported mixed pair shape (several proper components)");
}

} // namespace extalg
