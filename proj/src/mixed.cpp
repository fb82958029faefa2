#include "extalg/mixed.hpp"

#include <algorithm>

namespace extalg {

bool MixedSlot::prime_admissible(std::int64_t q) const {
    switch (flavor) {
    case SlotFlavor::integers: return true;
    case SlotFlavor::local_at: return q == p;
    case SlotFlavor::inverted:
        return std::find(inverted.begin(), inverted.end(), q) == inverted.end();
    }
    return false;
}

Factored MixedSlot::canonicalize(const Factored& f) const {
    if (f.zero) return f;
    Factored out;
    for (auto& [q, e] : f.exps)
        if (prime_admissible(q) && e != 0) out.exps[q] = e;
    return out;
}

std::int64_t MixedSlot::smallest_prime() const {
    switch (flavor) {
    case SlotFlavor::integers: return 2;
    case SlotFlavor::local_at: return p;
    case SlotFlavor::inverted:
        for (std::int64_t q = 2;; ++q) {
            bool prime = q >= 2;
            for (std::int64_t d = 2; d * d <= q; ++d)
                if (q % d == 0) { prime = false; break; }
            if (prime && prime_admissible(q)) return q;
        }
    }
    return 2;
}

std::string MixedSlot::str() const {
    switch (flavor) {
    case SlotFlavor::integers: return "Z";
    case SlotFlavor::local_at: return "Z_(" + std::to_string(p) + ")";
    case SlotFlavor::inverted: {
        std::string s = "Z[";
        for (std::size_t i = 0; i < inverted.size(); ++i) {
            if (i) s += ",";
            s += "1/" + std::to_string(inverted[i]);
        }
        return s + "]";
    }
    }
    return "Z";
}

MixedElem mixed_zero(const MixedRing& R) {
    MixedElem e;
    e.slots.assign(R.r(), Rat64(0));
    e.tail = R.tail->zero();
    return e;
}

MixedElem mixed_one(const MixedRing& R) {
    MixedElem e;
    e.slots.assign(R.r(), Rat64(1));
    e.tail = R.tail->one();
    return e;
}

MixedElem mixed_add(const MixedRing& R, const MixedElem& a, const MixedElem& b) {
    MixedElem out;
    out.slots.resize(R.r());
    for (std::size_t i = 0; i < R.r(); ++i) out.slots[i] = rat_add(a.slots[i], b.slots[i]);
    out.tail = R.tail->add(a.tail, b.tail);
    return out;
}

MixedElem mixed_mul(const MixedRing& R, const MixedElem& a, const MixedElem& b) {
    MixedElem out;
    out.slots.resize(R.r());
    for (std::size_t i = 0; i < R.r(); ++i) out.slots[i] = rat_mul(a.slots[i], b.slots[i]);
    out.tail = R.tail->mul(a.tail, b.tail);
    return out;
}

MixedElem mixed_neg(const MixedRing& R, const MixedElem& a) {
    MixedElem out;
    out.slots.resize(R.r());
    for (std::size_t i = 0; i < R.r(); ++i) out.slots[i] = rat_neg(a.slots[i]);
    out.tail = R.tail->neg(a.tail);
    return out;
}

bool elem_in_A(const MixedRing& R, const MixedElem& e) {
    for (std::size_t i = 0; i < R.r(); ++i) {
        const Rat64& x = e.slots[i];
        if (x.is_zero()) continue;
        switch (R.slots[i].flavor) {
        case SlotFlavor::integers:
            if (x.den != 1) return false;
            break;
        case SlotFlavor::local_at:
            // Z_(p): denominator prime to p
            if (rat_vp(x, R.slots[i].p) < 0) return false;
            break;
        case SlotFlavor::inverted: {
            std::int64_t rest = x.den;
            for (std::int64_t q : R.slots[i].inverted)
                while (rest % q == 0) rest /= q;
            if (rest != 1) return false;
            break;
        }
        }
    }
    return R.tail->contains(e.tail);
}

bool elem_in_ideal(const MixedRing& R, const MixedElem& e, const MixedIdeal& a) {
    for (std::size_t i = 0; i < R.r(); ++i) {
        const Rat64& x = e.slots[i];
        const Factored& q = a.slots[i];
        if (q.zero) {
            if (!x.is_zero()) return false;
            continue;
        }
        if (x.is_zero()) continue;
        // x in qS_i <=> v_p(x) >= v_p(q) at every admissible prime; at primes
        // not dividing q or x this is automatic, so checking the primes of
        // both suffices
        Factored fx = R.slots[i].canonicalize(factored_from_rat(x));
        for (auto& [p, eexp] : fx.exps)
            if (eexp < q.exp_of(p)) return false;
        for (auto& [p, eexp] : q.exps)
            if (fx.exp_of(p) < eexp) return false;
    }
    return a.tail.contains(e.tail);
}

std::string elem_str(const MixedRing& R, const MixedElem& e) {
    std::string s = "(";
    for (std::size_t i = 0; i < R.r(); ++i) {
        if (i) s += ", ";
        s += e.slots[i].str();
    }
    if (!R.tail_trivial()) {
        if (R.r()) s += "; ";
        s += R.tail->ambient().describe(e.tail);
    }
    return s + ")";
}

MixedIdeal mixed_ideal(const MixedRing& R, std::vector<Factored> slots, Submodule tail) {
    if (slots.size() != R.r()) fail(errc::mixed_owners, "slot count mismatch");
    MixedIdeal a;
    a.slots.resize(R.r());
    for (std::size_t i = 0; i < R.r(); ++i) a.slots[i] = R.slots[i].canonicalize(slots[i]);
    a.tail = std::move(tail);
    return a;
}

MixedIdeal mixed_unit_ideal(const MixedRing& R) {
    MixedIdeal a;
    a.slots.assign(R.r(), Factored::one());
    a.tail = carrier_as_module(R.tail, R.tail);
    return a;
}

MixedIdeal mixed_zero_ideal(const MixedRing& R) {
    MixedIdeal a;
    a.slots.assign(R.r(), Factored::zero_value());
    a.tail = submodule_closure(R.tail, R.tail, {});
    return a;
}

bool mixed_is_integral(const MixedRing& R, const MixedIdeal& a) {
    for (const auto& s : a.slots)
        if (!s.is_integral()) return false;
    return true;
}

bool mixed_subset(const MixedRing& R, const MixedIdeal& a, const MixedIdeal& b) {
    for (std::size_t i = 0; i < R.r(); ++i)
        if (!fac_divides(b.slots[i], a.slots[i])) return false;
    return a.tail.subset_of(b.tail);
}

MixedIdeal mixed_sum(const MixedRing& R, const MixedIdeal& a, const MixedIdeal& b) {
    MixedIdeal out;
    out.slots.resize(R.r());
    for (std::size_t i = 0; i < R.r(); ++i)
        out.slots[i] = R.slots[i].canonicalize(fac_gcd(a.slots[i], b.slots[i]));
    out.tail = module_sum(a.tail, b.tail);
    return out;
}

MixedIdeal mixed_product(const MixedRing& R, const MixedIdeal& a, const MixedIdeal& b) {
    MixedIdeal out;
    out.slots.resize(R.r());
    for (std::size_t i = 0; i < R.r(); ++i)
        out.slots[i] = R.slots[i].canonicalize(fac_mul(a.slots[i], b.slots[i]));
    out.tail = module_product(a.tail, b.tail);
    return out;
}

MixedIdeal mixed_intersection(const MixedRing& R, const MixedIdeal& a, const MixedIdeal& b) {
    MixedIdeal out;
    out.slots.resize(R.r());
    for (std::size_t i = 0; i < R.r(); ++i)
        out.slots[i] = R.slots[i].canonicalize(fac_lcm(a.slots[i], b.slots[i]));
    std::vector<Packed> inter;
    for (Packed e : a.tail.elements)
        if (b.tail.contains(e)) inter.push_back(e);
    Submodule t;
    t.owner = a.tail.owner;
    t.carrier = a.tail.carrier;
    t.elements = std::move(inter);
    t.generators = reduce_generators(t.owner, t.carrier, t.elements);
    out.tail = std::move(t);
    return out;
}

MixedIdeal mixed_colon_B(const MixedRing& R, const MixedIdeal& a, const MixedIdeal& b) {
    MixedIdeal out;
    out.slots.resize(R.r());
    for (std::size_t i = 0; i < R.r(); ++i) {
        if (b.slots[i].zero)
            out.slots[i] = Factored::one(); // whole slot ring
        else if (a.slots[i].zero)
            out.slots[i] = Factored::zero_value();
        else
            out.slots[i] = R.slots[i].canonicalize(fac_div(a.slots[i], b.slots[i]));
    }
    out.tail = colon(a.tail, b.tail);
    return out;
}

MixedIdeal mixed_colon_A(const MixedRing& R, const MixedIdeal& a, const MixedIdeal& b) {
    MixedIdeal out = mixed_colon_B(R, a, b);
    for (std::size_t i = 0; i < R.r(); ++i)
        if (!out.slots[i].zero) out.slots[i] = fac_clip_nonneg(out.slots[i]);
    return out;
}

std::vector<MixedElem> mixed_generators(const MixedRing& R, const MixedIdeal& a) {
    std::vector<MixedElem> out;
    for (std::size_t i = 0; i < R.r(); ++i) {
        if (a.slots[i].zero) continue;
        auto q = fac_to_rat(a.slots[i]);
        if (!q) fail(errc::size_cap_exceeded, "generator value overflow");
        MixedElem e = mixed_zero(R);
        e.slots[i] = *q;
        out.push_back(std::move(e));
    }
    for (Packed g : a.tail.generators) {
        MixedElem e = mixed_zero(R);
        e.tail = g;
        out.push_back(std::move(e));
    }
    return out;
}

MixedIdeal mixed_ideal_from_elements(const MixedRing& R, const std::vector<MixedElem>& elems) {
    MixedIdeal out;
    out.slots.assign(R.r(), Factored::zero_value());
    std::vector<Packed> tail_gens;
    for (const auto& e : elems) {
        for (std::size_t i = 0; i < R.r(); ++i) {
            if (e.slots[i].is_zero()) continue;
            Rat64 abs = e.slots[i];
            if (abs.num < 0) abs = rat_neg(abs);
            out.slots[i] = fac_gcd(out.slots[i], factored_from_rat(abs));
        }
        tail_gens.push_back(e.tail);
    }
    for (std::size_t i = 0; i < R.r(); ++i) out.slots[i] = R.slots[i].canonicalize(out.slots[i]);
    out.tail = submodule_closure(R.tail, R.tail, tail_gens);
    return out;
}

std::string mixed_ideal_str(const MixedRing& R, const MixedIdeal& a) {
    std::string s;
    for (std::size_t i = 0; i < R.r(); ++i) {
        if (i) s += " x ";
        s += fac_str(a.slots[i]) + "*" + R.slots[i].str();
    }
    if (!R.tail_trivial()) {
        if (R.r()) s += " x ";
        s += "tail(" + std::to_string(a.tail.elements.size()) + " elems)";
    }
    return s;
}

MixedSupport mixed_support(const MixedRing& R, const MixedIdeal& a) {
    if (!mixed_is_integral(R, a)) fail(errc::not_integral, "support requires an integral ideal");
    MixedSupport out;
    for (std::size_t i = 0; i < R.r(); ++i) {
        if (a.slots[i].zero) {
            out.finite = false;
            out.maxes.clear();
            return out;
        }
        for (auto& [p, e] : a.slots[i].exps)
            if (e > 0) out.maxes.push_back(MixedMax{false, i, p, 0});
    }
    auto tmax = maximal_ideals(R.tail);
    for (std::size_t t = 0; t < tmax.size(); ++t)
        if (a.tail.subset_of(tmax[t].ideal)) out.maxes.push_back(MixedMax{true, 0, 0, t});
    return out;
}

MixedIdeal ideal_of_mixed_max(const MixedRing& R, const MixedMax& m,
                              const std::vector<PrimeSpot>& tail_maxes) {
    MixedIdeal out = mixed_unit_ideal(R);
    if (m.is_tail) {
        out.tail = tail_maxes[m.tail_idx].ideal;
    } else {
        Factored f;
        f.exps[m.p] = 1;
        out.slots[m.slot] = f;
    }
    return out;
}

MixedExtension total_quotient_extension(const MixedRing& R) { return MixedExtension{R}; }

} // namespace extalg
