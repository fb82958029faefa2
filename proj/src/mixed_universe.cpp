#include "extalg/mixed_universe.hpp"

namespace extalg {

MixedUniverse::MixedUniverse(MixedExtension ext, MixedSweepConfig cfg)
    : ext_(std::move(ext)), cfg_(cfg) {}

const std::vector<PrimeSpot>& MixedUniverse::tail_maxes() const {
    if (!tail_maxes_) {
        tail_maxes_ = maximal_ideals(ext_.A.tail);
        tail_locals_.resize(tail_maxes_->size());
    }
    return *tail_maxes_;
}

const LocalRing& MixedUniverse::tail_local(std::size_t idx) const {
    tail_maxes();
    if (!tail_locals_[idx]) tail_locals_[idx].emplace(ext_.A.tail, (*tail_maxes_)[idx].ideal);
    return *tail_locals_[idx];
}

std::vector<MixedMax> MixedUniverse::test_maxes(const Ideal& a) const {
    std::vector<MixedMax> out;
    for (std::size_t i = 0; i < ext_.A.r(); ++i) {
        if (a.slots[i].zero) {
            out.push_back(MixedMax{false, i, ext_.A.slots[i].smallest_prime(), 0});
        } else {
            for (auto& [p, e] : a.slots[i].exps)
                if (e != 0) out.push_back(MixedMax{false, i, p, 0});
        }
    }
    for (std::size_t t = 0; t < tail_maxes().size(); ++t)
        out.push_back(MixedMax{true, 0, 0, t});
    return out;
}

MixedUniverse::Ideal MixedUniverse::ideal_of_max(const MixedMax& m) const {
    return ideal_of_mixed_max(ext_.A, m, tail_maxes());
}

bool MixedUniverse::is_unit_ideal(const Ideal& a) const {
    for (const auto& s : a.slots)
        if (!s.is_one()) return false;
    return a.tail.elements == ext_.A.tail->elements();
}

bool MixedUniverse::is_zero_ideal(const Ideal& a) const {
    for (const auto& s : a.slots)
        if (!s.zero) return false;
    return a.tail.is_zero();
}

BRegularity MixedUniverse::b_regular(const Ideal& s) const {
    BRegularity out;
    // S B = B componentwise: q Q = Q iff q != 0; ideal tail times F is the
    // tail itself, so the tail must already be all of F
    for (std::size_t i = 0; i < ext_.A.r(); ++i)
        if (s.slots[i].zero) return out;
    if (!(s.tail.elements == ext_.A.tail->elements())) return out;
    out.holds = true;
    json combo = json::array();
    for (std::size_t i = 0; i < ext_.A.r(); ++i) {
        auto q = fac_to_rat(s.slots[i]);
        if (!q) fail(errc::size_cap_exceeded, "certificate value overflow");
        MixedElem se = mixed_zero(ext_.A);
        se.slots[i] = *q;
        MixedElem be = mixed_zero(ext_.A);
        be.slots[i] = rat_div(Rat64(1), *q);
        combo.push_back(json{{"coeff", "1"}, {"s", elem_str(ext_.A, se)}, {"b", elem_str(ext_.A, be)}});
    }
    if (!ext_.A.tail_trivial()) {
        MixedElem te = mixed_zero(ext_.A);
        te.tail = ext_.A.tail->one();
        combo.push_back(json{{"coeff", "1"}, {"s", elem_str(ext_.A, te)}, {"b", elem_str(ext_.A, te)}});
    }
    out.certificate = json{{"one_as_combination", std::move(combo)}};
    return out;
}

bool MixedUniverse::localized_is_principal(const Ideal& a, const MixedMax& m) const {
    if (!m.is_tail) return true; // valuation slots: p^v Z_(p) or zero
    return local_image_principal(tail_local(m.tail_idx), a.tail);
}

LocalFlat MixedUniverse::localized_flat(const Ideal& a, const MixedMax& m) const {
    LocalFlat out;
    if (!m.is_tail) {
        out.ok = true;
        out.zero = a.slots[m.slot].zero;
        if (!out.zero)
            out.detail = json{{"valuation", a.slots[m.slot].exp_of(m.p)}};
        return out;
    }
    return local_image_flat(tail_local(m.tail_idx), a.tail);
}

MixedLocalized MixedUniverse::localize_ideal(const Ideal& a, const MixedMax& m) const {
    MixedLocalized out;
    if (!m.is_tail) {
        const Factored& f = a.slots[m.slot];
        out.slot_valuation = f.zero ? INT32_MAX : f.exp_of(m.p);
        return out;
    }
    out.is_tail = true;
    out.tail_classes = tail_local(m.tail_idx).image(a.tail);
    return out;
}

bool MixedUniverse::localized_equal(const Ideal& a, const Ideal& b, const MixedMax& m) const {
    if (!m.is_tail) {
        const Factored& fa = a.slots[m.slot];
        const Factored& fb = b.slots[m.slot];
        if (fa.zero || fb.zero) return fa.zero == fb.zero;
        return fa.exp_of(m.p) == fb.exp_of(m.p);
    }
    const LocalRing& loc = tail_local(m.tail_idx);
    return loc.image(a.tail) == loc.image(b.tail);
}

std::optional<json> MixedUniverse::regular_element(const Ideal& a) const {
    // regular elements have all slot coordinates nonzero and a unit tail
    // coordinate, so a holds one iff every slot is nonzero and the tail
    // component is all of F
    for (const auto& s : a.slots)
        if (s.zero) return std::nullopt;
    if (!(a.tail.elements == ext_.A.tail->elements())) return std::nullopt;
    MixedElem e = mixed_zero(ext_.A);
    for (std::size_t i = 0; i < ext_.A.r(); ++i) {
        auto q = fac_to_rat(a.slots[i]);
        if (!q) fail(errc::size_cap_exceeded, "witness value overflow");
        e.slots[i] = *q;
    }
    e.tail = ext_.A.tail->one();
    return json(elem_str(ext_.A, e));
}

Partition<MixedElem> MixedUniverse::make_partition(const Ideal& s, const Ideal& inv) const {
    Partition<MixedElem> part;
    for (std::size_t i = 0; i < ext_.A.r(); ++i) {
        auto q = fac_to_rat(s.slots[i]);
        if (!q || q->is_zero()) fail(errc::not_invertible, "partition needs nonzero slots");
        MixedElem alpha = mixed_zero(ext_.A);
        alpha.slots[i] = *q;
        MixedElem z = mixed_zero(ext_.A);
        z.slots[i] = rat_div(Rat64(1), *q);
        part.pairs.emplace_back(std::move(alpha), std::move(z));
    }
    if (!ext_.A.tail_trivial()) {
        MixedElem te = mixed_zero(ext_.A);
        te.tail = ext_.A.tail->one();
        part.pairs.emplace_back(te, te);
    }
    return part;
}

bool MixedUniverse::verify_partition(const Ideal& s, const Ideal& inv,
                                     const Partition<MixedElem>& p) const {
    MixedElem acc = mixed_zero(ext_.A);
    auto gens = mixed_generators(ext_.A, s);
    for (const auto& [alpha, z] : p.pairs) {
        if (!elem_in_ideal(ext_.A, alpha, s)) return false;
        for (const auto& g : gens)
            if (!elem_in_A(ext_.A, mixed_mul(ext_.A, z, g))) return false;
        acc = mixed_add(ext_.A, acc, mixed_mul(ext_.A, alpha, z));
    }
    return acc == mixed_one(ext_.A);
}

json MixedUniverse::ideal_json(const Ideal& a) const {
    json slots = json::array();
    for (const auto& s : a.slots) slots.push_back(fac_str(s));
    json tail_gens = json::array();
    for (Packed g : a.tail.generators) {
        json coords = json::array();
        for (const auto& c : ext_.A.tail->ambient().unpack(g)) coords.push_back(c);
        tail_gens.push_back(coords);
    }
    json j;
    j["slots"] = std::move(slots);
    if (!ext_.A.tail_trivial()) {
        j["tail_generators"] = std::move(tail_gens);
        j["tail_size"] = a.tail.elements.size();
    }
    j["display"] = mixed_ideal_str(ext_.A, a);
    return j;
}

json MixedUniverse::max_json(const MixedMax& m) const {
    if (!m.is_tail) return json{{"slot", m.slot}, {"prime", m.p}};
    json gens = json::array();
    for (Packed g : tail_maxes()[m.tail_idx].ideal.generators) {
        json coords = json::array();
        for (const auto& c : ext_.A.tail->ambient().unpack(g)) coords.push_back(c);
        gens.push_back(coords);
    }
    return json{{"tail_maximal", gens}};
}

json MixedUniverse::elem_json(const MixedElem& e) const { return json(elem_str(ext_.A, e)); }

json MixedUniverse::partition_json(const Partition<MixedElem>& p) const {
    json pairs = json::array();
    for (const auto& [alpha, z] : p.pairs)
        pairs.push_back(json{{"alpha", elem_json(alpha)}, {"z", elem_json(z)}});
    return json{{"pairs", pairs}};
}

const std::vector<MixedUniverse::Ideal>& MixedUniverse::test_ideals() const {
    if (ideals_) return *ideals_;
    // deterministic slot value pool: products of small primes, capped by the
    // sweep bounds
    std::vector<std::int64_t> pool_raw = {
        1,  2,  3,  4,  5,   6,   7,   8,   9,   12,  14,  15,  16,  18,   20,  21,
        24, 25, 27, 28, 30,  35,  36,  40,  45,  48,  49,  50,  56,  60,   63,  72,
        75, 80, 98, 99, 100, 125, 147, 175, 180, 245, 294, 315, 350, 441,  450, 500,
        720, 875, 1125, 2250, 4500, 9000};
    std::vector<Factored> pool;
    for (std::int64_t n : pool_raw) {
        if (n > cfg_.numerator_bound) continue;
        Factored f = factored_from_integer(n, cfg_.factor_bound);
        if (int(f.exps.size()) > cfg_.max_distinct_primes) continue;
        pool.push_back(std::move(f));
    }
    // tail ideals
    std::vector<Submodule> tails = enumerate_ideals(ext_.A.tail);
    // odometer over (slot choices, tail choice), truncated
    std::vector<Ideal> out;
    std::vector<std::size_t> idx(ext_.A.r(), 0);
    std::size_t tail_i = 0;
    for (;;) {
        std::vector<Factored> slots;
        for (std::size_t i = 0; i < ext_.A.r(); ++i) slots.push_back(pool[idx[i]]);
        Ideal a = mixed_ideal(ext_.A, std::move(slots), tails[tail_i]);
        bool dup = false;
        for (const auto& prev : out)
            if (prev.same_as(a)) { dup = true; break; }
        if (!dup) out.push_back(std::move(a));
        if (out.size() >= cfg_.max_ideals) break;
        // advance odometer: tail fastest, then slots
        if (++tail_i < tails.size()) continue;
        tail_i = 0;
        std::size_t i = 0;
        for (; i < idx.size(); ++i) {
            if (++idx[i] < pool.size()) break;
            idx[i] = 0;
        }
        if (i == idx.size()) break;
    }
    ideals_ = std::move(out);
    return *ideals_;
}

bool MixedUniverse::support_is_finite(const Ideal& a) const {
    for (const auto& s : a.slots)
        if (s.zero) return false;
    return true;
}

std::vector<MixedMax> MixedUniverse::support(const Ideal& a) const {
    auto sup = mixed_support(ext_.A, a);
    if (!sup.finite) fail(errc::not_integral, "infinite support (zero slot component)");
    return sup.maxes;
}

} // namespace extalg

namespace extalg {

MixedUniverse::Ideal MixedUniverse::principal_ideal(const MixedElem& e) const {
    return mixed_ideal_from_elements(ext_.A, {e});
}

MixedUniverse::Ideal MixedUniverse::regular_part(const Ideal& b) const {
    auto gens = mixed_generators(ext_.A, b);
    if (gens.empty()) fail(errc::no_regular_subideal, "empty generator list");
    for (std::size_t k = 1; k <= gens.size(); ++k) {
        std::vector<MixedElem> prefix(gens.begin(), gens.begin() + k);
        Ideal sub = mixed_ideal_from_elements(ext_.A, prefix);
        if (b_regular(sub).holds) return sub;
    }
    fail(errc::no_regular_subideal, "no B-regular generating prefix");
}

} // namespace extalg
