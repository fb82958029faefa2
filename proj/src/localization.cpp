#include "extalg/localization.hpp"

#include <unordered_set>

namespace extalg {

bool is_prime_ideal(const RingPtr& A, const Submodule& p) {
    if (p.elements == A->elements()) return false; // proper
    for (Packed x : A->elements()) {
        if (p.contains(x)) continue;
        for (Packed y : A->elements()) {
            if (p.contains(y)) continue;
            if (p.contains(A->mul(x, y))) return false;
        }
    }
    return true;
}

bool is_maximal_ideal(const RingPtr& A, const Submodule& m) {
    if (m.elements == A->elements()) return false;
    for (Packed x : A->elements()) {
        if (m.contains(x)) continue;
        Submodule grown = module_sum(m, submodule_closure(A, A, {x}));
        if (grown.elements != A->elements()) return false;
    }
    return true;
}

std::vector<PrimeSpot> maximal_ideals(const RingPtr& A) {
    // idempotents
    std::vector<Packed> idem;
    for (Packed e : A->elements())
        if (A->mul(e, e) == e && e != A->zero()) idem.push_back(e);
    // primitive = minimal nonzero under e <= f iff ef = e
    std::vector<Packed> prim;
    for (Packed e : idem) {
        bool minimal = true;
        for (Packed f : idem) {
            if (f == e) continue;
            if (A->mul(e, f) == f) { minimal = false; break; } // f < e
        }
        if (minimal) prim.push_back(e);
    }
    std::vector<PrimeSpot> out;
    for (Packed e : prim) {
        std::vector<Packed> elems;
        for (Packed a : A->elements())
            if (A->is_nilpotent(A->mul(a, e))) elems.push_back(a);
        std::sort(elems.begin(), elems.end());
        Submodule m;
        m.owner = A;
        m.carrier = A;
        m.elements = std::move(elems);
        m.generators = reduce_generators(A, A, m.elements);
        out.push_back(PrimeSpot{std::move(m), PrimeSpot::Kind::maximal});
    }
    std::sort(out.begin(), out.end(), [](const PrimeSpot& a, const PrimeSpot& b) {
        return a.ideal.elements < b.ideal.elements;
    });
    return out;
}

std::vector<Submodule> enumerate_ideals(const RingPtr& A, std::size_t max_count) {
    // distinct principal ideals first
    std::vector<Submodule> principals;
    std::unordered_set<std::size_t> seen_sizes_unused;
    std::vector<std::vector<Packed>> seen_sets;
    for (Packed a : A->elements()) {
        std::vector<Packed> elems;
        for (Packed x : A->elements()) elems.push_back(A->mul(x, a));
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        bool dup = false;
        for (const auto& s : seen_sets)
            if (s == elems) { dup = true; break; }
        if (dup) continue;
        seen_sets.push_back(elems);
        Submodule s;
        s.owner = A;
        s.carrier = A;
        s.generators = {a};
        s.elements = std::move(elems);
        principals.push_back(std::move(s));
    }
    // BFS over sums of principal ideals
    std::vector<Submodule> out;
    std::unordered_set<std::string> visited;
    auto key = [](const std::vector<Packed>& v) {
        std::string k;
        k.reserve(v.size() * 8);
        for (Packed e : v) k.append(reinterpret_cast<const char*>(&e), sizeof(e));
        return k;
    };
    std::vector<Submodule> queue = {submodule_closure(A, A, {})};
    visited.insert(key(queue[0].elements));
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Submodule cur = queue[qi];
        out.push_back(cur);
        if (out.size() > max_count)
            fail(errc::size_cap_exceeded, "ideal enumeration exceeded cap");
        for (const auto& p : principals) {
            if (p.subset_of(cur)) continue;
            Submodule next = module_sum(cur, p);
            auto k = key(next.elements);
            if (visited.insert(k).second) queue.push_back(std::move(next));
        }
    }
    std::sort(out.begin(), out.end(), [](const Submodule& a, const Submodule& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    for (auto& s : out) s.generators = reduce_generators(A, A, s.elements);
    return out;
}

LocalRing::LocalRing(RingPtr base, Submodule m) : base_(std::move(base)), m_(std::move(m)) {
    if (!is_maximal_ideal(base_, m_)) fail(errc::not_maximal, "localization needs a maximal ideal");
    // K_m = { a : s a = 0 for some s outside m }
    std::vector<Packed> outside;
    for (Packed s : base_->elements())
        if (!m_.contains(s)) outside.push_back(s);
    for (Packed a : base_->elements()) {
        for (Packed s : outside) {
            if (base_->mul(s, a) == base_->zero()) { kernel_.push_back(a); break; }
        }
    }
    std::sort(kernel_.begin(), kernel_.end());
    // cosets a + K
    std::unordered_map<Packed, Packed> min_rep; // element -> coset min
    for (Packed a : base_->elements()) {
        Packed mn = a;
        for (Packed k : kernel_) {
            Packed e = base_->add(a, k);
            if (e < mn) mn = e;
        }
        min_rep[a] = mn;
    }
    std::unordered_set<Packed> reps_set;
    for (auto& [a, r] : min_rep) reps_set.insert(r);
    reps_.assign(reps_set.begin(), reps_set.end());
    std::sort(reps_.begin(), reps_.end());
    std::unordered_map<Packed, std::uint32_t> rep_idx;
    for (std::uint32_t i = 0; i < reps_.size(); ++i) rep_idx[reps_[i]] = i;
    for (auto& [a, r] : min_rep) cls_[a] = rep_idx[r];
    zero_ = cls_.at(base_->zero());
    one_ = cls_.at(base_->one());
}

std::uint32_t LocalRing::class_of(Packed a) const {
    auto it = cls_.find(a);
    if (it == cls_.end()) fail(errc::invalid_component, "element not in localized ring's base");
    return it->second;
}

bool LocalRing::is_unit_class(std::uint32_t a) const {
    for (std::uint32_t b = 0; b < reps_.size(); ++b)
        if (mul(a, b) == one_) return true;
    return false;
}

std::vector<std::uint32_t> LocalRing::image(const Submodule& s) const {
    std::vector<std::uint32_t> out;
    for (Packed e : s.elements) out.push_back(class_of(e));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::uint32_t> LocalRing::principal(std::uint32_t g) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t q = 0; q < reps_.size(); ++q) out.push_back(mul(q, g));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::uint32_t> LocalRing::annihilator(std::uint32_t g) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t q = 0; q < reps_.size(); ++q)
        if (mul(q, g) == zero_) out.push_back(q);
    return out;
}

LocalRing localize(const RingPtr& A, const Submodule& m) { return LocalRing(A, m); }

std::vector<std::uint32_t> localize_submodule(const Submodule& s, const LocalRing& at) {
    return at.image(s);
}

RingPtr generalized_localization(const ExtensionHandle& ext, const Submodule& p) {
    if (!is_prime_ideal(ext.A, p)) fail(errc::not_prime, "generalized localization needs a prime");
    std::vector<Packed> denoms;
    for (Packed v : ext.A->elements())
        if (!p.contains(v)) denoms.push_back(v);
    std::vector<Packed> elems;
    for (Packed x : ext.B->elements()) {
        for (Packed v : denoms) {
            if (ext.A->contains(ext.B->mul(v, x))) { elems.push_back(x); break; }
        }
    }
    std::sort(elems.begin(), elems.end());
    return std::make_shared<const FiniteRing>(ext.B->ambient_ptr(), std::move(elems));
}

Submodule generalized_prime(const ExtensionHandle& ext, const Submodule& p,
                            const RingPtr& a_bracket) {
    std::vector<Packed> denoms;
    for (Packed v : ext.A->elements())
        if (!p.contains(v)) denoms.push_back(v);
    std::vector<Packed> elems;
    for (Packed x : a_bracket->elements()) {
        for (Packed v : denoms) {
            if (p.contains(ext.B->mul(v, x))) { elems.push_back(x); break; }
        }
    }
    std::sort(elems.begin(), elems.end());
    Submodule out;
    out.owner = a_bracket;
    out.carrier = a_bracket;
    out.elements = std::move(elems);
    out.generators = reduce_generators(a_bracket, a_bracket, out.elements);
    return out;
}

} // namespace extalg
