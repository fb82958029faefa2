#pragma once

#include <optional>

#include "extalg/localization.hpp"
#include "extalg/module_props.hpp"

namespace extalg {

// Capability adapter for the explicit finite world. Caches maximal ideals,
// localizations and the ideal lattice per extension. Instances are not
// synchronized: use one per thread (the harness builds one per entry).
class FiniteUniverse {
public:
    using Ideal = Submodule;
    using Elem = Packed;
    using MaxTok = std::size_t;

    explicit FiniteUniverse(ExtensionHandle ext, std::size_t ideal_cap = 4096);

    const ExtensionHandle& extension() const { return ext_; }
    const RingPtr& A() const { return ext_.A; }
    const RingPtr& B() const { return ext_.B; }

    // --- universe contract -------------------------------------------------
    std::size_t max_count() const;
    std::vector<std::size_t> test_maxes(const Ideal&) const; // all maximal ideals
    Ideal ideal_of_max(std::size_t i) const;
    const PrimeSpot& max_spot(std::size_t i) const;
    const LocalRing& local(std::size_t i) const;

    Ideal unit_ideal() const;
    Ideal zero_ideal() const;
    bool is_unit_ideal(const Ideal& a) const;
    bool is_zero_ideal(const Ideal& a) const { return a.is_zero(); }
    bool ideal_equal(const Ideal& a, const Ideal& b) const { return a.elements == b.elements; }
    bool ideal_subset(const Ideal& a, const Ideal& b) const { return a.subset_of(b); }

    Ideal ideal_sum(const Ideal& a, const Ideal& b) const;
    Ideal ideal_product(const Ideal& a, const Ideal& b) const;
    Ideal colon_in_A(const Ideal& a, const Ideal& b) const;
    Ideal colon_A_by(const Ideal& s) const;

    BRegularity b_regular(const Ideal& s) const;
    bool localized_is_principal(const Ideal& a, std::size_t i) const;
    LocalFlat localized_flat(const Ideal& a, std::size_t i) const;
    bool localized_equal(const Ideal& a, const Ideal& b, std::size_t i) const;
    std::optional<json> regular_element(const Ideal& a) const;

    Partition<Elem> make_partition(const Ideal& s, const Ideal& inv) const;
    bool verify_partition(const Ideal& s, const Ideal& inv, const Partition<Elem>& p) const;

    // u + v = 1 with u in b1, v in b2, when the ideals are comaximal
    std::optional<std::pair<Elem, Elem>> comaximality_certificate(const Ideal& b1,
                                                                  const Ideal& b2) const;
    Ideal principal_ideal(Elem e) const;
    // ideal generated by the shortest generator prefix whose B-span is B
    Ideal regular_part(const Ideal& b) const;
    bool max_equal(std::size_t i, std::size_t j) const { return i == j; }

    json ideal_json(const Ideal& a) const;
    json max_json(std::size_t i) const;
    json elem_json(Elem e) const;
    json partition_json(const Partition<Elem>& p) const;

    // every ideal of A (lattice enumeration, count-capped)
    const std::vector<Ideal>& test_ideals() const;

    // maximal ideals containing a
    std::vector<std::size_t> support(const Ideal& a) const;
    bool support_is_finite(const Ideal&) const { return true; }

    // mB = B?
    bool max_extends_to_B(std::size_t i) const;

    // A_[p] and its paired prime, by the membership formula
    RingPtr bracket_localization(std::size_t i) const;
    Submodule bracket_prime(std::size_t i) const;

    // lift an ideal of A to an A-submodule of B (same elements)
    Ideal lift_to_B(const Ideal& a) const;
    const Submodule& B_as_module() const;
    const Submodule& A_as_submodule_of_B() const;

    const RegularSweep* sweep_cache() const { return sweep_ ? &*sweep_ : nullptr; }
    const RegularSweep& store_sweep(RegularSweep s) const { sweep_ = std::move(s); return *sweep_; }

private:
    ExtensionHandle ext_;
    std::size_t ideal_cap_;
    mutable std::optional<std::vector<PrimeSpot>> maxes_;
    mutable std::vector<std::optional<LocalRing>> locals_;
    mutable std::optional<std::vector<Ideal>> ideals_;
    mutable std::optional<Submodule> b_module_;
    mutable std::optional<Submodule> a_in_b_;
    mutable std::vector<std::optional<RingPtr>> brackets_;
    mutable std::optional<RegularSweep> sweep_;

    void ensure_maxes() const;
};

// Shared local tests on quotient images; the mixed universe reuses them for
// its finite tail.
bool local_image_principal(const LocalRing& loc, const Submodule& a);
LocalFlat local_image_flat(const LocalRing& loc, const Submodule& a);

// Brute-force flatness via tensor products: a is flat iff for every ideal b
// the multiplication map a (x) b -> ab is injective. Exact but exponential;
// guarded by a ring-size cap.
PropertyVerdict flatness_oracle(const FiniteUniverse& u, const Submodule& a,
                                std::size_t ring_cap = 36);

} // namespace extalg
