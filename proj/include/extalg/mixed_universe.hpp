#pragma once

#include "extalg/finite_universe.hpp"
#include "extalg/mixed.hpp"

namespace extalg {

struct MixedSweepConfig {
    std::int64_t numerator_bound = 10000;
    int max_distinct_primes = 3;
    std::size_t max_ideals = 150;
    std::int64_t factor_bound = kDefaultFactorBound;
};

// Capability adapter for the symbolic world A = slots x F inside Q^r x F.
// Slot arithmetic is exponent arithmetic; tail questions delegate to the
// finite machinery. One instance per thread.
class MixedUniverse {
public:
    using Ideal = MixedIdeal;
    using Elem = MixedElem;
    using MaxTok = MixedMax;

    explicit MixedUniverse(MixedExtension ext, MixedSweepConfig cfg = {});

    const MixedRing& A() const { return ext_.A; }
    const MixedExtension& extension() const { return ext_; }
    const MixedSweepConfig& config() const { return cfg_; }

    // --- universe contract -------------------------------------------------
    std::vector<MixedMax> test_maxes(const Ideal& a) const;
    Ideal ideal_of_max(const MixedMax& m) const;

    Ideal unit_ideal() const { return mixed_unit_ideal(ext_.A); }
    Ideal zero_ideal() const { return mixed_zero_ideal(ext_.A); }
    bool is_unit_ideal(const Ideal& a) const;
    bool is_zero_ideal(const Ideal& a) const;
    bool ideal_equal(const Ideal& a, const Ideal& b) const { return a.same_as(b); }
    bool ideal_subset(const Ideal& a, const Ideal& b) const {
        return mixed_subset(ext_.A, a, b);
    }

    Ideal ideal_sum(const Ideal& a, const Ideal& b) const { return mixed_sum(ext_.A, a, b); }
    Ideal ideal_product(const Ideal& a, const Ideal& b) const {
        return mixed_product(ext_.A, a, b);
    }
    Ideal ideal_intersection(const Ideal& a, const Ideal& b) const {
        return mixed_intersection(ext_.A, a, b);
    }
    Ideal colon_in_A(const Ideal& a, const Ideal& b) const {
        return mixed_colon_A(ext_.A, a, b);
    }
    Ideal colon_in_B(const Ideal& a, const Ideal& b) const {
        return mixed_colon_B(ext_.A, a, b);
    }
    Ideal colon_A_by(const Ideal& s) const { return mixed_colon_B(ext_.A, unit_ideal(), s); }

    BRegularity b_regular(const Ideal& s) const;
    bool localized_is_principal(const Ideal& a, const MixedMax& m) const;
    LocalFlat localized_flat(const Ideal& a, const MixedMax& m) const;
    bool localized_equal(const Ideal& a, const Ideal& b, const MixedMax& m) const;
    // the localization itself: a p-adic valuation at slot maximals, the
    // class-set image at tail maximals
    MixedLocalized localize_ideal(const Ideal& a, const MixedMax& m) const;
    std::optional<json> regular_element(const Ideal& a) const;

    Partition<MixedElem> make_partition(const Ideal& s, const Ideal& inv) const;
    bool verify_partition(const Ideal& s, const Ideal& inv, const Partition<MixedElem>& p) const;

    // u + v = 1 with u in b1, v in b2, when the ideals are comaximal
    std::optional<std::pair<MixedElem, MixedElem>> comaximality_certificate(const Ideal& b1,
                                                                            const Ideal& b2) const;
    Ideal principal_ideal(const MixedElem& e) const;
    // ideal generated by the shortest generator prefix whose B-span is B
    Ideal regular_part(const Ideal& b) const;
    bool max_equal(const MixedMax& a, const MixedMax& b) const { return a == b; }

    json ideal_json(const Ideal& a) const;
    json max_json(const MixedMax& m) const;
    json elem_json(const MixedElem& e) const;
    json partition_json(const Partition<MixedElem>& p) const;

    // deterministic bounded sweep of integral ideals
    const std::vector<Ideal>& test_ideals() const;

    bool support_is_finite(const Ideal& a) const;
    std::vector<MixedMax> support(const Ideal& a) const; // requires finite

    // tail caches
    const std::vector<PrimeSpot>& tail_maxes() const;
    const LocalRing& tail_local(std::size_t idx) const;

    const RegularSweep* sweep_cache() const { return sweep_ ? &*sweep_ : nullptr; }
    const RegularSweep& store_sweep(RegularSweep s) const { sweep_ = std::move(s); return *sweep_; }

private:
    MixedExtension ext_;
    MixedSweepConfig cfg_;
    mutable std::optional<std::vector<PrimeSpot>> tail_maxes_;
    mutable std::vector<std::optional<LocalRing>> tail_locals_;
    mutable std::optional<std::vector<Ideal>> ideals_;
    mutable std::optional<RegularSweep> sweep_;
};

} // namespace extalg
