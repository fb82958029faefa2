#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "extalg/submodule.hpp"

namespace extalg {

struct PrimeSpot {
    enum class Kind { prime, maximal };
    Submodule ideal; // over A inside A
    Kind kind = Kind::prime;
};

// x*y in p => x in p or y in p, and p proper.
bool is_prime_ideal(const RingPtr& A, const Submodule& p);
bool is_maximal_ideal(const RingPtr& A, const Submodule& m);

// Complete list of maximal ideals, in ascending order of their element
// vectors. A finite commutative ring splits into local factors; the factors
// are cut out by the primitive idempotents, and a*e nilpotent picks out the
// non-units of the factor at e.
std::vector<PrimeSpot> maximal_ideals(const RingPtr& A);

// Every ideal of A, found by closing sums of principal ideals. Count-capped.
std::vector<Submodule> enumerate_ideals(const RingPtr& A, std::size_t max_count = 4096);

// The localization A_m of a finite (hence artinian) ring, realized as the
// quotient A / K_m with K_m = { a : s a = 0 for some s outside m }.
class LocalRing {
public:
    LocalRing(RingPtr base, Submodule m);

    const RingPtr& base() const { return base_; }
    const Submodule& max_ideal() const { return m_; }
    const std::vector<Packed>& kernel() const { return kernel_; }
    std::size_t size() const { return reps_.size(); }
    const std::vector<Packed>& class_reps() const { return reps_; }

    std::uint32_t class_of(Packed a) const;
    Packed rep(std::uint32_t cls) const { return reps_[cls]; }

    std::uint32_t zero_class() const { return zero_; }
    std::uint32_t one_class() const { return one_; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        return class_of(base_->add(reps_[a], reps_[b]));
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return class_of(base_->mul(reps_[a], reps_[b]));
    }
    bool is_unit_class(std::uint32_t a) const;

    // image of a submodule of A, as a sorted set of class ids
    std::vector<std::uint32_t> image(const Submodule& s) const;

    // classes of the principal ideal generated by class g
    std::vector<std::uint32_t> principal(std::uint32_t g) const;
    std::vector<std::uint32_t> annihilator(std::uint32_t g) const;

private:
    RingPtr base_;
    Submodule m_;
    std::vector<Packed> kernel_;
    std::vector<Packed> reps_; // sorted coset representatives (min of coset)
    std::unordered_map<Packed, std::uint32_t> cls_;
    std::uint32_t zero_ = 0, one_ = 0;
};

LocalRing localize(const RingPtr& A, const Submodule& m);

// image of S in A_m, closed as a module over the quotient (automatic for
// ring-quotient images)
std::vector<std::uint32_t> localize_submodule(const Submodule& s, const LocalRing& at);

// A_[p] = { x in B : v x in A for some v in A \ p }, as a subring of B.
RingPtr generalized_localization(const ExtensionHandle& ext, const Submodule& p);

// { x in B : v x in p for some v in A \ p }: the prime of A_[p] paired with
// it in the Prufer definition.
Submodule generalized_prime(const ExtensionHandle& ext, const Submodule& p,
                            const RingPtr& a_bracket);

} // namespace extalg
