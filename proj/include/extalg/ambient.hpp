#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "extalg/errors.hpp"

namespace extalg {

// Elements of an ambient product ring are packed into a single 64-bit code:
// mixed-radix over the components, component 0 least significant. Within a
// component, a residue polynomial c0 + c1 x + ... is coded as
// c0 + c1*p^k + c2*p^(2k). All orderings below are ascending packed code.
using Packed = std::uint64_t;

// One factor ring Z[x]/(p^k, f), f monic of degree d <= 3.
// d = 1 is plain Z/p^k; k = 1 with f irreducible is the field of p^d elements.
struct AmbientComponent {
    std::int64_t p = 0;
    int k = 1;
    std::vector<std::int64_t> f; // coefficients c0..cd, cd == 1
    std::int64_t pk = 0;         // p^k
    int deg = 1;
    std::int64_t card = 0;       // p^(k*deg)

    AmbientComponent(std::int64_t p_, int k_, std::vector<std::int64_t> f_);
};

class Ambient {
public:
    explicit Ambient(std::vector<AmbientComponent> comps);

    std::size_t ncomps() const { return comps_.size(); }
    const AmbientComponent& comp(std::size_t i) const { return comps_[i]; }
    const std::vector<AmbientComponent>& components() const { return comps_; }
    std::uint64_t cardinality() const { return card_; }

    Packed zero() const { return 0; }
    Packed one() const { return one_; }

    Packed add(Packed a, Packed b) const;
    Packed sub(Packed a, Packed b) const;
    Packed neg(Packed a) const;
    Packed mul(Packed a, Packed b) const;

    // packed <-> per-component coefficient vectors
    Packed pack(const std::vector<std::vector<std::int64_t>>& coords) const;
    std::vector<std::vector<std::int64_t>> unpack(Packed a) const;

    bool same_as(const Ambient& other) const; // structural equality
    std::string describe(Packed a) const;

private:
    std::vector<AmbientComponent> comps_;
    std::vector<std::uint64_t> stride_;
    std::uint64_t card_ = 1;
    Packed one_ = 0;

    std::uint64_t comp_code(Packed a, std::size_t i) const {
        return (a / stride_[i]) % std::uint64_t(comps_[i].card);
    }
    std::uint64_t comp_add(std::size_t i, std::uint64_t x, std::uint64_t y) const;
    std::uint64_t comp_neg(std::size_t i, std::uint64_t x) const;
    std::uint64_t comp_mul(std::size_t i, std::uint64_t x, std::uint64_t y) const;
};

using AmbientPtr = std::shared_ptr<const Ambient>;

AmbientPtr make_ambient(std::vector<AmbientComponent> comps);

} // namespace extalg
