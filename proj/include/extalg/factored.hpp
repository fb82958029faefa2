#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "extalg/rational.hpp"

namespace extalg {

constexpr std::int64_t kDefaultFactorBound = 1000000;

// A positive rational in factored form, or zero. All fractional-ideal
// arithmetic in the mixed universe runs on exponent vectors, so no value
// ever needs to be multiplied back together unless a report asks for it.
struct Factored {
    bool zero = false;
    std::map<std::int64_t, int> exps; // prime -> nonzero exponent

    bool is_one() const { return !zero && exps.empty(); }
    bool is_integral() const {
        if (zero) return true;
        for (auto& [p, e] : exps)
            if (e < 0) return false;
        return true;
    }
    int exp_of(std::int64_t p) const {
        auto it = exps.find(p);
        return it == exps.end() ? 0 : it->second;
    }

    friend bool operator==(const Factored&, const Factored&) = default;

    static Factored zero_value() {
        Factored f;
        f.zero = true;
        return f;
    }
    static Factored one() { return Factored{}; }
};

// trial division; loud failure past the bound
std::map<std::int64_t, int> factor_integer(std::int64_t n,
                                           std::int64_t bound = kDefaultFactorBound);

Factored factored_from_integer(std::int64_t n, std::int64_t bound = kDefaultFactorBound);
Factored factored_from_rat(const Rat64& r, std::int64_t bound = kDefaultFactorBound);

Factored fac_mul(const Factored& a, const Factored& b);
Factored fac_div(const Factored& a, const Factored& b); // b nonzero
Factored fac_gcd(const Factored& a, const Factored& b); // min exponents; gcd(x,0)=x
Factored fac_lcm(const Factored& a, const Factored& b); // max exponents; lcm(x,0)=0
Factored fac_pow(const Factored& a, int k);
Factored fac_clip_nonneg(const Factored& a); // drop negative exponents

// a <= b as fractional ideals aZ <= bZ, i.e. v_p(a) >= v_p(b) for all p
bool fac_divides(const Factored& b, const Factored& a);

std::optional<Rat64> fac_to_rat(const Factored& a); // nullopt on overflow
std::string fac_str(const Factored& a);

} // namespace extalg
