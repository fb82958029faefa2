#include "extalg/factored.hpp"

namespace extalg {

std::map<std::int64_t, int> factor_integer(std::int64_t n, std::int64_t bound) {
    if (n == 0) fail(errc::invalid_component, "cannot factor zero");
    if (n < 0) n = -n;
    std::map<std::int64_t, int> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (p > bound)
            fail(errc::factor_bound_exceeded,
                 "trial division bound " + std::to_string(bound) + " exceeded");
        while (n % p == 0) { out[p]++; n /= p; }
    }
    if (n > 1) out[n]++; // n is prime here: all divisors up to sqrt were tried
    return out;
}

Factored factored_from_integer(std::int64_t n, std::int64_t bound) {
    if (n == 0) return Factored::zero_value();
    Factored f;
    f.exps = factor_integer(n, bound);
    return f;
}

Factored factored_from_rat(const Rat64& r, std::int64_t bound) {
    if (r.is_zero()) return Factored::zero_value();
    Factored f;
    f.exps = factor_integer(r.num, bound);
    for (auto& [p, e] : factor_integer(r.den, bound)) f.exps[p] -= e;
    for (auto it = f.exps.begin(); it != f.exps.end();)
        it = it->second == 0 ? f.exps.erase(it) : std::next(it);
    return f;
}

Factored fac_mul(const Factored& a, const Factored& b) {
    if (a.zero || b.zero) return Factored::zero_value();
    Factored out = a;
    for (auto& [p, e] : b.exps) {
        int v = out.exps[p] += e;
        if (v == 0) out.exps.erase(p);
    }
    return out;
}

Factored fac_div(const Factored& a, const Factored& b) {
    if (b.zero) fail(errc::invalid_component, "division by zero ideal");
    if (a.zero) return Factored::zero_value();
    Factored out = a;
    for (auto& [p, e] : b.exps) {
        int v = out.exps[p] -= e;
        if (v == 0) out.exps.erase(p);
    }
    return out;
}

Factored fac_gcd(const Factored& a, const Factored& b) {
    if (a.zero) return b;
    if (b.zero) return a;
    Factored out;
    for (auto& [p, e] : a.exps) {
        int o = std::min(e, b.exp_of(p));
        if (o != 0) out.exps[p] = o;
    }
    for (auto& [p, e] : b.exps) {
        if (a.exps.count(p)) continue;
        int o = std::min(0, e);
        if (o != 0) out.exps[p] = o;
    }
    return out;
}

Factored fac_lcm(const Factored& a, const Factored& b) {
    if (a.zero || b.zero) return Factored::zero_value();
    Factored out;
    for (auto& [p, e] : a.exps) {
        int o = std::max(e, b.exp_of(p));
        if (o != 0) out.exps[p] = o;
    }
    for (auto& [p, e] : b.exps) {
        if (a.exps.count(p)) continue;
        int o = std::max(0, e);
        if (o != 0) out.exps[p] = o;
    }
    return out;
}

Factored fac_pow(const Factored& a, int k) {
    if (a.zero) return k == 0 ? Factored::one() : Factored::zero_value();
    Factored out;
    if (k == 0) return out;
    for (auto& [p, e] : a.exps) out.exps[p] = e * k;
    return out;
}

Factored fac_clip_nonneg(const Factored& a) {
    if (a.zero) return a;
    Factored out;
    for (auto& [p, e] : a.exps)
        if (e > 0) out.exps[p] = e;
    return out;
}

bool fac_divides(const Factored& b, const Factored& a) {
    // aZ <= bZ
    if (a.zero) return true;
    if (b.zero) return false;
    for (auto& [p, e] : a.exps)
        if (e < b.exp_of(p)) return false;
    for (auto& [p, e] : b.exps)
        if (a.exp_of(p) < e) return false;
    return true;
}

std::optional<Rat64> fac_to_rat(const Factored& a) {
    if (a.zero) return Rat64(0);
    __int128 num = 1, den = 1;
    for (auto& [p, e] : a.exps) {
        for (int i = 0; i < (e > 0 ? e : -e); ++i) {
            if (e > 0)
                num *= p;
            else
                den *= p;
            if (num > INT64_MAX || den > INT64_MAX) return std::nullopt;
        }
    }
    return Rat64(std::int64_t(num), std::int64_t(den));
}

std::string fac_str(const Factored& a) {
    if (a.zero) return "0";
    if (auto r = fac_to_rat(a)) return r->str();
    std::string s;
    for (auto& [p, e] : a.exps) {
        if (!s.empty()) s += "*";
        s += std::to_string(p);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

} // namespace extalg
