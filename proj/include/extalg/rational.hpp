#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "extalg/errors.hpp"

namespace extalg {

// Exact small rationals for ring elements and witnesses. All arithmetic is
// overflow-checked through 128-bit intermediates; corpus values stay tiny.
struct Rat64 {
    std::int64_t num = 0;
    std::int64_t den = 1; // > 0, gcd(num, den) = 1

    Rat64() = default;
    Rat64(std::int64_t n) : num(n), den(1) {}
    Rat64(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) fail(errc::invalid_component, "zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    friend bool operator==(const Rat64&, const Rat64&) = default;

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

namespace detail {
inline std::int64_t check_narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) fail(errc::size_cap_exceeded, "rational overflow");
    return std::int64_t(v);
}
} // namespace detail

inline Rat64 rat_add(const Rat64& a, const Rat64& b) {
    __int128 n = (__int128)a.num * b.den + (__int128)b.num * a.den;
    __int128 d = (__int128)a.den * b.den;
    __int128 g = 1;
    {
        __int128 x = n < 0 ? -n : n, y = d;
        while (y) { __int128 t = x % y; x = y; y = t; }
        g = x == 0 ? 1 : x;
    }
    return Rat64(detail::check_narrow(n / g), detail::check_narrow(d / g));
}

inline Rat64 rat_neg(const Rat64& a) { return Rat64(-a.num, a.den); }
inline Rat64 rat_sub(const Rat64& a, const Rat64& b) { return rat_add(a, rat_neg(b)); }

inline Rat64 rat_mul(const Rat64& a, const Rat64& b) {
    std::int64_t g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
    std::int64_t g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
    __int128 n = (__int128)(a.num / g1) * (b.num / g2);
    __int128 d = (__int128)(a.den / g2) * (b.den / g1);
    return Rat64(detail::check_narrow(n), detail::check_narrow(d));
}

inline Rat64 rat_div(const Rat64& a, const Rat64& b) {
    if (b.is_zero()) fail(errc::invalid_component, "division by zero");
    return rat_mul(a, Rat64(b.den, b.num));
}

// p-adic valuation; INT32_MAX stands in for v(0) = infinity
inline int vp(std::int64_t n, std::int64_t p) {
    if (n == 0) return INT32_MAX;
    if (n < 0) n = -n;
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

inline int rat_vp(const Rat64& r, std::int64_t p) {
    if (r.is_zero()) return INT32_MAX;
    return vp(r.num, p) - vp(r.den, p);
}

} // namespace extalg
