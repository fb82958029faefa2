#include "extalg/ambient.hpp"

#include <array>
#include <sstream>

namespace extalg {

namespace {

bool is_prime_small(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

constexpr std::int64_t kMaxComponentCard = std::int64_t(1) << 20;
constexpr std::uint64_t kMaxAmbientCard = std::uint64_t(1) << 62;

} // namespace

AmbientComponent::AmbientComponent(std::int64_t p_, int k_, std::vector<std::int64_t> f_)
    : p(p_), k(k_), f(std::move(f_)) {
    if (!is_prime_small(p)) fail(errc::invalid_component, "p = " + std::to_string(p) + " is not prime");
    if (k < 1) fail(errc::invalid_component, "exponent k must be >= 1");
    if (f.size() < 2 || f.size() > 4) fail(errc::invalid_component, "f must have degree between 1 and 3");
    deg = int(f.size()) - 1;
    pk = 1;
    for (int i = 0; i < k; ++i) {
        pk *= p;
        if (pk > kMaxComponentCard) fail(errc::invalid_component, "p^k too large");
    }
    if (f.back() != 1) fail(errc::invalid_component, "f is not monic");
    for (auto& c : f) c = ((c % pk) + pk) % pk;
    f.back() = 1;
    card = 1;
    for (int i = 0; i < deg; ++i) {
        card *= pk;
        if (card > kMaxComponentCard) fail(errc::invalid_component, "component cardinality too large");
    }
}

Ambient::Ambient(std::vector<AmbientComponent> comps) : comps_(std::move(comps)) {
    stride_.resize(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        stride_[i] = card_;
        unsigned __int128 next = (unsigned __int128)card_ * (unsigned __int128)comps_[i].card;
        if (next > kMaxAmbientCard) fail(errc::invalid_component, "ambient cardinality too large");
        card_ = std::uint64_t(next);
    }
    Packed e = 0;
    for (std::size_t i = 0; i < comps_.size(); ++i) e += stride_[i] * 1; // constant poly 1
    one_ = e;
}

std::uint64_t Ambient::comp_add(std::size_t i, std::uint64_t x, std::uint64_t y) const {
    const auto& c = comps_[i];
    std::uint64_t out = 0, mul = 1;
    for (int j = 0; j < c.deg; ++j) {
        std::int64_t xa = std::int64_t(x % c.pk), ya = std::int64_t(y % c.pk);
        out += std::uint64_t((xa + ya) % c.pk) * mul;
        x /= c.pk; y /= c.pk; mul *= c.pk;
    }
    return out;
}

std::uint64_t Ambient::comp_neg(std::size_t i, std::uint64_t x) const {
    const auto& c = comps_[i];
    std::uint64_t out = 0, mul = 1;
    for (int j = 0; j < c.deg; ++j) {
        std::int64_t xa = std::int64_t(x % c.pk);
        out += std::uint64_t((c.pk - xa) % c.pk) * mul;
        x /= c.pk; mul *= c.pk;
    }
    return out;
}

std::uint64_t Ambient::comp_mul(std::size_t i, std::uint64_t x, std::uint64_t y) const {
    const auto& c = comps_[i];
    std::array<std::int64_t, 3> a{0, 0, 0}, b{0, 0, 0};
    for (int j = 0; j < c.deg; ++j) { a[j] = std::int64_t(x % c.pk); x /= c.pk; }
    for (int j = 0; j < c.deg; ++j) { b[j] = std::int64_t(y % c.pk); y /= c.pk; }
    std::array<std::int64_t, 5> prod{0, 0, 0, 0, 0};
    for (int ja = 0; ja < c.deg; ++ja)
        for (int jb = 0; jb < c.deg; ++jb)
            prod[ja + jb] = (prod[ja + jb] + a[ja] * b[jb]) % c.pk;
    // reduce by the monic modulus: x^deg = -(f[deg-1] x^(deg-1) + ... + f[0])
    for (int j = 2 * c.deg - 2; j >= c.deg; --j) {
        std::int64_t top = prod[j] % c.pk;
        if (top == 0) continue;
        prod[j] = 0;
        for (int t = 0; t < c.deg; ++t) {
            std::int64_t sub = (top * c.f[t]) % c.pk;
            prod[j - c.deg + t] = ((prod[j - c.deg + t] - sub) % c.pk + c.pk) % c.pk;
        }
    }
    std::uint64_t out = 0, mul = 1;
    for (int j = 0; j < c.deg; ++j) { out += std::uint64_t(((prod[j] % c.pk) + c.pk) % c.pk) * mul; mul *= c.pk; }
    return out;
}

Packed Ambient::add(Packed a, Packed b) const {
    Packed out = 0;
    for (std::size_t i = 0; i < comps_.size(); ++i)
        out += comp_add(i, comp_code(a, i), comp_code(b, i)) * stride_[i];
    return out;
}

Packed Ambient::neg(Packed a) const {
    Packed out = 0;
    for (std::size_t i = 0; i < comps_.size(); ++i)
        out += comp_neg(i, comp_code(a, i)) * stride_[i];
    return out;
}

Packed Ambient::sub(Packed a, Packed b) const { return add(a, neg(b)); }

Packed Ambient::mul(Packed a, Packed b) const {
    Packed out = 0;
    for (std::size_t i = 0; i < comps_.size(); ++i)
        out += comp_mul(i, comp_code(a, i), comp_code(b, i)) * stride_[i];
    return out;
}

Packed Ambient::pack(const std::vector<std::vector<std::int64_t>>& coords) const {
    if (coords.size() != comps_.size())
        fail(errc::invalid_component, "coordinate count does not match ambient");
    Packed out = 0;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        const auto& c = comps_[i];
        if (int(coords[i].size()) > c.deg)
            fail(errc::invalid_component, "coordinate degree too large for component");
        std::uint64_t code = 0, mul = 1;
        for (int j = 0; j < c.deg; ++j) {
            std::int64_t v = j < int(coords[i].size()) ? coords[i][j] : 0;
            v = ((v % c.pk) + c.pk) % c.pk;
            code += std::uint64_t(v) * mul;
            mul *= c.pk;
        }
        out += code * stride_[i];
    }
    return out;
}

std::vector<std::vector<std::int64_t>> Ambient::unpack(Packed a) const {
    std::vector<std::vector<std::int64_t>> out(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        const auto& c = comps_[i];
        std::uint64_t code = comp_code(a, i);
        out[i].resize(c.deg);
        for (int j = 0; j < c.deg; ++j) { out[i][j] = std::int64_t(code % c.pk); code /= c.pk; }
    }
    return out;
}

bool Ambient::same_as(const Ambient& other) const {
    if (comps_.size() != other.comps_.size()) return false;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        const auto& a = comps_[i];
        const auto& b = other.comps_[i];
        if (a.p != b.p || a.k != b.k || a.f != b.f) return false;
    }
    return true;
}

std::string Ambient::describe(Packed a) const {
    auto coords = unpack(a);
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ", ";
        os << "[";
        for (std::size_t j = 0; j < coords[i].size(); ++j) {
            if (j) os << " ";
            os << coords[i][j];
        }
        os << "]";
    }
    os << ")";
    return os.str();
}

AmbientPtr make_ambient(std::vector<AmbientComponent> comps) {
    return std::make_shared<const Ambient>(std::move(comps));
}

} // namespace extalg
