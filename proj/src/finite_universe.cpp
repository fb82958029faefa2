#include "extalg/finite_universe.hpp"

#include <set>
#include <unordered_map>
#include <unordered_set>

namespace extalg {

FiniteUniverse::FiniteUniverse(ExtensionHandle ext, std::size_t ideal_cap)
    : ext_(std::move(ext)), ideal_cap_(ideal_cap) {}

void FiniteUniverse::ensure_maxes() const {
    if (!maxes_) {
        maxes_ = maximal_ideals(ext_.A);
        locals_.resize(maxes_->size());
        brackets_.resize(maxes_->size());
    }
}

std::size_t FiniteUniverse::max_count() const {
    ensure_maxes();
    return maxes_->size();
}

std::vector<std::size_t> FiniteUniverse::test_maxes(const Ideal&) const {
    std::vector<std::size_t> out(max_count());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
}

const PrimeSpot& FiniteUniverse::max_spot(std::size_t i) const {
    ensure_maxes();
    return (*maxes_)[i];
}

FiniteUniverse::Ideal FiniteUniverse::ideal_of_max(std::size_t i) const {
    return max_spot(i).ideal;
}

const LocalRing& FiniteUniverse::local(std::size_t i) const {
    ensure_maxes();
    if (!locals_[i]) locals_[i].emplace(ext_.A, (*maxes_)[i].ideal);
    return *locals_[i];
}

FiniteUniverse::Ideal FiniteUniverse::unit_ideal() const {
    Submodule s;
    s.owner = ext_.A;
    s.carrier = ext_.A;
    s.elements = ext_.A->elements();
    s.generators = {ext_.A->one()};
    return s;
}

FiniteUniverse::Ideal FiniteUniverse::zero_ideal() const {
    return submodule_closure(ext_.A, ext_.A, {});
}

bool FiniteUniverse::is_unit_ideal(const Ideal& a) const {
    return a.elements == ext_.A->elements();
}

FiniteUniverse::Ideal FiniteUniverse::ideal_sum(const Ideal& a, const Ideal& b) const {
    if (a.carrier->same_elements(*b.carrier)) return module_sum(a, b);
    return module_sum(lift_to_B(a), lift_to_B(b));
}

FiniteUniverse::Ideal FiniteUniverse::ideal_product(const Ideal& a, const Ideal& b) const {
    if (a.carrier->same_elements(*b.carrier)) return module_product(a, b);
    return module_product(lift_to_B(a), lift_to_B(b));
}

FiniteUniverse::Ideal FiniteUniverse::colon_in_A(const Ideal& a, const Ideal& b) const {
    return colon_within(a, b, ext_.A);
}

const Submodule& FiniteUniverse::B_as_module() const {
    if (!b_module_) b_module_ = carrier_as_module(ext_.A, ext_.B);
    return *b_module_;
}

const Submodule& FiniteUniverse::A_as_submodule_of_B() const {
    if (!a_in_b_) {
        Submodule s;
        s.owner = ext_.A;
        s.carrier = ext_.B;
        s.elements = ext_.A->elements();
        s.generators = {ext_.A->one()};
        a_in_b_ = std::move(s);
    }
    return *a_in_b_;
}

FiniteUniverse::Ideal FiniteUniverse::lift_to_B(const Ideal& a) const {
    if (a.carrier == ext_.B || a.carrier->same_elements(*ext_.B)) return a;
    Submodule s;
    s.owner = ext_.A;
    s.carrier = ext_.B;
    s.elements = a.elements;
    s.generators = a.generators;
    return s;
}

FiniteUniverse::Ideal FiniteUniverse::colon_A_by(const Ideal& s) const {
    return colon(A_as_submodule_of_B(), lift_to_B(s));
}

BRegularity FiniteUniverse::b_regular(const Ideal& s) const {
    Ideal sb = lift_to_B(s);
    const Submodule& bm = B_as_module();
    // span of pairwise generator products with certificates, to extract a
    // finite combination sum s_i b_i = 1
    std::vector<Packed> gens;
    std::vector<std::pair<Packed, Packed>> origin;
    for (Packed x : sb.generators)
        for (Packed y : bm.generators) {
            gens.push_back(ext_.B->mul(x, y));
            origin.emplace_back(x, y);
        }
    auto span = span_with_certificates(ext_.A, ext_.B, gens);
    BRegularity out;
    out.holds = span.elements == ext_.B->elements();
    if (out.holds) {
        json combo = json::array();
        for (const auto& [gi, coeff] : span.expr.at(ext_.B->one()).terms) {
            combo.push_back(json{{"coeff", elem_json(coeff)},
                                 {"s", elem_json(origin[gi].first)},
                                 {"b", elem_json(origin[gi].second)}});
        }
        out.certificate = json{{"one_as_combination", std::move(combo)}};
    }
    return out;
}

bool local_image_principal(const LocalRing& loc, const Submodule& a) {
    auto img = loc.image(a);
    for (auto g : img)
        if (loc.principal(g) == img) return true;
    return false;
}

LocalFlat local_image_flat(const LocalRing& loc, const Submodule& a) {
    auto img = loc.image(a);
    LocalFlat out;
    if (img.size() == 1 && img[0] == loc.zero_class()) {
        out.ok = true;
        out.zero = true;
        return out;
    }
    for (auto g : img) {
        if (g == loc.zero_class()) continue;
        if (loc.principal(g) != img) continue;
        auto ann = loc.annihilator(g);
        if (ann.size() == 1 && ann[0] == loc.zero_class()) {
            out.ok = true;
            out.detail = json{{"free_generator_class", loc.rep(g)}};
            return out;
        }
    }
    // distinguish the two failure modes for the report
    bool principal = false;
    for (auto g : img)
        if (loc.principal(g) == img) { principal = true; break; }
    out.ok = false;
    out.detail = principal ? json{{"reason", "generator_has_nonzero_annihilator"}}
                           : json{{"reason", "not_principal_locally"}};
    return out;
}

bool FiniteUniverse::localized_is_principal(const Ideal& a, std::size_t i) const {
    return local_image_principal(local(i), a);
}

LocalFlat FiniteUniverse::localized_flat(const Ideal& a, std::size_t i) const {
    return local_image_flat(local(i), a);
}

bool FiniteUniverse::localized_equal(const Ideal& a, const Ideal& b, std::size_t i) const {
    const LocalRing& loc = local(i);
    return loc.image(a) == loc.image(b);
}

std::optional<json> FiniteUniverse::regular_element(const Ideal& a) const {
    for (Packed e : a.elements)
        if (!ext_.A->is_zero_divisor(e)) return elem_json(e);
    return std::nullopt;
}

Partition<Packed> FiniteUniverse::make_partition(const Ideal& s, const Ideal& inv) const {
    Ideal sb = lift_to_B(s);
    std::vector<Packed> gens;
    std::vector<std::pair<Packed, Packed>> origin;
    for (Packed x : sb.generators)
        for (Packed y : inv.generators) {
            gens.push_back(ext_.B->mul(x, y));
            origin.emplace_back(x, y);
        }
    auto span = span_with_certificates(ext_.A, ext_.B, gens);
    auto it = span.expr.find(ext_.B->one());
    if (it == span.expr.end())
        fail(errc::not_invertible, "1 is not in S*[A:S]");
    Partition<Packed> part;
    for (const auto& [gi, coeff] : it->second.terms) {
        // alpha = coeff * s stays in S; z = the [A:S] generator
        Packed alpha = ext_.B->mul(coeff, origin[gi].first);
        part.pairs.emplace_back(alpha, origin[gi].second);
    }
    return part;
}

bool FiniteUniverse::verify_partition(const Ideal& s, const Ideal& inv,
                                      const Partition<Packed>& p) const {
    Ideal sb = lift_to_B(s);
    Packed acc = ext_.B->zero();
    for (const auto& [alpha, z] : p.pairs) {
        if (!sb.contains(alpha)) return false;
        // z S <= A
        for (Packed g : sb.generators)
            if (!ext_.A->contains(ext_.B->mul(z, g))) return false;
        acc = ext_.B->add(acc, ext_.B->mul(alpha, z));
    }
    return acc == ext_.B->one();
}

json FiniteUniverse::elem_json(Packed e) const {
    json coords = json::array();
    for (const auto& c : ext_.B->ambient().unpack(e)) coords.push_back(c);
    return coords;
}

json FiniteUniverse::ideal_json(const Ideal& a) const {
    json gens = json::array();
    for (Packed g : a.generators) gens.push_back(elem_json(g));
    return json{{"generators", gens}, {"size", a.elements.size()}};
}

json FiniteUniverse::max_json(std::size_t i) const { return ideal_json(ideal_of_max(i)); }

json FiniteUniverse::partition_json(const Partition<Packed>& p) const {
    json pairs = json::array();
    for (const auto& [alpha, z] : p.pairs)
        pairs.push_back(json{{"alpha", elem_json(alpha)}, {"z", elem_json(z)}});
    return json{{"pairs", pairs}};
}

const std::vector<FiniteUniverse::Ideal>& FiniteUniverse::test_ideals() const {
    if (!ideals_) ideals_ = enumerate_ideals(ext_.A, ideal_cap_);
    return *ideals_;
}

std::vector<std::size_t> FiniteUniverse::support(const Ideal& a) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < max_count(); ++i)
        if (a.subset_of(ideal_of_max(i))) out.push_back(i);
    return out;
}

bool FiniteUniverse::max_extends_to_B(std::size_t i) const {
    Ideal mb = module_product(lift_to_B(ideal_of_max(i)), B_as_module());
    return mb.elements == ext_.B->elements();
}

RingPtr FiniteUniverse::bracket_localization(std::size_t i) const {
    ensure_maxes();
    if (!brackets_[i]) brackets_[i] = generalized_localization(ext_, (*maxes_)[i].ideal);
    return *brackets_[i];
}

Submodule FiniteUniverse::bracket_prime(std::size_t i) const {
    return generalized_prime(ext_, max_spot(i).ideal, bracket_localization(i));
}

// --- flatness oracle --------------------------------------------------------

namespace {

// odometer over index tuples of width n with radix `radix`
struct Odometer {
    std::vector<std::size_t> digits;
    std::size_t radix;
    bool done = false;

    Odometer(std::size_t n, std::size_t r) : digits(n, 0), radix(r) { done = (r == 0); }
    void next() {
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (++digits[i] < radix) return;
            digits[i] = 0;
        }
        done = true;
    }
};

} // namespace

PropertyVerdict flatness_oracle(const FiniteUniverse& u, const Submodule& a,
                                std::size_t ring_cap) {
    const RingPtr& A = u.A();
    if (A->size() > ring_cap)
        fail(errc::size_cap_exceeded, "flatness oracle cap exceeded: ring has " +
                                          std::to_string(A->size()) + " elements");
    const Ambient& amb = A->ambient();

    for (const Submodule& b : u.test_ideals()) {
        const auto& gens = b.generators;
        std::size_t n = gens.size();
        if (n == 0) continue; // a (x) 0 = 0
        if (n > 4) fail(errc::size_cap_exceeded, "oracle presentation too wide");

        // relation module R = ker(A^n -> b)
        std::vector<std::vector<Packed>> relations;
        for (Odometer od(n, A->size()); !od.done; od.next()) {
            Packed sum = amb.zero();
            for (std::size_t i = 0; i < n; ++i)
                sum = amb.add(sum, amb.mul(A->elements()[od.digits[i]], gens[i]));
            if (sum == amb.zero()) {
                std::vector<Packed> t(n);
                for (std::size_t i = 0; i < n; ++i) t[i] = A->elements()[od.digits[i]];
                relations.push_back(std::move(t));
            }
        }

        // N = additive subgroup of a^n generated by { u*r : u in a, r in R }
        std::set<std::vector<Packed>> N;
        std::vector<std::vector<Packed>> gen_vecs;
        std::size_t work = 0; // closure steps; loud failure on true blowup
        for (const auto& r : relations)
            for (Packed ua : a.elements) {
                std::vector<Packed> v(n);
                bool nonzero = false;
                for (std::size_t i = 0; i < n; ++i) {
                    v[i] = amb.mul(ua, r[i]);
                    nonzero |= v[i] != amb.zero();
                }
                if (nonzero) gen_vecs.push_back(std::move(v));
            }
        std::vector<std::vector<Packed>> frontier = {std::vector<Packed>(n, amb.zero())};
        N.insert(frontier[0]);
        for (std::size_t qi = 0; qi < frontier.size(); ++qi) {
            auto cur = frontier[qi];
            for (const auto& g : gen_vecs) {
                if (++work > 200000000)
                    fail(errc::size_cap_exceeded, "oracle subgroup closure too large");
                std::vector<Packed> nx(n);
                for (std::size_t i = 0; i < n; ++i) nx[i] = amb.add(cur[i], g[i]);
                if (N.insert(nx).second) frontier.push_back(std::move(nx));
            }
        }

        // kernel of the multiplication map on a^n must equal N
        for (Odometer od(n, a.elements.size()); !od.done; od.next()) {
            std::vector<Packed> t(n);
            Packed sum = amb.zero();
            for (std::size_t i = 0; i < n; ++i) {
                t[i] = a.elements[od.digits[i]];
                sum = amb.add(sum, amb.mul(t[i], gens[i]));
            }
            if (sum != amb.zero()) continue;
            if (!N.count(t)) {
                PropertyVerdict v = make_verdict("flat_oracle", false);
                json tensor = json::array();
                for (std::size_t i = 0; i < n; ++i)
                    tensor.push_back(json{{"a", u.elem_json(t[i])}, {"b", u.elem_json(gens[i])}});
                v.witness = json{{"ideal_b", u.ideal_json(b)},
                                 {"nonzero_tensor_mapping_to_zero", tensor}};
                return v;
            }
        }
    }
    return make_verdict("flat_oracle", true);
}

} // namespace extalg

namespace extalg {

FiniteUniverse::Ideal FiniteUniverse::principal_ideal(Packed e) const {
    return submodule_closure(ext_.A, ext_.A, {e});
}

FiniteUniverse::Ideal FiniteUniverse::regular_part(const Ideal& b) const {
    if (b.generators.empty()) fail(errc::no_regular_subideal, "empty generator list");
    for (std::size_t k = 1; k <= b.generators.size(); ++k) {
        std::vector<Packed> prefix(b.generators.begin(), b.generators.begin() + k);
        Ideal sub = submodule_closure(ext_.A, ext_.A, prefix);
        if (b_regular(sub).holds) return sub;
    }
    fail(errc::no_regular_subideal, "no B-regular generating prefix");
}

} // namespace extalg
