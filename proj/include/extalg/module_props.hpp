#pragma once

// Predicates on ideals and submodules in a ring extension A <= B, written
// against a universe capability contract shared by the finite enumeration
// world and the symbolic mixed world. A universe type U provides:
//
//   types   Ideal, Elem, MaxTok
//   vector<MaxTok>       test_maxes(a)    finite set of maximal ideals such
//                                         that outside it the localization
//                                         of a is the unit ideal and the
//                                         product a*m differs from a
//   Ideal                ideal_of_max(m)
//   bool                 is_unit_ideal(a), is_zero_ideal(a)
//   bool                 ideal_equal(a, b), ideal_subset(a, b)
//   Ideal                ideal_sum(a, b), ideal_product(a, b)
//   Ideal                colon_in_A(a, b), colon_A_by(s)
//   BRegularity          b_regular(s)
//   bool                 localized_is_principal(a, m)
//   LocalFlat            localized_flat(a, m)
//   bool                 localized_equal(a, b, m)
//   optional<json>       regular_element(a)
//   Partition<Elem>      make_partition(s, inverse)
//   bool                 verify_partition(s, inverse, part)
//   json                 ideal_json(a), max_json(m), partition_json(p)

#include <optional>

#include "extalg/errors.hpp"
#include "extalg/verdict.hpp"

namespace extalg {

template <class U>
PropertyVerdict is_B_regular(const U& u, const typename U::Ideal& s) {
    auto reg = u.b_regular(s);
    PropertyVerdict v = make_verdict("B_regular", reg.holds);
    if (reg.holds)
        v.witness = reg.certificate;
    else
        v.witness = json{{"ideal", u.ideal_json(s)}};
    return v;
}

template <class U>
struct InvertibilityResult {
    PropertyVerdict verdict;
    typename U::Ideal inverse; // [A : S] either way
};

template <class U>
InvertibilityResult<U> is_B_invertible(const U& u, const typename U::Ideal& s) {
    auto inv = u.colon_A_by(s);
    auto prod = u.ideal_product(s, inv);
    bool holds = u.is_unit_ideal(prod);
    PropertyVerdict v = make_verdict("B_invertible", holds);
    if (holds)
        v.witness = json{{"inverse", u.ideal_json(inv)}};
    else
        v.witness = json{{"product_SU", u.ideal_json(prod)}};
    return InvertibilityResult<U>{std::move(v), std::move(inv)};
}

template <class U>
Partition<typename U::Elem> partition_of_unity(const U& u, const typename U::Ideal& s) {
    auto inv = is_B_invertible(u, s);
    if (!inv.verdict.holds)
        fail(errc::not_invertible, "partition of unity needs an invertible module");
    auto part = u.make_partition(s, inv.inverse);
    if (!u.verify_partition(s, inv.inverse, part))
        fail(errc::not_invertible, "internal: produced certificate failed verification");
    return part;
}

template <class U>
PropertyVerdict is_locally_principal(const U& u, const typename U::Ideal& a) {
    for (const auto& m : u.test_maxes(a)) {
        if (!u.localized_is_principal(a, m)) {
            PropertyVerdict v = make_verdict("locally_principal", false);
            v.witness = json{{"maximal", u.max_json(m)}};
            return v;
        }
    }
    return make_verdict("locally_principal", true);
}

// Local test: at every maximal ideal the localization must be zero or free
// of rank one (a single generator with zero annihilator). Valid over the
// artinian local rings and discrete valuation rings arising here; the
// tensor oracle cross-checks this route on small finite instances.
template <class U>
PropertyVerdict is_flat(const U& u, const typename U::Ideal& a) {
    for (const auto& m : u.test_maxes(a)) {
        auto lf = u.localized_flat(a, m);
        if (!lf.ok) {
            PropertyVerdict v = make_verdict("flat", false);
            v.witness = json{{"maximal", u.max_json(m)}, {"detail", lf.detail}};
            return v;
        }
    }
    return make_verdict("flat", true);
}

template <class U>
PropertyVerdict is_faithfully_flat(const U& u, const typename U::Ideal& a) {
    auto fl = is_flat(u, a);
    if (!fl.holds) {
        PropertyVerdict v = make_verdict("faithfully_flat", false);
        v.witness = json{{"not_flat", fl.witness}};
        return v;
    }
    for (const auto& m : u.test_maxes(a)) {
        auto am = u.ideal_product(a, u.ideal_of_max(m));
        if (u.ideal_equal(am, a)) {
            PropertyVerdict v = make_verdict("faithfully_flat", false);
            v.witness = json{{"maximal_with_am_eq_a", u.max_json(m)}};
            return v;
        }
    }
    return make_verdict("faithfully_flat", true);
}

template <class U>
PropertyVerdict is_regular_ideal(const U& u, const typename U::Ideal& a) {
    auto w = u.regular_element(a);
    PropertyVerdict v = make_verdict("regular_ideal", w.has_value());
    if (w) v.witness = json{{"regular_element", *w}};
    return v;
}

} // namespace extalg
