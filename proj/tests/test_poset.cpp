#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "extalg/poset.hpp"
#include "test_util.hpp"

using namespace extalg;
using namespace testutil;

namespace {

// ideals dZ for divisors d > 1 of n, ordered by inclusion (dZ <= eZ iff e | d)
FinitePoset divisor_poset(std::int64_t n) {
    std::vector<std::int64_t> divs;
    for (std::int64_t d = 2; d <= n; ++d)
        if (n % d == 0) divs.push_back(d);
    std::vector<std::string> labels;
    for (auto d : divs) labels.push_back(std::to_string(d) + "Z");
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t i = 0; i < divs.size(); ++i)
        for (std::size_t j = 0; j < divs.size(); ++j)
            if (i != j && divs[i] % divs[j] == 0) rel.emplace_back(i, j);
    std::vector<std::size_t> gamma(divs.size());
    for (std::size_t i = 0; i < gamma.size(); ++i) gamma[i] = i;
    return FinitePoset::from_relation(std::move(labels), rel, gamma);
}

FinitePoset chain(std::size_t n) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    std::vector<std::size_t> gamma;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("c" + std::to_string(i));
        gamma.push_back(i);
        if (i + 1 < n) covers.emplace_back(i, i + 1);
    }
    return FinitePoset::from_covers(std::move(labels), covers, gamma);
}

FinitePoset antichain(std::size_t n) {
    std::vector<std::string> labels;
    std::vector<std::size_t> gamma;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("a" + std::to_string(i));
        gamma.push_back(i);
    }
    return FinitePoset::from_covers(std::move(labels), {}, gamma);
}

MixedRing make_Z() {
    MixedRing R;
    R.slots.push_back(MixedSlot{SlotFlavor::integers, 0, {}});
    R.tail = close_subring(make_ambient({}), {});
    return R;
}

MixedRing make_Z_x_Z6() {
    MixedRing R;
    R.slots.push_back(MixedSlot{SlotFlavor::integers, 0, {}});
    R.tail = make_zn(6);
    return R;
}

} // namespace

TEST_CASE("relation validation") {
    // not antisymmetric
    CHECK_THROWS_AS(FinitePoset::from_relation({"a", "b"}, {{0, 1}, {1, 0}}, {0}), error);
    // not transitive
    CHECK_THROWS_AS(FinitePoset::from_relation({"a", "b", "c"}, {{0, 1}, {1, 2}}, {0}), error);
    // covers route computes the closure, so the same data passes
    auto p = FinitePoset::from_covers({"a", "b", "c"}, {{0, 1}, {1, 2}}, {0});
    CHECK(p.leq(0, 2));
}

TEST_CASE("maximal elements") {
    auto c = chain(3);
    CHECK(maximal_elements(c) == std::vector<std::size_t>{2});
    auto a = antichain(3);
    CHECK(maximal_elements(a) == std::vector<std::size_t>{0, 1, 2});

    auto d60 = divisor_poset(60);
    auto maxes = maximal_elements(d60);
    std::set<std::string> names;
    for (auto m : maxes) names.insert(d60.label(m));
    CHECK(names == std::set<std::string>{"2Z", "3Z", "5Z"});
}

TEST_CASE("comaximality") {
    auto c = chain(3);
    CHECK(!are_comaximal(c, 0, 1)); // common upper bound
    auto a = antichain(3);
    CHECK(are_comaximal(a, 0, 1));

    auto d60 = divisor_poset(60);
    // 4Z and 3Z: gcd(4,3) = 1, no proper dZ contains both
    std::size_t i4 = 0, i3 = 0, i6 = 0, i2 = 0;
    for (std::size_t i = 0; i < d60.size(); ++i) {
        if (d60.label(i) == "4Z") i4 = i;
        if (d60.label(i) == "3Z") i3 = i;
        if (d60.label(i) == "6Z") i6 = i;
        if (d60.label(i) == "2Z") i2 = i;
    }
    CHECK(are_comaximal(d60, i4, i3));
    CHECK(!are_comaximal(d60, i6, i2));
}

TEST_CASE("hypotheses on the divisor poset and the violating 3-chain") {
    auto d60 = divisor_poset(60);
    auto hyp = check_hypotheses(d60);
    CHECK(hyp.a.holds);
    CHECK(hyp.b.holds);
    CHECK(hyp.c.holds);

    // omega = {a1, a2, b} with a1, a2 < b and gamma = {a1, a2}: (b) fails
    auto p = FinitePoset::from_covers({"a1", "a2", "b"}, {{0, 2}, {1, 2}}, {0, 1});
    auto h = check_hypotheses(p);
    CHECK(h.a.holds);
    CHECK(!h.b.holds);
    CHECK(h.b.witness["a1"] == "a1");
    CHECK(h.b.witness["a2"] == "a2");
    CHECK(h.b.witness["b"] == "b");
    CHECK(h.c.holds);

    // singleton: everything holds
    auto s = antichain(1);
    auto hs = check_hypotheses(s);
    CHECK(hs.all_hold());

    // empty gamma rejected
    CHECK_THROWS_AS(check_hypotheses(FinitePoset::from_covers({"x"}, {}, {})), error);
}

TEST_CASE("equivalence counts on worked posets") {
    auto d60 = divisor_poset(60);
    auto eq = check_equivalence(d60);
    CHECK(eq.holds);
    bool found30 = false;
    for (const auto& row : eq.witness["per_gamma_element"]) {
        if (row["a"] == "30Z") {
            found30 = true;
            CHECK(row["maximal_elements_above"] == 3);
            CHECK(row["max_comaximal_subset_above"] == 3);
        }
    }
    CHECK(found30);

    auto c = chain(4);
    auto eqc = check_equivalence(c);
    for (const auto& row : eqc.witness["per_gamma_element"]) {
        CHECK(row["maximal_elements_above"] == 1);
        CHECK(row["max_comaximal_subset_above"] == 1);
    }

    auto a = antichain(5);
    auto eqa = check_equivalence(a);
    for (const auto& row : eqa.witness["per_gamma_element"]) {
        CHECK(row["maximal_elements_above"] == 1);
        CHECK(row["max_comaximal_subset_above"] == 1);
    }

    // the violating poset is rejected
    auto bad = FinitePoset::from_covers({"a1", "a2", "b"}, {{0, 2}, {1, 2}}, {0, 1});
    CHECK_THROWS_AS(check_equivalence(bad), error);
}

TEST_CASE("comaximal subset enumeration matches power-set brute force") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 4 + rng() % 12; // up to 15
        // random DAG on ordered labels
        std::vector<std::pair<std::size_t, std::size_t>> covers;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rng() % 4 == 0) covers.emplace_back(i, j);
        std::vector<std::string> labels;
        std::vector<std::size_t> gamma;
        for (std::size_t i = 0; i < n; ++i) {
            labels.push_back("v" + std::to_string(i));
            if (rng() % 3) gamma.push_back(i);
        }
        if (gamma.empty()) gamma.push_back(0);
        auto p = FinitePoset::from_covers(std::move(labels), covers, gamma);

        for (std::size_t a = 0; a < n; ++a) {
            auto got = comaximal_subsets_above(p, a);
            // brute force: filter all subsets of gamma above a, keep the
            // maximal-by-inclusion comaximal ones
            std::vector<std::size_t> verts;
            for (std::size_t g : p.gamma_indices())
                if (p.leq(a, g)) verts.push_back(g);
            std::vector<std::vector<std::size_t>> comax;
            for (std::size_t mask = 0; mask < (std::size_t(1) << verts.size()); ++mask) {
                std::vector<std::size_t> sub;
                for (std::size_t b = 0; b < verts.size(); ++b)
                    if (mask & (std::size_t(1) << b)) sub.push_back(verts[b]);
                bool ok = true;
                for (std::size_t x = 0; x < sub.size() && ok; ++x)
                    for (std::size_t y = x + 1; y < sub.size() && ok; ++y)
                        if (!are_comaximal(p, sub[x], sub[y])) ok = false;
                if (ok) comax.push_back(std::move(sub));
            }
            std::vector<std::vector<std::size_t>> expect;
            for (const auto& s : comax) {
                bool maximal = true;
                for (const auto& t : comax) {
                    if (t.size() <= s.size()) continue;
                    if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                        maximal = false;
                        break;
                    }
                }
                if (maximal && !s.empty()) expect.push_back(s);
            }
            std::sort(expect.begin(), expect.end());
            // got excludes nothing; empty-vertex case gives one empty clique
            if (verts.empty()) {
                CHECK(got.size() == 1);
                CHECK(got[0].empty());
            } else {
                CHECK(got == expect);
            }
        }
    }
}

TEST_CASE("regular ideal poset over Z with bound 60") {
    auto u = MixedUniverse(MixedExtension{make_Z()});
    auto rip = build_regular_ideal_poset(u, 60);
    CHECK(!rip.empty_omega);
    CHECK(rip.poset.size() == 59); // dZ for 2 <= d <= 60
    auto hyp = check_hypotheses(rip.poset);
    CHECK(hyp.all_hold());
    CHECK(rip.bridge.holds);

    // maximal elements are exactly the primes up to 60
    auto maxes = maximal_elements(rip.poset);
    std::size_t primes = 0;
    for (std::int64_t q = 2; q <= 60; ++q) {
        bool is_p = true;
        for (std::int64_t d = 2; d * d <= q; ++d)
            if (q % d == 0) { is_p = false; break; }
        if (is_p) ++primes;
    }
    CHECK(maxes.size() == primes);
}

TEST_CASE("regular ideal poset: degenerate and mixed-tail cases") {
    // diagonal K in K^2: omega is empty, bridge skipped
    auto amb = field_power_ambient(2, 2);
    FiniteUniverse fu(ExtensionHandle(diagonal_subring(amb), full_ring(amb)));
    auto rip = build_regular_ideal_poset(fu, 64);
    CHECK(rip.empty_omega);
    CHECK(rip.bridge.holds);
    CHECK(rip.bridge.vacuous);

    // Z x Z/6 with bound 30
    auto u6 = MixedUniverse(MixedExtension{make_Z_x_Z6()});
    auto rip6 = build_regular_ideal_poset(u6, 30);
    CHECK(!rip6.empty_omega);
    CHECK(rip6.poset.size() == 29); // dZ x Z/6 for 2 <= d <= 30
    CHECK(check_hypotheses(rip6.poset).all_hold());
    CHECK(rip6.bridge.holds);

    // bound too small
    CHECK_THROWS_AS(build_regular_ideal_poset(u6, 1), error);
}
