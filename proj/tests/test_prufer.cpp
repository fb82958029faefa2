#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "extalg/prufer.hpp"
#include "test_util.hpp"

using namespace extalg;
using namespace testutil;

namespace {

MixedRing make_Z() {
    MixedRing R;
    R.slots.push_back(MixedSlot{SlotFlavor::integers, 0, {}});
    R.tail = close_subring(make_ambient({}), {});
    return R;
}

MixedRing make_Z_local(std::int64_t p) {
    MixedRing R;
    R.slots.push_back(MixedSlot{SlotFlavor::local_at, p, {}});
    R.tail = close_subring(make_ambient({}), {});
    return R;
}

MixedRing make_Z_x_Z6() {
    MixedRing R;
    R.slots.push_back(MixedSlot{SlotFlavor::integers, 0, {}});
    R.tail = make_zn(6);
    return R;
}

MixedIdeal principal_int(const MixedRing& R, std::int64_t n) {
    std::vector<Factored> slots = {factored_from_integer(n)};
    return mixed_ideal(R, std::move(slots), carrier_as_module(R.tail, R.tail));
}

FiniteUniverse diag_universe(std::int64_t p, int n) {
    auto amb = field_power_ambient(p, n);
    return FiniteUniverse(ExtensionHandle(diagonal_subring(amb), full_ring(amb)));
}

} // namespace

TEST_CASE("manis valuation axioms on K^2: first-coordinate indicator") {
    auto amb = field_power_ambient(2, 2);
    auto B = full_ring(amb);
    // v(x,y) = 0 if x != 0 else infinity: the trivial valuation of the prime 0 x K
    FiniteValuation v;
    v.rank = 0;
    for (Packed e : B->elements()) {
        auto coords = amb->unpack(e);
        v.table[e] = coords[0][0] != 0 ? MaybeValue(ValueVec{}) : MaybeValue(std::nullopt);
    }
    auto res = check_manis_valuation(B, v);
    CHECK(res.verdict.holds);
    REQUIRE(res.A_v.has_value());
    CHECK((*res.A_v)->size() == 4);      // A_v = B
    CHECK(res.p_v->elements.size() == 2); // p_v = 0 x K
    // derived pair passes the pair criterion
    CHECK(is_manis_pair(*res.A_v, *res.p_v, B).holds);
}

TEST_CASE("v(1) = 1 violates multiplicativity") {
    auto z6 = make_zn(6);
    FiniteValuation v;
    v.rank = 1;
    for (Packed e : z6->elements()) v.table[e] = e == z6->zero() ? MaybeValue(std::nullopt) : MaybeValue(ValueVec{0});
    v.table[z6->one()] = ValueVec{1};
    auto res = check_manis_valuation(z6, v);
    CHECK(!res.verdict.holds);
    CHECK(res.verdict.witness["axiom"] == "v(rs)=v(r)+v(s)");
}

TEST_CASE("partial table is rejected") {
    auto z6 = make_zn(6);
    FiniteValuation v;
    v.rank = 0;
    v.table[z6->zero()] = std::nullopt;
    CHECK_THROWS_AS(check_manis_valuation(z6, v), error);
}

TEST_CASE("trivial valuations from primes pass for every small ring") {
    for (std::int64_t n : {6, 12}) {
        auto zn = make_zn(n);
        for (const auto& m : maximal_ideals(zn)) {
            auto v = trivial_valuation(zn, m.ideal);
            auto res = check_manis_valuation(zn, v);
            CHECK(res.verdict.holds);
            CHECK(is_manis_pair(*res.A_v, *res.p_v, zn).holds);
        }
    }
}

TEST_CASE("p-adic rule validates and derives the localized pair") {
    auto R = make_Z();
    MixedExtension ext{R};
    auto res = check_manis_valuation(ext, PAdicRule{0, 2});
    CHECK(res.verdict.holds);
    REQUIRE(res.A_v.has_value());
    CHECK(!res.A_v->slots[0].full_Q);
    CHECK(res.A_v->slots[0].flavor.flavor == SlotFlavor::local_at);
    // derived pair passes the mixed criterion
    CHECK(is_manis_pair(ext, *res.A_v, *res.p_v).holds);

    // a unit prime of the slot flavor is rejected
    auto R3 = make_Z_local(3);
    auto bad = check_manis_valuation(MixedExtension{R3}, PAdicRule{0, 2});
    CHECK(!bad.verdict.holds);
}

TEST_CASE("manis pair examples in Q") {
    auto R = make_Z();
    MixedExtension ext{R};

    // (Z_(2), 2Z_(2)): a discrete valuation pair
    MixedSubring zloc;
    zloc.slots.resize(1);
    zloc.slots[0].full_Q = false;
    zloc.slots[0].flavor = MixedSlot{SlotFlavor::local_at, 2, {}};
    zloc.tail = R.tail;
    MixedPrime p2{MixedPrime::Kind::slot_positive, 0, 2, {}};
    CHECK(is_manis_pair(ext, zloc, p2).holds);

    // (Z, 2Z): not a pair; witness 1/3
    MixedSubring zfull;
    zfull.slots.resize(1);
    zfull.slots[0].full_Q = false;
    zfull.slots[0].flavor = MixedSlot{SlotFlavor::integers, 0, {}};
    zfull.tail = R.tail;
    auto res = is_manis_pair(ext, zfull, p2);
    CHECK(!res.holds);
    CHECK(res.witness["x"] == "1/3 in slot 0");
}

TEST_CASE("manis pair on K^2: (K^2, 0 x K) holds, (diagonal K, 0) fails") {
    auto amb = field_power_ambient(2, 2);
    auto diag = diagonal_subring(amb);
    auto full = full_ring(amb);

    Packed e2 = amb->pack({{0}, {1}});
    auto p0K = submodule_closure(full, full, {e2});
    CHECK(is_manis_pair(full, p0K, full).holds);

    auto zero_prime = submodule_closure(diag, diag, {});
    CHECK(!is_manis_pair(diag, zero_prime, full).holds);
}

TEST_CASE("weak surjectivity: diagonal example fails with witness (1,0)") {
    auto u = diag_universe(2, 2);
    auto ws = is_weakly_surjective(u);
    CHECK(!ws.holds);
    CHECK(ws.witness["x"] == "([1], [0])");

    for (std::int64_t p : {3, 5}) {
        auto up = diag_universe(p, 2);
        CHECK(!is_weakly_surjective(up).holds);
    }
}

TEST_CASE("weak surjectivity in the mixed world") {
    auto uZ = MixedUniverse(MixedExtension{make_Z()});
    auto ws = is_weakly_surjective(uZ);
    CHECK(ws.holds);
    CHECK(ws.vacuous); // mQ = Q for every maximal

    auto uZ6 = MixedUniverse(MixedExtension{make_Z_x_Z6()});
    auto ws6 = is_weakly_surjective(uZ6);
    CHECK(ws6.holds);
    CHECK(!ws6.vacuous); // tail maximals actually checked
}

TEST_CASE("weak surjectivity agrees with the definitional construction") {
    // A = B cases and proper extensions
    std::vector<FiniteUniverse> cases;
    cases.push_back(FiniteUniverse(ExtensionHandle(make_zn(6), make_zn(6))));
    cases.push_back(diag_universe(2, 2));
    cases.push_back(diag_universe(3, 2));
    {
        auto f4amb = make_ambient({{2, 1, {1, 1, 1}}});
        cases.push_back(FiniteUniverse(
            ExtensionHandle(close_subring(f4amb, {}), full_ring(f4amb))));
    }
    for (const auto& u : cases) {
        for (std::size_t i = 0; i < u.max_count(); ++i) {
            if (u.max_extends_to_B(i)) continue;
            bool membership_route = u.bracket_localization(i)->same_elements(*u.B());
            CHECK(membership_route == weakly_surjective_at_definitional(u, i));
        }
    }
}

TEST_CASE("the diagonal example: almost Prufer but not Prufer") {
    for (std::int64_t p : {2, 3, 5}) {
        for (int n : {2, 3}) {
            auto u = diag_universe(p, n);
            CHECK(is_almost_prufer(u).holds);
            CHECK(!is_prufer(u).holds);
            CHECK(!is_weakly_surjective(u).holds);
            CHECK(verify_theorem_2_1(u).holds);
        }
    }
}

TEST_CASE("trivial extensions A = A are Prufer") {
    for (std::int64_t n : {6, 12}) {
        auto zn = make_zn(n);
        FiniteUniverse u(ExtensionHandle(zn, zn));
        CHECK(is_prufer(u).holds);
        CHECK(is_weakly_surjective(u).holds);
        CHECK(is_almost_prufer(u).holds);
        CHECK(verify_theorem_2_1(u).holds);
    }
}

TEST_CASE("F2 in F4 is not weakly surjective, hence not Prufer") {
    auto f4amb = make_ambient({{2, 1, {1, 1, 1}}});
    FiniteUniverse u(ExtensionHandle(close_subring(f4amb, {}), full_ring(f4amb)));
    CHECK(!is_weakly_surjective(u).holds);
    CHECK(!is_prufer(u).holds);
    CHECK(is_almost_prufer(u).holds);
    CHECK(verify_theorem_2_1(u).holds);
}

TEST_CASE("mixed extensions are Prufer and theorem 2.1 agrees") {
    for (auto make : {&make_Z, &make_Z_x_Z6}) {
        auto u = MixedUniverse(MixedExtension{make()});
        CHECK(is_prufer(u).holds);
        CHECK(is_weakly_surjective(u).holds);
        CHECK(is_almost_prufer(u).holds);
        CHECK(verify_theorem_2_1(u).holds);
    }
    auto uL = MixedUniverse(MixedExtension{make_Z_local(2)});
    CHECK(is_prufer(uL).holds);
    CHECK(verify_theorem_2_1(uL).holds);
}

TEST_CASE("finite character evidence") {
    auto uZ = MixedUniverse(MixedExtension{make_Z()});
    auto fc = has_finite_character(uZ);
    CHECK(fc.holds);
    // 12Z appears in the sample with support size 2
    bool found = false;
    for (const auto& s : fc.witness["samples"]) {
        if (s["ideal"]["display"] == "12*Z" ) {
            CHECK(s["support_size"] == 2);
            found = true;
        }
    }
    CHECK(found);

    auto uF = FiniteUniverse(ExtensionHandle(make_zn(6), make_zn(6)));
    auto fcF = has_finite_character(uF);
    CHECK(fcF.holds);
    CHECK(fcF.vacuous);
}

TEST_CASE("i_F worked examples") {
    auto R = make_Z();
    auto u = MixedUniverse(MixedExtension{R});
    auto a12 = principal_int(R, 12);

    // F = {3Z}: i_F = 4Z, stable at k = 1
    {
        std::vector<MixedIdeal> F = {principal_int(R, 3)};
        auto r = compute_i_F(u, a12, F);
        CHECK(fac_str(r.ideal.slots[0]) == "4");
        CHECK(r.exponent == 1);
    }
    // F = {4Z, 3Z}: i_F = Z
    {
        std::vector<MixedIdeal> F = {principal_int(R, 4), principal_int(R, 3)};
        auto r = compute_i_F(u, a12, F);
        CHECK(r.ideal.slots[0].is_one());
    }
    // F = {A}: i_F = a
    {
        std::vector<MixedIdeal> F = {u.unit_ideal()};
        auto r = compute_i_F(u, a12, F);
        CHECK(u.ideal_equal(r.ideal, a12));
    }
    // non-comaximal family rejected: {2Z, 4Z} around 8Z
    {
        std::vector<MixedIdeal> F = {principal_int(R, 2), principal_int(R, 4)};
        CHECK_THROWS_AS(compute_i_F(u, principal_int(R, 8), F), error);
    }
    // member not containing a rejected
    {
        std::vector<MixedIdeal> F = {principal_int(R, 5)};
        CHECK_THROWS_AS(compute_i_F(u, a12, F), error);
    }
}

TEST_CASE("lemma technical on worked and random instances") {
    auto R = make_Z();
    auto u = MixedUniverse(MixedExtension{R});
    {
        std::vector<MixedIdeal> F = {principal_int(R, 3)};
        CHECK(verify_lemma_technical(u, principal_int(R, 12), F).holds);
    }
    {
        std::vector<MixedIdeal> F = {principal_int(R, 4), principal_int(R, 3)};
        CHECK(verify_lemma_technical(u, principal_int(R, 12), F).holds);
    }
    // prime power families around n
    for (std::int64_t n : {12, 30, 360, 9000, 64}) {
        auto fm = factor_integer(n);
        std::vector<MixedIdeal> F;
        for (auto& [p, e] : fm) {
            std::int64_t pe = 1;
            for (int i = 0; i < e; ++i) pe *= p;
            F.push_back(principal_int(R, pe));
        }
        CHECK(verify_lemma_technical(u, principal_int(R, n), F).holds);
    }
    // finite universe: the trivial family {A} collapses both clauses
    auto z6 = make_zn(6);
    FiniteUniverse uf(ExtensionHandle(z6, z6));
    for (const auto& a : uf.test_ideals()) {
        std::vector<Submodule> F = {uf.unit_ideal()};
        auto res = verify_lemma_technical(uf, a, F);
        CHECK(res.holds);
    }
    // a member that is not invertible is rejected
    {
        auto two = submodule_closure(z6, z6, {int_in(z6, 2)});
        std::vector<Submodule> F = {two};
        auto zero = uf.zero_ideal();
        CHECK_THROWS_AS(verify_lemma_technical(uf, zero, F), error);
    }
}

TEST_CASE("lemma technical with a tail component") {
    auto R = make_Z_x_Z6();
    auto u = MixedUniverse(MixedExtension{R});
    auto a = principal_int(R, 12);
    std::vector<MixedIdeal> F = {principal_int(R, 3)};
    CHECK(verify_lemma_technical(u, a, F).holds);
}

TEST_CASE("construct_finite_generators: the forced-a0 worked example") {
    auto R = make_Z();
    auto u = MixedUniverse(MixedExtension{R});
    auto a = principal_int(R, 12);
    auto a0 = principal_int(R, 24);
    auto res = construct_finite_generators(u, a, &a0);
    CHECK(res.verdict.holds);
    CHECK(u.ideal_equal(res.b, a));
    // the local-match pieces are 36Z at 2Z and 24Z at 3Z
    auto steps = res.verdict.witness["steps"];
    REQUIRE(steps.size() == 3);
    CHECK(steps[1]["ideal"]["display"] == "36*Z");
    CHECK(steps[2]["ideal"]["display"] == "24*Z");
}

TEST_CASE("construct_finite_generators: default and element-branch cases") {
    auto R = make_Z();
    auto u = MixedUniverse(MixedExtension{R});
    // default a0 = a
    for (std::int64_t n : {12, 30, 7, 1}) {
        auto a = principal_int(R, n);
        auto res = construct_finite_generators(u, a);
        CHECK(res.verdict.holds);
    }
    // forced a0 with larger support than a: element branch fires
    auto a = principal_int(R, 4);
    auto a0 = principal_int(R, 12);
    auto res = construct_finite_generators(u, a, &a0);
    CHECK(res.verdict.holds);
    CHECK(u.ideal_equal(res.b, a));

    // non-regular ideal rejected
    CHECK_THROWS_AS(construct_finite_generators(u, u.zero_ideal()), error);

    // finite universe: trivial but labeled
    auto z6 = make_zn(6);
    FiniteUniverse uf(ExtensionHandle(z6, z6));
    auto resf = construct_finite_generators(uf, uf.unit_ideal());
    CHECK(resf.verdict.holds);

    // componentwise over Z x Z/6
    auto R6 = make_Z_x_Z6();
    auto u6 = MixedUniverse(MixedExtension{R6});
    auto res6 = construct_finite_generators(u6, principal_int(R6, 12));
    CHECK(res6.verdict.holds);
}

TEST_CASE("main theorem and the Prufer ring corollary") {
    auto uZ = MixedUniverse(MixedExtension{make_Z()});
    auto mt = verify_main_theorem(uZ);
    CHECK(mt.holds);
    CHECK(mt.note.find("not falsifiable at desk scale") != std::string::npos);

    auto uZp = MixedUniverse(MixedExtension{make_Z_local(2)});
    CHECK(verify_main_theorem(uZp).holds);

    auto uZ6 = MixedUniverse(MixedExtension{make_Z_x_Z6()});
    CHECK(verify_main_theorem(uZ6).holds);

    // vacuous on finite extensions, labeled
    auto uD = diag_universe(2, 2);
    auto mtD = verify_main_theorem(uD);
    CHECK(mtD.holds);
    CHECK(mtD.vacuous);

    CHECK(verify_prufer_ring_corollary(make_Z()).holds);
    CHECK(verify_prufer_ring_corollary(make_Z_x_Z6()).holds);
    // r = 0: a finite ring as a Prufer ring, vacuously
    MixedRing F;
    F.tail = make_zn(6);
    CHECK(verify_prufer_ring_corollary(F).holds);
}

TEST_CASE("higher-rank valuation tables obey the trivial-group constraint") {
    // on a finite ring any valuation image must collapse to the zero vector;
    // a rank-2 table assigning (1,0) to a unit is rejected
    auto z6 = make_zn(6);
    // infinity on the prime {0, 3}, the zero vector elsewhere
    auto three = int_in(z6, 3);
    FiniteValuation v;
    v.rank = 2;
    for (Packed e : z6->elements())
        v.table[e] = (e == z6->zero() || e == three) ? MaybeValue(std::nullopt)
                                                     : MaybeValue(ValueVec{0, 0});
    CHECK(check_manis_valuation(z6, v).verdict.holds);
    v.table[int_in(z6, 5)] = ValueVec{1, 0}; // 5 is a unit of Z/6
    CHECK(!check_manis_valuation(z6, v).verdict.holds);
}

TEST_CASE("lexicographic value comparison") {
    MaybeValue inf = std::nullopt;
    CHECK(value_cmp(ValueVec{0, 5}, ValueVec{1, -9}) < 0);
    CHECK(value_cmp(ValueVec{2, 1}, ValueVec{2, 1}) == 0);
    CHECK(value_cmp(inf, ValueVec{100, 100}) > 0);
    CHECK(value_cmp(inf, inf) == 0);
    CHECK(!value_add(inf, ValueVec{1}).has_value());
    CHECK(*value_add(ValueVec{1, 2}, ValueVec{3, -2}) == ValueVec{4, 0});
}

TEST_CASE("lemma technical with a proper tail component in the base ideal") {
    // the base ideal need not be B-regular; only the family members must be
    // invertible and contain it
    auto R = make_Z_x_Z6();
    auto u = MixedUniverse(MixedExtension{R});
    std::vector<Factored> slots = {factored_from_integer(12)};
    auto tail2 = submodule_closure(R.tail, R.tail, {int_in(R.tail, 2)});
    auto a = mixed_ideal(R, std::move(slots), tail2);
    std::vector<MixedIdeal> F = {principal_int(R, 3)};
    auto res = verify_lemma_technical(u, a, F);
    CHECK(res.holds);
    auto ifr = compute_i_F(u, a, F);
    CHECK(fac_str(ifr.ideal.slots[0]) == "4");
    CHECK(ifr.ideal.tail.elements == tail2.elements);
}

TEST_CASE("comaximal family certificates verify exactly") {
    auto R = make_Z();
    auto u = MixedUniverse(MixedExtension{R});
    auto a = principal_int(R, 60);
    std::vector<MixedIdeal> members = {principal_int(R, 4), principal_int(R, 3),
                                       principal_int(R, 5)};
    auto fam = make_comaximal_family(u, a, members);
    CHECK(fam.certificates.size() == 3);
    for (const auto& cert : fam.certificates) {
        CHECK(elem_in_ideal(R, cert.u, fam.members[cert.i]));
        CHECK(elem_in_ideal(R, cert.v, fam.members[cert.j]));
        CHECK(mixed_add(R, cert.u, cert.v) == mixed_one(R));
    }

    // and in the finite universe
    auto z6 = make_zn(6);
    FiniteUniverse uf(ExtensionHandle(z6, z6));
    auto two = submodule_closure(z6, z6, {int_in(z6, 2)});
    auto three = submodule_closure(z6, z6, {int_in(z6, 3)});
    auto zero = uf.zero_ideal();
    auto famf = make_comaximal_family(uf, zero, {two, three});
    REQUIRE(famf.certificates.size() == 1);
    auto c = famf.certificates[0];
    CHECK(two.contains(c.u));
    CHECK(three.contains(c.v));
    CHECK(z6->add(c.u, c.v) == z6->one());
}

TEST_CASE("mixed localization values match the valuation rule") {
    auto R = make_Z_x_Z6();
    auto u = MixedUniverse(MixedExtension{R});
    auto a = principal_int(R, 12);
    CHECK(u.localize_ideal(a, MixedMax{false, 0, 2, 0}).slot_valuation == 2);
    CHECK(u.localize_ideal(a, MixedMax{false, 0, 3, 0}).slot_valuation == 1);
    CHECK(u.localize_ideal(a, MixedMax{false, 0, 5, 0}).slot_valuation == 0);
    CHECK(u.localize_ideal(u.zero_ideal(), MixedMax{false, 0, 2, 0}).slot_valuation == INT32_MAX);
    // tail maximal: the full tail localizes to the whole local ring
    for (std::size_t t = 0; t < u.tail_maxes().size(); ++t) {
        auto loc = u.localize_ideal(a, MixedMax{true, 0, 0, t});
        CHECK(loc.is_tail);
        CHECK(loc.tail_classes.size() == u.tail_local(t).size());
    }
}

TEST_CASE("the generalized localizations intersect exactly in A") {
    // d(x) = { v in A : v x in A } is an ideal; x lies in A_[m] iff d(x) is
    // not inside m, so the intersection over all maximal ideals is A
    std::vector<FiniteUniverse> cases;
    cases.push_back(diag_universe(2, 2));
    cases.push_back(diag_universe(3, 2));
    {
        auto f4amb = make_ambient({{2, 1, {1, 1, 1}}});
        cases.emplace_back(ExtensionHandle(close_subring(f4amb, {}), full_ring(f4amb)));
        auto amb = make_ambient({{2, 2, {0, 1}}, {2, 1, {0, 1}}});
        cases.emplace_back(ExtensionHandle(close_subring(amb, {}), full_ring(amb)));
    }
    for (const auto& u : cases) {
        std::vector<Packed> inter = u.B()->elements();
        for (std::size_t i = 0; i < u.max_count(); ++i) {
            auto br = u.bracket_localization(i);
            std::vector<Packed> keep;
            for (Packed x : inter)
                if (br->contains(x)) keep.push_back(x);
            inter = std::move(keep);
        }
        CHECK(inter == u.A()->elements());
    }
}
