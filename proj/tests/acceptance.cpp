// End-to-end acceptance suite. Each numbered criterion prints one PASS/FAIL
// line; the process exits nonzero if any fails. Runs on the builtin corpus
// with the default configuration.

#include <chrono>
#include <random>
#include <fstream>
#include <iostream>

#include "extalg/poset.hpp"
#include "extalg/report.hpp"
#include "test_util.hpp"

using namespace extalg;
using namespace testutil;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int n, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << n << ": " << name;
    if (!ok && !detail.empty()) std::cout << "  -- " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
}

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

const json* find_law(const json& report, const std::string& id) {
    for (const auto& l : report.at("laws"))
        if (l.at("id") == id) return &l;
    return nullptr;
}

MixedRing plain_Z() {
    MixedRing R;
    R.slots.push_back(MixedSlot{SlotFlavor::integers, 0, {}});
    R.tail = close_subring(make_ambient({}), {});
    return R;
}

MixedIdeal zideal(const MixedRing& R, std::int64_t n) {
    std::vector<Factored> slots = {factored_from_integer(n)};
    return mixed_ideal(R, std::move(slots), carrier_as_module(R.tail, R.tail));
}

} // namespace

int main() {
    HarnessConfig cfg;
    cfg.seed = 0;
    cfg.profile = "small";

    // ---- criterion 1: golden flags for pA in Z/pq --------------------------
    {
        auto t0 = Clock::now();
        bool ok = true;
        std::string detail;
        for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 5}}) {
            auto zn = make_zn(std::int64_t(p) * q);
            FiniteUniverse u(ExtensionHandle(zn, zn));
            auto i = submodule_closure(zn, zn, {int_in(zn, p)});
            bool flat = is_flat(u, i).holds;
            bool ff = is_faithfully_flat(u, i).holds;
            bool lp = is_locally_principal(u, i).holds;
            bool reg = is_regular_ideal(u, i).holds;
            bool idem = u.ideal_equal(u.ideal_product(i, i), i);
            if (!(flat && !ff && lp && !reg && idem)) {
                ok = false;
                detail = "Z/" + std::to_string(p * q) + " gave flat=" + std::to_string(flat) +
                         " ff=" + std::to_string(ff) + " lp=" + std::to_string(lp) +
                         " reg=" + std::to_string(reg) + " idem=" + std::to_string(idem);
            }
        }
        double ms = ms_since(t0);
        if (ms >= 1000) { ok = false; detail += " (took " + std::to_string(ms) + " ms)"; }
        criterion(1, "pA in Z/pq: flat, locally principal, idempotent, not faithfully flat, not regular", ok, detail);
    }

    // ---- criterion 2: diagonal example golden ------------------------------
    {
        auto t0 = Clock::now();
        bool ok = true;
        std::string detail;
        for (std::int64_t p : {2, 3, 5}) {
            for (int n : {2, 3}) {
                auto amb = field_power_ambient(p, n);
                FiniteUniverse u(ExtensionHandle(diagonal_subring(amb), full_ring(amb)));
                bool ap = is_almost_prufer(u).holds;
                auto ws = is_weakly_surjective(u);
                bool pr = is_prufer(u).holds;
                bool witness_ok = false;
                if (!ws.holds && ws.witness.contains("x")) {
                    // replay the witness: the element must lie in B outside A_[m]
                    for (std::size_t i = 0; i < u.max_count() && !witness_ok; ++i) {
                        if (u.max_extends_to_B(i)) continue;
                        auto bracket = u.bracket_localization(i);
                        for (Packed x : u.B()->elements())
                            if (!bracket->contains(x) &&
                                u.B()->ambient().describe(x) == ws.witness["x"])
                                witness_ok = true;
                    }
                }
                if (!(ap && !ws.holds && !pr && witness_ok)) {
                    ok = false;
                    detail = "F" + std::to_string(p) + "^" + std::to_string(n);
                }
            }
        }
        double ms = ms_since(t0);
        if (ms >= 1000) { ok = false; detail += " (took " + std::to_string(ms) + " ms)"; }
        criterion(2, "diagonal K in K^n: almost Prufer, not weakly surjective, not Prufer", ok,
                  detail);
    }

    // ---- shared suite run for the law criteria -----------------------------
    auto corpus = builtin_corpus(cfg);
    auto report1 = run_suite(corpus, {}, cfg);
    const json& rep = report1.document;

    // ---- criterion 3: the invertibility-flatness law ------------------------
    {
        const json* law = find_law(rep, "prop_inv_flat");
        bool ok = law && law->at("failure_count") == 0;
        std::string detail;
        std::size_t mixed_ideals = 0, finite_ext = 0, mixed_ext = 0;
        for (const auto& e : corpus) {
            if (e.universe == CorpusEntry::Universe::mixed) {
                ++mixed_ext;
                MixedUniverse u(*e.mix, cfg.sweep);
                mixed_ideals += u.test_ideals().size();
            } else {
                ++finite_ext;
            }
        }
        if (finite_ext + mixed_ext < 20) { ok = false; detail += "corpus too small; "; }
        if (mixed_ideals < 200) {
            ok = false;
            detail += "only " + std::to_string(mixed_ideals) + " mixed ideals; ";
        }
        criterion(3,
                  "invertible iff B-regular + f.g. + flat over the corpus (" +
                      std::to_string(law ? law->at("instances").get<std::size_t>() : 0) +
                      " ideals, " + std::to_string(mixed_ideals) + " mixed), partitions verified",
                  ok, detail);
    }

    // ---- criterion 4: the faithfully-flat/locally-principal laws ------------
    {
        const json* pf = find_law(rep, "prop_faithfully");
        const json* ra = find_law(rep, "remark_a");
        bool ok = pf && ra && pf->at("failure_count") == 0 && ra->at("failure_count") == 0;
        criterion(4, "faithfully flat iff locally principal (regular ideals); implication over all",
                  ok);
    }

    // ---- criterion 5: flatness oracle agreement ------------------------------
    {
        const json* law = find_law(rep, "oracle_flat_agree");
        std::size_t n = law ? law->at("instances").get<std::size_t>() : 0;
        bool ok = law && law->at("failure_count") == 0 && n >= 500;
        criterion(5, "local-freeness flat test == tensor oracle on " + std::to_string(n) +
                         " ideal instances (>= 500)",
                  ok);
    }

    // ---- criterion 6: the i_F localization lemma -----------------------------
    {
        const json* law = find_law(rep, "lemma_technical");
        std::size_t n = law ? law->at("instances").get<std::size_t>() : 0;
        bool ok = law && law->at("failure_count") == 0 && n >= 30;
        std::string detail;
        // the three worked values, exactly
        auto R = plain_Z();
        MixedUniverse u(MixedExtension{R});
        auto a12 = zideal(R, 12);
        auto r1 = compute_i_F(u, a12, {zideal(R, 3)});
        if (!(fac_str(r1.ideal.slots[0]) == "4")) { ok = false; detail += "i_F(12Z,{3Z}) != 4Z; "; }
        auto r2 = compute_i_F(u, a12, {zideal(R, 4), zideal(R, 3)});
        if (!r2.ideal.slots[0].is_one()) { ok = false; detail += "i_F(12Z,{4Z,3Z}) != Z; "; }
        auto r3 = compute_i_F(u, a12, {u.unit_ideal()});
        if (!u.ideal_equal(r3.ideal, a12)) { ok = false; detail += "i_F(a,{A}) != a; "; }
        criterion(6, "i_F clauses (a)+(b) on " + std::to_string(n) +
                         " (a, F) instances (>= 30); worked values reproduce",
                  ok, detail);
    }

    // ---- criterion 7: Theorem 2.1 --------------------------------------------
    {
        const json* law = find_law(rep, "theorem_2_1");
        bool ok = law && law->at("failure_count") == 0;
        criterion(7, "Prufer iff weakly surjective + invertibility, every corpus extension", ok);
    }

    // ---- criterion 8: main theorem and corollaries ---------------------------
    {
        bool ok = true;
        std::string detail;
        // named extensions
        {
            MixedUniverse uz{MixedExtension{plain_Z()}};
            if (!verify_main_theorem(uz).holds) { ok = false; detail += "Z; "; }
            MixedRing zp;
            zp.slots.push_back(MixedSlot{SlotFlavor::local_at, 2, {}});
            zp.tail = close_subring(make_ambient({}), {});
            MixedUniverse uzp{MixedExtension{zp}};
            if (!verify_main_theorem(uzp).holds) { ok = false; detail += "Z_(2); "; }
            MixedRing z6;
            z6.slots.push_back(MixedSlot{SlotFlavor::integers, 0, {}});
            z6.tail = make_zn(6);
            MixedUniverse uz6{MixedExtension{z6}};
            if (!verify_main_theorem(uz6).holds) { ok = false; detail += "Z x Z/6; "; }
            if (!verify_prufer_ring_corollary(plain_Z()).holds) { ok = false; detail += "corollary Z; "; }
            if (!verify_prufer_ring_corollary(z6).holds) { ok = false; detail += "corollary Z x Z/6; "; }
        }
        // vacuous and labeled on finite extensions; note present in the report
        std::size_t finite_main = 0, vacuous_main = 0;
        bool note_present = true;
        for (const auto& e : rep.at("entries")) {
            bool is_finite = e.at("universe") == "finite";
            for (const auto& v : e.at("verdicts")) {
                if (v.at("property") != "main_theorem") continue;
                if (v.value("note", std::string{}).find("not falsifiable at desk scale") ==
                    std::string::npos)
                    note_present = false;
                if (is_finite) {
                    ++finite_main;
                    if (v.value("vacuous", false)) ++vacuous_main;
                }
            }
        }
        if (!note_present) { ok = false; detail += "missing desk-scale note; "; }
        if (finite_main == 0 || finite_main != vacuous_main) {
            ok = false;
            detail += "finite main-theorem verdicts not labeled vacuous; ";
        }
        // the worked forced-a0 example
        {
            auto R = plain_Z();
            MixedUniverse u{MixedExtension{R}};
            auto a = zideal(R, 12);
            auto a0 = zideal(R, 24);
            auto res = construct_finite_generators(u, a, &a0);
            bool worked = res.verdict.holds && u.ideal_equal(res.b, a) &&
                          res.verdict.witness["steps"].size() == 3 &&
                          res.verdict.witness["steps"][1]["ideal"]["display"] == "36*Z" &&
                          res.verdict.witness["steps"][2]["ideal"]["display"] == "24*Z";
            if (!worked) { ok = false; detail += "forced-a0 worked example; "; }
        }
        const json* fg = find_law(rep, "finite_generators");
        std::size_t fg_n = fg ? fg->at("instances").get<std::size_t>() : 0;
        if (!(fg && fg->at("failure_count") == 0 && fg_n >= 30)) {
            ok = false;
            detail += "finite_generators law (" + std::to_string(fg_n) + " instances); ";
        }
        const json* mt = find_law(rep, "main_theorem");
        const json* pc = find_law(rep, "prufer_corollary");
        if (!(mt && mt->at("failure_count") == 0 && pc && pc->at("failure_count") == 0)) {
            ok = false;
            detail += "law failures; ";
        }
        criterion(8, "main theorem + Prufer-ring corollary + " + std::to_string(fg_n) +
                         " generator constructions (>= 30), desk-scale note present",
                  ok, detail);
    }

    // ---- criterion 9: poset module -------------------------------------------
    {
        bool ok = true;
        std::string detail;
        // divisor-of-60 poset, chains, antichains
        {
            std::vector<std::int64_t> divs;
            for (std::int64_t d = 2; d <= 60; ++d)
                if (60 % d == 0) divs.push_back(d);
            std::vector<std::string> labels;
            for (auto d : divs) labels.push_back(std::to_string(d) + "Z");
            std::vector<std::pair<std::size_t, std::size_t>> rel;
            for (std::size_t i = 0; i < divs.size(); ++i)
                for (std::size_t j = 0; j < divs.size(); ++j)
                    if (i != j && divs[i] % divs[j] == 0) rel.emplace_back(i, j);
            std::vector<std::size_t> gamma(divs.size());
            for (std::size_t i = 0; i < gamma.size(); ++i) gamma[i] = i;
            auto d60 = FinitePoset::from_relation(labels, rel, gamma);
            if (!check_hypotheses(d60).all_hold()) { ok = false; detail += "divisor-60 hypotheses; "; }
            if (!check_equivalence(d60).holds) { ok = false; detail += "divisor-60 equivalence; "; }

            auto ch = FinitePoset::from_covers({"a", "b", "c"}, {{0, 1}, {1, 2}}, {0, 1, 2});
            if (!check_hypotheses(ch).all_hold() || !check_equivalence(ch).holds) {
                ok = false;
                detail += "chain; ";
            }
            auto an = FinitePoset::from_covers({"x", "y", "z"}, {}, {0, 1, 2});
            if (!check_hypotheses(an).all_hold() || !check_equivalence(an).holds) {
                ok = false;
                detail += "antichain; ";
            }
            auto bad = FinitePoset::from_covers({"a1", "a2", "b"}, {{0, 2}, {1, 2}}, {0, 1});
            auto hb = check_hypotheses(bad);
            if (hb.b.holds || hb.b.witness.value("a1", std::string{}) != "a1" ||
                hb.b.witness.value("b", std::string{}) != "b") {
                ok = false;
                detail += "violating poset witness; ";
            }
        }
        // bridge on Z with bound 60
        {
            MixedUniverse u{MixedExtension{plain_Z()}};
            auto rip = build_regular_ideal_poset(u, 60);
            if (rip.empty_omega || !check_hypotheses(rip.poset).all_hold() || !rip.bridge.holds) {
                ok = false;
                detail += "Z bound-60 bridge; ";
            }
        }
        // brute-force agreement on posets up to 15 elements
        {
            std::mt19937_64 rng(99);
            for (int trial = 0; trial < 10 && ok; ++trial) {
                std::size_t n = 4 + rng() % 12;
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
                auto p = FinitePoset::from_covers(labels, covers, gamma);
                for (std::size_t a = 0; a < n && ok; ++a) {
                    auto got = comaximal_subsets_above(p, a);
                    std::vector<std::size_t> verts;
                    for (std::size_t g : p.gamma_indices())
                        if (p.leq(a, g)) verts.push_back(g);
                    std::vector<std::vector<std::size_t>> comax;
                    for (std::size_t mask = 0; mask < (std::size_t(1) << verts.size()); ++mask) {
                        std::vector<std::size_t> sub;
                        for (std::size_t b = 0; b < verts.size(); ++b)
                            if (mask & (std::size_t(1) << b)) sub.push_back(verts[b]);
                        bool co = true;
                        for (std::size_t x = 0; x < sub.size() && co; ++x)
                            for (std::size_t y = x + 1; y < sub.size() && co; ++y)
                                if (!are_comaximal(p, sub[x], sub[y])) co = false;
                        if (co) comax.push_back(std::move(sub));
                    }
                    std::vector<std::vector<std::size_t>> expect;
                    for (const auto& s : comax) {
                        bool maximal = !s.empty();
                        for (const auto& t : comax)
                            if (t.size() > s.size() &&
                                std::includes(t.begin(), t.end(), s.begin(), s.end()))
                                maximal = false;
                        if (maximal) expect.push_back(s);
                    }
                    std::sort(expect.begin(), expect.end());
                    if (!verts.empty() && got != expect) {
                        ok = false;
                        detail += "brute-force mismatch; ";
                    }
                }
            }
        }
        const json* law = find_law(rep, "poset_bridge");
        if (!(law && law->at("failure_count") == 0)) { ok = false; detail += "bridge law; "; }
        criterion(9, "poset hypotheses, equivalence counts, witness, bridge, brute-force match",
                  ok, detail);
    }

    // ---- criterion 10: determinism + witness replay ---------------------------
    {
        bool ok = true;
        std::string detail;
        auto corpus2 = builtin_corpus(cfg);
        HarnessConfig cfg2 = cfg;
        cfg2.threads = 1; // the report must not depend on the worker count
        auto report2 = run_suite(corpus2, {}, cfg2);
        if (rep.dump(2) != report2.document.dump(2)) {
            ok = false;
            detail += "reports differ across runs; ";
        }
        // replay every false-verdict witness through analyze (capped)
        std::size_t replayed = 0, budget = 24;
        for (const auto& e : rep.at("entries")) {
            if (!budget) break;
            const CorpusEntry* src = nullptr;
            for (const auto& c : corpus)
                if (c.id == e.at("id")) src = &c;
            if (!src) continue;
            for (const auto& v : e.at("verdicts")) {
                if (!budget) break;
                if (v.value("holds", true)) continue;
                if (!v.contains("witness")) continue;
                std::string prop = v.at("property");
                std::string path = "acceptance_replay.json";
                {
                    std::ofstream out(path);
                    out << extension_to_json(*src).dump(2);
                }
                auto rep_an = analyze_file(path, {prop}, cfg);
                bool matched = false;
                for (const auto& rv : rep_an.document.at("verdicts"))
                    if (rv.at("property") == prop && rv.value("holds", true) == false &&
                        rv.value("witness", json{}) == v.at("witness"))
                        matched = true;
                if (!matched) {
                    ok = false;
                    detail += "replay failed for " + e.at("id").get<std::string>() + "/" + prop + "; ";
                }
                ++replayed;
                --budget;
            }
        }
        if (replayed == 0) { ok = false; detail += "no witnesses replayed; "; }
        criterion(10, "byte-identical reports across runs; " + std::to_string(replayed) +
                          " failure witnesses replayed through analyze",
                  ok, detail);
    }

    std::cout << (failures == 0 ? "acceptance: all criteria green\n"
                                : "acceptance: FAILURES PRESENT\n");
    return failures == 0 ? 0 : 1;
}
