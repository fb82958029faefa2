#include "extalg/laws.hpp"

#include <algorithm>

namespace extalg {

EntryContext::EntryContext(const CorpusEntry& e, const HarnessConfig& c) : entry(e), cfg(c) {
    if (e.universe == CorpusEntry::Universe::finite) {
        fin.emplace(*e.fin, c.max_ring_size);
    } else {
        mix.emplace(*e.mix, c.sweep);
    }
}

namespace {

json fail_item(const std::string& entry_id, json detail) {
    return json{{"entry", entry_id}, {"detail", std::move(detail)}};
}

// --- generic per-universe law bodies ---------------------------------------------

template <class U>
void inv_flat_on(const U& u, const std::string& id, LawContribution& c) {
    for (const auto& a : u.test_ideals()) {
        ++c.instances;
        auto inv = is_B_invertible(u, a);
        bool reg = u.b_regular(a).holds;
        bool flat = is_flat(u, a).holds;
        if (inv.verdict.holds != (reg && flat)) {
            c.failures.push_back(fail_item(id, json{{"ideal", u.ideal_json(a)},
                                                    {"invertible", inv.verdict.holds},
                                                    {"B_regular", reg},
                                                    {"flat", flat}}));
            continue;
        }
        if (inv.verdict.holds) {
            auto part = u.make_partition(a, inv.inverse);
            if (!u.verify_partition(a, inv.inverse, part))
                c.failures.push_back(fail_item(
                    id, json{{"ideal", u.ideal_json(a)}, {"reason", "partition failed to verify"}}));
        }
    }
}

template <class U>
void remark_a_on(const U& u, const std::string& id, LawContribution& c) {
    for (const auto& a : u.test_ideals()) {
        ++c.instances;
        if (is_faithfully_flat(u, a).holds && !is_locally_principal(u, a).holds)
            c.failures.push_back(fail_item(id, json{{"ideal", u.ideal_json(a)}}));
    }
}

template <class U>
void prop_faithfully_on(const U& u, const std::string& id, LawContribution& c) {
    for (const auto& a : u.test_ideals()) {
        if (!u.b_regular(a).holds) continue;
        ++c.instances;
        if (u.is_unit_ideal(a)) ++c.vacuous;
        bool ff = is_faithfully_flat(u, a).holds;
        bool lp = is_locally_principal(u, a).holds;
        if (ff != lp)
            c.failures.push_back(fail_item(
                id, json{{"ideal", u.ideal_json(a)}, {"faithfully_flat", ff}, {"locally_principal", lp}}));
    }
}

template <class U>
void colon_adjunction_on(const U& u, const std::string& id, LawContribution& c) {
    const auto& ideals = u.test_ideals();
    std::size_t budget = 120;
    for (std::size_t i = 0; i < ideals.size() && budget; ++i)
        for (std::size_t j = 0; j < ideals.size() && budget; ++j) {
            --budget;
            ++c.instances;
            const auto& s = ideals[i];
            const auto& t = ideals[j];
            auto q = u.colon_in_A(s, t);
            if (!u.ideal_subset(u.ideal_product(t, q), s)) {
                c.failures.push_back(fail_item(id, json{{"kind", "T*[S:T] not inside S"},
                                                        {"S", u.ideal_json(s)},
                                                        {"T", u.ideal_json(t)}}));
                continue;
            }
            auto st = u.ideal_product(s, t);
            if (!u.ideal_subset(s, u.colon_in_A(st, t)))
                c.failures.push_back(fail_item(id, json{{"kind", "S not inside [ST:T]"},
                                                        {"S", u.ideal_json(s)},
                                                        {"T", u.ideal_json(t)}}));
        }
}

template <class U>
void local_global_on(const U& u, const std::string& id, LawContribution& c) {
    const auto& ideals = u.test_ideals();
    std::size_t budget = 400;
    for (std::size_t i = 0; i < ideals.size() && budget; ++i)
        for (std::size_t j = i; j < ideals.size() && budget; ++j) {
            --budget;
            ++c.instances;
            bool eq = u.ideal_equal(ideals[i], ideals[j]);
            bool local_eq = true;
            auto maxes = u.test_maxes(ideals[i]);
            auto more = u.test_maxes(ideals[j]);
            maxes.insert(maxes.end(), more.begin(), more.end());
            for (const auto& m : maxes)
                if (!u.localized_equal(ideals[i], ideals[j], m)) { local_eq = false; break; }
            if (eq != local_eq)
                c.failures.push_back(fail_item(id, json{{"a", u.ideal_json(ideals[i])},
                                                        {"b", u.ideal_json(ideals[j])},
                                                        {"equal", eq},
                                                        {"locally_equal", local_eq}}));
        }
}

template <class U>
void lemma_instances_on(const U& u, const std::string& id, LawContribution& c,
                        std::size_t per_entry_cap) {
    std::size_t used = 0;
    for (const auto& a : u.test_ideals()) {
        if (used >= per_entry_cap) break;
        if (!u.support_is_finite(a)) continue;
        // family 1: the trivial {A}
        {
            ++c.instances;
            ++used;
            std::vector<typename U::Ideal> family = {u.unit_ideal()};
            auto res = verify_lemma_technical(u, a, family);
            if (!res.holds) c.failures.push_back(fail_item(id, res.to_json()));
            auto ifr = compute_i_F(u, a, family);
            if (!u.ideal_equal(ifr.ideal, a))
                c.failures.push_back(
                    fail_item(id, json{{"reason", "i_F with family {A} must be a"}}));
        }
        // family 2: prime-power hulls at the invertible-maximal part of the
        // support (members must be invertible, which rules out tail hulls)
        auto sup = u.support(a);
        std::vector<typename U::Ideal> family;
        for (const auto& m : sup) {
            auto mid = u.ideal_of_max(m);
            if (!is_B_invertible(u, mid).verdict.holds) continue;
            // the largest power m^k still containing a
            auto acc = u.unit_ideal();
            typename U::Ideal best = u.unit_ideal();
            for (int k = 1; k <= 32; ++k) {
                acc = u.ideal_product(acc, mid);
                if (u.ideal_subset(a, acc))
                    best = acc;
                else
                    break;
            }
            family.push_back(best);
        }
        bool distinct_ok = !family.empty();
        for (std::size_t x = 0; x < family.size() && distinct_ok; ++x)
            for (std::size_t y = x + 1; y < family.size() && distinct_ok; ++y)
                if (u.ideal_equal(family[x], family[y])) distinct_ok = false;
        if (distinct_ok) {
            ++c.instances;
            auto res = verify_lemma_technical(u, a, family);
            if (!res.holds) c.failures.push_back(fail_item(id, res.to_json()));
        }
    }
}

template <class U>
void finite_generators_on(const U& u, const std::string& id, LawContribution& c,
                          std::size_t per_entry_cap, bool mixed) {
    std::size_t used = 0;
    for (const auto& a : u.test_ideals()) {
        if (used >= per_entry_cap) break;
        if (!u.b_regular(a).holds) continue;
        ++used;
        {
            ++c.instances;
            if (u.is_unit_ideal(a)) ++c.vacuous;
            auto res = construct_finite_generators(u, a);
            if (!res.verdict.holds) c.failures.push_back(fail_item(id, res.verdict.to_json()));
        }
        if (mixed && u.support_is_finite(a)) {
            auto sup = u.support(a);
            if (!sup.empty()) {
                // forced a0 strictly below a at its first support maximal
                auto a0 = u.ideal_product(a, u.ideal_of_max(sup.front()));
                ++c.instances;
                auto res = construct_finite_generators(u, a, &a0);
                if (!res.verdict.holds) c.failures.push_back(fail_item(id, res.verdict.to_json()));
            }
        }
    }
}

// a weak-surjectivity failure witness must name an element of B outside A_[m]
bool validate_ws_witness(const FiniteUniverse& u, const PropertyVerdict& ws) {
    if (ws.holds) return true;
    if (!ws.witness.contains("x")) return false;
    // recompute: the witness element must lie in B but outside A_[m]
    for (std::size_t i = 0; i < u.max_count(); ++i) {
        if (u.max_extends_to_B(i)) continue;
        auto bracket = u.bracket_localization(i);
        for (Packed x : u.B()->elements())
            if (!bracket->contains(x) &&
                u.B()->ambient().describe(x) == ws.witness["x"].get<std::string>())
                return true;
    }
    return false;
}

} // namespace

// --- entry evaluation ----------------------------------------------------------

std::vector<PropertyVerdict> evaluate_entry(EntryContext& ctx,
                                            const std::vector<std::string>& props) {
    // the unfiltered evaluation is pure: compute once, filter afterwards
    if (ctx.all_verdicts) {
        if (props.empty()) return *ctx.all_verdicts;
        std::vector<PropertyVerdict> out;
        for (const auto& v : *ctx.all_verdicts) {
            std::string suffix = v.property;
            if (auto dot = suffix.find('.'); dot != std::string::npos)
                suffix = suffix.substr(dot + 1);
            if (std::find(props.begin(), props.end(), v.property) != props.end() ||
                std::find(props.begin(), props.end(), suffix) != props.end())
                out.push_back(v);
        }
        return out;
    }
    auto wanted = [&](const std::string& p) {
        return props.empty() || std::find(props.begin(), props.end(), p) != props.end();
    };
    std::vector<PropertyVerdict> out;
    auto push = [&](PropertyVerdict v, const std::string& name) {
        v.property = name;
        out.push_back(std::move(v));
    };

    auto eval_ext = [&](auto& u) {
        if (wanted("weakly_surjective")) push(is_weakly_surjective(u), "weakly_surjective");
        if (wanted("prufer")) push(is_prufer(u), "prufer");
        if (wanted("almost_prufer")) push(is_almost_prufer(u), "almost_prufer");
        if (wanted("finite_character")) push(has_finite_character(u), "finite_character");
        if (wanted("theorem_2_1")) push(verify_theorem_2_1(u), "theorem_2_1");
        if (wanted("main_theorem")) push(verify_main_theorem(u), "main_theorem");
    };
    auto eval_ideal = [&](auto& u, const std::string& name, const auto& ideal) {
        auto id_prop = [&](const char* p) {
            return wanted(p) || wanted(name + "." + p);
        };
        if (id_prop("flat")) push(is_flat(u, ideal), name + ".flat");
        if (id_prop("faithfully_flat")) push(is_faithfully_flat(u, ideal), name + ".faithfully_flat");
        if (id_prop("locally_principal"))
            push(is_locally_principal(u, ideal), name + ".locally_principal");
        if (id_prop("regular_ideal")) push(is_regular_ideal(u, ideal), name + ".regular_ideal");
        if (id_prop("B_regular")) push(is_B_regular(u, ideal), name + ".B_regular");
        if (id_prop("B_invertible"))
            push(is_B_invertible(u, ideal).verdict, name + ".B_invertible");
        if (id_prop("square_is_self")) {
            auto sq = u.ideal_product(ideal, ideal);
            push(make_verdict("", u.ideal_equal(sq, ideal)), name + ".square_is_self");
        }
    };

    if (ctx.fin) {
        eval_ext(*ctx.fin);
        for (const auto& [name, ideal] : ctx.entry.fin_ideals) eval_ideal(*ctx.fin, name, ideal);
        for (const auto& [name, val] : ctx.entry.fin_valuations) {
            if (!wanted("manis_valuation") && !wanted(name + ".manis_valuation")) continue;
            auto res = check_manis_valuation(ctx.fin->B(), val);
            push(res.verdict, name + ".manis_valuation");
        }
    } else {
        eval_ext(*ctx.mix);
        for (const auto& [name, ideal] : ctx.entry.mix_ideals) eval_ideal(*ctx.mix, name, ideal);
        for (const auto& [name, rule] : ctx.entry.mix_valuations) {
            if (!wanted("manis_valuation") && !wanted(name + ".manis_valuation")) continue;
            auto res = check_manis_valuation(ctx.mix->extension(), rule);
            push(res.verdict, name + ".manis_valuation");
        }
    }
    if (props.empty()) ctx.all_verdicts = out;
    return out;
}

// --- the registry ---------------------------------------------------------------

const std::vector<Law>& law_registry() {
    static const std::vector<Law> laws = {
        {"remark_b",
         "pA in Z/pq: flat, locally principal, idempotent square, not faithfully flat, not regular",
         [](EntryContext& ctx) {
             LawContribution c;
             bool has_ideal_flags = false;
             for (const auto& [k, v] : ctx.entry.expected)
                 if (k.find('.') != std::string::npos) has_ideal_flags = true;
             if (!has_ideal_flags) return c;
             std::vector<std::string> props;
             auto verdicts = evaluate_entry(ctx, props);
             for (const auto& [key, want] : ctx.entry.expected) {
                 if (key.find('.') == std::string::npos) continue;
                 ++c.instances;
                 bool found = false;
                 for (const auto& v : verdicts)
                     if (v.property == key) {
                         found = true;
                         if (v.holds != want)
                             c.failures.push_back(fail_item(
                                 ctx.entry.id,
                                 json{{"flag", key}, {"expected", want}, {"got", v.holds}}));
                     }
                 if (!found)
                     c.failures.push_back(
                         fail_item(ctx.entry.id, json{{"flag", key}, {"reason", "not evaluated"}}));
             }
             return c;
         }},
        {"example_golden",
         "extension-level golden flags (diagonal example and friends), with witness validation",
         [](EntryContext& ctx) {
             LawContribution c;
             bool has_ext_flags = false;
             for (const auto& [k, v] : ctx.entry.expected)
                 if (k.find('.') == std::string::npos) has_ext_flags = true;
             if (!has_ext_flags) return c;
             auto verdicts = evaluate_entry(ctx);
             for (const auto& [key, want] : ctx.entry.expected) {
                 if (key.find('.') != std::string::npos) continue;
                 ++c.instances;
                 for (const auto& v : verdicts) {
                     if (v.property != key) continue;
                     if (v.holds != want) {
                         c.failures.push_back(fail_item(
                             ctx.entry.id, json{{"flag", key}, {"expected", want}, {"got", v.holds}}));
                     } else if (key == "weakly_surjective" && !want && ctx.fin) {
                         if (!validate_ws_witness(*ctx.fin, v))
                             c.failures.push_back(fail_item(
                                 ctx.entry.id, json{{"flag", key}, {"reason", "witness invalid"}}));
                     }
                 }
             }
             return c;
         }},
        {"prop_inv_flat",
         "an ideal is B-invertible iff it is B-regular, finitely generated and flat; "
         "positives carry a verified partition of unity",
         [](EntryContext& ctx) {
             LawContribution c;
             if (ctx.fin)
                 inv_flat_on(*ctx.fin, ctx.entry.id, c);
             else
                 inv_flat_on(*ctx.mix, ctx.entry.id, c);
             return c;
         }},
        {"remark_a", "faithfully flat implies locally principal, over every ideal",
         [](EntryContext& ctx) {
             LawContribution c;
             if (ctx.fin)
                 remark_a_on(*ctx.fin, ctx.entry.id, c);
             else
                 remark_a_on(*ctx.mix, ctx.entry.id, c);
             return c;
         }},
        {"prop_faithfully",
         "for B-regular ideals: faithfully flat iff locally principal",
         [](EntryContext& ctx) {
             LawContribution c;
             if (ctx.fin)
                 prop_faithfully_on(*ctx.fin, ctx.entry.id, c);
             else
                 prop_faithfully_on(*ctx.mix, ctx.entry.id, c);
             return c;
         }},
        {"oracle_flat_agree",
         "the local-freeness flatness test agrees with the tensor-product oracle",
         [](EntryContext& ctx) {
             LawContribution c;
             if (!ctx.fin) return c;
             const auto& u = *ctx.fin;
             if (u.A()->size() > ctx.cfg.oracle_cap) {
                 c.notes.push_back(json{{"entry", ctx.entry.id}, {"skipped", "above oracle cap"}});
                 return c;
             }
             for (const auto& a : u.test_ideals()) {
                 ++c.instances;
                 bool fast = is_flat(u, a).holds;
                 auto oracle = flatness_oracle(u, a, ctx.cfg.oracle_cap);
                 if (fast != oracle.holds)
                     c.failures.push_back(fail_item(ctx.entry.id,
                                                    json{{"ideal", u.ideal_json(a)},
                                                         {"local_test", fast},
                                                         {"oracle", oracle.to_json()}}));
             }
             return c;
         }},
        {"lemma_technical",
         "i_F localizes to a A_m away from the family and to [a : b0] A_m under its "
         "unique member; a finite multiset of members cuts i_F out",
         [](EntryContext& ctx) {
             LawContribution c;
             if (ctx.fin)
                 lemma_instances_on(*ctx.fin, ctx.entry.id, c, 3);
             else
                 lemma_instances_on(*ctx.mix, ctx.entry.id, c, 8);
             return c;
         }},
        {"theorem_2_1",
         "Prufer iff weakly surjective with every finitely generated B-regular ideal B-invertible",
         [](EntryContext& ctx) {
             LawContribution c;
             ++c.instances;
             auto v = ctx.fin ? verify_theorem_2_1(*ctx.fin) : verify_theorem_2_1(*ctx.mix);
             if (!v.holds) c.failures.push_back(fail_item(ctx.entry.id, v.to_json()));
             return c;
         }},
        {"main_theorem",
         "in almost Prufer extensions: regular locally principal ideals invertible iff "
         "finite character",
         [](EntryContext& ctx) {
             LawContribution c;
             ++c.instances;
             auto v = ctx.fin ? verify_main_theorem(*ctx.fin) : verify_main_theorem(*ctx.mix);
             if (v.vacuous) ++c.vacuous;
             if (!v.holds) c.failures.push_back(fail_item(ctx.entry.id, v.to_json()));
             return c;
         }},
        {"prufer_corollary",
         "a Prufer ring has invertible regular locally principal ideals iff it has "
         "the finite character",
         [](EntryContext& ctx) {
             LawContribution c;
             if (!ctx.mix) return c;
             ++c.instances;
             auto v = verify_prufer_ring_corollary(ctx.mix->A(), ctx.cfg.sweep);
             if (v.vacuous) ++c.vacuous;
             if (!v.holds) c.failures.push_back(fail_item(ctx.entry.id, v.to_json()));
             return c;
         }},
        {"finite_generators",
         "the locally-finitely-generated construction returns b equal to a",
         [](EntryContext& ctx) {
             LawContribution c;
             if (ctx.fin)
                 finite_generators_on(*ctx.fin, ctx.entry.id, c, 2, false);
             else
                 finite_generators_on(*ctx.mix, ctx.entry.id, c, 8, true);
             return c;
         }},
        {"finite_character", "B-regular ideals lie in finitely many maximal ideals",
         [](EntryContext& ctx) {
             LawContribution c;
             ++c.instances;
             auto v = ctx.fin ? has_finite_character(*ctx.fin) : has_finite_character(*ctx.mix);
             if (v.vacuous) ++c.vacuous;
             if (!v.holds) c.failures.push_back(fail_item(ctx.entry.id, v.to_json()));
             return c;
         }},
        {"local_global", "ideals agree iff they agree at every relevant maximal ideal",
         [](EntryContext& ctx) {
             LawContribution c;
             if (ctx.fin)
                 local_global_on(*ctx.fin, ctx.entry.id, c);
             else
                 local_global_on(*ctx.mix, ctx.entry.id, c);
             return c;
         }},
        {"maximal_complete",
         "every proper ideal lies under a maximal one; returned maximals are maximal",
         [](EntryContext& ctx) {
             LawContribution c;
             if (!ctx.fin) return c;
             const auto& u = *ctx.fin;
             if (u.A()->size() > 64) {
                 c.notes.push_back(json{{"entry", ctx.entry.id}, {"skipped", "ring above 64"}});
                 return c;
             }
             const auto& A = u.A();
             for (const auto& a : u.test_ideals()) {
                 if (u.is_unit_ideal(a)) continue;
                 ++c.instances;
                 bool covered = false;
                 for (std::size_t i = 0; i < u.max_count() && !covered; ++i)
                     covered = a.subset_of(u.ideal_of_max(i));
                 if (!covered)
                     c.failures.push_back(
                         fail_item(ctx.entry.id, json{{"uncovered_ideal", u.ideal_json(a)}}));
             }
             for (std::size_t i = 0; i < u.max_count(); ++i) {
                 ++c.instances;
                 if (!is_maximal_ideal(A, u.ideal_of_max(i)))
                     c.failures.push_back(
                         fail_item(ctx.entry.id, json{{"not_maximal", u.max_json(i)}}));
             }
             return c;
         }},
        {"colon_adjunction", "T[S:T] inside S and S inside [ST:T]",
         [](EntryContext& ctx) {
             LawContribution c;
             if (ctx.fin)
                 colon_adjunction_on(*ctx.fin, ctx.entry.id, c);
             else
                 colon_adjunction_on(*ctx.mix, ctx.entry.id, c);
             return c;
         }},
        {"manis_pairs",
         "valuations satisfy the four axioms and their derived pairs pass the pair criterion",
         [](EntryContext& ctx) {
             LawContribution c;
             if (ctx.fin) {
                 const auto& u = *ctx.fin;
                 for (const auto& m : maximal_ideals(u.B())) {
                     ++c.instances;
                     auto val = trivial_valuation(u.B(), m.ideal);
                     auto res = check_manis_valuation(u.B(), val);
                     bool ok = res.verdict.holds &&
                               is_manis_pair(*res.A_v, *res.p_v, u.B()).holds;
                     if (!ok)
                         c.failures.push_back(fail_item(ctx.entry.id, res.verdict.to_json()));
                 }
                 for (const auto& [name, val] : ctx.entry.fin_valuations) {
                     ++c.instances;
                     auto res = check_manis_valuation(u.B(), val);
                     bool ok = res.verdict.holds &&
                               is_manis_pair(*res.A_v, *res.p_v, u.B()).holds;
                     if (!ok)
                         c.failures.push_back(fail_item(ctx.entry.id, res.verdict.to_json()));
                 }
             } else {
                 const auto& u = *ctx.mix;
                 const auto& ext = u.extension();
                 for (std::size_t i = 0; i < ext.A.r(); ++i) {
                     std::size_t found = 0;
                     for (std::int64_t p = 2; p < 50 && found < 2; ++p) {
                         bool prime = true;
                         for (std::int64_t d = 2; d * d <= p; ++d)
                             if (p % d == 0) { prime = false; break; }
                         if (!prime || !ext.A.slots[i].prime_admissible(p)) continue;
                         ++found;
                         ++c.instances;
                         auto res = check_manis_valuation(ext, PAdicRule{i, p});
                         bool ok = res.verdict.holds &&
                                   is_manis_pair(ext, *res.A_v, *res.p_v).holds;
                         if (!ok)
                             c.failures.push_back(fail_item(ctx.entry.id, res.verdict.to_json()));
                     }
                 }
                 for (const auto& [name, rule] : ctx.entry.mix_valuations) {
                     ++c.instances;
                     auto res = check_manis_valuation(ext, rule);
                     bool ok =
                         res.verdict.holds && is_manis_pair(ext, *res.A_v, *res.p_v).holds;
                     if (!ok) c.failures.push_back(fail_item(ctx.entry.id, res.verdict.to_json()));
                 }
             }
             return c;
         }},
        {"poset_bridge",
         "the B-regular ideal poset satisfies the theorem hypotheses and the "
         "corollary-proof constructions",
         [](EntryContext& ctx) {
             LawContribution c;
             ++c.instances;
             auto handle = [&](auto&& rip) {
                 if (rip.empty_omega) {
                     ++c.vacuous;
                     c.notes.push_back(json{{"entry", ctx.entry.id},
                                            {"note", "empty Omega: no proper B-regular ideals"}});
                     return;
                 }
                 auto hyp = check_hypotheses(rip.poset);
                 if (!hyp.all_hold())
                     c.failures.push_back(fail_item(ctx.entry.id,
                                                    json{{"a", hyp.a.to_json()},
                                                         {"b", hyp.b.to_json()},
                                                         {"c", hyp.c.to_json()}}));
                 if (!rip.bridge.holds)
                     c.failures.push_back(fail_item(ctx.entry.id, rip.bridge.to_json()));
                 if (rip.poset.size() <= 24) {
                     auto eq = check_equivalence(rip.poset);
                     if (!eq.holds) c.failures.push_back(fail_item(ctx.entry.id, eq.to_json()));
                 }
             };
             if (ctx.fin) {
                 handle(build_regular_ideal_poset(*ctx.fin, 64));
             } else {
                 std::int64_t bound = ctx.mix->A().r() <= 1 ? ctx.cfg.poset_bound_r1
                                                            : ctx.cfg.poset_bound_r2;
                 handle(build_regular_ideal_poset(*ctx.mix, bound));
             }
             return c;
         }},
    };
    return laws;
}

std::vector<std::string> law_ids() {
    std::vector<std::string> out;
    for (const auto& l : law_registry()) out.push_back(l.id);
    return out;
}

} // namespace extalg
