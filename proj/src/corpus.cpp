#include "extalg/corpus.hpp"

#include <algorithm>
#include <iostream>
#include <random>

namespace extalg {

namespace {

json zn_ambient(std::int64_t n) {
    json amb = json::array();
    std::int64_t left = n;
    for (std::int64_t p = 2; p * p <= left; ++p) {
        if (left % p) continue;
        int k = 0;
        while (left % p == 0) { left /= p; ++k; }
        amb.push_back(json::array({p, k, json::array({0, 1})}));
    }
    if (left > 1) amb.push_back(json::array({left, 1, json::array({0, 1})}));
    return amb;
}

// coordinates of the integer m in the Z/n ambient
json zn_coords(const json& ambient, std::int64_t m) {
    json out = json::array();
    for (const auto& comp : ambient) {
        std::int64_t p = comp[0].get<std::int64_t>();
        int k = comp[1].get<int>();
        std::int64_t pk = 1;
        for (int i = 0; i < k; ++i) pk *= p;
        out.push_back(json::array({((m % pk) + pk) % pk}));
    }
    return out;
}

json remark_b_entry(std::int64_t p, std::int64_t q) {
    json amb = zn_ambient(p * q);
    json j;
    j["kind"] = "finite_extension";
    j["id"] = "remark_b_" + std::to_string(p) + "_" + std::to_string(q);
    j["ambient"] = amb;
    j["ideals"] = json::array({json{{"name", "pA"}, {"generators", json::array({zn_coords(amb, p)})}},
                               json{{"name", "qA"}, {"generators", json::array({zn_coords(amb, q)})}}});
    j["expected"] = json{{"pA.flat", true},
                         {"pA.faithfully_flat", false},
                         {"pA.locally_principal", true},
                         {"pA.regular_ideal", false},
                         {"pA.square_is_self", true}};
    return j;
}

json diag_entry(std::int64_t p, int n) {
    json amb = json::array();
    json bgens = json::array();
    for (int i = 0; i < n; ++i) amb.push_back(json::array({p, 1, json::array({0, 1})}));
    for (int i = 0; i < n; ++i) {
        json coords = json::array();
        for (int k = 0; k < n; ++k) coords.push_back(json::array({k == i ? 1 : 0}));
        bgens.push_back(coords);
    }
    json j;
    j["kind"] = "finite_extension";
    j["id"] = "example_diag_F" + std::to_string(p) + "_" + std::to_string(n);
    j["ambient"] = amb;
    j["B_generators"] = bgens;
    j["expected"] =
        json{{"almost_prufer", true}, {"weakly_surjective", false}, {"prufer", false}};
    return j;
}

json nonlp_entry() {
    json amb = json::array({json::array({2, 1, json::array({0, 0, 1})}),
                            json::array({2, 1, json::array({0, 0, 1})})});
    json gx = json::array({json::array({0, 1}), json::array({0})});
    json gy = json::array({json::array({0}), json::array({0, 1})});
    json j;
    j["kind"] = "finite_extension";
    j["id"] = "nonlp_xy";
    j["ambient"] = amb;
    j["A_generators"] = json::array({gx, gy});
    j["B_generators"] = json::array({gx, gy});
    j["ideals"] = json::array({json{{"name", "mxy"}, {"generators", json::array({gx, gy})}}});
    j["expected"] = json{{"mxy.locally_principal", false}, {"mxy.flat", false}};
    return j;
}

json small_field_extension(const std::string& id, const json& comp) {
    // prime subring inside the full one-component ring
    json j;
    j["kind"] = "finite_extension";
    j["id"] = id;
    j["ambient"] = json::array({comp});
    j["B_generators"] = json::array({json::array({json::array({0, 1})})});
    j["expected"] =
        json{{"almost_prufer", true}, {"weakly_surjective", false}, {"prufer", false}};
    return j;
}

json zn_entry(std::int64_t n) {
    json j;
    j["kind"] = "finite_extension";
    j["id"] = "zn_" + std::to_string(n);
    j["ambient"] = zn_ambient(n);
    json ideals = json::array();
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            ideals.push_back(json{{"name", std::to_string(d) + "A"},
                                  {"generators", json::array({zn_coords(j["ambient"], d)})}});
            break;
        }
    j["ideals"] = ideals;
    return j;
}

json mixed_entry(const std::string& id, const json& slots, const json& tail, const json& ideals,
                 const json& valuations) {
    json j;
    j["kind"] = "mixed_extension";
    j["id"] = id;
    j["slots"] = slots;
    j["tail"] = tail;
    if (!ideals.is_null()) j["ideals"] = ideals;
    if (!valuations.is_null()) j["valuations"] = valuations;
    return j;
}

json z6_tail() {
    json t;
    t["ambient"] = zn_ambient(6);
    return t;
}

} // namespace

std::vector<CorpusEntry> builtin_corpus(const HarnessConfig& cfg) {
    std::vector<json> sources;

    // golden: pA in Z/pq is flat and locally principal yet not faithfully flat
    for (auto [p, q] : std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 3}, {2, 5}, {3, 5}})
        sources.push_back(remark_b_entry(p, q));

    // golden: diagonal K in K^n
    for (std::int64_t p : {2, 3, 5})
        for (int n : {2, 3}) sources.push_back(diag_entry(p, n));

    // golden: the non-locally-principal (x, y) ring
    sources.push_back(nonlp_entry());

    // small one-component extensions: F2 in F4, F2 in F2[x]/(x^2)
    sources.push_back(small_field_extension("f2_in_f4", json::array({2, 1, json::array({1, 1, 1})})));
    sources.push_back(
        small_field_extension("f2_in_dual", json::array({2, 1, json::array({0, 0, 1})})));

    // trivial extensions over the divisor family
    for (std::int64_t n : {4, 6, 8, 9, 12, 16, 18, 24, 27, 30, 36}) sources.push_back(zn_entry(n));

    // a proper extension with a product ambient: Z/4 diagonal-ish inside Z/4 x F2
    {
        json amb = json::array({json::array({2, 2, json::array({0, 1})}),
                                json::array({2, 1, json::array({0, 1})})});
        json j;
        j["kind"] = "finite_extension";
        j["id"] = "charlift_in_z4xf2";
        j["ambient"] = amb;
        j["B_generators"] = json::array(
            {json::array({json::array({1}), json::array({0})})});
        sources.push_back(j);
    }

    // small-ring zoo: full product rings at or below the oracle cap, rich in
    // ideals
    {
        const json F2 = json::array({2, 1, json::array({0, 1})});
        const json F3 = json::array({3, 1, json::array({0, 1})});
        const json F5 = json::array({5, 1, json::array({0, 1})});
        const json Z4 = json::array({2, 2, json::array({0, 1})});
        const json Z8 = json::array({2, 3, json::array({0, 1})});
        const json Z9 = json::array({3, 2, json::array({0, 1})});
        const json F4 = json::array({2, 1, json::array({1, 1, 1})});
        const json D2 = json::array({2, 1, json::array({0, 0, 1})}); // F2[x]/(x^2)
        const json D3 = json::array({3, 1, json::array({0, 0, 1})}); // F3[x]/(x^2)
        const json F8 = json::array({2, 1, json::array({1, 1, 0, 1})});
        const json T2 = json::array({2, 1, json::array({0, 0, 0, 1})}); // F2[x]/(x^3)
        const json F9x = json::array({3, 1, json::array({1, 0, 1})});   // F3[x]/(x^2+1)
        std::vector<std::pair<std::string, json>> zoo = {
            {"zoo_f2xf2", json::array({F2, F2})},
            {"zoo_f2xf3", json::array({F2, F3})},
            {"zoo_f2xf4", json::array({F2, F4})},
            {"zoo_f2xf2xf2", json::array({F2, F2, F2})},
            {"zoo_f2xf2xf3", json::array({F2, F2, F3})},
            {"zoo_f2xf3xf5", json::array({F2, F3, F5})},
            {"zoo_z4xz4", json::array({Z4, Z4})},
            {"zoo_z4xf4", json::array({Z4, F4})},
            {"zoo_z4xz8", json::array({Z4, Z8})},
            {"zoo_z4xf2xf2", json::array({Z4, F2, F2})},
            {"zoo_z8xf2", json::array({Z8, F2})},
            {"zoo_z8xz4", json::array({Z8, Z4})},
            {"zoo_z9xf3", json::array({Z9, F3})},
            {"zoo_z9xz9", json::array({Z9, Z9})},
            {"zoo_dualxdual", json::array({D2, D2})},
            {"zoo_dualxf2xf2", json::array({D2, F2, F2})},
            {"zoo_dualxz4", json::array({D2, Z4})},
            {"zoo_dualxf3", json::array({D2, F3})},
            {"zoo_d3xf3", json::array({D3, F3})},
            {"zoo_f4xf4", json::array({F4, F4})},
            {"zoo_f8xf2", json::array({F8, F2})},
            {"zoo_t2xf2", json::array({T2, F2})},
            {"zoo_t2xz4", json::array({T2, Z4})},
            {"zoo_z8xz9", json::array({Z8, Z9})},
            {"zoo_z4xz9", json::array({Z4, Z9})},
            {"zoo_f4xz9", json::array({F4, Z9})},
            {"zoo_f2xz4", json::array({F2, Z4})},
            {"zoo_f3xz4", json::array({F3, Z4})},
            {"zoo_f3xf3", json::array({F3, F3})},
            {"zoo_f5xf5", json::array({F5, F5})},
            {"zoo_z8xf3", json::array({Z8, F3})},
            {"zoo_dualxf4", json::array({D2, F4})},
            {"zoo_dualxz8", json::array({D2, Z8})},
            {"zoo_t2xf3", json::array({T2, F3})},
            {"zoo_z9xf2", json::array({Z9, F2})},
            {"zoo_d3xf2", json::array({D3, F2})},
            {"zoo_f2xf2xf4", json::array({F2, F2, F4})},
            {"zoo_dualxd3", json::array({D2, D3})},
            {"zoo_f4xf8", json::array({F4, F8})},
            {"zoo_z4xf3xf2", json::array({Z4, F3, F2})},
            {"zoo_f9xf3", json::array({F9x, F3})},
        };
        for (auto& [id, amb] : zoo) {
            json j;
            j["kind"] = "finite_extension";
            j["id"] = id;
            j["ambient"] = amb;
            json bgens = json::array();
            for (std::size_t i = 0; i < amb.size(); ++i) {
                json coords = json::array();
                for (std::size_t k = 0; k < amb.size(); ++k)
                    coords.push_back(json::array({k == i ? 1 : 0}));
                bgens.push_back(coords);
                int deg = int(amb[i][2].size()) - 1;
                if (deg >= 2) {
                    json xc = json::array();
                    for (std::size_t k = 0; k < amb.size(); ++k) {
                        if (k == i)
                            xc.push_back(json::array({0, 1}));
                        else
                            xc.push_back(json::array({0}));
                    }
                    bgens.push_back(xc);
                }
            }
            j["B_generators"] = bgens;
            j["A_generators"] = bgens; // A = B: trivial extension, rich ideal lattice
            sources.push_back(j);
        }
    }

    // mixed universe entries
    json vZ = json::array({json{{"name", "v2"}, {"rule", "p-adic"}, {"slot", 0}, {"p", 2}},
                           json{{"name", "v3"}, {"rule", "p-adic"}, {"slot", 0}, {"p", 3}}});
    json idealsZ = json::array({json{{"name", "12Z"}, {"slots", json::array({"12"})}},
                                json{{"name", "30Z"}, {"slots", json::array({"30"})}}});
    sources.push_back(mixed_entry(
        "mixed_Z", json::array({json{{"flavor", "Z"}}}), nullptr, idealsZ, vZ));
    sources.back()["expected"] =
        json{{"weakly_surjective", true}, {"prufer", true}, {"almost_prufer", true}};

    for (std::int64_t p : {2, 3})
        sources.push_back(mixed_entry(
            "mixed_Zloc" + std::to_string(p),
            json::array({json{{"flavor", "Z_loc"}, {"p", p}}}), nullptr,
            json::array({json{{"name", "pZ"}, {"slots", json::array({std::to_string(p)})}}}),
            json::array({json{{"name", "vp"}, {"rule", "p-adic"}, {"slot", 0}, {"p", p}}})));

    sources.push_back(mixed_entry(
        "mixed_Zinv6",
        json::array({json{{"flavor", "Z_inv"}, {"inverted", json::array({2, 3})}}}), nullptr,
        json::array({json{{"name", "35Z"}, {"slots", json::array({"35"})}}}), nullptr));

    {
        json ideals = json::array(
            {json{{"name", "12ZxZ6"}, {"slots", json::array({"12"})}},
             json{{"name", "30ZxZ6"}, {"slots", json::array({"30"})}},
             json{{"name", "Zx2Z6"},
                  {"slots", json::array({"1"})},
                  {"tail_generators", json::array({zn_coords(zn_ambient(6), 2)})}}});
        sources.push_back(mixed_entry("mixed_Z_x_Z6", json::array({json{{"flavor", "Z"}}}),
                                      z6_tail(), ideals, vZ));
        sources.back()["expected"] =
            json{{"weakly_surjective", true}, {"prufer", true}, {"almost_prufer", true}};
    }

    sources.push_back(mixed_entry(
        "mixed_ZxZloc5",
        json::array({json{{"flavor", "Z"}}, json{{"flavor", "Z_loc"}, {"p", 5}}}), nullptr,
        json::array({json{{"name", "a"}, {"slots", json::array({"12", "25"})}}}), nullptr));

    {
        json tail;
        tail["ambient"] = json::array({json::array({2, 2, json::array({0, 1})})});
        sources.push_back(mixed_entry(
            "mixed_ZxZloc3_x_Z4",
            json::array({json{{"flavor", "Z"}}, json{{"flavor", "Z_loc"}, {"p", 3}}}), tail,
            json::array({json{{"name", "a"}, {"slots", json::array({"12", "9"})}}}), nullptr));
    }

    sources.push_back(mixed_entry("mixed_F6", json::array(), z6_tail(), nullptr, nullptr));

    // seeded random finite extensions
    std::size_t n_random = cfg.profile == "tiny" ? 6 : 56;
    std::mt19937_64 rng(cfg.seed * 0x9e3779b97f4a7c15ULL + 12345);
    const std::vector<json> comp_pool = {
        json::array({2, 1, json::array({0, 1})}),       // F2
        json::array({3, 1, json::array({0, 1})}),       // F3
        json::array({5, 1, json::array({0, 1})}),       // F5
        json::array({7, 1, json::array({0, 1})}),       // F7
        json::array({2, 2, json::array({0, 1})}),       // Z/4
        json::array({2, 3, json::array({0, 1})}),       // Z/8
        json::array({3, 2, json::array({0, 1})}),       // Z/9
        json::array({2, 1, json::array({1, 1, 1})}),    // F4
        json::array({2, 1, json::array({0, 0, 1})}),    // F2[x]/(x^2)
        json::array({3, 1, json::array({1, 0, 1})}),    // F9
        json::array({3, 1, json::array({0, 0, 1})}),    // F3[x]/(x^2)
        json::array({2, 1, json::array({1, 1, 0, 1})}), // F8
        json::array({2, 1, json::array({0, 0, 0, 1})}), // F2[x]/(x^3)
        json::array({2, 2, json::array({0, 0, 1})}),    // Z4[x]/(x^2), 16 elements
    };
    std::size_t ring_cap = std::min(cfg.random_ring_cap, cfg.max_ring_size);
    std::size_t made = 0, attempts = 0;
    while (made < n_random && attempts < n_random * 10) {
        ++attempts;
        std::size_t ncomp = 1 + rng() % 3;
        json amb = json::array();
        for (std::size_t c = 0; c < ncomp; ++c) amb.push_back(comp_pool[rng() % comp_pool.size()]);
        json j;
        j["kind"] = "finite_extension";
        j["id"] = "rand_" + std::to_string(made);
        j["ambient"] = amb;
        try {
            auto ambient = [&] {
                std::vector<AmbientComponent> comps;
                for (const auto& c : amb) {
                    std::vector<std::int64_t> f;
                    for (const auto& v : c[2]) f.push_back(v.get<std::int64_t>());
                    comps.emplace_back(c[0].get<std::int64_t>(), c[1].get<int>(), std::move(f));
                }
                return make_ambient(std::move(comps));
            }();
            // B from a few random ambient elements; A from random B elements
            std::vector<Packed> bgens;
            std::size_t nb = 1 + rng() % 2;
            for (std::size_t g = 0; g < nb; ++g) bgens.push_back(rng() % ambient->cardinality());
            auto B = close_subring(ambient, bgens, ring_cap);
            std::vector<Packed> agens;
            std::size_t na = 1 + rng() % 2;
            for (std::size_t g = 0; g < na; ++g) agens.push_back(B->elements()[rng() % B->size()]);
            auto A = close_subring(ambient, agens, ring_cap);
            json bj = json::array(), aj = json::array();
            for (Packed g : bgens) {
                json coords = json::array();
                for (const auto& c : ambient->unpack(g)) coords.push_back(c);
                bj.push_back(coords);
            }
            for (Packed g : agens) {
                json coords = json::array();
                for (const auto& c : ambient->unpack(g)) coords.push_back(c);
                aj.push_back(coords);
            }
            j["B_generators"] = bj;
            j["A_generators"] = aj;
            (void)ExtensionHandle(A, B); // validates
        } catch (const error&) {
            continue; // cap overflow or similar: resample
        }
        sources.push_back(j);
        ++made;
    }
    if (made < n_random)
        std::cerr << "extalg: corpus generation retries exhausted, " << made << " of "
                  << n_random << " random extensions kept\n";

    std::vector<CorpusEntry> out;
    for (const auto& s : sources) out.push_back(parse_extension_json(s));
    return out;
}

} // namespace extalg
