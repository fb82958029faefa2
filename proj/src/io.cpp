#include "extalg/io.hpp"

#include <fstream>

namespace extalg {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail(errc::parse_error, what); }

std::vector<std::vector<std::int64_t>> coords_from_json(const json& j) {
    if (!j.is_array()) parse_fail("element coordinates must be an array of arrays");
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& comp : j) {
        if (!comp.is_array()) parse_fail("component coordinates must be an array");
        std::vector<std::int64_t> c;
        for (const auto& v : comp) c.push_back(v.get<std::int64_t>());
        out.push_back(std::move(c));
    }
    return out;
}

AmbientPtr ambient_from_json(const json& j) {
    if (!j.is_array()) parse_fail("'ambient' must be an array of [p, k, f] triples");
    std::vector<AmbientComponent> comps;
    for (const auto& c : j) {
        if (!c.is_array() || c.size() != 3) parse_fail("ambient component must be [p, k, f]");
        std::vector<std::int64_t> f;
        for (const auto& v : c[2]) f.push_back(v.get<std::int64_t>());
        comps.emplace_back(c[0].get<std::int64_t>(), c[1].get<int>(), std::move(f));
    }
    return make_ambient(std::move(comps));
}

std::vector<Packed> elements_from_json(const Ambient& amb, const json& j, const char* what) {
    if (!j.is_array()) parse_fail(std::string(what) + " must be an array");
    std::vector<Packed> out;
    for (const auto& e : j) out.push_back(amb.pack(coords_from_json(e)));
    return out;
}

Rat64 rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat64(std::stoll(s));
        return Rat64(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        parse_fail("bad rational literal '" + s + "'");
    }
}

CorpusEntry parse_finite_extension(const json& j) {
    CorpusEntry e;
    e.universe = CorpusEntry::Universe::finite;
    e.id = j.value("id", "");
    if (!j.contains("ambient")) parse_fail("finite_extension needs 'ambient'");
    auto amb = ambient_from_json(j.at("ambient"));
    std::size_t cap = j.value("cap", kDefaultRingCap);
    std::vector<Packed> bgens =
        j.contains("B_generators") ? elements_from_json(*amb, j.at("B_generators"), "B_generators")
                                   : std::vector<Packed>{};
    auto B = close_subring(amb, bgens, cap);
    std::vector<Packed> agens =
        j.contains("A_generators") ? elements_from_json(*amb, j.at("A_generators"), "A_generators")
                                   : std::vector<Packed>{};
    auto A = close_subring(amb, agens, cap);
    e.fin.emplace(A, B);
    if (j.contains("ideals")) {
        for (const auto& it : j.at("ideals")) {
            std::string name = it.value("name", "ideal" + std::to_string(e.fin_ideals.size()));
            auto gens = elements_from_json(*amb, it.at("generators"), "ideal generators");
            for (Packed g : gens)
                if (!A->contains(g)) parse_fail("ideal generator outside A in '" + name + "'");
            e.fin_ideals.emplace_back(name, submodule_closure(A, A, gens, cap));
        }
    }
    if (j.contains("valuations")) {
        for (const auto& vj : j.at("valuations")) {
            std::string name = vj.value("name", "v");
            FiniteValuation v;
            v.rank = vj.value("rank", 0);
            if (!vj.contains("table")) parse_fail("finite valuation needs a 'table'");
            for (const auto& row : vj.at("table")) {
                if (!row.is_array() || row.size() != 2) parse_fail("table row must be [elem, value]");
                Packed el = amb->pack(coords_from_json(row[0]));
                if (row[1].is_string() && row[1] == "inf")
                    v.table[el] = std::nullopt;
                else {
                    ValueVec vv;
                    for (const auto& x : row[1]) vv.push_back(x.get<std::int64_t>());
                    v.table[el] = std::move(vv);
                }
            }
            e.fin_valuations.emplace_back(name, std::move(v));
        }
    }
    return e;
}

CorpusEntry parse_mixed_extension(const json& j) {
    CorpusEntry e;
    e.universe = CorpusEntry::Universe::mixed;
    e.id = j.value("id", "");
    MixedRing R;
    if (j.contains("slots")) {
        for (const auto& sj : j.at("slots")) {
            std::string flavor = sj.value("flavor", "Z");
            MixedSlot s;
            if (flavor == "Z") {
                s.flavor = SlotFlavor::integers;
            } else if (flavor == "Z_loc") {
                s.flavor = SlotFlavor::local_at;
                s.p = sj.at("p").get<std::int64_t>();
                if (factor_integer(s.p).size() != 1 || factor_integer(s.p).begin()->second != 1)
                    parse_fail("Z_loc needs a prime p");
            } else if (flavor == "Z_inv") {
                s.flavor = SlotFlavor::inverted;
                for (const auto& q : sj.at("inverted")) s.inverted.push_back(q.get<std::int64_t>());
            } else {
                parse_fail("unknown slot flavor '" + flavor + "'");
            }
            R.slots.push_back(std::move(s));
        }
    }
    if (j.contains("tail") && !j.at("tail").is_null()) {
        const auto& tj = j.at("tail");
        auto amb = ambient_from_json(tj.at("ambient"));
        std::vector<Packed> gens =
            tj.contains("generators") ? elements_from_json(*amb, tj.at("generators"), "tail generators")
                                      : std::vector<Packed>{};
        R.tail = close_subring(amb, gens, tj.value("cap", kDefaultRingCap));
    } else {
        R.tail = close_subring(make_ambient({}), {});
    }
    e.mix.emplace(MixedExtension{R});
    if (j.contains("ideals")) {
        for (const auto& it : j.at("ideals")) {
            std::string name = it.value("name", "ideal" + std::to_string(e.mix_ideals.size()));
            std::vector<Factored> slots;
            if (it.contains("slots"))
                for (const auto& q : it.at("slots"))
                    slots.push_back(factored_from_rat(rat_from_string(q.get<std::string>())));
            if (slots.size() != R.r()) parse_fail("ideal slot count mismatch in '" + name + "'");
            Submodule tail;
            if (it.contains("tail_generators")) {
                auto gens = elements_from_json(R.tail->ambient(), it.at("tail_generators"),
                                               "ideal tail generators");
                tail = submodule_closure(R.tail, R.tail, gens);
            } else {
                tail = carrier_as_module(R.tail, R.tail);
            }
            e.mix_ideals.emplace_back(name, mixed_ideal(R, std::move(slots), std::move(tail)));
        }
    }
    if (j.contains("valuations")) {
        for (const auto& vj : j.at("valuations")) {
            if (vj.value("rule", "") != "p-adic") parse_fail("mixed valuations use rule 'p-adic'");
            PAdicRule rule{vj.at("slot").get<std::size_t>(), vj.at("p").get<std::int64_t>()};
            e.mix_valuations.emplace_back(vj.value("name", "v"), rule);
        }
    }
    return e;
}

void parse_expected(const json& j, CorpusEntry& e) {
    if (!j.contains("expected")) return;
    for (const auto& [key, val] : j.at("expected").items()) {
        if (!val.is_boolean()) parse_fail("expected flags must be boolean");
        e.expected[key] = val.get<bool>();
    }
}

} // namespace

CorpusEntry parse_extension_json(const json& j) {
    std::string kind = j.value("kind", "");
    CorpusEntry e;
    if (kind == "finite_extension")
        e = parse_finite_extension(j);
    else if (kind == "mixed_extension")
        e = parse_mixed_extension(j);
    else
        parse_fail("unknown kind '" + kind + "' (expected finite_extension or mixed_extension)");
    parse_expected(j, e);
    e.source = j;
    return e;
}

FinitePoset parse_poset_json(const json& j) {
    if (!j.contains("elements")) parse_fail("poset needs 'elements'");
    std::vector<std::string> labels;
    std::map<std::string, std::size_t> index;
    for (const auto& l : j.at("elements")) {
        std::string s = l.get<std::string>();
        if (index.count(s)) parse_fail("duplicate poset element '" + s + "'");
        index[s] = labels.size();
        labels.push_back(s);
    }
    auto idx = [&](const json& v) {
        std::string s = v.get<std::string>();
        auto it = index.find(s);
        if (it == index.end()) parse_fail("unknown poset element '" + s + "'");
        return it->second;
    };
    std::vector<std::size_t> gamma;
    if (j.contains("gamma"))
        for (const auto& g : j.at("gamma")) gamma.push_back(idx(g));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (j.contains("relation")) {
        for (const auto& p : j.at("relation")) pairs.emplace_back(idx(p[0]), idx(p[1]));
        return FinitePoset::from_relation(std::move(labels), pairs, gamma);
    }
    if (j.contains("covers"))
        for (const auto& p : j.at("covers")) pairs.emplace_back(idx(p[0]), idx(p[1]));
    return FinitePoset::from_covers(std::move(labels), pairs, gamma);
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& ex) {
        fail(errc::parse_error, std::string("bad JSON in '") + path + "': " + ex.what());
    }
    return j;
}

ParsedFile parse_file(const std::string& path) {
    json j = load_json_file(path);
    std::string kind = j.value("kind", "");
    ParsedFile out{ParsedFile::Kind::extension, {}, {}, {}};
    if (kind == "poset") {
        out.kind = ParsedFile::Kind::poset;
        out.poset = parse_poset_json(j);
    } else if (kind == "corpus") {
        out.kind = ParsedFile::Kind::corpus;
        if (!j.contains("entries")) fail(errc::parse_error, "corpus needs 'entries'");
        std::size_t n = 0;
        for (const auto& ej : j.at("entries")) {
            auto e = parse_extension_json(ej);
            if (e.id.empty()) e.id = "entry" + std::to_string(n);
            ++n;
            out.corpus.push_back(std::move(e));
        }
    } else {
        out.kind = ParsedFile::Kind::extension;
        out.entry = parse_extension_json(j);
    }
    return out;
}

json extension_to_json(const CorpusEntry& e) { return e.source; }

} // namespace extalg
