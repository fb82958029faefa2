#include "extalg/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <future>
#include <map>
#include <sstream>
#include <thread>

namespace extalg {

namespace {

int decide_threads(const HarnessConfig& cfg) {
    if (cfg.threads > 0) return cfg.threads;
    if (const char* env = std::getenv("EXTALG_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return int(std::clamp(hw, 1u, 8u));
}

struct EntryOutcome {
    json entry_report;
    std::vector<std::pair<std::string, LawContribution>> contributions;
};

EntryOutcome process_entry(const CorpusEntry& e, const std::vector<const Law*>& laws,
                           const HarnessConfig& cfg) {
    EntryOutcome out;
    EntryContext ctx(e, cfg);
    json verdicts = json::array();
    try {
        for (auto& v : evaluate_entry(ctx)) verdicts.push_back(v.to_json());
    } catch (const error& ex) {
        verdicts.push_back(json{{"property", "evaluation"}, {"holds", false},
                                {"witness", json{{"exception", ex.what()}}}});
    }
    out.entry_report = json{{"id", e.id},
                            {"universe", e.universe == CorpusEntry::Universe::finite ? "finite" : "mixed"},
                            {"verdicts", verdicts}};
    // a law that throws counts as a failure of that law on this entry; the
    // rest of the suite still runs
    for (const Law* law : laws) {
        try {
            out.contributions.emplace_back(law->id, law->run(ctx));
        } catch (const error& ex) {
            LawContribution c;
            c.instances = 1;
            c.failures.push_back(json{{"entry", e.id}, {"exception", ex.what()}});
            out.contributions.emplace_back(law->id, std::move(c));
        }
    }
    return out;
}

json config_json(const HarnessConfig& cfg) {
    return json{{"seed", cfg.seed},
                {"profile", cfg.profile},
                {"max_ring_size", cfg.max_ring_size},
                {"oracle_cap", cfg.oracle_cap},
                {"mixed_numerator_bound", cfg.sweep.numerator_bound},
                {"mixed_max_ideals", cfg.sweep.max_ideals},
                {"factor_bound", cfg.sweep.factor_bound},
                {"poset_bound_r1", cfg.poset_bound_r1},
                {"poset_bound_r2", cfg.poset_bound_r2}};
}

} // namespace

SuiteReport run_suite(const std::vector<CorpusEntry>& corpus,
                      const std::vector<std::string>& law_filter, const HarnessConfig& cfg) {
    std::vector<const Law*> selected;
    for (const auto& want : law_filter) {
        bool found = false;
        for (const auto& l : law_registry())
            if (l.id == want) {
                if (std::find(selected.begin(), selected.end(), &l) == selected.end())
                    selected.push_back(&l);
                found = true;
            }
        if (!found) fail(errc::config_invalid, "unknown law id '" + want + "'");
    }
    if (law_filter.empty())
        for (const auto& l : law_registry()) selected.push_back(&l);

    int threads = decide_threads(cfg);
    std::vector<EntryOutcome> outcomes(corpus.size());
    if (threads <= 1 || corpus.size() <= 1) {
        for (std::size_t i = 0; i < corpus.size(); ++i)
            outcomes[i] = process_entry(corpus[i], selected, cfg);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::future<void>> workers;
        for (int t = 0; t < threads; ++t)
            workers.push_back(std::async(std::launch::async, [&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= corpus.size()) return;
                    outcomes[i] = process_entry(corpus[i], selected, cfg);
                }
            }));
        for (auto& w : workers) w.get();
    }

    // single-writer merge, ordered by entry id
    std::sort(outcomes.begin(), outcomes.end(), [](const EntryOutcome& a, const EntryOutcome& b) {
        return a.entry_report.at("id").get<std::string>() < b.entry_report.at("id").get<std::string>();
    });
    std::map<std::string, LawContribution> merged;
    json entries = json::array();
    for (auto& o : outcomes) {
        entries.push_back(std::move(o.entry_report));
        for (auto& [id, contrib] : o.contributions) {
            auto& m = merged[id];
            m.instances += contrib.instances;
            m.vacuous += contrib.vacuous;
            for (auto& f : contrib.failures) m.failures.push_back(std::move(f));
            for (auto& n : contrib.notes) m.notes.push_back(std::move(n));
        }
    }

    SuiteReport rep;
    json laws = json::array();
    std::size_t total_failures = 0;
    for (const Law* law : selected) {
        const auto& m = merged[law->id];
        total_failures += m.failures.size();
        json lj{{"id", law->id},
                {"statement", law->statement},
                {"instances", m.instances},
                {"vacuous", m.vacuous},
                {"failure_count", m.failures.size()}};
        if (!m.failures.empty()) lj["failures"] = m.failures;
        if (!m.notes.empty()) lj["notes"] = m.notes;
        laws.push_back(std::move(lj));
    }
    rep.any_failure = total_failures > 0;
    rep.document = json{{"schema_version", kReportSchemaVersion},
                        {"tool", "extalg"},
                        {"tool_version", kToolVersion},
                        {"config", config_json(cfg)},
                        {"entries", entries},
                        {"laws", laws},
                        {"summary", json{{"entries", corpus.size()},
                                         {"laws_run", laws.size()},
                                         {"failures", total_failures}}}};

    std::ostringstream os;
    os << "extalg verify: " << corpus.size() << " entries, " << laws.size() << " laws\n";
    for (const auto& lj : laws) {
        os << "  " << (lj["failure_count"].get<std::size_t>() == 0 ? "PASS" : "FAIL") << "  "
           << lj["id"].get<std::string>() << "  instances=" << lj["instances"].get<std::size_t>()
           << " vacuous=" << lj["vacuous"].get<std::size_t>()
           << " failures=" << lj["failure_count"].get<std::size_t>() << "\n";
    }
    os << (total_failures == 0 ? "all laws green" : "FAILURES PRESENT") << "\n";
    rep.text = os.str();
    return rep;
}

SuiteReport analyze_file(const std::string& path, const std::vector<std::string>& props,
                         const HarnessConfig& cfg) {
    auto parsed = parse_file(path);
    if (parsed.kind == ParsedFile::Kind::poset) return analyze_poset(path);
    if (parsed.kind == ParsedFile::Kind::corpus)
        fail(errc::parse_error, "analyze expects a single-instance file, got a corpus");
    CorpusEntry& e = *parsed.entry;
    if (e.id.empty()) e.id = path;
    EntryContext ctx(e, cfg);
    auto verdicts = evaluate_entry(ctx, props);

    SuiteReport rep;
    json vj = json::array();
    std::ostringstream os;
    os << "extalg analyze: " << e.id << "\n";
    for (const auto& v : verdicts) {
        vj.push_back(v.to_json());
        os << "  " << v.property << " = " << (v.holds ? "true" : "false");
        if (v.vacuous) os << " (vacuous)";
        if (!v.witness.is_null()) os << "  witness: " << v.witness.dump();
        if (!v.note.empty()) os << "  [" << v.note << "]";
        os << "\n";
    }
    rep.document = json{{"schema_version", kReportSchemaVersion},
                        {"tool", "extalg"},
                        {"tool_version", kToolVersion},
                        {"file", path},
                        {"verdicts", vj}};
    rep.text = os.str();
    return rep;
}

SuiteReport analyze_poset(const std::string& path) {
    auto parsed = parse_file(path);
    if (parsed.kind != ParsedFile::Kind::poset) fail(errc::parse_error, "not a poset file");
    const FinitePoset& p = *parsed.poset;

    SuiteReport rep;
    json maxes = json::array();
    for (auto m : maximal_elements(p)) maxes.push_back(p.label(m));
    auto hyp = check_hypotheses(p);
    json doc{{"schema_version", kReportSchemaVersion},
             {"tool", "extalg"},
             {"tool_version", kToolVersion},
             {"file", path},
             {"elements", p.size()},
             {"maximal_elements", maxes},
             {"hypotheses", json{{"a", hyp.a.to_json()}, {"b", hyp.b.to_json()}, {"c", hyp.c.to_json()}}}};
    std::ostringstream os;
    os << "extalg poset: " << path << " (" << p.size() << " elements)\n";
    os << "  maximal elements: " << maxes.dump() << "\n";
    os << "  hypothesis (a): " << (hyp.a.holds ? "holds" : "fails") << "\n";
    os << "  hypothesis (b): " << (hyp.b.holds ? "holds" : "fails");
    if (!hyp.b.holds) os << "  witness: " << hyp.b.witness.dump();
    os << "\n";
    os << "  hypothesis (c): " << (hyp.c.holds ? "holds" : "fails") << "\n";
    if (hyp.all_hold()) {
        auto eq = check_equivalence(p);
        doc["equivalence"] = eq.to_json();
        os << "  finiteness counts (finite instance): " << eq.witness["per_gamma_element"].dump()
           << "\n";
    } else {
        rep.any_failure = true;
    }
    rep.document = std::move(doc);
    rep.text = os.str();
    return rep;
}

} // namespace extalg
