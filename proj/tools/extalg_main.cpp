#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "extalg/report.hpp"

using namespace extalg;

namespace {

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        if (comma == std::string::npos) {
            if (start < s.size()) out.push_back(s.substr(start));
            break;
        }
        if (comma > start) out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

int write_out(const SuiteReport& rep, const std::string& format, const std::string& out_path) {
    std::string payload =
        format == "json" ? rep.document.dump(2) + "\n" : rep.text;
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write '" << out_path << "'\n";
            return 2;
        }
        out << rep.document.dump(2) << "\n";
        std::cout << rep.text; // summary always goes to stdout
    }
    return rep.any_failure ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"extalg: executable model of ideal invertibility in ring extensions"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run the law suite over a corpus");
    std::string corpus_arg = "builtin";
    std::string laws_arg = "all";
    std::string format = "text";
    std::string out_path;
    HarnessConfig cfg;
    verify->add_option("--corpus", corpus_arg, "builtin or a corpus file path");
    verify->add_option("--laws", laws_arg, "all or a comma-separated law id list");
    verify->add_option("--max-ring-size", cfg.max_ring_size, "finite closure cap");
    verify->add_option("--seed", cfg.seed, "corpus generation seed");
    verify->add_option("--oracle-cap", cfg.oracle_cap, "flatness oracle ring-size cap");
    verify->add_option("--profile", cfg.profile, "corpus size profile: small|tiny");
    verify->add_option("--threads", cfg.threads, "worker threads (default: EXTALG_THREADS or auto)");
    verify->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", out_path, "write the JSON report here");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "evaluate predicates on one instance file");
    std::string an_file;
    std::string an_props;
    analyze->add_option("--file", an_file, "instance file")->required();
    analyze->add_option("--props", an_props, "comma-separated property list (default: all)");

    // poset
    auto* poset = app.add_subcommand("poset", "check a poset file against the finiteness theorem");
    std::string po_file;
    poset->add_option("--file", po_file, "poset file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            std::vector<CorpusEntry> corpus;
            if (corpus_arg == "builtin") {
                corpus = builtin_corpus(cfg);
            } else {
                auto parsed = parse_file(corpus_arg);
                if (parsed.kind == ParsedFile::Kind::corpus)
                    corpus = std::move(parsed.corpus);
                else if (parsed.kind == ParsedFile::Kind::extension)
                    corpus.push_back(std::move(*parsed.entry));
                else
                    fail(errc::parse_error, "corpus path must hold extensions");
                for (std::size_t i = 0; i < corpus.size(); ++i)
                    if (corpus[i].id.empty()) corpus[i].id = "entry" + std::to_string(i);
            }
            std::vector<std::string> laws =
                laws_arg == "all" ? std::vector<std::string>{} : split_csv(laws_arg);
            auto rep = run_suite(corpus, laws, cfg);
            return write_out(rep, out_path.empty() ? format : "text", out_path);
        }
        if (*analyze) {
            auto rep = analyze_file(an_file, split_csv(an_props), HarnessConfig{});
            std::cout << rep.text;
            return rep.any_failure ? 1 : 0;
        }
        if (*poset) {
            auto rep = analyze_poset(po_file);
            std::cout << rep.text;
            return rep.any_failure ? 1 : 0;
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
