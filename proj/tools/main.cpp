// Command-line front end: build, search, bench, stats over the index
// library. Exit codes: 0 success, 1 usage error, 2 data error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "urduidx/analysis.hpp"
#include "urduidx/bench.hpp"
#include "urduidx/collation.hpp"
#include "urduidx/errors.hpp"
#include "urduidx/index.hpp"
#include "urduidx/ingest.hpp"
#include "urduidx/search.hpp"
#include "urduidx/stemmer.hpp"
#include "urduidx/utf8.hpp"

namespace {

using nlohmann::ordered_json;

// Paths to optional table overrides; empty string means built-in default.
struct TablePaths {
    std::string stopwords;
    std::string fold_table;
    std::string strip_set;
    std::string auxiliaries;
    std::string collation;
};

void add_table_options(CLI::App* cmd, TablePaths& paths) {
    cmd->add_option("--stopwords", paths.stopwords,
                    "Stop-word list file (one term per line)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--fold-table", paths.fold_table,
                    "Fold table file (lines of '<hex cp> <hex cp>')")
        ->check(CLI::ExistingFile);
    cmd->add_option("--strip-set", paths.strip_set,
                    "Strip set file (one hex codepoint per line)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--auxiliaries", paths.auxiliaries,
                    "Auxiliary suffix file (one suffix per line)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--collation", paths.collation,
                    "Collation file (one hex codepoint per line, rank order)")
        ->check(CLI::ExistingFile);
}

urduidx::NormalizationConfig make_normalization(const TablePaths& paths) {
    urduidx::NormalizationConfig cfg = urduidx::NormalizationConfig::defaults();
    if (!paths.fold_table.empty()) cfg.load_fold_table(paths.fold_table);
    if (!paths.strip_set.empty()) cfg.load_strip_set(paths.strip_set);
    return cfg;
}

urduidx::StopList make_stops(const TablePaths& paths,
                             const urduidx::NormalizationConfig& cfg) {
    if (paths.stopwords.empty()) return urduidx::StopList::defaults();
    return urduidx::StopList::load(paths.stopwords, cfg);
}

urduidx::AuxiliaryTable make_auxiliaries(const TablePaths& paths) {
    if (paths.auxiliaries.empty()) return urduidx::AuxiliaryTable::defaults();
    return urduidx::AuxiliaryTable::load(paths.auxiliaries);
}

urduidx::CollationTable make_collation(const TablePaths& paths) {
    if (paths.collation.empty()) return urduidx::CollationTable::defaults();
    return urduidx::CollationTable::load(paths.collation);
}

std::vector<std::string> load_probe_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw urduidx::IoError("cannot open probe file: " + path);
    }
    std::vector<std::string> probes;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        while (!raw.empty() && (raw.back() == '\r' || raw.back() == ' ' ||
                                raw.back() == '\t')) {
            raw.pop_back();
        }
        std::size_t begin = 0;
        while (begin < raw.size() && (raw[begin] == ' ' || raw[begin] == '\t')) {
            ++begin;
        }
        std::string word = raw.substr(begin);
        if (word.empty()) continue;
        try {
            urduidx::decode_utf8(word);
        } catch (const urduidx::EncodingError&) {
            throw urduidx::FormatError("probe word is not valid UTF-8", line_no);
        }
        probes.push_back(std::move(word));
    }
    if (probes.empty()) {
        throw urduidx::FormatError("probe file contains no words", line_no);
    }
    return probes;
}

ordered_json flags_to_json(const urduidx::IndexFlags& flags) {
    ordered_json j;
    j["stop_words_removed"] = flags.stop_words_removed;
    j["ordered"] = flags.ordered;
    j["stem_layer"] = flags.stemmed_layer;
    return j;
}

int run_build(const std::string& corpus_dir, const std::string& out_path,
              bool keep_stops, bool unordered, bool no_stem_layer,
              const TablePaths& paths, bool as_json) {
    urduidx::BuildOptions options;
    options.flags.stop_words_removed = !keep_stops;
    options.flags.ordered = !unordered;
    options.flags.stemmed_layer = !no_stem_layer;
    options.normalization = make_normalization(paths);
    options.stops = make_stops(paths, options.normalization);
    options.auxiliaries = make_auxiliaries(paths);
    options.collation = make_collation(paths);

    urduidx::Corpus corpus = urduidx::load_corpus(corpus_dir);
    urduidx::InvertedIndex index = urduidx::build_index(corpus, options);
    std::uint64_t bytes = urduidx::write_index(index, out_path);

    if (as_json) {
        ordered_json j;
        j["path"] = out_path;
        j["bytes"] = bytes;
        j["documents"] = corpus.documents.size();
        j["terms"] = index.term_count();
        j["postings"] = index.posting_count();
        j["stem_groups"] = index.stem_layer.size();
        j["flags"] = flags_to_json(index.flags);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "wrote " << out_path << ": " << bytes << " bytes, "
                  << corpus.documents.size() << " documents, "
                  << index.term_count() << " terms, " << index.posting_count()
                  << " postings\n";
    }
    return 0;
}

int run_search(const std::string& index_path, const std::string& query_text,
               bool expand, const std::string& corpus_dir,
               const TablePaths& paths, bool as_json) {
    urduidx::InvertedIndex index =
        urduidx::read_index(index_path, make_collation(paths));
    urduidx::NormalizationConfig cfg = make_normalization(paths);
    urduidx::AuxiliaryTable auxiliaries = make_auxiliaries(paths);

    // Match the index's analysis: strip query stop words only when the
    // index itself was built without them.
    urduidx::StopList stops = index.flags.stop_words_removed
                                  ? make_stops(paths, cfg)
                                  : urduidx::StopList::empty();

    urduidx::Query query = urduidx::parse_query(query_text, cfg, stops, expand);
    urduidx::ResultSet results = urduidx::search(index, query, auxiliaries);

    std::vector<std::string> manifest;
    if (!corpus_dir.empty()) {
        manifest = urduidx::load_corpus(corpus_dir).manifest;
    }
    auto source_of = [&](urduidx::DocId doc) -> std::string {
        if (doc < manifest.size()) return manifest[doc];
        return "";
    };

    // doc -> term -> positions, for the per-record view.
    std::map<urduidx::DocId, std::map<std::string, std::vector<urduidx::Position>>>
        by_doc;
    for (const urduidx::TermResult& row : results.per_term) {
        for (const urduidx::Posting& posting : row.postings) {
            by_doc[posting.doc_id][row.term] = posting.positions;
        }
    }

    if (as_json) {
        ordered_json j;
        j["query"] = query.raw;
        j["terms"] = query.terms;
        j["expand"] = query.expand;
        j["records"] = ordered_json::array();
        for (const auto& [doc, terms] : by_doc) {
            ordered_json record;
            record["doc"] = doc;
            record["source_name"] = source_of(doc);
            record["positions_by_term"] = ordered_json::object();
            for (const auto& [term, positions] : terms) {
                record["positions_by_term"][term] = positions;
            }
            j["records"].push_back(std::move(record));
        }
        j["record_count"] = results.record_count;
        j["occurrence_count"] = results.occurrence_count;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "query: " << query.raw << "\n";
        std::cout << "records: " << results.record_count
                  << ", occurrences: " << results.occurrence_count << "\n";
        for (const urduidx::TermResult& row : results.per_term) {
            std::cout << "term " << row.term << ": " << row.postings.size()
                      << " record(s)\n";
            for (const urduidx::Posting& posting : row.postings) {
                std::cout << "  doc " << posting.doc_id;
                if (std::string source = source_of(posting.doc_id);
                    !source.empty()) {
                    std::cout << " (" << source << ")";
                }
                std::cout << ":";
                for (urduidx::Position pos : posting.positions) {
                    std::cout << " " << pos;
                }
                std::cout << "\n";
            }
        }
    }
    return 0;
}

int run_bench(const std::string& corpus_dir, std::uint32_t reps,
              const std::string& probes_path, const std::string& format_name,
              const std::string& out_path, bool no_stem_layer,
              const TablePaths& paths) {
    urduidx::BenchOptions options;
    options.normalization = make_normalization(paths);
    options.stops = make_stops(paths, options.normalization);
    options.auxiliaries = make_auxiliaries(paths);
    options.collation = make_collation(paths);
    options.stem_layer = !no_stem_layer;

    std::vector<std::string> timing_probes = urduidx::default_timing_probes();
    std::vector<std::string> recall_probes = urduidx::default_recall_probes();
    if (!probes_path.empty()) {
        timing_probes = load_probe_file(probes_path);
        recall_probes = timing_probes;
    }

    for (const std::string& probe : timing_probes) {
        if (options.stops.contains(
                urduidx::normalize(probe, options.normalization))) {
            std::cerr << "warning: probe '" << probe
                      << "' is a stop word; it cannot match the stop-less "
                         "index variants\n";
        }
    }

    urduidx::Corpus corpus = urduidx::load_corpus(corpus_dir);
    urduidx::BenchReport report = urduidx::run_benchmarks(
        corpus, timing_probes, recall_probes, reps, options);

    urduidx::ReportFormat format = urduidx::ReportFormat::TextTable;
    if (format_name == "csv") format = urduidx::ReportFormat::Csv;
    if (format_name == "json") format = urduidx::ReportFormat::Json;
    std::string rendered = urduidx::emit_report(report, format);

    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw urduidx::IoError("cannot open report file: " + out_path);
        }
        out << rendered;
        if (!out.flush()) {
            throw urduidx::IoError("failed writing report file: " + out_path);
        }
        std::cerr << "wrote report to " << out_path << "\n";
    }
    return 0;
}

int run_stats(const std::string& index_path, const TablePaths& paths,
              bool as_json) {
    urduidx::InvertedIndex index =
        urduidx::read_index(index_path, make_collation(paths));
    std::uint64_t bytes = std::filesystem::file_size(index_path);

    if (as_json) {
        ordered_json j;
        j["path"] = index_path;
        j["bytes"] = bytes;
        j["terms"] = index.term_count();
        j["postings"] = index.posting_count();
        j["stem_groups"] = index.stem_layer.size();
        j["flags"] = flags_to_json(index.flags);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "index " << index_path << "\n";
        std::cout << "  bytes:        " << bytes << "\n";
        std::cout << "  terms:        " << index.term_count() << "\n";
        std::cout << "  postings:     " << index.posting_count() << "\n";
        std::cout << "  stem groups:  " << index.stem_layer.size() << "\n";
        std::cout << "  stop words removed: "
                  << (index.flags.stop_words_removed ? "yes" : "no") << "\n";
        std::cout << "  ordered:            "
                  << (index.flags.ordered ? "yes" : "no") << "\n";
        std::cout << "  stem layer:         "
                  << (index.flags.stemmed_layer ? "yes" : "no") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Urdu full-text inverted index"};
    app.require_subcommand(1);

    // build
    auto* build_cmd = app.add_subcommand("build", "Build an index from a corpus");
    std::string build_corpus, build_out;
    bool keep_stops = false, unordered = false, build_no_stem = false;
    bool build_json = false;
    TablePaths build_paths;
    build_cmd->add_option("--corpus", build_corpus, "Corpus directory")
        ->required()
        ->check(CLI::ExistingDirectory);
    build_cmd->add_option("--out", build_out, "Output index file")->required();
    build_cmd->add_flag("--keep-stops", keep_stops,
                        "Keep stop words (default removes them)");
    build_cmd->add_flag("--unordered", unordered,
                        "Keep first-encounter term order (default sorts)");
    build_cmd->add_flag("--no-stem-layer", build_no_stem,
                        "Skip the stem layer (default includes it)");
    build_cmd->add_flag("--json", build_json, "Machine-readable output");
    add_table_options(build_cmd, build_paths);

    // search
    auto* search_cmd = app.add_subcommand("search", "Query an index");
    std::string search_index, search_query, search_corpus;
    bool expand = false, search_json = false;
    TablePaths search_paths;
    search_cmd->add_option("--index", search_index, "Index file")
        ->required()
        ->check(CLI::ExistingFile);
    search_cmd->add_option("--query", search_query, "Query text")->required();
    search_cmd->add_flag("--expand", expand, "Stemming-expanded search");
    search_cmd->add_option("--corpus", search_corpus,
                           "Corpus directory, used to resolve source names")
        ->check(CLI::ExistingDirectory);
    search_cmd->add_flag("--json", search_json, "Machine-readable output");
    add_table_options(search_cmd, search_paths);

    // bench
    auto* bench_cmd =
        app.add_subcommand("bench", "Run the size/latency/recall experiments");
    std::string bench_corpus, bench_probes, bench_out;
    std::string bench_format = "table";
    std::uint32_t reps = urduidx::kDefaultRepetitions;
    bool bench_no_stem = false;
    TablePaths bench_paths;
    bench_cmd->add_option("--corpus", bench_corpus, "Corpus directory")
        ->required()
        ->check(CLI::ExistingDirectory);
    bench_cmd->add_option("--reps", reps, "Lookup repetitions per probe")
        ->check(CLI::Range(urduidx::kMinRepetitions,
                           std::numeric_limits<std::uint32_t>::max()));
    bench_cmd->add_option("--probes", bench_probes,
                          "Probe word file (one per line); replaces both "
                          "default probe sets")
        ->check(CLI::ExistingFile);
    bench_cmd->add_option("--format", bench_format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    bench_cmd->add_option("--out", bench_out, "Write report to file");
    bench_cmd->add_flag("--no-stem-layer", bench_no_stem,
                        "Exclude the stem layer from size/recall builds");
    add_table_options(bench_cmd, bench_paths);

    // stats
    auto* stats_cmd = app.add_subcommand("stats", "Describe an index file");
    std::string stats_index;
    bool stats_json = false;
    TablePaths stats_paths;
    stats_cmd->add_option("--index", stats_index, "Index file")
        ->required()
        ->check(CLI::ExistingFile);
    stats_cmd->add_flag("--json", stats_json, "Machine-readable output");
    add_table_options(stats_cmd, stats_paths);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (build_cmd->parsed()) {
            return run_build(build_corpus, build_out, keep_stops, unordered,
                             build_no_stem, build_paths, build_json);
        }
        if (search_cmd->parsed()) {
            return run_search(search_index, search_query, expand, search_corpus,
                              search_paths, search_json);
        }
        if (bench_cmd->parsed()) {
            return run_bench(bench_corpus, reps, bench_probes, bench_format,
                             bench_out, bench_no_stem, bench_paths);
        }
        if (stats_cmd->parsed()) {
            return run_stats(stats_index, stats_paths, stats_json);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
