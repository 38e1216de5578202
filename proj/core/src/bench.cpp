#include "urduidx/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

#include "urduidx/errors.hpp"
#include "urduidx/index.hpp"
#include "urduidx/search.hpp"
#include "urduidx/utf8.hpp"

namespace urduidx {

namespace {

// Keeps the optimizer from deleting the benchmarked lookup.
template <typename T>
inline void do_not_optimize(const T& value) {
    asm volatile("" : : "g"(value) : "memory");
}

BuildOptions variant_options(const BenchOptions& options, bool remove_stops,
                             bool ordered, bool stem_layer) {
    BuildOptions build;
    build.flags.stop_words_removed = remove_stops;
    build.flags.ordered = ordered;
    build.flags.stemmed_layer = stem_layer;
    build.stops = options.stops;
    build.normalization = options.normalization;
    build.auxiliaries = options.auxiliaries;
    build.collation = options.collation;
    return build;
}

double mean_lookup_us(const InvertedIndex& index, const std::string& term,
                      std::uint32_t reps) {
    for (std::uint32_t i = 0; i < kWarmupLookups; ++i) {
        do_not_optimize(lookup(index, term));
    }
    const auto start = std::chrono::steady_clock::now();
    for (std::uint32_t i = 0; i < reps; ++i) {
        do_not_optimize(lookup(index, term));
    }
    const auto stop = std::chrono::steady_clock::now();
    const auto ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start);
    return static_cast<double>(ns.count()) / 1000.0 / reps;
}

std::string format_us(double us) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", us);
    return buf;
}

// Pads to `width` display columns, counting codepoints.
std::string pad(std::string_view text, std::size_t width) {
    std::string out(text);
    std::size_t used = codepoint_count(text);
    while (used++ < width) {
        out += ' ';
    }
    return out;
}

}  // namespace

std::vector<std::string> default_timing_probes() {
    return {"گناہ", "نماز", "جنت", "رب"};
}

std::vector<std::string> default_recall_probes() {
    return {"جنت", "رات", "آسمان", "کافر", "کتاب"};
}

std::pair<std::uint64_t, std::uint64_t> bench_sizes(const Corpus& corpus,
                                                    const BenchOptions& options) {
    const std::uint64_t with_stops =
        serialize_index(
            build_index(corpus, variant_options(options, false, true,
                                                options.stem_layer)))
            .size();
    const std::uint64_t without_stops =
        serialize_index(
            build_index(corpus, variant_options(options, true, true,
                                                options.stem_layer)))
            .size();
    return {with_stops, without_stops};
}

std::vector<TimingRow> bench_latency(const Corpus& corpus,
                                     const std::vector<std::string>& probe_words,
                                     std::uint32_t reps,
                                     const BenchOptions& options) {
    if (reps < kMinRepetitions) {
        throw std::invalid_argument(
            "repetitions below the measurement floor of " +
            std::to_string(kMinRepetitions));
    }
    if (probe_words.empty()) {
        throw std::invalid_argument("no probe words given");
    }

    // The three variants under test; the stem layer plays no part in exact
    // lookup, so it is left out of all three.
    const InvertedIndex with_stops =
        build_index(corpus, variant_options(options, false, false, false));
    const InvertedIndex no_stops_unordered =
        build_index(corpus, variant_options(options, true, false, false));
    const InvertedIndex no_stops_ordered =
        build_index(corpus, variant_options(options, true, true, false));

    std::vector<TimingRow> rows;
    rows.reserve(probe_words.size());
    for (const std::string& probe : probe_words) {
        std::string term = normalize(probe, options.normalization);
        TimingRow row;
        row.word = term.empty() ? probe : term;
        row.repetitions = reps;
        row.with_stops_us = mean_lookup_us(with_stops, term, reps);
        row.no_stops_unordered_us = mean_lookup_us(no_stops_unordered, term, reps);
        row.no_stops_ordered_us = mean_lookup_us(no_stops_ordered, term, reps);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<RecallRow> bench_recall(const Corpus& corpus,
                                    const std::vector<std::string>& probe_words,
                                    const BenchOptions& options) {
    if (probe_words.empty()) {
        throw std::invalid_argument("no probe words given");
    }
    const InvertedIndex index = build_index(
        corpus, variant_options(options, true, true, options.stem_layer));

    std::vector<RecallRow> rows;
    rows.reserve(probe_words.size());
    for (const std::string& probe : probe_words) {
        std::string term = normalize(probe, options.normalization);
        RecallRow row;
        row.word = term.empty() ? probe : term;
        if (!term.empty()) {
            Query query;
            query.raw = probe;
            query.terms = {term};
            query.expand = false;
            row.records_exact = search(index, query, options.auxiliaries).record_count;
            query.expand = true;
            row.records_stemmed =
                search(index, query, options.auxiliaries).record_count;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

BenchReport run_benchmarks(const Corpus& corpus,
                           const std::vector<std::string>& timing_probes,
                           const std::vector<std::string>& recall_probes,
                           std::uint32_t reps, const BenchOptions& options) {
    BenchReport report;
    std::tie(report.size_with_stops_bytes, report.size_without_stops_bytes) =
        bench_sizes(corpus, options);
    report.timing_rows = bench_latency(corpus, timing_probes, reps, options);
    report.recall_rows = bench_recall(corpus, recall_probes, options);
    report.environment = environment_summary();
    return report;
}

namespace {

std::string emit_text_table(const BenchReport& report) {
    std::string out;
    out += "index size (bytes)\n";
    out += "  with stop words     " +
           std::to_string(report.size_with_stops_bytes) + "\n";
    out += "  without stop words  " +
           std::to_string(report.size_without_stops_bytes) + "\n";
    out += "\n";

    out += "lookup latency, mean microseconds per lookup";
    if (!report.timing_rows.empty()) {
        out += " (" + std::to_string(report.timing_rows.front().repetitions) +
               " repetitions)";
    }
    out += "\n";
    std::size_t word_width = 10;
    for (const TimingRow& row : report.timing_rows) {
        word_width = std::max(word_width, codepoint_count(row.word) + 2);
    }
    out += "  " + pad("word", word_width) + pad("with stops", 14) +
           pad("no stops, unordered", 23) + "no stops, ordered\n";
    for (const TimingRow& row : report.timing_rows) {
        out += "  " + pad(row.word, word_width) +
               pad(format_us(row.with_stops_us), 14) +
               pad(format_us(row.no_stops_unordered_us), 23) +
               format_us(row.no_stops_ordered_us) + "\n";
    }
    out += "\n";

    out += "retrieved records, exact vs stemmed search\n";
    word_width = 10;
    for (const RecallRow& row : report.recall_rows) {
        word_width = std::max(word_width, codepoint_count(row.word) + 2);
    }
    out += "  " + pad("word", word_width) + pad("exact", 9) + "stemmed\n";
    for (const RecallRow& row : report.recall_rows) {
        out += "  " + pad(row.word, word_width) +
               pad(std::to_string(row.records_exact), 9) +
               std::to_string(row.records_stemmed) + "\n";
    }
    out += "\n";
    out += "environment: " + report.environment + "\n";
    return out;
}

std::string emit_csv(const BenchReport& report) {
    std::string out;
    out += "metric,value\n";
    out += "size_with_stops_bytes," +
           std::to_string(report.size_with_stops_bytes) + "\n";
    out += "size_without_stops_bytes," +
           std::to_string(report.size_without_stops_bytes) + "\n";
    out += "\n";
    out += "word,with_stops_us,no_stops_unordered_us,no_stops_ordered_us,"
           "repetitions\n";
    for (const TimingRow& row : report.timing_rows) {
        out += row.word + "," + format_us(row.with_stops_us) + "," +
               format_us(row.no_stops_unordered_us) + "," +
               format_us(row.no_stops_ordered_us) + "," +
               std::to_string(row.repetitions) + "\n";
    }
    out += "\n";
    out += "word,records_exact,records_stemmed\n";
    for (const RecallRow& row : report.recall_rows) {
        out += row.word + "," + std::to_string(row.records_exact) + "," +
               std::to_string(row.records_stemmed) + "\n";
    }
    return out;
}

std::string emit_json(const BenchReport& report) {
    nlohmann::ordered_json j;
    j["size_with_stops_bytes"] = report.size_with_stops_bytes;
    j["size_without_stops_bytes"] = report.size_without_stops_bytes;
    j["timing_rows"] = nlohmann::ordered_json::array();
    for (const TimingRow& row : report.timing_rows) {
        nlohmann::ordered_json r;
        r["word"] = row.word;
        r["with_stops_us"] = row.with_stops_us;
        r["no_stops_unordered_us"] = row.no_stops_unordered_us;
        r["no_stops_ordered_us"] = row.no_stops_ordered_us;
        r["repetitions"] = row.repetitions;
        j["timing_rows"].push_back(std::move(r));
    }
    j["recall_rows"] = nlohmann::ordered_json::array();
    for (const RecallRow& row : report.recall_rows) {
        nlohmann::ordered_json r;
        r["word"] = row.word;
        r["records_exact"] = row.records_exact;
        r["records_stemmed"] = row.records_stemmed;
        j["recall_rows"].push_back(std::move(r));
    }
    j["environment"] = report.environment;
    return j.dump(2) + "\n";
}

}  // namespace

std::string emit_report(const BenchReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::TextTable:
            return emit_text_table(report);
        case ReportFormat::Csv:
            return emit_csv(report);
        case ReportFormat::Json:
            return emit_json(report);
    }
    throw std::invalid_argument("unknown report format");
}

BenchReport report_from_json(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
        BenchReport report;
        report.size_with_stops_bytes = j.at("size_with_stops_bytes");
        report.size_without_stops_bytes = j.at("size_without_stops_bytes");
        for (const auto& r : j.at("timing_rows")) {
            TimingRow row;
            row.word = r.at("word");
            row.with_stops_us = r.at("with_stops_us");
            row.no_stops_unordered_us = r.at("no_stops_unordered_us");
            row.no_stops_ordered_us = r.at("no_stops_ordered_us");
            row.repetitions = r.at("repetitions");
            report.timing_rows.push_back(std::move(row));
        }
        for (const auto& r : j.at("recall_rows")) {
            RecallRow row;
            row.word = r.at("word");
            row.records_exact = r.at("records_exact");
            row.records_stemmed = r.at("records_stemmed");
            report.recall_rows.push_back(std::move(row));
        }
        report.environment = j.at("environment");
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("invalid benchmark report JSON: ") +
                              e.what(),
                          0);
    }
}

std::string environment_summary() {
    std::string env;
#if defined(__clang__)
    env += "clang " + std::to_string(__clang_major__) + "." +
           std::to_string(__clang_minor__);
#elif defined(__GNUC__)
    env += "gcc " + std::to_string(__GNUC__) + "." +
           std::to_string(__GNUC_MINOR__) + "." +
           std::to_string(__GNUC_PATCHLEVEL__);
#else
    env += "unknown compiler";
#endif
    env += ", c++" + std::to_string(__cplusplus / 100 % 100);
#if defined(__linux__)
    env += ", linux";
#elif defined(__APPLE__)
    env += ", macos";
#elif defined(_WIN32)
    env += ", windows";
#else
    env += ", unknown platform";
#endif
#if defined(__x86_64__)
    env += ", x86_64";
#elif defined(__aarch64__)
    env += ", aarch64";
#endif
    return env;
}

}  // namespace urduidx
