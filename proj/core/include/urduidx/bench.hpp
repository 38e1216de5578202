#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "urduidx/analysis.hpp"
#include "urduidx/collation.hpp"
#include "urduidx/ingest.hpp"
#include "urduidx/stemmer.hpp"

namespace urduidx {

// One probe word's mean lookup latency across the three index variants
// (with stop words / without, unordered / without, ordered).
struct TimingRow {
    std::string word;
    double with_stops_us = 0.0;
    double no_stops_unordered_us = 0.0;
    double no_stops_ordered_us = 0.0;
    std::uint32_t repetitions = 0;

    bool operator==(const TimingRow&) const = default;
};

// One probe word's retrieved-record counts, exact vs stemming-expanded.
struct RecallRow {
    std::string word;
    std::uint64_t records_exact = 0;
    std::uint64_t records_stemmed = 0;

    bool operator==(const RecallRow&) const = default;
};

struct BenchReport {
    std::uint64_t size_with_stops_bytes = 0;
    std::uint64_t size_without_stops_bytes = 0;
    std::vector<TimingRow> timing_rows;
    std::vector<RecallRow> recall_rows;
    std::string environment;

    bool operator==(const BenchReport&) const = default;
};

// Analysis tables shared by every benchmark build.
struct BenchOptions {
    StopList stops = StopList::defaults();
    NormalizationConfig normalization = NormalizationConfig::defaults();
    AuxiliaryTable auxiliaries = AuxiliaryTable::defaults();
    CollationTable collation = CollationTable::defaults();
    bool stem_layer = true;  // include the stem layer in size/recall builds
};

inline constexpr std::uint32_t kDefaultRepetitions = 10000;
inline constexpr std::uint32_t kMinRepetitions = 1000;  // measurement floor
inline constexpr std::uint32_t kWarmupLookups = 100;

// The default probe words: گناہ، نماز، جنت، رب for timing and
// جنت، رات، آسمان، کافر، کتاب for recall.
std::vector<std::string> default_timing_probes();
std::vector<std::string> default_recall_probes();

// Builds and serializes the with-stop-words and without-stop-words
// variants; returns (bytes_with, bytes_without).
std::pair<std::uint64_t, std::uint64_t> bench_sizes(
    const Corpus& corpus, const BenchOptions& options = BenchOptions{});

// Builds the three variants, then times exact lookup of each probe:
// >= kWarmupLookups untimed warm-up lookups, then `reps` timed lookups per
// variant, reporting the mean in microseconds. Probes that are stop words
// still get a row (they simply miss the stop-less variants); callers may
// warn. Throws std::invalid_argument when reps < kMinRepetitions or probes
// is empty.
std::vector<TimingRow> bench_latency(
    const Corpus& corpus, const std::vector<std::string>& probe_words,
    std::uint32_t reps = kDefaultRepetitions,
    const BenchOptions& options = BenchOptions{});

// Counts records (distinct documents) per probe over the without-stops
// index, exact vs stemming-expanded. Throws std::invalid_argument when
// probes is empty.
std::vector<RecallRow> bench_recall(
    const Corpus& corpus, const std::vector<std::string>& probe_words,
    const BenchOptions& options = BenchOptions{});

// All three experiments in one report, environment stamped.
BenchReport run_benchmarks(const Corpus& corpus,
                           const std::vector<std::string>& timing_probes,
                           const std::vector<std::string>& recall_probes,
                           std::uint32_t reps = kDefaultRepetitions,
                           const BenchOptions& options = BenchOptions{});

enum class ReportFormat { TextTable, Csv, Json };

// Deterministic rendering (timing values excepted, they are measurements).
// CSV columns follow the row types' field order; empty row lists still
// emit headers. The JSON form round-trips through report_from_json.
std::string emit_report(const BenchReport& report, ReportFormat format);

// Inverse of emit_report(·, Json). Throws FormatError on malformed input.
BenchReport report_from_json(std::string_view json_text);

// Compiler/platform stamp used for BenchReport.environment; deterministic
// for a given binary (no timestamps).
std::string environment_summary();

}  // namespace urduidx
