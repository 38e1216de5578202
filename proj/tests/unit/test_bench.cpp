#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "urduidx/bench.hpp"
#include "urduidx/errors.hpp"
#include "urduidx/index.hpp"
#include "words.hpp"

using namespace urduidx;
using testsupport::make_corpus;

namespace {

const Corpus& fixture_corpus() {
    static const Corpus corpus = load_corpus(URDUIDX_FIXTURE_DIR);
    return corpus;
}

}  // namespace

TEST_CASE("the default probe words are the canonical eight") {
    const auto timing = default_timing_probes();
    REQUIRE(timing.size() == 4);
    CHECK(timing[0] == words::kGunah);
    CHECK(timing[1] == words::kNamaz);
    CHECK(timing[2] == words::kJannat);
    CHECK(timing[3] == words::kRab);

    const auto recall = default_recall_probes();
    REQUIRE(recall.size() == 5);
    CHECK(recall[0] == words::kJannat);
    CHECK(recall[1] == words::kRaat);
    CHECK(recall[2] == words::kAasman);
    CHECK(recall[3] == words::kKafir);
    CHECK(recall[4] == words::kKitab);
}

// --- bench_sizes --------------------------------------------------------

TEST_CASE("bench_sizes reproduces the size direction on the fixture corpus") {
    const auto [with_stops, without_stops] = bench_sizes(fixture_corpus());
    CHECK(with_stops > 0);
    CHECK(without_stops > 0);
    CHECK(without_stops < with_stops);
}

TEST_CASE("bench_sizes equals an independent build-and-serialize pass") {
    // Oracle: build both variants directly and measure their serializations.
    BuildOptions opt;
    opt.flags.ordered = true;
    opt.flags.stemmed_layer = true;
    opt.flags.stop_words_removed = false;
    const auto with_bytes =
        serialize_index(build_index(fixture_corpus(), opt)).size();
    opt.flags.stop_words_removed = true;
    const auto without_bytes =
        serialize_index(build_index(fixture_corpus(), opt)).size();

    const auto [with_stops, without_stops] = bench_sizes(fixture_corpus());
    CHECK(with_stops == with_bytes);
    CHECK(without_stops == without_bytes);
}

TEST_CASE("a corpus without stop words shows no size difference") {
    const Corpus corpus = make_corpus({
        std::string(words::kJannat) + " " + std::string(words::kRaat),
        std::string(words::kKitab),
    });
    const auto [with_stops, without_stops] = bench_sizes(corpus);
    CHECK(with_stops == without_stops);
}

// --- bench_latency ------------------------------------------------------

TEST_CASE("bench_latency validates its inputs") {
    const std::vector<std::string> probes = {std::string(words::kJannat)};
    CHECK_THROWS_AS((void)bench_latency(fixture_corpus(), probes,
                                        kMinRepetitions - 1),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)bench_latency(fixture_corpus(), {}, kMinRepetitions),
                    std::invalid_argument);
}

TEST_CASE("bench_latency times every probe across the three variants") {
    const std::vector<std::string> probes = {std::string(words::kJannat),
                                             std::string(words::kRab)};
    const auto rows = bench_latency(fixture_corpus(), probes, kMinRepetitions);
    REQUIRE(rows.size() == 2);
    for (const TimingRow& row : rows) {
        CHECK(row.repetitions == kMinRepetitions);
        CHECK(row.with_stops_us > 0.0);
        CHECK(row.no_stops_unordered_us > 0.0);
        CHECK(row.no_stops_ordered_us > 0.0);
    }
    CHECK(rows[0].word == words::kJannat);
    CHECK(rows[1].word == words::kRab);
}

TEST_CASE("a stop-word probe still gets a timing row") {
    const std::vector<std::string> probes = {std::string(words::kWoh)};
    const auto rows = bench_latency(fixture_corpus(), probes, kMinRepetitions);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].word == words::kWoh);
    CHECK(rows[0].with_stops_us > 0.0);  // lookups still timed; they miss
}

TEST_CASE("a one-term corpus is timeable at the repetition floor") {
    const Corpus corpus = make_corpus({std::string(words::kJannat)});
    const std::vector<std::string> probes = {std::string(words::kJannat)};
    const auto rows = bench_latency(corpus, probes, kMinRepetitions);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].with_stops_us > 0.0);
    CHECK(rows[0].no_stops_unordered_us > 0.0);
    CHECK(rows[0].no_stops_ordered_us > 0.0);
}

// --- bench_recall -------------------------------------------------------

TEST_CASE("bench_recall reports the frozen fixture rows") {
    const auto rows = bench_recall(fixture_corpus(), default_recall_probes());
    REQUIRE(rows.size() == 5);

    const RecallRow expected[] = {
        {std::string(words::kJannat), 6, 10},
        {std::string(words::kRaat), 7, 10},
        {std::string(words::kAasman), 5, 9},
        {std::string(words::kKafir), 6, 9},
        {std::string(words::kKitab), 8, 11},
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CAPTURE(rows[i].word);
        CHECK(rows[i] == expected[i]);
        CHECK(rows[i].records_stemmed >= rows[i].records_exact);
    }
}

TEST_CASE("bench_recall rejects an empty probe list") {
    CHECK_THROWS_AS((void)bench_recall(fixture_corpus(), {}),
                    std::invalid_argument);
}

TEST_CASE("a stop-word probe recalls nothing from a stop-less index") {
    const std::vector<std::string> probes = {std::string(words::kWoh)};
    const auto rows = bench_recall(fixture_corpus(), probes);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].records_exact == 0);
    CHECK(rows[0].records_stemmed == 0);
}

// --- reports ------------------------------------------------------------

namespace {

BenchReport sample_report() {
    BenchReport report;
    report.size_with_stops_bytes = 461;
    report.size_without_stops_bytes = 453;
    report.timing_rows = {
        TimingRow{std::string(words::kRab), 1.38, 0.79, 0.52, 1000},
    };
    report.recall_rows = {
        RecallRow{std::string(words::kJannat), 41, 59},
    };
    report.environment = "test env";
    return report;
}

}  // namespace

TEST_CASE("CSV output follows the field order of the row types") {
    const std::string csv = emit_report(sample_report(), ReportFormat::Csv);
    CHECK(csv.find("metric,value\n") != std::string::npos);
    CHECK(csv.find("size_with_stops_bytes,461\n") != std::string::npos);
    CHECK(csv.find("size_without_stops_bytes,453\n") != std::string::npos);
    CHECK(csv.find("word,with_stops_us,no_stops_unordered_us,"
                   "no_stops_ordered_us,repetitions\n") != std::string::npos);
    CHECK(csv.find(std::string(words::kRab) + ",1.380,0.790,0.520,1000\n") !=
          std::string::npos);
    CHECK(csv.find("word,records_exact,records_stemmed\n") != std::string::npos);
    CHECK(csv.find(std::string(words::kJannat) + ",41,59\n") != std::string::npos);
}

TEST_CASE("empty row lists still emit CSV headers") {
    BenchReport report;
    report.environment = "e";
    const std::string csv = emit_report(report, ReportFormat::Csv);
    CHECK(csv.find("word,with_stops_us,no_stops_unordered_us,"
                   "no_stops_ordered_us,repetitions\n") != std::string::npos);
    CHECK(csv.find("word,records_exact,records_stemmed\n") != std::string::npos);
}

TEST_CASE("the text table mirrors the four-column timing layout") {
    const std::string table = emit_report(sample_report(), ReportFormat::TextTable);
    CHECK(table.find("with stops") != std::string::npos);
    CHECK(table.find("no stops, unordered") != std::string::npos);
    CHECK(table.find("no stops, ordered") != std::string::npos);
    CHECK(table.find(words::kRab) != std::string::npos);
    CHECK(table.find("exact") != std::string::npos);
    CHECK(table.find("stemmed") != std::string::npos);
    CHECK(table.find("environment: test env") != std::string::npos);
}

TEST_CASE("JSON reports round-trip exactly") {
    const BenchReport report = sample_report();
    const std::string json = emit_report(report, ReportFormat::Json);
    const BenchReport back = report_from_json(json);
    CHECK(back == report);
}

TEST_CASE("malformed report JSON raises FormatError") {
    CHECK_THROWS_AS((void)report_from_json("{not json"), FormatError);
    CHECK_THROWS_AS((void)report_from_json("{}"), FormatError);
    CHECK_THROWS_AS((void)report_from_json("[1,2,3]"), FormatError);
}

TEST_CASE("emit_report is deterministic for fixed inputs") {
    const BenchReport report = sample_report();
    for (ReportFormat fmt :
         {ReportFormat::TextTable, ReportFormat::Csv, ReportFormat::Json}) {
        CHECK(emit_report(report, fmt) == emit_report(report, fmt));
    }
}

// --- run_benchmarks -----------------------------------------------------

TEST_CASE("run_benchmarks composes all three experiments") {
    const BenchReport report =
        run_benchmarks(fixture_corpus(), default_timing_probes(),
                       default_recall_probes(), kMinRepetitions);
    CHECK(report.size_with_stops_bytes > report.size_without_stops_bytes);
    CHECK(report.timing_rows.size() == 4);
    CHECK(report.recall_rows.size() == 5);
    CHECK_FALSE(report.environment.empty());
    for (const TimingRow& row : report.timing_rows) {
        CHECK(row.repetitions == kMinRepetitions);
        CHECK(row.with_stops_us > 0.0);
    }
    for (const RecallRow& row : report.recall_rows) {
        CHECK(row.records_stemmed >= row.records_exact);
    }

    CHECK(environment_summary() == report.environment);
    CHECK(environment_summary() == environment_summary());
}
