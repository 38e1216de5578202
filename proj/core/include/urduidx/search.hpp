#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "urduidx/analysis.hpp"
#include "urduidx/index.hpp"
#include "urduidx/stemmer.hpp"

namespace urduidx {

struct Query {
    std::string raw;
    std::vector<std::string> terms;  // analyzed: normalized, stop-filtered
    bool expand = false;

    bool operator==(const Query&) const = default;
};

// Merged matches for one query term (across its whole expansion set when
// expand is on).
struct TermResult {
    std::string term;
    std::vector<Posting> postings;  // doc_ids ascending, positions ascending

    bool operator==(const TermResult&) const = default;
};

struct ResultSet {
    // One row per distinct query term, in first-occurrence order.
    std::vector<TermResult> per_term;
    // Number of distinct documents matched (the "records" of the retrieval
    // comparison) — |union of doc_ids across per_term|.
    std::uint64_t record_count = 0;
    // Total matched positions. Reported alongside record_count because the
    // source tables never say which of the two they count.
    std::uint64_t occurrence_count = 0;

    bool operator==(const ResultSet&) const = default;
};

// Runs the indexing analysis pipeline over the query text: tokenize,
// normalize, drop stop words from `stops` (pass StopList::empty() to keep
// them). Throws EmptyQueryError when no terms survive, EncodingError on
// malformed UTF-8.
Query parse_query(std::string_view raw, const NormalizationConfig& cfg,
                  const StopList& stops, bool expand = false);

// Finds the vocabulary entry for an exact term: binary search under the
// collation when the index is ordered, linear scan otherwise (the scan is
// the contract — the latency benchmark measures exactly this difference).
// Returns nullptr when absent.
const VocabEntry* lookup(const InvertedIndex& index, std::string_view term);

// Evaluates the query. expand=false looks up each term exactly;
// expand=true looks up every member of the term's stem group — widened by
// the index's stem layer when present — and merges the postings per
// original term. Absent terms yield empty rows, never errors. Multi-term
// record_count is the union of per-term documents.
ResultSet search(const InvertedIndex& index, const Query& query,
                 const AuxiliaryTable& auxiliaries = AuxiliaryTable::defaults());

}  // namespace urduidx
