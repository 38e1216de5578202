#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "urduidx/analysis.hpp"
#include "urduidx/collation.hpp"
#include "urduidx/ingest.hpp"
#include "urduidx/stemmer.hpp"

namespace urduidx {

struct Posting {
    DocId doc_id = 0;
    std::vector<Position> positions;  // strictly increasing, non-empty

    bool operator==(const Posting&) const = default;
};

struct VocabEntry {
    std::string term;                  // normalized, never empty
    std::uint32_t doc_frequency = 0;   // == postings.size()
    std::vector<Posting> postings;     // doc_ids strictly increasing

    bool operator==(const VocabEntry&) const = default;
};

struct IndexFlags {
    bool stop_words_removed = true;
    bool ordered = true;
    bool stemmed_layer = true;

    bool operator==(const IndexFlags&) const = default;
};

// One stem bucket of the multilevel layer: the stem maps to every
// vocabulary term that strips to it.
struct StemGroup {
    std::string stem;
    std::vector<std::string> members;  // in vocabulary entry order

    bool operator==(const StemGroup&) const = default;
};

struct InvertedIndex {
    // Collation-sorted when flags.ordered, first-encounter order otherwise.
    std::vector<VocabEntry> entries;
    IndexFlags flags;
    CollationTable collation;
    // Populated iff flags.stemmed_layer: a partition of the vocabulary
    // keyed by auxiliary-stripped stem, groups sorted by stem under the
    // collation regardless of flags.ordered (determinism).
    std::vector<StemGroup> stem_layer;

    // Logical identity: entries, flags and stem layer; the collation is a
    // lookup aid, not data.
    bool operator==(const InvertedIndex& other) const {
        return entries == other.entries && flags == other.flags &&
               stem_layer == other.stem_layer;
    }

    std::size_t term_count() const { return entries.size(); }
    std::uint64_t posting_count() const;

    // The stem bucket for `stem`, or nullptr. Binary search over the
    // collation-sorted layer.
    const StemGroup* find_stem(std::string_view stem) const;
};

struct BuildOptions {
    IndexFlags flags;
    StopList stops = StopList::defaults();
    NormalizationConfig normalization = NormalizationConfig::defaults();
    AuxiliaryTable auxiliaries = AuxiliaryTable::defaults();
    CollationTable collation = CollationTable::defaults();
};

// Builds the inverted file over the corpus: every analyzed term t at
// position p in document d yields a posting (d, …p…) under t, and nothing
// else. Deterministic: two builds of the same corpus + options compare
// equal and serialize byte-identically. Throws CorpusEmptyError when the
// corpus has no documents.
InvertedIndex build_index(const Corpus& corpus, const BuildOptions& options);

// v1 text format (UTF-8, LF, bit-exact):
//   line 1:       URDUIDX 1 ordered=<0|1> stopless=<0|1> stemlayer=<0|1> terms=<N>
//   next N lines: <term>\t<df>\t<doc>:<pos>,<pos>;<doc>:<pos>...
//   if stemlayer: #STEMS <M>  then M lines  <stem>\t<term>,<term>,...
std::string serialize_index(const InvertedIndex& index);

// Writes the v1 serialization; returns the byte count written (the size
// metric used by the benchmark). Throws IoError on an unwritable path.
std::uint64_t write_index(const InvertedIndex& index,
                          const std::filesystem::path& path);

// Inverse of write_index. Re-validates every invariant: FormatError (with
// a 1-based line number) for malformed syntax, CorruptIndexError for
// well-formed files whose data breaks an invariant (df mismatch, unsorted
// ordered vocabulary, stem members missing from the vocabulary, …).
// The collation is needed to re-check ordering and to serve lookups.
InvertedIndex read_index(const std::filesystem::path& path,
                         CollationTable collation = CollationTable::defaults());

// read_index over an in-memory buffer (the file contents).
InvertedIndex parse_index(std::string_view text,
                          CollationTable collation = CollationTable::defaults());

}  // namespace urduidx
