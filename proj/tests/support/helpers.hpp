#pragma once

// Shared test utilities: temp dirs, deterministic random Urdu corpora, and
// an independent byte-level oracle for the analysis pipeline (its own
// whitespace split, normalization and stop filter — no library calls).

#include <compare>
#include <cstdint>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "urduidx/ingest.hpp"

namespace testsupport {

// Self-deleting unique directory under the system temp root.
class TempDir {
public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

void write_file(const std::filesystem::path& path, std::string_view bytes);
std::string read_file(const std::filesystem::path& path);

// --- deterministic Urdu text generation --------------------------------

// A random word of `min_len`..`max_len` letters from the 40-letter Urdu
// alphabet.
std::string random_word(std::mt19937& rng, int min_len = 2, int max_len = 8);

// A word, sometimes decorated with strip-set punctuation/diacritics or
// with Arabic-presentation letters that normalization folds away.
std::string random_token(std::mt19937& rng);

// Random document bodies: up to `max_docs` docs of up to `max_tokens`
// space-separated tokens (never empty).
std::vector<std::string> random_bodies(std::mt19937& rng, int max_docs = 50,
                                       int max_tokens = 200);

// In-memory corpus over the given bodies, doc_id = position.
urduidx::Corpus make_corpus(const std::vector<std::string>& bodies);

// A corpus whose vocabulary is `n_terms` distinct random words (stop words
// and probe collisions excluded) plus the probes, each probe first
// appearing around encounter position `probe_at`. Every term occurs
// exactly once; documents hold `terms_per_doc` tokens.
urduidx::Corpus synthetic_vocab_corpus(std::mt19937& rng, std::size_t n_terms,
                                       const std::vector<std::string>& probes,
                                       std::size_t probe_at,
                                       std::size_t terms_per_doc = 10);

// --- independent analysis oracle ---------------------------------------

struct OracleTables {
    // UTF-8 byte sequences, applied by plain byte replacement.
    std::vector<std::pair<std::string, std::string>> folds;
    std::vector<std::string> strips;
    std::set<std::string> stops;  // already oracle-normalized
};

// Parses stopwords.txt / fold_table.txt / strip_set.txt from the shipped
// data directory with its own parser.
OracleTables load_oracle_tables(const std::filesystem::path& data_dir);

std::string oracle_normalize(std::string token, const OracleTables& tables);

struct Triple {
    std::string term;
    std::uint32_t doc = 0;
    std::uint32_t pos = 0;

    auto operator<=>(const Triple&) const = default;
};

// Brute-force (term, doc, position) triples over raw document bodies:
// split on ASCII blanks, count positions before stop removal, normalize,
// drop empties, drop stop words iff remove_stops.
std::set<Triple> oracle_scan(const std::vector<std::string>& bodies,
                             const OracleTables& tables, bool remove_stops);

}  // namespace testsupport
