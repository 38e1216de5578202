#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "urduidx/ingest.hpp"

namespace urduidx {

// 0-based token ordinal within a document, assigned before stop-word
// removal so positions stay comparable across index variants.
using Position = std::uint32_t;

struct Token {
    std::string surface;  // never empty, never contains whitespace
    DocId doc_id = 0;
    Position position = 0;

    bool operator==(const Token&) const = default;
};

struct AnalyzedTerm {
    std::string term;  // normalized, never empty
    DocId doc_id = 0;
    Position position = 0;  // original pre-removal ordinal

    bool operator==(const AnalyzedTerm&) const = default;
};

// Codepoint folding + stripping applied to every token. The fold table must
// be idempotent: fold targets are fixed points and are never stripped.
struct NormalizationConfig {
    std::unordered_map<char32_t, char32_t> fold_table;
    std::unordered_set<char32_t> strip_set;

    // Urdu defaults: fold Arabic-presentation letters to Urdu canonical
    // ones, strip harakat diacritics and sentence punctuation.
    static NormalizationConfig defaults();

    // File formats: fold table is lines of "<hex cp> <hex cp>", strip set
    // is one hex codepoint per line; '#' starts a comment in both.
    // Throws FormatError on syntax or idempotence violations.
    static NormalizationConfig load(const std::filesystem::path& fold_table_path,
                                    const std::filesystem::path& strip_set_path);

    void load_fold_table(const std::filesystem::path& path);
    void load_strip_set(const std::filesystem::path& path);

    // Verifies the idempotence invariant; throws FormatError if violated.
    void validate() const;
};

// Set of normalized stop words. Entries are normalized with the supplied
// config on load so lookups against normalized tokens always match.
struct StopList {
    std::unordered_set<std::string> words;

    static StopList defaults();
    static StopList empty() { return StopList{}; }

    // One term per line, UTF-8, '#' comments, blank lines ignored.
    static StopList load(const std::filesystem::path& path,
                         const NormalizationConfig& cfg);

    bool contains(std::string_view term) const;
};

// Splits on Unicode whitespace; empty segments discarded; positions dense
// from 0. Throws EncodingError on malformed UTF-8.
std::vector<Token> tokenize(std::string_view body, DocId doc_id = 0);

// Removes strip_set codepoints and applies the fold table codepoint-wise.
// Result may be empty (e.g. a punctuation-only token).
std::string normalize(std::string_view surface, const NormalizationConfig& cfg);

bool is_stop_word(std::string_view term, const StopList& stops);

// Full pipeline: tokenize -> normalize -> drop empties -> drop stop words
// iff remove_stops. Original token positions are preserved (gaps allowed).
std::vector<AnalyzedTerm> analyze(const Document& doc,
                                  const NormalizationConfig& cfg,
                                  const StopList& stops,
                                  bool remove_stops);

}  // namespace urduidx
