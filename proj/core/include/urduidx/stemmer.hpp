#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace urduidx {

// Words are grouped by their final letter; the group decides which plural
// generation rule applies.
enum class CharClass {
    Consonant,  // anything not listed below
    AlifWao,    // ends in ا or و
    Yeh,        // ends in ی
    BariYeh,    // ends in ے
};

std::string_view to_string(CharClass c);

// Never strip a word below this many codepoints: the single-letter
// suffixes (ا, ی, و, ے) would otherwise destroy two-letter words like رب.
inline constexpr std::size_t kMinStemLength = 2;

// Verbal auxiliary suffixes, held longest-first so the longest applicable
// suffix always wins (تیں is stripped before یں could match).
struct AuxiliaryTable {
    std::vector<std::string> suffixes;

    // The default twelve suffixes: ہے, و, یں, تیں, تی, تا, ے, ی, ا, نی,
    // نے, نا — reordered longest-first, ties keeping that listing order.
    static AuxiliaryTable defaults();

    // One suffix per line, UTF-8, '#' comments. Entries are re-sorted
    // longest-first with ties broken by file order.
    static AuxiliaryTable load(const std::filesystem::path& path);
};

// Everything the stemmer derives from one word.
struct StemRecord {
    std::string word;
    CharClass char_class = CharClass::Consonant;
    std::string stem;                          // auxiliary-stripped form
    std::vector<std::string> plural_variants;  // generated, word excluded

    bool operator==(const StemRecord&) const = default;
};

// Classification is total over non-empty words; throws EmptyTermError on "".
CharClass classify(std::string_view word);

// Generates plural surface forms:
//   Consonant      -> word+وں
//   AlifWao (…ا)   -> drop ا, +وں and +ے
//   AlifWao (…و)   -> word+وں (no deletion; the deletion rule names only ا)
//   Yeh            -> word+وں and word+یں (no deletion)
//   BariYeh        -> drop ے, +وں (+ے regenerates the word and is dropped)
// Throws EmptyTermError when the word is empty or deletion would leave an
// empty remainder (the degenerate one-letter words ا and ے).
std::vector<std::string> pluralize(std::string_view word);

// Removes the longest table suffix that matches and leaves at least
// kMinStemLength codepoints; returns the word unchanged when none does.
std::string strip_auxiliary(std::string_view word, const AuxiliaryTable& table);

// Expansion set used by stemmed search:
//   {word} ∪ pluralize(word) ∪ pluralize(stem) ∪ {stem+aux : aux ∈ table}
// where stem = strip_auxiliary(word). Returned deduplicated, in that
// construction order (the word itself always first). Degenerate pluralize
// inputs contribute nothing rather than raising. Throws EmptyTermError only
// for an empty word.
std::vector<std::string> stem_group(std::string_view word,
                                    const AuxiliaryTable& table);

// Bundles classify / strip_auxiliary / pluralize into one record.
StemRecord stem_record(std::string_view word, const AuxiliaryTable& table);

}  // namespace urduidx
