#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <string_view>
#include <unordered_map>

namespace urduidx {

// Total order over terms driven by the Urdu alphabet sequence. Codepoints
// outside the table (digits, Latin, …) sort after all ranked letters, by
// raw codepoint value, so the order stays total.
struct CollationTable {
    std::unordered_map<char32_t, std::uint32_t> rank;

    // The 40-letter sequence:
    // ا آ ب پ ت ٹ ث ج چ ح خ د ڈ ذ ر ڑ ز ژ س ش ص ض ط ظ ع غ ف ق ک گ ل م ن ں و ہ ھ ء ی ے
    static CollationTable defaults();

    // One hex codepoint per line in rank order, '#' comments. Throws
    // FormatError on bad syntax or duplicate codepoints.
    static CollationTable load(const std::filesystem::path& path);

    // Effective sort key: table rank, or past-the-table fallback.
    std::uint32_t rank_of(char32_t cp) const {
        if (auto it = rank.find(cp); it != rank.end()) {
            return it->second;
        }
        return 0x110000u + static_cast<std::uint32_t>(cp);
    }
};

// Lexicographic comparison by codepoint rank; a strict prefix sorts first.
// Terms must be valid UTF-8 (they come from the analysis pipeline).
std::strong_ordering compare_terms(std::string_view a, std::string_view b,
                                   const CollationTable& collation);

// Convenience predicate for sorting.
inline bool term_less(std::string_view a, std::string_view b,
                      const CollationTable& collation) {
    return compare_terms(a, b, collation) < 0;
}

}  // namespace urduidx
