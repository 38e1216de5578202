#include "urduidx/collation.hpp"

#include <fstream>
#include <string>

#include "urduidx/errors.hpp"
#include "urduidx/utf8.hpp"

namespace urduidx {

namespace {

constexpr char32_t kDefaultSequence[] = {
    U'ا', U'آ', U'ب', U'پ', U'ت', U'ٹ', U'ث', U'ج',
    U'چ', U'ح', U'خ', U'د', U'ڈ', U'ذ', U'ر', U'ڑ',
    U'ز', U'ژ', U'س', U'ش', U'ص', U'ض', U'ط', U'ظ',
    U'ع', U'غ', U'ف', U'ق', U'ک', U'گ', U'ل', U'م',
    U'ن', U'ں', U'و', U'ہ', U'ھ', U'ء', U'ی', U'ے',
};

}  // namespace

CollationTable CollationTable::defaults() {
    CollationTable table;
    std::uint32_t next = 0;
    for (char32_t cp : kDefaultSequence) {
        table.rank.emplace(cp, next++);
    }
    return table;
}

CollationTable CollationTable::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open collation file: " + path.string());
    }
    CollationTable table;
    std::uint32_t next = 0;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::string text;
        for (char c : raw) {
            if (c != ' ' && c != '\t' && c != '\r') text.push_back(c);
        }
        if (text.empty()) continue;
        char32_t cp = 0;
        for (char c : text) {
            int digit;
            if (c >= '0' && c <= '9') digit = c - '0';
            else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
            else throw FormatError("invalid hex codepoint '" + text + "'", line_no);
            cp = cp * 16 + static_cast<char32_t>(digit);
            if (cp > 0x10FFFF) {
                throw FormatError("codepoint out of range '" + text + "'", line_no);
            }
        }
        if (!table.rank.emplace(cp, next).second) {
            throw FormatError("duplicate collation codepoint '" + text + "'",
                              line_no);
        }
        ++next;
    }
    return table;
}

std::strong_ordering compare_terms(std::string_view a, std::string_view b,
                                   const CollationTable& collation) {
    std::size_t ia = 0;
    std::size_t ib = 0;
    while (ia < a.size() && ib < b.size()) {
        const std::uint32_t ra = collation.rank_of(next_codepoint(a, ia));
        const std::uint32_t rb = collation.rank_of(next_codepoint(b, ib));
        if (ra != rb) {
            return ra < rb ? std::strong_ordering::less
                           : std::strong_ordering::greater;
        }
    }
    if (ia < a.size()) return std::strong_ordering::greater;
    if (ib < b.size()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

}  // namespace urduidx
