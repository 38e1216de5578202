#include "urduidx/stemmer.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include "urduidx/errors.hpp"
#include "urduidx/utf8.hpp"

namespace urduidx {

namespace {

constexpr char32_t kAlif = U'ا';      // ا
constexpr char32_t kWao = U'و';       // و
constexpr char32_t kYeh = U'ی';       // ی
constexpr char32_t kBariYeh = U'ے';   // ے
constexpr char32_t kNoonGhunna = U'ں';  // ں

const std::u32string kSuffixWao = {kWao, kNoonGhunna};    // وں
const std::u32string kSuffixYeh = {kYeh, kNoonGhunna};    // یں
const std::u32string kSuffixBariYeh = {kBariYeh};         // ے

CharClass classify_codepoints(const std::u32string& word) {
    if (word.empty()) {
        throw EmptyTermError();
    }
    switch (word.back()) {
        case kAlif:
        case kWao:
            return CharClass::AlifWao;
        case kYeh:
            return CharClass::Yeh;
        case kBariYeh:
            return CharClass::BariYeh;
        default:
            return CharClass::Consonant;
    }
}

// Shared by the throwing public pluralize and the silent variant used by
// stem_group (which skips degenerate one-letter inputs instead of raising).
std::vector<std::u32string> pluralize_codepoints(const std::u32string& word,
                                                 bool throw_on_degenerate) {
    std::vector<std::u32string> variants;
    auto degenerate = [&]() -> std::vector<std::u32string> {
        if (throw_on_degenerate) {
            throw EmptyTermError();
        }
        return {};
    };
    switch (classify_codepoints(word)) {
        case CharClass::Consonant:
            variants.push_back(word + kSuffixWao);
            break;
        case CharClass::AlifWao:
            if (word.back() == kAlif) {
                std::u32string base(word.begin(), word.end() - 1);
                if (base.empty()) return degenerate();
                variants.push_back(base + kSuffixWao);
                variants.push_back(base + kSuffixBariYeh);
            } else {  // ends in و: no deletion rule exists for it
                variants.push_back(word + kSuffixWao);
            }
            break;
        case CharClass::Yeh:
            variants.push_back(word + kSuffixWao);
            variants.push_back(word + kSuffixYeh);
            break;
        case CharClass::BariYeh: {
            std::u32string base(word.begin(), word.end() - 1);
            if (base.empty()) return degenerate();
            variants.push_back(base + kSuffixWao);
            // base+ے reconstructs the input word; a variant equal to the
            // word carries no information and is dropped.
            break;
        }
    }
    return variants;
}

bool ends_with(const std::u32string& word, const std::u32string& suffix) {
    return word.size() >= suffix.size() &&
           std::equal(suffix.begin(), suffix.end(), word.end() - suffix.size());
}

std::u32string strip_codepoints(const std::u32string& word,
                                const std::vector<std::u32string>& suffixes) {
    for (const std::u32string& suffix : suffixes) {
        if (ends_with(word, suffix) &&
            word.size() - suffix.size() >= kMinStemLength) {
            return std::u32string(word.begin(), word.end() - suffix.size());
        }
    }
    return word;
}

std::vector<std::u32string> decode_suffixes(const AuxiliaryTable& table) {
    std::vector<std::u32string> decoded;
    decoded.reserve(table.suffixes.size());
    for (const std::string& s : table.suffixes) {
        decoded.push_back(decode_utf8(s));
    }
    return decoded;
}

void sort_longest_first(std::vector<std::string>& suffixes) {
    std::stable_sort(suffixes.begin(), suffixes.end(),
                     [](const std::string& a, const std::string& b) {
                         return codepoint_count(a) > codepoint_count(b);
                     });
}

}  // namespace

std::string_view to_string(CharClass c) {
    switch (c) {
        case CharClass::Consonant: return "Consonant";
        case CharClass::AlifWao: return "AlifWao";
        case CharClass::Yeh: return "Yeh";
        case CharClass::BariYeh: return "BariYeh";
    }
    return "Consonant";
}

AuxiliaryTable AuxiliaryTable::defaults() {
    AuxiliaryTable table;
    table.suffixes = {
        "ہے", "و", "یں", "تیں", "تی", "تا",
        "ے", "ی", "ا", "نی", "نے", "نا",
    };
    sort_longest_first(table.suffixes);
    return table;
}

AuxiliaryTable AuxiliaryTable::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open auxiliary table: " + path.string());
    }
    AuxiliaryTable table;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        while (!raw.empty() && (raw.back() == '\r' || raw.back() == ' ' ||
                                raw.back() == '\t')) {
            raw.pop_back();
        }
        std::size_t begin = 0;
        while (begin < raw.size() && (raw[begin] == ' ' || raw[begin] == '\t')) {
            ++begin;
        }
        std::string entry = raw.substr(begin);
        if (entry.empty()) continue;
        try {
            decode_utf8(entry);
        } catch (const EncodingError&) {
            throw FormatError("auxiliary suffix is not valid UTF-8", line_no);
        }
        table.suffixes.push_back(std::move(entry));
    }
    sort_longest_first(table.suffixes);
    return table;
}

CharClass classify(std::string_view word) {
    return classify_codepoints(decode_utf8(word));
}

std::vector<std::string> pluralize(std::string_view word) {
    std::vector<std::string> out;
    for (const std::u32string& v :
         pluralize_codepoints(decode_utf8(word), /*throw_on_degenerate=*/true)) {
        out.push_back(encode_utf8(v));
    }
    return out;
}

std::string strip_auxiliary(std::string_view word, const AuxiliaryTable& table) {
    return encode_utf8(strip_codepoints(decode_utf8(word), decode_suffixes(table)));
}

std::vector<std::string> stem_group(std::string_view word,
                                    const AuxiliaryTable& table) {
    std::u32string w = decode_utf8(word);
    if (w.empty()) {
        throw EmptyTermError();
    }
    std::vector<std::string> group;
    std::unordered_set<std::string> seen;
    auto add = [&](const std::u32string& member) {
        std::string encoded = encode_utf8(member);
        if (seen.insert(encoded).second) {
            group.push_back(std::move(encoded));
        }
    };
    add(w);
    for (const std::u32string& v : pluralize_codepoints(w, false)) {
        add(v);
    }
    std::vector<std::u32string> suffixes = decode_suffixes(table);
    std::u32string stem = strip_codepoints(w, suffixes);
    for (const std::u32string& v : pluralize_codepoints(stem, false)) {
        add(v);
    }
    for (const std::u32string& suffix : suffixes) {
        add(stem + suffix);
    }
    return group;
}

StemRecord stem_record(std::string_view word, const AuxiliaryTable& table) {
    StemRecord record;
    record.word = std::string(word);
    record.char_class = classify(word);
    record.stem = strip_auxiliary(word, table);
    record.plural_variants = pluralize(word);
    return record;
}

}  // namespace urduidx
