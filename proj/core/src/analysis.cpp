#include "urduidx/analysis.hpp"

#include <fstream>
#include <sstream>

#include "urduidx/errors.hpp"
#include "urduidx/utf8.hpp"

namespace urduidx {

namespace {

// Strips trailing '\r' (files may be CRLF) and '#' comments, then trims
// ASCII blanks. Returns the payload portion of a config line.
std::string clean_line(std::string line) {
    if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
    }
    auto is_blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    std::size_t begin = 0;
    while (begin < line.size() && is_blank(line[begin])) ++begin;
    std::size_t end = line.size();
    while (end > begin && is_blank(line[end - 1])) --end;
    return line.substr(begin, end - begin);
}

char32_t parse_hex_codepoint(const std::string& text, std::size_t line_no) {
    if (text.empty()) {
        throw FormatError("empty codepoint field", line_no);
    }
    char32_t value = 0;
    for (char c : text) {
        int digit;
        if (c >= '0' && c <= '9') digit = c - '0';
        else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
        else throw FormatError("invalid hex codepoint '" + text + "'", line_no);
        value = value * 16 + static_cast<char32_t>(digit);
        if (value > 0x10FFFF) {
            throw FormatError("codepoint out of range '" + text + "'", line_no);
        }
    }
    return value;
}

std::ifstream open_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open config file: " + path.string());
    }
    return in;
}

}  // namespace

NormalizationConfig NormalizationConfig::defaults() {
    NormalizationConfig cfg;
    cfg.fold_table = {
        {U'ي', U'ی'},  // Arabic yeh  -> Urdu yeh
        {U'ك', U'ک'},  // Arabic kaf  -> Urdu kaf
        {U'ة', U'ہ'},  // teh marbuta -> heh goal
    };
    cfg.strip_set = {
        U'.', U'،', U'؟', U'۔',  // . ، ؟ ۔
        U'ً', U'ٌ', U'ٍ', U'َ',  // harakat
        U'ُ', U'ِ', U'ّ', U'ْ',
    };
    cfg.validate();
    return cfg;
}

NormalizationConfig NormalizationConfig::load(
    const std::filesystem::path& fold_table_path,
    const std::filesystem::path& strip_set_path) {
    NormalizationConfig cfg;
    cfg.load_fold_table(fold_table_path);
    cfg.load_strip_set(strip_set_path);
    return cfg;
}

void NormalizationConfig::load_fold_table(const std::filesystem::path& path) {
    auto in = open_config(path);
    std::unordered_map<char32_t, char32_t> table;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = clean_line(std::move(raw));
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string from_text, to_text, extra;
        if (!(fields >> from_text >> to_text) || (fields >> extra)) {
            throw FormatError("expected two hex codepoints", line_no);
        }
        char32_t from = parse_hex_codepoint(from_text, line_no);
        char32_t to = parse_hex_codepoint(to_text, line_no);
        if (auto [it, inserted] = table.emplace(from, to);
            !inserted && it->second != to) {
            throw FormatError("conflicting fold for codepoint " + from_text,
                              line_no);
        }
    }
    fold_table = std::move(table);
    validate();
}

void NormalizationConfig::load_strip_set(const std::filesystem::path& path) {
    auto in = open_config(path);
    std::unordered_set<char32_t> set;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = clean_line(std::move(raw));
        if (line.empty()) continue;
        set.insert(parse_hex_codepoint(line, line_no));
    }
    strip_set = std::move(set);
    validate();
}

void NormalizationConfig::validate() const {
    for (const auto& [from, to] : fold_table) {
        if (fold_table.contains(to) && fold_table.at(to) != to) {
            throw FormatError(
                "fold table is not idempotent: target of " +
                    std::to_string(static_cast<std::uint32_t>(from)) +
                    " is itself folded elsewhere",
                0);
        }
        if (strip_set.contains(to)) {
            throw FormatError(
                "fold table is not idempotent: target of " +
                    std::to_string(static_cast<std::uint32_t>(from)) +
                    " is in the strip set",
                0);
        }
    }
}

StopList StopList::defaults() {
    StopList stops;
    stops.words = {
        "کیوں", "ہے", "یہ", "کیسے", "وہ", "کا",
        "کی", "کے", "کو", "نے", "میں", "سے",
        "پر", "اور", "یا", "کہ", "ہیں", "تھا",
        "تھی", "تھے", "ہو", "ہوں", "اس", "ان",
        "جو", "بھی", "نہیں", "تو", "ہی", "مگر",
        "لیکن", "اگر", "اب",
    };
    return stops;
}

StopList StopList::load(const std::filesystem::path& path,
                        const NormalizationConfig& cfg) {
    auto in = open_config(path);
    StopList stops;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = clean_line(std::move(raw));
        if (line.empty()) continue;
        std::string term;
        try {
            term = normalize(line, cfg);
        } catch (const EncodingError&) {
            throw FormatError("stop word is not valid UTF-8", line_no);
        }
        if (!term.empty()) {
            stops.words.insert(std::move(term));
        }
    }
    return stops;
}

bool StopList::contains(std::string_view term) const {
    return words.find(std::string(term)) != words.end();
}

std::vector<Token> tokenize(std::string_view body, DocId doc_id) {
    std::vector<Token> tokens;
    std::string current;
    Position position = 0;
    auto flush = [&] {
        if (!current.empty()) {
            tokens.push_back(Token{std::move(current), doc_id, position++});
            current.clear();
        }
    };
    for (char32_t cp : decode_utf8(body)) {
        if (is_whitespace(cp)) {
            flush();
        } else {
            append_utf8(current, cp);
        }
    }
    flush();
    return tokens;
}

std::string normalize(std::string_view surface, const NormalizationConfig& cfg) {
    std::string out;
    out.reserve(surface.size());
    for (char32_t cp : decode_utf8(surface)) {
        if (cfg.strip_set.contains(cp)) continue;
        if (auto it = cfg.fold_table.find(cp); it != cfg.fold_table.end()) {
            cp = it->second;
        }
        append_utf8(out, cp);
    }
    return out;
}

bool is_stop_word(std::string_view term, const StopList& stops) {
    return stops.contains(term);
}

std::vector<AnalyzedTerm> analyze(const Document& doc,
                                  const NormalizationConfig& cfg,
                                  const StopList& stops,
                                  bool remove_stops) {
    std::vector<AnalyzedTerm> terms;
    for (Token& token : tokenize(doc.body, doc.doc_id)) {
        std::string term = normalize(token.surface, cfg);
        if (term.empty()) continue;
        if (remove_stops && stops.contains(term)) continue;
        terms.push_back(AnalyzedTerm{std::move(term), token.doc_id, token.position});
    }
    return terms;
}

}  // namespace urduidx
