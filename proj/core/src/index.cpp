#include "urduidx/index.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include "urduidx/errors.hpp"
#include "urduidx/utf8.hpp"

namespace urduidx {

namespace {

void append_number(std::string& out, std::uint64_t value) {
    char buf[24];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    out.append(buf, end);
}

// A term is storable iff the v1 line grammar can carry it: tabs and
// newlines are field/record separators, and the stem-layer member list is
// comma-separated.
void require_storable(const std::string& term, bool in_stem_layer) {
    if (term.empty()) {
        throw CorruptIndexError("empty term cannot be serialized");
    }
    for (char c : term) {
        if (c == '\t' || c == '\n' || c == '\r' ||
            (in_stem_layer && c == ',')) {
            throw CorruptIndexError("term not representable in v1 format: '" +
                                    term + "'");
        }
    }
}

struct LineReader {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line_no = 0;  // 1-based number of the last line returned

    // Returns the next LF-terminated line without its terminator. A final
    // fragment without '\n' is a truncated line.
    std::string_view next() {
        if (pos >= text.size()) {
            throw FormatError("unexpected end of file", line_no + 1);
        }
        ++line_no;
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            throw FormatError("truncated line (missing newline)", line_no);
        }
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        return line;
    }

    bool at_end() const { return pos >= text.size(); }
};

std::uint64_t parse_number(std::string_view text, std::size_t line_no,
                           const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw FormatError(std::string("invalid ") + what + " '" +
                              std::string(text) + "'",
                          line_no);
    }
    return value;
}

// Splits "key=value" where value must be "0" or "1".
bool parse_flag(std::string_view field, std::string_view key,
                std::size_t line_no) {
    if (field.size() != key.size() + 2 || field.substr(0, key.size()) != key ||
        field[key.size()] != '=' ||
        (field.back() != '0' && field.back() != '1')) {
        throw FormatError("bad header field '" + std::string(field) +
                              "', expected " + std::string(key) + "=<0|1>",
                          line_no);
    }
    return field.back() == '1';
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t at = text.find(sep, start);
        if (at == std::string_view::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, at - start));
        start = at + 1;
    }
}

void validate_term_utf8(std::string_view term, std::size_t line_no) {
    try {
        decode_utf8(term);
    } catch (const EncodingError&) {
        throw FormatError("term is not valid UTF-8", line_no);
    }
}

}  // namespace

std::uint64_t InvertedIndex::posting_count() const {
    std::uint64_t n = 0;
    for (const VocabEntry& entry : entries) {
        n += entry.postings.size();
    }
    return n;
}

const StemGroup* InvertedIndex::find_stem(std::string_view stem) const {
    auto it = std::lower_bound(
        stem_layer.begin(), stem_layer.end(), stem,
        [this](const StemGroup& group, std::string_view key) {
            return term_less(group.stem, key, collation);
        });
    if (it != stem_layer.end() && it->stem == stem) {
        return &*it;
    }
    return nullptr;
}

InvertedIndex build_index(const Corpus& corpus, const BuildOptions& options) {
    if (corpus.documents.empty()) {
        throw CorpusEmptyError("cannot build an index over an empty corpus");
    }

    InvertedIndex index;
    index.flags = options.flags;
    index.collation = options.collation;

    // First-encounter term order; postings appended in document order.
    std::unordered_map<std::string, std::size_t> slot_of;
    for (const Document& doc : corpus.documents) {
        for (AnalyzedTerm& term :
             analyze(doc, options.normalization, options.stops,
                     options.flags.stop_words_removed)) {
            auto [it, inserted] = slot_of.try_emplace(term.term, index.entries.size());
            if (inserted) {
                index.entries.push_back(VocabEntry{std::move(term.term), 0, {}});
            }
            VocabEntry& entry = index.entries[it->second];
            if (entry.postings.empty() ||
                entry.postings.back().doc_id != term.doc_id) {
                entry.postings.push_back(Posting{term.doc_id, {}});
            }
            entry.postings.back().positions.push_back(term.position);
        }
    }

    // Documents may arrive in any doc_id order (in-memory corpora); restore
    // the per-term invariants deterministically.
    for (VocabEntry& entry : index.entries) {
        std::sort(entry.postings.begin(), entry.postings.end(),
                  [](const Posting& a, const Posting& b) {
                      return a.doc_id < b.doc_id;
                  });
        std::vector<Posting> merged;
        for (Posting& posting : entry.postings) {
            if (!merged.empty() && merged.back().doc_id == posting.doc_id) {
                merged.back().positions.insert(merged.back().positions.end(),
                                               posting.positions.begin(),
                                               posting.positions.end());
            } else {
                merged.push_back(std::move(posting));
            }
        }
        for (Posting& posting : merged) {
            std::sort(posting.positions.begin(), posting.positions.end());
            posting.positions.erase(
                std::unique(posting.positions.begin(), posting.positions.end()),
                posting.positions.end());
        }
        entry.postings = std::move(merged);
        entry.doc_frequency = static_cast<std::uint32_t>(entry.postings.size());
    }

    if (options.flags.ordered) {
        std::sort(index.entries.begin(), index.entries.end(),
                  [&](const VocabEntry& a, const VocabEntry& b) {
                      return term_less(a.term, b.term, options.collation);
                  });
    }

    if (options.flags.stemmed_layer) {
        std::unordered_map<std::string, std::size_t> group_of;
        for (const VocabEntry& entry : index.entries) {
            std::string stem = strip_auxiliary(entry.term, options.auxiliaries);
            auto [it, inserted] =
                group_of.try_emplace(std::move(stem), index.stem_layer.size());
            if (inserted) {
                index.stem_layer.push_back(StemGroup{it->first, {}});
            }
            index.stem_layer[it->second].members.push_back(entry.term);
        }
        std::sort(index.stem_layer.begin(), index.stem_layer.end(),
                  [&](const StemGroup& a, const StemGroup& b) {
                      return term_less(a.stem, b.stem, options.collation);
                  });
    }

    return index;
}

std::string serialize_index(const InvertedIndex& index) {
    std::string out;
    out += "URDUIDX 1 ordered=";
    out += index.flags.ordered ? '1' : '0';
    out += " stopless=";
    out += index.flags.stop_words_removed ? '1' : '0';
    out += " stemlayer=";
    out += index.flags.stemmed_layer ? '1' : '0';
    out += " terms=";
    append_number(out, index.entries.size());
    out += '\n';

    for (const VocabEntry& entry : index.entries) {
        require_storable(entry.term, /*in_stem_layer=*/false);
        out += entry.term;
        out += '\t';
        append_number(out, entry.doc_frequency);
        out += '\t';
        bool first_doc = true;
        for (const Posting& posting : entry.postings) {
            if (!first_doc) out += ';';
            first_doc = false;
            append_number(out, posting.doc_id);
            out += ':';
            bool first_pos = true;
            for (Position pos : posting.positions) {
                if (!first_pos) out += ',';
                first_pos = false;
                append_number(out, pos);
            }
        }
        out += '\n';
    }

    if (index.flags.stemmed_layer) {
        out += "#STEMS ";
        append_number(out, index.stem_layer.size());
        out += '\n';
        for (const StemGroup& group : index.stem_layer) {
            require_storable(group.stem, /*in_stem_layer=*/true);
            out += group.stem;
            out += '\t';
            bool first = true;
            for (const std::string& member : group.members) {
                require_storable(member, /*in_stem_layer=*/true);
                if (!first) out += ',';
                first = false;
                out += member;
            }
            out += '\n';
        }
    }

    return out;
}

std::uint64_t write_index(const InvertedIndex& index,
                          const std::filesystem::path& path) {
    std::string payload = serialize_index(index);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open index file for writing: " + path.string());
    }
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    out.flush();
    if (!out) {
        throw IoError("failed writing index file: " + path.string());
    }
    return payload.size();
}

InvertedIndex parse_index(std::string_view text, CollationTable collation) {
    LineReader reader{text};

    // Header.
    std::string_view header = reader.next();
    std::vector<std::string_view> fields = split(header, ' ');
    if (fields.size() != 6 || fields[0] != "URDUIDX") {
        throw FormatError("bad header, expected 'URDUIDX 1 ordered=<0|1> "
                          "stopless=<0|1> stemlayer=<0|1> terms=<N>'",
                          reader.line_no);
    }
    if (fields[1] != "1") {
        throw FormatError("unsupported format version '" +
                              std::string(fields[1]) + "'",
                          reader.line_no);
    }
    InvertedIndex index;
    index.flags.ordered = parse_flag(fields[2], "ordered", reader.line_no);
    index.flags.stop_words_removed =
        parse_flag(fields[3], "stopless", reader.line_no);
    index.flags.stemmed_layer = parse_flag(fields[4], "stemlayer", reader.line_no);
    if (fields[5].substr(0, 6) != "terms=") {
        throw FormatError("bad header field '" + std::string(fields[5]) +
                              "', expected terms=<N>",
                          reader.line_no);
    }
    const std::uint64_t term_count =
        parse_number(fields[5].substr(6), reader.line_no, "term count");
    index.collation = std::move(collation);

    // Vocabulary lines.
    index.entries.reserve(
        std::min<std::uint64_t>(term_count, text.size() / 4 + 1));
    std::unordered_set<std::string> seen_terms;
    for (std::uint64_t i = 0; i < term_count; ++i) {
        std::string_view line = reader.next();
        std::vector<std::string_view> cols = split(line, '\t');
        if (cols.size() != 3) {
            throw FormatError("expected <term>\\t<df>\\t<postings>",
                              reader.line_no);
        }
        if (cols[0].empty()) {
            throw FormatError("empty term", reader.line_no);
        }
        validate_term_utf8(cols[0], reader.line_no);

        VocabEntry entry;
        entry.term = std::string(cols[0]);
        entry.doc_frequency = static_cast<std::uint32_t>(
            parse_number(cols[1], reader.line_no, "document frequency"));
        if (cols[2].empty()) {
            throw FormatError("empty postings list", reader.line_no);
        }
        for (std::string_view posting_text : split(cols[2], ';')) {
            std::size_t colon = posting_text.find(':');
            if (colon == std::string_view::npos) {
                throw FormatError("posting missing ':' separator",
                                  reader.line_no);
            }
            Posting posting;
            posting.doc_id = static_cast<DocId>(parse_number(
                posting_text.substr(0, colon), reader.line_no, "doc id"));
            for (std::string_view pos_text :
                 split(posting_text.substr(colon + 1), ',')) {
                posting.positions.push_back(static_cast<Position>(
                    parse_number(pos_text, reader.line_no, "position")));
            }
            entry.postings.push_back(std::move(posting));
        }

        // Invariant re-validation: well-formed grammar, bad data.
        if (entry.doc_frequency != entry.postings.size()) {
            throw CorruptIndexError(
                "document frequency does not match posting count for term '" +
                entry.term + "'");
        }
        for (std::size_t p = 0; p < entry.postings.size(); ++p) {
            const Posting& posting = entry.postings[p];
            if (p > 0 && entry.postings[p - 1].doc_id >= posting.doc_id) {
                throw CorruptIndexError("postings out of order for term '" +
                                        entry.term + "'");
            }
            for (std::size_t q = 1; q < posting.positions.size(); ++q) {
                if (posting.positions[q - 1] >= posting.positions[q]) {
                    throw CorruptIndexError("positions out of order for term '" +
                                            entry.term + "'");
                }
            }
        }
        if (!seen_terms.insert(entry.term).second) {
            throw CorruptIndexError("duplicate term '" + entry.term + "'");
        }
        index.entries.push_back(std::move(entry));
    }

    if (index.flags.ordered) {
        for (std::size_t i = 1; i < index.entries.size(); ++i) {
            if (compare_terms(index.entries[i - 1].term, index.entries[i].term,
                              index.collation) >= 0) {
                throw CorruptIndexError(
                    "vocabulary is not sorted but header claims ordered=1 "
                    "(offending term '" +
                    index.entries[i].term + "')");
            }
        }
    }

    // Stem layer.
    if (index.flags.stemmed_layer) {
        std::string_view stems_header = reader.next();
        if (stems_header.substr(0, 7) != "#STEMS ") {
            throw FormatError("expected '#STEMS <M>'", reader.line_no);
        }
        const std::uint64_t group_count =
            parse_number(stems_header.substr(7), reader.line_no, "stem count");
        index.stem_layer.reserve(
            std::min<std::uint64_t>(group_count, text.size() / 4 + 1));
        std::unordered_set<std::string> seen_stems;
        for (std::uint64_t i = 0; i < group_count; ++i) {
            std::string_view line = reader.next();
            std::vector<std::string_view> cols = split(line, '\t');
            if (cols.size() != 2) {
                throw FormatError("expected <stem>\\t<term>,<term>,...",
                                  reader.line_no);
            }
            if (cols[0].empty()) {
                throw FormatError("empty stem", reader.line_no);
            }
            validate_term_utf8(cols[0], reader.line_no);
            StemGroup group;
            group.stem = std::string(cols[0]);
            for (std::string_view member : split(cols[1], ',')) {
                if (member.empty()) {
                    throw FormatError("empty stem member", reader.line_no);
                }
                if (!seen_terms.contains(std::string(member))) {
                    throw CorruptIndexError(
                        "stem layer member '" + std::string(member) +
                        "' is not a vocabulary term");
                }
                group.members.emplace_back(member);
            }
            if (!seen_stems.insert(group.stem).second) {
                throw CorruptIndexError("duplicate stem '" + group.stem + "'");
            }
            index.stem_layer.push_back(std::move(group));
        }
        for (std::size_t i = 1; i < index.stem_layer.size(); ++i) {
            if (compare_terms(index.stem_layer[i - 1].stem,
                              index.stem_layer[i].stem,
                              index.collation) >= 0) {
                throw CorruptIndexError("stem layer is not sorted");
            }
        }
    }

    if (!reader.at_end()) {
        throw FormatError("unexpected trailing content", reader.line_no + 1);
    }
    return index;
}

InvertedIndex read_index(const std::filesystem::path& path,
                         CollationTable collation) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open index file: " + path.string());
    }
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw IoError("failed reading index file: " + path.string());
    }
    return parse_index(text, std::move(collation));
}

}  // namespace urduidx
