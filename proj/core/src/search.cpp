#include "urduidx/search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "urduidx/errors.hpp"

namespace urduidx {

Query parse_query(std::string_view raw, const NormalizationConfig& cfg,
                  const StopList& stops, bool expand) {
    Query query;
    query.raw = std::string(raw);
    query.expand = expand;
    for (const Token& token : tokenize(raw)) {
        std::string term = normalize(token.surface, cfg);
        if (term.empty()) continue;
        if (stops.contains(term)) continue;
        query.terms.push_back(std::move(term));
    }
    if (query.terms.empty()) {
        throw EmptyQueryError();
    }
    return query;
}

const VocabEntry* lookup(const InvertedIndex& index, std::string_view term) {
    if (index.flags.ordered) {
        auto it = std::lower_bound(
            index.entries.begin(), index.entries.end(), term,
            [&](const VocabEntry& entry, std::string_view key) {
                return term_less(entry.term, key, index.collation);
            });
        if (it != index.entries.end() && it->term == term) {
            return &*it;
        }
        return nullptr;
    }
    for (const VocabEntry& entry : index.entries) {
        if (entry.term == term) {
            return &entry;
        }
    }
    return nullptr;
}

namespace {

// The terms to look up for one query term: just the term itself, or its
// whole stem group. With a stem layer present, the layer's bucket for the
// term's stem joins the group (two-level lookup), catching vocabulary
// inflections the generator alone would miss.
std::vector<std::string> expansion_set(const InvertedIndex& index,
                                       const std::string& term,
                                       const AuxiliaryTable& auxiliaries,
                                       bool expand) {
    if (!expand) {
        return {term};
    }
    std::vector<std::string> members = stem_group(term, auxiliaries);
    if (index.flags.stemmed_layer) {
        std::unordered_set<std::string> seen(members.begin(), members.end());
        if (const StemGroup* bucket =
                index.find_stem(strip_auxiliary(term, auxiliaries))) {
            for (const std::string& member : bucket->members) {
                if (seen.insert(member).second) {
                    members.push_back(member);
                }
            }
        }
    }
    return members;
}

}  // namespace

ResultSet search(const InvertedIndex& index, const Query& query,
                 const AuxiliaryTable& auxiliaries) {
    ResultSet results;
    std::set<DocId> matched_docs;
    std::unordered_set<std::string> seen_terms;

    for (const std::string& term : query.terms) {
        if (!seen_terms.insert(term).second) continue;

        // doc -> merged positions, ordered so the output is deterministic.
        std::map<DocId, std::vector<Position>> merged;
        for (const std::string& member :
             expansion_set(index, term, auxiliaries, query.expand)) {
            const VocabEntry* entry = lookup(index, member);
            if (entry == nullptr) continue;
            for (const Posting& posting : entry->postings) {
                std::vector<Position>& positions = merged[posting.doc_id];
                positions.insert(positions.end(), posting.positions.begin(),
                                 posting.positions.end());
            }
        }

        TermResult row;
        row.term = term;
        for (auto& [doc_id, positions] : merged) {
            std::sort(positions.begin(), positions.end());
            positions.erase(std::unique(positions.begin(), positions.end()),
                            positions.end());
            results.occurrence_count += positions.size();
            matched_docs.insert(doc_id);
            row.postings.push_back(Posting{doc_id, std::move(positions)});
        }
        results.per_term.push_back(std::move(row));
    }

    results.record_count = matched_docs.size();
    return results;
}

}  // namespace urduidx
