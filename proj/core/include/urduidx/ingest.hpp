#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace urduidx {

using DocId = std::uint32_t;

/// One loaded text file. Bodies are validated UTF-8; a leading byte-order
/// mark is stripped on load.
struct Document {
    DocId doc_id = 0;
    std::string source_name;
    std::string body;

    bool operator==(const Document&) const = default;
};

/// An ordered document collection. Documents are sorted by source_name and
/// numbered densely from zero, so loading the same directory always yields
/// the same corpus.
struct Corpus {
    std::vector<Document> documents;
    std::vector<std::string> manifest; // manifest[doc_id] == source_name

    bool operator==(const Corpus&) const = default;
};

/// Loads every regular file directly under `root_path` as one UTF-8
/// document. Throws CorpusEmptyError when the directory is missing or holds
/// no files, EncodingError (with source name and byte offset) on ill-formed
/// bytes, and IoError on read failures.
Corpus load_corpus(const std::filesystem::path& root_path);

} // namespace urduidx
