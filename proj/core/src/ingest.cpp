#include "urduidx/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "urduidx/errors.hpp"
#include "urduidx/utf8.hpp"

namespace fs = std::filesystem;

namespace urduidx {

namespace {

std::string read_file_bytes(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("read failure on " + path.string());
    }
    return std::move(buf).str();
}

void strip_bom(std::string& bytes) {
    if (bytes.size() >= 3 && bytes[0] == '\xEF' && bytes[1] == '\xBB' && bytes[2] == '\xBF') {
        bytes.erase(0, 3);
    }
}

} // namespace

Corpus load_corpus(const fs::path& root_path) {
    std::error_code ec;
    if (!fs::is_directory(root_path, ec)) {
        throw CorpusEmptyError("corpus directory not found: " + root_path.string());
    }

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(root_path)) {
        if (entry.is_regular_file()) {
            files.push_back(entry.path());
        }
    }
    if (files.empty()) {
        throw CorpusEmptyError("no files in corpus directory: " + root_path.string());
    }

    // Directory traversal order is platform dependent; document ids follow
    // the sorted file names instead.
    std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
        return a.filename().string() < b.filename().string();
    });

    Corpus corpus;
    corpus.documents.reserve(files.size());
    corpus.manifest.reserve(files.size());
    DocId next_id = 0;
    for (const auto& path : files) {
        std::string bytes = read_file_bytes(path);
        strip_bom(bytes);
        const std::string name = path.filename().string();
        try {
            decode_utf8(bytes); // validate; bodies stay UTF-8
        } catch (const EncodingError& e) {
            throw EncodingError(name, e.byte_offset());
        }
        corpus.documents.push_back(Document{next_id, name, std::move(bytes)});
        corpus.manifest.push_back(name);
        ++next_id;
    }
    return corpus;
}

} // namespace urduidx
