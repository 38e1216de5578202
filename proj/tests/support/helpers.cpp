#include "helpers.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iterator>
#include <stdexcept>
#include <unordered_set>

#include "urduidx/analysis.hpp"

namespace testsupport {

namespace {

// Minimal UTF-8 encoder of its own, so the oracle shares no code with the
// library under test.
std::string cp_to_utf8(std::uint32_t cp) {
    std::string out;
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
    return out;
}

// The 40 Urdu letters, as codepoints.
constexpr std::uint32_t kAlphabet[] = {
    0x0627, 0x0622, 0x0628, 0x067E, 0x062A, 0x0679, 0x062B, 0x062C,
    0x0686, 0x062D, 0x062E, 0x062F, 0x0688, 0x0630, 0x0631, 0x0691,
    0x0632, 0x0698, 0x0633, 0x0634, 0x0635, 0x0636, 0x0637, 0x0638,
    0x0639, 0x063A, 0x0641, 0x0642, 0x06A9, 0x06AF, 0x0644, 0x0645,
    0x0646, 0x06BA, 0x0648, 0x06C1, 0x06BE, 0x0621, 0x06CC, 0x06D2,
};

// Codepoints normalization folds away and removes, for decoration.
constexpr std::uint32_t kFoldSources[] = {0x064A, 0x0643, 0x0629};
constexpr std::uint32_t kStripChars[] = {0x002E, 0x060C, 0x061F, 0x06D4,
                                         0x064E, 0x0650, 0x0651};

std::string strip_comment_and_blanks(std::string line) {
    if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
    }
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t')) {
        line.pop_back();
    }
    std::size_t begin = 0;
    while (begin < line.size() && (line[begin] == ' ' || line[begin] == '\t')) {
        ++begin;
    }
    return line.substr(begin);
}

std::uint32_t hex_to_cp(const std::string& text) {
    return static_cast<std::uint32_t>(std::stoul(text, nullptr, 16));
}

}  // namespace

TempDir::TempDir() {
    static std::atomic<unsigned> counter{0};
    const auto base = std::filesystem::temp_directory_path();
    path_ = base / ("urduidx_test_" + std::to_string(::getpid()) + "_" +
                    std::to_string(counter++));
    std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

std::string random_word(std::mt19937& rng, int min_len, int max_len) {
    std::uniform_int_distribution<int> len_dist(min_len, max_len);
    std::uniform_int_distribution<std::size_t> letter_dist(
        0, std::size(kAlphabet) - 1);
    std::string word;
    const int len = len_dist(rng);
    for (int i = 0; i < len; ++i) {
        word += cp_to_utf8(kAlphabet[letter_dist(rng)]);
    }
    return word;
}

std::string random_token(std::mt19937& rng) {
    std::string token = random_word(rng);
    std::uniform_int_distribution<int> percent(0, 99);
    if (percent(rng) < 10) {  // fold-source letter appended mid-token
        std::uniform_int_distribution<std::size_t> pick(
            0, std::size(kFoldSources) - 1);
        token += cp_to_utf8(kFoldSources[pick(rng)]);
        token += cp_to_utf8(kAlphabet[0]);
    }
    if (percent(rng) < 20) {  // trailing punctuation / diacritic
        std::uniform_int_distribution<std::size_t> pick(
            0, std::size(kStripChars) - 1);
        token += cp_to_utf8(kStripChars[pick(rng)]);
    }
    return token;
}

std::vector<std::string> random_bodies(std::mt19937& rng, int max_docs,
                                       int max_tokens) {
    std::uniform_int_distribution<int> docs_dist(1, max_docs);
    std::uniform_int_distribution<int> tokens_dist(1, max_tokens);
    std::vector<std::string> bodies;
    const int n_docs = docs_dist(rng);
    for (int d = 0; d < n_docs; ++d) {
        std::string body;
        const int n_tokens = tokens_dist(rng);
        for (int t = 0; t < n_tokens; ++t) {
            if (t > 0) body += ' ';
            body += random_token(rng);
        }
        bodies.push_back(std::move(body));
    }
    return bodies;
}

urduidx::Corpus make_corpus(const std::vector<std::string>& bodies) {
    urduidx::Corpus corpus;
    for (std::size_t i = 0; i < bodies.size(); ++i) {
        urduidx::Document doc;
        doc.doc_id = static_cast<urduidx::DocId>(i);
        doc.source_name = "doc_" + std::to_string(i);
        doc.body = bodies[i];
        corpus.manifest.push_back(doc.source_name);
        corpus.documents.push_back(std::move(doc));
    }
    return corpus;
}

urduidx::Corpus synthetic_vocab_corpus(std::mt19937& rng, std::size_t n_terms,
                                       const std::vector<std::string>& probes,
                                       std::size_t probe_at,
                                       std::size_t terms_per_doc) {
    const urduidx::StopList stops = urduidx::StopList::defaults();
    std::unordered_set<std::string> seen(probes.begin(), probes.end());
    std::vector<std::string> vocabulary;
    vocabulary.reserve(n_terms + probes.size());
    while (vocabulary.size() < n_terms) {
        std::string word = random_word(rng, 3, 8);
        if (stops.contains(word)) continue;
        if (seen.insert(word).second) {
            vocabulary.push_back(std::move(word));
        }
    }
    for (std::size_t i = 0; i < probes.size(); ++i) {
        const std::size_t at =
            std::min(probe_at + i * 300, vocabulary.size());
        vocabulary.insert(vocabulary.begin() + static_cast<std::ptrdiff_t>(at),
                          probes[i]);
    }

    std::vector<std::string> bodies;
    std::string body;
    std::size_t in_doc = 0;
    for (const std::string& term : vocabulary) {
        if (in_doc > 0) body += ' ';
        body += term;
        if (++in_doc == terms_per_doc) {
            bodies.push_back(std::move(body));
            body.clear();
            in_doc = 0;
        }
    }
    if (!body.empty()) {
        bodies.push_back(std::move(body));
    }
    return make_corpus(bodies);
}

OracleTables load_oracle_tables(const std::filesystem::path& data_dir) {
    OracleTables tables;

    std::ifstream fold(data_dir / "fold_table.txt");
    if (!fold) throw std::runtime_error("missing fold_table.txt");
    for (std::string line; std::getline(fold, line);) {
        line = strip_comment_and_blanks(line);
        if (line.empty()) continue;
        const auto space = line.find(' ');
        tables.folds.emplace_back(cp_to_utf8(hex_to_cp(line.substr(0, space))),
                                  cp_to_utf8(hex_to_cp(line.substr(space + 1))));
    }

    std::ifstream strip(data_dir / "strip_set.txt");
    if (!strip) throw std::runtime_error("missing strip_set.txt");
    for (std::string line; std::getline(strip, line);) {
        line = strip_comment_and_blanks(line);
        if (line.empty()) continue;
        tables.strips.push_back(cp_to_utf8(hex_to_cp(line)));
    }

    std::ifstream stops(data_dir / "stopwords.txt");
    if (!stops) throw std::runtime_error("missing stopwords.txt");
    for (std::string line; std::getline(stops, line);) {
        line = strip_comment_and_blanks(line);
        if (line.empty()) continue;
        tables.stops.insert(oracle_normalize(line, tables));
    }

    return tables;
}

std::string oracle_normalize(std::string token, const OracleTables& tables) {
    for (const auto& [from, to] : tables.folds) {
        std::size_t at = 0;
        while ((at = token.find(from, at)) != std::string::npos) {
            token.replace(at, from.size(), to);
            at += to.size();
        }
    }
    for (const std::string& gone : tables.strips) {
        std::size_t at = 0;
        while ((at = token.find(gone, at)) != std::string::npos) {
            token.erase(at, gone.size());
        }
    }
    return token;
}

std::set<Triple> oracle_scan(const std::vector<std::string>& bodies,
                             const OracleTables& tables, bool remove_stops) {
    std::set<Triple> triples;
    for (std::size_t d = 0; d < bodies.size(); ++d) {
        const std::string& body = bodies[d];
        std::uint32_t position = 0;
        std::size_t i = 0;
        while (i < body.size()) {
            while (i < body.size() && (body[i] == ' ' || body[i] == '\t' ||
                                       body[i] == '\n' || body[i] == '\r')) {
                ++i;
            }
            std::size_t start = i;
            while (i < body.size() && body[i] != ' ' && body[i] != '\t' &&
                   body[i] != '\n' && body[i] != '\r') {
                ++i;
            }
            if (i == start) continue;
            std::string term =
                oracle_normalize(body.substr(start, i - start), tables);
            const std::uint32_t pos = position++;
            if (term.empty()) continue;
            if (remove_stops && tables.stops.count(term)) continue;
            triples.insert(Triple{std::move(term),
                                  static_cast<std::uint32_t>(d), pos});
        }
    }
    return triples;
}

}  // namespace testsupport
