#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "urduidx/errors.hpp"
#include "urduidx/ingest.hpp"
#include "words.hpp"

using namespace urduidx;
using testsupport::TempDir;
using testsupport::write_file;

TEST_CASE("load_corpus loads a single document verbatim") {
    TempDir dir;
    write_file(dir.path() / "a.txt", words::kWohLahoreAaya);

    const Corpus corpus = load_corpus(dir.path());
    REQUIRE(corpus.documents.size() == 1);
    CHECK(corpus.documents[0].doc_id == 0);
    CHECK(corpus.documents[0].source_name == "a.txt");
    CHECK(corpus.documents[0].body == words::kWohLahoreAaya);
    REQUIRE(corpus.manifest.size() == 1);
    CHECK(corpus.manifest[0] == "a.txt");
}

TEST_CASE("load_corpus throws CorpusEmptyError on empty or missing dirs") {
    TempDir dir;
    CHECK_THROWS_AS((void)load_corpus(dir.path()), CorpusEmptyError);
    CHECK_THROWS_AS((void)load_corpus(dir.path() / "no_such_subdir"),
                    CorpusEmptyError);
}

TEST_CASE("doc ids follow filename sort order, not creation order") {
    TempDir dir;
    write_file(dir.path() / "b.txt", "BBB");
    write_file(dir.path() / "a.txt", "AAA");

    const Corpus corpus = load_corpus(dir.path());
    REQUIRE(corpus.documents.size() == 2);
    CHECK(corpus.documents[0].source_name == "a.txt");
    CHECK(corpus.documents[0].body == "AAA");
    CHECK(corpus.documents[0].doc_id == 0);
    CHECK(corpus.documents[1].source_name == "b.txt");
    CHECK(corpus.documents[1].body == "BBB");
    CHECK(corpus.documents[1].doc_id == 1);
}

TEST_CASE("a leading BOM is stripped, and only a leading one") {
    TempDir dir;
    write_file(dir.path() / "bom.txt", "\xEF\xBB\xBFtext");

    const Corpus corpus = load_corpus(dir.path());
    REQUIRE(corpus.documents.size() == 1);
    CHECK(corpus.documents[0].body == "text");

    // U+FEFF mid-body is content, not a BOM.
    TempDir dir2;
    write_file(dir2.path() / "mid.txt", "a\xEF\xBB\xBF");
    CHECK(load_corpus(dir2.path()).documents[0].body == "a\xEF\xBB\xBF");
}

TEST_CASE("undecodable file reports its source name and byte offset") {
    TempDir dir;
    write_file(dir.path() / "bad.txt", std::string("ok\xFFrest"));

    try {
        (void)load_corpus(dir.path());
        FAIL("expected EncodingError");
    } catch (const EncodingError& e) {
        CHECK(e.source_name() == "bad.txt");
        CHECK(e.byte_offset() == 2);
    }
}

TEST_CASE("loading the same directory twice yields equal corpora") {
    TempDir dir;
    write_file(dir.path() / "x.txt", "one two");
    write_file(dir.path() / "y.txt", "three");

    CHECK(load_corpus(dir.path()) == load_corpus(dir.path()));
}

TEST_CASE("the bundled fixture corpus loads with dense sorted ids") {
    const Corpus corpus = load_corpus(URDUIDX_FIXTURE_DIR);
    REQUIRE(corpus.documents.size() == 120);
    for (std::size_t i = 0; i < corpus.documents.size(); ++i) {
        CHECK(corpus.documents[i].doc_id == static_cast<DocId>(i));
        CHECK(corpus.manifest[i] == corpus.documents[i].source_name);
        if (i > 0) {
            CHECK(corpus.documents[i - 1].source_name <
                  corpus.documents[i].source_name);
        }
    }
    CHECK(corpus.documents[0].source_name == "doc_000.txt");
    // doc_000 is the three-token worked example.
    CHECK(corpus.documents[0].body == std::string(words::kWohLahoreAaya) + "\n");
}
