#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace urduidx {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Corpus directory is missing or contains no readable files.
class CorpusEmptyError : public Error {
public:
    using Error::Error;
};

/// Input bytes are not valid UTF-8. Carries the offending source name
/// (empty when decoding raw memory) and the byte offset of the first
/// ill-formed sequence.
class EncodingError : public Error {
public:
    EncodingError(std::string source_name, std::size_t byte_offset)
        : Error(format_message(source_name, byte_offset)),
          source_name_(std::move(source_name)),
          byte_offset_(byte_offset) {}

    const std::string& source_name() const { return source_name_; }
    std::size_t byte_offset() const { return byte_offset_; }

private:
    static std::string format_message(const std::string& source, std::size_t offset) {
        std::string msg = "invalid UTF-8 at byte offset " + std::to_string(offset);
        if (!source.empty()) {
            msg += " in " + source;
        }
        return msg;
    }

    std::string source_name_;
    std::size_t byte_offset_;
};

/// A term-level operation was handed an empty word.
class EmptyTermError : public Error {
public:
    EmptyTermError() : Error("operation requires a non-empty term") {}
    using Error::Error;
};

/// Query analysis removed every term (e.g. the query was all stop words).
class EmptyQueryError : public Error {
public:
    EmptyQueryError()
        : Error("query has no searchable terms after analysis") {}
    using Error::Error;
};

/// An index or configuration file does not parse. Carries the 1-based
/// line number of the offending line.
class FormatError : public Error {
public:
    FormatError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// An index file parsed but violates a structural invariant
/// (e.g. claims ordered=1 while its terms are out of order).
class CorruptIndexError : public Error {
public:
    using Error::Error;
};

/// Filesystem-level read/write failure.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace urduidx
