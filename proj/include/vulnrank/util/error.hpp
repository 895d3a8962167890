#pragma once

#include <stdexcept>
#include <string>

namespace vulnrank {

// Exit-code buckets used by the CLI: usage=1, input/parse=2, numeric=3.

struct LexError : std::runtime_error {
    int line, col;
    LexError(int line_, int col_, const std::string& what_)
        : std::runtime_error("lex error at " + std::to_string(line_) + ":" +
                             std::to_string(col_) + ": " + what_),
          line(line_), col(col_) {}
};

struct ParseError : std::runtime_error {
    int line, col;
    std::string expected;
    ParseError(int line_, int col_, const std::string& expected_)
        : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                             std::to_string(col_) + ": expected " + expected_),
          line(line_), col(col_), expected(expected_) {}
};

struct GraphError : std::runtime_error {
    explicit GraphError(const std::string& what_)
        : std::runtime_error("graph error: " + what_) {}
};

struct UnresolvedLocus : std::runtime_error {
    UnresolvedLocus(const std::string& file, int line)
        : std::runtime_error("warning locus " + file + ":" + std::to_string(line) +
                             " maps to no statement") {}
};

struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& what_)
        : std::runtime_error("shape mismatch: " + what_) {}
};

struct NonFiniteError : std::runtime_error {
    explicit NonFiniteError(const std::string& where)
        : std::runtime_error("non-finite value in " + where) {}
};

struct EmptyCorpus : std::runtime_error {
    EmptyCorpus() : std::runtime_error("embedding corpus is empty") {}
};

struct EmptyDataset : std::runtime_error {
    EmptyDataset() : std::runtime_error("training dataset is empty") {}
};

struct LengthMismatch : std::runtime_error {
    LengthMismatch(size_t a, size_t b)
        : std::runtime_error("length mismatch: " + std::to_string(a) + " vs " +
                             std::to_string(b)) {}
};

struct TooFewSamples : std::runtime_error {
    TooFewSamples(size_t n, size_t folds)
        : std::runtime_error("cannot split " + std::to_string(n) +
                             " samples into " + std::to_string(folds) + " folds") {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what_)
        : std::runtime_error("io error: " + what_) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what_)
        : std::runtime_error("config error: " + what_) {}
};

} // namespace vulnrank
