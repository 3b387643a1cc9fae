#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qsqc/gf2.hpp"

namespace qsqc {

/// Parse error carrying a 1-based line and column.
class ParseError : public Error {
public:
    ParseError(int line, int col, const std::string& what)
        : Error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + what),
          line(line),
          col(col) {}
    int line, col;
};

class SyntaxError : public ParseError {
public:
    using ParseError::ParseError;
};

class InconsistentLengthError : public ParseError {
public:
    using ParseError::ParseError;
};

/// One "<n bits>|<n bits>" data line -> one vector. '#'-prefixed comment
/// lines and blank lines are ignored; every data line must share the same n.
std::vector<SympVector> parse_check_matrix(std::string_view text);

/// Single "bits|bits" token (no comments), e.g. from a command line.
SympVector parse_vector(std::string_view token);

std::string format_check_matrix(std::span<const SympVector> rows);

std::vector<SympVector> load_check_matrix(const std::string& path);
void save_check_matrix(const std::string& path, std::span<const SympVector> rows);

}  // namespace qsqc
