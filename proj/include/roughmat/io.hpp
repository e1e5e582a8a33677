#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "roughmat/covering.hpp"

namespace roughmat {

/// Syntactic failure while reading a matrix or covering file; line and
/// column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what_failed)
        : std::runtime_error("parse error at line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what_failed),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Matrix files: optional '#' comment lines, a header line "n m", then n rows
// of m space-separated 0/1 tokens. Canonical output has single spaces, a
// trailing newline and no comments.
BoolMatrix parse_matrix(std::istream& in);
std::string print_matrix(const BoolMatrix& m);

// Covering files: optional '#' comment lines, a universe line of element
// names, then one block per line as element names. Parsing is syntactic;
// covering validity is checked separately by validate_covering.
SetFamily parse_covering(std::istream& in);
std::string print_covering(const SetFamily& family);
std::string print_covering(const Covering& covering);

}  // namespace roughmat
