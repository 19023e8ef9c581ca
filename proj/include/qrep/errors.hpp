#pragma once

#include <stdexcept>
#include <string>

namespace qrep {

// Violated mathematical precondition: shape mismatch, wrong quiver,
// disconnected quiver where connectedness is required, and the like.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// A search-based routine (splitting, isomorphism testing) exhausted its
// budget without reaching a sound answer.  Never silently wrong.
class UndecidedError : public std::runtime_error {
public:
    explicit UndecidedError(const std::string& msg) : std::runtime_error(msg) {}
};

// Lexical or structural error in an input file, with 1-based position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t col, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", col " +
                             std::to_string(col) + ": " + msg),
          line(line),
          col(col) {}

    std::size_t line;
    std::size_t col;
};

}  // namespace qrep
