#pragma once

#include <stdexcept>
#include <string>

namespace drsop {

/// Semantic problem with otherwise well-formed input (unknown id, totality
/// violation, out-of-range parameter).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Grammar-level problem in a textual document; carries the 1-based line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace drsop
