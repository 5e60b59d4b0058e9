#pragma once

#include <stdexcept>
#include <string>

namespace hla {

/// Domain error: dimension mismatches, singular matrices, invalid inputs.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text; `where` carries a path or position hint.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, const std::string& where = {})
        : Error(where.empty() ? what : where + ": " + what) {}
};

}  // namespace hla
