#pragma once

#include "cubinv/polynomial.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cubinv {

/// Syntax error at a 0-based character offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class UnknownVariable : public ParseError {
public:
    UnknownVariable(const std::string& name, std::size_t position)
        : ParseError("unknown variable '" + name + "'", position), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

/// Grammar:
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' INTEGER)?
///   primary := INTEGER ('/' INTEGER)? | IDENT | '(' expr ')'
/// A '/' is only valid between two integer literals.
Polynomial parse(std::string_view text, const VarTablePtr& table);

}  // namespace cubinv
