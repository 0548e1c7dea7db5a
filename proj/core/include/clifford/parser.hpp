#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "clifford/mpoly.hpp"

namespace clifford {

/// Reports the byte offset of the offending token and the set of tokens
/// that would have been accepted there.
class ParseError : public std::runtime_error {
public:
    ParseError(size_t offset, const std::string& detail, std::vector<std::string> expected);

    size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    size_t offset_;
    std::vector<std::string> expected_;
};

/// Parses the polynomial expression grammar:
///
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | power
///   power  := atom ('^' nonneg-int)?
///   atom   := rational | var | '(' expr ')'
///   var    := 'x1' | 'x2' | 'x3' | 'x4'
///   rational := int ('/' posint)?
///
/// Whitespace-insensitive; implicit multiplication is rejected; '^' binds
/// tighter than unary minus. Throws ParseError on malformed input.
MPoly parse_poly(const std::string& text);

}  // namespace clifford
