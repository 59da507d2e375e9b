#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "invforge/polynomial.hpp"

namespace invforge {

enum class Format { Text, Json };

// Grammar:
//   poly   := ['+'|'-'] term (('+'|'-') term)*  |  '0'
//   term   := [coeff ['*']] factor ('*' factor)*  |  coeff
//   factor := var ['^' uint]
//   coeff  := uint | uint '/' uint
// Variables are the slot names of ctx; 't' stands for x0. Rings with x0^-1
// accept '^-k' on x0. Whitespace is ignored. Throws ParseError.
Polynomial parse_poly(std::string_view text, const ContextPtr& ctx);

// {"ring":{"kind":...,"n":N},"terms":[{"c":"p/q","e":[...]}, ...]}. The ring
// must agree with ctx. Throws ParseError or ContextMismatch.
Polynomial parse_poly_json(std::string_view text, const ContextPtr& ctx);

// Writes term by term in descending canonical order.
void write_poly(std::ostream& out, const Polynomial& f, Format format = Format::Text);
std::string format_poly(const Polynomial& f, Format format = Format::Text);

}  // namespace invforge
