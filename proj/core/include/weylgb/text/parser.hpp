#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "weylgb/weyl/weyl_element.hpp"

namespace weylgb {

struct ParseOptions {
  /// Number of variables; inferred from the largest x/y/d index when unset.
  std::optional<std::size_t> nvars;
  /// Homogenized algebra; inferred from the presence of h when unset.
  std::optional<bool> homogenized;
  /// Coordinate letter, "x" or "y"; inferred when unset.
  std::optional<std::string> coord;
};

/// Parses the operator grammar
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' integer)?
///   atom   := number | symbol | '(' expr ')'
/// with symbols x<i>, y<i>, d<i>, h, a, b, c<i> and numbers p or p/q.
/// Products are taken left to right in the Weyl algebra; juxtaposition is
/// not a product. Throws SyntaxError and UnknownSymbol with character offsets.
WeylElement parse_operator(const std::string& text, const ParseOptions& options = {});

/// Parses into an existing context.
WeylElement parse_operator(const std::string& text, const WeylContextPtr& ctx);

/// Text accepted by parse_operator.
inline std::string format_operator(const WeylElement& p) { return p.str(); }

}  // namespace weylgb
