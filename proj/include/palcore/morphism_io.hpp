#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "palcore/words.hpp"

namespace palcore {

// Parsed morphism file: the rewrite rules plus an optional seed letter.
//
// The format is line oriented; '#' starts a comment, blank lines are ignored,
// tokens are whitespace separated:
//
//   alphabet: 0 1
//   rule: 0 -> 0 1
//   rule: 1 -> 0 0
//   seed: 0
//
// Letters may be multi-character. An empty right-hand side is an erasing rule.
struct MorphismSpec {
  Morphism morphism;
  std::optional<Symbol> seed;
};

// Diagnostics are prefixed "origin:line:" so CLI users can locate mistakes.
MorphismSpec parse_morphism_text(std::string_view text, std::string_view origin = "<input>");
MorphismSpec parse_morphism_file(const std::string& path);

// Inverse of the parser; output re-parses to an equal MorphismSpec.
std::string format_morphism(const Morphism& m, std::optional<Symbol> seed = std::nullopt);

}  // namespace palcore
