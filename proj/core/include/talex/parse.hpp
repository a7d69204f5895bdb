// The text boundary: polynomial expressions, group words, presentation and
// representation files, and canonical rendering.
//
// Polynomial grammar (LL(1)):
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := primary ['^' signed-integer]
//   primary := integer | variable | '(' expr ')'
// with variables drawn from {t, z, a}. A negative power is accepted exactly
// when the base is a unit of the Laurent ring.
//
// Word syntax: whitespace-separated letters `name` or `name^<int>`, names
// declared by the enclosing presentation.
//
// Presentation files, one directive per line ('#' starts a comment):
//   group <name>
//   gens <name> ...
//   rel <word>              (repeatable)
//   abel <name>=<int> ...
//
// Representation files:
//   rep <name>
//   dim <n>
//   vars <variable> ...
//   mat <gen> = [[expr, ...], ...]   (may continue across lines)

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "talex/invariant.hpp"

namespace talex {

struct parse_error : error {
    parse_error(const std::string& message, int line, int col)
        : error(message + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line(line),
          col(col) {}
    int line;
    int col;
};

/// Parses a polynomial expression; the variable set is inferred from the
/// variables that occur.
LaurentPoly parse_poly(std::string_view text);
/// Parses against a fixed variable set; using a variable outside it is a
/// positioned error.
LaurentPoly parse_poly(std::string_view text, VarSet vars);

/// Parses a word over the named generators. `line` seeds the position
/// reported in errors when the word is embedded in a larger file.
Word parse_word(std::string_view text, std::span<const std::string> generator_names, int line = 1);

Presentation parse_presentation(std::string_view text, std::string_view source_label = "<presentation>");
Presentation load_presentation(const std::filesystem::path& path);

MatrixRep parse_rep(std::string_view text, const Presentation& p, std::string_view source_label = "<rep>");
MatrixRep load_rep(const std::filesystem::path& path, const Presentation& p);

std::string render(const LaurentPoly& p);
/// Single-line row-list form, e.g. "[[1 - z, 0], [t*z, 1]]".
std::string render(const PolyMatrix& m);
/// One row per line: "[1 - z, 0, z^2]".
std::string render_rows(const PolyMatrix& m);

std::string render_word(const Word& w, std::span<const std::string> generator_names);

}  // namespace talex
