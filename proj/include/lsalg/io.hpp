#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lsalg/algebra.hpp"
#include "lsalg/morphism.hpp"
#include "lsalg/words.hpp"

namespace lsalg {

// Algebra text format, one directive per line, '#' starts a comment:
//
//   states: <n>
//   base: <index>
//   alphabet: <sym> <sym> ...
//   trans <sym>: <i0> <i1> ... <i(n-1)>
//
// `states` must come first; the rest may appear in any order.  One trans
// line per alphabet symbol is required, duplicates of any directive are
// errors.  A `classes: <id0> ... <id(n-1)>` line may be appended to carry
// a partition along with the algebra.

struct ParsedFile {
  Algebra algebra;
  std::optional<Partition> partition;
};

ParsedFile parse_algebra_file(std::string_view text);
Algebra parse_algebra(std::string_view text);

/// Canonical text form; parsing it back yields an equal algebra.
std::string format_algebra(const Algebra& alg);

/// A standalone `classes:` line (comments and blank lines allowed).
Partition parse_partition(std::string_view text, int n);

std::string format_partition(const Partition& part);

// Boundary-set files: first non-comment line must be `-` (the empty
// word), then one word per line as whitespace-separated symbols.  The
// alphabet is the set of symbols used unless a wider one is supplied.
BoundarySet parse_boundary_set(std::string_view text,
                               std::vector<std::string> alphabet = {});

/// One-word syntax used by the CLI: whitespace-separated symbols,
/// a single `-` for the empty word.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

/// Semiautomaton digraph in DOT: one labeled edge per (symbol, state),
/// the base state drawn with a double border.  Optional per-state labels
/// (e.g. the words of a boundary algebra) replace the index labels.
std::string export_dot(const Algebra& alg,
                       const std::vector<std::string>& labels = {});

}  // namespace lsalg
