#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsalg/algebra.hpp"

namespace lsalg {

/// A finite symbol sequence; the empty word is the monoid unit.
using Word = std::vector<std::string>;

Word concat(const Word& w1, const Word& w2);
Word reversed(const Word& w);

/// Evaluate a word in an algebra as the unique structure map from words:
///
///   fold(empty)      = base
///   fold(s . w)      = f_s(fold(w))
///
/// Symbols are applied RIGHT TO LEFT: the last symbol of the word acts on
/// the base point first.  This matches prepend semantics (f_s prepends s),
/// and getting it backwards is the classic orientation bug.
/// Throws UnknownSymbol for symbols outside the algebra's alphabet.
State fold(const Word& w, const Algebra& alg);

/// A finite word set A destined for the boundary construction.  The
/// construction needs an explicit alphabet: the frontier of A contains
/// prepends by every symbol, including symbols no word of A uses.
struct BoundarySet {
  std::vector<Word> words;  // A, in input order
  std::vector<std::string> alphabet;
};

struct BoundaryViolation {
  enum class Kind {
    MissingEmpty,   // the empty word is not in A
    TailMissing,    // a nonempty word's tail is outside A
    ForeignSymbol,  // a word uses a symbol outside the alphabet
    Duplicate,      // a word appears twice
  } kind;
  Word word;
};

struct BoundaryCheck {
  bool ok = false;
  std::vector<BoundaryViolation> violations;
};

/// A is usable iff it contains the empty word and is closed under tail
/// removal (drop the first symbol).  Tail closure is exactly
/// f-invariance of the complement under prepend maps.
BoundaryCheck validate_boundary_set(const BoundarySet& A);

/// The frontier: words s.w with w in A and s.w not in A, in
/// length-then-lexicographic order (symbols compared by alphabet index).
std::vector<Word> boundary_frontier(const BoundarySet& A);

/// The algebra on A united with its frontier: prepend maps act normally
/// on A and freeze on the frontier.  States are A in input order
/// followed by the sorted frontier; the result is always minimal.
struct BoundaryAlgebra {
  Algebra algebra;
  std::vector<Word> labels;    // per state
  std::vector<bool> frontier;  // per state
  State state_of(const Word& w) const;
};

BoundaryAlgebra boundary_algebra(const BoundarySet& A);

/// Theorem route for regularity of the boundary algebra: true iff A is
/// also closed under last-symbol removal, i.e. the complement of A is
/// invariant under append maps.  Must always agree with running the
/// synthesis decision procedure on boundary_algebra(A).
bool boundary_regular_by_theorem(const BoundarySet& A);

struct ProjectedState {
  State state;
  Word label;
  bool frontier;
};

/// Image of an arbitrary word under the unique map onto the boundary
/// algebra (wordwise fold).  Fixes A and the frontier; everything
/// outside A lands on the frontier.
ProjectedState project(const Word& w, const BoundaryAlgebra& ba);
ProjectedState project(const Word& w, const BoundarySet& A);

}  // namespace lsalg
