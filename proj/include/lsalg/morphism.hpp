#pragma once

#include <optional>
#include <vector>

#include "lsalg/algebra.hpp"
#include "lsalg/monoid.hpp"
#include "lsalg/op.hpp"
#include "lsalg/synthesis.hpp"

namespace lsalg {

/// A structure map between algebras over the same alphabet:
/// map[src.base] = dst.base and map[f_s(x)] = g_s(map[x]).
struct Morphism {
  std::vector<State> map;

  int size() const { return static_cast<int>(map.size()); }
  State operator()(State x) const { return map[static_cast<std::size_t>(x)]; }

  bool operator==(const Morphism&) const = default;
};

struct MorphismViolation {
  enum class Kind { Base, Square } kind;
  Sym s = -1;
  State x = -1;
};

struct MorphismCheck {
  bool ok = false;
  std::vector<MorphismViolation> violations;
};

struct MorphismSearch {
  std::optional<Morphism> morphism;
  struct Conflict {
    State state;      // state whose image was forced two ways
    State assigned;   // earlier assignment
    State required;   // conflicting requirement
    Sym via_symbol;   // edge that produced the conflict
    State via_state;
  };
  std::optional<Conflict> conflict;

  bool found() const { return morphism.has_value(); }
};

/// The unique morphism src -> dst when it exists (src must be minimal,
/// which is what makes it unique; NotMinimal otherwise).  Assignments
/// propagate by breadth-first search from the base point; the first
/// inconsistent edge is reported as the conflict.
MorphismSearch find_morphism(const Algebra& src, const Algebra& dst);

MorphismCheck verify_morphism(const Algebra& src, const Algebra& dst,
                              const Morphism& m);

/// True iff m is a bijective morphism.  The inverse map is then checked
/// to be a morphism dst -> src; that check cannot fail for a genuine
/// bijective morphism, so a failure throws CriterionMismatch.
bool is_isomorphism(const Algebra& src, const Algebra& dst, const Morphism& m);

/// An equivalence relation given as dense class ids 0..m-1 per state.
struct Partition {
  std::vector<int> classes;

  int size() const { return static_cast<int>(classes.size()); }
  int class_count() const;
  int class_of(State x) const { return classes[static_cast<std::size_t>(x)]; }
};

struct QuotientResult {
  std::optional<Algebra> algebra;
  std::optional<Morphism> projection;
  struct Witness {
    Sym s;
    State x1, x2;  // x1 ~ x2 but f_s(x1) !~ f_s(x2)
  };
  std::optional<Witness> witness;

  bool ok() const { return algebra.has_value(); }
};

/// Quotient by a compatible partition: classes become states, the base
/// class becomes the base point, and g_s([x]) = [f_s(x)].  When some
/// pair of equivalent states breaks compatibility the first witness in
/// (s, x1, x2) scan order is returned instead.
QuotientResult quotient(const Algebra& alg, const Partition& part);

/// For a regular algebra with reflection `refl` and a compatible
/// partition: decides regularity of the quotient by checking that the
/// partition also respects the reflected family.  The result is
/// cross-checked against synthesizing on the quotient algebra; a
/// disagreement would be a bug and throws CriterionMismatch.
bool quotient_regularity(const Algebra& alg, const Reflection& refl,
                         const Partition& part, std::size_t cap = kDefaultCap);

/// map(x * y) = map(x) <> map(y) for all pairs, and map(unit) = unit.
/// Holds for every morphism between regular algebras.
bool verify_monoid_homomorphism(const MonoidOp& src, const MonoidOp& dst,
                                const Morphism& m);

}  // namespace lsalg
