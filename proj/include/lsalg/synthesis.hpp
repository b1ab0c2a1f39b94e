#pragma once

#include <optional>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "lsalg/algebra.hpp"
#include "lsalg/monoid.hpp"
#include "lsalg/op.hpp"

namespace lsalg {

/// A family f' with f'_s(base) = f_s(base) and f'_s o f_t = f_t o f'_s
/// for all s, t.  On a minimal algebra there is at most one such family,
/// and one exists exactly when the compatible monoid operation does.
struct Reflection {
  std::vector<std::vector<State>> tables;  // per symbol, length n

  int symbol_count() const { return static_cast<int>(tables.size()); }
  int size() const { return tables.empty() ? 0 : static_cast<int>(tables.front().size()); }
  State apply(Sym s, State x) const {
    return tables[static_cast<std::size_t>(s)][static_cast<std::size_t>(x)];
  }
  SelfMap map(Sym s) const { return SelfMap{tables[static_cast<std::size_t>(s)]}; }

  bool operator==(const Reflection&) const = default;
};

enum class NotRegularReason { NotMinimal, PhiNotInjective };

struct RegularOutcome {
  MonoidOp op;
  Reflection reflection;
  TransformationMonoid monoid;
  EvalReport eval;
};

struct Obstruction {
  NotRegularReason reason;
  /// A state unreachable from the base point (NotMinimal).
  std::optional<State> unreached;
  /// Two distinct monoid elements with the same value at the base point
  /// (PhiNotInjective).
  std::optional<std::pair<SelfMap, SelfMap>> collision;
};

class SynthesisResult {
 public:
  static SynthesisResult regular(RegularOutcome outcome) {
    return SynthesisResult(std::move(outcome));
  }
  static SynthesisResult not_regular(Obstruction obstruction) {
    return SynthesisResult(std::move(obstruction));
  }

  bool is_regular() const { return std::holds_alternative<RegularOutcome>(v_); }
  const RegularOutcome& outcome() const { return std::get<RegularOutcome>(v_); }
  const Obstruction& obstruction() const { return std::get<Obstruction>(v_); }

 private:
  explicit SynthesisResult(RegularOutcome o) : v_(std::move(o)) {}
  explicit SynthesisResult(Obstruction o) : v_(std::move(o)) {}
  std::variant<RegularOutcome, Obstruction> v_;
};

/// Decide whether the compatible monoid operation exists and construct it.
///
/// The decision procedure: generate the transformation monoid of the
/// family, evaluate at the base point, and read the operation off the
/// Phi table when Phi is a bijection (x1 * x2 = u(x2) where u is the
/// unique element with u(base) = x1).  The reflection is derived from
/// the finished table.  Obstructions are returned, not thrown;
/// CapExceeded from monoid generation propagates.
SynthesisResult synthesize(const Algebra& alg, std::size_t cap = kDefaultCap);

/// f'_s(x) = x * f_s(base).  Requires a verified-compatible op
/// (IncompatibleOp otherwise); the result always verifies.
Reflection derive_reflection(const Algebra& alg, const MonoidOp& op);

struct ReflectionViolation {
  enum class Kind { Base, Commute } kind;
  Sym s = -1;
  Sym t = -1;
  State x = -1;
};

struct ReflectionCheck {
  bool ok = false;
  std::vector<ReflectionViolation> violations;
};

/// Checks f'_s(base) = f_s(base) and f'_s o f_t = f_t o f'_s pointwise;
/// lists every failure in lexicographic order.
ReflectionCheck verify_reflection(const Algebra& alg, const Reflection& refl);

/// The unique family of maps r_x with r_x(base) = x and r_x commuting
/// with every f_s, built by breadth-first search seeded with
/// r_base = id and extended along edges via r_{f_s(x)} = r_x o f'_s.
/// Requires a minimal algebra and a verified reflection; throws
/// InconsistentAllowable when the input was not a true reflection.
std::vector<SelfMap> allowable_maps(const Algebra& alg, const Reflection& refl);

/// Second construction route: table[x'][x] = r_x(x').  Agrees exactly
/// with synthesize() whenever both succeed.
MonoidOp synthesize_from_reflection(const Algebra& alg, const Reflection& refl);

struct OpViolation {
  enum class Kind { LeftUnit, RightUnit, Assoc, Translation } kind;
  State x = -1, y = -1, z = -1;
  Sym s = -1;
};

struct CompatibilityCheck {
  bool ok = false;
  std::vector<OpViolation> violations;
};

/// Full check of unit laws, associativity (all triples) and the
/// translation law f_s(x1) * x2 = f_s(x1 * x2).  All violations listed.
CompatibilityCheck verify_compatible(const Algebra& alg, const MonoidOp& op);

/// Structure flags of the synthesized monoid.  Every flag is computed
/// twice: from the family criteria (commutative family / injective f_s /
/// surjective f_s / injective f'_s) and directly from the operation
/// table.  A disagreement throws CriterionMismatch and is a bug by
/// construction.
struct MonoidClassification {
  bool commutative = false;
  bool left_cancellative = false;
  bool right_cancellative = false;
  bool group = false;
  /// Table-side witnesses for the false flags.
  std::optional<std::pair<State, State>> commutativity_witness;
  std::optional<std::tuple<State, State, State>> left_cancel_witness;
  std::optional<std::tuple<State, State, State>> right_cancel_witness;
  std::optional<State> group_witness;  // element without an inverse
};

MonoidClassification classify_monoid(const Algebra& alg, const MonoidOp& op,
                                     const Reflection& refl);

inline constexpr int kDefaultOracleBound = 4;

/// Exhaustive oracle: every operation table satisfying the unit laws
/// (unit row/column pinned), filtered by associativity and the
/// translation law.  Independent of the synthesis route; on a minimal
/// algebra it returns at most one table.  Throws BoundExceeded when
/// n exceeds `bound`.
std::vector<MonoidOp> brute_force_operation_search(
    const Algebra& alg, int bound = kDefaultOracleBound);

}  // namespace lsalg
