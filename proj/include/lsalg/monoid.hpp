#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lsalg/algebra.hpp"
#include "lsalg/op.hpp"
#include "lsalg/selfmap.hpp"

namespace lsalg {

inline constexpr std::size_t kDefaultCap = 1'000'000;

/// A composition-closed set of self-maps containing the identity,
/// deduplicated by image array.  Element order is the deterministic
/// BFS insertion order of generate_monoid (or the documented order of
/// the centraliser strategies), so indices are stable across runs.
class TransformationMonoid {
 public:
  TransformationMonoid(std::vector<SelfMap> elements,
                       std::vector<int> generator_indices, bool closed);

  const std::vector<SelfMap>& elements() const { return elements_; }
  const SelfMap& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  int size() const { return static_cast<int>(elements_.size()); }
  /// Number of states the maps act on.
  int degree() const { return elements_.front().size(); }
  const std::vector<int>& generator_indices() const { return generators_; }
  bool closed() const { return closed_; }

  std::optional<int> index_of(const SelfMap& m) const;
  bool contains(const SelfMap& m) const { return index_of(m).has_value(); }

 private:
  std::vector<SelfMap> elements_;
  std::vector<int> generators_;
  bool closed_;
  std::unordered_map<SelfMap, int, SelfMapHash> index_;
};

/// Least monoid containing the generators: breadth-first closure from the
/// identity, post-composing with generators in the given order.  Throws
/// CapExceeded when the closure would grow past `cap`.
TransformationMonoid generate_monoid(std::span<const SelfMap> generators,
                                     std::size_t cap = kDefaultCap);

/// The evaluation map Phi(u) = u(base) tabulated over a monoid.
/// Phi surjective is equivalent to base-minimality of the monoid's action.
struct EvalReport {
  std::vector<State> phi;  // per element
  bool surjective = false;
  bool injective = false;
  /// First pair of element indices with equal Phi value, in element order.
  std::optional<std::pair<int, int>> collision;
  /// state -> element index, present exactly when Phi is bijective.
  std::optional<std::vector<int>> preimage;
};

EvalReport evaluate_at_base(const TransformationMonoid& monoid, State base);

enum class CentraliserStrategy {
  /// Filter all n^n self-maps for commutation with every generator.
  /// Requires n^n <= cap.  Elements in lexicographic image order.
  Enumerate,
  /// When the generated monoid is the translation monoid of a known
  /// compatible operation, the centraliser is the translation monoid of
  /// the reflected operation.  Requires `op`; elements are the right
  /// translations y -> y * x in state order.
  ViaReflectionOp,
};

/// Centraliser (in the full self-map monoid) of the monoid generated by
/// `generators`.  Commuting with every generator suffices: the maps
/// commuting with a set form a monoid, so Z of the generators equals Z of
/// the generated monoid.
TransformationMonoid centraliser(std::span<const SelfMap> generators,
                                 CentraliserStrategy strategy,
                                 std::size_t cap = kDefaultCap,
                                 const MonoidOp* op = nullptr);

/// Five independently evaluated characterisations of when a compatible
/// monoid operation exists, for a minimal algebra.  They are provably
/// equivalent, so `consistent` failing would indicate a bug.
struct EquivalenceReport {
  bool operation_exists = false;             // (1) unique op with M = M_op
  bool phi_injective = false;                // (2) Phi_M injective
  bool centraliser_phi_surjective = false;   // (3) Phi_{Z_M} surjective
  bool mirrored_generators = false;          // (4) A' in Z_M with Phi(A') = Phi(A)
  bool phi_matching_bijection = false;       // (5) bijection M -> Z_M over Phi
  bool consistent = false;

  std::array<bool, 5> flags() const {
    return {operation_exists, phi_injective, centraliser_phi_surjective,
            mirrored_generators, phi_matching_bijection};
  }
};

/// Throws NotMinimal for non-minimal input and CapExceeded when the
/// centraliser enumeration does not fit the budget.
EquivalenceReport equivalence_report(const Algebra& alg,
                                     std::size_t cap = kDefaultCap);

}  // namespace lsalg
