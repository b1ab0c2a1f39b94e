#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lsalg {

using State = int;
using Sym = int;

/// Subset of the state range [0, n) with bitset semantics.
class StateSet {
 public:
  explicit StateSet(int universe);
  static StateSet full(int universe);

  int universe() const { return static_cast<int>(member_.size()); }
  int size() const { return count_; }
  bool contains(State x) const { return member_[static_cast<std::size_t>(x)]; }
  /// Returns true if x was newly added.
  bool insert(State x);
  bool is_full() const { return count_ == universe(); }
  /// Members in ascending order.
  std::vector<State> states() const;

  bool operator==(const StateSet&) const = default;

 private:
  std::vector<bool> member_;
  int count_ = 0;
};

/// A finite pointed set with one total self-map per alphabet symbol:
/// the triple (X, f, x0) with X = {0, ..., n-1}.  Equivalently a
/// semiautomaton with a designated initial state.  Immutable after
/// construction; the constructor validates every invariant.
class Algebra {
 public:
  Algebra(int n, State base, std::vector<std::string> alphabet,
          std::vector<std::vector<State>> transitions);

  int size() const { return n_; }
  State base() const { return base_; }
  int symbol_count() const { return static_cast<int>(alphabet_.size()); }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::string& symbol_name(Sym s) const { return alphabet_[static_cast<std::size_t>(s)]; }
  std::optional<Sym> symbol(std::string_view name) const;

  /// f_s(x).
  State step(Sym s, State x) const {
    return trans_[static_cast<std::size_t>(s)][static_cast<std::size_t>(x)];
  }
  const std::vector<State>& transition(Sym s) const {
    return trans_[static_cast<std::size_t>(s)];
  }
  const std::vector<std::vector<State>>& transitions() const { return trans_; }

  bool operator==(const Algebra&) const = default;

 private:
  int n_;
  State base_;
  std::vector<std::string> alphabet_;
  std::vector<std::vector<State>> trans_;
};

// Witnesses carried by reports.  Each one replays to a genuine violation
// of the flag it accompanies.
struct CommuteWitness {
  Sym s, t;
  State x;  // f_s(f_t(x)) != f_t(f_s(x))
};
struct InjectionWitness {
  Sym s;
  State x1, x2;  // x1 < x2, f_s(x1) == f_s(x2)
};
struct SurjectionWitness {
  Sym s;
  State missing;  // missing is not in the image of f_s
};
struct OverlapWitness {
  Sym s, t;
  State x1, x2;  // s < t, f_s(x1) == f_t(x2)
};
struct BaseHitWitness {
  Sym s;
  State x;  // f_s(x) == base
};
using UnambiguityWitness = std::variant<InjectionWitness, OverlapWitness, BaseHitWitness>;

struct SymbolFlags {
  bool injective = false;
  bool surjective = false;
  bool bijective = false;
};

/// Pointwise properties of the family {f_s}.  Witness policy: the first
/// violation in lexicographic scan order, so reports are reproducible.
struct FamilyReport {
  bool commutative = false;
  bool unambiguous = false;
  std::vector<SymbolFlags> symbols;
  std::optional<CommuteWitness> commute_witness;
  std::vector<std::optional<InjectionWitness>> injection_witnesses;
  std::vector<std::optional<SurjectionWitness>> surjection_witnesses;
  std::optional<UnambiguityWitness> unambiguity_witness;
};

/// Least f-invariant superset of `seeds` (worklist reachability).
StateSet invariant_closure(const Algebra& alg, const StateSet& seeds);

/// True iff every state is reachable from the base point.
bool is_minimal(const Algebra& alg);

struct CoreResult {
  Algebra algebra;
  /// old-state -> new-state map; -1 for states dropped from the core.
  std::vector<int> index_map;
};

/// Restriction of `alg` to the states reachable from the base point,
/// reindexed densely in ascending old-index order.  Always minimal.
CoreResult minimal_core(const Algebra& alg);

FamilyReport family_report(const Algebra& alg);

}  // namespace lsalg
