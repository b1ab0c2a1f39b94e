#include "lsalg/algebra.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace lsalg {

StateSet::StateSet(int universe) {
  if (universe < 0) throw std::invalid_argument("negative universe size");
  member_.assign(static_cast<std::size_t>(universe), false);
}

StateSet StateSet::full(int universe) {
  StateSet s(universe);
  for (State x = 0; x < universe; ++x) s.insert(x);
  return s;
}

bool StateSet::insert(State x) {
  if (x < 0 || x >= universe()) throw std::out_of_range("state out of range");
  if (member_[static_cast<std::size_t>(x)]) return false;
  member_[static_cast<std::size_t>(x)] = true;
  ++count_;
  return true;
}

std::vector<State> StateSet::states() const {
  std::vector<State> out;
  out.reserve(static_cast<std::size_t>(count_));
  for (State x = 0; x < universe(); ++x)
    if (member_[static_cast<std::size_t>(x)]) out.push_back(x);
  return out;
}

Algebra::Algebra(int n, State base, std::vector<std::string> alphabet,
                 std::vector<std::vector<State>> transitions)
    : n_(n), base_(base), alphabet_(std::move(alphabet)), trans_(std::move(transitions)) {
  if (n_ < 1) throw std::invalid_argument("state count must be at least 1");
  if (base_ < 0 || base_ >= n_) throw std::invalid_argument("base point out of range");
  if (alphabet_.empty()) throw std::invalid_argument("alphabet must be non-empty");
  std::unordered_set<std::string> seen;
  for (const auto& sym : alphabet_) {
    if (sym.empty()) throw std::invalid_argument("empty symbol name");
    if (!seen.insert(sym).second)
      throw std::invalid_argument("duplicate alphabet symbol '" + sym + "'");
  }
  if (trans_.size() != alphabet_.size())
    throw std::invalid_argument("expected one transition table per symbol");
  for (const auto& row : trans_) {
    if (static_cast<int>(row.size()) != n_)
      throw std::invalid_argument("transition table length must equal the state count");
    for (State x : row)
      if (x < 0 || x >= n_)
        throw std::invalid_argument("transition target out of range");
  }
}

std::optional<Sym> Algebra::symbol(std::string_view name) const {
  for (Sym s = 0; s < symbol_count(); ++s)
    if (alphabet_[static_cast<std::size_t>(s)] == name) return s;
  return std::nullopt;
}

StateSet invariant_closure(const Algebra& alg, const StateSet& seeds) {
  if (seeds.universe() != alg.size())
    throw std::invalid_argument("seed set universe does not match the algebra");
  StateSet closure = seeds;
  std::deque<State> work;
  for (State x : seeds.states()) work.push_back(x);
  while (!work.empty()) {
    State x = work.front();
    work.pop_front();
    for (Sym s = 0; s < alg.symbol_count(); ++s) {
      State y = alg.step(s, x);
      if (closure.insert(y)) work.push_back(y);
    }
  }
  return closure;
}

bool is_minimal(const Algebra& alg) {
  StateSet seed(alg.size());
  seed.insert(alg.base());
  return invariant_closure(alg, seed).is_full();
}

CoreResult minimal_core(const Algebra& alg) {
  StateSet seed(alg.size());
  seed.insert(alg.base());
  StateSet reachable = invariant_closure(alg, seed);

  // Dense reindexing in ascending old-index order, so a minimal algebra
  // maps to itself with the identity reindex.
  std::vector<int> index_map(static_cast<std::size_t>(alg.size()), -1);
  int next = 0;
  for (State x = 0; x < alg.size(); ++x)
    if (reachable.contains(x)) index_map[static_cast<std::size_t>(x)] = next++;

  std::vector<std::vector<State>> tables(
      static_cast<std::size_t>(alg.symbol_count()),
      std::vector<State>(static_cast<std::size_t>(next)));
  for (Sym s = 0; s < alg.symbol_count(); ++s)
    for (State x = 0; x < alg.size(); ++x)
      if (index_map[static_cast<std::size_t>(x)] >= 0)
        tables[static_cast<std::size_t>(s)]
              [static_cast<std::size_t>(index_map[static_cast<std::size_t>(x)])] =
            index_map[static_cast<std::size_t>(alg.step(s, x))];

  Algebra core(next, index_map[static_cast<std::size_t>(alg.base())],
               alg.alphabet(), std::move(tables));
  return CoreResult{std::move(core), std::move(index_map)};
}

FamilyReport family_report(const Algebra& alg) {
  const int n = alg.size();
  const int k = alg.symbol_count();
  FamilyReport report;
  report.symbols.resize(static_cast<std::size_t>(k));
  report.injection_witnesses.resize(static_cast<std::size_t>(k));
  report.surjection_witnesses.resize(static_cast<std::size_t>(k));

  // Commutativity: first violation in (s, t, x) scan order.
  report.commutative = true;
  for (Sym s = 0; s < k && report.commutative; ++s)
    for (Sym t = s + 1; t < k && report.commutative; ++t)
      for (State x = 0; x < n; ++x)
        if (alg.step(s, alg.step(t, x)) != alg.step(t, alg.step(s, x))) {
          report.commutative = false;
          report.commute_witness = CommuteWitness{s, t, x};
          break;
        }

  for (Sym s = 0; s < k; ++s) {
    auto& flags = report.symbols[static_cast<std::size_t>(s)];

    flags.injective = true;
    std::vector<State> first_source(static_cast<std::size_t>(n), -1);
    for (State x = 0; x < n && flags.injective; ++x) {
      State y = alg.step(s, x);
      if (first_source[static_cast<std::size_t>(y)] >= 0) {
        flags.injective = false;
        report.injection_witnesses[static_cast<std::size_t>(s)] =
            InjectionWitness{s, first_source[static_cast<std::size_t>(y)], x};
      } else {
        first_source[static_cast<std::size_t>(y)] = x;
      }
    }

    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (State x = 0; x < n; ++x) hit[static_cast<std::size_t>(alg.step(s, x))] = true;
    flags.surjective = true;
    for (State y = 0; y < n; ++y)
      if (!hit[static_cast<std::size_t>(y)]) {
        flags.surjective = false;
        report.surjection_witnesses[static_cast<std::size_t>(s)] = SurjectionWitness{s, y};
        break;
      }

    flags.bijective = flags.injective && flags.surjective;
  }

  // Unambiguity: every symbol injective, images pairwise disjoint, and the
  // base point outside every image.  First failing check provides the witness.
  report.unambiguous = true;
  for (Sym s = 0; s < k && report.unambiguous; ++s)
    if (!report.symbols[static_cast<std::size_t>(s)].injective) {
      report.unambiguous = false;
      report.unambiguity_witness =
          *report.injection_witnesses[static_cast<std::size_t>(s)];
    }
  for (Sym s = 0; s < k && report.unambiguous; ++s)
    for (State x = 0; x < n && report.unambiguous; ++x)
      if (alg.step(s, x) == alg.base()) {
        report.unambiguous = false;
        report.unambiguity_witness = BaseHitWitness{s, x};
      }
  for (Sym s = 0; s < k && report.unambiguous; ++s)
    for (Sym t = s + 1; t < k && report.unambiguous; ++t) {
      std::vector<State> source(static_cast<std::size_t>(n), -1);
      for (State x = 0; x < n; ++x) {
        State y = alg.step(s, x);
        if (source[static_cast<std::size_t>(y)] < 0) source[static_cast<std::size_t>(y)] = x;
      }
      for (State x = 0; x < n; ++x) {
        State y = alg.step(t, x);
        if (source[static_cast<std::size_t>(y)] >= 0) {
          report.unambiguous = false;
          report.unambiguity_witness =
              OverlapWitness{s, t, source[static_cast<std::size_t>(y)], x};
          break;
        }
      }
    }

  return report;
}

}  // namespace lsalg
