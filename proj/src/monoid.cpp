#include "lsalg/monoid.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "lsalg/errors.hpp"
#include "lsalg/synthesis.hpp"

namespace lsalg {

SelfMap SelfMap::identity(int n) {
  SelfMap m;
  m.image.resize(static_cast<std::size_t>(n));
  for (State x = 0; x < n; ++x) m.image[static_cast<std::size_t>(x)] = x;
  return m;
}

bool SelfMap::is_identity() const {
  for (State x = 0; x < size(); ++x)
    if (image[static_cast<std::size_t>(x)] != x) return false;
  return true;
}

SelfMap compose(const SelfMap& u, const SelfMap& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("cannot compose self-maps of different degree");
  SelfMap out;
  out.image.resize(v.image.size());
  for (State x = 0; x < v.size(); ++x)
    out.image[static_cast<std::size_t>(x)] = u(v(x));
  return out;
}

bool commutes(const SelfMap& u, const SelfMap& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("cannot compare self-maps of different degree");
  for (State x = 0; x < u.size(); ++x)
    if (u(v(x)) != v(u(x))) return false;
  return true;
}

bool is_injective(const SelfMap& u) {
  std::vector<bool> hit(u.image.size(), false);
  for (State y : u.image) {
    if (hit[static_cast<std::size_t>(y)]) return false;
    hit[static_cast<std::size_t>(y)] = true;
  }
  return true;
}

bool is_surjective(const SelfMap& u) {
  std::vector<bool> hit(u.image.size(), false);
  for (State y : u.image) hit[static_cast<std::size_t>(y)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

SelfMap generator_map(const Algebra& alg, Sym s) { return SelfMap{alg.transition(s)}; }

std::vector<SelfMap> generator_maps(const Algebra& alg) {
  std::vector<SelfMap> gens;
  gens.reserve(static_cast<std::size_t>(alg.symbol_count()));
  for (Sym s = 0; s < alg.symbol_count(); ++s) gens.push_back(generator_map(alg, s));
  return gens;
}

TransformationMonoid::TransformationMonoid(std::vector<SelfMap> elements,
                                           std::vector<int> generator_indices,
                                           bool closed)
    : elements_(std::move(elements)), generators_(std::move(generator_indices)), closed_(closed) {
  if (elements_.empty()) throw std::invalid_argument("monoid needs at least the identity");
  const int n = elements_.front().size();
  bool has_identity = false;
  for (int i = 0; i < size(); ++i) {
    const SelfMap& m = elements_[static_cast<std::size_t>(i)];
    if (m.size() != n) throw std::invalid_argument("mixed degrees in monoid elements");
    if (!index_.emplace(m, i).second)
      throw std::invalid_argument("duplicate monoid element");
    has_identity = has_identity || m.is_identity();
  }
  if (!has_identity) throw std::invalid_argument("monoid must contain the identity");
  for (int g : generators_)
    if (g < 0 || g >= size())
      throw std::invalid_argument("generator index out of range");
}

std::optional<int> TransformationMonoid::index_of(const SelfMap& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TransformationMonoid generate_monoid(std::span<const SelfMap> generators,
                                     std::size_t cap) {
  if (generators.empty())
    throw std::invalid_argument("generator list must be non-empty");
  if (cap < 1) throw std::invalid_argument("cap must be at least 1");
  const int n = generators.front().size();
  for (const SelfMap& g : generators)
    if (g.size() != n) throw std::invalid_argument("mixed generator degrees");

  // Breadth-first closure from the identity.  Element order is fixed by
  // the queue and the generator order, making indices reproducible.
  std::vector<SelfMap> elements;
  std::unordered_map<SelfMap, int, SelfMapHash> seen;
  std::deque<int> work;

  auto add = [&](SelfMap m) -> int {
    auto it = seen.find(m);
    if (it != seen.end()) return it->second;
    if (elements.size() >= cap) throw CapExceeded(cap);
    int idx = static_cast<int>(elements.size());
    elements.push_back(std::move(m));
    seen.emplace(elements.back(), idx);
    work.push_back(idx);
    return idx;
  };

  add(SelfMap::identity(n));
  std::vector<int> generator_indices;
  for (const SelfMap& g : generators) generator_indices.push_back(add(g));

  while (!work.empty()) {
    int i = work.front();
    work.pop_front();
    for (const SelfMap& g : generators) add(compose(elements[static_cast<std::size_t>(i)], g));
  }

  return TransformationMonoid(std::move(elements), std::move(generator_indices), true);
}

EvalReport evaluate_at_base(const TransformationMonoid& monoid, State base) {
  const int n = monoid.degree();
  if (base < 0 || base >= n) throw std::invalid_argument("base point out of range");

  EvalReport report;
  report.phi.reserve(static_cast<std::size_t>(monoid.size()));
  std::vector<int> first(static_cast<std::size_t>(n), -1);
  report.injective = true;
  for (int i = 0; i < monoid.size(); ++i) {
    State value = monoid.element(i)(base);
    report.phi.push_back(value);
    if (first[static_cast<std::size_t>(value)] < 0) {
      first[static_cast<std::size_t>(value)] = i;
    } else if (report.injective) {
      report.injective = false;
      report.collision = {first[static_cast<std::size_t>(value)], i};
    }
  }
  report.surjective =
      std::all_of(first.begin(), first.end(), [](int i) { return i >= 0; });
  if (report.injective && report.surjective) report.preimage = first;
  return report;
}

namespace {

// Iterate all n^n self-maps in lexicographic image order.
bool next_map(SelfMap& m, int n) {
  for (int i = m.size() - 1; i >= 0; --i) {
    auto idx = static_cast<std::size_t>(i);
    if (m.image[idx] + 1 < n) {
      ++m.image[idx];
      std::fill(m.image.begin() + i + 1, m.image.end(), 0);
      return true;
    }
  }
  return false;
}

}  // namespace

TransformationMonoid centraliser(std::span<const SelfMap> generators,
                                 CentraliserStrategy strategy, std::size_t cap,
                                 const MonoidOp* op) {
  if (generators.empty())
    throw std::invalid_argument("generator list must be non-empty");
  const int n = generators.front().size();
  for (const SelfMap& g : generators)
    if (g.size() != n) throw std::invalid_argument("mixed generator degrees");

  switch (strategy) {
    case CentraliserStrategy::Enumerate: {
      double total = std::pow(static_cast<double>(n), static_cast<double>(n));
      if (total > static_cast<double>(cap)) throw CapExceeded(cap);

      std::vector<SelfMap> elements;
      SelfMap candidate{std::vector<State>(static_cast<std::size_t>(n), 0)};
      do {
        bool central = true;
        for (const SelfMap& g : generators)
          if (!commutes(candidate, g)) {
            central = false;
            break;
          }
        if (central) elements.push_back(candidate);
      } while (next_map(candidate, n));

      // The identity always commutes, so elements is non-empty; the set of
      // maps commuting with the generators is automatically a closed monoid.
      return TransformationMonoid(std::move(elements), {}, true);
    }

    case CentraliserStrategy::ViaReflectionOp: {
      if (op == nullptr)
        throw StrategyUnavailable(
            "via-reflection-op requires a compatible monoid operation");
      check_shape(*op);
      if (op->size() != n)
        throw std::invalid_argument("operation size does not match the generators");
      // The strategy is only valid when the generated monoid is the
      // translation monoid of *op: each generator must be a translation.
      for (const SelfMap& g : generators)
        for (State x = 0; x < n; ++x)
          if (g(x) != op->apply(g(op->unit), x))
            throw IncompatibleOp(
                "generator is not a translation of the supplied operation");

      // Centraliser = translations of the reflected operation, i.e. the
      // right translations y -> y * x, one per state, in state order.
      std::vector<SelfMap> elements;
      elements.reserve(static_cast<std::size_t>(n));
      for (State x = 0; x < n; ++x) {
        SelfMap m{std::vector<State>(static_cast<std::size_t>(n))};
        for (State y = 0; y < n; ++y)
          m.image[static_cast<std::size_t>(y)] = op->apply(y, x);
        elements.push_back(std::move(m));
      }
      return TransformationMonoid(std::move(elements), {}, true);
    }
  }
  throw std::logic_error("unreachable");
}

EquivalenceReport equivalence_report(const Algebra& alg, std::size_t cap) {
  {
    StateSet seed(alg.size());
    seed.insert(alg.base());
    StateSet reach = invariant_closure(alg, seed);
    for (State x = 0; x < alg.size(); ++x)
      if (!reach.contains(x)) throw NotMinimal(x);
  }

  const auto gens = generator_maps(alg);
  TransformationMonoid monoid = generate_monoid(gens, cap);
  EvalReport eval = evaluate_at_base(monoid, alg.base());
  TransformationMonoid central =
      centraliser(gens, CentraliserStrategy::Enumerate, cap);
  EvalReport central_eval = evaluate_at_base(central, alg.base());

  EquivalenceReport report;

  // (1) A (then unique) operation whose translation monoid is M exists.
  // Decided by the synthesis procedure and double-checked structurally:
  // the operation verifies and its translations are exactly M.
  SynthesisResult synth = synthesize(alg, cap);
  if (synth.is_regular()) {
    const MonoidOp& op = synth.outcome().op;
    bool ok = verify_compatible(alg, op).ok;
    for (const SelfMap& t : translations(op))
      ok = ok && monoid.contains(t);
    ok = ok && monoid.size() == op.size();
    report.operation_exists = ok;
  }

  // (2) Phi restricted to M is injective.
  report.phi_injective = eval.injective;

  // (3) Phi restricted to the centraliser is surjective.
  report.centraliser_phi_surjective = central_eval.surjective;

  // (4) Some subset of the centraliser mirrors the generator set's Phi
  // values; the generator set is the designated generator of M.
  {
    bool all_found = true;
    for (const SelfMap& g : gens) {
      State target = g(alg.base());
      bool found = false;
      for (int i = 0; i < central.size() && !found; ++i)
        found = central_eval.phi[static_cast<std::size_t>(i)] == target;
      all_found = all_found && found;
    }
    report.mirrored_generators = all_found;
  }

  // (5) A Phi-preserving bijection M -> Z_M exists, i.e. the multisets of
  // Phi values agree.
  {
    std::vector<int> count_m(static_cast<std::size_t>(alg.size()), 0);
    std::vector<int> count_z(static_cast<std::size_t>(alg.size()), 0);
    for (State v : eval.phi) ++count_m[static_cast<std::size_t>(v)];
    for (State v : central_eval.phi) ++count_z[static_cast<std::size_t>(v)];
    report.phi_matching_bijection = count_m == count_z;
  }

  const auto flags = report.flags();
  report.consistent =
      std::all_of(flags.begin(), flags.end(), [&](bool b) { return b == flags[0]; });
  return report;
}

}  // namespace lsalg
