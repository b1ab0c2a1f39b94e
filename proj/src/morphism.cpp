#include "lsalg/morphism.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "lsalg/errors.hpp"

namespace lsalg {

namespace {

void require_same_alphabet(const Algebra& src, const Algebra& dst) {
  if (src.alphabet() != dst.alphabet())
    throw std::invalid_argument("morphisms require algebras over the same alphabet");
}

void require_map_shape(const Algebra& src, const Algebra& dst, const Morphism& m) {
  if (m.size() != src.size())
    throw std::invalid_argument("morphism length must equal the source state count");
  for (State y : m.map)
    if (y < 0 || y >= dst.size())
      throw std::invalid_argument("morphism target out of range");
}

std::optional<State> first_unreached(const Algebra& alg) {
  StateSet seed(alg.size());
  seed.insert(alg.base());
  StateSet reach = invariant_closure(alg, seed);
  for (State x = 0; x < alg.size(); ++x)
    if (!reach.contains(x)) return x;
  return std::nullopt;
}

}  // namespace

MorphismSearch find_morphism(const Algebra& src, const Algebra& dst) {
  require_same_alphabet(src, dst);
  if (auto missing = first_unreached(src)) throw NotMinimal(*missing);

  std::vector<State> map(static_cast<std::size_t>(src.size()), -1);
  map[static_cast<std::size_t>(src.base())] = dst.base();
  std::deque<State> work{src.base()};
  while (!work.empty()) {
    State x = work.front();
    work.pop_front();
    for (Sym s = 0; s < src.symbol_count(); ++s) {
      State y = src.step(s, x);
      State required = dst.step(s, map[static_cast<std::size_t>(x)]);
      State& slot = map[static_cast<std::size_t>(y)];
      if (slot < 0) {
        slot = required;
        work.push_back(y);
      } else if (slot != required) {
        MorphismSearch out;
        out.conflict = MorphismSearch::Conflict{y, slot, required, s, x};
        return out;
      }
    }
  }
  MorphismSearch out;
  out.morphism = Morphism{std::move(map)};
  return out;
}

MorphismCheck verify_morphism(const Algebra& src, const Algebra& dst,
                              const Morphism& m) {
  require_same_alphabet(src, dst);
  require_map_shape(src, dst, m);

  MorphismCheck check;
  if (m(src.base()) != dst.base())
    check.violations.push_back(
        MorphismViolation{MorphismViolation::Kind::Base, -1, src.base()});
  for (Sym s = 0; s < src.symbol_count(); ++s)
    for (State x = 0; x < src.size(); ++x)
      if (m(src.step(s, x)) != dst.step(s, m(x)))
        check.violations.push_back(
            MorphismViolation{MorphismViolation::Kind::Square, s, x});
  check.ok = check.violations.empty();
  return check;
}

bool is_isomorphism(const Algebra& src, const Algebra& dst, const Morphism& m) {
  if (!verify_morphism(src, dst, m).ok) return false;
  if (src.size() != dst.size()) return false;

  std::vector<State> inverse(static_cast<std::size_t>(dst.size()), -1);
  for (State x = 0; x < src.size(); ++x) {
    State y = m(x);
    if (inverse[static_cast<std::size_t>(y)] >= 0) return false;  // not injective
    inverse[static_cast<std::size_t>(y)] = x;
  }

  // A bijective morphism always has a morphism inverse; anything else is
  // an internal inconsistency.
  if (!verify_morphism(dst, src, Morphism{inverse}).ok)
    throw CriterionMismatch("inverse of a bijective morphism failed to verify");
  return true;
}

int Partition::class_count() const {
  int max_id = -1;
  for (int c : classes) max_id = std::max(max_id, c);
  return max_id + 1;
}

namespace {

void require_valid_partition(const Algebra& alg, const Partition& part) {
  if (part.size() != alg.size())
    throw std::invalid_argument("partition length must equal the state count");
  int m = 0;
  for (int c : part.classes) {
    if (c < 0) throw std::invalid_argument("negative class id");
    m = std::max(m, c + 1);
  }
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (int c : part.classes) seen[static_cast<std::size_t>(c)] = true;
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    throw std::invalid_argument("class ids must be dense 0..m-1");
}

}  // namespace

QuotientResult quotient(const Algebra& alg, const Partition& part) {
  require_valid_partition(alg, part);
  const int n = alg.size();
  const int m = part.class_count();

  std::vector<State> rep(static_cast<std::size_t>(m), -1);
  for (State x = 0; x < n; ++x) {
    int c = part.class_of(x);
    if (rep[static_cast<std::size_t>(c)] < 0) rep[static_cast<std::size_t>(c)] = x;
  }

  // Compatibility: within each class every member must step into the same
  // class as the class representative, for every symbol.
  for (Sym s = 0; s < alg.symbol_count(); ++s)
    for (State x = 0; x < n; ++x) {
      State r = rep[static_cast<std::size_t>(part.class_of(x))];
      if (part.class_of(alg.step(s, r)) != part.class_of(alg.step(s, x))) {
        QuotientResult out;
        out.witness = QuotientResult::Witness{s, r, x};
        return out;
      }
    }

  std::vector<std::vector<State>> tables(
      static_cast<std::size_t>(alg.symbol_count()),
      std::vector<State>(static_cast<std::size_t>(m)));
  for (Sym s = 0; s < alg.symbol_count(); ++s)
    for (int c = 0; c < m; ++c)
      tables[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)] =
          part.class_of(alg.step(s, rep[static_cast<std::size_t>(c)]));

  QuotientResult out;
  out.algebra = Algebra(m, part.class_of(alg.base()), alg.alphabet(), std::move(tables));
  out.projection = Morphism{part.classes};
  return out;
}

bool quotient_regularity(const Algebra& alg, const Reflection& refl,
                         const Partition& part, std::size_t cap) {
  if (!verify_reflection(alg, refl).ok)
    throw IncompatibleOp("quotient_regularity requires a verified reflection");
  QuotientResult q = quotient(alg, part);
  if (!q.ok())
    throw std::invalid_argument("partition is not compatible with the family");

  // The quotient is regular iff the partition also respects the
  // reflected family.
  bool flag = true;
  const int n = alg.size();
  std::vector<State> rep(static_cast<std::size_t>(part.class_count()), -1);
  for (State x = 0; x < n; ++x) {
    int c = part.class_of(x);
    if (rep[static_cast<std::size_t>(c)] < 0) rep[static_cast<std::size_t>(c)] = x;
  }
  for (Sym s = 0; s < refl.symbol_count() && flag; ++s)
    for (State x = 0; x < n && flag; ++x) {
      State r = rep[static_cast<std::size_t>(part.class_of(x))];
      flag = part.class_of(refl.apply(s, r)) == part.class_of(refl.apply(s, x));
    }

  // Cross-check against the decision procedure on the quotient itself.
  SynthesisResult direct = synthesize(*q.algebra, cap);
  if (direct.is_regular() != flag)
    throw CriterionMismatch(
        "reflection-compatibility disagrees with synthesis on the quotient");
  return flag;
}

bool verify_monoid_homomorphism(const MonoidOp& src, const MonoidOp& dst,
                                const Morphism& m) {
  check_shape(src);
  check_shape(dst);
  if (m.size() != src.size())
    throw std::invalid_argument("map length must equal the source monoid order");
  for (State y : m.map)
    if (y < 0 || y >= dst.size())
      throw std::invalid_argument("map target out of range");

  if (m(src.unit) != dst.unit) return false;
  for (State x = 0; x < src.size(); ++x)
    for (State y = 0; y < src.size(); ++y)
      if (m(src.apply(x, y)) != dst.apply(m(x), m(y))) return false;
  return true;
}

}  // namespace lsalg
