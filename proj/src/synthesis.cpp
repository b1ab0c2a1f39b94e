#include "lsalg/synthesis.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "lsalg/errors.hpp"

namespace lsalg {

void check_shape(const MonoidOp& op) {
  const int n = op.size();
  if (n < 1) throw std::invalid_argument("operation table must be non-empty");
  if (op.unit < 0 || op.unit >= n) throw std::invalid_argument("unit out of range");
  for (const auto& row : op.table) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("operation table must be square");
    for (State v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
  }
}

MonoidOp reflect_operation(const MonoidOp& op) {
  check_shape(op);
  const int n = op.size();
  MonoidOp out;
  out.unit = op.unit;
  out.table.assign(static_cast<std::size_t>(n),
                   std::vector<State>(static_cast<std::size_t>(n)));
  for (State x = 0; x < n; ++x)
    for (State y = 0; y < n; ++y)
      out.table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = op.apply(y, x);
  return out;
}

SelfMap left_translation(const MonoidOp& op, State x) {
  return SelfMap{op.table[static_cast<std::size_t>(x)]};
}

std::vector<SelfMap> translations(const MonoidOp& op) {
  std::vector<SelfMap> out;
  out.reserve(op.table.size());
  for (State x = 0; x < op.size(); ++x) out.push_back(left_translation(op, x));
  return out;
}

namespace {

std::optional<State> first_unreached(const Algebra& alg) {
  StateSet seed(alg.size());
  seed.insert(alg.base());
  StateSet reach = invariant_closure(alg, seed);
  for (State x = 0; x < alg.size(); ++x)
    if (!reach.contains(x)) return x;
  return std::nullopt;
}

}  // namespace

SynthesisResult synthesize(const Algebra& alg, std::size_t cap) {
  if (auto missing = first_unreached(alg)) {
    return SynthesisResult::not_regular(
        Obstruction{NotRegularReason::NotMinimal, *missing, std::nullopt});
  }

  const auto gens = generator_maps(alg);
  TransformationMonoid monoid = generate_monoid(gens, cap);
  EvalReport eval = evaluate_at_base(monoid, alg.base());
  if (!eval.injective) {
    auto [i, j] = *eval.collision;
    return SynthesisResult::not_regular(
        Obstruction{NotRegularReason::PhiNotInjective, std::nullopt,
                    std::make_pair(monoid.element(i), monoid.element(j))});
  }
  if (!eval.surjective)
    throw CriterionMismatch("evaluation map not surjective on a minimal algebra");

  // Phi is a bijection: read the operation off the monoid.  With u_x the
  // unique element sent to x, the product x1 * x2 evaluates to u_{x1}(x2),
  // because u_{x2}(base) = x2 and products evaluate through composition.
  const int n = alg.size();
  const std::vector<int>& preimage = *eval.preimage;
  MonoidOp op;
  op.unit = alg.base();
  op.table.assign(static_cast<std::size_t>(n),
                  std::vector<State>(static_cast<std::size_t>(n)));
  for (State x1 = 0; x1 < n; ++x1) {
    const SelfMap& u = monoid.element(preimage[static_cast<std::size_t>(x1)]);
    for (State x2 = 0; x2 < n; ++x2)
      op.table[static_cast<std::size_t>(x1)][static_cast<std::size_t>(x2)] = u(x2);
  }

  Reflection refl = derive_reflection(alg, op);
  return SynthesisResult::regular(
      RegularOutcome{std::move(op), std::move(refl), std::move(monoid), std::move(eval)});
}

Reflection derive_reflection(const Algebra& alg, const MonoidOp& op) {
  CompatibilityCheck check = verify_compatible(alg, op);
  if (!check.ok)
    throw IncompatibleOp("operation is not compatible with the family");

  const int n = alg.size();
  Reflection refl;
  refl.tables.assign(static_cast<std::size_t>(alg.symbol_count()),
                     std::vector<State>(static_cast<std::size_t>(n)));
  for (Sym s = 0; s < alg.symbol_count(); ++s) {
    State fs_base = alg.step(s, alg.base());
    for (State x = 0; x < n; ++x)
      refl.tables[static_cast<std::size_t>(s)][static_cast<std::size_t>(x)] =
          op.apply(x, fs_base);
  }
  return refl;
}

ReflectionCheck verify_reflection(const Algebra& alg, const Reflection& refl) {
  if (refl.symbol_count() != alg.symbol_count() || refl.size() != alg.size())
    throw std::invalid_argument("reflection dimensions do not match the algebra");

  ReflectionCheck check;
  for (Sym s = 0; s < alg.symbol_count(); ++s)
    if (refl.apply(s, alg.base()) != alg.step(s, alg.base()))
      check.violations.push_back(
          ReflectionViolation{ReflectionViolation::Kind::Base, s, -1, -1});
  for (Sym s = 0; s < alg.symbol_count(); ++s)
    for (Sym t = 0; t < alg.symbol_count(); ++t)
      for (State x = 0; x < alg.size(); ++x)
        if (refl.apply(s, alg.step(t, x)) != alg.step(t, refl.apply(s, x)))
          check.violations.push_back(
              ReflectionViolation{ReflectionViolation::Kind::Commute, s, t, x});
  check.ok = check.violations.empty();
  return check;
}

std::vector<SelfMap> allowable_maps(const Algebra& alg, const Reflection& refl) {
  if (auto missing = first_unreached(alg)) throw NotMinimal(*missing);
  if (refl.symbol_count() != alg.symbol_count() || refl.size() != alg.size())
    throw std::invalid_argument("reflection dimensions do not match the algebra");

  const int n = alg.size();
  std::vector<SelfMap> reflection_maps;
  for (Sym s = 0; s < alg.symbol_count(); ++s) reflection_maps.push_back(refl.map(s));

  // r_base = id; r_{f_s(x)} = r_x o f'_s.  Every edge is checked, so a
  // second assignment must reproduce the first one exactly.
  std::vector<std::optional<SelfMap>> rho(static_cast<std::size_t>(n));
  rho[static_cast<std::size_t>(alg.base())] = SelfMap::identity(n);
  std::deque<State> work{alg.base()};
  while (!work.empty()) {
    State x = work.front();
    work.pop_front();
    for (Sym s = 0; s < alg.symbol_count(); ++s) {
      State y = alg.step(s, x);
      SelfMap candidate = compose(*rho[static_cast<std::size_t>(x)],
                                  reflection_maps[static_cast<std::size_t>(s)]);
      auto& slot = rho[static_cast<std::size_t>(y)];
      if (!slot.has_value()) {
        slot = std::move(candidate);
        work.push_back(y);
      } else if (*slot != candidate) {
        throw InconsistentAllowable(
            "state " + std::to_string(y) +
            " received two distinct allowable maps; the input is not a reflection");
      }
    }
  }

  std::vector<SelfMap> out;
  out.reserve(static_cast<std::size_t>(n));
  for (State x = 0; x < n; ++x) {
    const SelfMap& r = *rho[static_cast<std::size_t>(x)];
    if (r(alg.base()) != x)
      throw InconsistentAllowable("allowable map misses its target state");
    for (Sym s = 0; s < alg.symbol_count(); ++s) {
      const SelfMap fs = generator_map(alg, s);
      if (compose(fs, r) != compose(r, fs))
        throw InconsistentAllowable(
            "allowable map fails to commute with the family");
    }
    out.push_back(r);
  }
  return out;
}

MonoidOp synthesize_from_reflection(const Algebra& alg, const Reflection& refl) {
  const std::vector<SelfMap> rho = allowable_maps(alg, refl);
  const int n = alg.size();
  MonoidOp op;
  op.unit = alg.base();
  op.table.assign(static_cast<std::size_t>(n),
                  std::vector<State>(static_cast<std::size_t>(n)));
  // x' * x = r_x(x').
  for (State xp = 0; xp < n; ++xp)
    for (State x = 0; x < n; ++x)
      op.table[static_cast<std::size_t>(xp)][static_cast<std::size_t>(x)] =
          rho[static_cast<std::size_t>(x)](xp);
  return op;
}

CompatibilityCheck verify_compatible(const Algebra& alg, const MonoidOp& op) {
  check_shape(op);
  if (op.size() != alg.size())
    throw std::invalid_argument("operation size does not match the algebra");

  const int n = alg.size();
  CompatibilityCheck check;
  for (State y = 0; y < n; ++y)
    if (op.apply(op.unit, y) != y)
      check.violations.push_back(
          OpViolation{OpViolation::Kind::LeftUnit, op.unit, y, -1, -1});
  for (State x = 0; x < n; ++x)
    if (op.apply(x, op.unit) != x)
      check.violations.push_back(
          OpViolation{OpViolation::Kind::RightUnit, x, op.unit, -1, -1});
  for (State x = 0; x < n; ++x)
    for (State y = 0; y < n; ++y)
      for (State z = 0; z < n; ++z)
        if (op.apply(op.apply(x, y), z) != op.apply(x, op.apply(y, z)))
          check.violations.push_back(
              OpViolation{OpViolation::Kind::Assoc, x, y, z, -1});
  for (Sym s = 0; s < alg.symbol_count(); ++s)
    for (State x1 = 0; x1 < n; ++x1)
      for (State x2 = 0; x2 < n; ++x2)
        if (op.apply(alg.step(s, x1), x2) != alg.step(s, op.apply(x1, x2)))
          check.violations.push_back(
              OpViolation{OpViolation::Kind::Translation, x1, x2, -1, s});
  check.ok = check.violations.empty();
  return check;
}

namespace {

bool table_commutative(const MonoidOp& op, std::optional<std::pair<State, State>>& witness) {
  for (State x = 0; x < op.size(); ++x)
    for (State y = x + 1; y < op.size(); ++y)
      if (op.apply(x, y) != op.apply(y, x)) {
        witness = {x, y};
        return false;
      }
  return true;
}

bool table_left_cancellative(const MonoidOp& op,
                             std::optional<std::tuple<State, State, State>>& witness) {
  const int n = op.size();
  for (State x = 0; x < n; ++x) {
    std::vector<State> first(static_cast<std::size_t>(n), -1);
    for (State y = 0; y < n; ++y) {
      State v = op.apply(x, y);
      if (first[static_cast<std::size_t>(v)] >= 0) {
        witness = {x, first[static_cast<std::size_t>(v)], y};
        return false;
      }
      first[static_cast<std::size_t>(v)] = y;
    }
  }
  return true;
}

bool table_right_cancellative(const MonoidOp& op,
                              std::optional<std::tuple<State, State, State>>& witness) {
  const int n = op.size();
  for (State x = 0; x < n; ++x) {
    std::vector<State> first(static_cast<std::size_t>(n), -1);
    for (State y = 0; y < n; ++y) {
      State v = op.apply(y, x);
      if (first[static_cast<std::size_t>(v)] >= 0) {
        witness = {x, first[static_cast<std::size_t>(v)], y};
        return false;
      }
      first[static_cast<std::size_t>(v)] = y;
    }
  }
  return true;
}

bool table_group(const MonoidOp& op, std::optional<State>& witness) {
  const int n = op.size();
  for (State x = 0; x < n; ++x) {
    bool has_inverse = false;
    for (State y = 0; y < n && !has_inverse; ++y)
      has_inverse = op.apply(x, y) == op.unit && op.apply(y, x) == op.unit;
    if (!has_inverse) {
      witness = x;
      return false;
    }
  }
  return true;
}

}  // namespace

MonoidClassification classify_monoid(const Algebra& alg, const MonoidOp& op,
                                     const Reflection& refl) {
  if (!verify_compatible(alg, op).ok)
    throw IncompatibleOp("classify_monoid requires a compatible operation");
  if (!verify_reflection(alg, refl).ok)
    throw IncompatibleOp("classify_monoid requires a verified reflection");

  // Family-side criteria.
  FamilyReport family = family_report(alg);
  bool commutative_family = family.commutative;
  bool left_family = true, group_family = true;
  for (const SymbolFlags& flags : family.symbols) {
    left_family = left_family && flags.injective;
    group_family = group_family && flags.surjective;
  }
  bool right_family = true;
  for (Sym s = 0; s < refl.symbol_count() && right_family; ++s)
    right_family = is_injective(refl.map(s));

  // Direct table checks of the same properties.
  MonoidClassification out;
  bool commutative_table = table_commutative(op, out.commutativity_witness);
  bool left_table = table_left_cancellative(op, out.left_cancel_witness);
  bool right_table = table_right_cancellative(op, out.right_cancel_witness);
  bool group_table = table_group(op, out.group_witness);

  if (commutative_family != commutative_table)
    throw CriterionMismatch("commutativity criterion disagrees with the table");
  if (left_family != left_table)
    throw CriterionMismatch("left-cancellation criterion disagrees with the table");
  if (right_family != right_table)
    throw CriterionMismatch("right-cancellation criterion disagrees with the table");
  if (group_family != group_table)
    throw CriterionMismatch("group criterion disagrees with the table");

  out.commutative = commutative_table;
  out.left_cancellative = left_table;
  out.right_cancellative = right_table;
  out.group = group_table;
  return out;
}

namespace {

bool passes_compatibility_laws(const Algebra& alg, const MonoidOp& op) {
  const int n = alg.size();
  for (State x = 0; x < n; ++x)
    for (State y = 0; y < n; ++y)
      for (State z = 0; z < n; ++z)
        if (op.apply(op.apply(x, y), z) != op.apply(x, op.apply(y, z))) return false;
  for (Sym s = 0; s < alg.symbol_count(); ++s)
    for (State x1 = 0; x1 < n; ++x1)
      for (State x2 = 0; x2 < n; ++x2)
        if (op.apply(alg.step(s, x1), x2) != alg.step(s, op.apply(x1, x2))) return false;
  return true;
}

}  // namespace

std::vector<MonoidOp> brute_force_operation_search(const Algebra& alg, int bound) {
  const int n = alg.size();
  if (n > bound)
    throw BoundExceeded("state count " + std::to_string(n) +
                        " exceeds the oracle bound " + std::to_string(bound));

  // Pin the unit row and column, then run an odometer over the free cells.
  MonoidOp op;
  op.unit = alg.base();
  op.table.assign(static_cast<std::size_t>(n),
                  std::vector<State>(static_cast<std::size_t>(n), 0));
  for (State y = 0; y < n; ++y) op.table[static_cast<std::size_t>(op.unit)][static_cast<std::size_t>(y)] = y;
  for (State x = 0; x < n; ++x) op.table[static_cast<std::size_t>(x)][static_cast<std::size_t>(op.unit)] = x;

  std::vector<std::pair<State, State>> cells;
  for (State x = 0; x < n; ++x)
    for (State y = 0; y < n; ++y)
      if (x != op.unit && y != op.unit) cells.emplace_back(x, y);

  std::vector<MonoidOp> found;
  while (true) {
    if (passes_compatibility_laws(alg, op)) found.push_back(op);
    // Advance the odometer.
    std::size_t i = 0;
    for (; i < cells.size(); ++i) {
      auto [x, y] = cells[i];
      State& cell = op.table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      if (cell + 1 < n) {
        ++cell;
        break;
      }
      cell = 0;
    }
    if (i == cells.size()) break;
  }
  return found;
}

}  // namespace lsalg
