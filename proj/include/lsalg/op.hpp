#pragma once

#include <vector>

#include "lsalg/selfmap.hpp"

namespace lsalg {

/// An n-by-n operation table with a designated unit element.
/// The struct itself is a plain value; use verify_compatible (or
/// check_shape for the structural part) to validate candidates.
struct MonoidOp {
  State unit = 0;
  std::vector<std::vector<State>> table;

  int size() const { return static_cast<int>(table.size()); }
  /// x * y.
  State apply(State x, State y) const {
    return table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  }

  bool operator==(const MonoidOp&) const = default;
};

/// Throws std::invalid_argument unless the table is square with entries
/// in range and a valid unit index.
void check_shape(const MonoidOp& op);

/// The opposite operation x *' y = y * x (table transpose, same unit).
/// An involution.
MonoidOp reflect_operation(const MonoidOp& op);

/// The left translation y -> x * y (row x of the table).
SelfMap left_translation(const MonoidOp& op, State x);

/// All left translations, indexed by x.  For a valid monoid operation
/// these are exactly the elements of the Cayley image monoid.
std::vector<SelfMap> translations(const MonoidOp& op);

}  // namespace lsalg
