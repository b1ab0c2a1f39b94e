#pragma once

// Shared fixtures and test-side oracles.  The oracles deliberately use
// different algorithms from the library (full rescans instead of
// worklists, set-based closures instead of BFS, inline composition) so
// they can cross-check it.

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "lsalg/algebra.hpp"
#include "lsalg/op.hpp"

namespace fixtures {

using lsalg::Algebra;
using lsalg::MonoidOp;
using lsalg::State;
using lsalg::Sym;

// Cyclic algebra: one symbol, f(x) = x+1 mod n.
inline Algebra cycle(int n) {
  std::vector<State> f(static_cast<std::size_t>(n));
  for (State x = 0; x < n; ++x) f[static_cast<std::size_t>(x)] = (x + 1) % n;
  return Algebra(n, 0, {"s"}, {f});
}

inline Algebra c3() { return cycle(3); }

// Tail of `tail` states leading into a cycle of `cycle_len` states.
inline Algebra lollipop(int tail, int cycle_len) {
  int n = tail + 1 + cycle_len;
  std::vector<State> f(static_cast<std::size_t>(n));
  for (State x = 0; x < n - 1; ++x) f[static_cast<std::size_t>(x)] = x + 1;
  f[static_cast<std::size_t>(n - 1)] = tail + 1;
  return Algebra(n, 0, {"s"}, {f});
}

// 0 -> 1 -> 2 -> 3 -> 2 (tail then a 2-cycle).
inline Algebra lolli() { return Algebra(4, 0, {"s"}, {{1, 2, 3, 2}}); }

// Shift register over {a, b} of width `width`: states are words of that
// length (binary encoding, first symbol in the top bit), the maps prepend
// a symbol and drop the last one.  Base is the all-a word.
inline Algebra shift_register(int width) {
  int n = 1 << width;
  std::vector<State> fa(static_cast<std::size_t>(n)), fb(static_cast<std::size_t>(n));
  for (State x = 0; x < n; ++x) {
    fa[static_cast<std::size_t>(x)] = x >> 1;             // prepend a (top bit 0)
    fb[static_cast<std::size_t>(x)] = (x >> 1) | (n >> 1);  // prepend b (top bit 1)
  }
  return Algebra(n, 0, {"a", "b"}, {fa, fb});
}

// States aa, ab, ba, bb (in that order), base aa.
inline Algebra shift2() { return shift_register(2); }

// A monoid acting on itself by left multiplication: one symbol per
// element, sigma_a(b) = a * b, base = unit.
inline Algebra monoid_on_itself(const MonoidOp& op) {
  std::vector<std::string> alphabet;
  for (State x = 0; x < op.size(); ++x) alphabet.push_back("m" + std::to_string(x));
  return Algebra(op.size(), op.unit, alphabet, op.table);
}

inline MonoidOp cyclic_group(int n) {
  MonoidOp op;
  op.unit = 0;
  op.table.assign(static_cast<std::size_t>(n), std::vector<State>(static_cast<std::size_t>(n)));
  for (State x = 0; x < n; ++x)
    for (State y = 0; y < n; ++y)
      op.table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = (x + y) % n;
  return op;
}

// The two-element group acting on itself.
inline Algebra mon2() { return monoid_on_itself(cyclic_group(2)); }

inline MonoidOp semilattice2() { return MonoidOp{0, {{0, 1}, {1, 1}}}; }

inline MonoidOp klein4() {
  return MonoidOp{0, {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
}

// n = 2, both symbols flip the two states.
inline Algebra c2_flip() { return Algebra(2, 0, {"a", "b"}, {{1, 0}, {1, 0}}); }

inline Algebra c6() { return cycle(6); }

// ---------------------------------------------------------------------
// Oracles.

// Closure by repeated full rescans until nothing changes.
inline std::vector<State> naive_closure(const Algebra& alg, std::vector<State> seeds) {
  std::set<State> members(seeds.begin(), seeds.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::set<State> next = members;
    for (State x : members)
      for (Sym s = 0; s < alg.symbol_count(); ++s)
        if (next.insert(alg.step(s, x)).second) changed = true;
    members = std::move(next);
  }
  return std::vector<State>(members.begin(), members.end());
}

// Monoid closure as a set of image arrays, by repeated pairwise products.
inline std::set<std::vector<State>> naive_monoid(const Algebra& alg) {
  std::set<std::vector<State>> members;
  std::vector<State> id(static_cast<std::size_t>(alg.size()));
  for (State x = 0; x < alg.size(); ++x) id[static_cast<std::size_t>(x)] = x;
  members.insert(id);
  for (Sym s = 0; s < alg.symbol_count(); ++s) members.insert(alg.transition(s));

  bool changed = true;
  while (changed) {
    changed = false;
    std::set<std::vector<State>> next = members;
    for (const auto& u : members)
      for (const auto& v : members) {
        std::vector<State> w(u.size());
        for (std::size_t x = 0; x < u.size(); ++x)
          w[x] = u[static_cast<std::size_t>(v[x])];
        if (next.insert(w).second) changed = true;
      }
    members = std::move(next);
  }
  return members;
}

// All n^n image arrays in lexicographic order.
inline std::vector<std::vector<State>> all_selfmaps(int n) {
  std::vector<std::vector<State>> out;
  std::vector<State> img(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(img);
    int i = n - 1;
    for (; i >= 0; --i) {
      if (img[static_cast<std::size_t>(i)] + 1 < n) {
        ++img[static_cast<std::size_t>(i)];
        std::fill(img.begin() + i + 1, img.end(), 0);
        break;
      }
    }
    if (i < 0) break;
  }
  return out;
}

// Every algebra with the given size and symbol count, base 0, symbols
// named a, b, c, ...
inline void for_all_algebras(int n, int k, const std::function<void(const Algebra&)>& fn) {
  std::vector<std::string> alphabet;
  for (int s = 0; s < k; ++s) alphabet.push_back(std::string(1, static_cast<char>('a' + s)));
  std::vector<State> digits(static_cast<std::size_t>(n * k), 0);
  while (true) {
    std::vector<std::vector<State>> tables(static_cast<std::size_t>(k));
    for (int s = 0; s < k; ++s)
      tables[static_cast<std::size_t>(s)] =
          std::vector<State>(digits.begin() + s * n, digits.begin() + (s + 1) * n);
    fn(Algebra(n, 0, alphabet, std::move(tables)));
    int i = n * k - 1;
    for (; i >= 0; --i) {
      if (digits[static_cast<std::size_t>(i)] + 1 < n) {
        ++digits[static_cast<std::size_t>(i)];
        std::fill(digits.begin() + i + 1, digits.end(), 0);
        break;
      }
    }
    if (i < 0) break;
  }
}

// All candidate reflection families (one self-map per symbol), checked
// inline against the definition.  Returns the verified ones.
inline std::vector<std::vector<std::vector<State>>> reflections_by_enumeration(
    const Algebra& alg) {
  const int n = alg.size();
  const int k = alg.symbol_count();
  const auto maps = all_selfmaps(n);
  std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
  std::vector<std::vector<std::vector<State>>> found;
  while (true) {
    std::vector<std::vector<State>> family;
    for (int s = 0; s < k; ++s) family.push_back(maps[pick[static_cast<std::size_t>(s)]]);
    bool ok = true;
    for (Sym s = 0; s < k && ok; ++s)
      ok = family[static_cast<std::size_t>(s)][static_cast<std::size_t>(alg.base())] ==
           alg.step(s, alg.base());
    for (Sym s = 0; s < k && ok; ++s)
      for (Sym t = 0; t < k && ok; ++t)
        for (State x = 0; x < n && ok; ++x)
          ok = family[static_cast<std::size_t>(s)]
                     [static_cast<std::size_t>(alg.step(t, x))] ==
               alg.step(t, family[static_cast<std::size_t>(s)][static_cast<std::size_t>(x)]);
    if (ok) found.push_back(std::move(family));

    int i = k - 1;
    for (; i >= 0; --i) {
      if (pick[static_cast<std::size_t>(i)] + 1 < maps.size()) {
        ++pick[static_cast<std::size_t>(i)];
        std::fill(pick.begin() + i + 1, pick.end(), 0);
        break;
      }
    }
    if (i < 0) break;
  }
  return found;
}

}  // namespace fixtures
