#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "lsalg/algebra.hpp"

namespace lsalg {

/// A total self-map on {0, ..., n-1}, stored as its image array.
struct SelfMap {
  std::vector<State> image;

  int size() const { return static_cast<int>(image.size()); }
  State operator()(State x) const { return image[static_cast<std::size_t>(x)]; }

  static SelfMap identity(int n);
  bool is_identity() const;

  bool operator==(const SelfMap&) const = default;
};

/// (u o v)(x) = u(v(x)).  Throws std::invalid_argument on size mismatch.
SelfMap compose(const SelfMap& u, const SelfMap& v);

bool commutes(const SelfMap& u, const SelfMap& v);

bool is_injective(const SelfMap& u);
bool is_surjective(const SelfMap& u);

/// f_s as a SelfMap.
SelfMap generator_map(const Algebra& alg, Sym s);
std::vector<SelfMap> generator_maps(const Algebra& alg);

struct SelfMapHash {
  std::size_t operator()(const SelfMap& m) const {
    // FNV-1a over the image entries.
    std::size_t h = 1469598103934665603ull;
    for (State x : m.image) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace lsalg
