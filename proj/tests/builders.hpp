#pragma once

// Hand-built reference algebras shared by the test suites. Layout convention
// throughout: index 0 is zero, the last index is one.

#include <vector>

#include "ea/effect_algebra.hpp"

namespace ea::testing {

inline EffectAlgebra make_algebra(int n, std::vector<int> comp,
                                  std::vector<std::tuple<int, int, int>> sums,
                                  std::vector<std::string> names) {
  EffectAlgebra e;
  e.size = n;
  e.zero = 0;
  e.one = n - 1;
  e.comp = std::move(comp);
  e.names = std::move(names);
  e.plus.assign(n, std::vector<std::optional<int>>(n));
  for (int y = 0; y < n; ++y) {
    e.plus[0][y] = y;
    e.plus[y][0] = y;
  }
  for (auto [x, y, s] : sums) {
    e.plus[x][y] = s;
    e.plus[y][x] = s;
  }
  return e;
}

/// Two-element Boolean algebra {0,1}.
inline EffectAlgebra e2() { return make_algebra(2, {1, 0}, {}, {"0", "1"}); }

/// Three-element chain {0,a,1} with a' = a and a+a = 1.
inline EffectAlgebra c3() { return make_algebra(3, {2, 1, 0}, {{1, 1, 2}}, {"0", "a", "1"}); }

/// Four-element chain {0,a,b,1} with a' = b, a+a = b.
inline EffectAlgebra c4() {
  return make_algebra(4, {3, 2, 1, 0}, {{1, 1, 2}, {1, 2, 3}}, {"0", "a", "b", "1"});
}

/// Boolean 2x2 {0,a,b,1}: a' = b, a+b = 1, a+a undefined.
inline EffectAlgebra b4() {
  return make_algebra(4, {3, 2, 1, 0}, {{1, 2, 3}}, {"0", "a", "b", "1"});
}

/// Horizontal sum of two three-element chains: {0,a,b,1}, a' = a, b' = b,
/// a+a = b+b = 1, a+b undefined.
inline EffectAlgebra hs() {
  return make_algebra(4, {3, 1, 2, 0}, {{1, 1, 3}, {2, 2, 3}}, {"0", "a", "b", "1"});
}

/// The hexagon {0,a,b,c,d,1}: a,b below the incomparable c,d. The smallest
/// non-lattice effect algebra; a -> b is the two-element set {c,d}.
inline EffectAlgebra hex6() {
  return make_algebra(6, {5, 3, 4, 1, 2, 0},
                      {{1, 1, 3}, {1, 2, 4}, {2, 2, 3}, {1, 3, 5}, {2, 4, 5}},
                      {"0", "a", "b", "c", "d", "1"});
}

inline std::vector<EffectAlgebra> standard_algebras() {
  return {e2(), c3(), c4(), b4(), hs(), hex6()};
}

inline std::vector<EffectAlgebra> lattice_algebras() { return {e2(), c3(), c4(), b4(), hs()}; }

}  // namespace ea::testing
