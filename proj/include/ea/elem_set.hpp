#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace ea {

/// A set of element indices, stored sorted ascending and duplicate-free so
/// that set equality is plain vector equality and serialization is canonical.
using ElemSet = std::vector<int>;

template <typename T>
using Grid = std::vector<std::vector<T>>;

inline ElemSet singleton(int x) { return ElemSet{x}; }

inline void insert_sorted(ElemSet& s, int x) {
  auto it = std::lower_bound(s.begin(), s.end(), x);
  if (it == s.end() || *it != x) s.insert(it, x);
}

inline ElemSet set_union(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool is_singleton(const ElemSet& s, int x) {
  return s.size() == 1 && s.front() == x;
}

}  // namespace ea
