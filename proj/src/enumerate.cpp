#include "ea/enumerate.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>

#include "ea/implication.hpp"

namespace ea {

namespace {

EffectAlgebra apply_permutation(const EffectAlgebra& e, const std::vector<int>& perm) {
  EffectAlgebra out;
  out.size = e.size;
  out.zero = perm[e.zero];
  out.one = perm[e.one];
  out.comp.resize(e.size);
  out.plus.assign(e.size, std::vector<std::optional<int>>(e.size));
  for (int x = 0; x < e.size; ++x) {
    out.comp[perm[x]] = perm[e.comp[x]];
    for (int y = 0; y < e.size; ++y)
      if (e.defined(x, y)) out.plus[perm[x]][perm[y]] = perm[e.sum(x, y)];
  }
  return out;
}

std::vector<std::uint8_t> serialize(const EffectAlgebra& e) {
  std::vector<std::uint8_t> out;
  out.reserve(1 + e.size * e.size + e.size);
  out.push_back(static_cast<std::uint8_t>(e.size));
  for (int x = 0; x < e.size; ++x)
    for (int y = 0; y < e.size; ++y)
      out.push_back(e.defined(x, y) ? static_cast<std::uint8_t>(e.sum(x, y) + 1) : 0);
  for (int x = 0; x < e.size; ++x) out.push_back(static_cast<std::uint8_t>(e.comp[x]));
  return out;
}

}  // namespace

std::vector<std::uint8_t> canonicalize(const EffectAlgebra& e) {
  const int n = e.size;
  if (n > 10) throw CapExceeded("canonical form is factorial in the carrier; 10 is the limit");
  // Relabel so that zero lands on 0 and one on n-1, middles in every order;
  // keep the lexicographically smallest serialization.
  std::vector<int> middles;
  for (int x = 0; x < n; ++x)
    if (x != e.zero && x != e.one) middles.push_back(x);
  std::vector<int> slots(middles.size());
  for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = static_cast<int>(i) + 1;

  std::vector<std::uint8_t> best;
  std::vector<int> perm(n, -1);
  perm[e.zero] = 0;
  perm[e.one] = n - 1;
  do {
    for (std::size_t i = 0; i < middles.size(); ++i) perm[middles[i]] = slots[i];
    std::vector<std::uint8_t> enc = serialize(apply_permutation(e, perm));
    if (best.empty() || enc < best) best = std::move(enc);
  } while (std::next_permutation(slots.begin(), slots.end()));
  return best;
}

EffectAlgebra decode_canonical(const std::vector<std::uint8_t>& enc) {
  if (enc.empty()) throw MalformedTable("empty encoding");
  const int n = enc[0];
  if (static_cast<int>(enc.size()) != 1 + n * n + n) throw MalformedTable("encoding length mismatch");
  EffectAlgebra e;
  e.size = n;
  e.zero = 0;
  e.one = n - 1;
  e.plus.assign(n, std::vector<std::optional<int>>(n));
  e.comp.resize(n);
  std::size_t k = 1;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y, ++k)
      if (enc[k] != 0) e.plus[x][y] = enc[k] - 1;
  for (int x = 0; x < n; ++x, ++k) e.comp[x] = enc[k];
  return e;
}

std::string canonical_hash(const EffectAlgebra& e) {
  // FNV-1a, 64 bit
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint8_t b : canonicalize(e)) {
    h ^= b;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex;
  for (int i = 15; i >= 0; --i) out << ((h >> (i * 4)) & 0xf);
  return out.str();
}

namespace {

constexpr int kUndecided = -2;
constexpr int kUndef = -1;

// Complement-first search: fix an involution, pin the forced entries and
// backtrack over the remaining middle cells with incremental associativity
// and cancellation checks.
struct CompFirstSearch {
  int n;
  std::vector<int> comp;
  Grid<int> cell;                    // kUndecided / kUndef / value
  std::vector<std::vector<bool>> row_used;
  std::vector<std::pair<int, int>> free_cells;
  std::set<std::vector<std::uint8_t>>* out;

  void run(const std::vector<int>& involution) {
    comp = involution;
    cell.assign(n, std::vector<int>(n, kUndecided));
    row_used.assign(n, std::vector<bool>(n, false));
    for (int y = 0; y < n; ++y) {
      set_pinned(0, y, y);
      if (y > 0) set_pinned(n - 1, y, kUndef);
    }
    for (int x = 1; x < n - 1; ++x) set_pinned(x, comp[x], n - 1);
    free_cells.clear();
    for (int x = 1; x <= n - 2; ++x)
      for (int y = x; y <= n - 2; ++y)
        if (cell[x][y] == kUndecided) free_cells.push_back({x, y});
    dfs(0);
  }

  void set_pinned(int x, int y, int v) {
    cell[x][y] = v;
    cell[y][x] = v;
    if (v >= 0) {
      row_used[x][v] = true;
      row_used[y][v] = true;
    }
  }

  void dfs(std::size_t k) {
    if (k == free_cells.size()) {
      emit();
      return;
    }
    auto [x, y] = free_cells[k];
    // undefined branch
    cell[x][y] = cell[y][x] = kUndef;
    if (assoc_ok()) dfs(k + 1);
    // defined branches: middles only (one is reserved for complement pairs,
    // zero and the operands are excluded by cancellation)
    for (int v = 1; v <= n - 2; ++v) {
      if (v == x || v == y || row_used[x][v] || (x != y && row_used[y][v])) continue;
      cell[x][y] = cell[y][x] = v;
      row_used[x][v] = true;
      row_used[y][v] = true;
      if (assoc_ok()) dfs(k + 1);
      row_used[x][v] = false;
      row_used[y][v] = false;
    }
    cell[x][y] = cell[y][x] = kUndecided;
  }

  // All fully decided triples must associate; sides with undecided lookups
  // are left for later.
  bool assoc_ok() const {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int ab = cell[a][b];
        if (ab == kUndecided) continue;
        for (int c = 0; c < n; ++c) {
          int left = ab == kUndef ? kUndef : cell[ab][c];
          const int bc = cell[b][c];
          int right = (bc == kUndecided) ? kUndecided : (bc == kUndef ? kUndef : cell[a][bc]);
          if (left == kUndecided || right == kUndecided) continue;
          if (left != right) return false;
        }
      }
    return true;
  }

  void emit() {
    EffectAlgebra e;
    e.size = n;
    e.zero = 0;
    e.one = n - 1;
    e.comp = comp;
    e.plus.assign(n, std::vector<std::optional<int>>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (cell[x][y] >= 0) e.plus[x][y] = cell[x][y];
    if (!validate_effect_axioms(e).ok()) return;  // safety net; pruning should not miss
    out->insert(canonicalize(e));
  }
};

std::vector<std::vector<int>> involutions_fixing_bounds(int n) {
  // involutions of the full carrier with comp[0] = n-1
  std::vector<std::vector<int>> result;
  std::vector<int> comp(n, -1);
  comp[0] = n - 1;
  comp[n - 1] = 0;
  auto rec = [&](auto&& self, int x) -> void {
    while (x < n && comp[x] != -1) ++x;
    if (x == n) {
      result.push_back(comp);
      return;
    }
    comp[x] = x;  // self-complement
    self(self, x + 1);
    comp[x] = -1;
    for (int y = x + 1; y < n - 1; ++y) {
      if (comp[y] != -1) continue;
      comp[x] = y;
      comp[y] = x;
      self(self, x + 1);
      comp[x] = comp[y] = -1;
    }
  };
  rec(rec, 1);
  return result;
}

std::set<std::vector<std::uint8_t>> enumerate_canonical(int n, int jobs) {
  const auto involutions = involutions_fixing_bounds(n);
  if (jobs <= 1 || involutions.size() <= 1) {
    std::set<std::vector<std::uint8_t>> found;
    CompFirstSearch search{n, {}, {}, {}, {}, &found};
    for (const auto& inv : involutions) search.run(inv);
    return found;
  }
  // Partition the involution list across workers; merging keeps the result
  // independent of the schedule.
  const int workers = std::min<int>(jobs, static_cast<int>(involutions.size()));
  std::vector<std::future<std::set<std::vector<std::uint8_t>>>> parts;
  for (int w = 0; w < workers; ++w) {
    parts.push_back(std::async(std::launch::async, [&, w] {
      std::set<std::vector<std::uint8_t>> found;
      CompFirstSearch search{n, {}, {}, {}, {}, &found};
      for (std::size_t i = w; i < involutions.size(); i += workers) search.run(involutions[i]);
      return found;
    }));
  }
  std::set<std::vector<std::uint8_t>> merged;
  for (auto& part : parts)
    for (auto& enc : part.get()) merged.insert(enc);
  return merged;
}

}  // namespace

std::vector<EffectAlgebra> enumerate_effect_algebras(int n, int cap, int jobs) {
  if (n < 2 || n > cap)
    throw CapExceeded("size " + std::to_string(n) + " outside [2, " + std::to_string(cap) + "]");
  std::vector<EffectAlgebra> out;
  for (const auto& enc : enumerate_canonical(n, jobs)) out.push_back(decode_canonical(enc));
  return out;
}

namespace {

// Addition-first search: no complement is fixed in advance; a candidate top
// element is chosen, rows are filled under cancellation only, and the
// complement is read off the finished table. Full validation runs at every
// leaf. Independent of the complement-first strategy by construction.
struct PlusFirstSearch {
  int n;
  int top;
  Grid<int> cell;
  std::set<std::vector<std::uint8_t>>* out;
  std::vector<std::pair<int, int>> cells;

  void run() {
    cell.assign(n, std::vector<int>(n, kUndef));
    for (int y = 0; y < n; ++y) {
      cell[0][y] = y;
      cell[y][0] = y;
    }
    cells.clear();
    for (int x = 1; x < n; ++x)
      for (int y = x; y < n; ++y)
        if (x != top && y != top) cells.push_back({x, y});
    dfs(0);
  }

  bool row_has(int x, int v) const {
    for (int y = 0; y < n; ++y)
      if (cell[x][y] == v) return true;
    return false;
  }

  void dfs(std::size_t k) {
    if (k == cells.size()) {
      emit();
      return;
    }
    auto [x, y] = cells[k];
    dfs(k + 1);  // undefined branch
    for (int v = 1; v < n; ++v) {
      if (v == x || v == y) continue;        // cancellation against x+0
      if (row_has(x, v) || (x != y && row_has(y, v))) continue;
      cell[x][y] = cell[y][x] = v;
      dfs(k + 1);
      cell[x][y] = cell[y][x] = kUndef;
    }
  }

  void emit() {
    // complement = the unique partner summing to the top
    std::vector<int> comp(n, -1);
    for (int x = 0; x < n; ++x) {
      int partner = -1;
      for (int y = 0; y < n; ++y) {
        if (cell[x][y] == top) {
          if (partner != -1) return;  // two partners: E3 cannot hold
          partner = y;
        }
      }
      if (partner == -1) return;
      comp[x] = partner;
    }
    EffectAlgebra e;
    e.size = n;
    e.zero = 0;
    e.one = top;
    e.comp = std::move(comp);
    e.plus.assign(n, std::vector<std::optional<int>>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (cell[x][y] >= 0) e.plus[x][y] = cell[x][y];
    if (!validate_effect_axioms(e).ok()) return;
    out->insert(canonicalize(e));
  }
};

}  // namespace

std::vector<std::vector<std::uint8_t>> enumerate_canonical_alt(int n) {
  if (n < 2) throw CapExceeded("size must be at least 2");
  std::set<std::vector<std::uint8_t>> found;
  for (int top = 1; top < n; ++top) {
    PlusFirstSearch search{n, top, {}, &found, {}};
    search.run();
  }
  return {found.begin(), found.end()};
}

CensusReport census(int cap, int jobs) {
  if (cap < 2) throw CapExceeded("cap must be at least 2");
  CensusReport report;
  report.cap = cap;
  for (int n = 2; n <= cap; ++n) {
    CensusRow row;
    row.size = n;
    for (const EffectAlgebra& e : enumerate_effect_algebras(n, cap, jobs)) {
      ++row.total;
      if (induced_order(e).is_lattice)
        ++row.lattice;
      else
        ++row.non_lattice;
      const ImplicationTable t = set_implication_table(e);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          row.max_cell = std::max(row.max_cell, static_cast<int>(t.at(x, y).size()));
    }
    if (row.non_lattice > 0 && report.minimal_non_lattice_size == -1)
      report.minimal_non_lattice_size = n;
    report.rows.push_back(row);
  }
  return report;
}

std::string format_census(const CensusReport& r) {
  std::ostringstream out;
  out << "size  total  lattice  non-lattice  max |x->y|\n";
  for (const auto& row : r.rows)
    out << "  " << row.size << "     " << row.total << "      " << row.lattice << "        "
        << row.non_lattice << "            " << row.max_cell << "\n";
  if (r.minimal_non_lattice_size > 0)
    out << "minimal non-lattice size found: " << r.minimal_non_lattice_size
        << " (derived from this run)\n";
  else
    out << "no non-lattice algebra up to size " << r.cap << "\n";
  return out.str();
}

}  // namespace ea
