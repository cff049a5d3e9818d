#include "ea/effect_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ea {

std::string EffectAlgebra::label(int i) const {
  if (i >= 0 && i < static_cast<int>(names.size()) && !names[i].empty()) return names[i];
  return std::to_string(i);
}

std::string format_report(const Report& r) {
  std::ostringstream out;
  out << r.subject << ": " << (r.ok() ? "pass" : "FAIL") << "\n";
  for (const auto& tag : r.passed) out << "  " << tag << ": pass\n";
  for (const auto& v : r.violations) out << "  " << v.tag << ": FAIL  " << v.detail << "\n";
  return out.str();
}

void check_shape(const EffectAlgebra& e) {
  if (e.size <= 0) throw MalformedTable("size must be positive");
  auto in_range = [&](int v) { return v >= 0 && v < e.size; };
  if (!in_range(e.zero)) throw MalformedTable("zero index out of range");
  if (!in_range(e.one)) throw MalformedTable("one index out of range");
  if (static_cast<int>(e.comp.size()) != e.size)
    throw MalformedTable("comp table has wrong length");
  for (int x = 0; x < e.size; ++x)
    if (!in_range(e.comp[x]))
      throw MalformedTable("comp entry out of range at " + std::to_string(x));
  if (static_cast<int>(e.plus.size()) != e.size) throw MalformedTable("plus table has wrong height");
  for (int x = 0; x < e.size; ++x) {
    if (static_cast<int>(e.plus[x].size()) != e.size)
      throw MalformedTable("plus row " + std::to_string(x) + " has wrong length");
    for (int y = 0; y < e.size; ++y)
      if (e.plus[x][y] && !in_range(*e.plus[x][y]))
        throw MalformedTable("plus entry out of range at (" + std::to_string(x) + "," +
                             std::to_string(y) + ")");
  }
  if (!e.names.empty() && static_cast<int>(e.names.size()) != e.size)
    throw MalformedTable("names table has wrong length");
}

namespace {

std::string pair_str(const EffectAlgebra& e, int x, int y) {
  return "(" + e.label(x) + "," + e.label(y) + ")";
}

}  // namespace

Report validate_effect_axioms(const EffectAlgebra& e) {
  check_shape(e);
  Report r;
  r.subject = "effect algebra axioms";
  const int n = e.size;

  bool degenerate_ok = e.zero != e.one;
  if (!degenerate_ok) {
    r.violations.push_back({"degenerate", {e.zero}, "zero and one coincide"});
  } else {
    r.passed.push_back("degenerate");
  }

  bool e1 = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!e.defined(x, y)) continue;
      if (!e.defined(y, x) || e.sum(y, x) != e.sum(x, y)) {
        e1 = false;
        r.violations.push_back({"E1", {x, y},
                                "sum " + pair_str(e, x, y) + " defined but not mirrored"});
      }
    }
  if (e1) r.passed.push_back("E1");

  // A composite sum is defined only if both nested sums are.
  bool e2 = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        std::optional<int> left, right;
        if (e.defined(x, y) && e.defined(e.sum(x, y), z)) left = e.sum(e.sum(x, y), z);
        if (e.defined(y, z) && e.defined(x, e.sum(y, z))) right = e.sum(x, e.sum(y, z));
        if (left.has_value() != right.has_value() || (left && *left != *right)) {
          e2 = false;
          r.violations.push_back(
              {"E2",
               {x, y, z},
               "(" + e.label(x) + "+" + e.label(y) + ")+" + e.label(z) + " vs " + e.label(x) +
                   "+(" + e.label(y) + "+" + e.label(z) + ") disagree"});
        }
      }
  if (e2) r.passed.push_back("E2");

  bool e3 = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const bool sums_to_one = e.defined(x, y) && e.sum(x, y) == e.one;
      const bool is_comp = y == e.comp[x];
      if (sums_to_one != is_comp) {
        e3 = false;
        r.violations.push_back(
            {"E3", {x, y},
             sums_to_one ? "sum " + pair_str(e, x, y) + " is one but " + e.label(y) +
                               " is not the complement of " + e.label(x)
                         : e.label(y) + " is the complement of " + e.label(x) +
                               " but their sum is not one"});
      }
    }
  if (e3) r.passed.push_back("E3");

  bool e4 = true;
  for (int x = 0; x < n; ++x) {
    if (e.defined(e.one, x) && x != e.zero) {
      e4 = false;
      r.violations.push_back({"E4", {x}, "one + " + e.label(x) + " is defined"});
    }
  }
  if (e4) r.passed.push_back("E4");

  return r;
}

OrderStructure induced_order(const EffectAlgebra& e) {
  const int n = e.size;
  OrderStructure ord;
  ord.size = n;
  ord.leq.assign(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z)
      if (e.defined(x, z)) ord.leq[x][e.sum(x, z)] = true;

  // Least upper bound = the unique minimal upper bound (finite poset).
  Grid<int> join(n, std::vector<int>(n, -1)), meet(n, std::vector<int>(n, -1));
  bool lattice = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      ElemSet ubs, lbs;
      for (int u = 0; u < n; ++u) {
        if (ord.leq[x][u] && ord.leq[y][u]) ubs.push_back(u);
        if (ord.leq[u][x] && ord.leq[u][y]) lbs.push_back(u);
      }
      ElemSet min_ubs, max_lbs;
      for (int u : ubs) {
        bool minimal = true;
        for (int v : ubs)
          if (v != u && ord.leq[v][u]) minimal = false;
        if (minimal) min_ubs.push_back(u);
      }
      for (int u : lbs) {
        bool maximal = true;
        for (int v : lbs)
          if (v != u && ord.leq[u][v]) maximal = false;
        if (maximal) max_lbs.push_back(u);
      }
      if (min_ubs.size() == 1)
        join[x][y] = min_ubs.front();
      else
        lattice = false;
      if (max_lbs.size() == 1)
        meet[x][y] = max_lbs.front();
      else
        lattice = false;
    }
  ord.is_lattice = lattice;
  if (lattice) {
    ord.join = std::move(join);
    ord.meet = std::move(meet);
  }
  return ord;
}

ElemSet max_lower_cone(const EffectAlgebra& e, const OrderStructure& ord, int x, int y) {
  ElemSet cone;
  for (int z = 0; z < e.size; ++z)
    if (ord.leq[z][x] && ord.leq[z][y]) cone.push_back(z);
  ElemSet out;
  for (int z : cone) {
    bool maximal = true;
    for (int w : cone)
      if (w != z && ord.leq[z][w]) maximal = false;
    if (maximal) out.push_back(z);
  }
  return out;
}

ElemSet max_lower_cone(const EffectAlgebra& e, int x, int y) {
  return max_lower_cone(e, induced_order(e), x, y);
}

Report check_basic_laws(const EffectAlgebra& e) {
  Report r;
  r.subject = "derived laws";
  const int n = e.size;
  const OrderStructure ord = induced_order(e);
  auto le = [&](int a, int b) { return ord.leq[a][b]; };

  auto run = [&](const char* tag, auto&& body) {
    const std::size_t before = r.violations.size();
    body();
    if (r.violations.size() == before) r.passed.push_back(tag);
  };

  run("(order)", [&] {  // the induced relation is a bounded partial order
    for (int a = 0; a < n; ++a) {
      if (!le(a, a)) r.violations.push_back({"(order)", {a}, "not reflexive at " + e.label(a)});
      if (!le(e.zero, a) || !le(a, e.one))
        r.violations.push_back({"(order)", {a}, "bounds fail at " + e.label(a)});
      for (int b = 0; b < n; ++b) {
        if (a != b && le(a, b) && le(b, a))
          r.violations.push_back({"(order)", {a, b}, "not antisymmetric at " + pair_str(e, a, b)});
        for (int c = 0; c < n; ++c)
          if (le(a, b) && le(b, c) && !le(a, c))
            r.violations.push_back({"(order)", {a, b, c}, "not transitive"});
      }
    }
  });
  run("(i)", [&] {  // complement is antitone
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (le(a, b) && !le(e.comp[b], e.comp[a]))
          r.violations.push_back({"(i)", {a, b}, "complement not antitone at " + pair_str(e, a, b)});
  });
  run("(ii)", [&] {  // involution
    for (int a = 0; a < n; ++a)
      if (e.comp[e.comp[a]] != a)
        r.violations.push_back({"(ii)", {a}, "complement not involutive at " + e.label(a)});
  });
  run("(iii)", [&] {  // a+b defined iff a <= b'
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (e.defined(a, b) != le(a, e.comp[b]))
          r.violations.push_back(
              {"(iii)", {a, b}, "definedness criterion fails at " + pair_str(e, a, b)});
  });
  run("(iv)", [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          if (!le(a, b) || !e.defined(b, c)) continue;
          if (!e.defined(a, c) || !le(e.sum(a, c), e.sum(b, c)))
            r.violations.push_back({"(iv)", {a, b, c}, "monotonicity of + fails"});
        }
  });
  run("(v)", [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          if (!e.defined(a, c) || !e.defined(b, c)) continue;
          if (le(e.sum(a, c), e.sum(b, c)) != le(a, b))
            r.violations.push_back({"(v)", {a, b, c}, "cancellation fails"});
        }
  });
  run("(vi)", [&] {  // a <= b implies a+(a+b')' = b and (b'+(b'+a)')' = a
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (!le(a, b)) continue;
        bool good = false;
        if (e.defined(a, e.comp[b])) {
          const int t = e.comp[e.sum(a, e.comp[b])];
          good = e.defined(a, t) && e.sum(a, t) == b;
        }
        if (!good) {
          r.violations.push_back({"(vi)", {a, b}, "a+(a+b')' = b fails at " + pair_str(e, a, b)});
          continue;
        }
        const int bp = e.comp[b];
        bool good2 = false;
        if (e.defined(bp, a)) {
          const int u = e.comp[e.sum(bp, a)];
          good2 = e.defined(bp, u) && e.comp[e.sum(bp, u)] == a;
        }
        if (!good2)
          r.violations.push_back(
              {"(vi)", {a, b}, "(b'+(b'+a)')' = a fails at " + pair_str(e, a, b)});
      }
  });
  run("(vii)", [&] {
    for (int a = 0; a < n; ++a)
      if (!e.defined(a, e.zero) || e.sum(a, e.zero) != a)
        r.violations.push_back({"(vii)", {a}, "a+0 = a fails at " + e.label(a)});
  });
  run("(viii)", [&] {
    if (e.comp[e.zero] != e.one)
      r.violations.push_back({"(viii)", {e.zero}, "complement of zero is not one"});
    if (e.comp[e.one] != e.zero)
      r.violations.push_back({"(viii)", {e.one}, "complement of one is not zero"});
  });

  return r;
}

namespace {

// Per-element signature preserved by any isomorphism.
struct Signature {
  bool self_complement;
  int defined_count;
  bool operator==(const Signature&) const = default;
};

Signature signature_of(const EffectAlgebra& e, int x) {
  int cnt = 0;
  for (int y = 0; y < e.size; ++y)
    if (e.defined(x, y)) ++cnt;
  return {e.comp[x] == x, cnt};
}

bool consistent(const EffectAlgebra& a, const EffectAlgebra& b, const std::vector<int>& map,
                int just_assigned) {
  const int n = a.size;
  const int x = just_assigned;
  // complement must commute with the map once both endpoints are placed
  if (map[a.comp[x]] != -1 && map[a.comp[x]] != b.comp[map[x]]) return false;
  for (int y = 0; y < n; ++y) {
    if (map[y] == -1) continue;
    const bool da = a.defined(x, y);
    if (da != b.defined(map[x], map[y])) return false;
    if (da) {
      const int s = a.sum(x, y);
      if (map[s] != -1 && map[s] != b.sum(map[x], map[y])) return false;
    }
    const bool dya = a.defined(y, x);
    if (dya != b.defined(map[y], map[x])) return false;
    if (dya) {
      const int s = a.sum(y, x);
      if (map[s] != -1 && map[s] != b.sum(map[y], map[x])) return false;
    }
  }
  return true;
}

bool full_check(const EffectAlgebra& a, const EffectAlgebra& b, const std::vector<int>& map) {
  const int n = a.size;
  for (int x = 0; x < n; ++x) {
    if (b.comp[map[x]] != map[a.comp[x]]) return false;
    for (int y = 0; y < n; ++y) {
      if (a.defined(x, y) != b.defined(map[x], map[y])) return false;
      if (a.defined(x, y) && map[a.sum(x, y)] != b.sum(map[x], map[y])) return false;
    }
  }
  return true;
}

bool extend(const EffectAlgebra& a, const EffectAlgebra& b,
            const std::vector<Signature>& sig_a, const std::vector<Signature>& sig_b,
            std::vector<int>& map, std::vector<bool>& used, int next) {
  const int n = a.size;
  while (next < n && map[next] != -1) ++next;
  if (next == n) return full_check(a, b, map);
  for (int img = 0; img < n; ++img) {
    if (used[img] || !(sig_a[next] == sig_b[img])) continue;
    map[next] = img;
    used[img] = true;
    if (consistent(a, b, map, next) && extend(a, b, sig_a, sig_b, map, used, next + 1))
      return true;
    map[next] = -1;
    used[img] = false;
  }
  return false;
}

}  // namespace

std::optional<Isomorphism> find_isomorphism(const EffectAlgebra& a, const EffectAlgebra& b) {
  if (a.size != b.size) throw SizeMismatch("carriers have different sizes");
  const int n = a.size;
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  map[a.zero] = b.zero;
  used[b.zero] = true;
  if (a.one != a.zero) {
    if (used[b.one]) return std::nullopt;
    map[a.one] = b.one;
    used[b.one] = true;
  }
  std::vector<Signature> sig_a(n), sig_b(n);
  for (int i = 0; i < n; ++i) {
    sig_a[i] = signature_of(a, i);
    sig_b[i] = signature_of(b, i);
  }
  if (!(sig_a[a.zero] == sig_b[b.zero]) || !(sig_a[a.one] == sig_b[b.one])) return std::nullopt;
  if (!extend(a, b, sig_a, sig_b, map, used, 0)) return std::nullopt;
  return Isomorphism{std::move(map)};
}

bool same_tables(const EffectAlgebra& a, const EffectAlgebra& b) {
  if (a.size != b.size || a.zero != b.zero || a.one != b.one) return false;
  if (a.comp != b.comp) return false;
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < a.size; ++y)
      if (a.plus[x][y] != b.plus[x][y]) return false;
  return true;
}

}  // namespace ea
