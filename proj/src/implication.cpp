#include "ea/implication.hpp"

#include <sstream>

namespace ea {

std::string to_string(ImpKind k) {
  switch (k) {
    case ImpKind::NaturalLattice: return "natural";
    case ImpKind::Sasaki: return "sasaki";
    case ImpKind::SetValued: return "set";
  }
  return "?";
}

ImpKind imp_kind_from_string(const std::string& s) {
  if (s == "natural") return ImpKind::NaturalLattice;
  if (s == "sasaki") return ImpKind::Sasaki;
  if (s == "set") return ImpKind::SetValued;
  throw MalformedTable("unknown implication kind '" + s + "'");
}

bool ImplicationTable::single_valued() const {
  for (const auto& row : imp)
    for (const auto& cell : row)
      if (cell.size() != 1) return false;
  return true;
}

std::string ImplicationTable::label(int i) const {
  if (i >= 0 && i < static_cast<int>(names.size()) && !names[i].empty()) return names[i];
  return std::to_string(i);
}

std::string ImplicationTable::set_label(const ElemSet& s) const {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += label(s[i]);
  }
  return out + "}";
}

void check_shape(const ImplicationTable& t) {
  if (t.size <= 0) throw MalformedTable("size must be positive");
  if (t.zero < 0 || t.zero >= t.size) throw MalformedTable("zero index out of range");
  if (static_cast<int>(t.imp.size()) != t.size) throw MalformedTable("imp table has wrong height");
  for (int x = 0; x < t.size; ++x) {
    if (static_cast<int>(t.imp[x].size()) != t.size)
      throw MalformedTable("imp row " + std::to_string(x) + " has wrong length");
    for (int y = 0; y < t.size; ++y) {
      const ElemSet& cell = t.imp[x][y];
      if (cell.empty())
        throw MalformedTable("empty cell at (" + std::to_string(x) + "," + std::to_string(y) + ")");
      int prev = -1;
      for (int v : cell) {
        if (v < 0 || v >= t.size)
          throw MalformedTable("cell entry out of range at (" + std::to_string(x) + "," +
                               std::to_string(y) + ")");
        if (v <= prev)
          throw MalformedTable("cell not sorted ascending at (" + std::to_string(x) + "," +
                               std::to_string(y) + ")");
        prev = v;
      }
    }
  }
  if (!t.names.empty() && static_cast<int>(t.names.size()) != t.size)
    throw MalformedTable("names table has wrong length");
}

namespace {

ImplicationTable make_table(const EffectAlgebra& e, ImpKind kind) {
  ImplicationTable t;
  t.size = e.size;
  t.zero = e.zero;
  t.kind = kind;
  t.names = e.names;
  t.imp.assign(e.size, std::vector<ElemSet>(e.size));
  return t;
}

}  // namespace

ImplicationTable natural_implication_table(const EffectAlgebra& e) {
  const OrderStructure ord = induced_order(e);
  if (!ord.is_lattice)
    throw NotLattice("algebra is not lattice-ordered; use the set-valued implication");
  ImplicationTable t = make_table(e, ImpKind::NaturalLattice);
  for (int x = 0; x < e.size; ++x)
    for (int y = 0; y < e.size; ++y) {
      const int j = (*ord.join)[x][y];
      t.imp[x][y] = singleton(e.sum(y, e.comp[j]));  // y <= x v y makes the sum defined
    }
  return t;
}

ImplicationTable sasaki_implication_table(const EffectAlgebra& e) {
  const OrderStructure ord = induced_order(e);
  if (!ord.is_lattice)
    throw NotLattice("algebra is not lattice-ordered; the Sasaki implication needs meets");
  ImplicationTable t = make_table(e, ImpKind::Sasaki);
  for (int x = 0; x < e.size; ++x)
    for (int y = 0; y < e.size; ++y) {
      const int m = (*ord.meet)[x][y];
      t.imp[x][y] = singleton(e.sum(e.comp[x], m));
    }
  return t;
}

ImplicationTable set_implication_table(const EffectAlgebra& e) {
  const OrderStructure ord = induced_order(e);
  ImplicationTable t = make_table(e, ImpKind::SetValued);
  for (int x = 0; x < e.size; ++x)
    for (int y = 0; y < e.size; ++y) {
      ElemSet cell;
      for (int m : max_lower_cone(e, ord, e.comp[x], e.comp[y]))
        insert_sorted(cell, e.sum(y, m));  // m <= y' makes the sum defined
      t.imp[x][y] = std::move(cell);
    }
  return t;
}

ElemSet lift_to_sets(const ImplicationTable& t, int a, const ElemSet& A) {
  if (A.empty()) throw EmptyArgument("lift over the empty set");
  if (a < 0 || a >= t.size) throw MalformedTable("element index out of range");
  ElemSet out;
  for (int x : A) {
    if (x < 0 || x >= t.size) throw MalformedTable("element index out of range");
    out = set_union(out, t.at(a, x));
  }
  return out;
}

namespace {

void check_natural_laws(const EffectAlgebra& e, const ImplicationTable& t, Report& r) {
  const int n = e.size;
  const OrderStructure ord = induced_order(e);
  auto le = [&](int a, int b) { return ord.leq[a][b]; };
  auto f = [&](int x, int y) { return t.value(x, y); };
  const int one = e.one;

  auto run = [&](const std::string& tag, auto&& body) {
    const std::size_t before = r.violations.size();
    body(tag);
    if (r.violations.size() == before) r.passed.push_back(tag);
  };

  // order laws
  run("ord(i)", [&](const std::string& tag) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if ((f(a, b) == one) != le(a, b))
          r.violations.push_back({tag, {a, b}, "a<=b iff a->b=1 fails at (" + e.label(a) + "," +
                                                   e.label(b) + ")"});
  });
  run("ord(ii)", [&](const std::string& tag) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (le(a, e.comp[b]) && f(e.comp[a], b) != e.sum(a, b))
          r.violations.push_back({tag, {a, b}, "a+b = a'->b fails at (" + e.label(a) + "," +
                                                   e.label(b) + ")"});
  });
  run("ord(iii)", [&](const std::string& tag) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (le(b, a) && f(a, b) != e.sum(e.comp[a], b))
          r.violations.push_back({tag, {a, b}, "a->b = a'+b fails at (" + e.label(a) + "," +
                                                   e.label(b) + ")"});
  });
  run("ord(iv)", [&](const std::string& tag) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (le(b, a) && f(a, b) != f(e.comp[b], e.comp[a]))
          r.violations.push_back({tag, {a, b}, "a->b = b'->a' fails at (" + e.label(a) + "," +
                                                   e.label(b) + ")"});
  });
  run("ord(v)", [&](const std::string& tag) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (le(a, b) && !le(f(b, c), f(a, c)))
            r.violations.push_back({tag, {a, b, c}, "antitonicity in the antecedent fails"});
  });

  // identities of the implication reduct
  run("idn(i)", [&](const std::string& tag) {
    for (int x = 0; x < n; ++x)
      if (f(x, e.zero) != e.comp[x])
        r.violations.push_back({tag, {x}, "x->0 = x' fails at " + e.label(x)});
  });
  run("idn(ii)", [&](const std::string& tag) {
    for (int x = 0; x < n; ++x)
      if (f(one, x) != x)
        r.violations.push_back({tag, {x}, "1->x = x fails at " + e.label(x)});
  });
  run("idn(iii)", [&](const std::string& tag) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (f(x, f(y, x)) != one)
          r.violations.push_back({tag, {x, y}, "x->(y->x) = 1 fails"});
  });
  run("idn(iv)", [&](const std::string& tag) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (f(f(x, y), y) != (*ord.join)[x][y])
          r.violations.push_back({tag, {x, y}, "(x->y)->y = x v y fails"});
  });
  run("idn(v)", [&](const std::string& tag) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (f(f(f(x, y), y), y) != f(x, y))
          r.violations.push_back({tag, {x, y}, "((x->y)->y)->y = x->y fails"});
  });
  run("idn(vi)", [&](const std::string& tag) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (f(x, f(f(x, y), y)) != one)
          r.violations.push_back({tag, {x, y}, "x->((x->y)->y) = 1 fails"});
  });
  run("idn(vii)", [&](const std::string& tag) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (f(y, f(f(x, y), y)) != one)
          r.violations.push_back({tag, {x, y}, "y->((x->y)->y) = 1 fails"});
  });
  run("idn(viii)", [&](const std::string& tag) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (f(e.comp[y], e.comp[f(f(x, y), y)]) != f(x, y))
          r.violations.push_back({tag, {x, y}, "y'->((x->y)->y)' = x->y fails"});
  });
}

void check_set_laws(const EffectAlgebra& e, const ImplicationTable& t, Report& r) {
  const int n = e.size;
  const OrderStructure ord = induced_order(e);
  auto le = [&](int a, int b) { return ord.leq[a][b]; };
  const int one = e.one;

  auto run = [&](const std::string& tag, auto&& body) {
    const std::size_t before = r.violations.size();
    body(tag);
    if (r.violations.size() == before) r.passed.push_back(tag);
  };

  run("set(i)", [&](const std::string& tag) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (is_singleton(t.at(a, b), one) != le(a, b))
          r.violations.push_back({tag, {a, b}, "a<=b iff a->b={1} fails at (" + e.label(a) + "," +
                                                   e.label(b) + ")"});
  });
  run("set(ii)", [&](const std::string& tag) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (le(a, e.comp[b]) && !is_singleton(t.at(e.comp[a], b), e.sum(a, b)))
          r.violations.push_back({tag, {a, b}, "a+b = a'->b fails"});
  });
  run("set(iii)", [&](const std::string& tag) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (le(b, a) && !is_singleton(t.at(a, b), e.sum(e.comp[a], b)))
          r.violations.push_back({tag, {a, b}, "a->b = a'+b fails"});
  });
  run("set(iv)", [&](const std::string& tag) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (le(b, a) && t.at(a, b) != t.at(e.comp[b], e.comp[a]))
          r.violations.push_back({tag, {a, b}, "a->b = b'->a' fails"});
  });
  run("set(v)", [&](const std::string& tag) {
    for (int a = 0; a < n; ++a)
      if (!is_singleton(t.at(a, e.zero), e.comp[a]))
        r.violations.push_back({tag, {a}, "a->0 = a' fails at " + e.label(a)});
  });
  run("set(vi)", [&](const std::string& tag) {
    for (int a = 0; a < n; ++a)
      if (!is_singleton(t.at(one, a), a))
        r.violations.push_back({tag, {a}, "1->a = a fails at " + e.label(a)});
  });
  run("set(vii)", [&](const std::string& tag) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const ElemSet maxima = max_lower_cone(e, ord, e.comp[a], e.comp[b]);
        if (lift_to_sets(t, e.comp[b], maxima) != t.at(a, b))
          r.violations.push_back({tag, {a, b}, "b'->Max L(a',b') = a->b fails at (" + e.label(a) +
                                                   "," + e.label(b) + ")"});
      }
  });
}

}  // namespace

Report check_implication_laws(const EffectAlgebra& e, const ImplicationTable& t) {
  if (t.size != e.size) throw MalformedTable("table size does not match the algebra");
  Report r;
  switch (t.kind) {
    case ImpKind::NaturalLattice:
      r.subject = "implication laws (natural)";
      check_natural_laws(e, t, r);
      break;
    case ImpKind::SetValued:
      r.subject = "implication laws (set-valued)";
      check_set_laws(e, t, r);
      break;
    case ImpKind::Sasaki:
      throw KindMismatch("no law suite is attached to Sasaki tables");
  }
  return r;
}

bool same_cells(const ImplicationTable& a, const ImplicationTable& b) {
  if (a.size != b.size || a.zero != b.zero) return false;
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < a.size; ++y)
      if (a.imp[x][y] != b.imp[x][y]) return false;
  return true;
}

}  // namespace ea
