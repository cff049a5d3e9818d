#include "ea/semantics.hpp"

#include <sstream>

namespace ea {

std::string to_string(const Assignment& asg, const ImplicationTable& t) {
  std::string out;
  for (const auto& [var, val] : asg) {
    if (!out.empty()) out += ", ";
    out += var + "=" + t.label(val);
  }
  return out.empty() ? "(no variables)" : out;
}

ElemSet evaluate_term(const TermPtr& t, const ImplicationTable& table, const Assignment& asg) {
  switch (t->kind()) {
    case Term::Kind::Zero:
      return singleton(table.zero);
    case Term::Kind::Var: {
      auto it = asg.find(t->name());
      if (it == asg.end()) throw UnboundVariable("unbound variable '" + t->name() + "'");
      if (it->second < 0 || it->second >= table.size)
        throw MalformedTable("assignment maps '" + t->name() + "' outside the carrier");
      return singleton(it->second);
    }
    case Term::Kind::Imp: {
      const ElemSet left = evaluate_term(t->lhs(), table, asg);
      const ElemSet right = evaluate_term(t->rhs(), table, asg);
      ElemSet out;
      for (int a : left) out = set_union(out, lift_to_sets(table, a, right));
      return out;
    }
  }
  return {};
}

namespace {

std::vector<std::string> variables_of(const QuasiIdentity& q) {
  std::set<std::string> vars;
  for (const auto& id : q.premises) {
    collect_variables(id.lhs, vars);
    collect_variables(id.rhs, vars);
  }
  collect_variables(q.conclusion.lhs, vars);
  collect_variables(q.conclusion.rhs, vars);
  return {vars.begin(), vars.end()};
}

// Runs `body` on every assignment of the variables; stops early when body
// returns false. Exhaustive: n^v assignments.
template <typename Body>
bool for_each_assignment(const std::vector<std::string>& vars, int n, Body&& body) {
  Assignment asg;
  for (const auto& v : vars) asg[v] = 0;
  while (true) {
    if (!body(asg)) return false;
    std::size_t i = 0;
    for (; i < vars.size(); ++i) {
      int& slot = asg[vars[i]];
      if (++slot < n) break;
      slot = 0;
    }
    if (i == vars.size()) return true;
  }
}

bool satisfied(const ImplicationTable& t, const Identity& id, const Assignment& asg) {
  return evaluate_term(id.lhs, t, asg) == evaluate_term(id.rhs, t, asg);
}

}  // namespace

CheckOutcome check_identity(const ImplicationTable& t, const Identity& id) {
  return check_quasiidentity(t, QuasiIdentity{{}, id});
}

CheckOutcome check_quasiidentity(const ImplicationTable& t, const QuasiIdentity& q) {
  CheckOutcome out;
  const auto vars = variables_of(q);
  for_each_assignment(vars, t.size, [&](const Assignment& asg) {
    for (const auto& p : q.premises)
      if (!satisfied(t, p, asg)) return true;  // premises not met; move on
    if (satisfied(t, q.conclusion, asg)) return true;
    out.holds = false;
    out.counter = Countermodel{-1, asg};
    return false;
  });
  return out;
}

CheckOutcome semantic_consequence(const std::vector<ImplicationTable>& k,
                                  const std::vector<Identity>& sigma, const Identity& goal) {
  if (k.empty()) throw EmptyArgument("empty model class");
  CheckOutcome out;
  for (std::size_t m = 0; m < k.size(); ++m) {
    QuasiIdentity q{sigma, goal};
    CheckOutcome local = check_quasiidentity(k[m], q);
    if (!local.holds) {
      out.holds = false;
      out.counter = Countermodel{static_cast<int>(m), local.counter->assignment};
      return out;
    }
  }
  return out;
}

namespace {

SuiteEntry entry(std::string label, std::initializer_list<const char*> lines) {
  SuiteEntry e;
  e.label = std::move(label);
  for (const char* s : lines) e.items.push_back(parse_quasi_identity(s));
  return e;
}

Suite make_th10() {
  Suite s;
  s.name = "th10";
  s.entries = {
      entry("(1)", {"x -> (y -> x) == 1"}),
      entry("(2)", {"((x -> y) -> y) -> ((y -> x) -> x) == 1"}),
      entry("(3)", {"0 -> x == 1"}),
      entry("(4)", {"x -> x == 1"}),
      entry("(5)", {"x == 1, x -> y == 1 => y == 1"}),
      entry("(6)", {"x -> y == 1 => (y -> z) -> (x -> z) == 1"}),
      entry("(7)", {"x -> y == 1 => (~x -> ~y) -> (y -> x) == 1"}),
      entry("(8)", {"x -> y == 1, y -> x == 1 => x == y"}),
      entry("(9)", {"x -> ~y == 1, (~x -> y) -> ~z == 1 => "
                    "(~(~x -> y) -> z) -> (~x -> (~y -> z)) == 1"}),
  };
  return s;
}

Suite make_sec6() {
  Suite s;
  s.name = "sec6";
  s.entries = {
      entry("(1)", {"x -> (y -> x) == 1"}),
      entry("(2)", {"x -> ~~x == 1", "~~x -> x == 1"}),
      entry("(3)", {"0 -> x == 1"}),
      entry("(4)", {"x -> x == 1"}),
      entry("(5)", {"x == 1, x -> y == 1 => y == 1"}),
      entry("(6)", {"x -> y == 1 => (y -> z) -> (x -> z) == 1"}),
      entry("(7)", {"x -> y == 1 => (~x -> ~y) -> (y -> x) == 1"}),
      entry("(8)", {"x -> y == 1, y -> x == 1 => x == y"}),
      entry("(9)", {"x -> ~y == 1, (~x -> y) -> ~z == 1 => "
                    "(~(~x -> y) -> z) -> (~x -> (~y -> z)) == 1"}),
      entry("(10)", {"x -> y == 1 => (y -> x) -> x == y"}),
  };
  return s;
}

Suite make_th4() {
  Suite s;
  s.name = "th4";
  s.entries = {
      entry("(i)", {"x -> 0 == ~x"}),
      entry("(ii)", {"1 -> x == x"}),
      entry("(iii)", {"x -> (y -> x) == 1"}),
      entry("(iv)", {"(x -> y) -> y == x \\/ y"}),
      entry("(v)", {"((x -> y) -> y) -> y == x -> y"}),
      entry("(vi)", {"x -> ((x -> y) -> y) == 1"}),
      entry("(vii)", {"y -> ((x -> y) -> y) == 1"}),
      entry("(viii)", {"~y -> ~((x -> y) -> y) == x -> y"}),
  };
  return s;
}

// The shared equational/conditional core of the two axiom sets.
std::vector<SuiteEntry> order_core() {
  return {
      entry("(i)", {"0 -> x == 1", "x -> x == 1", "x -> 1 == 1"}),
      entry("(ii)", {"x -> y == 1, y -> x == 1 => x == y"}),
      entry("(iii)", {"x -> y == 1, y -> z == 1 => x -> z == 1"}),
      entry("(iv)", {"x -> y == 1 => ~y -> ~x == 1"}),
      entry("(v)", {"~~x == x"}),
  };
}

// Both directions of the partial-associativity biconditional, plus the
// equality that holds whenever either side does.
SuiteEntry associativity_entry(std::string label) {
  return entry(std::move(label),
               {"x -> ~y == 1, (~x -> y) -> ~z == 1 => y -> ~z == 1",
                "x -> ~y == 1, (~x -> y) -> ~z == 1 => x -> ~(~y -> z) == 1",
                "y -> ~z == 1, x -> ~(~y -> z) == 1 => x -> ~y == 1",
                "y -> ~z == 1, x -> ~(~y -> z) == 1 => (~x -> y) -> ~z == 1",
                "x -> ~y == 1, (~x -> y) -> ~z == 1 => ~(~x -> y) -> z == ~x -> (~y -> z)",
                "y -> ~z == 1, x -> ~(~y -> z) == 1 => ~(~x -> y) -> z == ~x -> (~y -> z)"});
}

Suite make_def31() {
  Suite s;
  s.name = "def31";
  s.entries = order_core();
  s.entries.push_back(entry("(vi)", {"x -> ((x -> y) -> y) == 1"}));
  s.entries.push_back(entry("(vii)", {"y -> ((x -> y) -> y) == 1"}));
  s.entries.push_back(
      entry("(viii)", {"x -> z == 1, y -> z == 1 => ((x -> y) -> y) -> z == 1"}));
  s.entries.push_back(entry("(ix)", {"x -> y == 1 => y -> x == ~x -> ~y"}));
  s.entries.push_back(associativity_entry("(x)"));
  s.entries.push_back(entry("(xi)", {"~y -> ~((x -> y) -> y) == x -> y"}));
  s.entries.push_back(entry("(xii)", {"x -> (y -> x) == 1"}));
  return s;
}

Suite make_def52() {
  Suite s;
  s.name = "def52";
  s.entries = order_core();
  s.entries.push_back(entry("(vi)", {"x -> y == 1 => y -> x == ~x -> ~y"}));
  s.entries.push_back(associativity_entry("(vii)"));
  s.entries.push_back(entry("(viii)", {"x -> (y -> x) == 1"}));
  return s;
}

}  // namespace

SuiteId suite_id_from_string(const std::string& name) {
  if (name == "th10") return SuiteId::TH10;
  if (name == "sec6") return SuiteId::SEC6;
  if (name == "th4") return SuiteId::TH4;
  if (name == "def31") return SuiteId::DEF31;
  if (name == "def52") return SuiteId::DEF52;
  throw UnknownSuite("unknown suite '" + name + "'");
}

const Suite& builtin_suite(SuiteId id) {
  static const Suite th10 = make_th10();
  static const Suite sec6 = make_sec6();
  static const Suite th4 = make_th4();
  static const Suite def31 = make_def31();
  static const Suite def52 = make_def52();
  switch (id) {
    case SuiteId::TH10: return th10;
    case SuiteId::SEC6: return sec6;
    case SuiteId::TH4: return th4;
    case SuiteId::DEF31: return def31;
    case SuiteId::DEF52: return def52;
  }
  throw UnknownSuite("unknown suite id");
}

SuiteOutcome run_suite(const ImplicationTable& t, const Suite& s) {
  SuiteOutcome out;
  for (const auto& e : s.entries)
    for (const auto& item : e.items) {
      CheckOutcome c = check_quasiidentity(t, item);
      if (!c.holds) {
        out.holds = false;
        out.failures.push_back({e.label, item, *c.counter});
      }
    }
  return out;
}

Identity defining_identity(const TermPtr& formula) {
  return Identity{Term::imp(formula, formula), formula};
}

Identity simplified_identity(const TermPtr& formula) {
  return Identity{formula, Term::one()};
}

}  // namespace ea
