#include "ea/proof.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ea {

std::string to_string(System s) { return s == System::A ? "A" : "B"; }

std::string to_string(SchemaId s) {
  switch (s) {
    case SchemaId::A1: return "A1";
    case SchemaId::A2: return "A2";
    case SchemaId::A3: return "A3";
    case SchemaId::B1: return "B1";
    case SchemaId::B2: return "B2";
    case SchemaId::B3: return "B3";
    case SchemaId::B4: return "B4";
  }
  return "?";
}

std::string to_string(RuleId r) {
  switch (r) {
    case RuleId::MP: return "MP";
    case RuleId::Sf: return "Sf";
    case RuleId::WPf: return "WPf";
    case RuleId::R1: return "R1";
    case RuleId::R2: return "R2";
  }
  return "?";
}

System system_from_string(const std::string& s) {
  if (s == "A") return System::A;
  if (s == "B") return System::B;
  throw MalformedTable("unknown system '" + s + "'");
}

SchemaId schema_from_string(const std::string& s) {
  if (s == "A1") return SchemaId::A1;
  if (s == "A2") return SchemaId::A2;
  if (s == "A3") return SchemaId::A3;
  if (s == "B1") return SchemaId::B1;
  if (s == "B2") return SchemaId::B2;
  if (s == "B3") return SchemaId::B3;
  if (s == "B4") return SchemaId::B4;
  throw MalformedTable("unknown axiom schema '" + s + "'");
}

RuleId rule_from_string(const std::string& s) {
  if (s == "MP") return RuleId::MP;
  if (s == "Sf") return RuleId::Sf;
  if (s == "WPf") return RuleId::WPf;
  if (s == "R1") return RuleId::R1;
  if (s == "R2") return RuleId::R2;
  throw MalformedTable("unknown rule '" + s + "'");
}

bool schema_in_system(SchemaId schema, System system) {
  switch (schema) {
    case SchemaId::A1:
    case SchemaId::A2:
    case SchemaId::A3: return system == System::A;
    case SchemaId::B1:
    case SchemaId::B2:
    case SchemaId::B3:
    case SchemaId::B4: return system == System::B;
  }
  return false;
}

namespace {

TermPtr pt(const char* s) { return parse_term(s); }

// Axiom schemas over the schema variables phi/psi; the biconditional schema
// lists both directions.
const std::vector<TermPtr>& schema_patterns(SchemaId id) {
  static const std::vector<TermPtr> a1 = {pt("phi -> (psi -> phi)")};
  static const std::vector<TermPtr> a2 = {pt("((phi -> psi) -> psi) -> ((psi -> phi) -> phi)")};
  static const std::vector<TermPtr> a3 = {pt("0 -> phi")};
  static const std::vector<TermPtr> b2 = {pt("phi -> phi")};
  static const std::vector<TermPtr> b3 = {pt("phi -> ~~phi"), pt("~~phi -> phi")};
  switch (id) {
    case SchemaId::A1:
    case SchemaId::B1: return a1;
    case SchemaId::A2: return a2;
    case SchemaId::A3:
    case SchemaId::B4: return a3;
    case SchemaId::B2: return b2;
    case SchemaId::B3: return b3;
  }
  return a1;
}

struct RuleSchema {
  std::vector<TermPtr> premises;
  TermPtr conclusion;
};

const RuleSchema& rule_schema(RuleId id) {
  static const RuleSchema mp = {{pt("phi"), pt("phi -> psi")}, pt("psi")};
  static const RuleSchema sf = {{pt("phi -> psi")}, pt("(psi -> chi) -> (phi -> chi)")};
  static const RuleSchema wpf = {{pt("phi -> psi"), pt("psi -> phi")},
                                 pt("(chi -> phi) -> (chi -> psi)")};
  static const RuleSchema r1 = {{pt("phi -> psi")}, pt("(~phi -> ~psi) -> (psi -> phi)")};
  static const RuleSchema r2 = {{pt("phi -> ~psi"), pt("(~phi -> psi) -> ~chi")},
                                pt("(~(~phi -> psi) -> chi) -> (~phi -> (~psi -> chi))")};
  switch (id) {
    case RuleId::MP: return mp;
    case RuleId::Sf: return sf;
    case RuleId::WPf: return wpf;
    case RuleId::R1: return r1;
    case RuleId::R2: return r2;
  }
  return mp;
}

}  // namespace

std::vector<TermPtr> instantiate_schema(SchemaId schema, const Subst& subst) {
  std::vector<TermPtr> out;
  for (const auto& pattern : schema_patterns(schema))
    out.push_back(substitute(pattern, subst, /*require_total=*/true));
  return out;
}

std::vector<TermPtr> rule_premises(RuleId rule, const Subst& subst) {
  std::vector<TermPtr> out;
  for (const auto& pattern : rule_schema(rule).premises)
    out.push_back(substitute(pattern, subst, /*require_total=*/true));
  return out;
}

TermPtr apply_rule(RuleId rule, const std::vector<TermPtr>& premises, const Subst& subst) {
  const RuleSchema& schema = rule_schema(rule);
  if (premises.size() != schema.premises.size())
    throw PremiseMismatch("rule " + to_string(rule) + " takes " +
                              std::to_string(schema.premises.size()) + " premises, got " +
                              std::to_string(premises.size()),
                          static_cast<int>(premises.size()));
  for (std::size_t i = 0; i < premises.size(); ++i) {
    TermPtr expected = substitute(schema.premises[i], subst, /*require_total=*/true);
    if (!equal(expected, premises[i]))
      throw PremiseMismatch("premise " + std::to_string(i) + " of " + to_string(rule) +
                                " does not match its schema: expected " + to_string(expected) +
                                ", got " + to_string(premises[i]),
                            static_cast<int>(i));
  }
  return substitute(schema.conclusion, subst, /*require_total=*/true);
}

namespace {

struct LemmaChecker {
  const FixtureRegistry* registry;
  std::map<std::string, bool> verified;  // memo; false marks "in progress"

  // Returns the fixture when it exists, is hypothesis-free and verifies.
  const Derivation* resolve(const std::string& id, std::string& why) {
    if (!registry) {
      why = "no fixture registry supplied";
      return nullptr;
    }
    auto it = registry->find(id);
    if (it == registry->end()) {
      why = "unknown fixture '" + id + "'";
      return nullptr;
    }
    if (!it->second.hypotheses.empty()) {
      why = "fixture '" + id + "' has hypotheses and cannot be used as a lemma";
      return nullptr;
    }
    auto memo = verified.find(id);
    if (memo != verified.end()) {
      if (!memo->second) {
        why = "cyclic lemma reference through '" + id + "'";
        return nullptr;
      }
      return &it->second;
    }
    verified[id] = false;
    DerivationCheck sub = check_derivation_impl(it->second);
    if (!sub.verified) {
      why = "fixture '" + id + "' does not verify: line " + std::to_string(sub.line) + ": " +
            sub.reason;
      return nullptr;
    }
    verified[id] = true;
    return &it->second;
  }

  DerivationCheck check_derivation_impl(const Derivation& d) {
    if (d.lines.empty()) return {false, -1, "empty derivation"};
    if (!d.conclusion) return {false, -1, "missing conclusion"};
    for (int ln = 0; ln < static_cast<int>(d.lines.size()); ++ln) {
      const ProofLine& line = d.lines[ln];
      if (!line.formula) return {false, ln, "missing formula"};
      std::string reason;
      if (!check_line(d, ln, reason)) return {false, ln, reason};
    }
    if (!equal(d.lines.back().formula, d.conclusion))
      return {false, static_cast<int>(d.lines.size()) - 1,
              "conclusion does not match the last line"};
    return {};
  }

  bool check_line(const Derivation& d, int ln, std::string& reason) {
    const ProofLine& line = d.lines[ln];
    return std::visit(
        [&](const auto& just) -> bool {
          using T = std::decay_t<decltype(just)>;
          if constexpr (std::is_same_v<T, HypothesisRef>) {
            if (just.index < 0 || just.index >= static_cast<int>(d.hypotheses.size())) {
              reason = "hypothesis index out of range";
              return false;
            }
            if (!equal(line.formula, d.hypotheses[just.index])) {
              reason = "formula differs from hypothesis " + std::to_string(just.index);
              return false;
            }
            return true;
          } else if constexpr (std::is_same_v<T, AxiomStep>) {
            if (!schema_in_system(just.schema, d.system)) {
              reason = "schema " + to_string(just.schema) + " is not part of system " +
                       to_string(d.system);
              return false;
            }
            std::vector<TermPtr> instances;
            try {
              instances = instantiate_schema(just.schema, just.subst);
            } catch (const MissingSchemaVariable& e) {
              reason = e.what();
              return false;
            }
            for (const auto& inst : instances)
              if (equal(inst, line.formula)) return true;
            reason = "formula is not the stated instance of " + to_string(just.schema);
            return false;
          } else if constexpr (std::is_same_v<T, RuleStep>) {
            std::vector<TermPtr> premise_formulas;
            for (int p : just.premises) {
              if (p < 0 || p >= ln) {
                reason = "premise line " + std::to_string(p) + " does not precede line " +
                         std::to_string(ln);
                return false;
              }
              premise_formulas.push_back(d.lines[p].formula);
            }
            try {
              TermPtr concl = apply_rule(just.rule, premise_formulas, just.subst);
              if (!equal(concl, line.formula)) {
                reason = "formula differs from the rule conclusion " + to_string(concl);
                return false;
              }
            } catch (const Error& e) {
              reason = e.what();
              return false;
            }
            return true;
          } else {
            static_assert(std::is_same_v<T, LemmaStep>);
            std::string why;
            const Derivation* fixture = resolve(just.fixture, why);
            if (!fixture) {
              reason = why;
              return false;
            }
            if (fixture->system != d.system) {
              reason = "fixture '" + just.fixture + "' belongs to system " +
                       to_string(fixture->system);
              return false;
            }
            TermPtr instance = substitute(fixture->conclusion, just.subst);
            if (!equal(instance, line.formula)) {
              reason = "formula differs from the instantiated lemma " + to_string(instance);
              return false;
            }
            return true;
          }
        },
        line.just);
  }
};

}  // namespace

DerivationCheck check_derivation(const Derivation& d, const FixtureRegistry* registry) {
  LemmaChecker checker{registry, {}};
  return checker.check_derivation_impl(d);
}

Report soundness_audit(const Derivation& d, const std::vector<ImplicationTable>& models) {
  Report r;
  r.subject = "soundness audit";
  std::set<std::string> var_set;
  for (const auto& h : d.hypotheses) collect_variables(h, var_set);
  for (const auto& line : d.lines) collect_variables(line.formula, var_set);
  const std::vector<std::string> vars(var_set.begin(), var_set.end());

  bool all_ok = true;
  for (std::size_t m = 0; m < models.size(); ++m) {
    const ImplicationTable& t = models[m];
    const ElemSet unit = singleton(t.one());
    Assignment asg;
    for (const auto& v : vars) asg[v] = 0;
    bool done = false;
    while (!done) {
      bool hyps_hold = true;
      for (const auto& h : d.hypotheses)
        if (evaluate_term(h, t, asg) != unit) {
          hyps_hold = false;
          break;
        }
      if (hyps_hold) {
        for (int ln = 0; ln < static_cast<int>(d.lines.size()); ++ln) {
          if (evaluate_term(d.lines[ln].formula, t, asg) != unit) {
            all_ok = false;
            r.violations.push_back({"line " + std::to_string(ln),
                                    {},
                                    "model " + std::to_string(m) + ", assignment " +
                                        to_string(asg, t) + ": line evaluates to " +
                                        t.set_label(evaluate_term(d.lines[ln].formula, t, asg))});
            break;  // first counterexample per model is enough
          }
        }
        if (!all_ok) break;
      }
      std::size_t i = 0;
      for (; i < vars.size(); ++i) {
        int& slot = asg[vars[i]];
        if (++slot < t.size) break;
        slot = 0;
      }
      done = i == vars.size();
    }
    if (!all_ok) break;
  }
  if (all_ok) r.passed.push_back("all lines evaluate to the unit");
  return r;
}

namespace {

// One-sided unification: binds the pattern's variables to subtrees of the
// ground term.
bool match(const TermPtr& pattern, const TermPtr& ground, Subst& binding) {
  switch (pattern->kind()) {
    case Term::Kind::Zero: return ground->is_zero();
    case Term::Kind::Var: {
      auto it = binding.find(pattern->name());
      if (it != binding.end()) return equal(it->second, ground);
      binding[pattern->name()] = ground;
      return true;
    }
    case Term::Kind::Imp:
      return ground->kind() == Term::Kind::Imp && match(pattern->lhs(), ground->lhs(), binding) &&
             match(pattern->rhs(), ground->rhs(), binding);
  }
  return false;
}

struct Searcher {
  System system;
  const std::vector<TermPtr>& hypotheses;
  SearchLimits limits;
  std::vector<TermPtr> pool;                     // cut candidates for detachment
  std::map<std::string, int> failed_at_budget;   // formula -> largest budget that failed

  // A proved subgoal: its own lines, to be merged into the final derivation.
  struct Sub {
    std::vector<ProofLine> lines;
    int cost() const { return static_cast<int>(lines.size()); }
  };

  std::vector<SchemaId> schemas() const {
    if (system == System::A) return {SchemaId::A1, SchemaId::A2, SchemaId::A3};
    return {SchemaId::B1, SchemaId::B2, SchemaId::B3, SchemaId::B4};
  }

  void build_pool(const TermPtr& goal) {
    std::vector<TermPtr> seeds = hypotheses;
    seeds.push_back(goal);
    seeds.push_back(Term::one());
    std::set<std::string> seen;
    // subformula closure, deterministic order: smaller first, then lexicographic
    std::vector<TermPtr> all;
    auto add = [&](const TermPtr& t, auto&& self) -> void {
      if (term_depth(t) > limits.max_depth) return;
      if (!seen.insert(to_string(t)).second) return;
      all.push_back(t);
      if (t->kind() == Term::Kind::Imp) {
        self(t->lhs(), self);
        self(t->rhs(), self);
      }
    };
    for (const auto& s : seeds) add(s, add);
    std::sort(all.begin(), all.end(), [](const TermPtr& a, const TermPtr& b) {
      const int sa = term_size(a), sb = term_size(b);
      if (sa != sb) return sa < sb;
      return compare(a, b) < 0;
    });
    pool = std::move(all);
  }

  // Merges sub-lines, dropping duplicates of formulas already present.
  static void merge(std::vector<ProofLine>& lines, const std::vector<ProofLine>& add) {
    for (const auto& line : add) {
      bool present = false;
      for (const auto& have : lines)
        if (equal(have.formula, line.formula)) {
          present = true;
          break;
        }
      if (!present) lines.push_back(line);
    }
  }

  static int index_of(const std::vector<ProofLine>& lines, const TermPtr& f) {
    for (int i = 0; i < static_cast<int>(lines.size()); ++i)
      if (equal(lines[i].formula, f)) return i;
    return -1;
  }

  // Rebases premise indices after a merge. Justifications store premise
  // formulas implicitly via indices, so indices are recomputed from formulas.
  static void reindex(std::vector<ProofLine>& lines) {
    for (auto& line : lines) {
      if (auto* rule = std::get_if<RuleStep>(&line.just)) {
        std::vector<TermPtr> premise_formulas = rule_premises(rule->rule, rule->subst);
        rule->premises.clear();
        for (const auto& f : premise_formulas) rule->premises.push_back(index_of(lines, f));
      }
    }
  }

  std::optional<Sub> prove(const TermPtr& goal, int budget) {
    if (budget <= 0) return std::nullopt;
    if (term_depth(goal) > limits.max_depth + 2) return std::nullopt;
    const std::string key = to_string(goal);
    auto memo = failed_at_budget.find(key);
    if (memo != failed_at_budget.end() && memo->second >= budget) return std::nullopt;

    // hypothesis
    for (int h = 0; h < static_cast<int>(hypotheses.size()); ++h)
      if (equal(hypotheses[h], goal)) {
        Sub sub;
        sub.lines.push_back({goal, HypothesisRef{h}});
        return sub;
      }

    // axiom instance
    for (SchemaId schema : schemas()) {
      for (const auto& pattern : schema_patterns(schema)) {
        Subst binding;
        if (match(pattern, goal, binding)) {
          bool shallow = true;
          for (const auto& [_, t] : binding)
            if (term_depth(t) > limits.max_depth) shallow = false;
          if (!shallow) continue;
          Sub sub;
          sub.lines.push_back({goal, AxiomStep{schema, binding}});
          return sub;
        }
      }
    }

    // rule conclusions; every rule but detachment is fully determined by the
    // goal, detachment ranges its cut formula over the pool
    for (RuleId rule : {RuleId::Sf, RuleId::WPf, RuleId::R1, RuleId::R2}) {
      Subst binding;
      if (!match(rule_schema(rule).conclusion, goal, binding)) continue;
      bool shallow = true;
      for (const auto& [_, t] : binding)
        if (term_depth(t) > limits.max_depth) shallow = false;
      if (!shallow) continue;
      if (auto sub = prove_via_rule(rule, binding, goal, budget)) return sub;
    }
    {
      for (const auto& cut : pool) {
        Subst binding{{"phi", cut}, {"psi", goal}};
        if (auto sub = prove_via_rule(RuleId::MP, binding, goal, budget)) return sub;
      }
    }

    if (memo == failed_at_budget.end())
      failed_at_budget[key] = budget;
    else
      memo->second = std::max(memo->second, budget);
    return std::nullopt;
  }

  std::optional<Sub> prove_via_rule(RuleId rule, const Subst& binding, const TermPtr& goal,
                                    int budget) {
    std::vector<TermPtr> premises = rule_premises(rule, binding);
    Sub acc;
    int remaining = budget - 1;
    for (const auto& premise : premises) {
      if (index_of(acc.lines, premise) >= 0) continue;  // already proved alongside
      auto sub = prove(premise, remaining);
      if (!sub) return std::nullopt;
      merge(acc.lines, sub->lines);
      remaining = budget - 1 - acc.cost();
      if (remaining < 0) return std::nullopt;
    }
    std::vector<int> premise_indices;
    for (const auto& premise : premises) premise_indices.push_back(index_of(acc.lines, premise));
    acc.lines.push_back({goal, RuleStep{rule, premise_indices, binding}});
    return acc;
  }
};

}  // namespace

std::optional<Derivation> search_proof(System system, const std::vector<TermPtr>& hypotheses,
                                       const TermPtr& goal, const SearchLimits& limits) {
  Searcher searcher{system, hypotheses, limits, {}, {}};
  searcher.build_pool(goal);
  for (int budget = 1; budget <= limits.max_lines; ++budget) {
    searcher.failed_at_budget.clear();
    auto sub = searcher.prove(goal, budget);
    if (!sub) continue;
    Searcher::reindex(sub->lines);
    Derivation d;
    d.system = system;
    d.hypotheses = hypotheses;
    d.lines = std::move(sub->lines);
    d.conclusion = goal;
    return d;
  }
  return std::nullopt;
}

std::string format_derivation(const Derivation& d) {
  std::ostringstream out;
  out << "system " << to_string(d.system) << "\n";
  for (std::size_t i = 0; i < d.hypotheses.size(); ++i)
    out << "hypothesis " << i << ": " << to_string(d.hypotheses[i]) << "\n";
  for (std::size_t i = 0; i < d.lines.size(); ++i) {
    out << i << ". " << to_string(d.lines[i].formula) << "   [";
    std::visit(
        [&](const auto& just) {
          using T = std::decay_t<decltype(just)>;
          if constexpr (std::is_same_v<T, HypothesisRef>) {
            out << "hyp " << just.index;
          } else if constexpr (std::is_same_v<T, AxiomStep>) {
            out << to_string(just.schema);
          } else if constexpr (std::is_same_v<T, RuleStep>) {
            out << to_string(just.rule) << " ";
            for (std::size_t p = 0; p < just.premises.size(); ++p) {
              if (p) out << ",";
              out << just.premises[p];
            }
          } else {
            out << "lemma " << just.fixture;
          }
        },
        d.lines[i].just);
    out << "]\n";
  }
  return out.str();
}

}  // namespace ea
