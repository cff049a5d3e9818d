#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ea/semantics.hpp"
#include "ea/term.hpp"

namespace ea {

enum class System { A, B };
enum class SchemaId { A1, A2, A3, B1, B2, B3, B4 };
enum class RuleId { MP, Sf, WPf, R1, R2 };

std::string to_string(System s);
std::string to_string(SchemaId s);
std::string to_string(RuleId r);
System system_from_string(const std::string& s);
SchemaId schema_from_string(const std::string& s);
RuleId rule_from_string(const std::string& s);

/// True when the schema belongs to the deduction system.
bool schema_in_system(SchemaId schema, System system);

using Subst = std::map<std::string, TermPtr>;

/// The formulas a schema instantiates to under a substitution covering all
/// of its variables. One formula for every schema except the biconditional
/// one, which expands into its two directions.
std::vector<TermPtr> instantiate_schema(SchemaId schema, const Subst& subst);

/// Premise schemas of a rule, instantiated.
std::vector<TermPtr> rule_premises(RuleId rule, const Subst& subst);

/// Checks the given premise formulas against the rule's premise schemas
/// under the substitution (exact tree match, first failure raises
/// PremiseMismatch) and returns the instantiated conclusion.
TermPtr apply_rule(RuleId rule, const std::vector<TermPtr>& premises, const Subst& subst);

struct HypothesisRef {
  int index;
};
struct AxiomStep {
  SchemaId schema;
  Subst subst;
};
struct RuleStep {
  RuleId rule;
  std::vector<int> premises;  // 0-based indices of strictly earlier lines
  Subst subst;
};
struct LemmaStep {
  std::string fixture;  // id of a hypothesis-free verified derivation
  Subst subst;          // replaces the fixture's propositional variables
};
using Justification = std::variant<HypothesisRef, AxiomStep, RuleStep, LemmaStep>;

struct ProofLine {
  TermPtr formula;
  Justification just;
};

struct Derivation {
  System system = System::A;
  std::vector<TermPtr> hypotheses;
  std::vector<ProofLine> lines;
  TermPtr conclusion;
};

using FixtureRegistry = std::map<std::string, Derivation>;

struct DerivationCheck {
  bool verified = true;
  int line = -1;  // first failing line, when not verified
  std::string reason;
};

/// Verifies every line's justification and that the conclusion is the last
/// line's formula. Substitutions are taken as given; no unification happens
/// here. Lemma lines refer into `registry` and are admitted only for
/// hypothesis-free fixtures that verify themselves.
DerivationCheck check_derivation(const Derivation& d, const FixtureRegistry* registry = nullptr);

/// Checks that in every model, under every assignment making all hypotheses
/// equal {1}, every line's formula evaluates to {1}. Precondition: d verified.
Report soundness_audit(const Derivation& d, const std::vector<ImplicationTable>& models);

struct SearchLimits {
  int max_lines = 30;
  int max_depth = 8;  // depth cap on instantiated formulas
};

/// Bounded backward search: axiom and rule conclusions are matched by
/// one-sided unification; the cut formula of the detachment rule ranges over
/// a finite pool built from the goal and hypotheses. Any returned derivation
/// passes check_derivation. Absence of a result is not a non-derivability
/// claim.
std::optional<Derivation> search_proof(System system, const std::vector<TermPtr>& hypotheses,
                                       const TermPtr& goal, const SearchLimits& limits = {});

std::string format_derivation(const Derivation& d);

}  // namespace ea
