#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ea/implication.hpp"
#include "ea/term.hpp"

namespace ea {

using Assignment = std::map<std::string, int>;

std::string to_string(const Assignment& asg, const ImplicationTable& t);

/// Set semantics over an implication table: 0 and variables denote singleton
/// sets, an implication denotes the lifted product of the argument sets. On
/// single-valued tables every result is a singleton. Throws UnboundVariable.
ElemSet evaluate_term(const TermPtr& t, const ImplicationTable& table, const Assignment& asg);

struct Countermodel {
  int model = -1;  // index into the model class, -1 for single-model checks
  Assignment assignment;
};

struct CheckOutcome {
  bool holds = true;
  std::optional<Countermodel> counter;
};

/// An identity holds when both sides evaluate to the same set under every
/// assignment. Returns one witnessing assignment otherwise.
CheckOutcome check_identity(const ImplicationTable& t, const Identity& id);

/// Every assignment satisfying all premises must satisfy the conclusion.
CheckOutcome check_quasiidentity(const ImplicationTable& t, const QuasiIdentity& q);

/// goal follows from sigma over the class K: in every member, every
/// assignment satisfying all of sigma satisfies goal.
CheckOutcome semantic_consequence(const std::vector<ImplicationTable>& k,
                                  const std::vector<Identity>& sigma, const Identity& goal);

struct SuiteEntry {
  std::string label;
  std::vector<QuasiIdentity> items;
};

struct Suite {
  std::string name;
  std::vector<SuiteEntry> entries;
};

enum class SuiteId { TH10, SEC6, TH4, DEF31, DEF52 };

SuiteId suite_id_from_string(const std::string& name);  // throws UnknownSuite
const Suite& builtin_suite(SuiteId id);

struct SuiteFailure {
  std::string entry_label;
  QuasiIdentity item;
  Countermodel counter;
};

struct SuiteOutcome {
  bool holds = true;
  std::vector<SuiteFailure> failures;
};

/// Runs every entry of a suite on one table, collecting all failures.
SuiteOutcome run_suite(const ImplicationTable& t, const Suite& s);

/// The two readings of the defining translation of a formula into an
/// identity: (phi -> phi) == phi, and phi == 1. They agree on every table
/// where x -> x is the unit.
Identity defining_identity(const TermPtr& formula);
Identity simplified_identity(const TermPtr& formula);

}  // namespace ea
