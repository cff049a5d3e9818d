#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ea/errors.hpp"

namespace ea {

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// A term of the {->, 0} language. Surface sugar is expanded at parse time:
///   ~t      becomes  t -> 0
///   1       becomes  0 -> 0
///   s \/ t  becomes  (s -> t) -> t
/// so every tree is built from variables, the constant 0 and implication.
class Term {
 public:
  enum class Kind { Var, Zero, Imp };

  static TermPtr var(std::string name);
  static TermPtr zero();
  static TermPtr imp(TermPtr lhs, TermPtr rhs);

  static TermPtr neg(TermPtr t) { return imp(std::move(t), zero()); }
  static TermPtr one() { return imp(zero(), zero()); }
  static TermPtr join(TermPtr s, TermPtr t) { return imp(imp(s, t), t); }

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const TermPtr& lhs() const { return lhs_; }
  const TermPtr& rhs() const { return rhs_; }

  bool is_zero() const { return kind_ == Kind::Zero; }
  bool is_one() const;
  /// Matches t -> 0 (which also covers the constant 1 = 0 -> 0).
  bool is_negation() const;

 private:
  Term() = default;
  Kind kind_ = Kind::Zero;
  std::string name_;
  TermPtr lhs_, rhs_;
};

bool equal(const TermPtr& a, const TermPtr& b);
/// Total order on terms; used wherever a deterministic ordering is needed.
int compare(const TermPtr& a, const TermPtr& b);
int term_depth(const TermPtr& t);
int term_size(const TermPtr& t);

void collect_variables(const TermPtr& t, std::set<std::string>& out);

/// Replaces variables by the mapped terms. Unmapped variables stay in place
/// unless `require_total` is set, in which case they raise
/// MissingSchemaVariable.
TermPtr substitute(const TermPtr& t, const std::map<std::string, TermPtr>& subst,
                   bool require_total = false);

/// Prints with minimal parentheses, re-sugaring ~ and 1. Reparsing the result
/// yields an equal tree.
std::string to_string(const TermPtr& t);

/// Grammar: `->` right-associative and lowest, `\/` above it
/// (left-associative), prefix `~` tightest; atoms are identifiers, `0`, `1`
/// and parenthesized terms.
TermPtr parse_term(std::string_view text);

struct Identity {
  TermPtr lhs, rhs;
};

struct QuasiIdentity {
  std::vector<Identity> premises;  // empty for a plain identity
  Identity conclusion;
};

std::string to_string(const Identity& id);
std::string to_string(const QuasiIdentity& q);

/// `t1 == t2`
Identity parse_identity(std::string_view text);
/// `t1 == t2` or `p1 == q1, ..., pk == qk => t1 == t2`
QuasiIdentity parse_quasi_identity(std::string_view text);

}  // namespace ea
