#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ea/elem_set.hpp"
#include "ea/errors.hpp"

namespace ea {

/// A finite effect algebra as explicit tables. Elements are the indices
/// 0..size-1; `plus` is a partial commutative addition (absent entries are
/// undefined), `comp` the complementation, `zero`/`one` the constants.
/// Instances are plain data; validity is established by
/// `validate_effect_axioms`, never assumed by the type.
struct EffectAlgebra {
  int size = 0;
  Grid<std::optional<int>> plus;
  std::vector<int> comp;
  int zero = 0;
  int one = 0;
  std::vector<std::string> names;  // optional display labels; may be empty

  bool defined(int x, int y) const { return plus[x][y].has_value(); }
  int sum(int x, int y) const { return *plus[x][y]; }
  std::string label(int i) const;
};

/// The order induced by the partial addition: x <= y iff x + z = y for
/// some z. `join`/`meet` are present exactly when every pair has both.
struct OrderStructure {
  int size = 0;
  Grid<bool> leq;
  bool is_lattice = false;
  std::optional<Grid<int>> join;
  std::optional<Grid<int>> meet;

  bool le(int x, int y) const { return leq[x][y]; }
};

struct Isomorphism {
  std::vector<int> map;  // image of each element; a bijection fixing 0 and 1
};

struct Violation {
  std::string tag;           // which axiom/clause failed
  std::vector<int> witness;  // the elements exhibiting the failure
  std::string detail;
};

struct Report {
  std::string subject;
  std::vector<std::string> passed;  // tags of clauses that held
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

std::string format_report(const Report& r);

/// Dimensional consistency and index ranges. Throws MalformedTable; never
/// reports axiom failures.
void check_shape(const EffectAlgebra& e);

/// Checks E1-E4 plus the degeneracy guard (zero != one). Every violation
/// names the axiom and a concrete witness tuple. The candidate may be any
/// shape-correct table.
Report validate_effect_axioms(const EffectAlgebra& e);

/// Precondition: `e` valid.
OrderStructure induced_order(const EffectAlgebra& e);

/// Exhaustively checks the eight derived laws of valid effect algebras
/// (antitone involution, definedness criterion, cancellation, subtraction
/// identities, neutrality of zero, constants under complement). Passes on
/// every valid algebra; exists to cross-validate the axiom validator.
Report check_basic_laws(const EffectAlgebra& e);

/// Maximal elements of the lower cone L(x,y) = { z : z <= x and z <= y }.
/// Nonempty, since zero is a common lower bound.
ElemSet max_lower_cone(const EffectAlgebra& e, const OrderStructure& ord, int x, int y);
ElemSet max_lower_cone(const EffectAlgebra& e, int x, int y);

/// Exact search for a structure-preserving bijection; zero and one are
/// fixed, the rest is backtracking pruned by complement orbits and
/// row-definedness signatures. Throws SizeMismatch on different carriers.
std::optional<Isomorphism> find_isomorphism(const EffectAlgebra& a, const EffectAlgebra& b);

/// Literal table equality: same layout, same definedness, same values.
/// Names are ignored.
bool same_tables(const EffectAlgebra& a, const EffectAlgebra& b);

}  // namespace ea
