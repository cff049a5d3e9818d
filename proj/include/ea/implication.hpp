#pragma once

#include <string>
#include <vector>

#include "ea/effect_algebra.hpp"
#include "ea/elem_set.hpp"

namespace ea {

enum class ImpKind { NaturalLattice, Sasaki, SetValued };

std::string to_string(ImpKind k);
ImpKind imp_kind_from_string(const std::string& s);

/// A total binary implication table. Cells are nonempty sets of element
/// indices; for the two lattice kinds every cell is a singleton. The unit is
/// not stored: it is the sole member of cell (zero, zero).
struct ImplicationTable {
  int size = 0;
  int zero = 0;
  ImpKind kind = ImpKind::SetValued;
  Grid<ElemSet> imp;
  std::vector<std::string> names;

  const ElemSet& at(int x, int y) const { return imp[x][y]; }
  bool single_valued() const;
  int one() const { return imp[zero][zero].front(); }
  /// Sole member of a singleton cell; only meaningful when single_valued().
  int value(int x, int y) const { return imp[x][y].front(); }
  std::string label(int i) const;
  std::string set_label(const ElemSet& s) const;
};

void check_shape(const ImplicationTable& t);

/// x -> y := y + (x v y)'. Requires a lattice-ordered valid algebra; throws
/// NotLattice otherwise (use set_implication_table in that case).
ImplicationTable natural_implication_table(const EffectAlgebra& e);

/// x -> y := x' + (x ^ y). Computed for comparison only; no law suite is
/// attached to this kind.
ImplicationTable sasaki_implication_table(const EffectAlgebra& e);

/// x -> y := y + Max L(x',y'). Defined for every valid finite algebra; cells
/// are singletons exactly when the algebra is lattice-ordered.
ImplicationTable set_implication_table(const EffectAlgebra& e);

/// a -> A := union of a -> x over x in A. Throws EmptyArgument on empty A.
ElemSet lift_to_sets(const ImplicationTable& t, int a, const ElemSet& A);

/// For a natural table: the five order laws and the eight identities that
/// motivate the implication-algebra axioms. For a set-valued table: the seven
/// laws of the general implication. All failures are reported, each with a
/// witness. Sasaki tables are rejected with KindMismatch.
Report check_implication_laws(const EffectAlgebra& e, const ImplicationTable& t);

bool same_cells(const ImplicationTable& a, const ImplicationTable& b);

}  // namespace ea
