#pragma once

#include "ea/effect_algebra.hpp"
#include "ea/implication.hpp"

namespace ea {

/// A total single-valued implication algebra (I, ->, 0). Derived notation:
/// x' = imp[x][zero], 1 = imp[zero][zero]. Whether the table satisfies the
/// implication-algebra axioms is established by validate_implication_axioms,
/// never assumed by the type.
struct ImplicationAlgebra {
  int size = 0;
  int zero = 0;
  Grid<int> imp;
  std::vector<std::string> names;

  int one() const { return imp[zero][zero]; }
  int comp(int x) const { return imp[x][zero]; }
  std::string label(int i) const;
};

void check_shape(const ImplicationAlgebra& a);

/// Throws KindMismatch unless every cell of `t` is a singleton.
ImplicationAlgebra to_algebra(const ImplicationTable& t);
ImplicationTable to_table(const ImplicationAlgebra& a, ImpKind kind);

/// The implication reduct: the natural table when `e` is lattice-ordered,
/// the set-valued table otherwise.
ImplicationTable effect_to_implication(const EffectAlgebra& e);

/// Reconstructs the partial addition from a single-valued implication table:
/// x' := x->0, 1 := 0->0, and x+y := x'->y exactly when x->y' = 1. Throws
/// NotAnImplicationAlgebra when the reconstruction violates E1-E4; the error
/// carries the witnessing implication-axiom diagnosis.
EffectAlgebra implication_to_effect(const ImplicationAlgebra& i);

enum class ImplicationAxiomMode { LEIA, EIA };

/// Clause-by-clause validation of the implication-algebra axioms.
/// LEIA: the twelve lattice clauses, on single-valued tables only
/// (KindMismatch otherwise). EIA: the eight general clauses, evaluated under
/// the set lifting: "= 1" means the value set equals {1} and clause equalities
/// mean value-set equality; the no-infinite-chain clause is vacuous on finite
/// carriers and reported as such.
Report validate_implication_axioms(const ImplicationTable& t, ImplicationAxiomMode mode);

/// For every pair x,y: lifting y' over Max L(x',y') reproduces the cell
/// (x,y) of the implication reduct. Holds in every finite effect algebra.
Report check_identity_11(const EffectAlgebra& e);

/// Effect-algebra direction: rebuilds the algebra from its implication
/// reduct and compares table-for-table.
Report round_trip_check(const EffectAlgebra& e);
/// Implication direction: rebuilds the table from the reconstructed algebra
/// and compares cell-for-cell.
Report round_trip_check(const ImplicationAlgebra& i);
/// Dispatch for tables: single-valued tables go through the implication
/// direction; set-valued ones throw SetValuedNotRoundTrippable.
Report round_trip_check(const ImplicationTable& t);

}  // namespace ea
