#include <doctest.h>

#include "builders.hpp"
#include "ea/transforms.hpp"

using namespace ea;
using namespace ea::testing;

TEST_CASE("effect_to_implication picks the right kind") {
  CHECK(effect_to_implication(e2()).kind == ImpKind::NaturalLattice);
  CHECK(effect_to_implication(hs()).kind == ImpKind::NaturalLattice);
  CHECK(effect_to_implication(hex6()).kind == ImpKind::SetValued);
}

TEST_CASE("reconstruction from the classical table gives the two-element algebra") {
  const ImplicationAlgebra i = to_algebra(natural_implication_table(e2()));
  const EffectAlgebra e = implication_to_effect(i);
  CHECK(same_tables(e, e2()));
}

TEST_CASE("round trips through the implication reduct") {
  SUBCASE("algebra direction, all standard algebras") {
    for (const EffectAlgebra& e : standard_algebras()) {
      CAPTURE(e.size);
      CHECK(round_trip_check(e).ok());
    }
  }
  SUBCASE("chain reconstructs cell-exactly") {
    const EffectAlgebra back =
        implication_to_effect(to_algebra(natural_implication_table(c3())));
    CHECK(same_tables(back, c3()));
  }
  SUBCASE("implication direction") {
    for (const EffectAlgebra& e : lattice_algebras()) {
      const ImplicationAlgebra i = to_algebra(natural_implication_table(e));
      CAPTURE(e.size);
      CHECK(round_trip_check(i).ok());
    }
  }
  SUBCASE("set-valued tables cannot take the implication direction") {
    CHECK_THROWS_AS(round_trip_check(set_implication_table(hex6())),
                    SetValuedNotRoundTrippable);
  }
}

TEST_CASE("lattice axiom validation") {
  SUBCASE("the reduct of every lattice passes all twelve clauses") {
    for (const EffectAlgebra& e : lattice_algebras()) {
      const Report r =
          validate_implication_axioms(natural_implication_table(e), ImplicationAxiomMode::LEIA);
      CAPTURE(e.size);
      CHECK(r.ok());
    }
  }
  SUBCASE("clause instance on the chain: y'->((x->y)->y)' recovers x->y") {
    const ImplicationTable t = natural_implication_table(c3());
    const int x = 2, y = 1;  // 1 and a
    const int join_xy = t.value(t.value(x, y), y);
    const int lhs = t.value(t.value(y, 0), t.value(join_xy, 0));
    CHECK(lhs == t.value(x, y));
  }
  SUBCASE("classical table with 1->0 := 1 fails antisymmetry at (1,0)") {
    ImplicationTable t = natural_implication_table(e2());
    t.imp[1][0] = ElemSet{1};
    const Report r = validate_implication_axioms(t, ImplicationAxiomMode::LEIA);
    REQUIRE_FALSE(r.ok());
    CHECK(r.violations.front().tag == "(ii)");
    CHECK(r.violations.front().witness == std::vector<int>{1, 0});
  }
  SUBCASE("set-valued input is a kind mismatch") {
    CHECK_THROWS_AS(
        validate_implication_axioms(set_implication_table(hex6()), ImplicationAxiomMode::LEIA),
        KindMismatch);
  }
}

TEST_CASE("general axiom validation under the set lifting") {
  for (const EffectAlgebra& e : standard_algebras()) {
    const Report r =
        validate_implication_axioms(set_implication_table(e), ImplicationAxiomMode::EIA);
    CAPTURE(e.size);
    CHECK(r.ok());
  }
}

TEST_CASE("corrupted set-valued table fails a general clause with a witness") {
  ImplicationTable t = set_implication_table(b4());
  t.imp[1][1] = ElemSet{0};  // x->x must be the unit
  const Report r = validate_implication_axioms(t, ImplicationAxiomMode::EIA);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.front().tag == "(i)");
  CHECK(r.violations.front().witness == std::vector<int>{1});
}

TEST_CASE("reconstruction identity holds for every finite algebra") {
  for (const EffectAlgebra& e : standard_algebras()) {
    CAPTURE(e.size);
    CHECK(check_identity_11(e).ok());
  }
}

TEST_CASE("non-algebra tables are rejected with a diagnosis") {
  // a table that is not even transitive
  ImplicationAlgebra i;
  i.size = 2;
  i.zero = 0;
  i.imp = {{1, 1}, {1, 0}};
  i.imp[1][0] = 1;  // force 1 <= 0 alongside 0 <= 1
  CHECK_THROWS_AS(implication_to_effect(i), NotAnImplicationAlgebra);
}

TEST_CASE("reduct of a lattice validates and reconstructs; join and meet are term-definable") {
  for (const EffectAlgebra& e : lattice_algebras()) {
    const ImplicationTable t = natural_implication_table(e);
    const ImplicationAlgebra i = to_algebra(t);
    const EffectAlgebra back = implication_to_effect(i);
    CHECK(same_tables(back, e));

    const OrderStructure ord = induced_order(e);
    for (int x = 0; x < e.size; ++x)
      for (int y = 0; y < e.size; ++y) {
        // x <= y iff x->y = 1
        CHECK(ord.leq[x][y] == (i.imp[x][y] == i.one()));
        // (x->y)->y is the join; (x' v y')' is the meet
        CHECK(i.imp[i.imp[x][y]][y] == (*ord.join)[x][y]);
        const int joinc = i.imp[i.imp[i.comp(x)][i.comp(y)]][i.comp(y)];
        CHECK(i.comp(joinc) == (*ord.meet)[x][y]);
      }
  }
}
