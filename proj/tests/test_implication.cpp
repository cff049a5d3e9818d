#include <doctest.h>

#include "builders.hpp"
#include "ea/implication.hpp"

using namespace ea;
using namespace ea::testing;

namespace {

ElemSet cell(const ImplicationTable& t, int x, int y) { return t.at(x, y); }

}  // namespace

TEST_CASE("natural table of the two-element algebra is classical") {
  const ImplicationTable t = natural_implication_table(e2());
  CHECK(cell(t, 0, 0) == ElemSet{1});
  CHECK(cell(t, 0, 1) == ElemSet{1});
  CHECK(cell(t, 1, 0) == ElemSet{0});
  CHECK(cell(t, 1, 1) == ElemSet{1});
}

TEST_CASE("natural table of the three-element chain, cell by cell") {
  // indices: 0, a=1, 1=2
  const ImplicationTable t = natural_implication_table(c3());
  for (int y = 0; y < 3; ++y) CHECK(cell(t, 0, y) == ElemSet{2});
  CHECK(cell(t, 1, 0) == ElemSet{1});  // a->0 = a
  CHECK(cell(t, 1, 1) == ElemSet{2});
  CHECK(cell(t, 1, 2) == ElemSet{2});
  CHECK(cell(t, 2, 0) == ElemSet{0});  // 1->0 = 0
  CHECK(cell(t, 2, 1) == ElemSet{1});  // 1->a = a
  CHECK(cell(t, 2, 2) == ElemSet{2});
}

TEST_CASE("natural implication on the Boolean square: a->b = b") {
  const ImplicationTable t = natural_implication_table(b4());
  CHECK(cell(t, 1, 2) == ElemSet{2});
}

TEST_CASE("sasaki cells on the three-element chain") {
  const ImplicationTable t = sasaki_implication_table(c3());
  CHECK(t.kind == ImpKind::Sasaki);
  CHECK(cell(t, 1, 0) == ElemSet{1});  // a' + (a ^ 0) = a
  CHECK(cell(t, 2, 1) == ElemSet{1});  // 1' + (1 ^ a) = a
}

TEST_CASE("set-valued implication") {
  SUBCASE("coincides with natural on every lattice") {
    for (const EffectAlgebra& e : lattice_algebras()) {
      const ImplicationTable nat = natural_implication_table(e);
      const ImplicationTable set = set_implication_table(e);
      CAPTURE(e.size);
      CHECK(same_cells(nat, set));
      CHECK(set.single_valued());
    }
  }
  SUBCASE("three-element chain cell (a,0)") {
    const ImplicationTable t = set_implication_table(c3());
    CHECK(cell(t, 1, 0) == ElemSet{1});
  }
  SUBCASE("x->x = {1} everywhere") {
    for (const EffectAlgebra& e : standard_algebras()) {
      const ImplicationTable t = set_implication_table(e);
      for (int x = 0; x < e.size; ++x) CHECK(cell(t, x, x) == ElemSet{e.one});
    }
  }
  SUBCASE("the hexagon has a two-element cell and is no longer single-valued") {
    const ImplicationTable t = set_implication_table(hex6());
    CHECK(cell(t, 1, 2) == (ElemSet{3, 4}));  // a->b = {c,d}
    CHECK_FALSE(t.single_valued());
    // x->0 stays a singleton even there
    for (int x = 0; x < 6; ++x) CHECK(cell(t, x, 0).size() == 1);
  }
}

TEST_CASE("natural table is rejected off-lattice") {
  CHECK_THROWS_AS(natural_implication_table(hex6()), NotLattice);
  CHECK_THROWS_AS(sasaki_implication_table(hex6()), NotLattice);
}

TEST_CASE("set lifting") {
  const ImplicationTable t = natural_implication_table(c3());
  CHECK(lift_to_sets(t, 1, ElemSet{0}) == cell(t, 1, 0));

  const ImplicationTable f = natural_implication_table(e2());
  CHECK(lift_to_sets(f, 1, ElemSet{0, 1}) == (ElemSet{0, 1}));

  CHECK(lift_to_sets(t, 2, ElemSet{0, 1}) == (ElemSet{0, 1}));  // 1->0=0, 1->a=a

  CHECK_THROWS_AS(lift_to_sets(t, 1, ElemSet{}), EmptyArgument);
}

TEST_CASE("implication law suites") {
  SUBCASE("natural laws pass on all lattices") {
    for (const EffectAlgebra& e : lattice_algebras()) {
      const Report r = check_implication_laws(e, natural_implication_table(e));
      CAPTURE(e.size);
      CHECK(r.ok());
    }
  }
  SUBCASE("set laws pass on every algebra, lattice or not") {
    for (const EffectAlgebra& e : standard_algebras()) {
      const Report r = check_implication_laws(e, set_implication_table(e));
      CAPTURE(e.size);
      CHECK(r.ok());
    }
  }
  SUBCASE("join identity instance on the chain: (a->0)->0 = a v 0 = a") {
    const ImplicationTable t = natural_implication_table(c3());
    CHECK(cell(t, t.value(1, 0), 0) == ElemSet{1});
  }
  SUBCASE("sasaki tables have no law suite") {
    CHECK_THROWS_AS(check_implication_laws(c3(), sasaki_implication_table(c3())), KindMismatch);
  }
  SUBCASE("a corrupted cell is localized") {
    ImplicationTable t = natural_implication_table(e2());
    t.imp[1][0] = ElemSet{1};  // classical table with 1->0 := 1
    const Report r = check_implication_laws(e2(), t);
    REQUIRE_FALSE(r.ok());
    CHECK(r.violations.front().witness == std::vector<int>{1, 0});
  }
}

TEST_CASE("natural differs from sasaki somewhere in the corpus") {
  // Recorded as a census-style observation: the two definitions disagree on
  // the horizontal sum, e.g. at (a, b).
  const EffectAlgebra e = hs();
  const ImplicationTable nat = natural_implication_table(e);
  const ImplicationTable sas = sasaki_implication_table(e);
  CHECK(nat.at(1, 2) == ElemSet{2});  // b + (a v b)' = b
  CHECK(sas.at(1, 2) == ElemSet{1});  // a' + (a ^ b) = a
}

TEST_CASE("table shape checking") {
  ImplicationTable t = natural_implication_table(e2());
  t.imp[0][1] = {};
  CHECK_THROWS_AS(check_shape(t), MalformedTable);
  t.imp[0][1] = {5};
  CHECK_THROWS_AS(check_shape(t), MalformedTable);
  t.imp[0][1] = {1, 0};
  CHECK_THROWS_AS(check_shape(t), MalformedTable);
}
