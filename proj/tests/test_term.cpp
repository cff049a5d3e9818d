#include <doctest.h>

#include "ea/term.hpp"

using namespace ea;

TEST_CASE("parsing expands the surface sugar") {
  // p -> (q -> p)
  TermPtr t = parse_term("p -> (q -> p)");
  REQUIRE(t->kind() == Term::Kind::Imp);
  CHECK(t->lhs()->name() == "p");
  CHECK(t->rhs()->lhs()->name() == "q");
  CHECK(t->rhs()->rhs()->name() == "p");

  // ~p becomes p -> 0
  CHECK(equal(parse_term("~p"), Term::imp(Term::var("p"), Term::zero())));

  // 1 becomes 0 -> 0
  CHECK(equal(parse_term("1"), Term::imp(Term::zero(), Term::zero())));

  // p \/ q expands left-to-right as (p -> q) -> q
  TermPtr pq = parse_term("p \\/ q");
  TermPtr expect = Term::imp(Term::imp(Term::var("p"), Term::var("q")), Term::var("q"));
  CHECK(equal(pq, expect));
}

TEST_CASE("precedence: ~ over \\/ over ->, with -> right-associative") {
  CHECK(equal(parse_term("p -> q -> r"), parse_term("p -> (q -> r)")));
  CHECK(equal(parse_term("~p \\/ q"), parse_term("(~p) \\/ q")));
  CHECK(equal(parse_term("p \\/ q -> r"), parse_term("(p \\/ q) -> r")));
  CHECK(equal(parse_term("~p -> q"), parse_term("(~p) -> q")));
}

TEST_CASE("printing reparses to an equal tree") {
  const char* samples[] = {
      "p -> (q -> p)",
      "((p -> q) -> q) -> ((q -> p) -> p)",
      "~(p -> q) -> ~~r",
      "p \\/ q -> q \\/ p",
      "0 -> x",
      "1",
      "~0",
      "x -> ~(~y -> z)",
  };
  for (const char* s : samples) {
    TermPtr t = parse_term(s);
    TermPtr back = parse_term(to_string(t));
    CAPTURE(s);
    CAPTURE(to_string(t));
    CHECK(equal(t, back));
  }
}

TEST_CASE("parse errors carry position and expectation") {
  CHECK_THROWS_AS(parse_term("p ->"), ParseError);
  CHECK_THROWS_AS(parse_term("p q"), ParseError);
  CHECK_THROWS_AS(parse_term("(p -> q"), ParseError);
  CHECK_THROWS_AS(parse_term("2"), ParseError);
  try {
    parse_term("p -> $");
  } catch (const ParseError& e) {
    CHECK(e.position == 5);
    CHECK(!e.expected.empty());
  }
}

TEST_CASE("identity and quasi-identity lines") {
  Identity id = parse_identity("x -> y == y -> x");
  CHECK(equal(id.lhs, parse_term("x -> y")));
  CHECK(equal(id.rhs, parse_term("y -> x")));

  QuasiIdentity q = parse_quasi_identity("x == 1, x -> y == 1 => y == 1");
  CHECK(q.premises.size() == 2);
  CHECK(equal(q.conclusion.lhs, Term::var("y")));
  CHECK(equal(q.conclusion.rhs, Term::one()));

  QuasiIdentity plain = parse_quasi_identity("0 -> x == 1");
  CHECK(plain.premises.empty());

  CHECK_THROWS_AS(parse_quasi_identity("x == 1, y == 1"), ParseError);
}

TEST_CASE("substitution") {
  TermPtr schema = parse_term("phi -> (psi -> phi)");
  std::map<std::string, TermPtr> subst{{"phi", parse_term("p -> q")}, {"psi", Term::zero()}};
  CHECK(equal(substitute(schema, subst, true), parse_term("(p -> q) -> (0 -> (p -> q))")));

  std::map<std::string, TermPtr> partial{{"phi", Term::var("p")}};
  CHECK_THROWS_AS(substitute(schema, partial, true), MissingSchemaVariable);
  CHECK(equal(substitute(schema, partial, false), parse_term("p -> (psi -> p)")));
}

TEST_CASE("compare is a total order consistent with equality") {
  TermPtr a = parse_term("p -> q");
  TermPtr b = parse_term("p -> r");
  CHECK(compare(a, a) == 0);
  CHECK(compare(a, b) != 0);
  CHECK(compare(a, b) == -compare(b, a));
  CHECK(term_depth(parse_term("p")) == 1);
  CHECK(term_depth(parse_term("p -> (q -> r)")) == 3);
  CHECK(term_size(parse_term("p -> (q -> r)")) == 5);
}
