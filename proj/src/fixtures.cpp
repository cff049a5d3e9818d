#include "ea/fixtures.hpp"

namespace ea {

namespace {

TermPtr pt(const std::string& s) { return parse_term(s); }

Subst sub(std::initializer_list<std::pair<std::string, std::string>> pairs) {
  Subst out;
  for (const auto& [k, v] : pairs) out[k] = pt(v);
  return out;
}

// Builds a derivation line by line, computing each formula from its stated
// justification so that the corpus cannot drift from the checker's reading.
class Builder {
 public:
  Builder(System s, const FixtureRegistry& reg) : reg_(reg) { d_.system = s; }

  Builder& hyp(const std::string& f) {
    d_.hypotheses.push_back(pt(f));
    return *this;
  }

  int use_hyp(int index) {
    d_.lines.push_back({d_.hypotheses.at(index), HypothesisRef{index}});
    return last();
  }

  int axiom(SchemaId schema, Subst s, int direction = 0) {
    TermPtr f = instantiate_schema(schema, s).at(direction);
    d_.lines.push_back({f, AxiomStep{schema, std::move(s)}});
    return last();
  }

  int rule(RuleId r, std::vector<int> premises, Subst s) {
    std::vector<TermPtr> premise_formulas;
    for (int p : premises) premise_formulas.push_back(d_.lines.at(p).formula);
    TermPtr f = apply_rule(r, premise_formulas, s);
    d_.lines.push_back({f, RuleStep{r, std::move(premises), std::move(s)}});
    return last();
  }

  int lemma(const std::string& id, Subst s) {
    TermPtr f = substitute(reg_.at(id).conclusion, s);
    d_.lines.push_back({f, LemmaStep{id, std::move(s)}});
    return last();
  }

  // Transitivity: from lines for x -> y and y -> z, derive x -> z by
  // suffixing the first and detaching the second. Formulas are copied out:
  // adding lines reallocates the vector.
  int chain(int xy, int yz) {
    const TermPtr f1 = d_.lines.at(xy).formula;
    const TermPtr f2 = d_.lines.at(yz).formula;
    Subst s{{"phi", f1->lhs()}, {"psi", f1->rhs()}, {"chi", f2->rhs()}};
    int step = rule(RuleId::Sf, {xy}, std::move(s));
    const TermPtr impl = d_.lines.at(step).formula;
    return rule(RuleId::MP, {yz, step}, Subst{{"phi", f2}, {"psi", impl->rhs()}});
  }

  int mp(int minor, int major) {
    const TermPtr f = d_.lines.at(major).formula;
    return rule(RuleId::MP, {minor, major}, Subst{{"phi", f->lhs()}, {"psi", f->rhs()}});
  }

  Derivation take() {
    d_.conclusion = d_.lines.back().formula;
    return std::move(d_);
  }

 private:
  int last() const { return static_cast<int>(d_.lines.size()) - 1; }
  Derivation d_;
  const FixtureRegistry& reg_;
};

// --- system A -------------------------------------------------------------

// p -> q, q -> r |- p -> r
Derivation th9a(const FixtureRegistry& reg) {
  Builder b(System::A, reg);
  b.hyp("p -> q").hyp("q -> r");
  int h0 = b.use_hyp(0);
  int h1 = b.use_hyp(1);
  b.chain(h0, h1);
  return b.take();
}

// |- p -> 1
Derivation th9b(const FixtureRegistry& reg) {
  Builder b(System::A, reg);
  int unit = b.axiom(SchemaId::A3, sub({{"phi", "0"}}));                    // 0 -> 0, i.e. 1
  int a1 = b.axiom(SchemaId::A1, sub({{"phi", "1"}, {"psi", "p"}}));       // 1 -> (p -> 1)
  b.mp(unit, a1);
  return b.take();
}

// |- p -> (q -> q)   (the reflexivity core, with the extra variable free)
Derivation th9c_aux(const FixtureRegistry& reg) {
  Builder b(System::A, reg);
  int l0 = b.axiom(SchemaId::A1, sub({{"phi", "p"}, {"psi", "q -> p"}}));  // p -> ((q->p)->p)
  int l1 = b.axiom(SchemaId::A1, sub({{"phi", "q"}, {"psi", "p"}}));       // q -> (p->q)
  int l2 = b.rule(RuleId::Sf, {l1}, sub({{"phi", "q"}, {"psi", "p -> q"}, {"chi", "q"}}));
  // l2: ((p->q)->q) -> (q->q)
  int l3 = b.axiom(SchemaId::A2, sub({{"phi", "q"}, {"psi", "p"}}));
  // l3: ((q->p)->p) -> ((p->q)->q)
  int l5 = b.chain(l3, l2);  // ((q->p)->p) -> (q->q)
  b.chain(l0, l5);           // p -> (q->q)
  return b.take();
}

// |- p -> p
Derivation th9c(const FixtureRegistry& reg) {
  Builder b(System::A, reg);
  int l0 = b.lemma("th9c_aux", sub({{"p", "1"}, {"q", "p"}}));  // 1 -> (p -> p)
  int l1 = b.axiom(SchemaId::A3, sub({{"phi", "0"}}));          // |- 1
  b.mp(l1, l0);
  return b.take();
}

// |- p -> ((p -> q) -> q)
Derivation th9d(const FixtureRegistry& reg) {
  Builder b(System::A, reg);
  int l0 = b.axiom(SchemaId::A1, sub({{"phi", "p"}, {"psi", "q -> p"}}));  // p -> ((q->p)->p)
  int l1 = b.axiom(SchemaId::A2, sub({{"phi", "q"}, {"psi", "p"}}));
  // l1: ((q->p)->p) -> ((p->q)->q)
  b.chain(l0, l1);
  return b.take();
}

// |- ~~p -> p
Derivation th9e_fwd(const FixtureRegistry& reg) {
  Builder b(System::A, reg);
  int l0 = b.axiom(SchemaId::A2, sub({{"phi", "p"}, {"psi", "0"}}));
  // l0: ((p->0)->0) -> ((0->p)->p)
  int l1 = b.axiom(SchemaId::A3, sub({{"phi", "p"}}));                     // 0 -> p
  int l2 = b.lemma("th9d", sub({{"p", "0 -> p"}, {"q", "p"}}));
  // l2: (0->p) -> (((0->p)->p) -> p)
  int l3 = b.mp(l1, l2);  // ((0->p)->p) -> p
  b.chain(l0, l3);
  return b.take();
}

// |- p -> ~~p
Derivation th9e_bwd(const FixtureRegistry& reg) {
  Builder b(System::A, reg);
  b.lemma("th9d", sub({{"p", "p"}, {"q", "0"}}));  // p -> ((p->0)->0)
  return b.take();
}

// p -> q |- (~p -> ~q) -> (q -> p)
Derivation th9f_fwd(const FixtureRegistry& reg) {
  Builder b(System::A, reg);
  b.hyp("p -> q");
  int h0 = b.use_hyp(0);
  b.rule(RuleId::R1, {h0}, sub({{"phi", "p"}, {"psi", "q"}}));
  return b.take();
}

// p -> q |- (q -> p) -> (~p -> ~q)
Derivation th9f_bwd(const FixtureRegistry& reg) {
  Builder b(System::A, reg);
  b.hyp("p -> q");
  int h0 = b.use_hyp(0);
  int l1 = b.rule(RuleId::Sf, {h0}, sub({{"phi", "p"}, {"psi", "q"}, {"chi", "0"}}));
  // l1: ~q -> ~p
  int l2 = b.rule(RuleId::R1, {l1}, sub({{"phi", "q -> 0"}, {"psi", "p -> 0"}}));
  // l2: (~~q -> ~~p) -> (~p -> ~q)
  int l3 = b.lemma("th9e_fwd", sub({{"p", "q"}}));  // ~~q -> q
  int l4 = b.rule(RuleId::Sf, {l3}, sub({{"phi", "~~q"}, {"psi", "q"}, {"chi", "p"}}));
  // l4: (q -> p) -> (~~q -> p)
  int l5 = b.lemma("th9e_bwd", sub({{"p", "p"}}));  // p -> ~~p
  int l6 = b.lemma("th9e_fwd", sub({{"p", "p"}}));  // ~~p -> p
  int l7 = b.rule(RuleId::WPf, {l5, l6},
                  sub({{"phi", "p"}, {"psi", "~~p"}, {"chi", "~~q"}}));
  // l7: (~~q -> p) -> (~~q -> ~~p)
  int l9 = b.chain(l4, l7);   // (q -> p) -> (~~q -> ~~p)
  b.chain(l9, l2);            // (q -> p) -> (~p -> ~q)
  return b.take();
}

// |- p -> ((q -> p) -> p)
Derivation th9g_1(const FixtureRegistry& reg) {
  Builder b(System::A, reg);
  b.axiom(SchemaId::A1, sub({{"phi", "p"}, {"psi", "q -> p"}}));
  return b.take();
}

// |- ((p -> q) -> q) -> ((q -> p) -> p)
Derivation th9g_2(const FixtureRegistry& reg) {
  Builder b(System::A, reg);
  b.axiom(SchemaId::A2, sub({{"phi", "p"}, {"psi", "q"}}));
  return b.take();
}

// |- ((q -> p) -> p) -> ((p -> q) -> q)
Derivation th9g_3(const FixtureRegistry& reg) {
  Builder b(System::A, reg);
  b.axiom(SchemaId::A2, sub({{"phi", "q"}, {"psi", "p"}}));
  return b.take();
}

// p -> q, r -> q |- ((p -> r) -> r) -> q
Derivation th9h(const FixtureRegistry& reg) {
  Builder b(System::A, reg);
  b.hyp("p -> q").hyp("r -> q");
  int h0 = b.use_hyp(0);
  int h1 = b.use_hyp(1);
  int l2 = b.rule(RuleId::Sf, {h0}, sub({{"phi", "p"}, {"psi", "q"}, {"chi", "r"}}));
  // l2: (q->r) -> (p->r)
  int l3 = b.rule(RuleId::Sf, {l2}, sub({{"phi", "q -> r"}, {"psi", "p -> r"}, {"chi", "r"}}));
  // l3: ((p->r)->r) -> ((q->r)->r)
  int l4 = b.axiom(SchemaId::A2, sub({{"phi", "q"}, {"psi", "r"}}));
  // l4: ((q->r)->r) -> ((r->q)->q)
  int l5 = b.lemma("th9d", sub({{"p", "r -> q"}, {"q", "q"}}));
  // l5: (r->q) -> (((r->q)->q) -> q)
  int l6 = b.mp(h1, l5);     // ((r->q)->q) -> q
  int l8 = b.chain(l3, l4);  // ((p->r)->r) -> ((r->q)->q)
  b.chain(l8, l6);           // ((p->r)->r) -> q
  return b.take();
}

// |- (p -> q) -> (((p -> q) -> q) -> q)
Derivation th9i_fwd(const FixtureRegistry& reg) {
  Builder b(System::A, reg);
  b.lemma("th9d", sub({{"p", "p -> q"}, {"q", "q"}}));
  return b.take();
}

// |- (((p -> q) -> q) -> q) -> (p -> q)
Derivation th9i_bwd(const FixtureRegistry& reg) {
  Builder b(System::A, reg);
  int l0 = b.axiom(SchemaId::A2, sub({{"phi", "p -> q"}, {"psi", "q"}}));
  // l0: (((p->q)->q)->q) -> ((q->(p->q)) -> (p->q))
  int l1 = b.axiom(SchemaId::A1, sub({{"phi", "q"}, {"psi", "p"}}));  // q -> (p->q)
  int l2 = b.lemma("th9d", sub({{"p", "q -> (p -> q)"}, {"q", "p -> q"}}));
  // l2: (q->(p->q)) -> (((q->(p->q)) -> (p->q)) -> (p->q))
  int l3 = b.mp(l1, l2);  // ((q->(p->q)) -> (p->q)) -> (p->q)
  b.chain(l0, l3);
  return b.take();
}

// |- (~q -> ~((p -> q) -> q)) -> (p -> q)
Derivation th9j_fwd(const FixtureRegistry& reg) {
  Builder b(System::A, reg);
  int l0 = b.axiom(SchemaId::A1, sub({{"phi", "q"}, {"psi", "p -> q"}}));
  // l0: q -> ((p->q)->q)
  int l1 = b.rule(RuleId::R1, {l0}, sub({{"phi", "q"}, {"psi", "(p -> q) -> q"}}));
  // l1: (~q -> ~((p->q)->q)) -> (((p->q)->q) -> q)
  int l2 = b.lemma("th9i_bwd", sub({{"p", "p"}, {"q", "q"}}));
  // l2: (((p->q)->q)->q) -> (p->q)
  b.chain(l1, l2);
  return b.take();
}

// |- (p -> q) -> (~q -> ~((p -> q) -> q))
Derivation th9j_bwd(const FixtureRegistry& reg) {
  Builder b(System::A, reg);
  const std::string v = "(p -> q) -> q";
  int l0 = b.axiom(SchemaId::A1, sub({{"phi", "q"}, {"psi", "p -> q"}}));  // q -> V
  int l1 = b.rule(RuleId::Sf, {l0}, sub({{"phi", "q"}, {"psi", v}, {"chi", "0"}}));
  // l1: ~V -> ~q
  int l2 = b.rule(RuleId::R1, {l1}, sub({{"phi", "(" + v + ") -> 0"}, {"psi", "q -> 0"}}));
  // l2: (~~V -> ~~q) -> (~q -> ~V)
  int l3 = b.lemma("th9e_fwd", sub({{"p", v}}));  // ~~V -> V
  int l4 = b.rule(RuleId::Sf, {l3},
                  sub({{"phi", "~~(" + v + ")"}, {"psi", v}, {"chi", "q"}}));
  // l4: (V -> q) -> (~~V -> q)
  int l5 = b.lemma("th9e_bwd", sub({{"p", "q"}}));  // q -> ~~q
  int l6 = b.lemma("th9e_fwd", sub({{"p", "q"}}));  // ~~q -> q
  int l7 = b.rule(RuleId::WPf, {l5, l6},
                  sub({{"phi", "q"}, {"psi", "~~q"}, {"chi", "~~(" + v + ")"}}));
  // l7: (~~V -> q) -> (~~V -> ~~q)
  int l9 = b.chain(l4, l7);    // (V -> q) -> (~~V -> ~~q)
  int l11 = b.chain(l9, l2);   // (V -> q) -> (~q -> ~V)
  int l12 = b.lemma("th9i_fwd", sub({{"p", "p"}, {"q", "q"}}));
  // l12: (p->q) -> (V -> q)
  b.chain(l12, l11);
  return b.take();
}

// --- system B -------------------------------------------------------------

// p -> q, q -> r |- p -> r
Derivation sec6a(const FixtureRegistry& reg) {
  Builder b(System::B, reg);
  b.hyp("p -> q").hyp("q -> r");
  int h0 = b.use_hyp(0);
  int h1 = b.use_hyp(1);
  b.chain(h0, h1);
  return b.take();
}

// |- p -> 1
Derivation sec6b(const FixtureRegistry& reg) {
  Builder b(System::B, reg);
  int unit = b.axiom(SchemaId::B4, sub({{"phi", "0"}}));
  int b1 = b.axiom(SchemaId::B1, sub({{"phi", "1"}, {"psi", "p"}}));
  b.mp(unit, b1);
  return b.take();
}

// |- p -> ~~p
Derivation sec6c_fwd(const FixtureRegistry& reg) {
  Builder b(System::B, reg);
  b.axiom(SchemaId::B3, sub({{"phi", "p"}}), 0);
  return b.take();
}

// |- ~~p -> p
Derivation sec6c_bwd(const FixtureRegistry& reg) {
  Builder b(System::B, reg);
  b.axiom(SchemaId::B3, sub({{"phi", "p"}}), 1);
  return b.take();
}

// p -> q |- (~p -> ~q) -> (q -> p)
Derivation sec6d_fwd(const FixtureRegistry& reg) {
  Builder b(System::B, reg);
  b.hyp("p -> q");
  int h0 = b.use_hyp(0);
  b.rule(RuleId::R1, {h0}, sub({{"phi", "p"}, {"psi", "q"}}));
  return b.take();
}

// p -> q |- (q -> p) -> (~p -> ~q); as in system A, with the double-negation
// lemmas replaced by axiom instances.
Derivation sec6d_bwd(const FixtureRegistry& reg) {
  Builder b(System::B, reg);
  b.hyp("p -> q");
  int h0 = b.use_hyp(0);
  int l1 = b.rule(RuleId::Sf, {h0}, sub({{"phi", "p"}, {"psi", "q"}, {"chi", "0"}}));
  int l2 = b.rule(RuleId::R1, {l1}, sub({{"phi", "q -> 0"}, {"psi", "p -> 0"}}));
  int l3 = b.axiom(SchemaId::B3, sub({{"phi", "q"}}), 1);  // ~~q -> q
  int l4 = b.rule(RuleId::Sf, {l3}, sub({{"phi", "~~q"}, {"psi", "q"}, {"chi", "p"}}));
  int l5 = b.axiom(SchemaId::B3, sub({{"phi", "p"}}), 0);  // p -> ~~p
  int l6 = b.axiom(SchemaId::B3, sub({{"phi", "p"}}), 1);  // ~~p -> p
  int l7 = b.rule(RuleId::WPf, {l5, l6}, sub({{"phi", "p"}, {"psi", "~~p"}, {"chi", "~~q"}}));
  int l9 = b.chain(l4, l7);
  b.chain(l9, l2);
  return b.take();
}

FixtureRegistry build_corpus() {
  FixtureRegistry reg;
  auto add = [&](const char* id, Derivation (*make)(const FixtureRegistry&)) {
    reg.emplace(id, make(reg));
  };
  add("th9a", th9a);
  add("th9b", th9b);
  add("th9c_aux", th9c_aux);
  add("th9c", th9c);
  add("th9d", th9d);
  add("th9e_fwd", th9e_fwd);
  add("th9e_bwd", th9e_bwd);
  add("th9f_fwd", th9f_fwd);
  add("th9f_bwd", th9f_bwd);
  add("th9g_1", th9g_1);
  add("th9g_2", th9g_2);
  add("th9g_3", th9g_3);
  add("th9h", th9h);
  add("th9i_fwd", th9i_fwd);
  add("th9i_bwd", th9i_bwd);
  add("th9j_fwd", th9j_fwd);
  add("th9j_bwd", th9j_bwd);
  add("sec6a", sec6a);
  add("sec6b", sec6b);
  add("sec6c_fwd", sec6c_fwd);
  add("sec6c_bwd", sec6c_bwd);
  add("sec6d_fwd", sec6d_fwd);
  add("sec6d_bwd", sec6d_bwd);
  return reg;
}

}  // namespace

const FixtureRegistry& fixture_corpus() {
  static const FixtureRegistry corpus = build_corpus();
  return corpus;
}

std::vector<std::string> fixture_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, _] : fixture_corpus()) ids.push_back(id);
  return ids;
}

}  // namespace ea
