#include "ea/term.hpp"

#include <cctype>
#include <sstream>

namespace ea {

TermPtr Term::var(std::string name) {
  auto t = std::shared_ptr<Term>(new Term);
  t->kind_ = Kind::Var;
  t->name_ = std::move(name);
  return t;
}

TermPtr Term::zero() {
  static const TermPtr z = [] {
    auto t = std::shared_ptr<Term>(new Term);
    t->kind_ = Kind::Zero;
    return TermPtr(t);
  }();
  return z;
}

TermPtr Term::imp(TermPtr lhs, TermPtr rhs) {
  auto t = std::shared_ptr<Term>(new Term);
  t->kind_ = Kind::Imp;
  t->lhs_ = std::move(lhs);
  t->rhs_ = std::move(rhs);
  return t;
}

bool Term::is_one() const {
  return kind_ == Kind::Imp && lhs_->is_zero() && rhs_->is_zero();
}

bool Term::is_negation() const { return kind_ == Kind::Imp && rhs_->is_zero(); }

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case Term::Kind::Zero: return true;
    case Term::Kind::Var: return a->name() == b->name();
    case Term::Kind::Imp: return equal(a->lhs(), b->lhs()) && equal(a->rhs(), b->rhs());
  }
  return false;
}

int compare(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return 0;
  const int ka = static_cast<int>(a->kind()), kb = static_cast<int>(b->kind());
  if (ka != kb) return ka < kb ? -1 : 1;
  switch (a->kind()) {
    case Term::Kind::Zero: return 0;
    case Term::Kind::Var: return a->name().compare(b->name());
    case Term::Kind::Imp: {
      int c = compare(a->lhs(), b->lhs());
      return c != 0 ? c : compare(a->rhs(), b->rhs());
    }
  }
  return 0;
}

int term_depth(const TermPtr& t) {
  if (t->kind() != Term::Kind::Imp) return 1;
  return 1 + std::max(term_depth(t->lhs()), term_depth(t->rhs()));
}

int term_size(const TermPtr& t) {
  if (t->kind() != Term::Kind::Imp) return 1;
  return 1 + term_size(t->lhs()) + term_size(t->rhs());
}

void collect_variables(const TermPtr& t, std::set<std::string>& out) {
  switch (t->kind()) {
    case Term::Kind::Zero: return;
    case Term::Kind::Var: out.insert(t->name()); return;
    case Term::Kind::Imp:
      collect_variables(t->lhs(), out);
      collect_variables(t->rhs(), out);
      return;
  }
}

TermPtr substitute(const TermPtr& t, const std::map<std::string, TermPtr>& subst,
                   bool require_total) {
  switch (t->kind()) {
    case Term::Kind::Zero: return t;
    case Term::Kind::Var: {
      auto it = subst.find(t->name());
      if (it != subst.end()) return it->second;
      if (require_total)
        throw MissingSchemaVariable("schema variable '" + t->name() + "' not instantiated");
      return t;
    }
    case Term::Kind::Imp: {
      TermPtr l = substitute(t->lhs(), subst, require_total);
      TermPtr r = substitute(t->rhs(), subst, require_total);
      if (l.get() == t->lhs().get() && r.get() == t->rhs().get()) return t;
      return Term::imp(std::move(l), std::move(r));
    }
  }
  return t;
}

namespace {

void print_term(const TermPtr& t, std::string& out);

// Operand position allowing only atoms, `~u` and `1`; anything else gets
// parenthesized.
void print_unary(const TermPtr& t, std::string& out) {
  if (t->is_zero()) {
    out += '0';
  } else if (t->kind() == Term::Kind::Var) {
    out += t->name();
  } else if (t->is_one()) {
    out += '1';
  } else if (t->is_negation()) {
    out += '~';
    print_unary(t->lhs(), out);
  } else {
    out += '(';
    print_term(t, out);
    out += ')';
  }
}

void print_term(const TermPtr& t, std::string& out) {
  if (t->kind() != Term::Kind::Imp || t->is_one() || t->is_negation()) {
    print_unary(t, out);
    return;
  }
  print_unary(t->lhs(), out);
  out += " -> ";
  print_term(t->rhs(), out);  // right-associative: bare on the right
}

}  // namespace

std::string to_string(const TermPtr& t) {
  std::string out;
  print_term(t, out);
  return out;
}

std::string to_string(const Identity& id) {
  return to_string(id.lhs) + " == " + to_string(id.rhs);
}

std::string to_string(const QuasiIdentity& q) {
  if (q.premises.empty()) return to_string(q.conclusion);
  std::string out;
  for (std::size_t i = 0; i < q.premises.size(); ++i) {
    if (i) out += ", ";
    out += to_string(q.premises[i]);
  }
  out += " => ";
  out += to_string(q.conclusion);
  return out;
}

namespace {

enum class Tok { End, Ident, Number, Arrow, Join, Tilde, LParen, RParen, EqEq, Implies, Comma };

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "identifier";
    case Tok::Number: return "'0' or '1'";
    case Tok::Arrow: return "'->'";
    case Tok::Join: return "'\\/'";
    case Tok::Tilde: return "'~'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::EqEq: return "'=='";
    case Tok::Implies: return "'=>'";
    case Tok::Comma: return "','";
  }
  return "?";
}

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;
  Tok tok = Tok::End;
  std::string value;     // identifier name or digit string
  std::size_t tok_pos = 0;

  explicit Lexer(std::string_view s) : text(s) { advance(); }

  [[noreturn]] void fail(const std::string& expected) const {
    std::ostringstream msg;
    msg << "parse error at position " << tok_pos << ": unexpected " << tok_name(tok);
    if (tok == Tok::Ident || tok == Tok::Number) msg << " '" << value << "'";
    msg << ", expected " << expected;
    throw ParseError(msg.str(), tok_pos, expected);
  }

  void advance() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    tok_pos = pos;
    value.clear();
    if (pos >= text.size()) {
      tok = Tok::End;
      return;
    }
    char c = text[pos];
    if (c == '-' && pos + 1 < text.size() && text[pos + 1] == '>') {
      tok = Tok::Arrow;
      pos += 2;
    } else if (c == '\\' && pos + 1 < text.size() && text[pos + 1] == '/') {
      tok = Tok::Join;
      pos += 2;
    } else if (c == '=' && pos + 1 < text.size() && text[pos + 1] == '=') {
      tok = Tok::EqEq;
      pos += 2;
    } else if (c == '=' && pos + 1 < text.size() && text[pos + 1] == '>') {
      tok = Tok::Implies;
      pos += 2;
    } else if (c == '~') {
      tok = Tok::Tilde;
      ++pos;
    } else if (c == '(') {
      tok = Tok::LParen;
      ++pos;
    } else if (c == ')') {
      tok = Tok::RParen;
      ++pos;
    } else if (c == ',') {
      tok = Tok::Comma;
      ++pos;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      tok = Tok::Number;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        value += text[pos++];
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok = Tok::Ident;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        value += text[pos++];
    } else {
      std::ostringstream msg;
      msg << "parse error at position " << pos << ": stray character '" << c << "'";
      throw ParseError(msg.str(), pos, "a term");
    }
  }
};

struct Parser {
  Lexer lex;
  explicit Parser(std::string_view s) : lex(s) {}

  TermPtr atom() {
    switch (lex.tok) {
      case Tok::Number: {
        if (lex.value == "0") {
          lex.advance();
          return Term::zero();
        }
        if (lex.value == "1") {
          lex.advance();
          return Term::one();
        }
        lex.fail("'0' or '1'");
      }
      case Tok::Ident: {
        TermPtr v = Term::var(lex.value);
        lex.advance();
        return v;
      }
      case Tok::LParen: {
        lex.advance();
        TermPtr t = term();
        if (lex.tok != Tok::RParen) lex.fail("')'");
        lex.advance();
        return t;
      }
      default:
        lex.fail("identifier, '0', '1', '~' or '('");
    }
  }

  TermPtr unary() {
    if (lex.tok == Tok::Tilde) {
      lex.advance();
      return Term::neg(unary());
    }
    return atom();
  }

  TermPtr joinexpr() {
    TermPtr t = unary();
    while (lex.tok == Tok::Join) {
      lex.advance();
      t = Term::join(t, unary());
    }
    return t;
  }

  TermPtr term() {
    TermPtr t = joinexpr();
    if (lex.tok == Tok::Arrow) {
      lex.advance();
      return Term::imp(t, term());
    }
    return t;
  }

  Identity identity() {
    TermPtr l = term();
    if (lex.tok != Tok::EqEq) lex.fail("'=='");
    lex.advance();
    TermPtr r = term();
    return Identity{l, r};
  }

  QuasiIdentity quasi() {
    std::vector<Identity> ids;
    ids.push_back(identity());
    while (lex.tok == Tok::Comma) {
      lex.advance();
      ids.push_back(identity());
    }
    if (lex.tok == Tok::Implies) {
      lex.advance();
      Identity concl = identity();
      if (lex.tok != Tok::End) lex.fail("end of input");
      return QuasiIdentity{std::move(ids), std::move(concl)};
    }
    if (lex.tok != Tok::End) lex.fail("',', '=>' or end of input");
    if (ids.size() != 1) lex.fail("'=>'");
    return QuasiIdentity{{}, ids.front()};
  }

  void expect_end() {
    if (lex.tok != Tok::End) lex.fail("end of input");
  }
};

}  // namespace

TermPtr parse_term(std::string_view text) {
  Parser p(text);
  TermPtr t = p.term();
  p.expect_end();
  return t;
}

Identity parse_identity(std::string_view text) {
  Parser p(text);
  Identity id = p.identity();
  p.expect_end();
  return id;
}

QuasiIdentity parse_quasi_identity(std::string_view text) {
  Parser p(text);
  return p.quasi();
}

}  // namespace ea
