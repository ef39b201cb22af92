#include "dstl/parser.hpp"

#include <cctype>
#include <vector>

namespace dstl {

namespace {

enum class Tok {
  Ident,
  KwTrue,
  KwFalse,
  KwInit,
  KwStable,
  KwLeadsTo,
  KwBecause,
  KwLeadsToC,
  KwBecauseC,
  KwUnless,
  Tilde,
  Amp,
  Pipe,
  Arrow,
  DArrow,
  LParen,
  RParen,
  LAngle,
  RAngle,
  LBrack,
  RBrack,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    if (c == '#') break;  // comment to end of line
    std::size_t at = i;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      std::string w = s.substr(i, j - i);
      i = j;
      Tok k = Tok::Ident;
      if (w == "true") k = Tok::KwTrue;
      else if (w == "false") k = Tok::KwFalse;
      else if (w == "init") k = Tok::KwInit;
      else if (w == "stable") k = Tok::KwStable;
      else if (w == "leads_to") k = Tok::KwLeadsTo;
      else if (w == "because") k = Tok::KwBecause;
      else if (w == "leads_to_c") k = Tok::KwLeadsToC;
      else if (w == "because_c") k = Tok::KwBecauseC;
      else if (w == "unless") k = Tok::KwUnless;
      out.push_back({k, std::move(w), at});
      continue;
    }
    switch (c) {
      case '~': out.push_back({Tok::Tilde, "~", at}); ++i; break;
      case '&': out.push_back({Tok::Amp, "&", at}); ++i; break;
      case '|': out.push_back({Tok::Pipe, "|", at}); ++i; break;
      case '(': out.push_back({Tok::LParen, "(", at}); ++i; break;
      case ')': out.push_back({Tok::RParen, ")", at}); ++i; break;
      case '[': out.push_back({Tok::LBrack, "[", at}); ++i; break;
      case ']': out.push_back({Tok::RBrack, "]", at}); ++i; break;
      case '>': out.push_back({Tok::RAngle, ">", at}); ++i; break;
      case '<':
        if (i + 2 < s.size() && s[i + 1] == '-' && s[i + 2] == '>') {
          out.push_back({Tok::DArrow, "<->", at});
          i += 3;
        } else {
          out.push_back({Tok::LAngle, "<", at});
          ++i;
        }
        break;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          out.push_back({Tok::Arrow, "->", at});
          i += 2;
        } else {
          throw ParseError(at, "stray '-'");
        }
        break;
      default:
        throw ParseError(at, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

struct Parser {
  std::vector<Token> toks;
  std::size_t at = 0;
  const std::set<std::string>* comps;

  const Token& peek() const { return toks[at]; }
  Token take() { return toks[at++]; }
  bool accept(Tok k) {
    if (toks[at].kind == k) {
      ++at;
      return true;
    }
    return false;
  }
  Token expect(Tok k, const char* what) {
    if (toks[at].kind != k) throw ParseError(toks[at].pos, std::string("expected ") + what);
    return toks[at++];
  }

  void check_component(const Token& t) {
    if (comps && !comps->count(t.text))
      throw ParseError(t.pos, "undeclared component '" + t.text + "'");
  }

  FormulaPtr dsl() { return iff(); }

  FormulaPtr iff() {
    auto f = imp();
    while (accept(Tok::DArrow)) f = Formula::iff(f, imp());
    return f;
  }

  // -> associates to the right: a -> b -> c is a -> (b -> c).
  FormulaPtr imp() {
    auto f = disj();
    if (accept(Tok::Arrow)) return Formula::implies(f, imp());
    return f;
  }

  FormulaPtr disj() {
    auto f = conj();
    while (accept(Tok::Pipe)) f = Formula::lor(f, conj());
    return f;
  }

  FormulaPtr conj() {
    auto f = unary();
    while (accept(Tok::Amp)) f = Formula::land(f, unary());
    return f;
  }

  FormulaPtr unary() {
    if (accept(Tok::Tilde)) return Formula::lnot(unary());
    if (peek().kind == Tok::LAngle) {
      take();
      Token name = expect(Tok::Ident, "component name");
      check_component(name);
      expect(Tok::RAngle, "'>'");
      return Formula::loc(name.text, unary());
    }
    if (peek().kind == Tok::LBrack) {
      take();
      Token name = expect(Tok::Ident, "component name");
      check_component(name);
      expect(Tok::RBrack, "']'");
      return Formula::box(name.text, unary());
    }
    return atom();
  }

  FormulaPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::KwTrue: take(); return Formula::verum();
      case Tok::KwFalse: take(); return Formula::falsum();
      case Tok::Ident: return Formula::prop(take().text);
      case Tok::LParen: {
        take();
        auto f = dsl();
        expect(Tok::RParen, "')'");
        return f;
      }
      default:
        throw ParseError(t.pos, "expected a formula");
    }
  }

  static bool temporal_op(Tok k) {
    return k == Tok::KwLeadsTo || k == Tok::KwBecause || k == Tok::KwLeadsToC ||
           k == Tok::KwBecauseC || k == Tok::KwUnless;
  }

  TemporalFormula temporal() {
    TemporalFormula out;
    if (accept(Tok::KwInit)) {
      out.kind = TKind::Init;
      out.lhs = dsl();
      return out;
    }
    if (accept(Tok::KwStable)) {
      out.kind = TKind::Stable;
      out.lhs = dsl();
      return out;
    }
    out.lhs = dsl();
    const Token& t = peek();
    if (!temporal_op(t.kind)) {
      out.kind = TKind::Plain;
      return out;
    }
    switch (take().kind) {
      case Tok::KwLeadsTo: out.kind = TKind::LeadsTo; break;
      case Tok::KwBecause: out.kind = TKind::Because; break;
      case Tok::KwLeadsToC: out.kind = TKind::LeadsToC; break;
      case Tok::KwBecauseC: out.kind = TKind::BecauseC; break;
      default: out.kind = TKind::Unless; break;
    }
    out.rhs = dsl();
    return out;
  }
};

int prec(FKind k) {
  switch (k) {
    case FKind::Iff: return 1;
    case FKind::Implies: return 2;
    case FKind::Or: return 3;
    case FKind::And: return 4;
    default: return 5;  // unary and atoms
  }
}

void render_into(const FormulaPtr& f, std::string& out, int parent_prec, bool right_operand) {
  int p = prec(f->kind);
  // Parenthesize when binding looser than the context, or at equal
  // precedence on the side the grammar does not associate to.
  bool need_paren = false;
  if (f->kind == FKind::And || f->kind == FKind::Or || f->kind == FKind::Iff)
    need_paren = p < parent_prec || (p == parent_prec && right_operand);
  else if (f->kind == FKind::Implies)
    need_paren = p < parent_prec || (p == parent_prec && !right_operand);
  if (need_paren) out += '(';
  switch (f->kind) {
    case FKind::Prop: out += f->name; break;
    case FKind::False_: out += "false"; break;
    case FKind::True_: out += "true"; break;
    case FKind::Not:
      out += '~';
      render_into(f->lhs, out, 5, false);
      break;
    case FKind::Loc:
      out += '<';
      out += f->name;
      out += "> ";
      render_into(f->lhs, out, 5, false);
      break;
    case FKind::Box:
      out += '[';
      out += f->name;
      out += "] ";
      render_into(f->lhs, out, 5, false);
      break;
    case FKind::And:
      render_into(f->lhs, out, 4, false);
      out += " & ";
      render_into(f->rhs, out, 4, true);
      break;
    case FKind::Or:
      render_into(f->lhs, out, 3, false);
      out += " | ";
      render_into(f->rhs, out, 3, true);
      break;
    case FKind::Implies:
      render_into(f->lhs, out, 2, false);
      out += " -> ";
      render_into(f->rhs, out, 2, true);
      break;
    case FKind::Iff:
      render_into(f->lhs, out, 1, false);
      out += " <-> ";
      render_into(f->rhs, out, 1, true);
      break;
  }
  if (need_paren) out += ')';
}

}  // namespace

FormulaPtr parse_dsl(const std::string& text, const std::set<std::string>* components) {
  Parser p{lex(text), 0, components};
  auto f = p.dsl();
  if (p.peek().kind != Tok::End) throw ParseError(p.peek().pos, "trailing input after formula");
  return f;
}

TemporalFormula parse_temporal(const std::string& text, const std::set<std::string>* components) {
  Parser p{lex(text), 0, components};
  auto t = p.temporal();
  if (p.peek().kind != Tok::End) {
    if (Parser::temporal_op(p.peek().kind))
      throw ParseError(p.peek().pos, "temporal operators cannot be nested");
    throw ParseError(p.peek().pos, "trailing input after formula");
  }
  return t;
}

std::string render(const FormulaPtr& f) {
  std::string out;
  render_into(f, out, 0, false);
  return out;
}

std::string render(const TemporalFormula& t, bool stable_sugar) {
  switch (t.kind) {
    case TKind::Plain: return render(t.lhs);
    case TKind::Init: return "init " + render(t.lhs);
    case TKind::Stable: return "stable " + render(t.lhs);
    case TKind::Unless:
      if (stable_sugar && t.rhs && t.rhs->kind == FKind::False_)
        return "stable " + render(t.lhs);
      return render(t.lhs) + " unless " + render(t.rhs);
    case TKind::LeadsTo: return render(t.lhs) + " leads_to " + render(t.rhs);
    case TKind::Because: return render(t.lhs) + " because " + render(t.rhs);
    case TKind::LeadsToC: return render(t.lhs) + " leads_to_c " + render(t.rhs);
    case TKind::BecauseC: return render(t.lhs) + " because_c " + render(t.rhs);
  }
  return {};
}

}  // namespace dstl
