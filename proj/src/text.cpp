#include "lmcalc/text.hpp"

#include <cctype>
#include <sstream>

namespace lmcalc {

namespace {

enum class Tok {
  LParen, RParen, LAngle, RAngle, LBrack, RBrack,
  Dot, Comma, Pipe, Colon, Tilde, Equals, Lambda,
  Arrow, AndOp, OrOp,
  Mu, Bot, W1, W2, P1, P2,
  ConstLB, W1LB, W2LB,   // "c[", "w1[", "w2[": bracket adjacent
  Ident, End
};

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

struct Lexer {
  const std::string& src;
  size_t i = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& s) : src(s) {}

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }

  void adv() {
    if (src[i] == '\n') { ++line; col = 1; } else { ++col; }
    ++i;
  }

  std::vector<Token> run() {
    std::vector<Token> out;
    while (i < src.size()) {
      char c = src[i];
      if (std::isspace(static_cast<unsigned char>(c))) { adv(); continue; }
      if (c == '#') {  // comment to end of line
        while (i < src.size() && src[i] != '\n') adv();
        continue;
      }
      int l = line, cl = col;
      auto push = [&](Tok k, std::string t) { out.push_back({k, std::move(t), l, cl}); };
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string id;
        while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) ||
                                  src[i] == '_' || src[i] == '\'')) {
          id += src[i];
          adv();
        }
        bool lb = i < src.size() && src[i] == '[';
        if (id == "mu") push(Tok::Mu, id);
        else if (id == "bot") push(Tok::Bot, id);
        else if (id == "p1") push(Tok::P1, id);
        else if (id == "p2") push(Tok::P2, id);
        else if (id == "w1" && lb) { adv(); push(Tok::W1LB, "w1["); }
        else if (id == "w2" && lb) { adv(); push(Tok::W2LB, "w2["); }
        else if (id == "w1") push(Tok::W1, id);
        else if (id == "w2") push(Tok::W2, id);
        else if (id == "c" && lb) { adv(); push(Tok::ConstLB, "c["); }
        else push(Tok::Ident, id);
        continue;
      }
      switch (c) {
        case '(': adv(); push(Tok::LParen, "("); break;
        case ')': adv(); push(Tok::RParen, ")"); break;
        case '<': adv(); push(Tok::LAngle, "<"); break;
        case '>': adv(); push(Tok::RAngle, ">"); break;
        case '[': adv(); push(Tok::LBrack, "["); break;
        case ']': adv(); push(Tok::RBrack, "]"); break;
        case '.': adv(); push(Tok::Dot, "."); break;
        case ',': adv(); push(Tok::Comma, ","); break;
        case '|': adv(); push(Tok::Pipe, "|"); break;
        case ':': adv(); push(Tok::Colon, ":"); break;
        case '~': adv(); push(Tok::Tilde, "~"); break;
        case '=': adv(); push(Tok::Equals, "="); break;
        case '\\':
          adv();
          if (i < src.size() && src[i] == '/') { adv(); push(Tok::OrOp, "\\/"); }
          else push(Tok::Lambda, "\\");
          break;
        case '/':
          adv();
          if (i < src.size() && src[i] == '\\') { adv(); push(Tok::AndOp, "/\\"); }
          else fail("stray '/'");
          break;
        case '-':
          adv();
          if (i < src.size() && src[i] == '>') { adv(); push(Tok::Arrow, "->"); }
          else fail("stray '-'");
          break;
        default:
          fail(std::string("unexpected character '") + c + "'");
      }
    }
    out.push_back({Tok::End, "", line, col});
    return out;
  }
};

struct Parser {
  std::vector<Token> toks;
  size_t pos = 0;
  Sort sort = Sort::Full;
  Mode mode = Mode::Curry;

  const Token& peek(int k = 0) const { return toks[std::min(pos + k, toks.size() - 1)]; }
  Token next() { return toks[pos == toks.size() - 1 ? pos : pos++]; }

  [[noreturn]] void fail(const std::string& msg) {
    const Token& t = peek();
    throw ParseError(msg + (t.kind == Tok::End ? " (at end of input)" : " near '" + t.text + "'"),
                     t.line, t.col);
  }

  Token expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail("expected " + what);
    return next();
  }

  // ---- types ----

  TypePtr type() { return type_arrow(); }

  TypePtr type_arrow() {
    TypePtr l = type_or();
    if (peek().kind == Tok::Arrow) {
      next();
      return mk_arrow(l, type_arrow());
    }
    return l;
  }

  TypePtr type_or() {
    TypePtr l = type_and();
    while (peek().kind == Tok::OrOp) {
      next();
      l = mk_or(l, type_and());
    }
    return l;
  }

  TypePtr type_and() {
    TypePtr l = type_unary();
    while (peek().kind == Tok::AndOp) {
      next();
      l = mk_and(l, type_unary());
    }
    return l;
  }

  TypePtr type_unary() {
    switch (peek().kind) {
      case Tok::Tilde:
        next();
        return mk_neg(type_unary());
      case Tok::Bot:
        next();
        return mk_bot();
      case Tok::Ident:
        return mk_atom(next().text);
      case Tok::LParen: {
        next();
        TypePtr t = type_arrow();
        expect(Tok::RParen, "')'");
        return t;
      }
      default:
        fail("expected a type");
    }
  }

  // ---- terms ----

  void need_sort(Sort s, const std::string& what) {
    bool ok = s == Sort::Lambda || (s == Sort::LambdaMu && sort != Sort::Lambda) ||
              (s == Sort::Full && sort == Sort::Full);
    if (!ok) fail("sort violation: " + what + " not allowed in sort " +
                  std::string(to_string(sort)));
  }

  TermPtr term() {
    switch (peek().kind) {
      case Tok::Lambda: {
        next();
        std::string x = expect(Tok::Ident, "a variable").text;
        TypePtr ann;
        if (peek().kind == Tok::Colon) {
          next();
          ann = type();
        } else if (mode == Mode::Church) {
          fail("missing annotation on lambda binder " + x + " (church mode)");
        }
        expect(Tok::Dot, "'.'");
        return mk_lam(x, ann, term());
      }
      case Tok::Mu: {
        need_sort(Sort::LambdaMu, "mu");
        Token mu = next();
        std::string a = expect(Tok::Ident, "a mu variable").text;
        if (a == "phi") throw ParseError("phi is reserved and cannot be bound", mu.line, mu.col);
        TypePtr ann;
        if (peek().kind == Tok::Colon) {
          next();
          expect(Tok::Tilde, "'~'");
          ann = type();
        } else if (mode == Mode::Church) {
          fail("missing annotation on mu binder " + a + " (church mode)");
        }
        expect(Tok::Dot, "'.'");
        return mk_mu(a, ann, term());
      }
      case Tok::LBrack: {
        need_sort(Sort::LambdaMu, "a named term");
        next();
        std::string a = expect(Tok::Ident, "a mu variable").text;
        expect(Tok::RBrack, "']'");
        return mk_name(a, term());
      }
      case Tok::LAngle: {
        need_sort(Sort::Full, "a pair");
        next();
        TermPtr l = term();
        expect(Tok::Comma, "','");
        TermPtr r = term();
        expect(Tok::RAngle, "'>'");
        return mk_pair(l, r);
      }
      case Tok::W1:
      case Tok::W2: {
        need_sort(Sort::Full, "an injection");
        int idx = next().kind == Tok::W1 ? 1 : 2;
        return mk_inj(idx, nullptr, term());
      }
      case Tok::W1LB:
      case Tok::W2LB: {
        need_sort(Sort::Full, "an injection");
        int idx = next().kind == Tok::W1LB ? 1 : 2;
        TypePtr ann = type();
        expect(Tok::RBrack, "']'");
        return mk_inj(idx, ann, term());
      }
      case Tok::ConstLB: {
        next();
        std::string atom = expect(Tok::Ident, "an atom").text;
        expect(Tok::RBrack, "']'");
        return mk_const(atom);
      }
      case Tok::LParen: {
        next();
        TermPtr t = term();
        while (peek().kind != Tok::RParen) t = mk_app(t, elim());
        next();
        return t;
      }
      case Tok::Ident:
        return mk_var(next().text);
      default:
        fail("expected a term");
    }
  }

  ElimPtr elim() {
    switch (peek().kind) {
      case Tok::P1:
        need_sort(Sort::Full, "a projection");
        next();
        return mk_proj(1);
      case Tok::P2:
        need_sort(Sort::Full, "a projection");
        next();
        return mk_proj(2);
      case Tok::LBrack:
        // "[x." starts a case eliminator, "[a]" a named term argument.
        if (peek(1).kind == Tok::Ident && peek(2).kind == Tok::Dot) {
          need_sort(Sort::Full, "a case");
          next();
          std::string x1 = next().text;
          expect(Tok::Dot, "'.'");
          TermPtr n1 = term();
          expect(Tok::Pipe, "'|'");
          std::string x2 = expect(Tok::Ident, "a variable").text;
          expect(Tok::Dot, "'.'");
          TermPtr n2 = term();
          expect(Tok::RBrack, "']'");
          return mk_case(x1, n1, x2, n2);
        }
        return mk_arg(term());
      default:
        return mk_arg(term());
    }
  }
};

std::vector<std::string> split_entries(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == '\n' || c == ';' || c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool blank_entry(const std::string& s) {
  for (char c : s) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Effective precedence of a type as printed (negations print as ~A).
int type_prec(const TypePtr& t) {
  switch (t->kind) {
    case TypeKind::Atom:
    case TypeKind::Bot: return 4;
    case TypeKind::Arrow: return is_neg(t) ? 3 : 0;
    case TypeKind::And: return 2;
    case TypeKind::Or: return 1;
  }
  return 4;
}

void print_type_rec(const TypePtr& t, int min_prec, std::string& out) {
  int prec = type_prec(t);
  bool paren = prec < min_prec;
  if (paren) out += '(';
  switch (t->kind) {
    case TypeKind::Atom: out += t->atom; break;
    case TypeKind::Bot: out += "bot"; break;
    case TypeKind::Arrow:
      if (is_neg(t)) {
        out += '~';
        print_type_rec(t->lhs, 3, out);
      } else {
        print_type_rec(t->lhs, 1, out);
        out += " -> ";
        print_type_rec(t->rhs, 0, out);
      }
      break;
    case TypeKind::And:
      print_type_rec(t->lhs, 2, out);
      out += " /\\ ";
      print_type_rec(t->rhs, 3, out);
      break;
    case TypeKind::Or:
      print_type_rec(t->lhs, 1, out);
      out += " \\/ ";
      print_type_rec(t->rhs, 2, out);
      break;
  }
  if (paren) out += ')';
}

void print_term_rec(const TermPtr& t, std::string& out) {
  switch (t->kind) {
    case TermKind::Var:
      out += t->var;
      break;
    case TermKind::Const:
      out += "c[" + t->var + "]";
      break;
    case TermKind::Lam:
      out += "\\" + t->var;
      if (t->ann) out += ":" + print_type(t->ann);
      out += ". ";
      print_term_rec(t->lhs, out);
      break;
    case TermKind::Mu:
      out += "mu " + t->var;
      if (t->ann) out += ":~" + print_type(t->ann);
      out += ". ";
      print_term_rec(t->lhs, out);
      break;
    case TermKind::Name:
      out += "[" + t->var + "] ";
      print_term_rec(t->lhs, out);
      break;
    case TermKind::Inj:
      out += t->idx == 1 ? "w1" : "w2";
      if (t->ann) out += "[" + print_type(t->ann) + "]";
      out += " ";
      print_term_rec(t->lhs, out);
      break;
    case TermKind::Pair:
      out += "<";
      print_term_rec(t->lhs, out);
      out += ", ";
      print_term_rec(t->rhs, out);
      out += ">";
      break;
    case TermKind::App: {
      // Flatten the application spine.
      std::vector<ElimPtr> elims;
      TermPtr head = t;
      while (head->kind == TermKind::App) {
        elims.push_back(head->elim);
        head = head->lhs;
      }
      out += "(";
      print_term_rec(head, out);
      for (auto it = elims.rbegin(); it != elims.rend(); ++it) {
        out += " ";
        const Elim& e = **it;
        switch (e.kind) {
          case ElimKind::TermArg:
            print_term_rec(e.arg, out);
            break;
          case ElimKind::Proj:
            out += e.idx == 1 ? "p1" : "p2";
            break;
          case ElimKind::Case:
            out += "[" + e.x1 + ". ";
            print_term_rec(e.n1, out);
            out += " | " + e.x2 + ". ";
            print_term_rec(e.n2, out);
            out += "]";
            break;
        }
      }
      out += ")";
      break;
    }
  }
}

}  // namespace

TypePtr parse_type(const std::string& text) {
  Parser p{Lexer(text).run()};
  TypePtr t = p.type();
  if (p.peek().kind != Tok::End) p.fail("trailing input after type");
  return t;
}

std::string print_type(const TypePtr& t) {
  std::string out;
  print_type_rec(t, 0, out);
  return out;
}

TermPtr parse_term(const std::string& text, Sort sort, Mode mode) {
  Parser p{Lexer(text).run()};
  p.sort = sort;
  p.mode = mode;
  TermPtr t = p.term();
  if (p.peek().kind != Tok::End) p.fail("trailing input after term");
  return t;
}

std::string print_term(const TermPtr& t) {
  std::string out;
  print_term_rec(t, out);
  return out;
}

Context parse_context(const std::string& text) {
  Context ctx;
  for (const std::string& entry : split_entries(text)) {
    if (blank_entry(entry)) continue;
    Parser p{Lexer(entry).run()};
    if (p.peek().kind == Tok::Mu) {
      p.next();
      std::string a = p.expect(Tok::Ident, "a mu variable").text;
      p.expect(Tok::Colon, "':'");
      p.expect(Tok::Tilde, "'~'");
      TypePtr ty = p.type();
      if (p.peek().kind != Tok::End) p.fail("trailing input in context entry");
      if (!ctx.mu.emplace(a, ty).second)
        throw std::invalid_argument("duplicate mu variable " + a + " in context");
    } else {
      std::string x = p.expect(Tok::Ident, "a variable").text;
      p.expect(Tok::Colon, "':'");
      TypePtr ty = p.type();
      if (p.peek().kind != Tok::End) p.fail("trailing input in context entry");
      if (!ctx.lam.emplace(x, ty).second)
        throw std::invalid_argument("duplicate variable " + x + " in context");
    }
  }
  return ctx;
}

std::string print_context(const Context& ctx) {
  std::string out;
  for (auto& [x, ty] : ctx.lam) out += (out.empty() ? "" : ", ") + x + " : " + print_type(ty);
  for (auto& [a, ty] : ctx.mu) out += (out.empty() ? "" : ", ") + ("mu " + a) + " : ~" + print_type(ty);
  return out;
}

EquationSet parse_equations(const std::string& text) {
  std::vector<std::pair<std::string, TypePtr>> defs;
  for (const std::string& entry : split_entries(text)) {
    if (blank_entry(entry)) continue;
    Parser p{Lexer(entry).run()};
    std::string x = p.expect(Tok::Ident, "a recursion variable").text;
    p.expect(Tok::Equals, "'='");
    TypePtr ty = p.type();
    if (p.peek().kind != Tok::End) p.fail("trailing input in equation");
    defs.emplace_back(x, ty);
  }
  return EquationSet::make(std::move(defs));
}

std::string print_equations(const EquationSet& eqs) {
  std::string out;
  for (auto& [x, f] : eqs.defs()) out += x + " = " + print_type(f) + "\n";
  return out;
}

}  // namespace lmcalc
