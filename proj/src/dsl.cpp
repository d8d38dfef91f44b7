#include "gradedring/dsl.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "gradedring/errors.hpp"

namespace gradedring::dsl {

bool Expr::operator==(const Expr& o) const {
  return kind == o.kind && value == o.value && name == o.name && exponent == o.exponent &&
         args == o.args;
}

namespace {

struct Token {
  enum class Kind { Ident, Int, Sym, End };
  Kind kind = Kind::End;
  std::string text;
  SourcePos pos;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Token::Kind::Ident, std::string(src.substr(i, j - i)), {line, col}});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Kind::Int, std::string(src.substr(i, j - i)), {line, col}});
      advance(j - i);
    } else if (std::string_view("{}()+-*^/,=").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::Sym, std::string(1, c), {line, col}});
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }
  out.push_back({Token::Kind::End, "", {line, col}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  RingFile file() {
    RingFile f;
    while (peek().kind != Token::Kind::End) f.blocks.push_back(block());
    if (f.blocks.empty()) throw ParseError("no ring blocks", peek().pos.line, peek().pos.column);
    return f;
  }

  Expr standalone(bool allow_rationals) {
    allow_rationals_ = allow_rationals;
    rational_context_ = "base is not Q";
    Expr e = sum();
    if (peek().kind != Token::Kind::End) fail("unexpected '" + peek().text + "' after expression");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool is_sym(const char* s) const { return peek().kind == Token::Kind::Sym && peek().text == s; }
  bool is_word(const char* s) const { return peek().kind == Token::Kind::Ident && peek().text == s; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().pos.line, peek().pos.column);
  }
  [[noreturn]] static void fail_at(const std::string& msg, SourcePos p) {
    throw ParseError(msg, p.line, p.column);
  }

  void expect_sym(const char* s) {
    if (!is_sym(s)) fail(std::string("expected '") + s + "'" + found());
    next();
  }
  std::string found() const {
    return peek().kind == Token::Kind::End ? ", found end of input" : ", found '" + peek().text + "'";
  }
  std::string ident(const char* what) {
    if (peek().kind != Token::Kind::Ident) fail(std::string("expected ") + what + found());
    return next().text;
  }
  mpz_class integer(const char* what) {
    if (peek().kind != Token::Kind::Int) fail(std::string("expected ") + what + found());
    return mpz_class(next().text);
  }
  std::int64_t signed_small(const char* what) {
    bool neg = false;
    if (is_sym("-")) {
      next();
      neg = true;
    }
    const SourcePos p = peek().pos;
    mpz_class v = integer(what);
    if (!v.fits_slong_p()) fail_at(std::string(what) + " out of range", p);
    return neg ? -v.get_si() : v.get_si();
  }

  RingBlock block() {
    RingBlock b;
    b.pos = peek().pos;
    if (!is_word("ring")) fail("expected 'ring'" + found());
    next();
    b.name = ident("ring name");
    expect_sym("{");
    allow_rationals_ = false;
    rational_context_ = "base must be declared as Q before rational literals";
    while (!is_sym("}")) {
      if (peek().kind == Token::Kind::End) fail("unterminated ring block " + b.name);
      statement(b);
    }
    next();
    return b;
  }

  void statement(RingBlock& b) {
    const SourcePos p = peek().pos;
    const std::string kw = ident("statement keyword");
    if (kw == "base") {
      if (b.base) fail_at("duplicate base", p);
      const std::string kind = ident("base ring");
      if (kind == "Z") {
        b.base = BaseRing::integers();
      } else if (kind == "Q") {
        b.base = BaseRing::rationals();
      } else if (kind == "Zmod") {
        const SourcePos np = peek().pos;
        mpz_class n = integer("modulus");
        if (n < 2) fail_at("modulus must be >= 2", np);
        b.base = BaseRing::integers_mod(n);
      } else {
        fail_at("unknown base ring '" + kind + "'", p);
      }
      allow_rationals_ = b.base->kind() == BaseRing::Kind::Rationals;
      rational_context_ = "base is " + b.base->to_string();
    } else if (kw == "grading") {
      if (b.grading) fail_at("duplicate grading", p);
      const std::string kind = ident("grading group");
      if (kind == "Z") {
        int rank = 1;
        if (is_sym("^")) {
          next();
          const SourcePos rp = peek().pos;
          mpz_class r = integer("rank");
          if (r < 1 || r > kMaxGradingRank) {
            fail_at("rank must lie in [1, " + std::to_string(kMaxGradingRank) + "]", rp);
          }
          rank = static_cast<int>(r.get_si());
        }
        if (is_word("lex")) next();
        b.grading = GradingGroup::free_lex(rank);
      } else if (kind == "Zmod") {
        const SourcePos mp = peek().pos;
        mpz_class m = integer("modulus");
        if (m < 2 || !m.fits_slong_p()) fail_at("grading modulus must be >= 2", mp);
        b.grading = GradingGroup::cyclic(m.get_si());
      } else {
        fail_at("unknown grading group '" + kind + "'", p);
      }
    } else if (kw == "gen") {
      if (!b.grading) fail_at("grading must be declared before generators", p);
      GenDecl g;
      g.pos = peek().pos;
      g.name = ident("generator name");
      if (!is_word("deg")) fail("expected 'deg'" + found());
      next();
      const SourcePos gp = peek().pos;
      if (is_sym("(")) {
        next();
        g.grade.push_back(signed_small("grade coordinate"));
        while (is_sym(",")) {
          next();
          g.grade.push_back(signed_small("grade coordinate"));
        }
        expect_sym(")");
      } else {
        g.grade.push_back(signed_small("grade"));
      }
      if (static_cast<int>(g.grade.size()) != b.grading->rank()) {
        fail_at("grade has " + std::to_string(g.grade.size()) + " coordinates, " +
                    b.grading->to_string() + " needs " + std::to_string(b.grading->rank()),
                gp);
      }
      if (is_word("invertible")) {
        next();
        g.invertible = true;
      }
      b.gens.push_back(std::move(g));
    } else if (kw == "rel") {
      b.rels.push_back(sum());
    } else if (kw == "reduce") {
      if (b.reduction) fail_at("duplicate reduce", p);
      const std::string r = ident("reduction engine");
      if (r == "none") {
        b.reduction = Reduction::None;
      } else if (r == "monic") {
        b.reduction = Reduction::MonicUnivariate;
      } else if (r == "linear") {
        b.reduction = Reduction::PerDegreeLinear;
      } else if (r == "monomial") {
        b.reduction = Reduction::MonomialIdeal;
      } else {
        fail_at("unknown reduction engine '" + r + "'", p);
      }
    } else if (kw == "elem") {
      ElemDecl e;
      e.pos = peek().pos;
      e.name = ident("element name");
      expect_sym("=");
      e.value = sum();
      b.elems.push_back(std::move(e));
    } else {
      fail_at("unknown statement '" + kw + "'", p);
    }
  }

  static Expr node(Expr::Kind k, SourcePos p, std::vector<Expr> args) {
    Expr e;
    e.kind = k;
    e.pos = p;
    e.args = std::move(args);
    return e;
  }

  Expr sum() {
    Expr left = term();
    while (is_sym("+") || is_sym("-")) {
      const SourcePos p = peek().pos;
      const bool plus = next().text == "+";
      Expr right = term();
      left = node(plus ? Expr::Kind::Add : Expr::Kind::Sub, p, {std::move(left), std::move(right)});
    }
    return left;
  }

  Expr term() {
    Expr left = unary();
    while (is_sym("*")) {
      const SourcePos p = next().pos;
      Expr right = unary();
      left = node(Expr::Kind::Mul, p, {std::move(left), std::move(right)});
    }
    return left;
  }

  Expr unary() {
    if (is_sym("-")) {
      const SourcePos p = next().pos;
      return node(Expr::Kind::Neg, p, {unary()});
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (!is_sym("^")) return base;
    const SourcePos p = next().pos;
    Expr e = node(Expr::Kind::Pow, p, {std::move(base)});
    e.exponent = signed_small("exponent");
    return e;
  }

  Expr primary() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Int) {
      Expr e;
      e.pos = t.pos;
      e.kind = Expr::Kind::Int;
      e.value = mpq_class(mpz_class(next().text));
      if (is_sym("/")) {
        const SourcePos slash = peek().pos;
        if (!allow_rationals_) fail_at("rational literal not allowed: " + rational_context_, e.pos);
        next();
        mpz_class den = integer("denominator");
        if (den == 0) fail_at("zero denominator", slash);
        e.kind = Expr::Kind::Rational;
        e.value = mpq_class(e.value.get_num(), den);
        e.value.canonicalize();
      }
      return e;
    }
    if (t.kind == Token::Kind::Ident) {
      Expr e;
      e.pos = t.pos;
      e.kind = Expr::Kind::Name;
      e.name = next().text;
      return e;
    }
    if (is_sym("(")) {
      next();
      Expr e = sum();
      expect_sym(")");
      return e;
    }
    fail("expected an expression" + found());
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  bool allow_rationals_ = false;
  std::string rational_context_;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
  }
}

std::string wrap(const Expr& e, bool parens) {
  std::string s = print_expr(e);
  return parens ? "(" + s + ")" : s;
}

std::string literal(const mpq_class& v) { return v.get_str(); }

}  // namespace

RingFile parse_ring_file(std::string_view text) { return Parser(lex(text)).file(); }

Expr parse_expression(std::string_view text, bool allow_rationals) {
  return Parser(lex(text)).standalone(allow_rationals);
}

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Int:
    case Expr::Kind::Rational: return literal(e.value);
    case Expr::Kind::Name: return e.name;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return wrap(e.args[0], precedence(e.args[0]) < 1) +
             (e.kind == Expr::Kind::Add ? " + " : " - ") + wrap(e.args[1], precedence(e.args[1]) <= 1);
    case Expr::Kind::Mul:
      return wrap(e.args[0], precedence(e.args[0]) < 2) + "*" +
             wrap(e.args[1], precedence(e.args[1]) <= 2);
    case Expr::Kind::Neg: return "-" + wrap(e.args[0], precedence(e.args[0]) < 3);
    case Expr::Kind::Pow:
      return wrap(e.args[0], precedence(e.args[0]) < 5 || e.args[0].kind == Expr::Kind::Rational) +
             "^" + std::to_string(e.exponent);
  }
  return "?";
}

std::string print_ring_file(const RingFile& file) {
  std::ostringstream out;
  for (std::size_t i = 0; i < file.blocks.size(); ++i) {
    const auto& b = file.blocks[i];
    if (i > 0) out << "\n";
    out << "ring " << b.name << " {\n";
    if (b.base) out << "  base " << b.base->to_string() << "\n";
    if (b.grading) out << "  grading " << b.grading->to_string() << "\n";
    for (const auto& g : b.gens) {
      out << "  gen " << g.name << " deg ";
      if (g.grade.size() == 1) {
        out << g.grade[0];
      } else {
        out << "(";
        for (std::size_t k = 0; k < g.grade.size(); ++k) out << (k ? "," : "") << g.grade[k];
        out << ")";
      }
      if (g.invertible) out << " invertible";
      out << "\n";
    }
    for (const auto& r : b.rels) out << "  rel " << print_expr(r) << "\n";
    if (b.reduction) out << "  reduce " << to_string(*b.reduction) << "\n";
    for (const auto& e : b.elems) out << "  elem " << e.name << " = " << print_expr(e.value) << "\n";
    out << "}\n";
  }
  return out.str();
}

Element evaluate(const Expr& e, const RingHandle& ring,
                 const std::vector<std::pair<std::string, Element>>& named) {
  auto here = [&](const std::string& msg) { return ParseError(msg, e.pos.line, e.pos.column); };
  switch (e.kind) {
    case Expr::Kind::Int:
    case Expr::Kind::Rational:
      try {
        return Element::constant(ring, e.value);
      } catch (const Error& err) {
        throw here(err.what());
      }
    case Expr::Kind::Name: {
      if (ring->generator_index(e.name)) return Element::generator(ring, e.name);
      for (auto it = named.rbegin(); it != named.rend(); ++it) {
        if (it->first == e.name) return it->second;
      }
      throw here("unknown identifier '" + e.name + "'");
    }
    case Expr::Kind::Add: return evaluate(e.args[0], ring, named) + evaluate(e.args[1], ring, named);
    case Expr::Kind::Sub: return evaluate(e.args[0], ring, named) - evaluate(e.args[1], ring, named);
    case Expr::Kind::Mul: return evaluate(e.args[0], ring, named) * evaluate(e.args[1], ring, named);
    case Expr::Kind::Neg: return -evaluate(e.args[0], ring, named);
    case Expr::Kind::Pow:
      try {
        return evaluate(e.args[0], ring, named).pow(e.exponent);
      } catch (const PreconditionError& err) {
        throw here(err.what());
      }
  }
  throw here("bad expression");
}

namespace {

Reduction infer_reduction(const RingBlock& b, const RingPresentation& p) {
  if (p.relations.empty()) return Reduction::None;
  bool monomial = true;
  for (const auto& r : p.relations) {
    if (r.size() != 1 || !p.base.inverse(r.begin()->second)) monomial = false;
  }
  if (monomial) return Reduction::MonomialIdeal;
  if (p.generators.size() == 1 && p.relations.size() == 1 &&
      p.relations[0].rbegin()->second == 1) {
    return Reduction::MonicUnivariate;
  }
  if (p.base.is_field()) return Reduction::PerDegreeLinear;
  throw ParseError("cannot infer a reduction engine for ring " + b.name + "; add a reduce statement",
                   b.pos.line, b.pos.column);
}

}  // namespace

BuiltRing build_ring(const RingBlock& b) {
  auto at = [](SourcePos p, const std::string& msg) { return ParseError(msg, p.line, p.column); };
  if (!b.base) throw at(b.pos, "ring " + b.name + " has no base");
  if (!b.grading) throw at(b.pos, "ring " + b.name + " has no grading");

  RingPresentation p;
  p.name = b.name;
  p.base = *b.base;
  p.grading = *b.grading;
  std::set<std::string> names;
  for (const auto& g : b.gens) {
    if (!names.insert(g.name).second) throw at(g.pos, "duplicate generator " + g.name);
    p.generators.push_back(Generator{g.name, Grade(p.grading, g.grade), g.invertible});
  }

  // Relations are evaluated in the free ring on the same generators.
  RingHandle free_ring = Ring::build(p);
  for (const auto& r : b.rels) {
    Element v = evaluate(r, free_ring);
    const auto grades = v.support();
    if (grades.size() > 1) {
      std::string set = "{";
      for (std::size_t i = 0; i < grades.size(); ++i) set += (i ? "," : "") + grades[i].to_string();
      throw at(r.pos, "relation not homogeneous: grades " + set + "}");
    }
    p.relations.push_back(v.terms());
  }
  p.reduction = b.reduction ? *b.reduction : infer_reduction(b, p);

  BuiltRing out;
  try {
    out.ring = Ring::build(p);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    throw at(b.pos, err.what());
  }
  for (const auto& e : b.elems) {
    if (out.ring->generator_index(e.name)) throw at(e.pos, "element name shadows generator " + e.name);
    out.elements.emplace_back(e.name, evaluate(e.value, out.ring, out.elements));
  }
  return out;
}

BuiltRing load_ring(std::string_view text, const std::string& name) {
  RingFile f = parse_ring_file(text);
  if (name.empty()) return build_ring(f.blocks.front());
  for (const auto& b : f.blocks) {
    if (b.name == name) return build_ring(b);
  }
  throw PreconditionError("no ring named " + name);
}

BuiltRing load_ring_file(const std::string& path, const std::string& name) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_ring(ss.str(), name);
}

}  // namespace gradedring::dsl
