#include "core/session.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "core/errors.hpp"

namespace spectral {
namespace {

enum class Tok { Ident, Int, Sym, Newline, End };

struct Token {
  Tok kind;
  std::string text;
  int line = 1;
  int col = 1;
};

std::string at(const Token& t) {
  return std::to_string(t.line) + ":" + std::to_string(t.col) + ": ";
}

[[noreturn]] void syntax(const Token& t, const std::string& msg) {
  fail(ErrorKind::SyntaxError, at(t) + msg);
}

std::vector<Token> lex(const std::string& text) {
  static const std::string symbols = "=+-*/^(),:";
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string s, int c) {
    out.push_back(Token{k, std::move(s), line, c});
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      push(Tok::Newline, "\n", col);
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      int start = col;
      std::string word;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) ||
              text[i] == '_')) {
        word += text[i++];
        ++col;
      }
      push(Tok::Ident, std::move(word), start);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int start = col;
      std::string digits;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        digits += text[i++];
        ++col;
      }
      if (i < text.size() && text[i] == '.')
        fail(ErrorKind::SyntaxError,
             std::to_string(line) + ":" + std::to_string(col) +
                 ": decimal literals are not supported, use exact fractions");
      push(Tok::Int, std::move(digits), start);
      continue;
    }
    if (symbols.find(c) != std::string::npos) {
      push(Tok::Sym, std::string(1, c), col);
      ++i;
      ++col;
      continue;
    }
    fail(ErrorKind::SyntaxError, std::to_string(line) + ":" +
                                     std::to_string(col) +
                                     ": unexpected character '" +
                                     std::string(1, c) + "'");
  }
  out.push_back(Token{Tok::End, "", line, col});
  return out;
}

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
  bool at_end() const { return peek().kind == Tok::End; }

  bool at_sym(char c) const {
    return peek().kind == Tok::Sym && peek().text[0] == c;
  }
  bool eat_sym(char c) {
    if (!at_sym(c)) return false;
    next();
    return true;
  }
  void expect_sym(char c, const std::string& what) {
    if (!eat_sym(c))
      syntax(peek(), "expected '" + std::string(1, c) + "' " + what);
  }
  Token expect_ident(const std::string& what) {
    if (peek().kind != Tok::Ident) syntax(peek(), "expected " + what);
    return next();
  }
  void end_statement() {
    if (peek().kind == Tok::Newline) {
      next();
      return;
    }
    if (peek().kind != Tok::End)
      syntax(peek(), "unexpected trailing input '" + peek().text + "'");
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

const std::set<std::string>& sugar_names() {
  static const std::set<std::string> s = {"cosh", "sinh", "sech"};
  return s;
}

const std::set<std::string>& reserved_names() {
  static const std::set<std::string> s = {"field", "basis", "D",    "E",
                                          "wp",    "wpd",   "cosh", "sinh",
                                          "sech",  "x",     "l"};
  return s;
}

// ^ takes a signed integer literal: INT, -INT, or (-INT).  Anything else
// in exponent position is NonIntegerExponent.
long parse_exponent(TokenStream& ts) {
  const Token open = ts.peek();
  bool paren = ts.eat_sym('(');
  bool neg = ts.eat_sym('-');
  const Token t = ts.peek();
  if (t.kind != Tok::Int)
    fail(ErrorKind::NonIntegerExponent,
         at(t) + "exponent must be an integer literal");
  ts.next();
  if (paren) {
    if (!ts.eat_sym(')'))
      fail(ErrorKind::NonIntegerExponent,
           at(ts.peek()) + "exponent must be an integer literal");
  }
  long v;
  try {
    v = std::stol(t.text);
  } catch (const std::exception&) {
    syntax(t, "exponent out of range");
  }
  if (v > 512) syntax(open, "exponent out of range");
  return neg ? -v : v;
}

mpq_class parse_rational_literal(TokenStream& ts) {
  bool neg = ts.eat_sym('-');
  const Token n = ts.peek();
  if (n.kind != Tok::Int) syntax(n, "expected a rational literal");
  ts.next();
  mpz_class num(n.text);
  mpz_class den(1);
  if (ts.eat_sym('/')) {
    const Token d = ts.peek();
    if (d.kind != Tok::Int) syntax(d, "expected a denominator");
    ts.next();
    den = mpz_class(d.text);
    if (den == 0) fail(ErrorKind::DivisionByZero, at(d) + "zero denominator");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return neg ? mpq_class(-q) : q;
}

// Recursive-descent evaluator for operator expressions.  Values are
// differential operators; scalars travel as order-0 operators so that
// products with D keep their left-to-right noncommutative meaning.
class OpEval {
 public:
  OpEval(TokenStream& ts, const DiffField::Ptr& field,
         const std::vector<std::pair<std::string, DiffOperator>>& bindings)
      : ts_(ts), field_(field), bindings_(bindings) {}

  DiffOperator expr() {
    DiffOperator acc = term();
    for (;;) {
      if (ts_.eat_sym('+'))
        acc += term();
      else if (ts_.eat_sym('-'))
        acc -= term();
      else
        return acc;
    }
  }

 private:
  DiffOperator term() {
    DiffOperator acc = unary();
    for (;;) {
      if (ts_.eat_sym('*')) {
        acc *= unary();
      } else if (ts_.at_sym('/')) {
        const Token slash = ts_.next();
        DiffOperator rhs = unary();
        if (rhs.is_zero())
          fail(ErrorKind::DivisionByZero, at(slash) + "division by zero");
        if (rhs.order() > 0)
          syntax(slash, "division by a differential operator");
        acc *= DiffOperator::scalar(rhs.coeff(0).invert());
      } else {
        return acc;
      }
    }
  }

  DiffOperator unary() {
    if (ts_.eat_sym('-')) return -unary();
    if (ts_.eat_sym('+')) return unary();
    return power();
  }

  DiffOperator power() {
    DiffOperator base = atom();
    if (!ts_.at_sym('^')) return base;
    const Token caret = ts_.next();
    long k = parse_exponent(ts_);
    if (k >= 0) return base.pow(k);
    if (base.is_zero())
      fail(ErrorKind::DivisionByZero, at(caret) + "zero to a negative power");
    if (base.order() > 0)
      syntax(caret, "negative power of a differential operator");
    return DiffOperator::scalar(base.coeff(0).pow(k));
  }

  DiffOperator atom() {
    const Token t = ts_.peek();
    if (t.kind == Tok::Int) {
      ts_.next();
      return DiffOperator::scalar(
          FieldElement::rational(field_, mpq_class(mpz_class(t.text))));
    }
    if (ts_.eat_sym('(')) {
      DiffOperator inner = expr();
      ts_.expect_sym(')', "to close the parenthesis");
      return inner;
    }
    if (t.kind != Tok::Ident) syntax(t, "expected an operand");
    ts_.next();
    const std::string& name = t.text;
    if (name == "D") return DiffOperator::dx(field_);
    if (sugar_names().count(name)) return sugar(t);
    if (field_->variant() == FieldVariant::Exponential && name == "E")
      return DiffOperator::scalar(FieldElement::generator(field_));
    if (field_->variant() == FieldVariant::Elliptic) {
      if (name == "wp")
        return DiffOperator::scalar(FieldElement::generator(field_));
      if (name == "wpd") return DiffOperator::scalar(FieldElement::wpd(field_));
    }
    const auto& params = field_->params();
    for (std::uint32_t i = 0; i < params.size(); ++i)
      if (params[i] == name)
        return DiffOperator::scalar(FieldElement::parameter(field_, i));
    for (const auto& [bname, value] : bindings_)
      if (bname == name) return value;
    fail(ErrorKind::UnknownSymbol, at(t) + "unbound name '" + name + "'");
  }

  DiffOperator sugar(const Token& t) {
    if (field_->variant() != FieldVariant::Exponential)
      fail(ErrorKind::SugarOutsideField,
           at(t) + t.text + "(x) requires the exponential field");
    ts_.expect_sym('(', "after '" + t.text + "'");
    const Token arg = ts_.expect_ident("the argument x");
    if (arg.text != "x") syntax(arg, "the sugar argument must be x");
    ts_.expect_sym(')', "to close the call");
    FieldElement E = FieldElement::generator(field_);
    FieldElement sum = E + E.invert();  // 2 cosh x
    FieldElement half = FieldElement::rational(field_, mpq_class(1, 2));
    FieldElement v;
    if (t.text == "cosh")
      v = sum * half;
    else if (t.text == "sinh")
      v = (E - E.invert()) * half;
    else
      v = FieldElement::rational(field_, 2) * sum.invert();
    return DiffOperator::scalar(v);
  }

  TokenStream& ts_;
  DiffField::Ptr field_;
  const std::vector<std::pair<std::string, DiffOperator>>& bindings_;
};

// Evaluator for polynomials in l, mu1..mu{nmu} over the constants of the
// context's field.
class SpecEval {
 public:
  SpecEval(TokenStream& ts, const SpecContext& ctx) : ts_(ts), ctx_(ctx) {}

  SpectralPolynomial expr() {
    SpectralPolynomial acc = term();
    while (ts_.at_sym('+') || ts_.at_sym('-')) {
      if (ts_.eat_sym('+'))
        acc += term();
      else {
        ts_.next();
        acc -= term();
      }
    }
    return acc;
  }

 private:
  static bool is_const(const SpectralPolynomial& p) {
    return p.deg_lambda() == 0 && p.deg_mu() == 0;
  }
  static FieldElement const_value(const SpectralPolynomial& p) {
    return p.coeff(SpectralMonomial::unit(p.nmu()));
  }

  SpectralPolynomial term() {
    SpectralPolynomial acc = unary();
    for (;;) {
      if (ts_.eat_sym('*')) {
        acc = acc * unary();
      } else if (ts_.at_sym('/')) {
        const Token slash = ts_.next();
        SpectralPolynomial rhs = unary();
        if (rhs.is_zero())
          fail(ErrorKind::DivisionByZero, at(slash) + "division by zero");
        if (!is_const(rhs)) syntax(slash, "division by a non-constant");
        acc = acc.mul_coeff(const_value(rhs).invert());
      } else {
        return acc;
      }
    }
  }

  SpectralPolynomial unary() {
    if (ts_.eat_sym('-')) return -unary();
    if (ts_.eat_sym('+')) return unary();
    return power();
  }

  SpectralPolynomial power() {
    SpectralPolynomial base = atom();
    if (!ts_.at_sym('^')) return base;
    const Token caret = ts_.next();
    long k = parse_exponent(ts_);
    if (k < 0) {
      if (base.is_zero())
        fail(ErrorKind::DivisionByZero, at(caret) + "zero to a negative power");
      if (!is_const(base)) syntax(caret, "negative power of a non-constant");
      return SpectralPolynomial::constant(ctx_, const_value(base).pow(k));
    }
    SpectralPolynomial r = SpectralPolynomial::rational(ctx_, 1);
    for (long i = 0; i < k; ++i) r = r * base;
    return r;
  }

  SpectralPolynomial atom() {
    const Token t = ts_.peek();
    if (t.kind == Tok::Int) {
      ts_.next();
      return SpectralPolynomial::rational(ctx_, mpq_class(mpz_class(t.text)));
    }
    if (ts_.eat_sym('(')) {
      SpectralPolynomial inner = expr();
      ts_.expect_sym(')', "to close the parenthesis");
      return inner;
    }
    if (t.kind != Tok::Ident) syntax(t, "expected an operand");
    ts_.next();
    const std::string& name = t.text;
    if (name == "l") return SpectralPolynomial::lambda_pow(ctx_, 1);
    if (name.size() > 2 && name.compare(0, 2, "mu") == 0) {
      bool digits = true;
      for (std::size_t i = 2; i < name.size(); ++i)
        digits = digits &&
                 std::isdigit(static_cast<unsigned char>(name[i])) != 0;
      if (digits && name[2] != '0') {
        long idx = 0;
        try {
          idx = std::stol(name.substr(2));
        } catch (const std::exception&) {
          idx = 0;
        }
        if (idx >= 1 && idx <= static_cast<long>(ctx_.nmu))
          return SpectralPolynomial::mu_var(
              ctx_, static_cast<std::uint32_t>(idx - 1));
        fail(ErrorKind::UnknownSymbol,
             at(t) + name + " is outside this basis (it has " +
                 std::to_string(ctx_.nmu) + " mu variables)");
      }
    }
    const auto& params = ctx_.field->params();
    for (std::uint32_t i = 0; i < params.size(); ++i)
      if (params[i] == name)
        return SpectralPolynomial::constant(
            ctx_, FieldElement::parameter(ctx_.field, i));
    fail(ErrorKind::UnknownSymbol, at(t) + "unbound name '" + name + "'");
  }

  TokenStream& ts_;
  SpecContext ctx_;
};

struct FieldDecl {
  DiffField::Ptr field;
  std::vector<std::string> args;
};

FieldDecl parse_field_decl(TokenStream& ts) {
  ts.next();  // 'field'
  const Token variant = ts.expect_ident("a field variant");
  if (variant.text == "exponential") return {DiffField::exponential(), {}};
  if (variant.text == "elliptic") {
    ts.expect_sym('(', "after 'elliptic'");
    auto arg = [&]() -> std::pair<DiffField::EllipticArg, std::string> {
      if (ts.peek().kind == Tok::Ident) {
        Token name = ts.next();
        return {{name.text, mpq_class(0)}, name.text};
      }
      mpq_class v = parse_rational_literal(ts);
      return {{std::nullopt, v}, v.get_str()};
    };
    auto [g2, a1] = arg();
    ts.expect_sym(',', "between the elliptic invariants");
    auto [g3, a2] = arg();
    ts.expect_sym(')', "to close the declaration");
    if (g2.name && g3.name && *g2.name == *g3.name)
      syntax(variant, "elliptic parameters must be distinct");
    return {DiffField::elliptic(g2, g3), {a1, a2}};
  }
  if (variant.text == "constants") {
    ts.expect_sym('(', "after 'constants'");
    std::vector<std::string> names;
    if (!ts.at_sym(')')) {
      for (;;) {
        Token name = ts.expect_ident("a parameter name");
        for (const auto& seen : names)
          if (seen == name.text) syntax(name, "duplicate parameter name");
        names.push_back(name.text);
        if (!ts.eat_sym(',')) break;
      }
    }
    ts.expect_sym(')', "to close the declaration");
    return {DiffField::constants(names), names};
  }
  syntax(variant, "unknown field variant '" + variant.text + "'");
}

}  // namespace

const DiffOperator* Session::find(const std::string& name) const {
  for (const auto& [bname, op] : bindings)
    if (bname == name) return &op;
  return nullptr;
}

const DiffOperator& Session::L() const {
  const DiffOperator* op = find(L_name);
  if (!op) fail(ErrorKind::Internal, "session lost its designated L");
  return *op;
}

std::vector<DiffOperator> Session::goodearl_gens() const {
  std::vector<DiffOperator> gens;
  gens.reserve(basis_names.size() + 1);
  gens.push_back(DiffOperator::one(field));
  for (const auto& name : basis_names) {
    const DiffOperator* op = find(name);
    if (!op) fail(ErrorKind::Internal, "session lost basis name " + name);
    gens.push_back(*op);
  }
  return gens;
}

Session parse_session(const std::string& text) {
  TokenStream ts(lex(text));
  Session s;
  bool have_field = false, have_basis = false;
  while (!ts.at_end()) {
    if (ts.peek().kind == Tok::Newline) {
      ts.next();
      continue;
    }
    const Token head = ts.peek();
    if (head.kind != Tok::Ident) syntax(head, "expected a statement");
    if (head.text == "field") {
      if (have_field) syntax(head, "duplicate field declaration");
      FieldDecl decl = parse_field_decl(ts);
      s.field = decl.field;
      s.field_args = std::move(decl.args);
      have_field = true;
      ts.end_statement();
      continue;
    }
    if (!have_field) syntax(head, "the field declaration must come first");
    if (head.text == "basis") {
      if (have_basis) syntax(head, "duplicate basis declaration");
      ts.next();
      s.L_name = ts.expect_ident("the name of L").text;
      ts.expect_sym(':', "after the designated L");
      if (ts.peek().kind == Tok::Ident) {
        for (;;) {
          s.basis_names.push_back(ts.expect_ident("a basis name").text);
          if (!ts.eat_sym(',')) break;
        }
      }
      have_basis = true;
      ts.end_statement();
      continue;
    }
    Token name = ts.expect_ident("a binding name");
    if (reserved_names().count(name.text))
      syntax(name, "name '" + name.text + "' is reserved");
    for (const auto& p : s.field->params())
      if (p == name.text)
        syntax(name, "name '" + name.text + "' is a field parameter");
    if (s.find(name.text))
      syntax(name, "name '" + name.text + "' is already bound");
    ts.expect_sym('=', "after the binding name");
    OpEval eval(ts, s.field, s.bindings);
    DiffOperator value = eval.expr();
    ts.end_statement();
    s.bindings.emplace_back(name.text, std::move(value));
  }
  const Token end = ts.peek();
  if (!have_field) syntax(end, "missing field declaration");
  if (!have_basis) syntax(end, "missing basis declaration");
  if (!s.find(s.L_name))
    fail(ErrorKind::UnknownSymbol,
         "basis designates unbound name '" + s.L_name + "'");
  for (const auto& bname : s.basis_names)
    if (!s.find(bname))
      fail(ErrorKind::UnknownSymbol,
           "basis lists unbound name '" + bname + "'");
  if (!s.L().is_normal_form())
    fail(ErrorKind::NotNormalForm,
         "designated L must be monic with zero coefficient at order n-1");
  return s;
}

std::string render_session(const Session& s) {
  std::ostringstream out;
  out << "field ";
  switch (s.field->variant()) {
    case FieldVariant::Exponential:
      out << "exponential";
      break;
    case FieldVariant::Elliptic:
      out << "elliptic(" << s.field_args[0] << ", " << s.field_args[1] << ")";
      break;
    case FieldVariant::Constants: {
      out << "constants(";
      for (std::size_t i = 0; i < s.field_args.size(); ++i)
        out << (i ? ", " : "") << s.field_args[i];
      out << ")";
      break;
    }
  }
  out << "\n";
  for (const auto& [name, op] : s.bindings)
    out << name << " = " << op.to_string() << "\n";
  out << "basis " << s.L_name << ":";
  for (std::size_t i = 0; i < s.basis_names.size(); ++i)
    out << (i ? "," : "") << " " << s.basis_names[i];
  out << "\n";
  return out.str();
}

DiffOperator parse_operator_expr(const std::string& text, const Session& s) {
  TokenStream ts(lex(text));
  while (ts.peek().kind == Tok::Newline) ts.next();
  OpEval eval(ts, s.field, s.bindings);
  DiffOperator value = eval.expr();
  while (ts.peek().kind == Tok::Newline) ts.next();
  if (!ts.at_end())
    syntax(ts.peek(), "unexpected trailing input '" + ts.peek().text + "'");
  return value;
}

SpectralPolynomial parse_spectral_expr(const std::string& text,
                                       const SpecContext& ctx) {
  TokenStream ts(lex(text));
  while (ts.peek().kind == Tok::Newline) ts.next();
  SpecEval eval(ts, ctx);
  SpectralPolynomial value = eval.expr();
  while (ts.peek().kind == Tok::Newline) ts.next();
  if (!ts.at_end())
    syntax(ts.peek(), "unexpected trailing input '" + ts.peek().text + "'");
  return value;
}

}  // namespace spectral
