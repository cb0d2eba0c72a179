#include "gross/parser.hpp"

#include <cctype>

#include "gross/error.hpp"

namespace gross {

namespace {

constexpr const char* kGrossoneUtf8 = "\xE2\x91\xA0";
constexpr int kMaxDepth = 1000;

enum class Tok { Number, Grossone, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;  // 1-based code-point position
  Rational value;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_whitespace();
    std::size_t tok_pos = pos_;
    if (byte_ >= src_.size()) return {Tok::End, tok_pos, {}};

    unsigned char c = src_[byte_];
    if (std::isdigit(c)) return lex_number(tok_pos);
    if (std::isalpha(c)) return lex_word(tok_pos);

    switch (c) {
      case '+': advance(); return {Tok::Plus, tok_pos, {}};
      case '-': advance(); return {Tok::Minus, tok_pos, {}};
      case '*': advance(); return {Tok::Star, tok_pos, {}};
      case '/': advance(); return {Tok::Slash, tok_pos, {}};
      case '^': advance(); return {Tok::Caret, tok_pos, {}};
      case '(': advance(); return {Tok::LParen, tok_pos, {}};
      case ')': advance(); return {Tok::RParen, tok_pos, {}};
      default: break;
    }
    if (src_.substr(byte_).starts_with(kGrossoneUtf8)) {
      advance();
      return {Tok::Grossone, tok_pos, {}};
    }
    throw ParseError(tok_pos, "unexpected character");
  }

private:
  void skip_whitespace() {
    while (byte_ < src_.size()) {
      unsigned char c = src_[byte_];
      if (c != ' ' && c != '\t' && c != '\r' && c != '\n') break;
      advance();
    }
  }

  // Advances one code point (one byte when the sequence is invalid UTF-8).
  void advance() {
    unsigned char c = src_[byte_];
    std::size_t len = 1;
    if ((c & 0xE0) == 0xC0) len = 2;
    else if ((c & 0xF0) == 0xE0) len = 3;
    else if ((c & 0xF8) == 0xF0) len = 4;
    byte_ += std::min(len, src_.size() - byte_);
    ++pos_;
  }

  Token lex_number(std::size_t tok_pos) {
    mpz_class num = 0;
    mpz_class den = 1;
    while (byte_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[byte_]))) {
      num = num * 10 + (src_[byte_] - '0');
      advance();
    }
    if (byte_ < src_.size() && src_[byte_] == '.') {
      advance();
      if (byte_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[byte_]))) {
        throw ParseError(pos_, "expected digit after decimal point");
      }
      while (byte_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[byte_]))) {
        num = num * 10 + (src_[byte_] - '0');
        den *= 10;
        advance();
      }
    }
    return {Tok::Number, tok_pos, Rational(num, den)};
  }

  Token lex_word(std::size_t tok_pos) {
    std::string word;
    while (byte_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[byte_]))) {
      word += src_[byte_];
      advance();
    }
    if (word == "G") return {Tok::Grossone, tok_pos, {}};
    std::string lower = word;
    for (char& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (lower == "grossone") return {Tok::Grossone, tok_pos, {}};
    throw ParseError(tok_pos, "unrecognized word '" + word + "'");
  }

  std::string_view src_;
  std::size_t byte_ = 0;
  std::size_t pos_ = 1;
};

AstPtr make_node(AstKind kind) {
  auto n = std::make_unique<Ast>();
  n->kind = kind;
  return n;
}

AstPtr make_binop(AstKind kind, AstPtr lhs, AstPtr rhs) {
  auto n = make_node(kind);
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
public:
  explicit Parser(std::string_view src) : lexer_(src) { bump(); }

  AstPtr run() {
    AstPtr e = parse_expr();
    if (cur_.kind != Tok::End) throw ParseError(cur_.pos, "expected operator or end of input");
    return e;
  }

private:
  void bump() { cur_ = lexer_.next(); }

  bool accept(Tok k) {
    if (cur_.kind != k) return false;
    bump();
    return true;
  }

  AstPtr parse_expr() {
    DepthGuard guard(this);
    AstPtr lhs = parse_term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      AstKind op = cur_.kind == Tok::Plus ? AstKind::Add : AstKind::Sub;
      bump();
      lhs = make_binop(op, std::move(lhs), parse_term());
    }
    return lhs;
  }

  AstPtr parse_term() {
    AstPtr lhs = parse_unary();
    while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
      AstKind op = cur_.kind == Tok::Star ? AstKind::Mul : AstKind::Div;
      bump();
      lhs = make_binop(op, std::move(lhs), parse_unary());
    }
    return lhs;
  }

  AstPtr parse_unary() {
    DepthGuard guard(this);
    if (accept(Tok::Minus)) {
      auto n = make_node(AstKind::Neg);
      n->lhs = parse_unary();
      return n;
    }
    return parse_power();
  }

  AstPtr parse_power() {
    AstPtr base = parse_atom();
    if (cur_.kind == Tok::Caret) {
      bump();
      return make_binop(AstKind::Pow, std::move(base), parse_unary());
    }
    return base;
  }

  // Caller-facing atoms. A numeric literal directly followed by a grossone
  // atom is an implicit product; the grossone's power is consumed here so
  // that "2G^3" reads as 2*(G^3).
  AstPtr parse_atom() {
    if (cur_.kind == Tok::Number) {
      auto n = make_node(AstKind::Number);
      n->value = cur_.value;
      bump();
      if (cur_.kind == Tok::Grossone) {
        bump();
        AstPtr g = make_node(AstKind::Grossone);
        if (accept(Tok::Caret)) g = make_binop(AstKind::Pow, std::move(g), parse_unary());
        return make_binop(AstKind::Mul, std::move(n), std::move(g));
      }
      return n;
    }
    if (cur_.kind == Tok::Grossone) {
      bump();
      return make_node(AstKind::Grossone);
    }
    if (accept(Tok::LParen)) {
      DepthGuard guard(this);
      AstPtr e = parse_expr();
      if (!accept(Tok::RParen)) throw ParseError(cur_.pos, "expected ')'");
      return e;
    }
    throw ParseError(cur_.pos, "expected a number, grossone, or '('");
  }

  struct DepthGuard {
    explicit DepthGuard(Parser* p) : parser(p) {
      if (++parser->depth_ > kMaxDepth) {
        throw ParseError(parser->cur_.pos, "expression too deeply nested");
      }
    }
    ~DepthGuard() { --parser->depth_; }
    Parser* parser;
  };

  Lexer lexer_;
  Token cur_{Tok::End, 1, {}};
  int depth_ = 0;
};

GrossNumber eval_pow(const Ast& ast) {
  if (ast.rhs->kind == AstKind::Grossone) return pow_grossone(eval_ast(*ast.lhs));

  GrossNumber expo = eval_ast(*ast.rhs);
  if (!expo.is_purely_finite()) {
    throw Error(ErrorKind::NotRepresentable, "exponent must evaluate to a finite rational");
  }
  Rational r = expo.finite_value();
  GrossNumber base = eval_ast(*ast.lhs);

  if (r.is_integer()) {
    if (!r.num().fits_slong_p()) throw Error(ErrorKind::NotRepresentable, "exponent too large");
    return pow(base, r.to_slong());
  }

  if (base.is_zero()) {
    if (r.sign() > 0) return GrossNumber();
    throw Error(ErrorKind::ZeroToNegativePower, "0 raised to a negative power");
  }
  if (!base.is_single_term()) {
    throw Error(ErrorKind::NotRepresentable, "fractional power of a multi-term gross-number");
  }
  const GrossTerm& t = base.leading();
  if (!r.den().fits_ulong_p() || !r.num().fits_slong_p()) {
    throw Error(ErrorKind::NotRepresentable, "exponent too large");
  }
  auto root = t.coeff.exact_root(r.den().get_ui());
  if (!root) {
    throw Error(ErrorKind::NotRepresentable,
                "coefficient " + t.coeff.to_string() + " has no exact rational root");
  }
  return GrossNumber::grosspower(root->pow_int(r.num().get_si()), t.expo * r);
}

std::string expo_string(const Rational& p) {
  if (p.is_integer()) return p.to_string();
  return "(" + p.to_string() + ")";
}

std::string term_string(const Rational& abs_coeff, const Rational& expo, const std::string& g) {
  if (expo.is_zero()) return abs_coeff.to_string();
  std::string base = g;
  if (expo != Rational(1L)) base += "^" + expo_string(expo);
  if (abs_coeff.is_one()) return base;
  if (abs_coeff.is_integer()) return abs_coeff.to_string() + base;
  // "31G^2/10" parses back as (31*G^2)/10, "G/2" as half a grossone
  std::string head = abs_coeff.num() == 1 ? base : abs_coeff.num().get_str() + base;
  return head + "/" + abs_coeff.den().get_str();
}

}  // namespace

AstPtr parse(std::string_view text) {
  Parser parser(text);
  return parser.run();
}

GrossNumber eval_ast(const Ast& ast) {
  switch (ast.kind) {
    case AstKind::Number: return GrossNumber(ast.value);
    case AstKind::Grossone: return GrossNumber::grossone();
    case AstKind::Neg: return neg(eval_ast(*ast.lhs));
    case AstKind::Add: return add(eval_ast(*ast.lhs), eval_ast(*ast.rhs));
    case AstKind::Sub: return sub(eval_ast(*ast.lhs), eval_ast(*ast.rhs));
    case AstKind::Mul: return mul(eval_ast(*ast.lhs), eval_ast(*ast.rhs));
    case AstKind::Div: return div(eval_ast(*ast.lhs), eval_ast(*ast.rhs));
    case AstKind::Pow: return eval_pow(ast);
  }
  throw Error(ErrorKind::NotRepresentable, "malformed syntax tree");
}

GrossNumber eval_string(std::string_view text) {
  return eval_ast(*parse(text));
}

std::string grossone_symbol(Style style) {
  return style == Style::Ascii ? "G" : kGrossoneUtf8;
}

std::string format(const GrossNumber& x, Style style) {
  if (style == Style::Machine) {
    std::string out = "{\"terms\":[";
    bool first = true;
    for (const auto& t : x.terms()) {
      if (!first) out += ",";
      first = false;
      out += "{\"c\":\"" + t.coeff.to_fraction_string() + "\",\"p\":\"" + t.expo.to_fraction_string() + "\"}";
    }
    return out + "]}";
  }

  if (x.is_zero()) return "0";
  const std::string g = grossone_symbol(style);
  std::string out;
  bool first = true;
  for (const auto& t : x.terms()) {
    bool negative = t.coeff.sign() < 0;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    out += term_string(negative ? -t.coeff : t.coeff, t.expo, g);
  }
  return out;
}

}  // namespace gross
