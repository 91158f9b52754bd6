#include "sctk/expr_parser.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <utility>

namespace sctk {

ParseError::ParseError(ParseErrorKind kind, std::string message, const SourceOrigin& origin,
                       std::size_t offset, std::size_t line, std::size_t column,
                       std::vector<std::string> expected)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << origin.source << ':' << line << ':' << column << ": error: " << message;
        if (!expected.empty()) {
          os << " (expected ";
          for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i > 0) os << (i + 1 == expected.size() ? " or " : ", ");
            os << expected[i];
          }
          os << ')';
        }
        return os.str();
      }()),
      kind_(kind),
      message_(std::move(message)),
      source_(origin.source),
      offset_(offset),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

constexpr unsigned kMaxExponent = 4096;

enum class Tok { kInteger, kIdent, kPlus, kMinus, kStar, kSlash, kCaret, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::kEnd: return "end of input";
    case Tok::kInteger: return "integer '" + std::string(t.text) + "'";
    case Tok::kIdent: return "identifier '" + std::string(t.text) + "'";
    default: return "'" + std::string(t.text) + "'";
  }
}

class Parser {
 public:
  Parser(const ExprSource& src, const SpacePtr& space) : src_(src), space_(space) {
    tokenize();
  }

  RationalFunction parse() {
    RationalFunction value = expr();
    if (peek().kind != Tok::kEnd) {
      fail(ParseErrorKind::kSyntax, "unexpected " + describe(peek()), peek().offset,
           {"operator", "')'", "end of input"});
    }
    return value;
  }

 private:
  [[noreturn]] void fail(ParseErrorKind kind, std::string message, std::size_t offset,
                         std::vector<std::string> expected = {}) const {
    std::size_t line = src_.origin.line;
    std::size_t column = src_.origin.column;
    for (std::size_t i = 0; i < offset && i < src_.text.size(); ++i) {
      if (src_.text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(kind, std::move(message), src_.origin, offset, line, column,
                     std::move(expected));
  }

  void tokenize() {
    const std::string& s = src_.text;
    std::size_t i = 0;
    while (i < s.size()) {
      const auto c = static_cast<unsigned char>(s[i]);
      if (std::isspace(c)) {
        ++i;
        continue;
      }
      const std::size_t start = i;
      if (std::isdigit(c)) {
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
          fail(ParseErrorKind::kSyntax, "implicit multiplication is not allowed", i,
               {"'*'", "operator"});
        }
        if (i < s.size() && s[i] == '.') {
          fail(ParseErrorKind::kSyntax, "floating-point literals are not supported", i,
               {"integer or ratio literal"});
        }
        tokens_.push_back({Tok::kInteger, start, std::string_view(s).substr(start, i - start)});
        continue;
      }
      if (std::isalpha(c) || c == '_') {
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
          ++i;
        }
        tokens_.push_back({Tok::kIdent, start, std::string_view(s).substr(start, i - start)});
        continue;
      }
      Tok kind;
      switch (c) {
        case '+': kind = Tok::kPlus; break;
        case '-': kind = Tok::kMinus; break;
        case '*': kind = Tok::kStar; break;
        case '/': kind = Tok::kSlash; break;
        case '^': kind = Tok::kCaret; break;
        case '(': kind = Tok::kLParen; break;
        case ')': kind = Tok::kRParen; break;
        default:
          fail(ParseErrorKind::kSyntax, std::string("unexpected character '") + s[i] + "'", i);
      }
      tokens_.push_back({kind, start, std::string_view(s).substr(start, 1)});
      ++i;
    }
    tokens_.push_back({Tok::kEnd, s.size(), {}});
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  RationalFunction expr() {
    RationalFunction value = term();
    while (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
      const bool plus = advance().kind == Tok::kPlus;
      RationalFunction rhs = term();
      if (plus) {
        value += rhs;
      } else {
        value -= rhs;
      }
    }
    return value;
  }

  RationalFunction term() {
    RationalFunction value = unary();
    while (peek().kind == Tok::kStar || peek().kind == Tok::kSlash) {
      const Token& op = advance();
      RationalFunction rhs = unary();
      if (op.kind == Tok::kStar) {
        value *= rhs;
      } else {
        if (rhs.isZero()) {
          fail(ParseErrorKind::kZeroDivisor, "division by an expression that is identically zero",
               op.offset);
        }
        value /= rhs;
      }
    }
    return value;
  }

  RationalFunction unary() {
    if (peek().kind == Tok::kMinus) {
      advance();
      return -unary();
    }
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (peek().kind != Tok::kCaret) return base;
    advance();
    const Token& exp = peek();
    if (exp.kind != Tok::kInteger) {
      fail(ParseErrorKind::kSyntax, "exponent must be a non-negative integer literal, found " +
                                        describe(exp),
           exp.offset, {"integer"});
    }
    advance();
    mpz_class k(std::string(exp.text));
    if (k > kMaxExponent) {
      fail(ParseErrorKind::kSyntax, "exponent exceeds " + std::to_string(kMaxExponent),
           exp.offset);
    }
    const auto e = static_cast<unsigned>(k.get_ui());
    return RationalFunction(base.num().pow(e), base.den().pow(e));
  }

  RationalFunction primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kInteger: {
        advance();
        return RationalFunction::constant(space_, Rational(mpz_class(std::string(t.text))));
      }
      case Tok::kIdent: {
        advance();
        auto var = space_->indexOf(t.text);
        if (!var) {
          fail(ParseErrorKind::kUnknownIdentifier,
               "unknown identifier '" + std::string(t.text) + "'", t.offset);
        }
        return RationalFunction::variable(space_, *var);
      }
      case Tok::kLParen: {
        advance();
        RationalFunction inner = expr();
        if (peek().kind != Tok::kRParen) {
          fail(ParseErrorKind::kSyntax, "unexpected " + describe(peek()), peek().offset,
               {"')'", "operator"});
        }
        advance();
        return inner;
      }
      default:
        fail(ParseErrorKind::kSyntax, "unexpected " + describe(t), t.offset,
             {"integer", "identifier", "'('", "'-'"});
    }
  }

  const ExprSource& src_;
  const SpacePtr& space_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string renderMonomial(const Monomial& m, const ParamSpace& space) {
  std::string out;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += space.varName(v);
    if (m[v] > 1) out += '^' + std::to_string(m[v]);
  }
  return out;
}

bool isBareFactor(const Polynomial& p) {
  if (p.size() != 1) return false;
  const Term& t = p.leadingTerm();
  if (t.coeff != 1) return false;
  int vars = 0;
  for (std::size_t v = 0; v < t.monomial.size(); ++v) vars += t.monomial[v] > 0 ? 1 : 0;
  return vars == 1;
}

}  // namespace

RationalFunction parseExpr(const ExprSource& src, const SpacePtr& space) {
  return Parser(src, space).parse();
}

RationalFunction parseExpr(std::string_view text, const SpacePtr& space) {
  return parseExpr(ExprSource{std::string(text), {}}, space);
}

std::string render(const Rational& q) { return q.get_str(); }

std::string render(const Polynomial& p) {
  if (p.isZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(t.coeff);
    if (t.monomial.isOne()) {
      out += render(mag);
    } else if (mag == 1) {
      out += renderMonomial(t.monomial, *p.space());
    } else {
      out += render(mag) + '*' + renderMonomial(t.monomial, *p.space());
    }
  }
  return out;
}

std::string render(const RationalFunction& x) {
  const RationalFunction r = x.reduced();
  if (r.isPolynomial()) return render(r.num());
  // Integer numerator: (z1 + 1)/(2*z2) rather than (1/2*z1 + 1/2)/z2.
  const Rational lcm(r.num().content().get_den());
  const Polynomial n = r.num().scaled(lcm);
  const Polynomial d = r.den().scaled(lcm);
  std::string num = render(n);
  if (n.size() > 1) num = "(" + num + ")";
  std::string den = render(d);
  if (!isBareFactor(d)) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace sctk
