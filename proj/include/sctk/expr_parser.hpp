#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sctk/rational_function.hpp"

namespace sctk {

struct SourceOrigin {
  std::string source = "<input>";
  std::size_t line = 1;
  std::size_t column = 1;
};

struct ExprSource {
  std::string text;
  SourceOrigin origin;
};

enum class ParseErrorKind { kSyntax, kUnknownIdentifier, kZeroDivisor };

/// Diagnostic for a rejected expression. `offset` indexes into the source
/// text; line/column are absolute (origin-adjusted) and 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::string message, const SourceOrigin& origin,
             std::size_t offset, std::size_t line, std::size_t column,
             std::vector<std::string> expected = {});

  ParseErrorKind kind() const { return kind_; }
  const std::string& message() const { return message_; }
  const std::string& source() const { return source_; }
  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  ParseErrorKind kind_;
  std::string message_;
  std::string source_;
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

/// Parses an entry expression into an exact field element.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' INTEGER)?
///   primary := INTEGER | IDENTIFIER | '(' expr ')'
///
/// Identifiers must be parameters of `space` or its indeterminate. There is
/// no implicit multiplication and no floating-point literal; "9/2" is the
/// exact quotient.
RationalFunction parseExpr(const ExprSource& src, const SpacePtr& space);
RationalFunction parseExpr(std::string_view text, const SpacePtr& space);

// Renders in the grammar above; parseExpr(render(x)) == x.
std::string render(const Polynomial& p);
std::string render(const RationalFunction& x);
std::string render(const Rational& q);

}  // namespace sctk
