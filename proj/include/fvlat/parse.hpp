#pragma once

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fvlat/boolean_algebra.hpp"
#include "fvlat/error.hpp"
#include "fvlat/formal_sum.hpp"
#include "fvlat/rational.hpp"

namespace fvlat::ast {

/// Element expression tree. Positions are kept for diagnostics only and
/// do not take part in equality.
struct Element;
using ElementPtr = std::shared_ptr<const Element>;

struct Element {
  enum class Kind { generator, bottom, top, complement, meet, join };

  Kind kind;
  std::string name;   // generator nodes
  std::size_t pos = 0;
  ElementPtr left;    // complement child or left operand
  ElementPtr right;
};

inline ElementPtr make_generator(std::string name, std::size_t pos) {
  return std::make_shared<Element>(
      Element{Element::Kind::generator, std::move(name), pos, nullptr, nullptr});
}
inline ElementPtr make_bottom() {
  return std::make_shared<Element>(
      Element{Element::Kind::bottom, "", 0, nullptr, nullptr});
}
inline ElementPtr make_top() {
  return std::make_shared<Element>(
      Element{Element::Kind::top, "", 0, nullptr, nullptr});
}
inline ElementPtr make_complement(ElementPtr child) {
  return std::make_shared<Element>(Element{Element::Kind::complement, "", 0,
                                           std::move(child), nullptr});
}
inline ElementPtr make_meet(ElementPtr left, ElementPtr right) {
  return std::make_shared<Element>(Element{Element::Kind::meet, "", 0,
                                           std::move(left), std::move(right)});
}
inline ElementPtr make_join(ElementPtr left, ElementPtr right) {
  return std::make_shared<Element>(Element{Element::Kind::join, "", 0,
                                           std::move(left), std::move(right)});
}

inline bool equal(const Element& a, const Element& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Element::Kind::generator:
      return a.name == b.name;
    case Element::Kind::bottom:
    case Element::Kind::top:
      return true;
    case Element::Kind::complement:
      return equal(*a.left, *b.left);
    case Element::Kind::meet:
    case Element::Kind::join:
      return equal(*a.left, *b.left) && equal(*a.right, *b.right);
  }
  return false;
}

/// One addend of a sum expression: an optional separator sign, an
/// optional explicit rational coefficient, and an element expression.
struct SumTerm {
  bool negated = false;
  std::optional<Rational> coefficient;
  ElementPtr element;
};

struct Sum {
  std::vector<SumTerm> terms;
};

inline bool equal(const Sum& a, const Sum& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    const SumTerm& s = a.terms[i];
    const SumTerm& t = b.terms[i];
    if (s.negated != t.negated || s.coefficient != t.coefficient ||
        !equal(*s.element, *t.element))
      return false;
  }
  return true;
}

namespace detail {

// join < meet < complement < leaf
inline int precedence(Element::Kind kind) {
  switch (kind) {
    case Element::Kind::join: return 1;
    case Element::Kind::meet: return 2;
    case Element::Kind::complement: return 3;
    default: return 4;
  }
}

inline std::string print_element(const Element& e, int min_prec) {
  std::string out;
  switch (e.kind) {
    case Element::Kind::generator: out = e.name; break;
    case Element::Kind::bottom: out = "0"; break;
    case Element::Kind::top: out = "1"; break;
    case Element::Kind::complement:
      out = "!" + print_element(*e.left, 3);
      break;
    case Element::Kind::meet:
      out = print_element(*e.left, 2) + " & " + print_element(*e.right, 3);
      break;
    case Element::Kind::join:
      out = print_element(*e.left, 1) + " | " + print_element(*e.right, 2);
      break;
  }
  if (precedence(e.kind) < min_prec) return "(" + out + ")";
  return out;
}

}  // namespace detail

/// Minimal-parentheses form; reparsing yields an equal tree.
inline std::string to_string(const Element& e) {
  return detail::print_element(e, 1);
}

/// Terms print in the form the parser reads back. Two leading-term shapes
/// fall outside the grammar and normalize: a sign before an explicit
/// nonnegative coefficient folds into the coefficient, and a sign before
/// a constant-led element forces parentheses so the constant does not
/// re-lex as a coefficient.
inline std::string to_string(const Sum& sum) {
  std::string out;
  for (std::size_t i = 0; i < sum.terms.size(); ++i) {
    const SumTerm& term = sum.terms[i];
    if (term.coefficient) {
      Rational coeff = *term.coefficient;
      bool negated = term.negated;
      if (i == 0 && negated && coeff >= 0) {
        negated = false;
        coeff = -coeff;
      }
      if (i == 0) {
        if (negated) out += "-";
      } else {
        out += term.negated ? " - " : " + ";
      }
      out += rational_to_string(coeff) + "*";
      out += detail::print_element(*term.element, 3);
    } else {
      std::string body = to_string(*term.element);
      if (i == 0) {
        if (term.negated) {
          if (!body.empty() && (body[0] == '0' || body[0] == '1'))
            body = "(" + body + ")";
          out += "-";
        }
      } else {
        out += term.negated ? " - " : " + ";
      }
      out += body;
    }
  }
  return out;
}

}  // namespace fvlat::ast

namespace fvlat {

namespace detail {

struct Token {
  enum class Kind {
    end,
    ident,
    integer,
    plus,
    minus,
    star,
    slash,
    amp,
    pipe,
    bang,
    lparen,
    rparen
  };
  Kind kind;
  std::string_view text;
  std::size_t pos;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token peek() {
    std::size_t p = pos_;
    return lex_at(p);
  }

  Token peek_second() {
    std::size_t p = pos_;
    lex_at(p);
    return lex_at(p);
  }

  Token next() { return lex_at(pos_); }

  std::size_t save() const { return pos_; }
  void restore(std::size_t p) { pos_ = p; }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  Token lex_at(std::size_t& p) const {
    while (p < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[p])))
      ++p;
    if (p >= text_.size()) return {Token::Kind::end, {}, text_.size()};
    const std::size_t start = p;
    const char c = text_[p];
    switch (c) {
      case '+': ++p; return {Token::Kind::plus, text_.substr(start, 1), start};
      case '-': ++p; return {Token::Kind::minus, text_.substr(start, 1), start};
      case '*': ++p; return {Token::Kind::star, text_.substr(start, 1), start};
      case '/': ++p; return {Token::Kind::slash, text_.substr(start, 1), start};
      case '&': ++p; return {Token::Kind::amp, text_.substr(start, 1), start};
      case '|': ++p; return {Token::Kind::pipe, text_.substr(start, 1), start};
      case '!': ++p; return {Token::Kind::bang, text_.substr(start, 1), start};
      case '(': ++p; return {Token::Kind::lparen, text_.substr(start, 1), start};
      case ')': ++p; return {Token::Kind::rparen, text_.substr(start, 1), start};
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (p < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[p])))
        ++p;
      return {Token::Kind::integer, text_.substr(start, p - start), start};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (p < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[p])) ||
              text_[p] == '_'))
        ++p;
      return {Token::Kind::ident, text_.substr(start, p - start), start};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }
};

class Parser {
public:
  explicit Parser(std::string_view text) : lexer_(text) {}

  ast::ElementPtr parse_element_only() {
    ast::ElementPtr out = parse_join();
    expect_end();
    return out;
  }

  ast::Sum parse_sum_only() {
    ast::Sum sum;
    bool negated = false;
    const Token first = lexer_.peek();
    if (first.kind == Token::Kind::plus || first.kind == Token::Kind::minus) {
      // A leading minus directly before an integer belongs to the
      // coefficient, not to the term sign.
      if (!(first.kind == Token::Kind::minus &&
            lexer_.peek_second().kind == Token::Kind::integer)) {
        lexer_.next();
        negated = first.kind == Token::Kind::minus;
      }
    }
    sum.terms.push_back(parse_signed_term(negated));
    while (true) {
      const Token sep = lexer_.peek();
      if (sep.kind != Token::Kind::plus && sep.kind != Token::Kind::minus)
        break;
      lexer_.next();
      sum.terms.push_back(parse_signed_term(sep.kind == Token::Kind::minus));
    }
    expect_end();
    return sum;
  }

private:
  Lexer lexer_;

  void expect_end() {
    const Token token = lexer_.peek();
    if (token.kind != Token::Kind::end)
      throw ParseError("unexpected trailing input", token.pos);
  }

  ast::SumTerm parse_signed_term(bool negated) {
    const std::size_t saved = lexer_.save();
    Token token = lexer_.peek();

    bool coeff_negative = false;
    if (token.kind == Token::Kind::minus &&
        lexer_.peek_second().kind == Token::Kind::integer) {
      lexer_.next();
      coeff_negative = true;
      token = lexer_.peek();
    }

    if (token.kind == Token::Kind::integer) {
      lexer_.next();
      const std::string numerator(token.text);
      const Token after = lexer_.peek();
      if (after.kind == Token::Kind::slash) {
        lexer_.next();
        const Token den = lexer_.next();
        if (den.kind != Token::Kind::integer)
          throw ParseError("expected a denominator after '/'", den.pos);
        if (Integer(std::string(den.text)) == 0)
          throw ParseError("zero denominator", den.pos);
        const Token star = lexer_.next();
        if (star.kind != Token::Kind::star)
          throw ParseError("a rational coefficient must be followed by '*'",
                           star.pos);
        Rational coeff(Integer(numerator), Integer(std::string(den.text)));
        if (coeff_negative) coeff = -coeff;
        return ast::SumTerm{negated, coeff, parse_join()};
      }
      if (after.kind == Token::Kind::star) {
        lexer_.next();
        Rational coeff{Integer(numerator)};
        if (coeff_negative) coeff = -coeff;
        return ast::SumTerm{negated, coeff, parse_join()};
      }
      if (coeff_negative)
        throw ParseError("expected '*' after coefficient", after.pos);
      // A bare 0 or 1 starts an element expression instead.
      lexer_.restore(saved);
    }

    return ast::SumTerm{negated, std::nullopt, parse_join()};
  }

  ast::ElementPtr parse_join() {
    ast::ElementPtr left = parse_meet();
    while (lexer_.peek().kind == Token::Kind::pipe) {
      lexer_.next();
      left = ast::make_join(std::move(left), parse_meet());
    }
    return left;
  }

  ast::ElementPtr parse_meet() {
    ast::ElementPtr left = parse_unary();
    while (lexer_.peek().kind == Token::Kind::amp) {
      lexer_.next();
      left = ast::make_meet(std::move(left), parse_unary());
    }
    return left;
  }

  ast::ElementPtr parse_unary() {
    if (lexer_.peek().kind == Token::Kind::bang) {
      lexer_.next();
      return ast::make_complement(parse_unary());
    }
    return parse_primary();
  }

  ast::ElementPtr parse_primary() {
    const Token token = lexer_.next();
    switch (token.kind) {
      case Token::Kind::ident:
        return ast::make_generator(std::string(token.text), token.pos);
      case Token::Kind::integer:
        if (token.text == "0") return ast::make_bottom();
        if (token.text == "1") return ast::make_top();
        throw ParseError(
            "only 0 and 1 denote elements; a coefficient needs '*'",
            token.pos);
      case Token::Kind::lparen: {
        ast::ElementPtr inner = parse_join();
        const Token close = lexer_.next();
        if (close.kind != Token::Kind::rparen)
          throw ParseError("expected ')'", close.pos);
        return inner;
      }
      case Token::Kind::end:
        throw ParseError("expected an element expression", token.pos);
      default:
        throw ParseError("unexpected token '" + std::string(token.text) + "'",
                         token.pos);
    }
  }
};

}  // namespace detail

inline ast::ElementPtr parse_element(std::string_view text) {
  detail::Parser parser(text);
  return parser.parse_element_only();
}

inline ast::Sum parse_sum(std::string_view text) {
  detail::Parser parser(text);
  return parser.parse_sum_only();
}

/// Resolves generator names against an algebra. Unknown names are parse
/// errors carrying the source position.
inline BaElement resolve(const ast::Element& e, const BooleanAlgebra& algebra) {
  using Kind = ast::Element::Kind;
  switch (e.kind) {
    case Kind::bottom:
      return algebra.bottom();
    case Kind::top:
      return algebra.top();
    case Kind::generator: {
      const auto index = algebra.generator_index(e.name);
      if (!index)
        throw ParseError("unknown generator '" + e.name + "'", e.pos);
      return algebra.generator(*index);
    }
    case Kind::complement:
      return resolve(*e.left, algebra).complement();
    case Kind::meet:
      return resolve(*e.left, algebra).meet(resolve(*e.right, algebra));
    case Kind::join:
      return resolve(*e.left, algebra).join(resolve(*e.right, algebra));
  }
  throw ParseError("malformed expression tree", e.pos);
}

inline FormalSum resolve(const ast::Sum& sum, const BooleanAlgebra& algebra) {
  std::vector<std::pair<BaElement, Rational>> terms;
  terms.reserve(sum.terms.size());
  for (const auto& term : sum.terms) {
    Rational coeff = term.coefficient.value_or(Rational(1));
    if (term.negated) coeff = -coeff;
    terms.emplace_back(resolve(*term.element, algebra), coeff);
  }
  return FormalSum(algebra, terms);
}

}  // namespace fvlat
