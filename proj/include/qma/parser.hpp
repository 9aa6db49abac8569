// Recursive-descent parser for polynomial expressions in the group
// coordinates x1..x_{4n}, t.  Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := '-' factor | primary ['^' INT]
//   primary := number | ident | '(' expr ')'
//   number  := INT ['/' INT] | DECIMAL
// Numbers are exact rationals in exact mode (decimals scale by a power of
// ten); errors carry line and column.
#pragma once

#include <cctype>

#include "qma/polynomial.hpp"

namespace qma {

struct ParseError : std::runtime_error {
  int line = 1, col = 1;
  ParseError(int l, int c, const std::string& msg)
      : std::runtime_error("parse error at line " + std::to_string(l) + ", column " +
                           std::to_string(c) + ": " + msg),
        line(l),
        col(c) {}
};

namespace detail {

struct Token {
  enum Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
  std::string text;  // for Number / Ident
  int line = 1, col = 1;
};

inline std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (src[i + j] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += k;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t j = i;
      bool seen_dot = false, seen_slash = false, seen_exp = false;
      while (j < src.size()) {
        const char d = src[j];
        if (std::isdigit(static_cast<unsigned char>(d))) {
          ++j;
        } else if (d == '.' && !seen_dot && !seen_slash && !seen_exp) {
          seen_dot = true;
          ++j;
        } else if (d == '/' && !seen_dot && !seen_slash && !seen_exp &&
                   j + 1 < src.size() &&
                   std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
          seen_slash = true;
          ++j;
        } else if ((d == 'e' || d == 'E') && !seen_exp && !seen_slash && j > i &&
                   j + 1 < src.size() &&
                   (std::isdigit(static_cast<unsigned char>(src[j + 1])) ||
                    ((src[j + 1] == '+' || src[j + 1] == '-') && j + 2 < src.size() &&
                     std::isdigit(static_cast<unsigned char>(src[j + 2]))))) {
          seen_exp = true;
          ++j;
          if (src[j] == '+' || src[j] == '-') ++j;
        } else {
          break;
        }
      }
      t.kind = Token::Number;
      t.text = src.substr(i, j - i);
      if (t.text == "." || t.text.back() == '/')
        throw ParseError(line, col, "malformed number '" + t.text + "'");
      out.push_back(t);
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                                src[j] == '_'))
        ++j;
      t.kind = Token::Ident;
      t.text = src.substr(i, j - i);
      out.push_back(t);
      advance(j - i);
      continue;
    }
    switch (c) {
      case '+': t.kind = Token::Plus; break;
      case '-': t.kind = Token::Minus; break;
      case '*': t.kind = Token::Star; break;
      case '^': t.kind = Token::Caret; break;
      case '(': t.kind = Token::LParen; break;
      case ')': t.kind = Token::RParen; break;
      default:
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back(t);
    advance(1);
  }
  Token end;
  end.kind = Token::End;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

// Exact rational from a run of decimal digits.  Constructed digit-free of
// leading zeros, which the string constructor would read as a base prefix.
inline Rational rational_from_digits(const std::string& digits) {
  std::size_t k = 0;
  while (k + 1 < digits.size() && digits[k] == '0') ++k;
  return Rational(digits.substr(k));
}

template <class T>
T number_from_text(const std::string& text, int line, int col) {
  try {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      if constexpr (ScalarTraits<T>::exact) {
        return T(rational_from_digits(text.substr(0, slash)) /
                 rational_from_digits(text.substr(slash + 1)));
      } else {
        return std::stod(text.substr(0, slash)) / std::stod(text.substr(slash + 1));
      }
    }
    if constexpr (!ScalarTraits<T>::exact) {
      return std::stod(text);
    } else {
      // mantissa [. fraction] [e exponent], everything exact
      std::string mant = text;
      long long exp10 = 0;
      const auto epos = mant.find_first_of("eE");
      if (epos != std::string::npos) {
        exp10 = std::stoll(mant.substr(epos + 1));
        mant = mant.substr(0, epos);
      }
      const auto dot = mant.find('.');
      std::size_t frac = 0;
      if (dot != std::string::npos) {
        frac = mant.size() - dot - 1;
        mant = mant.substr(0, dot) + mant.substr(dot + 1);
      }
      Rational num = rational_from_digits(mant.empty() ? std::string("0") : mant);
      Rational den = 1;
      for (std::size_t k = 0; k < frac; ++k) den *= 10;
      Rational r = num / den;
      for (long long k = 0; k < exp10; ++k) r *= 10;
      for (long long k = 0; k > exp10; --k) r /= 10;
      return T(r);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError(line, col, "malformed number '" + text + "'");
  }
}

template <class T>
class Parser {
 public:
  Parser(const std::string& src, int nvars)
      : tokens_(lex(src)), nvars_(nvars), names_(group_var_names(nvars)) {}

  Polynomial<T> run() {
    Polynomial<T> p = expr();
    expect(Token::End, "end of input");
    return p;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int nvars_;
  std::vector<std::string> names_;

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool accept(Token::Kind k) {
    if (peek().kind == k) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(Token::Kind k, const std::string& what) {
    if (!accept(k))
      throw ParseError(peek().line, peek().col,
                       "expected " + what + " before '" +
                           (peek().kind == Token::End ? std::string("end of input")
                                                      : peek().text.empty()
                                                            ? describe(peek().kind)
                                                            : peek().text) +
                           "'");
  }
  static std::string describe(Token::Kind k) {
    switch (k) {
      case Token::Plus: return "+";
      case Token::Minus: return "-";
      case Token::Star: return "*";
      case Token::Caret: return "^";
      case Token::LParen: return "(";
      case Token::RParen: return ")";
      default: return "?";
    }
  }

  Polynomial<T> expr() {
    Polynomial<T> p = term();
    while (true) {
      if (accept(Token::Plus)) {
        p += term();
      } else if (accept(Token::Minus)) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  Polynomial<T> term() {
    Polynomial<T> p = factor();
    while (accept(Token::Star)) p = p * factor();
    return p;
  }

  Polynomial<T> factor() {
    // unary minus binds looser than exponentiation: -x^2 = -(x^2)
    if (accept(Token::Minus)) return -factor();
    Polynomial<T> p = primary();
    if (accept(Token::Caret)) {
      const Token& t = peek();
      if (t.kind != Token::Number || t.text.find('.') != std::string::npos ||
          t.text.find('/') != std::string::npos)
        throw ParseError(t.line, t.col, "exponent must be a nonnegative integer");
      next();
      int k = 0;
      try {
        k = std::stoi(t.text);
      } catch (const std::exception&) {
        throw ParseError(t.line, t.col, "exponent out of range");
      }
      p = p.pow(k);
    }
    return p;
  }

  Polynomial<T> primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Number: {
        next();
        return Polynomial<T>::constant(nvars_, Complex<T>(number_from_text<T>(t.text, t.line, t.col)));
      }
      case Token::Ident: {
        next();
        for (int v = 0; v < nvars_; ++v)
          if (names_[v] == t.text) return Polynomial<T>::variable(nvars_, v);
        throw ParseError(t.line, t.col, "unknown variable '" + t.text + "'");
      }
      case Token::LParen: {
        next();
        Polynomial<T> p = expr();
        expect(Token::RParen, "')'");
        return p;
      }
      default:
        throw ParseError(t.line, t.col, "expected a number, variable, or '('");
    }
  }
};

}  // namespace detail

// Parse an expression in the coordinates x1..x_{4n}, t (nvars = 4n + 1).
template <class T>
Polynomial<T> parse_polynomial(const std::string& src, int nvars) {
  if (nvars < 1) throw std::invalid_argument("need at least one variable");
  detail::Parser<T> p(src, nvars);
  return p.run();
}

extern template Polynomial<double> parse_polynomial<double>(const std::string&, int);
extern template Polynomial<Rational> parse_polynomial<Rational>(const std::string&, int);

}  // namespace qma
