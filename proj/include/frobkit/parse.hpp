#ifndef FROBKIT_PARSE_HPP
#define FROBKIT_PARSE_HPP

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "frobkit/polynomial.hpp"
#include "frobkit/ring.hpp"

namespace frobkit {

/// Recursive-descent parser for the polynomial text syntax: terms joined by
/// `+`/`-`, decimal coefficients, declared variable names, `^` powers, `*` or
/// juxtaposition for products, parentheses allowed. Example:
/// `x^2*y + 3*y^3 - 1`.
class PolynomialParser {
 public:
  PolynomialParser(const Ring& ring, std::string_view text, int line = 1,
                   int col_offset = 0)
      : ring_(ring), text_(text), line_(line), col_offset_(col_offset) {}

  Polynomial parse() {
    Polynomial f = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  Polynomial expression() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        Polynomial t = term();
        acc = c == '+' ? acc + t : acc - t;
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
                 c == '(') {
        acc = acc * factor();  // juxtaposition
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return maybe_power(inner);
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return maybe_power(Polynomial::constant(ring_, parse_integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t var = parse_variable();
      Polynomial v = Polynomial::variable(ring_, var);
      return maybe_power(v);
    }
    fail("expected coefficient, variable, or '('");
    return Polynomial::zero(ring_);  // unreachable
  }

  Polynomial maybe_power(const Polynomial& base) {
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected integer exponent after '^'");
    std::int64_t n = parse_integer();
    return base.pow(static_cast<std::uint64_t>(n));
  }

  std::int64_t parse_integer() {
    std::int64_t v = 0;
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > (std::int64_t{1} << 62)) fail("integer literal too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return v;
  }

  /// Longest match against the declared variable names.
  std::size_t parse_variable() {
    std::size_t best = SIZE_MAX, best_len = 0;
    const auto& vars = ring_.variables();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const std::string& name = vars[i];
      if (name.size() > best_len && text_.size() - pos_ >= name.size() &&
          text_.compare(pos_, name.size(), name) == 0) {
        best = i;
        best_len = name.size();
      }
    }
    if (best == SIZE_MAX) fail("unknown variable");
    pos_ += best_len;
    return best;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t'))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col_offset_ + static_cast<int>(pos_) + 1);
  }

  const Ring& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int col_offset_;
};

inline Polynomial parse_polynomial(const Ring& ring, std::string_view text,
                                   int line = 1, int col_offset = 0) {
  return PolynomialParser(ring, text, line, col_offset).parse();
}

}  // namespace frobkit

#endif
