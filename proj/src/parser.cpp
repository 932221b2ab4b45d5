#include "qspect/parser.hpp"

#include <cctype>
#include <cstdlib>
#include <string>

#include "qspect/errors.hpp"

namespace qspect {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Environment& env) : text_(text), env_(env) {}

  StructuredOperator parse() {
    StructuredOperator op = expr();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError("unexpected trailing input", pos_);
    return op;
  }

 private:
  const std::string& text_;
  const Environment& env_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek_is(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) throw SyntaxError(what, pos_);
  }

  StructuredOperator expr() {
    StructuredOperator acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  StructuredOperator term() {
    StructuredOperator acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  StructuredOperator factor() {
    StructuredOperator base = atom();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      unsigned long n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        n = n * 10 + static_cast<unsigned long>(text_[pos_] - '0');
        ++pos_;
      }
      if (pos_ == start) throw SyntaxError("expected exponent after '^'", pos_);
      return base.pow(static_cast<unsigned>(n));
    }
    return base;
  }

  double real_number() {
    skip_ws();
    const char* begin = text_.c_str() + pos_;
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin) throw SyntaxError("expected a real number", pos_);
    pos_ += static_cast<std::size_t>(end - begin);
    return value;
  }

  std::string name() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) throw SyntaxError("expected a name", pos_);
    return text_.substr(start, pos_ - start);
  }

  StructuredOperator atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
    const char c = text_[pos_];

    if (c == '(') {
      ++pos_;
      StructuredOperator inner = expr();
      expect(')', "expected ')'");
      return inner;
    }
    if (c == 'S') {
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '\'') {
        ++pos_;
        return StructuredOperator::adjoint_shift();
      }
      return StructuredOperator::shift();
    }
    if (c == 'I') {
      ++pos_;
      return StructuredOperator::identity();
    }
    if (c == 'D' || c == 'F') {
      const std::size_t at = pos_;
      ++pos_;
      expect('(', "expected '(' after D/F");
      const std::string id = name();
      expect(')', "expected ')' after name");
      if (c == 'D') {
        auto it = env_.diagonals.find(id);
        if (it == env_.diagonals.end()) throw UnknownName("unknown diagonal '" + id + "'");
        (void)at;
        return StructuredOperator::diagonal(it->second);
      }
      auto it = env_.patches.find(id);
      if (it == env_.patches.end()) throw UnknownName("unknown patch '" + id + "'");
      return StructuredOperator::finite_rank(it->second);
    }
    if (c == 'q') {
      ++pos_;
      expect('(', "expected '(' after q");
      const double q0 = real_number();
      expect(',', "expected ',' in quaternion literal");
      const double q1 = real_number();
      expect(',', "expected ',' in quaternion literal");
      const double q2 = real_number();
      expect(',', "expected ',' in quaternion literal");
      const double q3 = real_number();
      expect(')', "expected ')' after quaternion literal");
      return StructuredOperator::scalar(Quaternion{q0, q1, q2, q3});
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+') {
      return StructuredOperator::scalar(Quaternion(real_number()));
    }
    throw SyntaxError("unexpected character", pos_);
  }
};

}  // namespace

StructuredOperator parse_expr(const std::string& text, const Environment& env) {
  return Parser(text, env).parse();
}

}  // namespace qspect
