#include "adjrep/expression.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace adjrep {

namespace {

class Parser {
public:
  explicit Parser(std::string_view text)
  {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c)))
        src_ += c;
  }

  SymFunc parse()
  {
    SymFunc f = expr();
    if (pos_ != src_.size())
      fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return f;
  }

private:
  std::string src_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const
  {
    throw std::invalid_argument("expression: " + msg + " at position " +
                                std::to_string(pos_) + " in '" + src_ + "'");
  }

  bool peek(char c) const { return pos_ < src_.size() && src_[pos_] == c; }

  bool accept(char c)
  {
    if (!peek(c))
      return false;
    ++pos_;
    return true;
  }

  void expect(char c)
  {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }

  long integer()
  {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected an integer");
    if (pos_ - start > 9)
      fail("integer too large");
    return std::stol(src_.substr(start, pos_ - start));
  }

  SymFunc expr()
  {
    bool negate = accept('-');
    SymFunc f = term();
    if (negate)
      f = scale(-1, f);
    while (true) {
      if (accept('+'))
        f += term();
      else if (accept('-'))
        f -= term();
      else
        return f;
    }
  }

  SymFunc term()
  {
    SymFunc f = power_expr();
    while (accept('*'))
      f = f * power_expr();
    return f;
  }

  SymFunc power_expr()
  {
    SymFunc f = postfix();
    if (accept('^'))
      f = power(f, static_cast<int>(integer()));
    return f;
  }

  SymFunc postfix()
  {
    SymFunc f = atom();
    while (accept('[')) {
      SymFunc inner = expr();
      expect(']');
      f = plethysm(f, inner);
    }
    return f;
  }

  SymFunc atom()
  {
    if (pos_ >= src_.size())
      fail("unexpected end of input");
    char c = src_[pos_];
    if (c == 's' || c == 'p' || c == 'h') {
      ++pos_;
      Basis b = parse_basis(std::string(1, c));
      expect('[');
      std::vector<int> parts;
      if (!peek(']')) {
        do {
          long part = integer();
          if (part == 0)
            fail("partition parts must be positive");
          parts.push_back(static_cast<int>(part));
        } while (accept(','));
      }
      expect(']');
      Partition lambda;
      try {
        lambda = Partition(parts);
      } catch (const std::invalid_argument&) {
        fail("partition must be weakly decreasing");
      }
      return to_basis(SymFunc::generator(b, lambda), Basis::powersum);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational q(integer());
      if (accept('/')) {
        long den = integer();
        if (den == 0)
          fail("zero denominator");
        q /= Rational(den);
      }
      return SymFunc::constant(Basis::powersum, q);
    }
    if (accept('(')) {
      SymFunc f = expr();
      expect(')');
      return f;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

} // namespace

SymFunc parse_expression(std::string_view text) { return Parser(text).parse(); }

} // namespace adjrep
