#include "adjrep/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace adjrep {

std::string to_fraction_string(const Rational& q)
{
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text)
{
  std::string s(text);
  auto bad = [&] {
    return std::invalid_argument("malformed rational '" + s + "'");
  };
  if (s.empty())
    throw bad();
  std::size_t slash = s.find('/');
  auto digits_ok = [](std::string_view part, bool allow_sign) {
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+'))
      part.remove_prefix(1);
    if (part.empty())
      return false;
    for (char c : part)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw bad();
  if (num[0] == '+')
    num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0)
    throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

} // namespace adjrep
