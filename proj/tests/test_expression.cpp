#include <gtest/gtest.h>

#include "adjrep/expression.hpp"

using namespace adjrep;

namespace {

SymFunc gen(Basis b, std::initializer_list<int> parts)
{
  return to_basis(SymFunc::generator(b, Partition(parts)), Basis::powersum);
}

} // namespace

TEST(Expression, Atoms)
{
  EXPECT_EQ(parse_expression("p[2]"), gen(Basis::powersum, {2}));
  EXPECT_EQ(parse_expression("h[2, 1]"), gen(Basis::complete, {2, 1}));
  EXPECT_EQ(parse_expression("s[]"), SymFunc::constant(Basis::powersum, 1));
  EXPECT_EQ(parse_expression("3/6"), SymFunc::constant(Basis::powersum, Rational(1, 2)));
}

TEST(Expression, Precedence)
{
  SymFunc s1 = gen(Basis::schur, {1});
  SymFunc s2 = gen(Basis::schur, {2});
  EXPECT_EQ(parse_expression("s[1]^2*s[2]"), s1 * s1 * s2);
  EXPECT_EQ(parse_expression("-s[1] + 2*s[2]"), scale(-1, s1) + scale(2, s2));
  EXPECT_EQ(parse_expression("s[2][s[2]]"), plethysm(s2, s2));
  EXPECT_EQ(parse_expression("s[2][s[1]+p[2]]"), plethysm(s2, s1 + gen(Basis::powersum, {2})));
  EXPECT_EQ(parse_expression("(s[1] - s[1])*s[2]"), SymFunc(Basis::powersum));
  EXPECT_EQ(parse_expression("p[2][p[3]][p[2]]"), gen(Basis::powersum, {12}));
}

TEST(Expression, Errors)
{
  for (const char* bad : {"", "s[1,2]", "s[0]", "s[1", "x[1]", "1/0", "s[1]+", "s[1]]", "2^"})
    EXPECT_THROW(parse_expression(bad), std::invalid_argument) << bad;
}
