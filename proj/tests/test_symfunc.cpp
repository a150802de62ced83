#include <gtest/gtest.h>

#include <random>

#include "adjrep/characters.hpp"
#include "adjrep/symfunc.hpp"
#include "oracle.hpp"

using namespace adjrep;

namespace adjrep {
void PrintTo(const SymFunc& f, std::ostream* os) { *os << f.to_string(); }
} // namespace adjrep

namespace {

SymFunc p(std::initializer_list<int> parts) { return SymFunc::generator(Basis::powersum, Partition(parts)); }
SymFunc h(std::initializer_list<int> parts) { return SymFunc::generator(Basis::complete, Partition(parts)); }
SymFunc s(std::initializer_list<int> parts) { return SymFunc::generator(Basis::schur, Partition(parts)); }

std::vector<SymFunc> generators_up_to(int degree)
{
  std::vector<SymFunc> out;
  for (int d = 1; d <= degree; ++d)
    for (const auto& lambda : generate_partitions(d))
      for (Basis b : {Basis::powersum, Basis::complete, Basis::schur})
        out.push_back(SymFunc::generator(b, lambda));
  return out;
}

} // namespace

TEST(SymFunc, TermsAndPrinting)
{
  SymFunc f(Basis::schur);
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(f.to_string(), "0");
  f.add_term(Partition({3, 1}), 3);
  f.add_term(Partition({4}), 2);
  f.add_term(Partition({2, 2}), Rational(-1, 2));
  EXPECT_EQ(f.to_string(), "2*s[4] + 3*s[3,1] - 1/2*s[2,2]");
  EXPECT_EQ(f.homogeneous_degree(), 4);
  f.add_term(Partition({3, 1}), -3);
  EXPECT_EQ(f.coeff(Partition({3, 1})), 0);
  EXPECT_EQ(f.terms().size(), 2u);
  EXPECT_EQ(SymFunc::constant(Basis::powersum, 5).to_string(), "5");
  SymFunc unreduced(Basis::powersum);
  unreduced.add_term(Partition({1}), Rational(2, 4));  // mpq_class does not reduce this
  EXPECT_EQ(unreduced.to_string(), "1/2*p[1]");
  EXPECT_EQ(unreduced, scale(Rational(1, 2), p({1})));
  EXPECT_EQ((s({1}) + SymFunc::constant(Basis::schur, 1)).homogeneous_degree(), std::nullopt);
  EXPECT_THROW(s({1}) + p({1}), BasisMismatch);
}

TEST(SymFunc, SmallConversions)
{
  SymFunc h2 = p({1, 1});
  h2 += p({2});
  EXPECT_EQ(to_basis(h({2}), Basis::powersum), scale(Rational(1, 2), h2));
  SymFunc e2 = p({1, 1});
  e2 -= p({2});
  EXPECT_EQ(to_basis(s({1, 1}), Basis::powersum), scale(Rational(1, 2), e2));
  EXPECT_EQ(to_basis(s({1, 1}), Basis::complete), h({1, 1}) - h({2}));
  EXPECT_EQ(to_basis(p({2}), Basis::schur), s({2}) - s({1, 1}));
}

TEST(SymFunc, ConversionsMatchVariableExpansion)
{
  const int N = 6;
  for (int d = 1; d <= 6; ++d)
    for (const auto& lambda : generate_partitions(d)) {
      oracle::Poly s_poly = oracle::schur(lambda, N);
      oracle::Poly h_poly = oracle::constant(N, 1);
      for (int part : lambda.parts())
        h_poly = oracle::mul(h_poly, oracle::complete(part, N));
      EXPECT_EQ(oracle::from_powersum(to_basis(SymFunc::generator(Basis::schur, lambda), Basis::powersum), N), s_poly)
        << lambda.to_string();
      EXPECT_EQ(oracle::from_powersum(to_basis(SymFunc::generator(Basis::complete, lambda), Basis::powersum), N), h_poly)
        << lambda.to_string();
      EXPECT_EQ(expand_in_variables(SymFunc::generator(Basis::schur, lambda), N), s_poly);
    }
}

TEST(SymFunc, ExpandInVariables)
{
  Polynomial p2 = expand_in_variables(p({2}), 2);
  EXPECT_EQ(p2, (Polynomial{{{2, 0}, 1}, {{0, 2}, 1}}));
  Polynomial h2 = expand_in_variables(h({2}), 2);
  EXPECT_EQ(h2, (Polynomial{{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}));
  EXPECT_EQ(expand_in_variables(s({1, 1}), 2), (Polynomial{{{1, 1}, 1}}));
}

TEST(SymFunc, ExpandIsRingHomomorphism)
{
  auto gens = generators_up_to(3);
  for (const auto& f : gens)
    for (const auto& g : gens) {
      if (f.max_degree() + g.max_degree() > 6)
        continue;
      EXPECT_EQ(expand_in_variables(f * g, 6),
                multiply_polynomials(expand_in_variables(f, 6), expand_in_variables(g, 6), 6));
    }
}

TEST(SymFunc, ConversionsAreMutuallyInverse)
{
  for (int d = 1; d <= 8; ++d)
    for (const auto& lambda : generate_partitions(d))
      for (Basis from : {Basis::powersum, Basis::complete, Basis::schur})
        for (Basis to : {Basis::powersum, Basis::complete, Basis::schur}) {
          SymFunc g = SymFunc::generator(from, lambda);
          EXPECT_EQ(to_basis(to_basis(g, to), from), g) << lambda.to_string();
        }
}

TEST(SymFunc, HallInnerProduct)
{
  EXPECT_EQ(hall_inner_product(p({3}), p({3})), 3);
  EXPECT_EQ(hall_inner_product(s({2, 1}), s({2, 1})), 1);
  EXPECT_EQ(hall_inner_product(s({2, 1}), s({3})), 0);
  for (int a = 1; a <= 6; ++a)
    for (const auto& lambda : generate_partitions(a))
      for (int b = 1; b <= 6; ++b)
        for (const auto& mu : generate_partitions(b))
          EXPECT_EQ(hall_inner_product(SymFunc::generator(Basis::schur, lambda),
                                       SymFunc::generator(Basis::schur, mu)),
                    lambda == mu ? 1 : 0);
}

TEST(SymFunc, MultiplyMatchesOracle)
{
  // s_1 s_{1,1} in three variables, re-expanded by leading monomials.
  auto expected = oracle::schur_coefficients(
    oracle::mul(oracle::schur(Partition({1}), 3), oracle::schur(Partition({1, 1}), 3)), 3);
  EXPECT_EQ(oracle::schur_coefficients(s({1}) * s({1, 1})), expected);
  EXPECT_EQ(s({1}) * s({1, 1}), s({2, 1}) + s({1, 1, 1}));
  EXPECT_EQ(power(s({1}), 0), SymFunc::constant(Basis::schur, 1));
}

TEST(SymFunc, LittlewoodRichardson)
{
  EXPECT_EQ(littlewood_richardson(Partition({2}), Partition({1}), Partition({1})), 1);
  EXPECT_EQ(littlewood_richardson(Partition({2, 1}), Partition({1}), Partition({1, 1})), 1);
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      EXPECT_EQ(littlewood_richardson(Partition::row(n), Partition::row(k), Partition::row(n - k)), 1);
  EXPECT_EQ(littlewood_richardson(Partition({3, 2, 1}), Partition({2, 1}), Partition({2, 1})), 2);
  EXPECT_THROW(littlewood_richardson(Partition({3}), Partition({1}), Partition({1})),
               std::invalid_argument);

  // Against the oracle product for every pair of total degree <= 5.
  const int N = 5;
  for (int a = 1; a <= 3; ++a)
    for (const auto& mu : generate_partitions(a))
      for (int b = 1; a + b <= 5; ++b)
        for (const auto& nu : generate_partitions(b)) {
          auto coeffs = oracle::schur_coefficients(
            oracle::mul(oracle::schur(mu, N), oracle::schur(nu, N)), N);
          for (const auto& lambda : generate_partitions(a + b))
            EXPECT_EQ(mpq_class(littlewood_richardson(lambda, mu, nu)), coeffs[lambda]);
        }
}

TEST(Plethysm, AdamsAxiom)
{
  EXPECT_EQ(plethysm(p({2}), p({3})), p({6}));
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n)
      EXPECT_EQ(plethysm(p({m}), p({n})), SymFunc::generator(Basis::powersum, Partition({m * n})));
}

TEST(Plethysm, SkOfS1)
{
  for (int k = 1; k <= 8; ++k) {
    SymFunc sk = SymFunc::generator(Basis::schur, Partition::row(k));
    EXPECT_EQ(plethysm(sk, s({1})), sk);
  }
}

TEST(Plethysm, S2OfS2MatchesVariableSubstitution)
{
  const int N = 5;
  oracle::Poly inner = oracle::schur(Partition({2}), N);
  auto expected = oracle::schur_coefficients(oracle::h2_of_monomials(inner), N);
  SymFunc got = plethysm(s({2}), s({2}));
  EXPECT_EQ(oracle::schur_coefficients(got), expected);
  EXPECT_EQ(got, s({4}) + s({2, 2}));
}

TEST(Plethysm, RepeatedTreeFactor)
{
  // s_2[s_1^5 s_2]: compare with the complete product rule and with the
  // orbit count 14!/8 for two swapped copies of a tree with character
  // s_1^5 s_2.
  SymFunc g = power(s({1}), 5);
  SymFunc hh = s({2});
  SymFunc lhs = plethysm(s({2}), g * hh);
  SymFunc rhs = plethysm(s({2}), g) * plethysm(s({2}), hh) +
                plethysm(s({1, 1}), g) * plethysm(s({1, 1}), hh);
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(lhs.homogeneous_degree(), 14);
  EXPECT_TRUE(lhs.is_nonnegative_integral());
  Integer dim = 0;
  for (const auto& [lambda, c] : lhs.terms())
    dim += Integer(c) * dim_irreducible(lambda);
  EXPECT_EQ(dim, factorial(14) / 8);
}

TEST(Plethysm, HomomorphismIdentities)
{
  std::mt19937 rng(20240611);
  auto random_p = [&](int max_degree) {
    std::uniform_int_distribution<int> coef(-3, 3), deg(1, max_degree);
    SymFunc f(Basis::powersum);
    for (int t = 0; t < 3; ++t) {
      auto parts = generate_partitions(deg(rng));
      std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
      f.add_term(parts[pick(rng)], Rational(coef(rng), 1 + (t % 2)));
    }
    return f;
  };
  for (int trial = 0; trial < 20; ++trial) {
    SymFunc g = random_p(2), h2 = random_p(2);
    SymFunc f1 = random_p(2), f2 = random_p(2);
    for (int m = 1; m <= 2; ++m) {
      SymFunc pm = SymFunc::generator(Basis::powersum, Partition({m}));
      EXPECT_EQ(plethysm(pm, g + h2), plethysm(pm, g) + plethysm(pm, h2));
      EXPECT_EQ(plethysm(pm, g * h2), plethysm(pm, g) * plethysm(pm, h2));
      EXPECT_EQ(plethysm(pm, scale(Rational(2, 3), g)), scale(Rational(2, 3), plethysm(pm, g)));
    }
    EXPECT_EQ(plethysm(f1 + f2, g), plethysm(f1, g) + plethysm(f2, g));
    EXPECT_EQ(plethysm(f1 * f2, g), plethysm(f1, g) * plethysm(f2, g));
  }
}

TEST(Plethysm, SumRule)
{
  for (int d = 1; d <= 3; ++d)
    for (const auto& lambda : generate_partitions(d)) {
      SymFunc sl = SymFunc::generator(Basis::schur, lambda);
      for (const auto& g : generators_up_to(2))
        for (const auto& hh : generators_up_to(2)) {
          SymFunc gs = to_basis(g, Basis::schur), hs = to_basis(hh, Basis::schur);
          SymFunc rhs(Basis::schur);
          for (int a = 0; a <= d; ++a)
            for (const auto& mu : generate_partitions(a))
              for (const auto& nu : generate_partitions(d - a)) {
                Integer c = littlewood_richardson(lambda, mu, nu);
                if (c == 0)
                  continue;
                rhs += scale(Rational(c), plethysm(SymFunc::generator(Basis::schur, mu), gs) *
                                            plethysm(SymFunc::generator(Basis::schur, nu), hs));
              }
          EXPECT_EQ(plethysm(sl, gs + hs), rhs);
        }
    }
}

TEST(Plethysm, ProductRules)
{
  for (int n = 1; n <= 3; ++n) {
    SymFunc row = SymFunc::generator(Basis::schur, Partition::row(n));
    SymFunc col = SymFunc::generator(Basis::schur, Partition::column(n));
    for (const auto& g : generators_up_to(2))
      for (const auto& hh : generators_up_to(2)) {
        SymFunc gs = to_basis(g, Basis::schur), hs = to_basis(hh, Basis::schur);
        SymFunc complete_rhs(Basis::schur), elementary_rhs(Basis::schur), general(Basis::schur);
        for (const auto& lambda : generate_partitions(n)) {
          SymFunc sl = SymFunc::generator(Basis::schur, lambda);
          complete_rhs += plethysm(sl, gs) * plethysm(sl, hs);
          elementary_rhs += plethysm(sl, gs) *
                            plethysm(SymFunc::generator(Basis::schur, conjugate(lambda)), hs);
        }
        // The general product rule with Kronecker coefficients, lambda = (n).
        for (const auto& mu : generate_partitions(n))
          for (const auto& nu : generate_partitions(n)) {
            Integer k = kronecker_coefficient(Partition::row(n), mu, nu);
            if (k != 0)
              general += scale(Rational(k), plethysm(SymFunc::generator(Basis::schur, mu), gs) *
                                              plethysm(SymFunc::generator(Basis::schur, nu), hs));
          }
        EXPECT_EQ(plethysm(row, gs * hs), complete_rhs);
        EXPECT_EQ(plethysm(col, gs * hs), elementary_rhs);
        EXPECT_EQ(general, complete_rhs);
      }
  }
}
