#include <gtest/gtest.h>

#include "adjrep/adjoint.hpp"
#include "adjrep/characters.hpp"
#include "adjrep/expression.hpp"
#include "adjrep/forests.hpp"
#include "adjrep/permutation.hpp"

using namespace adjrep;

namespace {

SymFunc schur(const char* expr) { return to_basis(parse_expression(expr), Basis::schur); }

// Trace of X -> P X P^{-1} on all n x n matrices, directly from the
// definition: count matrix units E_{ij} with sigma(i) = i and sigma(j) = j.
long mat_trace_by_units(const Permutation& sigma)
{
  long t = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = 0; j < sigma.size(); ++j)
      if (sigma[i] == static_cast<int>(i) && sigma[j] == static_cast<int>(j))
        ++t;
  return t;
}

} // namespace

TEST(MatrixSpace, Dimensions)
{
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(space_dimension(n, SpaceKind::mat), n * n);
    EXPECT_EQ(space_dimension(n, SpaceKind::sym), n * (n + 1) / 2);
    EXPECT_EQ(space_dimension(n, SpaceKind::skew), n * (n - 1) / 2);
    EXPECT_EQ(MatrixSpace(n, SpaceKind::sym).dimension(), n * (n + 1) / 2);
  }
  EXPECT_EQ(parse_space("skew"), SpaceKind::skew);
  EXPECT_THROW(parse_space("upper"), std::invalid_argument);
}

TEST(Trace, KnownValues)
{
  ClassFunction mat2 = trace_character(2, SpaceKind::mat);
  EXPECT_EQ(mat2.at(Partition({2})), 0);
  EXPECT_EQ(mat2.at(Partition({1, 1})), 4);
  ClassFunction skew3 = trace_character(3, SpaceKind::skew);
  EXPECT_EQ(skew3.at(Partition({3})), 0);
  EXPECT_EQ(skew3.at(Partition({2, 1})), -1);
  EXPECT_EQ(skew3.at(Partition({1, 1, 1})), 3);
}

TEST(Trace, MatchesDefinitionAndClosedForm)
{
  for (int n = 1; n <= 6; ++n) {
    ClassFunction mat = trace_character(n, SpaceKind::mat);
    ClassFunction sym = trace_character(n, SpaceKind::sym);
    ClassFunction skew = trace_character(n, SpaceKind::skew);
    for (const auto& mu : generate_partitions(n)) {
      EXPECT_EQ(mat.at(mu), mat_trace_by_units(canonical_representative(mu)));
      for (SpaceKind k : kAllSpaces)
        EXPECT_EQ(trace_character(n, k).at(mu), closed_trace(k, mu));
    }
    EXPECT_EQ(mat, sym + skew);
  }
  EXPECT_THROW(trace_character(11, SpaceKind::mat, 10), CapExceeded);
}

TEST(Formula, PrintedForms)
{
  EXPECT_EQ(theorem_formula(2, SpaceKind::mat), schur("2*s[2] + 2*s[1,1]"));
  EXPECT_EQ(theorem_formula(3, SpaceKind::mat), schur("2*s[3] + 3*s[2,1] + s[1,1,1]"));
  EXPECT_EQ(theorem_formula(6, SpaceKind::mat),
            schur("2*s[6] + 3*s[5,1] + s[4,2] + s[4,1,1]"));
  EXPECT_EQ(theorem_formula(6, SpaceKind::sym), schur("2*s[6] + 2*s[5,1] + s[4,2]"));
  EXPECT_EQ(theorem_formula(6, SpaceKind::skew), schur("s[5,1] + s[4,1,1]"));
  EXPECT_EQ(theorem_formula(3, SpaceKind::sym), schur("2*s[3] + 3*s[2,1]"));
  EXPECT_EQ(theorem_formula(3, SpaceKind::skew), schur("s[1,1,1]"));
  EXPECT_THROW(theorem_formula(1, SpaceKind::mat), std::domain_error);
}

TEST(Formula, PrintedSmallCasesHaveWrongDimension)
{
  // Sym_3 has dimension 6 and Skew_3 dimension 3; the printed n = 3 forms
  // give 8 and 1. The computed characters have the right dimensions.
  auto dim = [](const SymFunc& f) {
    Integer d = 0;
    for (const auto& [lambda, c] : f.terms())
      d += Integer(c) * dim_irreducible(lambda);
    return d;
  };
  EXPECT_EQ(dim(theorem_formula(3, SpaceKind::sym)), 8);
  EXPECT_EQ(dim(theorem_formula(3, SpaceKind::skew)), 1);
  EXPECT_EQ(dim(orbit_formula(3, SpaceKind::sym)), 6);
  EXPECT_EQ(dim(orbit_formula(3, SpaceKind::skew)), 3);
  EXPECT_EQ(orbit_formula(3, SpaceKind::sym), schur("2*s[3] + 2*s[2,1]"));
  EXPECT_EQ(orbit_formula(3, SpaceKind::skew), schur("s[2,1] + s[1,1,1]"));
}

TEST(Formula, OrbitRouteMatchesTrace)
{
  for (int n = 2; n <= 7; ++n)
    for (SpaceKind k : kAllSpaces)
      EXPECT_EQ(orbit_formula(n, k), schur_expansion(decompose(trace_character(n, k))))
        << n << " " << space_name(k);
}

TEST(Formula, BuildingBlocks)
{
  // Orbits of E_ij (i != j), E_ii and E_ij + E_ji.
  for (int n = 2; n <= 6; ++n) {
    SymFunc s1 = SymFunc::generator(Basis::schur, Partition({1}));
    SymFunc s2 = SymFunc::generator(Basis::schur, Partition({2}));
    SymFunc rest2 = n > 2 ? SymFunc::generator(Basis::schur, Partition::row(n - 2))
                          : SymFunc::constant(Basis::schur, 1);
    SymFunc rest1 = SymFunc::generator(Basis::schur, Partition::row(n - 1));

    std::vector<int> eij(static_cast<std::size_t>(n), PartialTransformation::kUndefined);
    eij[0] = 1;
    std::vector<int> eii(static_cast<std::size_t>(n), PartialTransformation::kUndefined);
    eii[0] = 0;
    std::vector<int> fij(static_cast<std::size_t>(n), PartialTransformation::kUndefined);
    fij[0] = 1;
    fij[1] = 0;
    EXPECT_EQ(brute_force_odun(PartialTransformation(eij)), s1 * s1 * rest2);
    EXPECT_EQ(brute_force_odun(PartialTransformation(eii)), s1 * rest1);
    EXPECT_EQ(brute_force_odun(PartialTransformation(fij)), s2 * rest2);
  }
}

TEST(Verify, ReportsOnlyThePrintedSmallCases)
{
  VerifyReport report = verify(5);
  EXPECT_EQ(report.records.size(), 12u);
  auto failures = report.failures();
  ASSERT_EQ(failures.size(), 2u);
  EXPECT_EQ(failures[0].n, 3);
  EXPECT_EQ(failures[1].n, 3);
  for (const auto& [n, holds] : report.additivity)
    EXPECT_TRUE(holds) << n;
  EXPECT_FALSE(report.all_match());
  EXPECT_THROW(require_match(report), VerificationMismatch);
  EXPECT_THROW(verify(1), std::invalid_argument);
}
