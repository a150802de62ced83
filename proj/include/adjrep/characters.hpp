#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "adjrep/character_table.hpp"
#include "adjrep/partition.hpp"
#include "adjrep/rational.hpp"
#include "adjrep/symfunc.hpp"

namespace adjrep {

class DegreeMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by decompose when a multiplicity is negative or non-integral.
class NotACharacter : public std::runtime_error {
public:
  NotACharacter(const Partition& lambda, const Rational& multiplicity);
  const Partition& irreducible() const { return lambda_; }
  const Rational& multiplicity() const { return multiplicity_; }

private:
  Partition lambda_;
  Rational multiplicity_;
};

/// A class function on S_n, one value per cycle type. Every partition of n
/// is present; zeros are kept.
class ClassFunction {
public:
  using Values = std::map<Partition, Rational>;

  explicit ClassFunction(int n = 0);

  int degree() const { return n_; }
  const Values& values() const { return values_; }
  const Rational& at(const Partition& mu) const;
  /// Throws DegreeMismatch if |mu| != n.
  void set(const Partition& mu, const Rational& value);

  /// Value at the identity class.
  const Rational& dimension() const;

  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator-=(const ClassFunction& other);
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

private:
  int n_;
  Values values_;
};

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);

ClassFunction irreducible_character(const Partition& lambda);

/// (1/n!) sum_g a(g) b(g) = sum_mu a(mu) b(mu) / z_mu.
Rational inner_product(const ClassFunction& a, const ClassFunction& b);

/// Frobenius characteristic sum_mu chi(mu) p_mu / z_mu, in the powersum
/// basis.
SymFunc frobenius(const ClassFunction& chi);

/// chi(mu) = z_mu [p_mu] f. Throws DegreeMismatch unless f is homogeneous of
/// degree n (the zero function is accepted for any n).
ClassFunction inverse_frobenius(const SymFunc& f, int n);

/// Multiplicities of the irreducibles, zero entries omitted. Throws
/// NotACharacter when one is negative or fractional.
std::map<Partition, Integer> decompose(const ClassFunction& chi);

/// The Schur expansion sum m_lambda s_lambda of a multiplicity map.
SymFunc schur_expansion(const std::map<Partition, Integer>& multiplicities);

/// Frobenius characteristic of the permutation module of S_n on cosets of
/// the Young subgroup S_{b1} x S_{b2} x ..., namely h_{b1} h_{b2} ...,
/// returned in the Schur basis.
SymFunc induce_trivial_from_young(const std::vector<int>& blocks);

/// Pointwise product. Throws DegreeMismatch.
ClassFunction kronecker_product(const ClassFunction& a, const ClassFunction& b);

/// Multiplicity of chi^lambda in chi^mu chi^nu.
Integer kronecker_coefficient(const Partition& lambda, const Partition& mu,
                              const Partition& nu);

} // namespace adjrep
