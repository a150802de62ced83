#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "adjrep/partition.hpp"
#include "adjrep/rational.hpp"

namespace adjrep {

enum class Basis { powersum, complete, schur };

std::string basis_name(Basis b);       // "powersum", "complete", "schur"
std::string basis_letter(Basis b);     // "p", "h", "s"
Basis parse_basis(const std::string& name);

class BasisMismatch : public std::invalid_argument {
public:
  BasisMismatch(Basis a, Basis b);
};

/// A symmetric function over Q written in one of the p, h or s bases.
///
/// Terms are a sparse map from partitions to nonzero rationals, iterated in
/// graded reverse-lexicographic order. Degrees may be mixed. The empty
/// partition is the constant 1 in every basis.
class SymFunc {
public:
  using Terms = std::map<Partition, Rational>;

  explicit SymFunc(Basis basis = Basis::schur) : basis_(basis) {}

  static SymFunc generator(Basis basis, const Partition& lambda);
  static SymFunc constant(Basis basis, const Rational& c);

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Partition& lambda) const;

  /// Adds c to the coefficient of lambda, erasing it if it becomes zero.
  void add_term(const Partition& lambda, const Rational& c);

  /// The common degree of all terms, or nullopt when degrees are mixed. The
  /// zero function reports degree 0.
  std::optional<int> homogeneous_degree() const;
  int max_degree() const;

  /// Every coefficient is a nonnegative integer.
  bool is_nonnegative_integral() const;

  /// "2*s[4] + 3*s[3,1] - 1/2*s[2,2]"; "0" for the zero function.
  std::string to_string() const;

  SymFunc& operator+=(const SymFunc& other);
  SymFunc& operator-=(const SymFunc& other);

  friend bool operator==(const SymFunc& a, const SymFunc& b) = default;

private:
  Basis basis_;
  Terms terms_;
};

/// Coefficientwise sum. Throws BasisMismatch when the tags differ.
SymFunc add(const SymFunc& f, const SymFunc& g);
SymFunc scale(const Rational& c, const SymFunc& f);

SymFunc operator+(const SymFunc& f, const SymFunc& g);
SymFunc operator-(const SymFunc& f, const SymFunc& g);
SymFunc operator*(const Rational& c, const SymFunc& f);

/// Product in the ring of symmetric functions, computed in the powersum
/// basis (where it concatenates parts) and returned in the basis of f.
SymFunc multiply(const SymFunc& f, const SymFunc& g);
SymFunc operator*(const SymFunc& f, const SymFunc& g);

/// f^k with f^0 = 1.
SymFunc power(const SymFunc& f, int k);

/// Change of basis.
///   s -> h   Jacobi-Trudi determinant det(h_{lambda_i - i + j})
///   h -> p   h_k = sum_{mu |- k} p_mu / z_mu
///   s -> p   s_lambda = sum_mu chi^lambda(mu) p_mu / z_mu
///   p -> s   <f, s_lambda> from character values
/// Other pairs route through these.
SymFunc to_basis(const SymFunc& f, Basis target);

/// Hall inner product, <p_lambda, p_mu> = z_lambda delta.
Rational hall_inner_product(const SymFunc& f, const SymFunc& g);

/// Plethysm f[g] over Q. Both arguments go to the powersum basis; p_m[g]
/// replaces every p_k of g by p_{mk} with coefficients untouched, and the
/// map extends multiplicatively and linearly in f. Returned in f's basis.
SymFunc plethysm(const SymFunc& f, const SymFunc& g);

/// p_m[g] in the powersum basis.
SymFunc adams_operation(int m, const SymFunc& g);

/// Coefficient of s_lambda in s_mu * s_nu. Throws std::invalid_argument
/// unless |mu| + |nu| = |lambda|.
Integer littlewood_richardson(const Partition& lambda, const Partition& mu,
                              const Partition& nu);

/// Polynomial in finitely many variables: exponent vector -> coefficient.
using Polynomial = std::map<std::vector<int>, Rational>;

/// Image of f in the variables x_1..x_num_vars.
Polynomial expand_in_variables(const SymFunc& f, int num_vars);

Polynomial multiply_polynomials(const Polynomial& a, const Polynomial& b,
                                int num_vars);

} // namespace adjrep
