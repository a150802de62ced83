#include "adjrep/characters.hpp"

#include <numeric>

namespace adjrep {

NotACharacter::NotACharacter(const Partition& lambda, const Rational& m)
  : std::runtime_error("not a genuine character: multiplicity of " +
                       lambda.to_string() + " is " + to_fraction_string(m)),
    lambda_(lambda), multiplicity_(m)
{}

ClassFunction::ClassFunction(int n) : n_(n)
{
  for (auto& mu : generate_partitions(n))
    values_.emplace(std::move(mu), Rational(0));
}

const Rational& ClassFunction::at(const Partition& mu) const
{
  auto it = values_.find(mu);
  if (it == values_.end())
    throw DegreeMismatch("class " + mu.to_string() + " is not a partition of " +
                         std::to_string(n_));
  return it->second;
}

void ClassFunction::set(const Partition& mu, const Rational& value)
{
  auto it = values_.find(mu);
  if (it == values_.end())
    throw DegreeMismatch("class " + mu.to_string() + " is not a partition of " +
                         std::to_string(n_));
  it->second = value;
  it->second.canonicalize();
}

const Rational& ClassFunction::dimension() const
{
  return at(Partition::column(n_));
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other)
{
  if (other.n_ != n_)
    throw DegreeMismatch("class functions of different degrees");
  for (auto& [mu, v] : values_)
    v += other.values_.at(mu);
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other)
{
  if (other.n_ != n_)
    throw DegreeMismatch("class functions of different degrees");
  for (auto& [mu, v] : values_)
    v -= other.values_.at(mu);
  return *this;
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b)
{
  ClassFunction r = a;
  r += b;
  return r;
}

ClassFunction operator-(const ClassFunction& a, const ClassFunction& b)
{
  ClassFunction r = a;
  r -= b;
  return r;
}

ClassFunction irreducible_character(const Partition& lambda)
{
  ClassFunction chi(lambda.size());
  for (const auto& [mu, v] : chi.values())
    chi.set(mu, Rational(character_value(lambda, mu)));
  return chi;
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b)
{
  if (a.degree() != b.degree())
    throw DegreeMismatch("inner_product: degree mismatch");
  Rational sum = 0;
  for (const auto& [mu, v] : a.values())
    sum += v * b.at(mu) / Rational(z_of(mu));
  return sum;
}

SymFunc frobenius(const ClassFunction& chi)
{
  SymFunc f(Basis::powersum);
  for (const auto& [mu, v] : chi.values())
    f.add_term(mu, v / Rational(z_of(mu)));
  return f;
}

ClassFunction inverse_frobenius(const SymFunc& f, int n)
{
  SymFunc p = to_basis(f, Basis::powersum);
  ClassFunction chi(n);
  for (const auto& [mu, c] : p.terms()) {
    if (mu.size() != n)
      throw DegreeMismatch("inverse_frobenius: term " + mu.to_string() +
                           " has degree " + std::to_string(mu.size()) +
                           ", expected " + std::to_string(n));
    chi.set(mu, c * Rational(z_of(mu)));
  }
  return chi;
}

std::map<Partition, Integer> decompose(const ClassFunction& chi)
{
  std::map<Partition, Integer> out;
  for (const auto& lambda : generate_partitions(chi.degree())) {
    Rational m = inner_product(chi, irreducible_character(lambda));
    if (m < 0 || !is_integer(m))
      throw NotACharacter(lambda, m);
    if (m != 0)
      out.emplace(lambda, m.get_num());
  }
  return out;
}

SymFunc schur_expansion(const std::map<Partition, Integer>& multiplicities)
{
  SymFunc f(Basis::schur);
  for (const auto& [lambda, m] : multiplicities)
    f.add_term(lambda, Rational(m));
  return f;
}

SymFunc induce_trivial_from_young(const std::vector<int>& blocks)
{
  std::vector<int> parts;
  for (int b : blocks) {
    if (b <= 0)
      throw std::invalid_argument("induce_trivial_from_young: blocks must be positive");
    parts.push_back(b);
  }
  SymFunc h = SymFunc::generator(Basis::complete,
                                 Partition::from_unsorted(std::move(parts)));
  return to_basis(h, Basis::schur);
}

ClassFunction kronecker_product(const ClassFunction& a, const ClassFunction& b)
{
  if (a.degree() != b.degree())
    throw DegreeMismatch("kronecker_product: degree mismatch");
  ClassFunction r(a.degree());
  for (const auto& [mu, v] : a.values())
    r.set(mu, v * b.at(mu));
  return r;
}

Integer kronecker_coefficient(const Partition& lambda, const Partition& mu,
                              const Partition& nu)
{
  if (lambda.size() != mu.size() || mu.size() != nu.size())
    throw DegreeMismatch("kronecker_coefficient: partitions of different sizes");
  Rational g = inner_product(
    irreducible_character(lambda),
    kronecker_product(irreducible_character(mu), irreducible_character(nu)));
  return g.get_num();
}

} // namespace adjrep
