#include "adjrep/symfunc.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "adjrep/character_table.hpp"

namespace adjrep {

std::string basis_name(Basis b)
{
  switch (b) {
  case Basis::powersum: return "powersum";
  case Basis::complete: return "complete";
  case Basis::schur: return "schur";
  }
  return "?";
}

std::string basis_letter(Basis b)
{
  switch (b) {
  case Basis::powersum: return "p";
  case Basis::complete: return "h";
  case Basis::schur: return "s";
  }
  return "?";
}

Basis parse_basis(const std::string& name)
{
  if (name == "powersum" || name == "p")
    return Basis::powersum;
  if (name == "complete" || name == "h")
    return Basis::complete;
  if (name == "schur" || name == "s")
    return Basis::schur;
  throw std::invalid_argument("unknown basis '" + name + "'");
}

BasisMismatch::BasisMismatch(Basis a, Basis b)
  : std::invalid_argument("basis mismatch: " + basis_name(a) + " vs " +
                          basis_name(b))
{}

// SymFunc ---------------------------------------------------------------

SymFunc SymFunc::generator(Basis basis, const Partition& lambda)
{
  SymFunc f(basis);
  f.terms_.emplace(lambda, Rational(1));
  return f;
}

SymFunc SymFunc::constant(Basis basis, const Rational& c)
{
  SymFunc f(basis);
  f.add_term(Partition(), c);
  return f;
}

Rational SymFunc::coeff(const Partition& lambda) const
{
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymFunc::add_term(const Partition& lambda, const Rational& c)
{
  // mpq_class(num, den) does not reduce; keep stored values canonical so
  // that equality is structural.
  Rational reduced = c;
  reduced.canonicalize();
  if (reduced == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(lambda, reduced);
  if (!inserted) {
    it->second += reduced;
    if (it->second == 0)
      terms_.erase(it);
  }
}

std::optional<int> SymFunc::homogeneous_degree() const
{
  if (terms_.empty())
    return 0;
  int d = terms_.begin()->first.size();
  for (const auto& [lambda, c] : terms_)
    if (lambda.size() != d)
      return std::nullopt;
  return d;
}

int SymFunc::max_degree() const
{
  return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

bool SymFunc::is_nonnegative_integral() const
{
  for (const auto& [lambda, c] : terms_)
    if (c < 0 || !is_integer(c))
      return false;
  return true;
}

std::string SymFunc::to_string() const
{
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& [lambda, c] : terms_) {
    Rational mag = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (lambda.empty()) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1)
      out += mag.get_str() + "*";
    out += basis_letter(basis_) + "[" + lambda.to_csv() + "]";
  }
  return out;
}

SymFunc& SymFunc::operator+=(const SymFunc& other)
{
  if (other.basis_ != basis_)
    throw BasisMismatch(basis_, other.basis_);
  for (const auto& [lambda, c] : other.terms_)
    add_term(lambda, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other)
{
  if (other.basis_ != basis_)
    throw BasisMismatch(basis_, other.basis_);
  for (const auto& [lambda, c] : other.terms_)
    add_term(lambda, -c);
  return *this;
}

SymFunc add(const SymFunc& f, const SymFunc& g)
{
  SymFunc r = f;
  r += g;
  return r;
}

SymFunc scale(const Rational& c, const SymFunc& f)
{
  SymFunc r(f.basis());
  Rational k = c;
  k.canonicalize();
  if (k == 0)
    return r;
  for (const auto& [lambda, a] : f.terms())
    r.add_term(lambda, k * a);
  return r;
}

SymFunc operator+(const SymFunc& f, const SymFunc& g) { return add(f, g); }

SymFunc operator-(const SymFunc& f, const SymFunc& g)
{
  SymFunc r = f;
  r -= g;
  return r;
}

SymFunc operator*(const Rational& c, const SymFunc& f) { return scale(c, f); }

// Basis conversion ------------------------------------------------------

namespace {

// Product in a multiplicative basis (p or h), where b_lambda b_mu =
// b_{lambda u mu}.
SymFunc concat_product(const SymFunc& f, const SymFunc& g)
{
  SymFunc r(f.basis());
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms())
      r.add_term(a.concatenated(b), ca * cb);
  return r;
}

// h_k = sum_{mu |- k} p_mu / z_mu.
SymFunc complete_in_powersum(int k)
{
  SymFunc r(Basis::powersum);
  for (const auto& mu : generate_partitions(k))
    r.add_term(mu, Rational(1) / Rational(z_of(mu)));
  return r;
}

SymFunc complete_to_powersum(const SymFunc& f)
{
  std::map<int, SymFunc> single;
  SymFunc out(Basis::powersum);
  for (const auto& [lambda, c] : f.terms()) {
    SymFunc prod = SymFunc::constant(Basis::powersum, c);
    for (int part : lambda.parts()) {
      auto it = single.find(part);
      if (it == single.end())
        it = single.emplace(part, complete_in_powersum(part)).first;
      prod = concat_product(prod, it->second);
    }
    out += prod;
  }
  return out;
}

SymFunc schur_to_powersum(const SymFunc& f)
{
  SymFunc out(Basis::powersum);
  for (const auto& [lambda, c] : f.terms())
    for (const auto& mu : generate_partitions(lambda.size()))
      out.add_term(mu, c * Rational(character_value(lambda, mu)) /
                         Rational(z_of(mu)));
  return out;
}

// <p_mu, s_lambda> = chi^lambda(mu), so [s_lambda] f = sum_mu c_mu chi^lambda(mu).
SymFunc powersum_to_schur(const SymFunc& f)
{
  std::map<int, std::vector<std::pair<Partition, Rational>>> by_degree;
  for (const auto& [mu, c] : f.terms())
    by_degree[mu.size()].emplace_back(mu, c);
  SymFunc out(Basis::schur);
  for (const auto& [d, terms] : by_degree) {
    for (const auto& lambda : generate_partitions(d)) {
      Rational coeff = 0;
      for (const auto& [mu, c] : terms)
        coeff += c * Rational(character_value(lambda, mu));
      out.add_term(lambda, coeff);
    }
  }
  return out;
}

// det(h_{lambda_i - i + j}) by Laplace expansion along rows, memoized on the
// set of columns already used. Rows i >= r can only use columns
// j >= r - lambda_r, so a state leaving an earlier column free is zero.
SymFunc jacobi_trudi(const Partition& lambda)
{
  const int l = lambda.length();
  if (l > 30)
    throw std::length_error("jacobi_trudi: partition too long");
  std::unordered_map<std::uint32_t, SymFunc> memo;

  std::function<SymFunc(std::uint32_t)> minor = [&](std::uint32_t used) {
    const int row = std::popcount(used);
    if (row == l)
      return SymFunc::constant(Basis::complete, 1);
    auto it = memo.find(used);
    if (it != memo.end())
      return it->second;
    SymFunc det(Basis::complete);
    const int lowest_usable = row - lambda[static_cast<std::size_t>(row)];
    bool dead = false;
    for (int c = 0; c < std::min(lowest_usable, l); ++c)
      if (!(used & (1u << c)))
        dead = true;
    if (!dead) {
      int position = 0;
      for (int j = 0; j < l; ++j) {
        if (used & (1u << j))
          continue;
        int index = lambda[static_cast<std::size_t>(row)] - row + j;
        if (index >= 0) {
          SymFunc rest = minor(used | (1u << j));
          Partition h_index = Partition::row(index);
          Rational sign = position % 2 == 0 ? 1 : -1;
          for (const auto& [mu, c] : rest.terms())
            det.add_term(mu.concatenated(h_index), sign * c);
        }
        ++position;
      }
    }
    memo.emplace(used, det);
    return det;
  };
  return minor(0);
}

SymFunc schur_to_complete(const SymFunc& f)
{
  SymFunc out(Basis::complete);
  for (const auto& [lambda, c] : f.terms())
    out += scale(c, jacobi_trudi(lambda));
  return out;
}

} // namespace

SymFunc to_basis(const SymFunc& f, Basis target)
{
  const Basis from = f.basis();
  if (from == target)
    return f;
  switch (from) {
  case Basis::powersum: {
    SymFunc s = powersum_to_schur(f);
    return target == Basis::schur ? s : schur_to_complete(s);
  }
  case Basis::complete: {
    SymFunc p = complete_to_powersum(f);
    return target == Basis::powersum ? p : powersum_to_schur(p);
  }
  case Basis::schur:
    return target == Basis::complete ? schur_to_complete(f)
                                     : schur_to_powersum(f);
  }
  throw std::logic_error("unreachable basis");
}

// Products --------------------------------------------------------------

SymFunc multiply(const SymFunc& f, const SymFunc& g)
{
  SymFunc product = concat_product(to_basis(f, Basis::powersum),
                                   to_basis(g, Basis::powersum));
  return to_basis(product, f.basis());
}

SymFunc operator*(const SymFunc& f, const SymFunc& g) { return multiply(f, g); }

SymFunc power(const SymFunc& f, int k)
{
  if (k < 0)
    throw std::invalid_argument("power: negative exponent");
  SymFunc p = to_basis(f, Basis::powersum);
  SymFunc r = SymFunc::constant(Basis::powersum, 1);
  for (int i = 0; i < k; ++i)
    r = concat_product(r, p);
  return to_basis(r, f.basis());
}

Rational hall_inner_product(const SymFunc& f, const SymFunc& g)
{
  SymFunc pf = to_basis(f, Basis::powersum);
  SymFunc pg = to_basis(g, Basis::powersum);
  Rational sum = 0;
  for (const auto& [lambda, c] : pf.terms()) {
    Rational d = pg.coeff(lambda);
    if (d != 0)
      sum += c * d * Rational(z_of(lambda));
  }
  return sum;
}

// Plethysm --------------------------------------------------------------

SymFunc adams_operation(int m, const SymFunc& g)
{
  if (m <= 0)
    throw std::invalid_argument("adams_operation: m must be positive");
  SymFunc pg = to_basis(g, Basis::powersum);
  SymFunc r(Basis::powersum);
  for (const auto& [lambda, c] : pg.terms())
    r.add_term(lambda.empty() ? lambda : lambda.scaled(m), c);
  return r;
}

SymFunc plethysm(const SymFunc& f, const SymFunc& g)
{
  SymFunc pf = to_basis(f, Basis::powersum);
  SymFunc pg = to_basis(g, Basis::powersum);
  std::map<int, SymFunc> adams;
  SymFunc out(Basis::powersum);
  for (const auto& [lambda, c] : pf.terms()) {
    SymFunc term = SymFunc::constant(Basis::powersum, c);
    for (int part : lambda.parts()) {
      auto it = adams.find(part);
      if (it == adams.end())
        it = adams.emplace(part, adams_operation(part, pg)).first;
      term = concat_product(term, it->second);
    }
    out += term;
  }
  return to_basis(out, f.basis());
}

Integer littlewood_richardson(const Partition& lambda, const Partition& mu,
                              const Partition& nu)
{
  if (mu.size() + nu.size() != lambda.size())
    throw std::invalid_argument("littlewood_richardson: |mu| + |nu| != |lambda|");
  SymFunc product = multiply(SymFunc::generator(Basis::schur, mu),
                             SymFunc::generator(Basis::schur, nu));
  Rational c = product.coeff(lambda);
  return c.get_num();
}

// Variables -------------------------------------------------------------

Polynomial multiply_polynomials(const Polynomial& a, const Polynomial& b,
                                int num_vars)
{
  Polynomial r;
  std::vector<int> e(static_cast<std::size_t>(num_vars));
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = ea[i] + eb[i];
      auto [it, inserted] = r.try_emplace(e, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0)
          r.erase(it);
      }
    }
  return r;
}

namespace {

Polynomial power_sum_polynomial(int k, int num_vars)
{
  Polynomial r;
  for (int i = 0; i < num_vars; ++i) {
    std::vector<int> e(static_cast<std::size_t>(num_vars), 0);
    e[static_cast<std::size_t>(i)] = k;
    r[e] += 1;
  }
  return r;
}

void monomials_of_degree(int remaining, int var, std::vector<int>& e,
                         Polynomial& out)
{
  const int n = static_cast<int>(e.size());
  if (var == n - 1) {
    e[static_cast<std::size_t>(var)] = remaining;
    out[e] += 1;
    e[static_cast<std::size_t>(var)] = 0;
    return;
  }
  for (int a = remaining; a >= 0; --a) {
    e[static_cast<std::size_t>(var)] = a;
    monomials_of_degree(remaining - a, var + 1, e, out);
  }
  e[static_cast<std::size_t>(var)] = 0;
}

Polynomial complete_polynomial(int k, int num_vars)
{
  Polynomial r;
  if (num_vars == 0) {
    if (k == 0)
      r[{}] = 1;
    return r;
  }
  std::vector<int> e(static_cast<std::size_t>(num_vars), 0);
  monomials_of_degree(k, 0, e, r);
  return r;
}

} // namespace

Polynomial expand_in_variables(const SymFunc& f, int num_vars)
{
  if (num_vars < 0)
    throw std::invalid_argument("expand_in_variables: negative variable count");
  SymFunc g = f.basis() == Basis::schur ? to_basis(f, Basis::complete) : f;
  const bool powersum = g.basis() == Basis::powersum;
  std::map<int, Polynomial> single;
  const std::vector<int> zero(static_cast<std::size_t>(num_vars), 0);
  Polynomial out;
  for (const auto& [lambda, c] : g.terms()) {
    Polynomial term{{zero, c}};
    for (int part : lambda.parts()) {
      auto it = single.find(part);
      if (it == single.end())
        it = single
               .emplace(part, powersum ? power_sum_polynomial(part, num_vars)
                                       : complete_polynomial(part, num_vars))
               .first;
      term = multiply_polynomials(term, it->second, num_vars);
    }
    for (const auto& [e, v] : term) {
      auto [it, inserted] = out.try_emplace(e, v);
      if (!inserted) {
        it->second += v;
        if (it->second == 0)
          out.erase(it);
      }
    }
  }
  return out;
}

} // namespace adjrep
