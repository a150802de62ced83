#pragma once

// Test-only oracles that avoid the library's basis conversions: symmetric
// polynomials are built monomial by monomial in a fixed number of variables,
// and Schur coefficients are recovered by leading-monomial elimination.

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "adjrep/partition.hpp"
#include "adjrep/symfunc.hpp"

namespace oracle {

using Poly = std::map<std::vector<int>, mpq_class>;

inline void add_to(Poly& p, const std::vector<int>& e, const mpq_class& c)
{
  auto [it, fresh] = p.emplace(e, c);
  if (!fresh)
    it->second += c;
  if (it->second == 0)
    p.erase(it);
}

inline Poly constant(int n_vars, const mpq_class& c)
{
  Poly p;
  if (c != 0)
    p[std::vector<int>(static_cast<std::size_t>(n_vars), 0)] = c;
  return p;
}

inline Poly mul(const Poly& a, const Poly& b)
{
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = ea[i] + eb[i];
      add_to(out, e, ca * cb);
    }
  return out;
}

inline Poly add(Poly a, const Poly& b, const mpq_class& scale = 1)
{
  for (const auto& [e, c] : b)
    add_to(a, e, scale * c);
  return a;
}

inline Poly power_sum(int k, int n_vars)
{
  Poly p;
  for (int i = 0; i < n_vars; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n_vars), 0);
    e[static_cast<std::size_t>(i)] = k;
    add_to(p, e, 1);
  }
  return p;
}

// Every monomial of degree k, coefficient one.
inline Poly complete(int k, int n_vars)
{
  Poly p;
  std::vector<int> e(static_cast<std::size_t>(n_vars), 0);
  std::function<void(int, int)> go = [&](int i, int left) {
    if (i == n_vars - 1) {
      e[static_cast<std::size_t>(i)] = left;
      add_to(p, e, 1);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[static_cast<std::size_t>(i)] = a;
      go(i + 1, left - a);
    }
  };
  if (n_vars > 0)
    go(0, k);
  return p;
}

// Schur polynomial as a sum over semistandard tableaux.
inline Poly schur(const adjrep::Partition& lambda, int n_vars)
{
  Poly p;
  if (lambda.length() > n_vars)
    return p;
  std::vector<std::vector<int>> t;
  for (int r : lambda.parts())
    t.emplace_back(static_cast<std::size_t>(r), 0);
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda[r]; ++c)
      cells.emplace_back(r, c);
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == cells.size()) {
      std::vector<int> e(static_cast<std::size_t>(n_vars), 0);
      for (const auto& row : t)
        for (int v : row)
          ++e[static_cast<std::size_t>(v)];
      add_to(p, e, 1);
      return;
    }
    auto [r, c] = cells[k];
    int lo = 0;
    if (c > 0)
      lo = std::max(lo, t[r][c - 1]);
    if (r > 0)
      lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v < n_vars; ++v) {
      t[r][c] = v;
      go(k + 1);
    }
  };
  go(0);
  return p;
}

// Image of a powersum-basis function, multiplying out power sums directly.
inline Poly from_powersum(const adjrep::SymFunc& f, int n_vars)
{
  Poly out;
  for (const auto& [mu, c] : f.terms()) {
    Poly term = constant(n_vars, c);
    for (int part : mu.parts())
      term = mul(term, power_sum(part, n_vars));
    out = add(out, term);
  }
  return out;
}

// Schur coefficients of a symmetric polynomial by repeatedly removing the
// lexicographically largest monomial. Faithful when n_vars >= degree.
inline std::map<adjrep::Partition, mpq_class> schur_coefficients(Poly p, int n_vars)
{
  std::map<adjrep::Partition, mpq_class> out;
  while (!p.empty()) {
    auto lead = std::prev(p.end());
    std::vector<int> parts;
    for (int a : lead->first)
      if (a > 0)
        parts.push_back(a);
    adjrep::Partition lambda(parts);  // the leading exponent is weakly decreasing
    mpq_class c = lead->second;
    out[lambda] += c;
    p = add(p, schur(lambda, n_vars), -c);
  }
  return out;
}

inline std::map<adjrep::Partition, mpq_class> schur_coefficients(const adjrep::SymFunc& s)
{
  std::map<adjrep::Partition, mpq_class> out;
  for (const auto& [lambda, c] : s.terms())
    out[lambda] = c;
  return out;
}

// h_2 of the polynomial whose monomials all carry coefficient one: the sum
// of products of unordered pairs of monomials, repetition allowed.
inline Poly h2_of_monomials(const Poly& g)
{
  std::vector<std::vector<int>> monos;
  for (const auto& [e, c] : g)
    monos.push_back(e);
  Poly out;
  for (std::size_t i = 0; i < monos.size(); ++i)
    for (std::size_t j = i; j < monos.size(); ++j) {
      std::vector<int> e(monos[i].size());
      for (std::size_t k = 0; k < e.size(); ++k)
        e[k] = monos[i][k] + monos[j][k];
      add_to(out, e, 1);
    }
  return out;
}

} // namespace oracle
