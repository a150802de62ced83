#include "adjrep/adjoint.hpp"

#include <chrono>
#include <cstdint>
#include <exception>

#include "adjrep/forests.hpp"
#include "adjrep/kernels.hpp"
#include "adjrep/permutation.hpp"

namespace adjrep {

std::string space_name(SpaceKind kind)
{
  switch (kind) {
  case SpaceKind::mat: return "mat";
  case SpaceKind::sym: return "sym";
  case SpaceKind::skew: return "skew";
  }
  return "?";
}

SpaceKind parse_space(const std::string& name)
{
  if (name == "mat")
    return SpaceKind::mat;
  if (name == "sym")
    return SpaceKind::sym;
  if (name == "skew")
    return SpaceKind::skew;
  throw std::invalid_argument("unknown matrix space '" + name + "'");
}

int space_dimension(int n, SpaceKind kind)
{
  switch (kind) {
  case SpaceKind::mat: return n * n;
  case SpaceKind::sym: return n * (n + 1) / 2;
  case SpaceKind::skew: return n * (n - 1) / 2;
  }
  return 0;
}

MatrixSpace::MatrixSpace(int n, SpaceKind kind) : n_(n), kind_(kind)
{
  if (n < 0)
    throw std::invalid_argument("MatrixSpace: negative size");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool keep = kind == SpaceKind::mat || (kind == SpaceKind::sym && i <= j) ||
                  (kind == SpaceKind::skew && i < j);
      if (keep)
        positions_.emplace_back(i, j);
    }
}

IntMatrix MatrixSpace::basis_element(int index) const
{
  auto [i, j] = positions_.at(static_cast<std::size_t>(index));
  const auto n = static_cast<std::size_t>(n_);
  IntMatrix e(n, std::vector<int>(n, 0));
  const auto ui = static_cast<std::size_t>(i);
  const auto uj = static_cast<std::size_t>(j);
  e[ui][uj] = 1;
  if (i != j) {
    if (kind_ == SpaceKind::sym)
      e[uj][ui] = 1;
    else if (kind_ == SpaceKind::skew)
      e[uj][ui] = -1;
  }
  return e;
}

int MatrixSpace::coordinate(const IntMatrix& x, int index) const
{
  auto [i, j] = positions_.at(static_cast<std::size_t>(index));
  return x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

// Closed forms -------------------------------------------------------------

namespace {

SymFunc schur_sum(std::initializer_list<std::pair<int, Partition>> terms)
{
  SymFunc f(Basis::schur);
  for (const auto& [c, lambda] : terms)
    f.add_term(lambda, c);
  return f;
}

void require_theorem_range(int n, const char* what)
{
  if (n < 2)
    throw std::domain_error(std::string(what) + ": n = " + std::to_string(n) +
                            " is outside the theorem range n >= 2");
}

} // namespace

SymFunc theorem_formula(int n, SpaceKind kind)
{
  require_theorem_range(n, "theorem_formula");
  switch (kind) {
  case SpaceKind::mat:
    if (n == 2)
      return schur_sum({{2, {2}}, {2, {1, 1}}});
    if (n == 3)
      return schur_sum({{2, {3}}, {3, {2, 1}}, {1, {1, 1, 1}}});
    return schur_sum({{2, {n}}, {3, {n - 1, 1}}, {1, {n - 2, 2}}, {1, {n - 2, 1, 1}}});
  case SpaceKind::sym:
    if (n == 2)
      return schur_sum({{2, {2}}, {1, {1, 1}}});
    if (n == 3)
      return schur_sum({{2, {3}}, {3, {2, 1}}});
    return schur_sum({{2, {n}}, {2, {n - 1, 1}}, {1, {n - 2, 2}}});
  case SpaceKind::skew:
    if (n == 2)
      return schur_sum({{1, {1, 1}}});
    if (n == 3)
      return schur_sum({{1, {1, 1, 1}}});
    return schur_sum({{1, {n - 1, 1}}, {1, {n - 2, 1, 1}}});
  }
  throw std::logic_error("unreachable space kind");
}

SymFunc orbit_formula(int n, SpaceKind kind)
{
  require_theorem_range(n, "orbit_formula");
  // E_{i,j}, i != j: a two-vertex chain and n-2 isolated roots.
  auto chain = LoopAugmentedForest({LoopAugmentedForest::kRoot, 0})
                 .disjoint_union(LoopAugmentedForest::isolated_roots(n - 2));
  // E_{i,i}: one looped root and n-1 isolated roots.
  auto looped = LoopAugmentedForest({LoopAugmentedForest::kRoot}, {0})
                  .disjoint_union(LoopAugmentedForest::isolated_roots(n - 1));
  SymFunc diagonal = odun_frobenius(looped);
  if (kind == SpaceKind::mat)
    return odun_frobenius(chain) + diagonal;
  // F_{i,j}: a transposition block and n-2 isolated roots.
  SymFunc sym = master_character(Partition{2}, LoopAugmentedForest::isolated_roots(n - 2)) +
                diagonal;
  if (kind == SpaceKind::sym)
    return sym;
  return odun_frobenius(chain) + diagonal - sym;
}

// Trace oracle -------------------------------------------------------------

long closed_trace(SpaceKind kind, const Partition& mu)
{
  auto m = mu.multiplicities();
  const long f = m.size() > 1 ? m[1] : 0;
  const long t = m.size() > 2 ? m[2] : 0;
  switch (kind) {
  case SpaceKind::mat: return f * f;
  case SpaceKind::sym: return f + f * (f - 1) / 2 + t;
  case SpaceKind::skew: return f * (f - 1) / 2 - t;
  }
  return 0;
}

namespace kernels {

// P X P^{-1} with P e_j = e_{sigma(j)}, by dense multiplication.
IntMatrix conjugate_matrix(const IntMatrix& x, const Permutation& sigma)
{
  const std::size_t n = sigma.size();
  IntMatrix p(n, std::vector<int>(n, 0));
  for (std::size_t j = 0; j < n; ++j)
    p[static_cast<std::size_t>(sigma[j])][j] = 1;
  auto product = [n](const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (a[i][k] != 0)
          for (std::size_t j = 0; j < n; ++j)
            c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  IntMatrix p_inv(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      p_inv[i][j] = p[j][i];
  return product(product(p, x), p_inv);
}

long trace_at(const MatrixSpace& space, const Partition& mu)
{
  const Permutation sigma = canonical_representative(mu);
  long trace = 0;
  for (int b = 0; b < space.dimension(); ++b)
    trace += space.coordinate(conjugate_matrix(space.basis_element(b), sigma), b);
  if (trace != closed_trace(space.kind(), mu))
    throw std::logic_error("trace_character: matrix trace disagrees with closed trace at " +
                           mu.to_string());
  return trace;
}

} // namespace kernels

ClassFunction trace_character(int n, SpaceKind kind, int cap)
{
  check_cap("trace_character", n, cap);
  const MatrixSpace space(n, kind);
  const auto classes = generate_partitions(n);
  std::vector<long> values(classes.size());
  std::vector<std::exception_ptr> errors(classes.size());
  const auto count = static_cast<std::int64_t>(classes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < count; ++c) {
    const auto uc = static_cast<std::size_t>(c);
    try {
      values[uc] = kernels::trace_at(space, classes[uc]);
    } catch (...) {
      errors[uc] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e)
      std::rethrow_exception(e);
  ClassFunction chi(n);
  for (std::size_t c = 0; c < classes.size(); ++c)
    chi.set(classes[c], Rational(values[c]));
  return chi;
}

// Verification --------------------------------------------------------------

namespace kernels {

VerifyRecord verify_cell(int n, SpaceKind kind, int cap, TraceFn trace)
{
  auto start = std::chrono::steady_clock::now();
  VerifyRecord r;
  r.n = n;
  r.kind = kind;
  r.formula = theorem_formula(n, kind);
  r.orbit = orbit_formula(n, kind);
  r.bruteforce = schur_expansion(decompose(trace(n, kind, cap)));
  r.match = r.formula == r.orbit && r.orbit == r.bruteforce;
  r.millis = std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
               .count();
  return r;
}

bool additivity_holds(int n, int cap, TraceFn trace)
{
  return trace(n, SpaceKind::mat, cap) ==
         trace(n, SpaceKind::sym, cap) + trace(n, SpaceKind::skew, cap);
}

void check_verify_range(int n_max, int cap)
{
  if (n_max < 2)
    throw std::invalid_argument("verify: n_max must be at least 2");
  check_cap("verify", n_max, cap);
}

} // namespace kernels

VerifyReport verify(int n_max, int cap)
{
  kernels::check_verify_range(n_max, cap);
  const int cells_per_n = 3;
  const int cell_count = (n_max - 1) * cells_per_n;
  std::vector<VerifyRecord> records(static_cast<std::size_t>(cell_count));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(cell_count));
#pragma omp parallel for schedule(dynamic)
  for (int cell = 0; cell < cell_count; ++cell) {
    const auto uc = static_cast<std::size_t>(cell);
    try {
      records[uc] = kernels::verify_cell(2 + cell / cells_per_n,
                                         kAllSpaces[cell % cells_per_n], cap,
                                         &trace_character);
    } catch (...) {
      errors[uc] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e)
      std::rethrow_exception(e);

  VerifyReport report;
  report.records = std::move(records);
  for (int n = 2; n <= n_max; ++n)
    report.additivity.emplace_back(n, kernels::additivity_holds(n, cap, &trace_character));
  return report;
}

bool VerifyReport::all_match() const
{
  for (const auto& r : records)
    if (!r.match)
      return false;
  for (const auto& [n, ok] : additivity)
    if (!ok)
      return false;
  return true;
}

std::vector<VerifyRecord> VerifyReport::failures() const
{
  std::vector<VerifyRecord> out;
  for (const auto& r : records)
    if (!r.match)
      out.push_back(r);
  return out;
}

VerificationMismatch::VerificationMismatch(const VerifyRecord& record)
  : std::runtime_error("mismatch at n = " + std::to_string(record.n) + ", " +
                       space_name(record.kind) + ": formula " +
                       record.formula.to_string() + ", orbit " +
                       record.orbit.to_string() + ", bruteforce " +
                       record.bruteforce.to_string()),
    record_(record)
{}

void require_match(const VerifyReport& report)
{
  for (const auto& r : report.records)
    if (!r.match)
      throw VerificationMismatch(r);
}

} // namespace adjrep
