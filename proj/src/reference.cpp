#include "adjrep/reference.hpp"

#include <algorithm>
#include <set>

#include "adjrep/kernels.hpp"

namespace adjrep::reference {

std::vector<LoopAugmentedForest> enumerate_forests(int n, bool with_loops, int cap)
{
  check_cap("enumerate_forests", n, cap);
  std::vector<LoopAugmentedForest> out;
  const std::uint64_t total = kernels::ipow(static_cast<std::uint64_t>(n + 1), n);
  for (std::uint64_t i = 0; i < total; ++i)
    if (auto parent = kernels::decode_parent_array(i, n))
      kernels::append_forests(*parent, with_loops, out);
  return out;
}

std::vector<PartialTransformation> enumerate_nilpotents(int n, int cap)
{
  check_cap("enumerate_nilpotents", n, cap);
  std::vector<PartialTransformation> out;
  const std::uint64_t total = kernels::ipow(static_cast<std::uint64_t>(n + 1), n);
  for (std::uint64_t i = 0; i < total; ++i) {
    PartialTransformation f = kernels::decode_partial_map(i, n);
    if (is_nilpotent(f))
      out.push_back(std::move(f));
  }
  return out;
}

std::vector<PartialTransformation> brute_force_orbit(const PartialTransformation& f,
                                                     int cap)
{
  check_cap("brute_force_orbit", f.degree(), cap);
  std::set<PartialTransformation> orbit;
  Permutation sigma = identity_permutation(f.degree());
  do {
    orbit.insert(conjugate(f, sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return {orbit.begin(), orbit.end()};
}

ClassFunction brute_force_character(const PartialTransformation& f, int cap)
{
  const auto orbit = reference::brute_force_orbit(f, cap);
  ClassFunction chi(f.degree());
  for (const auto& [mu, value] : chi.values()) {
    const Permutation rep = canonical_representative(mu);
    long fixed = std::count_if(orbit.begin(), orbit.end(), [&](const auto& g) {
      return conjugate(g, rep) == g;
    });
    chi.set(mu, Rational(fixed));
  }
  return chi;
}

ClassFunction trace_character(int n, SpaceKind kind, int cap)
{
  check_cap("trace_character", n, cap);
  const MatrixSpace space(n, kind);
  ClassFunction chi(n);
  for (const auto& [mu, value] : chi.values())
    chi.set(mu, Rational(kernels::trace_at(space, mu)));
  return chi;
}

VerifyReport verify(int n_max, int cap)
{
  kernels::check_verify_range(n_max, cap);
  VerifyReport report;
  for (int n = 2; n <= n_max; ++n)
    for (SpaceKind kind : kAllSpaces)
      report.records.push_back(kernels::verify_cell(n, kind, cap, &reference::trace_character));
  for (int n = 2; n <= n_max; ++n)
    report.additivity.emplace_back(n, kernels::additivity_holds(n, cap, &reference::trace_character));
  return report;
}

} // namespace adjrep::reference
