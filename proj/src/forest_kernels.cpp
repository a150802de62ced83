// OpenMP kernels for the exhaustive forest and orbit oracles. Each has a
// serial twin in reference.cpp; the parallel versions split an index range
// into chunks and concatenate chunk results in index order, so both produce
// identical sequences.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

#include "adjrep/forests.hpp"
#include "adjrep/kernels.hpp"

namespace adjrep {

namespace kernels {

std::uint64_t ipow(std::uint64_t base, int exp)
{
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i)
    r *= base;
  return r;
}

std::optional<std::vector<int>> decode_parent_array(std::uint64_t index, int n)
{
  std::vector<int> parent(static_cast<std::size_t>(n));
  const auto base = static_cast<std::uint64_t>(n + 1);
  for (int v = 0; v < n; ++v) {
    int digit = static_cast<int>(index % base);
    index /= base;
    if (digit - 1 == v)
      return std::nullopt;
    parent[static_cast<std::size_t>(v)] = digit == 0 ? LoopAugmentedForest::kRoot : digit - 1;
  }
  for (int v = 0; v < n; ++v) {
    int steps = 0;
    for (int u = v; u != LoopAugmentedForest::kRoot;
         u = parent[static_cast<std::size_t>(u)])
      if (++steps > n)
        return std::nullopt;
  }
  return parent;
}

void append_forests(const std::vector<int>& parent, bool with_loops,
                    std::vector<LoopAugmentedForest>& out)
{
  if (!with_loops) {
    out.emplace_back(parent);
    return;
  }
  std::vector<int> roots;
  for (std::size_t v = 0; v < parent.size(); ++v)
    if (parent[v] == LoopAugmentedForest::kRoot)
      roots.push_back(static_cast<int>(v));
  const std::uint64_t subsets = std::uint64_t{1} << roots.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<int> looped;
    for (std::size_t i = 0; i < roots.size(); ++i)
      if (mask & (std::uint64_t{1} << i))
        looped.push_back(roots[i]);
    out.emplace_back(parent, std::move(looped));
  }
}

PartialTransformation decode_partial_map(std::uint64_t index, int n)
{
  std::vector<int> image(static_cast<std::size_t>(n));
  const auto base = static_cast<std::uint64_t>(n + 1);
  for (int v = 0; v < n; ++v) {
    int digit = static_cast<int>(index % base);
    index /= base;
    image[static_cast<std::size_t>(v)] =
      digit == 0 ? PartialTransformation::kUndefined : digit - 1;
  }
  return PartialTransformation(std::move(image));
}

namespace {

constexpr std::uint64_t kChunks = 512;

template <typename T, typename Fill>
std::vector<T> chunked(std::uint64_t total, Fill fill)
{
  const std::uint64_t chunks = std::min<std::uint64_t>(kChunks, std::max<std::uint64_t>(total, 1));
  std::vector<std::vector<T>> parts(chunks);
  const auto chunk_count = static_cast<std::int64_t>(chunks);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < chunk_count; ++c) {
    const auto cu = static_cast<std::uint64_t>(c);
    const std::uint64_t begin = total * cu / chunks;
    const std::uint64_t end = total * (cu + 1) / chunks;
    fill(begin, end, parts[cu]);
  }
  std::vector<T> out;
  for (auto& p : parts)
    std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

} // namespace

} // namespace kernels

std::vector<LoopAugmentedForest> enumerate_forests(int n, bool with_loops, int cap)
{
  check_cap("enumerate_forests", n, cap);
  if (n < 0)
    throw std::invalid_argument("enumerate_forests: negative n");
  const std::uint64_t total = kernels::ipow(static_cast<std::uint64_t>(n + 1), n);
  return kernels::chunked<LoopAugmentedForest>(
    total, [&](std::uint64_t begin, std::uint64_t end,
               std::vector<LoopAugmentedForest>& out) {
      for (std::uint64_t i = begin; i < end; ++i)
        if (auto parent = kernels::decode_parent_array(i, n))
          kernels::append_forests(*parent, with_loops, out);
    });
}

std::vector<PartialTransformation> enumerate_nilpotents(int n, int cap)
{
  check_cap("enumerate_nilpotents", n, cap);
  if (n < 0)
    throw std::invalid_argument("enumerate_nilpotents: negative n");
  const std::uint64_t total = kernels::ipow(static_cast<std::uint64_t>(n + 1), n);
  return kernels::chunked<PartialTransformation>(
    total, [&](std::uint64_t begin, std::uint64_t end,
               std::vector<PartialTransformation>& out) {
      for (std::uint64_t i = begin; i < end; ++i) {
        PartialTransformation f = kernels::decode_partial_map(i, n);
        if (is_nilpotent(f))
          out.push_back(std::move(f));
      }
    });
}

std::vector<PartialTransformation> brute_force_orbit(const PartialTransformation& f,
                                                     int cap)
{
  const int n = f.degree();
  check_cap("brute_force_orbit", n, cap);
  auto orbit = kernels::chunked<PartialTransformation>(
    factorial_u64(n), [&](std::uint64_t begin, std::uint64_t end,
                          std::vector<PartialTransformation>& out) {
      for (std::uint64_t i = begin; i < end; ++i)
        out.push_back(conjugate(f, unrank_permutation(i, n)));
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    });
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

ClassFunction brute_force_character(const PartialTransformation& f, int cap)
{
  const int n = f.degree();
  const auto orbit = brute_force_orbit(f, cap);
  const auto classes = generate_partitions(n);
  std::vector<Permutation> reps;
  for (const auto& mu : classes)
    reps.push_back(canonical_representative(mu));

  std::vector<long> fixed(classes.size(), 0);
  const auto orbit_size = static_cast<std::int64_t>(orbit.size());
#pragma omp parallel
  {
    std::vector<long> local(classes.size(), 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < orbit_size; ++i) {
      const auto& g = orbit[static_cast<std::size_t>(i)];
      for (std::size_t c = 0; c < reps.size(); ++c)
        if (conjugate(g, reps[c]) == g)
          ++local[c];
    }
#pragma omp critical
    for (std::size_t c = 0; c < fixed.size(); ++c)
      fixed[c] += local[c];
  }

  ClassFunction chi(n);
  for (std::size_t c = 0; c < classes.size(); ++c)
    chi.set(classes[c], Rational(fixed[c]));
  return chi;
}

SymFunc brute_force_odun(const PartialTransformation& f, int cap)
{
  return schur_expansion(decompose(brute_force_character(f, cap)));
}

} // namespace adjrep
