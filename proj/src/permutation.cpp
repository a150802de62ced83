#include "adjrep/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace adjrep {

Permutation identity_permutation(int n)
{
  Permutation id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  return id;
}

Permutation inverse(const Permutation& sigma)
{
  Permutation inv(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i)
    inv[static_cast<std::size_t>(sigma[i])] = static_cast<int>(i);
  return inv;
}

Permutation compose(const Permutation& a, const Permutation& b)
{
  if (a.size() != b.size())
    throw std::invalid_argument("compose: degree mismatch");
  Permutation ab(a.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    ab[i] = a[static_cast<std::size_t>(b[i])];
  return ab;
}

Partition cycle_type(const Permutation& sigma)
{
  std::vector<bool> seen(sigma.size(), false);
  std::vector<int> lengths;
  for (std::size_t start = 0; start < sigma.size(); ++start) {
    if (seen[start])
      continue;
    int len = 0;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(sigma[i])) {
      seen[i] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::from_unsorted(std::move(lengths));
}

Permutation canonical_representative(const Partition& type)
{
  Permutation sigma(static_cast<std::size_t>(type.size()));
  int base = 0;
  for (int len : type.parts()) {
    for (int j = 0; j < len; ++j)
      sigma[static_cast<std::size_t>(base + j)] = base + (j + 1) % len;
    base += len;
  }
  return sigma;
}

int fixed_points(const Permutation& sigma)
{
  int count = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    if (sigma[i] == static_cast<int>(i))
      ++count;
  return count;
}

std::uint64_t factorial_u64(int n)
{
  if (n < 0 || n > 20)
    throw std::overflow_error("factorial_u64: n out of range");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i)
    f *= static_cast<std::uint64_t>(i);
  return f;
}

Permutation unrank_permutation(std::uint64_t index, int n)
{
  std::vector<int> pool = identity_permutation(n);
  Permutation sigma;
  sigma.reserve(static_cast<std::size_t>(n));
  for (int k = n; k >= 1; --k) {
    std::uint64_t block = factorial_u64(k - 1);
    auto pick = static_cast<std::size_t>(index / block);
    index %= block;
    sigma.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return sigma;
}

} // namespace adjrep
