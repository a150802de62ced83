#pragma once

#include <cstdint>
#include <vector>

#include "adjrep/partition.hpp"

namespace adjrep {

/// A permutation of {0, ..., n-1} in one-line notation: sigma[i] is the image
/// of i.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);

Permutation inverse(const Permutation& sigma);

/// (a * b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);

Partition cycle_type(const Permutation& sigma);

/// Class representative with cycles on consecutive integers, longest cycle
/// first: (3,1) gives (0 1 2)(3).
Permutation canonical_representative(const Partition& type);

/// Number of fixed points.
int fixed_points(const Permutation& sigma);

/// The permutation of rank `index` in lexicographic order (Lehmer code).
/// Valid for index < n!; n is limited to 20.
Permutation unrank_permutation(std::uint64_t index, int n);

/// n! as a 64-bit integer; throws std::overflow_error for n > 20.
std::uint64_t factorial_u64(int n);

} // namespace adjrep
