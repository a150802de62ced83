#pragma once

// Index decoding shared by the parallel kernels and their serial references.

#include <cstdint>
#include <optional>
#include <vector>

#include "adjrep/adjoint.hpp"
#include "adjrep/forests.hpp"

namespace adjrep::kernels {

std::uint64_t ipow(std::uint64_t base, int exp);

/// Base-(n+1) digits of `index` as a parent array (digit 0 = root). Empty
/// when a vertex is its own parent or the relation has a cycle.
std::optional<std::vector<int>> decode_parent_array(std::uint64_t index, int n);

/// Appends the forest, or every looped variant of it in root-subset order.
void append_forests(const std::vector<int>& parent, bool with_loops,
                    std::vector<LoopAugmentedForest>& out);

/// Base-(n+1) digits of `index` as a partial map (digit 0 = undefined).
PartialTransformation decode_partial_map(std::uint64_t index, int n);

/// P X P^{-1} for the permutation matrix P e_j = e_{sigma(j)}.
IntMatrix conjugate_matrix(const IntMatrix& x, const Permutation& sigma);

/// Trace of Ad on the space at the canonical representative of mu.
long trace_at(const MatrixSpace& space, const Partition& mu);

using TraceFn = ClassFunction (*)(int n, SpaceKind kind, int cap);

VerifyRecord verify_cell(int n, SpaceKind kind, int cap, TraceFn trace);
bool additivity_holds(int n, int cap, TraceFn trace);
void check_verify_range(int n_max, int cap);

} // namespace adjrep::kernels
