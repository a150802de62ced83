#pragma once

// Single-threaded reference implementations of the parallel kernels. They are
// kept for testing (results must be identical) and for benchmarking.

#include <vector>

#include "adjrep/adjoint.hpp"
#include "adjrep/forests.hpp"

namespace adjrep::reference {

std::vector<LoopAugmentedForest> enumerate_forests(int n, bool with_loops,
                                                   int cap = kDefaultBruteForceCap);
std::vector<PartialTransformation> enumerate_nilpotents(int n,
                                                        int cap = kDefaultBruteForceCap);

/// Walks S_n with std::next_permutation and collects into a std::set.
std::vector<PartialTransformation> brute_force_orbit(const PartialTransformation& f,
                                                     int cap = kDefaultBruteForceCap);
ClassFunction brute_force_character(const PartialTransformation& f,
                                    int cap = kDefaultBruteForceCap);

ClassFunction trace_character(int n, SpaceKind kind, int cap = kDefaultTraceCap);

VerifyReport verify(int n_max, int cap = kDefaultTraceCap);

} // namespace adjrep::reference
