#pragma once

#include <cstddef>

#include "adjrep/partition.hpp"
#include "adjrep/rational.hpp"

namespace adjrep {

/// chi^lambda(mu), the irreducible character of S_n indexed by lambda at the
/// class of cycle type mu, by the Murnaghan-Nakayama rule.
///
/// Values are memoized process-wide. The table is append-only and every entry
/// is a pure function of its key, so concurrent callers may race to insert
/// the same value without harm. Throws std::invalid_argument when
/// |lambda| != |mu|.
Integer character_value(const Partition& lambda, const Partition& mu);

/// Number of memoized (lambda, mu) entries.
std::size_t character_cache_size();

} // namespace adjrep
