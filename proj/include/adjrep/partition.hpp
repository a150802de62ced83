#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace adjrep {

/// An integer partition, stored weakly decreasing with no zero parts.
///
/// Partitions are totally ordered graded reverse-lexicographically: first by
/// size, then larger leading parts first. So (3) < (2,1) < (1,1,1), and every
/// partition of 2 precedes every partition of 3. All term maps in the library
/// iterate in this order, which makes printed output reproducible.
class Partition {
public:
  Partition() = default;

  /// Throws std::invalid_argument unless `parts` is weakly decreasing and
  /// positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  /// Sorts and drops zeros; accepts any sequence of nonnegative integers.
  static Partition from_unsorted(std::vector<int> parts);

  /// The one-row partition (k); empty when k == 0.
  static Partition row(int k);
  /// The one-column partition (1^k).
  static Partition column(int k);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& as_vector() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Multiplicity of each part: result[i] = number of parts equal to i
  /// (index 0 unused). Length is largest part + 1.
  std::vector<int> multiplicities() const;

  /// Union of the two multisets of parts.
  Partition concatenated(const Partition& other) const;

  /// Every part multiplied by k.
  Partition scaled(int k) const;

  /// "(4,2,1)"; the empty partition prints as "()".
  std::string to_string() const;
  /// "4,2,1"; empty string for the empty partition.
  std::string to_csv() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b);

private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Parses "4,2,1", "[4,2,1]" or "(4,2,1)". Empty brackets give the empty
/// partition. Throws std::invalid_argument on malformed input.
Partition parse_partition(std::string_view text);

/// All partitions of n in reverse lexicographic order, e.g. n = 3 gives
/// (3), (2,1), (1,1,1). n = 0 gives the single empty partition.
std::vector<Partition> generate_partitions(int n);

Partition conjugate(const Partition& lambda);

/// Centralizer order z = prod_i i^{m_i} m_i! of a permutation of this cycle
/// type; the class has n!/z elements.
mpz_class z_of(const Partition& lambda);

/// Hook length formula.
mpz_class dim_irreducible(const Partition& lambda);

mpz_class factorial(int n);
mpz_class binomial(int n, int k);

} // namespace adjrep
