#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "adjrep/characters.hpp"
#include "adjrep/config.hpp"
#include "adjrep/partition.hpp"
#include "adjrep/permutation.hpp"
#include "adjrep/symfunc.hpp"

namespace adjrep {

/// Square 0/1 matrix, row-major.
using BoolMatrix = std::vector<std::vector<int>>;

/// A partial self-map of {0, ..., n-1}. The empty map is allowed.
///
/// Matrix convention: M[i][j] = 1 iff f(i) = j, so there is at most one 1 per
/// row.
class PartialTransformation {
public:
  static constexpr int kUndefined = -1;

  /// The empty (zero) map on n points.
  explicit PartialTransformation(int n = 0);
  /// image[i] is f(i) or kUndefined. Throws std::invalid_argument on values
  /// out of range.
  explicit PartialTransformation(std::vector<int> image);

  int degree() const { return static_cast<int>(image_.size()); }
  const std::vector<int>& images() const { return image_; }
  bool defined_at(int i) const { return image_[static_cast<std::size_t>(i)] != kUndefined; }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const PartialTransformation&,
                         const PartialTransformation&) = default;
  friend auto operator<=>(const PartialTransformation&,
                          const PartialTransformation&) = default;

private:
  std::vector<int> image_;
};

BoolMatrix to_matrix(const PartialTransformation& f);
/// Throws std::invalid_argument if M is not square, not 0/1, or has a row
/// with two 1s.
PartialTransformation from_matrix(const BoolMatrix& m);

/// sigma f sigma^{-1}: the image of sigma(i) is sigma(f(i)).
PartialTransformation conjugate(const PartialTransformation& f,
                                const Permutation& sigma);

/// Some power of the extension by zero sends every point to 0.
bool is_nilpotent(const PartialTransformation& f);

/// A rooted forest on {0, ..., n-1} with an optional loop on some roots.
class LoopAugmentedForest {
public:
  static constexpr int kRoot = -1;

  LoopAugmentedForest() = default;
  /// parent[v] is the parent of v or kRoot. Throws std::invalid_argument on a
  /// cycle, an out-of-range parent, or a loop on a non-root.
  explicit LoopAugmentedForest(std::vector<int> parent,
                               std::vector<int> looped_roots = {});

  static LoopAugmentedForest isolated_roots(int n);

  int size() const { return static_cast<int>(parent_.size()); }
  const std::vector<int>& parents() const { return parent_; }
  bool is_root(int v) const { return parent_[static_cast<std::size_t>(v)] == kRoot; }
  bool has_loop(int v) const { return loop_[static_cast<std::size_t>(v)]; }
  bool has_loops() const;
  std::vector<int> roots() const;
  /// Looped roots in increasing order.
  std::vector<int> loops() const;
  std::vector<std::vector<int>> children() const;

  /// Vertices of `other` are appended after ours.
  LoopAugmentedForest disjoint_union(const LoopAugmentedForest& other) const;

  /// f(v) = parent(v); f(r) = r for a looped root; undefined otherwise.
  PartialTransformation to_partial_transformation() const;

  friend bool operator==(const LoopAugmentedForest&,
                         const LoopAugmentedForest&) = default;

private:
  std::vector<int> parent_;
  std::vector<bool> loop_;
};

/// Forest of a nilpotent map (edges i -> f(i)). Throws std::invalid_argument
/// if f is not nilpotent.
LoopAugmentedForest forest_of(const PartialTransformation& f);

/// Like forest_of but also accepts fixed points, which become looped roots.
/// Throws std::invalid_argument when the functional graph has a longer cycle.
LoopAugmentedForest loop_forest_of(const PartialTransformation& f);

/// Canonical code of the decorated rooted tree at `root`: a leading 'L' or
/// 'N' for the loop flag, then the sorted codes of the children in
/// parentheses. Equal codes iff isomorphic trees.
using TreeCode = std::string;
TreeCode tree_code(const LoopAugmentedForest& forest, int root);

/// Sorted concatenation of the tree codes; an isomorphism invariant of the
/// whole forest.
std::string forest_code(const LoopAugmentedForest& forest);

/// Frobenius character of the conjugation orbit of the forest, in the Schur
/// basis. Components of equal type t with multiplicity m contribute
/// s_m[G_t]; a tree contributes s_1 times the character of the forest under
/// its root.
SymFunc odun_frobenius(const LoopAugmentedForest& forest);

/// The same character as an unexpanded product, e.g.
/// "s[1]^2*s[4]*s[2][s[1]^5*s[2]]". Parses back through parse_expression.
std::string odun_factored(const LoopAugmentedForest& forest);

/// Frobenius character of S_k acting by conjugation on its class of cycle
/// type nu. The centralizer is a product of wreath products C_i wr S_{m_i},
/// so this is prod_i s_{m_i}[(1/i) sum_{d | i} phi(d) p_d^{i/d}].
SymFunc class_orbit_frobenius(const Partition& nu);

/// Odun of the block-diagonal map (sigma, tau) with sigma of cycle type nu and
/// tau nilpotent: class_orbit_frobenius(nu) times odun_frobenius(tau).
/// Throws std::invalid_argument if tau has loops.
SymFunc master_character(const Partition& nu, const LoopAugmentedForest& tau);

/// A permutation block of cycle type `cycle_type` on the first k points and
/// a nilpotent block on the rest.
struct BlockForm {
  Partition cycle_type;
  LoopAugmentedForest nilpotent;

  int degree() const { return cycle_type.size() + nilpotent.size(); }
  PartialTransformation to_partial_transformation() const;
};

/// Order of the automorphism group of the (decorated) forest.
Integer forest_automorphisms(const LoopAugmentedForest& forest);

/// |Stab(f)| = z_nu * |Stab(tau)|.
Integer stabilizer_order(const BlockForm& f);

/// Labeled forests on n vertices with k roots: C(n-1, k-1) n^{n-k}.
/// Throws std::domain_error unless 1 <= k <= n.
Integer count_forests(int n, int k);
/// 2^k C(n-1, k-1) n^{n-k}.
Integer count_loop_forests(int n, int k);
/// (n+1)^{n-1}.
Integer count_nilpotents(int n);

enum class LabeledKind { forests, loop_forests, nilpotents };

/// Every labeled forest (optionally with every choice of looped roots), in a
/// fixed order. Throws CapExceeded when n > cap.
std::vector<LoopAugmentedForest> enumerate_forests(int n, bool with_loops,
                                                   int cap = kDefaultBruteForceCap);

/// Every nilpotent partial transformation of {0..n-1}, found by testing all
/// (n+1)^n partial maps.
std::vector<PartialTransformation> enumerate_nilpotents(int n,
                                                        int cap = kDefaultBruteForceCap);

std::size_t count_labeled(int n, LabeledKind kind, int cap = kDefaultBruteForceCap);

/// One representative per isomorphism class, ordered by forest_code.
std::vector<LoopAugmentedForest> forest_isomorphism_classes(
  int n, bool with_loops, int cap = kDefaultBruteForceCap);

/// The conjugation orbit of f under all of S_n, sorted.
std::vector<PartialTransformation> brute_force_orbit(
  const PartialTransformation& f, int cap = kDefaultBruteForceCap);

/// Permutation character of the orbit: the value at mu counts orbit elements
/// fixed by the canonical representative of mu.
ClassFunction brute_force_character(const PartialTransformation& f,
                                    int cap = kDefaultBruteForceCap);

/// Schur expansion of brute_force_character.
SymFunc brute_force_odun(const PartialTransformation& f,
                         int cap = kDefaultBruteForceCap);

} // namespace adjrep
