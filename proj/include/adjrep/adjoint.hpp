#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "adjrep/characters.hpp"
#include "adjrep/config.hpp"
#include "adjrep/symfunc.hpp"

namespace adjrep {

enum class SpaceKind { mat, sym, skew };

std::string space_name(SpaceKind kind);
/// Throws std::invalid_argument for anything but "mat", "sym", "skew".
SpaceKind parse_space(const std::string& name);

inline constexpr SpaceKind kAllSpaces[] = {SpaceKind::mat, SpaceKind::sym,
                                           SpaceKind::skew};

using IntMatrix = std::vector<std::vector<int>>;

/// Mat_n, Sym_n or Skew_n with its distinguished basis:
///   mat   E_{i,j} for all i, j
///   sym   E_{i,i} and F_{i,j} = E_{i,j} + E_{j,i}, i < j
///   skew  K_{i,j} = E_{i,j} - E_{j,i}, i < j
/// Each basis element is determined by its entry (i, j) with i <= j (or any
/// (i, j) for mat), and that entry of a matrix in the space is its
/// coordinate.
class MatrixSpace {
public:
  MatrixSpace(int n, SpaceKind kind);

  int n() const { return n_; }
  SpaceKind kind() const { return kind_; }
  int dimension() const { return static_cast<int>(positions_.size()); }

  IntMatrix basis_element(int index) const;
  int coordinate(const IntMatrix& x, int index) const;

private:
  int n_;
  SpaceKind kind_;
  std::vector<std::pair<int, int>> positions_;
};

/// n^2, n(n+1)/2, n(n-1)/2.
int space_dimension(int n, SpaceKind kind);

/// The closed forms for n >= 2, transcribed case by case (n = 2, n = 3,
/// n >= 4). Throws std::domain_error for n < 2.
SymFunc theorem_formula(int n, SpaceKind kind);

/// The character assembled from orbit building blocks:
///   mat   odun(E_{i,j}) + odun(E_{i,i}) = s_1^2 s_{n-2} + s_1 s_{n-1}
///   sym   odun(F_{i,j}) + odun(E_{i,i}) = s_2 s_{n-2} + s_1 s_{n-1}
///   skew  mat - sym
/// Throws std::domain_error for n < 2.
SymFunc orbit_formula(int n, SpaceKind kind);

/// Character of Ad_sigma(X) = sigma X sigma^{-1} on the space, computed by
/// conjugating every basis matrix by the permutation matrix of a canonical
/// class representative and reading off the diagonal coefficient. Each value
/// is cross-checked against closed_trace. Throws CapExceeded when n > cap.
ClassFunction trace_character(int n, SpaceKind kind, int cap = kDefaultTraceCap);

/// Counting shortcut, with f fixed points and t 2-cycles in mu:
///   mat f^2; sym f + C(f,2) + t; skew C(f,2) - t.
long closed_trace(SpaceKind kind, const Partition& mu);

struct VerifyRecord {
  int n = 0;
  SpaceKind kind = SpaceKind::mat;
  SymFunc formula{Basis::schur};
  SymFunc orbit{Basis::schur};
  SymFunc bruteforce{Basis::schur};
  bool match = false;
  double millis = 0.0;
};

struct VerifyReport {
  std::vector<VerifyRecord> records;
  /// Per n, whether the mat character equals sym + skew classwise.
  std::vector<std::pair<int, bool>> additivity;

  bool all_match() const;
  std::vector<VerifyRecord> failures() const;
};

/// Every (n, kind) for 2 <= n <= n_max, evaluated cell by cell in parallel.
/// Throws std::invalid_argument for n_max < 2 and CapExceeded above the cap.
VerifyReport verify(int n_max, int cap = kDefaultTraceCap);

class VerificationMismatch : public std::runtime_error {
public:
  explicit VerificationMismatch(const VerifyRecord& record);
  const VerifyRecord& record() const { return record_; }

private:
  VerifyRecord record_;
};

/// Throws VerificationMismatch for the first failing record.
void require_match(const VerifyReport& report);

} // namespace adjrep
