#pragma once

#include <stdexcept>
#include <string>

namespace adjrep {

/// Largest n for exhaustive orbit and labeled-structure enumeration.
inline constexpr int kDefaultBruteForceCap = 7;
/// Largest n for the matrix-conjugation trace oracle.
inline constexpr int kDefaultTraceCap = 10;

class CapExceeded : public std::runtime_error {
public:
  CapExceeded(const std::string& what, int n, int cap)
    : std::runtime_error(what + ": n = " + std::to_string(n) +
                         " exceeds the cap " + std::to_string(cap)),
      n_(n), cap_(cap)
  {}
  int n() const { return n_; }
  int cap() const { return cap_; }

private:
  int n_;
  int cap_;
};

inline void check_cap(const char* what, int n, int cap)
{
  if (n > cap)
    throw CapExceeded(what, n, cap);
}

} // namespace adjrep
