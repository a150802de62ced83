#include "adjrep/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace adjrep {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition::Partition(std::initializer_list<int> parts)
  : Partition(std::vector<int>(parts))
{}

Partition Partition::from_unsorted(std::vector<int> parts)
{
  if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 0; }))
    throw std::invalid_argument("partition parts must be nonnegative");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::row(int k)
{
  if (k < 0)
    throw std::invalid_argument("negative row length");
  return k == 0 ? Partition() : Partition(std::vector<int>{k});
}

Partition Partition::column(int k)
{
  if (k < 0)
    throw std::invalid_argument("negative column length");
  return Partition(std::vector<int>(static_cast<std::size_t>(k), 1));
}

std::vector<int> Partition::multiplicities() const
{
  std::vector<int> m(parts_.empty() ? 1 : parts_.front() + 1, 0);
  for (int p : parts_)
    ++m[p];
  return m;
}

Partition Partition::concatenated(const Partition& other) const
{
  std::vector<int> merged;
  merged.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(),
             other.parts_.end(), std::back_inserter(merged), std::greater<>());
  return Partition(std::move(merged));
}

Partition Partition::scaled(int k) const
{
  if (k <= 0)
    throw std::invalid_argument("scale factor must be positive");
  std::vector<int> scaled(parts_);
  for (int& p : scaled)
    p *= k;
  return Partition(std::move(scaled));
}

std::string Partition::to_csv() const
{
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0)
      out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::string Partition::to_string() const { return "(" + to_csv() + ")"; }

std::strong_ordering operator<=>(const Partition& a, const Partition& b)
{
  if (auto c = a.size_ <=> b.size_; c != 0)
    return c;
  // Reverse lexicographic: the partition with the larger leading part first.
  return std::lexicographical_compare_three_way(
    b.parts_.begin(), b.parts_.end(), a.parts_.begin(), a.parts_.end());
}

std::ostream& operator<<(std::ostream& os, const Partition& p)
{
  return os << p.to_string();
}

Partition parse_partition(std::string_view text)
{
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s += c;
  if (!s.empty() && (s.front() == '[' || s.front() == '(')) {
    char close = s.front() == '[' ? ']' : ')';
    if (s.size() < 2 || s.back() != close)
      throw std::invalid_argument("unbalanced brackets in partition '" +
                                  std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> parts;
  if (!s.empty()) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() ||
          !std::all_of(item.begin(), item.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("malformed partition '" + std::string(text) +
                                    "'");
      parts.push_back(std::stoi(item));
    }
    if (s.back() == ',')
      throw std::invalid_argument("malformed partition '" + std::string(text) +
                                  "'");
  }
  return Partition(std::move(parts));
}

namespace {

void partitions_into(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out)
{
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_into(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<Partition> generate_partitions(int n)
{
  if (n < 0)
    throw std::invalid_argument("generate_partitions: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_into(n, n, prefix, out);
  return out;
}

Partition conjugate(const Partition& lambda)
{
  std::vector<int> cols;
  if (!lambda.empty()) {
    cols.assign(static_cast<std::size_t>(lambda[0]), 0);
    for (int p : lambda.parts())
      for (int j = 0; j < p; ++j)
        ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

mpz_class factorial(int n)
{
  if (n < 0)
    throw std::invalid_argument("factorial of a negative number");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class binomial(int n, int k)
{
  if (k < 0 || n < 0 || k > n)
    return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

mpz_class z_of(const Partition& lambda)
{
  auto m = lambda.multiplicities();
  mpz_class z = 1;
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (m[i] == 0)
      continue;
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), i, static_cast<unsigned long>(m[i]));
    z *= power * factorial(m[i]);
  }
  return z;
}

mpz_class dim_irreducible(const Partition& lambda)
{
  auto cols = conjugate(lambda);
  mpz_class hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j)
      hooks *= (lambda[i] - j - 1) + (cols[j] - i - 1) + 1;
  return factorial(lambda.size()) / hooks;
}

} // namespace adjrep
