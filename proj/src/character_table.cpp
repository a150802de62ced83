#include "adjrep/character_table.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace adjrep {

namespace {

class CharacterMemo {
public:
  bool find(const Partition& lambda, const Partition& mu, Integer& out) const
  {
    std::shared_lock lock(mutex_);
    auto it = table_.find(Key{lambda, mu});
    if (it == table_.end())
      return false;
    out = it->second;
    return true;
  }

  void insert(const Partition& lambda, const Partition& mu, const Integer& v)
  {
    std::unique_lock lock(mutex_);
    table_.try_emplace(Key{lambda, mu}, v);
  }

  std::size_t size() const
  {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

private:
  using Key = std::pair<Partition, Partition>;
  mutable std::shared_mutex mutex_;
  std::map<Key, Integer> table_;
};

CharacterMemo& memo()
{
  static CharacterMemo instance;
  return instance;
}

// First-column hook lengths (beta numbers) of lambda padded to `len` rows.
std::vector<int> beta_set(const Partition& lambda, int len)
{
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i)
    beta[static_cast<std::size_t>(i)] =
      (i < lambda.length() ? lambda[static_cast<std::size_t>(i)] : 0) + (len - 1 - i);
  return beta;
}

Partition from_beta_set(std::vector<int> beta)
{
  std::sort(beta.begin(), beta.end(), std::greater<>());
  int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (part > 0)
      parts.push_back(part);
  }
  return Partition(std::move(parts));
}

Integer murnaghan_nakayama(const Partition& lambda, const Partition& mu)
{
  if (mu.empty())
    return 1;
  Integer cached;
  if (memo().find(lambda, mu, cached))
    return cached;

  int r = mu[0];
  Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));

  // Removing a border strip of length r moves one bead r places down the
  // abacus; its height is the number of beads jumped over.
  std::vector<int> beta = beta_set(lambda, lambda.length());
  Integer value = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end())
      continue;
    int height = 0;
    for (int b : beta)
      if (b > target && b < beta[i])
        ++height;
    std::vector<int> moved = beta;
    moved[i] = target;
    Integer sub = murnaghan_nakayama(from_beta_set(std::move(moved)), rest);
    if (height % 2 == 0)
      value += sub;
    else
      value -= sub;
  }
  memo().insert(lambda, mu, value);
  return value;
}

} // namespace

Integer character_value(const Partition& lambda, const Partition& mu)
{
  if (lambda.size() != mu.size())
    throw std::invalid_argument("character_value: |lambda| != |mu|");
  return murnaghan_nakayama(lambda, mu);
}

std::size_t character_cache_size() { return memo().size(); }

} // namespace adjrep
