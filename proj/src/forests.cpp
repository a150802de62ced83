#include "adjrep/forests.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace adjrep {

// PartialTransformation ---------------------------------------------------

PartialTransformation::PartialTransformation(int n)
  : image_(static_cast<std::size_t>(n), kUndefined)
{
  if (n < 0)
    throw std::invalid_argument("PartialTransformation: negative degree");
}

PartialTransformation::PartialTransformation(std::vector<int> image)
  : image_(std::move(image))
{
  const int n = degree();
  for (int v : image_)
    if (v != kUndefined && (v < 0 || v >= n))
      throw std::invalid_argument("PartialTransformation: image " +
                                  std::to_string(v) + " out of range");
}

BoolMatrix to_matrix(const PartialTransformation& f)
{
  const auto n = static_cast<std::size_t>(f.degree());
  BoolMatrix m(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    if (f.defined_at(static_cast<int>(i)))
      m[i][static_cast<std::size_t>(f(static_cast<int>(i)))] = 1;
  return m;
}

PartialTransformation from_matrix(const BoolMatrix& m)
{
  const std::size_t n = m.size();
  std::vector<int> image(n, PartialTransformation::kUndefined);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n)
      throw std::invalid_argument("from_matrix: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] != 0 && m[i][j] != 1)
        throw std::invalid_argument("from_matrix: entries must be 0 or 1");
      if (m[i][j] == 1) {
        if (image[i] != PartialTransformation::kUndefined)
          throw std::invalid_argument("from_matrix: row " + std::to_string(i + 1) +
                                      " has more than one 1");
        image[i] = static_cast<int>(j);
      }
    }
  }
  return PartialTransformation(std::move(image));
}

PartialTransformation conjugate(const PartialTransformation& f,
                                const Permutation& sigma)
{
  if (static_cast<int>(sigma.size()) != f.degree())
    throw std::invalid_argument("conjugate: degree mismatch");
  std::vector<int> image(sigma.size(), PartialTransformation::kUndefined);
  for (std::size_t i = 0; i < sigma.size(); ++i)
    if (f.defined_at(static_cast<int>(i)))
      image[static_cast<std::size_t>(sigma[i])] =
        sigma[static_cast<std::size_t>(f(static_cast<int>(i)))];
  return PartialTransformation(std::move(image));
}

namespace {

// Total map on {0..n} with n playing the role of the absorbing zero.
std::vector<int> extend_by_zero(const PartialTransformation& f)
{
  const int n = f.degree();
  std::vector<int> total(static_cast<std::size_t>(n) + 1, n);
  for (int i = 0; i < n; ++i)
    if (f.defined_at(i))
      total[static_cast<std::size_t>(i)] = f(i);
  return total;
}

} // namespace

bool is_nilpotent(const PartialTransformation& f)
{
  const int n = f.degree();
  std::vector<int> total = extend_by_zero(f);
  std::vector<int> power = total;
  // power = total^k; nilpotent iff total^n is the zero map.
  for (int k = 1; k < n; ++k)
    for (auto& v : power)
      v = total[static_cast<std::size_t>(v)];
  return std::all_of(power.begin(), power.end(), [n](int v) { return v == n; });
}

// LoopAugmentedForest -----------------------------------------------------

LoopAugmentedForest::LoopAugmentedForest(std::vector<int> parent,
                                         std::vector<int> looped_roots)
  : parent_(std::move(parent)), loop_(parent_.size(), false)
{
  const int n = size();
  for (int v = 0; v < n; ++v) {
    int p = parent_[static_cast<std::size_t>(v)];
    if (p != kRoot && (p < 0 || p >= n || p == v))
      throw std::invalid_argument("LoopAugmentedForest: bad parent of vertex " +
                                  std::to_string(v + 1));
  }
  for (int v = 0; v < n; ++v) {
    int steps = 0;
    for (int u = v; u != kRoot; u = parent_[static_cast<std::size_t>(u)])
      if (++steps > n)
        throw std::invalid_argument("LoopAugmentedForest: parent relation has a cycle");
  }
  for (int r : looped_roots) {
    if (r < 0 || r >= n)
      throw std::invalid_argument("LoopAugmentedForest: loop vertex out of range");
    if (parent_[static_cast<std::size_t>(r)] != kRoot)
      throw std::invalid_argument("LoopAugmentedForest: loop on non-root vertex " +
                                  std::to_string(r + 1));
    if (loop_[static_cast<std::size_t>(r)])
      throw std::invalid_argument("LoopAugmentedForest: two loops on one root");
    loop_[static_cast<std::size_t>(r)] = true;
  }
}

LoopAugmentedForest LoopAugmentedForest::isolated_roots(int n)
{
  return LoopAugmentedForest(std::vector<int>(static_cast<std::size_t>(n), kRoot));
}

bool LoopAugmentedForest::has_loops() const
{
  return std::find(loop_.begin(), loop_.end(), true) != loop_.end();
}

std::vector<int> LoopAugmentedForest::roots() const
{
  std::vector<int> r;
  for (int v = 0; v < size(); ++v)
    if (is_root(v))
      r.push_back(v);
  return r;
}

std::vector<int> LoopAugmentedForest::loops() const
{
  std::vector<int> r;
  for (int v = 0; v < size(); ++v)
    if (has_loop(v))
      r.push_back(v);
  return r;
}

std::vector<std::vector<int>> LoopAugmentedForest::children() const
{
  std::vector<std::vector<int>> c(parent_.size());
  for (int v = 0; v < size(); ++v)
    if (!is_root(v))
      c[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])].push_back(v);
  return c;
}

LoopAugmentedForest LoopAugmentedForest::disjoint_union(
  const LoopAugmentedForest& other) const
{
  std::vector<int> parent = parent_;
  const int shift = size();
  for (int p : other.parent_)
    parent.push_back(p == kRoot ? kRoot : p + shift);
  std::vector<int> looped = loops();
  for (int r : other.loops())
    looped.push_back(r + shift);
  return LoopAugmentedForest(std::move(parent), std::move(looped));
}

PartialTransformation LoopAugmentedForest::to_partial_transformation() const
{
  std::vector<int> image(parent_.size(), PartialTransformation::kUndefined);
  for (int v = 0; v < size(); ++v) {
    if (!is_root(v))
      image[static_cast<std::size_t>(v)] = parent_[static_cast<std::size_t>(v)];
    else if (has_loop(v))
      image[static_cast<std::size_t>(v)] = v;
  }
  return PartialTransformation(std::move(image));
}

LoopAugmentedForest loop_forest_of(const PartialTransformation& f)
{
  std::vector<int> parent(static_cast<std::size_t>(f.degree()),
                          LoopAugmentedForest::kRoot);
  std::vector<int> looped;
  for (int v = 0; v < f.degree(); ++v) {
    if (!f.defined_at(v))
      continue;
    if (f(v) == v)
      looped.push_back(v);
    else
      parent[static_cast<std::size_t>(v)] = f(v);
  }
  try {
    return LoopAugmentedForest(std::move(parent), std::move(looped));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(
      "partial transformation is not a loop-augmented forest");
  }
}

LoopAugmentedForest forest_of(const PartialTransformation& f)
{
  if (!is_nilpotent(f))
    throw std::invalid_argument("forest_of: partial transformation is not nilpotent");
  return loop_forest_of(f);
}

// Tree codes --------------------------------------------------------------

namespace {

class TreeCoder {
public:
  explicit TreeCoder(const LoopAugmentedForest& forest)
    : forest_(forest), children_(forest.children()),
      codes_(static_cast<std::size_t>(forest.size()))
  {}

  const TreeCode& code(int v)
  {
    auto& slot = codes_[static_cast<std::size_t>(v)];
    if (!slot.empty())
      return slot;
    std::vector<TreeCode> sub;
    for (int c : children_[static_cast<std::size_t>(v)])
      sub.push_back(code(c));
    std::sort(sub.begin(), sub.end());
    TreeCode out(1, forest_.has_loop(v) ? 'L' : 'N');
    out += '(';
    for (const auto& s : sub)
      out += s;
    out += ')';
    slot = std::move(out);
    return slot;
  }

  const std::vector<int>& children(int v) const
  {
    return children_[static_cast<std::size_t>(v)];
  }

  /// Components grouped by type: code -> (representative, multiplicity).
  std::map<TreeCode, std::pair<int, int>> group(const std::vector<int>& roots)
  {
    std::map<TreeCode, std::pair<int, int>> types;
    for (int r : roots) {
      auto [it, inserted] = types.try_emplace(code(r), r, 0);
      ++it->second.second;
    }
    return types;
  }

private:
  const LoopAugmentedForest& forest_;
  std::vector<std::vector<int>> children_;
  std::vector<TreeCode> codes_;
};

// Unexpanded product of s[k] factors and plethysm factors.
struct Factored {
  std::map<int, int> simple;
  std::map<std::string, int> compound;

  void merge(const Factored& other)
  {
    for (const auto& [k, e] : other.simple)
      simple[k] += e;
    for (const auto& [s, e] : other.compound)
      compound[s] += e;
  }

  bool is_single_vertex() const
  {
    return compound.empty() && simple.size() == 1 &&
           simple.begin()->first == 1 && simple.begin()->second == 1;
  }

  std::string render() const
  {
    std::string out;
    auto emit = [&out](const std::string& base, int e) {
      if (!out.empty())
        out += '*';
      out += base;
      if (e != 1)
        out += "^" + std::to_string(e);
    };
    for (const auto& [k, e] : simple)
      emit("s[" + std::to_string(k) + "]", e);
    for (const auto& [s, e] : compound)
      emit(s, e);
    return out.empty() ? "1" : out;
  }
};

class OdunBuilder {
public:
  explicit OdunBuilder(const LoopAugmentedForest& forest) : coder_(forest) {}

  // Both results are in the powersum basis.
  SymFunc forest(const std::vector<int>& roots)
  {
    SymFunc product = SymFunc::constant(Basis::powersum, 1);
    for (const auto& [code, entry] : coder_.group(roots)) {
      auto [rep, m] = entry;
      SymFunc outer = to_basis(SymFunc::generator(Basis::schur, Partition::row(m)),
                               Basis::powersum);
      product = product * plethysm(outer, tree(rep));
    }
    return product;
  }

  SymFunc tree(int v)
  {
    const TreeCode& code = coder_.code(v);
    auto it = trees_.find(code);
    if (it != trees_.end())
      return it->second;
    SymFunc g = SymFunc::generator(Basis::powersum, Partition{1}) *
                forest(coder_.children(v));
    trees_.emplace(code, g);
    return g;
  }

  Factored forest_factored(const std::vector<int>& roots)
  {
    Factored out;
    for (const auto& [code, entry] : coder_.group(roots)) {
      auto [rep, m] = entry;
      Factored g = tree_factored(rep);
      if (g.is_single_vertex())
        out.simple[m] += 1;
      else if (m == 1)
        out.merge(g);
      else
        out.compound["s[" + std::to_string(m) + "][" + g.render() + "]"] += 1;
    }
    return out;
  }

  Factored tree_factored(int v)
  {
    Factored g = forest_factored(coder_.children(v));
    g.simple[1] += 1;
    return g;
  }

  Integer forest_automorphisms(const std::vector<int>& roots)
  {
    Integer total = 1;
    for (const auto& [code, entry] : coder_.group(roots)) {
      auto [rep, m] = entry;
      Integer a = forest_automorphisms(coder_.children(rep));
      Integer a_pow;
      mpz_pow_ui(a_pow.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(m));
      total *= factorial(m) * a_pow;
    }
    return total;
  }

private:
  TreeCoder coder_;
  std::map<TreeCode, SymFunc> trees_;
};

} // namespace

TreeCode tree_code(const LoopAugmentedForest& forest, int root)
{
  if (root < 0 || root >= forest.size() || !forest.is_root(root))
    throw std::invalid_argument("tree_code: vertex is not a root");
  TreeCoder coder(forest);
  return coder.code(root);
}

std::string forest_code(const LoopAugmentedForest& forest)
{
  TreeCoder coder(forest);
  std::vector<TreeCode> codes;
  for (int r : forest.roots())
    codes.push_back(coder.code(r));
  std::sort(codes.begin(), codes.end());
  std::string out;
  for (const auto& c : codes)
    out += c;
  return out;
}

SymFunc odun_frobenius(const LoopAugmentedForest& forest)
{
  OdunBuilder builder(forest);
  return to_basis(builder.forest(forest.roots()), Basis::schur);
}

std::string odun_factored(const LoopAugmentedForest& forest)
{
  OdunBuilder builder(forest);
  return builder.forest_factored(forest.roots()).render();
}

namespace {

int euler_phi(int n)
{
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0)
      continue;
    while (n % p == 0)
      n /= p;
    result -= result / p;
  }
  if (n > 1)
    result -= result / n;
  return result;
}

// Frobenius characteristic of Ind_{C_i}^{S_i} 1.
SymFunc cyclic_induction(int i)
{
  SymFunc r(Basis::powersum);
  for (int d = 1; d <= i; ++d)
    if (i % d == 0)
      r.add_term(Partition(std::vector<int>(static_cast<std::size_t>(i / d), d)),
                 Rational(euler_phi(d), i));
  return r;
}

} // namespace

SymFunc class_orbit_frobenius(const Partition& nu)
{
  auto m = nu.multiplicities();
  SymFunc product = SymFunc::constant(Basis::powersum, 1);
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (m[i] == 0)
      continue;
    SymFunc outer = SymFunc::generator(Basis::schur, Partition::row(m[i]));
    product = product * plethysm(to_basis(outer, Basis::powersum),
                                 cyclic_induction(static_cast<int>(i)));
  }
  return to_basis(product, Basis::schur);
}

SymFunc master_character(const Partition& nu, const LoopAugmentedForest& tau)
{
  if (tau.has_loops())
    throw std::invalid_argument("master_character: nilpotent block must not have loops");
  return class_orbit_frobenius(nu) * odun_frobenius(tau);
}

PartialTransformation BlockForm::to_partial_transformation() const
{
  const int k = cycle_type.size();
  std::vector<int> image = canonical_representative(cycle_type);
  PartialTransformation tail = nilpotent.to_partial_transformation();
  for (int v : tail.images())
    image.push_back(v == PartialTransformation::kUndefined ? v : v + k);
  return PartialTransformation(std::move(image));
}

Integer forest_automorphisms(const LoopAugmentedForest& forest)
{
  OdunBuilder builder(forest);
  return builder.forest_automorphisms(forest.roots());
}

Integer stabilizer_order(const BlockForm& f)
{
  return z_of(f.cycle_type) * forest_automorphisms(f.nilpotent);
}

// Counting ----------------------------------------------------------------

Integer count_forests(int n, int k)
{
  if (k < 1 || k > n)
    throw std::domain_error("count_forests: need 1 <= k <= n");
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(n - k));
  return binomial(n - 1, k - 1) * power;
}

Integer count_loop_forests(int n, int k)
{
  Integer two_k;
  mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return two_k * count_forests(n, k);
}

Integer count_nilpotents(int n)
{
  if (n < 1)
    throw std::domain_error("count_nilpotents: need n >= 1");
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n + 1),
                static_cast<unsigned long>(n - 1));
  return power;
}

std::size_t count_labeled(int n, LabeledKind kind, int cap)
{
  switch (kind) {
  case LabeledKind::forests: return enumerate_forests(n, false, cap).size();
  case LabeledKind::loop_forests: return enumerate_forests(n, true, cap).size();
  case LabeledKind::nilpotents: return enumerate_nilpotents(n, cap).size();
  }
  return 0;
}

std::vector<LoopAugmentedForest> forest_isomorphism_classes(int n, bool with_loops,
                                                            int cap)
{
  std::map<std::string, LoopAugmentedForest> classes;
  for (auto& f : enumerate_forests(n, with_loops, cap))
    classes.try_emplace(forest_code(f), std::move(f));
  std::vector<LoopAugmentedForest> out;
  out.reserve(classes.size());
  for (auto& [code, f] : classes)
    out.push_back(std::move(f));
  return out;
}

} // namespace adjrep
