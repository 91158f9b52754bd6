#include "sctk/matroid.hpp"

#include <functional>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "sctk/errors.hpp"
#include "sctk/linalg.hpp"

namespace sctk {

ColumnSet ColumnSet::of(const std::vector<std::size_t>& cols) {
  std::uint64_t bits = 0;
  for (auto c : cols) {
    if (c >= kMaxColumns) throw LimitExceeded("column index beyond 64");
    bits |= std::uint64_t{1} << c;
  }
  return ColumnSet(bits);
}

ColumnSet ColumnSet::all(std::size_t n) {
  if (n > kMaxColumns) throw LimitExceeded("ground set larger than 64 columns");
  return ColumnSet(n == kMaxColumns ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

std::vector<std::size_t> ColumnSet::indices() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

struct VectorMatroid::RankCache {
  std::shared_mutex mutex;
  std::unordered_map<std::uint64_t, std::size_t> ranks;
};

VectorMatroid::VectorMatroid(SymMatrix matrix)
    : matrix_(std::move(matrix)), cache_(std::make_shared<RankCache>()) {
  if (matrix_.cols() > ColumnSet::kMaxColumns) {
    throw LimitExceeded("vector matroids are limited to 64 columns");
  }
}

ColumnSet VectorMatroid::resolve(const std::vector<std::string>& labels) const {
  std::vector<std::size_t> cols;
  for (const auto& l : labels) {
    auto idx = matrix_.labelIndex(l);
    if (!idx) throw UsageError("unknown column label '" + l + "'");
    cols.push_back(*idx);
  }
  return ColumnSet::of(cols);
}

std::vector<std::string> VectorMatroid::labelsOf(ColumnSet set) const {
  std::vector<std::string> out;
  for (auto c : set.indices()) out.push_back(matrix_.labels().at(c));
  return out;
}

std::size_t VectorMatroid::rankOf(ColumnSet set) const {
  if (!set.isSubsetOf(ColumnSet::all(groundSize()))) throw UsageError("column set outside ground");
  if (set.empty()) return 0;
  {
    std::shared_lock lock(cache_->mutex);
    if (auto it = cache_->ranks.find(set.bits()); it != cache_->ranks.end()) return it->second;
  }
  const auto cols = set.indices();
  const std::size_t r = sctk::rank(matrix_.selectColumns(cols));
  std::unique_lock lock(cache_->mutex);
  cache_->ranks.emplace(set.bits(), r);
  return r;
}

BaseList enumerateBases(const VectorMatroid& m, std::size_t cap) {
  if (cap == 0) throw UsageError("base enumeration cap must be positive");
  BaseList out;
  const std::size_t r = m.rank();
  forEachCombination(m.groundSize(), r, [&](const std::vector<std::size_t>& cols) {
    const ColumnSet set = ColumnSet::of(cols);
    if (m.rankOf(set) != r) return true;
    if (out.bases.size() == cap) {
      out.truncated = true;
      return false;
    }
    out.bases.push_back(Base{set, m.labelsOf(set)});
    return true;
  });
  return out;
}

UnimodularBaseList enumerateUnimodularBases(const VectorMatroid& m, std::size_t cap) {
  if (cap == 0) throw UsageError("base enumeration cap must be positive");
  UnimodularBaseList out;
  const std::size_t r = m.rank();
  if (r != m.matrix().rows()) return out;
  forEachCombination(m.groundSize(), r, [&](const std::vector<std::size_t>& cols) {
    RationalFunction d = det(m.matrix().selectColumns(cols));
    if (d.isZero() || !d.isSFree()) return true;
    if (out.bases.size() == cap) {
      out.truncated = true;
      return false;
    }
    const ColumnSet set = ColumnSet::of(cols);
    out.bases.push_back(UnimodularBase{Base{set, m.labelsOf(set)}, d.reduced()});
    return true;
  });
  return out;
}

void requireCommonGround(const std::vector<VectorMatroid>& matroids) {
  for (std::size_t i = 1; i < matroids.size(); ++i) {
    if (matroids[i].ground() != matroids[0].ground()) {
      throw UsageError("matroids are not on a common ground set");
    }
  }
}

std::size_t unionRankFormula(const std::vector<VectorMatroid>& matroids, ColumnSet x) {
  requireCommonGround(matroids);
  if (x.size() > kMaxUnionFormulaSubset) {
    throw LimitExceeded("union rank formula limited to subsets of " +
                        std::to_string(kMaxUnionFormulaSubset) + " elements");
  }
  std::size_t best = x.size();
  // Walk every submask Y of X, including the empty set.
  std::uint64_t y = x.bits();
  while (true) {
    const ColumnSet ys(y);
    std::size_t value = (x - ys).size();
    for (const auto& m : matroids) {
      if (value >= best) break;
      value += m.rankOf(ys);
    }
    best = std::min(best, value);
    if (y == 0) break;
    y = (y - 1) & x.bits();
  }
  return best;
}

std::optional<std::vector<std::size_t>> findDisjointSelection(
    const std::vector<std::vector<ColumnSet>>& candidates) {
  return findDisjointSelection(candidates, [](const std::vector<std::size_t>&) { return true; });
}

std::optional<std::vector<std::size_t>> findDisjointSelection(
    const std::vector<std::vector<ColumnSet>>& candidates,
    const std::function<bool(const std::vector<std::size_t>&)>& accept) {
  std::vector<std::size_t> chosen(candidates.size());
  std::function<bool(std::size_t, ColumnSet)> go = [&](std::size_t block, ColumnSet used) {
    if (block == candidates.size()) return accept(chosen);
    for (std::size_t i = 0; i < candidates[block].size(); ++i) {
      const ColumnSet c = candidates[block][i];
      if (c.intersects(used)) continue;
      chosen[block] = i;
      if (go(block + 1, used | c)) return true;
    }
    return false;
  };
  if (!go(0, ColumnSet())) return std::nullopt;
  return chosen;
}

DisjointBases maxUnionOfBases(const std::vector<VectorMatroid>& matroids,
                              const std::vector<std::size_t>& sizes_wanted, std::size_t cap) {
  requireCommonGround(matroids);
  if (sizes_wanted.size() != matroids.size()) throw UsageError("one size per matroid required");
  DisjointBases out;
  std::vector<BaseList> lists;
  std::vector<std::vector<ColumnSet>> candidates;
  for (std::size_t i = 0; i < matroids.size(); ++i) {
    if (matroids[i].rank() != sizes_wanted[i]) return out;
    lists.push_back(enumerateBases(matroids[i], cap));
    out.truncated = out.truncated || lists.back().truncated;
    std::vector<ColumnSet> sets;
    for (const auto& b : lists.back().bases) sets.push_back(b.columns);
    candidates.push_back(std::move(sets));
  }
  if (auto pick = findDisjointSelection(candidates)) {
    std::vector<Base> family;
    for (std::size_t i = 0; i < pick->size(); ++i) family.push_back(lists[i].bases[(*pick)[i]]);
    out.family = std::move(family);
  }
  return out;
}

std::size_t largestBaseUnion(const std::vector<VectorMatroid>& matroids, std::size_t cap) {
  requireCommonGround(matroids);
  if (matroids.empty()) return 0;
  std::vector<BaseList> lists;
  for (const auto& m : matroids) lists.push_back(enumerateBases(m, cap));
  const std::size_t ceiling = matroids.front().groundSize();
  std::size_t best = 0;
  std::function<void(std::size_t, ColumnSet)> go = [&](std::size_t i, ColumnSet acc) {
    if (best == ceiling) return;
    if (i == lists.size()) {
      best = std::max(best, acc.size());
      return;
    }
    for (const auto& b : lists[i].bases) go(i + 1, acc | b.columns);
  };
  go(0, ColumnSet());
  return best;
}

}  // namespace sctk
