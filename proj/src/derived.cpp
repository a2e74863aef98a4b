#include "sutcert/derived.hpp"

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

namespace sutcert {

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ v.size();
    for (auto x : v) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

class Interner {
 public:
  std::uint32_t intern(std::vector<std::int64_t> key) {
    auto [it, inserted] = ids_.try_emplace(std::move(key), static_cast<std::uint32_t>(ids_.size()));
    return it->second;
  }

 private:
  std::unordered_map<std::vector<std::int64_t>, std::uint32_t, KeyHash> ids_;
};

class DerivedSeriesWalker {
 public:
  DerivedSeriesWalker(const Word& w, const DerivedBudget& budget) : w_(w), budget_(budget) {}

  // Class ids in F/F^(1) of every prefix.
  std::vector<std::uint32_t> level_one() {
    Interner table;
    std::vector<std::uint32_t> ids;
    ids.reserve(w_.length() + 1);
    std::vector<std::int64_t> exps(w_.rank(), 0);
    ids.push_back(table.intern(exps));
    for (const auto& l : w_.letters()) {
      exps[l.generator] += l.sign;
      ids.push_back(table.intern(exps));
    }
    return ids;
  }

  // Class ids in F/F^(d) of every prefix, from the ids in F/F^(d-1). The key of
  // a prefix p is its Fox gradient in Z[F/F^(d-1)]: coefficients indexed by
  // (generator, class of the group element).
  std::vector<std::uint32_t> next_level(const std::vector<std::uint32_t>& prev) {
    Interner table;
    std::vector<std::uint32_t> ids;
    ids.reserve(prev.size());
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::int64_t> gradient;
    auto key = [&] {
      std::vector<std::int64_t> k;
      k.reserve(gradient.size() * 3);
      for (const auto& [slot, c] : gradient) {
        k.push_back(slot.first);
        k.push_back(slot.second);
        k.push_back(c);
      }
      work_ += gradient.size() + 1;
      if (work_ > budget_.max_work)
        throw ResourceExceeded("derived-series computation exceeded its work budget (" +
                               std::to_string(budget_.max_work) + " key entries)");
      return k;
    };
    ids.push_back(table.intern(key()));
    auto letters = w_.letters();
    for (std::size_t i = 0; i < letters.size(); ++i) {
      const auto& l = letters[i];
      // d(p x) = dp + p ;  d(p x^-1) = dp - p x^-1
      std::uint32_t cls = l.sign > 0 ? prev[i] : prev[i + 1];
      auto slot = std::make_pair(l.generator, cls);
      auto& c = gradient[slot];
      c += l.sign;
      if (c == 0) gradient.erase(slot);
      ids.push_back(table.intern(key()));
    }
    return ids;
  }

 private:
  const Word& w_;
  const DerivedBudget& budget_;
  std::size_t work_ = 0;
};

}  // namespace

std::size_t derived_depth(const Word& w, std::size_t max_depth, const DerivedBudget& budget) {
  if (max_depth == 0) return 0;
  if (w.length() > budget.max_word_length)
    throw ResourceExceeded("word of length " + std::to_string(w.length()) + " exceeds the ceiling of " +
                           std::to_string(budget.max_word_length) + " letters");
  if (w.is_identity()) return max_depth;
  DerivedSeriesWalker walker(w, budget);
  auto ids = walker.level_one();
  for (std::size_t d = 1;; ++d) {
    // ids[0] is the identity's class; the full word is ids.back().
    if (ids.back() != ids.front()) return d - 1;
    if (d == max_depth) return d;
    if (d == budget.max_depth)
      throw ResourceExceeded("word lies in F^(" + std::to_string(d) + "); deciding deeper membership exceeds the depth budget " +
                             std::to_string(budget.max_depth));
    ids = walker.next_level(ids);
  }
}

bool in_derived_subgroup(const Word& w, std::size_t d, const DerivedBudget& budget) {
  return derived_depth(w, d, budget) >= d;
}

}  // namespace sutcert
