#pragma once

// Shared test helpers: tiny named posets, an isomorphism-reduced corpus of all
// small posets, and naive oracles kept deliberately independent of the
// library's enumerators and checkers.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pcf/choice_function.hpp"
#include "pcf/elementary.hpp"
#include "pcf/poset.hpp"

namespace corpus {

using pcf::ChoiceFunction;
using pcf::ElemSet;
using pcf::LatticePtr;
using pcf::Poset;
using pcf::Sequence;

inline std::vector<std::string> letter_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return names;
}

inline Poset make_poset(int n, const std::vector<std::pair<int, int>>& lt) {
  std::vector<std::string> names = letter_names(n);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (auto [x, y] : lt) pairs.emplace_back(names[static_cast<std::size_t>(x)],
                                            names[static_cast<std::size_t>(y)]);
  return Poset::build(names, pairs);
}

inline Poset make_chain(int n) {
  std::vector<std::pair<int, int>> lt;
  for (int i = 0; i + 1 < n; ++i) lt.emplace_back(i, i + 1);
  return make_poset(n, lt);
}

inline Poset make_antichain(int n) { return make_poset(n, {}); }

// a < c, b < c
inline Poset make_v() { return make_poset(3, {{0, 2}, {1, 2}}); }

// All strict partial orders on n labeled points up to isomorphism, each as a
// list of x < y pairs. Canonicalization tries every permutation and keeps the
// numerically smallest relation bitmask.
inline std::vector<std::vector<std::pair<int, int>>> posets_upto_iso(int n) {
  const int cells = n * n;
  auto bit = [n](int x, int y) { return static_cast<std::uint32_t>(x * n + y); };

  std::vector<std::uint32_t> pair_bits;  // one bit per ordered pair x != y
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) pair_bits.push_back(bit(x, y));

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::set<std::uint64_t> seen;
  std::vector<std::vector<std::pair<int, int>>> out;

  for (std::uint64_t mask = 0; mask < (1ULL << pair_bits.size()); ++mask) {
    std::uint64_t rel = 0;
    for (std::size_t i = 0; i < pair_bits.size(); ++i)
      if (mask >> i & 1) rel |= 1ULL << pair_bits[i];
    auto has = [&](int x, int y) { return rel >> bit(x, y) & 1; };

    bool valid = true;
    for (int x = 0; x < n && valid; ++x)
      for (int y = 0; y < n && valid; ++y) {
        if (x != y && has(x, y) && has(y, x)) valid = false;
        for (int z = 0; valid && z < n; ++z)
          if (has(x, y) && has(y, z) && !has(x, z)) valid = false;
      }
    if (!valid) continue;

    std::uint64_t canon = ~0ULL >> (64 - cells);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::uint64_t relabeled = 0;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (x != y && has(x, y)) relabeled |= 1ULL << bit(perm[x], perm[y]);
      canon = std::min(canon, relabeled);
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (!seen.insert(canon).second) continue;
    std::vector<std::pair<int, int>> lt;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (x != y && (canon >> bit(x, y) & 1)) lt.emplace_back(x, y);
    out.push_back(std::move(lt));
  }
  return out;
}

// The whole corpus of posets on 1..max_n elements up to isomorphism.
inline std::vector<Poset> small_posets(int max_n) {
  std::vector<Poset> out;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& lt : posets_upto_iso(n)) out.push_back(make_poset(n, lt));
  return out;
}

// Odometer over every total sub-ideal table on the lattice; keeps the tables
// the predicate accepts. Exponential -- tiny posets only.
template <class Pred>
std::vector<ChoiceFunction> naive_tables(const LatticePtr& lat, Pred keep) {
  const int m = lat->count();
  std::vector<std::vector<int>> candidates(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (lat->ideal(j).subset_of(lat->ideal(i))) candidates[static_cast<std::size_t>(i)].push_back(j);

  std::vector<std::size_t> pick(static_cast<std::size_t>(m), 0);
  std::vector<ChoiceFunction> out;
  while (true) {
    std::vector<std::pair<ElemSet, ElemSet>> entries;
    for (int i = 0; i < m; ++i)
      entries.emplace_back(lat->ideal(i),
                           lat->ideal(candidates[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]]));
    ChoiceFunction f = ChoiceFunction::from_table(lat, entries);
    if (keep(f)) out.push_back(std::move(f));

    int i = m - 1;
    while (i >= 0 &&
           ++pick[static_cast<std::size_t>(i)] == candidates[static_cast<std::size_t>(i)].size()) {
      pick[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return out;
  }
}

// Definition-direct law checks, written fresh so the library checkers have an
// independent oracle.
inline bool naive_hereditary(const ChoiceFunction& f) {
  const auto& lat = f.lattice();
  for (int a = 0; a < lat.count(); ++a)
    for (int b = 0; b < lat.count(); ++b) {
      ElemSet A = lat.ideal(a), B = lat.ideal(b);
      if (!A.subset_of(B)) continue;
      for (int e : (f.value(b) & A).members())
        if (!f.value(a).contains(e)) return false;
    }
  return true;
}

inline bool naive_outcast(const ChoiceFunction& f) {
  const auto& lat = f.lattice();
  for (int a = 0; a < lat.count(); ++a)
    for (int b = 0; b < lat.count(); ++b) {
      ElemSet A = lat.ideal(a), B = lat.ideal(b);
      if (f.value(b).subset_of(A) && A.subset_of(B) && !(f.value(a) == f.value(b))) return false;
    }
  return true;
}

inline bool naive_conservative(const ChoiceFunction& f) {
  return naive_hereditary(f) && naive_outcast(f);
}

inline bool naive_path_independent(const ChoiceFunction& f) {
  const auto& lat = f.lattice();
  for (int x = 0; x < lat.count(); ++x)
    for (int y = 0; y < lat.count(); ++y) {
      ElemSet left = f(lat.ideal(x) | lat.ideal(y));
      ElemSet right = f(f.value(x) | f.value(y));
      if (!(left == right)) return false;
    }
  return true;
}

// Classical priority-list maximizer on a discrete poset: the first list
// member present in X, as a singleton.
inline ElemSet priority_choice(std::span<const int> order, ElemSet x) {
  for (int a : order)
    if (x.contains(a)) return ElemSet().add(a);
  return {};
}

// mt19937 output is pinned by the standard; distributions are not, so draw
// via modulo to keep every platform on the same stream.
struct Rng {
  std::mt19937 gen;
  explicit Rng(std::uint32_t seed) : gen(seed) {}
  int below(int n) { return static_cast<int>(gen() % static_cast<std::uint32_t>(n)); }
  bool coin(int denom = 2) { return below(denom) == 0; }
};

// Edges only point from lower to higher index, so the relation is acyclic by
// construction.
inline Poset random_poset(Rng& rng, int n, int edge_percent) {
  std::vector<std::pair<int, int>> lt;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.below(100) < edge_percent) lt.emplace_back(i, j);
  return make_poset(n, lt);
}

// Random subset of elements in a random order.
inline Sequence random_sequence(Rng& rng, const Poset& p) {
  std::vector<int> items;
  for (int x = 0; x < p.size(); ++x)
    if (rng.coin()) items.push_back(x);
  for (std::size_t i = items.size(); i > 1; --i)
    std::swap(items[i - 1], items[static_cast<std::size_t>(rng.below(static_cast<int>(i)))]);
  return Sequence::from_indices(p, items);
}

// All nonempty sequences of distinct elements whose support is an antichain.
inline std::vector<Sequence> ac_sequences(const Poset& p) {
  std::vector<Sequence> out;
  std::vector<int> items;
  auto grow = [&](auto&& self) -> void {
    if (!items.empty()) out.push_back(Sequence::from_indices(p, items));
    for (int x = 0; x < p.size(); ++x) {
      bool ok = true;
      for (int y : items)
        if (y == x || p.comparable(x, y)) ok = false;
      if (!ok) continue;
      items.push_back(x);
      self(self);
      items.pop_back();
    }
  };
  grow(grow);
  return out;
}

}  // namespace corpus
