#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pcf/elemset.hpp"
#include "pcf/error.hpp"

namespace pcf {

// Ideals exceeding this many entries abort enumeration with CapExceeded.
inline constexpr std::size_t kDefaultIdealCap = 4096;

// Semantic aliases; validity is enforced by the producing operations.
using Ideal = ElemSet;
using Filter = ElemSet;

// Finite poset: named elements 0..n-1 with a reflexive-transitive-antisymmetric
// order relation. Build() closes an arbitrary pair list transitively, so callers
// may supply covers or the full relation interchangeably. Immutable once built.
class Poset {
 public:
  // Throws DuplicateName, UnknownElement, CycleError (antisymmetry violation),
  // CapExceeded (more than 64 elements).
  static Poset build(std::vector<std::string> elements,
                     const std::vector<std::pair<std::string, std::string>>& pairs);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& elements() const { return names_; }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  int index_of(std::string_view name) const;  // throws UnknownElement

  bool le(int x, int y) const { return below_[static_cast<std::size_t>(y)].contains(x); }
  bool comparable(int x, int y) const { return le(x, y) || le(y, x); }

  ElemSet all() const { return universe_; }

  Ideal principal_ideal(int x) const { return below_[check(x)]; }
  ElemSet strict_principal_ideal(int x) const { return below_[check(x)] - ElemSet().add(x); }
  Filter principal_filter(int x) const { return above_[check(x)]; }

  // I(A) / F(A); the empty set generates the empty ideal / filter.
  Ideal ideal_generated(ElemSet a) const;
  Filter filter_generated(ElemSet a) const;

  bool is_ideal(ElemSet s) const;
  bool is_filter(ElemSet s) const;
  bool is_antichain(ElemSet s) const;

  bool is_linear() const;
  bool is_discrete() const;

  // All ideals, sorted by size then lexicographically by member index.
  // Throws CapExceeded when the ideal count would exceed cap.
  std::vector<Ideal> ideals(std::size_t cap = kDefaultIdealCap) const;

  // Minimal elements of s in the poset order.
  ElemSet minimal_elements(ElemSet s) const;

  std::string format_set(ElemSet s) const;       // "a,b" in index order
  std::string format_sequence(std::span<const int> items) const;
  ElemSet parse_set(std::string_view csv) const;  // throws UnknownElement
  std::vector<int> parse_items(std::string_view csv) const;

  // Same element names in the same order and the same relation.
  bool operator==(const Poset& other) const {
    return names_ == other.names_ && below_ == other.below_;
  }

 private:
  std::size_t check(int x) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<ElemSet> below_;  // below_[x] = { y : y <= x }
  std::vector<ElemSet> above_;  // above_[x] = { y : x <= y }
  ElemSet universe_;
};

// A poset together with its enumerated ideal lattice. Choice functions index
// their tables by position in ideals(); the enumeration order is deterministic,
// so lattices built from equal posets agree entry by entry.
class IdealLattice {
 public:
  static std::shared_ptr<const IdealLattice> build(Poset poset,
                                                   std::size_t cap = kDefaultIdealCap);

  const Poset& poset() const { return poset_; }
  std::span<const Ideal> ideals() const { return ideals_; }
  int count() const { return static_cast<int>(ideals_.size()); }
  const Ideal& ideal(int i) const { return ideals_[static_cast<std::size_t>(i)]; }

  bool contains(ElemSet s) const { return position_.contains(s.bits()); }
  int index_of(Ideal x) const;  // throws NotIdeal when x is not an ideal of the poset

 private:
  IdealLattice(Poset poset, std::vector<Ideal> ideals);

  Poset poset_;
  std::vector<Ideal> ideals_;
  std::unordered_map<std::uint64_t, int> position_;
};

using LatticePtr = std::shared_ptr<const IdealLattice>;

}  // namespace pcf
