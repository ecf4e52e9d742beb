#pragma once

#include <span>
#include <vector>

#include "pcf/choice_function.hpp"
#include "pcf/poset.hpp"

namespace pcf {

// Ordered list of distinct poset elements. May be empty. Antichain-ness is a
// property of specific uses (decompositions require it), not of the type.
class Sequence {
 public:
  Sequence() = default;

  // Throws DuplicateName on repeats, UnknownElement on out-of-range indices.
  static Sequence from_indices(const Poset& p, std::vector<int> items);
  static Sequence from_names(const Poset& p, std::span<const std::string> names);

  std::size_t length() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  std::span<const int> items() const { return items_; }
  int at(std::size_t i) const { return items_[i]; }
  ElemSet support() const;

  friend bool operator==(const Sequence&, const Sequence&) = default;
  friend bool operator<(const Sequence& a, const Sequence& b) { return a.items_ < b.items_; }

 private:
  explicit Sequence(std::vector<int> items) : items_(std::move(items)) {}
  std::vector<int> items_;
};

// Position of the first member of A inside X, 1-based. hit == false realizes
// the i = k convention: no member of A lies in X.
struct HitIndex {
  bool hit = false;
  int index = 0;
};

HitIndex first_hit(const Poset& p, const Sequence& a, Ideal x);

// f_A(X) = X & I(a_1..a_i) where i is the first hit (the whole sequence when
// there is none); the empty sequence yields the empty set.
ElemSet eval_elementary(const Poset& p, const Sequence& a, Ideal x);

// Tabulates f_A over the whole ideal lattice.
ChoiceFunction elementary_cf(const LatticePtr& lattice, const Sequence& a);

// True iff a_i is chosen by f from P minus the filter of its predecessors,
// for every i. Throws PosetMismatch when a mentions foreign elements.
bool is_compatible(const Sequence& a, const ChoiceFunction& f);

}  // namespace pcf
