#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pcf/poset.hpp"

namespace pcf {

// Candidate-table counts above this abort enumeration with CapExceeded.
inline constexpr std::uint64_t kDefaultTableCap = 1'000'000;

// Counterexample to one of the choice-function laws. Which ideals and
// whether `element` is meaningful depends on the law; element is -1 when
// the law has no violating element.
struct Witness {
  Ideal a;
  Ideal b;
  int element = -1;
};

struct CheckReport {
  bool pass = true;
  std::optional<Witness> witness;
  std::string note;

  explicit operator bool() const { return pass; }
};

// Total map from every ideal of a poset to a sub-ideal, stored extensionally:
// value(i) is the image of lattice().ideal(i). Immutable.
class ChoiceFunction {
 public:
  // Validates totality, selection (f(X) subset of X) and ideality of every
  // value. A missing entry for the empty ideal is filled in as empty.
  // Throws NotTotal, NotSelection, NotIdeal, DuplicateKey.
  static ChoiceFunction from_table(LatticePtr lattice,
                                   std::span<const std::pair<ElemSet, ElemSet>> entries);

  // f^I(X) = I intersect X. Throws NotIdeal unless I is an ideal.
  static ChoiceFunction constant(LatticePtr lattice, ElemSet ideal);

  static ChoiceFunction empty(LatticePtr lattice) { return constant(lattice, ElemSet()); }
  static ChoiceFunction identity(LatticePtr lattice);

  const IdealLattice& lattice() const { return *lattice_; }
  LatticePtr lattice_ptr() const { return lattice_; }
  const Poset& poset() const { return lattice_->poset(); }

  int ideal_count() const { return lattice_->count(); }
  const Ideal& ideal(int i) const { return lattice_->ideal(i); }
  ElemSet value(int i) const { return values_[static_cast<std::size_t>(i)]; }
  std::span<const ElemSet> values() const { return values_; }

  // Lookup by ideal; throws NotIdeal when x is not an ideal of the poset.
  ElemSet operator()(Ideal x) const { return values_[static_cast<std::size_t>(lattice_->index_of(x))]; }

  bool same_poset(const ChoiceFunction& other) const {
    return lattice_ == other.lattice_ || poset() == other.poset();
  }
  // Pointwise containment: f(X) subset of g(X) for every ideal X.
  bool subset_of(const ChoiceFunction& other) const;

  friend bool operator==(const ChoiceFunction& f, const ChoiceFunction& g) {
    return f.same_poset(g) && f.values_ == g.values_;
  }

 private:
  ChoiceFunction(LatticePtr lattice, std::vector<ElemSet> values)
      : lattice_(std::move(lattice)), values_(std::move(values)) {}

  LatticePtr lattice_;
  std::vector<ElemSet> values_;

  friend ChoiceFunction union_cf(std::span<const ChoiceFunction> fs);
  friend class TableEnumerator;
};

// Heredity: A subset of B implies f(B) & A subset of f(A).
CheckReport check_heredity(const ChoiceFunction& f);

// Outcast: f(B) subset of A subset of B implies f(A) = f(B).
CheckReport check_outcast(const ChoiceFunction& f);

// Single condition: f(A) subset of B implies f(B) & A subset of f(A).
CheckReport check_single_condition(const ChoiceFunction& f);

// Path independence: f(X | Y) = f(f(X) | f(Y)).
CheckReport check_path_independence(const ChoiceFunction& f);

// Idempotence: f(f(X)) = f(X).
CheckReport check_idempotent(const ChoiceFunction& f);

bool is_conservative(const ChoiceFunction& f);

// Re-evaluates a failed check's witness directly against the table.
// Returns true when the witness indeed violates the named law.
enum class Law { Heredity, Outcast, SingleCondition, PathIndependence, Idempotence };
bool witness_violates(Law law, const ChoiceFunction& f, const Witness& w);

// X -> union of f_i(X). All functions must live over the same poset.
// Throws PosetMismatch; the list must be nonempty.
ChoiceFunction union_cf(std::span<const ChoiceFunction> fs);

// All conservative (resp. path-independent) choice functions on the lattice,
// in deterministic order. The candidate-table count (product over ideals X of
// the number of sub-ideals of X) must stay within cap; throws CapExceeded.
std::vector<ChoiceFunction> enumerate_conservative(const LatticePtr& lattice,
                                                   std::uint64_t cap = kDefaultTableCap);
std::vector<ChoiceFunction> enumerate_path_independent(const LatticePtr& lattice,
                                                       std::uint64_t cap = kDefaultTableCap);

// Candidate-table count with saturation at cap+1 (never overflows).
std::uint64_t candidate_table_count(const IdealLattice& lattice, std::uint64_t cap);

}  // namespace pcf
