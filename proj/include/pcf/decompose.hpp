#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "pcf/choice_function.hpp"
#include "pcf/elementary.hpp"

namespace pcf {

// Builds an antichain sequence A compatible with f such that x lies in
// f_A(X). Grows step by step: with B_k = P - F(a_1..a_k), append x as soon as
// x is chosen from B_k, otherwise append the minimal element (smallest index
// among poset-minimal ones) of f(B_k) - X. Throws NotConservative,
// ElementNotChosen (x not in f(X)).
Sequence witness_sequence(const ChoiceFunction& f, Ideal x_ideal, int x);

// Finite set of antichain sequences whose elementary functions union to a
// target choice function. Sequences are kept sorted lexicographically.
struct Decomposition {
  LatticePtr lattice;
  std::vector<Sequence> sequences;
};

// Represents a conservative f as a union of elementary choice functions: one
// witness per (ideal, chosen element) pair, deduplicated. The result is
// re-verified before returning. Throws NotConservative.
Decomposition decompose(const ChoiceFunction& f);

// Pass iff every sequence is an antichain compatible with f and the union of
// their elementary functions reproduces f table-exactly. The empty union is
// the empty choice function.
CheckReport verify_decomposition(const ChoiceFunction& f, const Decomposition& d);

// Greedily drops, in lexicographic order, sequences whose elementary function
// is already contained in the union of the remaining ones. Requires a
// decomposition that verifies against f.
Decomposition minimize(const ChoiceFunction& f, const Decomposition& d);

// Assigns to a filter F (with f(P - F) nonempty) an element of f(P - F).
// Selectors must be pure: gallery routines may re-invoke them.
using Selector = std::function<int(Filter)>;
using Gallery = Sequence;

Selector min_index_selector(const ChoiceFunction& f);

// The capturing selector: on filters disjoint from X it picks inside
// f(P - F) - X while possible and x once f(P - F) sinks into X; elsewhere it
// falls back to the minimal index. Throws ElementNotChosen (x not in f(X)).
Selector capturing_selector(const ChoiceFunction& f, Ideal x_ideal, int x);

// Iterates U <- U + sel(F(U)) while f(P - F(U)) is nonempty; the result is
// the through gallery for the selector. Throws SelectorViolation when the
// selector steps outside f(P - F(U)).
Gallery build_gallery(const ChoiceFunction& f, const Selector& sel);

// Re-checks, prefix by prefix, that the galleries reachable under a fixed
// selector are exactly the prefixes of its through gallery: each proper
// prefix continues with sel(F(prefix)), and only the full gallery exhausts f.
CheckReport galleries_are_chain(const ChoiceFunction& f, const Selector& sel);

// True iff f is nonempty and differs from the union of all conservative
// choice functions strictly below it. Throws NotConservative, CapExceeded.
bool is_join_irreducible(const ChoiceFunction& f, std::uint64_t cap = kDefaultTableCap);

// For a reducible f, two strictly smaller conservative functions whose union
// is f (an irredundant cover, first part vs union of the rest). Returns
// nullopt when f is join-irreducible, an empty-parts marker pair is never
// produced: the empty function yields nullopt here as well.
std::optional<std::pair<ChoiceFunction, ChoiceFunction>> join_split(
    const ChoiceFunction& f, std::uint64_t cap = kDefaultTableCap);

}  // namespace pcf
