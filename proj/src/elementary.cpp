#include "pcf/elementary.hpp"

namespace pcf {

Sequence Sequence::from_indices(const Poset& p, std::vector<int> items) {
  ElemSet seen;
  for (int x : items) {
    if (x < 0 || x >= p.size())
      throw Error(ErrorKind::UnknownElement, "element index " + std::to_string(x));
    if (seen.contains(x))
      throw Error(ErrorKind::DuplicateName, "'" + p.name(x) + "' repeats in the sequence");
    seen.add(x);
  }
  return Sequence(std::move(items));
}

Sequence Sequence::from_names(const Poset& p, std::span<const std::string> names) {
  std::vector<int> items;
  items.reserve(names.size());
  for (const std::string& s : names) items.push_back(p.index_of(s));
  return from_indices(p, std::move(items));
}

ElemSet Sequence::support() const {
  ElemSet s;
  for (int x : items_) s.add(x);
  return s;
}

HitIndex first_hit(const Poset& p, const Sequence& a, Ideal x) {
  if (!x.subset_of(p.all()))
    throw Error(ErrorKind::UnknownElement, "ideal contains indices outside the poset");
  for (std::size_t i = 0; i < a.length(); ++i)
    if (x.contains(a.at(i))) return {true, static_cast<int>(i) + 1};
  return {};
}

ElemSet eval_elementary(const Poset& p, const Sequence& a, Ideal x) {
  if (a.empty()) return {};
  HitIndex h = first_hit(p, a, x);
  std::size_t prefix = h.hit ? static_cast<std::size_t>(h.index) : a.length();
  ElemSet generators;
  for (std::size_t i = 0; i < prefix; ++i) generators.add(a.at(i));
  return x & p.ideal_generated(generators);
}

ChoiceFunction elementary_cf(const LatticePtr& lattice, const Sequence& a) {
  std::vector<std::pair<ElemSet, ElemSet>> table;
  table.reserve(static_cast<std::size_t>(lattice->count()));
  for (const Ideal& x : lattice->ideals())
    table.emplace_back(x, eval_elementary(lattice->poset(), a, x));
  return ChoiceFunction::from_table(lattice, table);
}

bool is_compatible(const Sequence& a, const ChoiceFunction& f) {
  const Poset& p = f.poset();
  if (!a.support().subset_of(p.all()))
    throw Error(ErrorKind::PosetMismatch, "sequence mentions elements outside the poset");
  ElemSet prefix;
  for (int ai : a.items()) {
    // P - F(prefix) is an ideal, so the lookup is always defined.
    Ideal menu = p.all() - p.filter_generated(prefix);
    if (!f(menu).contains(ai)) return false;
    prefix.add(ai);
  }
  return true;
}

}  // namespace pcf
