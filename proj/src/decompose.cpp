#include "pcf/decompose.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace pcf {

namespace {

// Poset-minimal element of s with the smallest index.
int minimal_of(const Poset& p, ElemSet s) { return p.minimal_elements(s).min_element(); }

Sequence witness_unchecked(const ChoiceFunction& f, Ideal x_ideal, int x) {
  const Poset& p = f.poset();
  if (!f(x_ideal).contains(x))
    throw Error(ErrorKind::ElementNotChosen,
                "'" + p.name(x) + "' is not chosen from '" + p.format_set(x_ideal) + "'");

  std::vector<int> items;
  ElemSet support;
  ElemSet menu = p.all();  // B_k = P - F(a_1..a_k)
  while (true) {
    ElemSet chosen = f(menu);
    if (chosen.contains(x)) {
      items.push_back(x);
      break;
    }
    ElemSet pool = chosen - x_ideal;
    if (pool.empty())
      // Outcast would force f(B_k) = f(X) and x to be chosen; unreachable
      // for a conservative f.
      throw Error(ErrorKind::NotConservative,
                  "f(" + p.format_set(menu) + ") sinks into X without choosing '" +
                      p.name(x) + "'");
    int a = minimal_of(p, pool);
    items.push_back(a);
    support.add(a);
    menu = menu - p.filter_generated(ElemSet().add(a));

    // Loop invariants: the support stays an antichain, its ideal never
    // captures x, and the shrinking menu still covers all of X.
    assert(p.is_antichain(support));
    assert(!p.ideal_generated(support).contains(x));
    assert(x_ideal.subset_of(menu));
  }
  Sequence seq = Sequence::from_indices(p, std::move(items));
  assert(p.is_antichain(seq.support()));
  return seq;
}

ChoiceFunction union_or_empty(const LatticePtr& lattice,
                              const std::vector<ChoiceFunction>& parts) {
  if (parts.empty()) return ChoiceFunction::empty(lattice);
  return union_cf(parts);
}

std::string conservative_failure(const ChoiceFunction& f) {
  const Poset& p = f.poset();
  if (CheckReport r = check_heredity(f); !r.pass)
    return "heredity fails at A='" + p.format_set(r.witness->a) + "' B='" +
           p.format_set(r.witness->b) + "' element '" + p.name(r.witness->element) + "'";
  CheckReport r = check_outcast(f);
  return "outcast fails at A='" + p.format_set(r.witness->a) + "' B='" +
         p.format_set(r.witness->b) + "'";
}

}  // namespace

Sequence witness_sequence(const ChoiceFunction& f, Ideal x_ideal, int x) {
  if (!is_conservative(f)) throw Error(ErrorKind::NotConservative, conservative_failure(f));
  return witness_unchecked(f, x_ideal, x);
}

Decomposition decompose(const ChoiceFunction& f) {
  if (!is_conservative(f)) throw Error(ErrorKind::NotConservative, conservative_failure(f));

  std::set<Sequence> found;
  for (int i = 0; i < f.ideal_count(); ++i)
    for (int x : f.value(i).members()) found.insert(witness_unchecked(f, f.ideal(i), x));

  Decomposition d{f.lattice_ptr(), {found.begin(), found.end()}};
  CheckReport verified = verify_decomposition(f, d);
  if (!verified.pass)
    throw std::logic_error("decompose produced a non-reproducing decomposition: " +
                           verified.note);
  return d;
}

CheckReport verify_decomposition(const ChoiceFunction& f, const Decomposition& d) {
  const Poset& p = f.poset();
  if (!(d.lattice->poset() == p)) throw Error(ErrorKind::PosetMismatch, "different posets");

  std::vector<ChoiceFunction> parts;
  parts.reserve(d.sequences.size());
  for (const Sequence& a : d.sequences) {
    if (!p.is_antichain(a.support()))
      return {false, std::nullopt,
              "sequence '" + p.format_sequence(a.items()) + "' is not an antichain"};
    if (!is_compatible(a, f))
      return {false, std::nullopt,
              "sequence '" + p.format_sequence(a.items()) + "' is not compatible"};
    parts.push_back(elementary_cf(f.lattice_ptr(), a));
  }

  ChoiceFunction joined = union_or_empty(f.lattice_ptr(), parts);
  for (int i = 0; i < f.ideal_count(); ++i)
    if (joined.value(i) != f.value(i))
      return {false, Witness{f.ideal(i), joined.value(i), -1},
              "union reproduces '" + p.format_set(joined.value(i)) + "' instead of '" +
                  p.format_set(f.value(i)) + "' at '" + p.format_set(f.ideal(i)) + "'"};
  return {};
}

Decomposition minimize(const ChoiceFunction& f, const Decomposition& d) {
  if (!verify_decomposition(f, d).pass)
    throw std::invalid_argument("minimize requires a verified decomposition");

  std::vector<Sequence> seqs = d.sequences;
  std::sort(seqs.begin(), seqs.end());

  std::vector<ChoiceFunction> tables;
  tables.reserve(seqs.size());
  for (const Sequence& a : seqs) tables.push_back(elementary_cf(f.lattice_ptr(), a));

  std::vector<bool> alive(seqs.size(), true);
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    std::vector<ChoiceFunction> rest;
    for (std::size_t j = 0; j < seqs.size(); ++j)
      if (alive[j] && j != i) rest.push_back(tables[j]);
    if (union_or_empty(f.lattice_ptr(), rest) == f) alive[i] = false;
  }

  Decomposition out{d.lattice, {}};
  for (std::size_t i = 0; i < seqs.size(); ++i)
    if (alive[i]) out.sequences.push_back(seqs[i]);
  return out;
}

Selector min_index_selector(const ChoiceFunction& f) {
  return [f](Filter filter) { return f(f.poset().all() - filter).min_element(); };
}

Selector capturing_selector(const ChoiceFunction& f, Ideal x_ideal, int x) {
  const Poset& p = f.poset();
  if (!f(x_ideal).contains(x))
    throw Error(ErrorKind::ElementNotChosen,
                "'" + p.name(x) + "' is not chosen from '" + p.format_set(x_ideal) + "'");
  return [f, x_ideal, x](Filter filter) {
    ElemSet chosen = f(f.poset().all() - filter);
    if (!filter.intersects(x_ideal)) {
      if (!chosen.subset_of(x_ideal)) return (chosen - x_ideal).min_element();
      return x;  // outcast: f(P - F) = f(X), which contains x
    }
    return chosen.min_element();
  };
}

Gallery build_gallery(const ChoiceFunction& f, const Selector& sel) {
  const Poset& p = f.poset();
  std::vector<int> items;
  ElemSet used;
  while (true) {
    Filter filter = p.filter_generated(used);
    ElemSet chosen = f(p.all() - filter);
    if (chosen.empty()) break;  // through: the selector's domain is exhausted
    int u = sel(filter);
    if (u < 0 || u >= p.size() || !chosen.contains(u))
      throw Error(ErrorKind::SelectorViolation,
                  "selector left f(" + p.format_set(p.all() - filter) + ")");
    items.push_back(u);
    used.add(u);
  }
  return Sequence::from_indices(p, std::move(items));
}

CheckReport galleries_are_chain(const ChoiceFunction& f, const Selector& sel) {
  const Poset& p = f.poset();
  Gallery through = build_gallery(f, sel);
  const std::size_t m = through.length();

  // Every prefix is a gallery and every gallery arises this way: re-check the
  // defining property of each prefix directly against the selector.
  for (std::size_t len = 0; len <= m; ++len) {
    ElemSet prefix_set;
    for (std::size_t t = 0; t < len; ++t) {
      Filter filter = p.filter_generated(prefix_set);
      ElemSet chosen = f(p.all() - filter);
      if (chosen.empty() || sel(filter) != through.at(t) || !chosen.contains(through.at(t)))
        return {false, std::nullopt,
                "prefix of length " + std::to_string(t) + " does not continue with '" +
                    p.name(through.at(t)) + "'"};
      prefix_set.add(through.at(t));
    }
    bool exhausted = f(p.all() - p.filter_generated(prefix_set)).empty();
    if (exhausted != (len == m))
      return {false, std::nullopt,
              "prefix of length " + std::to_string(len) +
                  (exhausted ? " is already through" : " is not through")};
  }
  return {};
}

namespace {

std::vector<ChoiceFunction> strict_lower_cfs(const ChoiceFunction& f, std::uint64_t cap) {
  std::vector<ChoiceFunction> out;
  for (ChoiceFunction& g : enumerate_conservative(f.lattice_ptr(), cap))
    if (g.subset_of(f) && !(g == f)) out.push_back(std::move(g));
  return out;
}

bool cf_empty(const ChoiceFunction& f) {
  for (ElemSet v : f.values())
    if (!v.empty()) return false;
  return true;
}

}  // namespace

bool is_join_irreducible(const ChoiceFunction& f, std::uint64_t cap) {
  if (!is_conservative(f)) throw Error(ErrorKind::NotConservative, conservative_failure(f));
  if (cf_empty(f)) return false;  // the unit of union
  auto lower = strict_lower_cfs(f, cap);
  return !(union_or_empty(f.lattice_ptr(), lower) == f);
}

std::optional<std::pair<ChoiceFunction, ChoiceFunction>> join_split(const ChoiceFunction& f,
                                                                    std::uint64_t cap) {
  if (!is_conservative(f)) throw Error(ErrorKind::NotConservative, conservative_failure(f));
  if (cf_empty(f)) return std::nullopt;
  std::vector<ChoiceFunction> cover = strict_lower_cfs(f, cap);
  if (!(union_or_empty(f.lattice_ptr(), cover) == f)) return std::nullopt;

  // Irredundant cover: drop parts whose removal keeps the union equal to f.
  for (std::size_t i = 0; i < cover.size();) {
    std::vector<ChoiceFunction> rest;
    for (std::size_t j = 0; j < cover.size(); ++j)
      if (j != i) rest.push_back(cover[j]);
    if (union_or_empty(f.lattice_ptr(), rest) == f)
      cover.erase(cover.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  // A cover by strictly smaller parts needs at least two of them.
  assert(cover.size() >= 2);
  std::vector<ChoiceFunction> rest(cover.begin() + 1, cover.end());
  return std::make_pair(cover.front(), union_cf(rest));
}

}  // namespace pcf
