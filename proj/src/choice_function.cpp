#include "pcf/choice_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcf {

ChoiceFunction ChoiceFunction::from_table(
    LatticePtr lattice, std::span<const std::pair<ElemSet, ElemSet>> entries) {
  const IdealLattice& lat = *lattice;
  const Poset& p = lat.poset();
  const int m = lat.count();

  std::vector<ElemSet> values(static_cast<std::size_t>(m));
  std::vector<bool> assigned(static_cast<std::size_t>(m), false);

  for (const auto& [key, val] : entries) {
    int i = lat.index_of(key);  // throws NotIdeal for non-ideal keys
    if (assigned[static_cast<std::size_t>(i)])
      throw Error(ErrorKind::DuplicateKey, "'" + p.format_set(key) + "' listed twice");
    if (!val.subset_of(key))
      throw Error(ErrorKind::NotSelection, "f(" + p.format_set(key) + ") = " +
                                               p.format_set(val) + " is not a subset");
    if (!p.is_ideal(val))
      throw Error(ErrorKind::NotIdeal, "f(" + p.format_set(key) + ") = " +
                                           p.format_set(val) + " is not downward closed");
    values[static_cast<std::size_t>(i)] = val;
    assigned[static_cast<std::size_t>(i)] = true;
  }

  for (int i = 0; i < m; ++i) {
    if (assigned[static_cast<std::size_t>(i)]) continue;
    if (lat.ideal(i).empty()) continue;  // f({}) = {} is implied
    throw Error(ErrorKind::NotTotal, "no entry for ideal '" + p.format_set(lat.ideal(i)) + "'");
  }

  return ChoiceFunction(std::move(lattice), std::move(values));
}

ChoiceFunction ChoiceFunction::constant(LatticePtr lattice, ElemSet ideal) {
  const IdealLattice& lat = *lattice;
  if (!lat.poset().is_ideal(ideal) || !ideal.subset_of(lat.poset().all()))
    throw Error(ErrorKind::NotIdeal, "'" + lat.poset().format_set(ideal) + "' is not an ideal");
  std::vector<ElemSet> values;
  values.reserve(static_cast<std::size_t>(lat.count()));
  for (const Ideal& x : lat.ideals()) values.push_back(ideal & x);
  return ChoiceFunction(std::move(lattice), std::move(values));
}

ChoiceFunction ChoiceFunction::identity(LatticePtr lattice) {
  ElemSet all = lattice->poset().all();
  return constant(std::move(lattice), all);
}

bool ChoiceFunction::subset_of(const ChoiceFunction& other) const {
  if (!same_poset(other)) throw Error(ErrorKind::PosetMismatch, "different posets");
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (!values_[i].subset_of(other.values_[i])) return false;
  return true;
}

CheckReport check_heredity(const ChoiceFunction& f) {
  const int m = f.ideal_count();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const Ideal& A = f.ideal(a);
      const Ideal& B = f.ideal(b);
      if (!A.subset_of(B)) continue;
      ElemSet strays = (f.value(b) & A) - f.value(a);
      if (!strays.empty())
        return {false, Witness{A, B, strays.min_element()},
                "element chosen from B but dropped from A"};
    }
  return {};
}

CheckReport check_outcast(const ChoiceFunction& f) {
  const int m = f.ideal_count();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const Ideal& A = f.ideal(a);
      const Ideal& B = f.ideal(b);
      if (!A.subset_of(B) || !f.value(b).subset_of(A)) continue;
      if (f.value(a) != f.value(b))
        return {false, Witness{A, B, -1}, "f(A) differs from f(B) although f(B) <= A <= B"};
    }
  return {};
}

CheckReport check_single_condition(const ChoiceFunction& f) {
  const int m = f.ideal_count();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const Ideal& A = f.ideal(a);
      const Ideal& B = f.ideal(b);
      if (!f.value(a).subset_of(B)) continue;
      ElemSet strays = (f.value(b) & A) - f.value(a);
      if (!strays.empty())
        return {false, Witness{A, B, strays.min_element()},
                "f(A) <= B yet f(B) & A is not contained in f(A)"};
    }
  return {};
}

CheckReport check_path_independence(const ChoiceFunction& f) {
  const int m = f.ideal_count();
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      const Ideal& X = f.ideal(x);
      const Ideal& Y = f.ideal(y);
      if (f(X | Y) != f(f.value(x) | f.value(y)))
        return {false, Witness{X, Y, -1}, "f(X | Y) differs from f(f(X) | f(Y))"};
    }
  return {};
}

CheckReport check_idempotent(const ChoiceFunction& f) {
  const int m = f.ideal_count();
  for (int x = 0; x < m; ++x) {
    ElemSet v = f.value(x);
    if (f(v) != v) return {false, Witness{f.ideal(x), v, -1}, "f(f(X)) differs from f(X)"};
  }
  return {};
}

bool is_conservative(const ChoiceFunction& f) {
  return check_heredity(f).pass && check_outcast(f).pass;
}

bool witness_violates(Law law, const ChoiceFunction& f, const Witness& w) {
  switch (law) {
    case Law::Heredity:
      return w.element >= 0 && w.a.subset_of(w.b) && f(w.b).contains(w.element) &&
             w.a.contains(w.element) && !f(w.a).contains(w.element);
    case Law::Outcast:
      return w.a.subset_of(w.b) && f(w.b).subset_of(w.a) && f(w.a) != f(w.b);
    case Law::SingleCondition:
      return w.element >= 0 && f(w.a).subset_of(w.b) && f(w.b).contains(w.element) &&
             w.a.contains(w.element) && !f(w.a).contains(w.element);
    case Law::PathIndependence:
      return f(w.a | w.b) != f(f(w.a) | f(w.b));
    case Law::Idempotence:
      return f(w.a) == w.b && f(w.b) != w.b;
  }
  return false;
}

ChoiceFunction union_cf(std::span<const ChoiceFunction> fs) {
  if (fs.empty()) throw std::invalid_argument("union_cf: empty list");
  for (const ChoiceFunction& f : fs)
    if (!f.same_poset(fs.front())) throw Error(ErrorKind::PosetMismatch, "different posets");
  std::vector<ElemSet> values(fs.front().values_.begin(), fs.front().values_.end());
  for (const ChoiceFunction& f : fs.subspan(1))
    for (std::size_t i = 0; i < values.size(); ++i) values[i] |= f.values_[i];
  return ChoiceFunction(fs.front().lattice_, std::move(values));
}

std::uint64_t candidate_table_count(const IdealLattice& lattice, std::uint64_t cap) {
  unsigned __int128 product = 1;
  for (const Ideal& x : lattice.ideals()) {
    std::uint64_t subs = 0;
    for (const Ideal& y : lattice.ideals())
      if (y.subset_of(x)) ++subs;
    product *= subs;
    if (product > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(product);
}

// Depth-first enumeration over candidate tables, assigning values in the
// lattice's size-then-lex ideal order. A law violation among assigned entries
// can never be repaired by later assignments, so pruning on the partial table
// keeps exactly the tables the naive generate-and-filter loop would keep.
class TableEnumerator {
 public:
  TableEnumerator(const LatticePtr& lattice, bool path_independent)
      : lattice_(lattice), lat_(*lattice), pi_(path_independent) {
    const int m = lat_.count();
    candidates_.resize(static_cast<std::size_t>(m));
    subs_.resize(static_cast<std::size_t>(m));
    union_pairs_.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j)
        if (lat_.ideal(j).subset_of(lat_.ideal(i))) {
          candidates_[static_cast<std::size_t>(i)].push_back(lat_.ideal(j));
          if (j != i) subs_[static_cast<std::size_t>(i)].push_back(j);
        }
      if (pi_)
        for (int x = 0; x <= i; ++x)
          for (int y = x; y <= i; ++y)
            if ((lat_.ideal(x) | lat_.ideal(y)) == lat_.ideal(i))
              union_pairs_[static_cast<std::size_t>(i)].emplace_back(x, y);
    }
    values_.assign(static_cast<std::size_t>(m), ElemSet());
  }

  std::vector<ChoiceFunction> run() {
    results_.clear();
    descend(0);
    return std::move(results_);
  }

 private:
  void descend(int i) {
    if (i == lat_.count()) {
      results_.push_back(ChoiceFunction(lattice_, values_));
      return;
    }
    for (ElemSet v : candidates_[static_cast<std::size_t>(i)]) {
      if (pi_ ? admits_pi(i, v) : admits_conservative(i, v)) {
        values_[static_cast<std::size_t>(i)] = v;
        descend(i + 1);
      }
    }
    values_[static_cast<std::size_t>(i)] = ElemSet();
  }

  // Heredity and outcast between the new entry (B = ideal i, f(B) = v) and
  // every assigned proper sub-ideal A. Pairs with B as the smaller ideal are
  // handled later, when the larger ideal is assigned.
  bool admits_conservative(int i, ElemSet v) const {
    for (int j : subs_[static_cast<std::size_t>(i)]) {
      const Ideal& A = lat_.ideal(j);
      ElemSet fa = values_[static_cast<std::size_t>(j)];
      if (!(v & A).subset_of(fa)) return false;          // heredity
      if (v.subset_of(A) && fa != v) return false;       // outcast
    }
    return true;
  }

  // Path-independence instances whose union equals ideal i. Both operands and
  // f(f(X) | f(Y)) are already assigned (or are the entry being placed).
  bool admits_pi(int i, ElemSet v) const {
    for (auto [x, y] : union_pairs_[static_cast<std::size_t>(i)]) {
      ElemSet fx = x == i ? v : values_[static_cast<std::size_t>(x)];
      ElemSet fy = y == i ? v : values_[static_cast<std::size_t>(y)];
      int w = lat_.index_of(fx | fy);
      ElemSet fw = w == i ? v : values_[static_cast<std::size_t>(w)];
      if (fw != v) return false;
    }
    return true;
  }

  LatticePtr lattice_;
  const IdealLattice& lat_;
  bool pi_;
  std::vector<std::vector<ElemSet>> candidates_;
  std::vector<std::vector<int>> subs_;
  std::vector<std::vector<std::pair<int, int>>> union_pairs_;
  std::vector<ElemSet> values_;
  std::vector<ChoiceFunction> results_;
};

std::vector<ChoiceFunction> enumerate_conservative(const LatticePtr& lattice,
                                                   std::uint64_t cap) {
  if (candidate_table_count(*lattice, cap) > cap)
    throw Error(ErrorKind::CapExceeded,
                "candidate table count exceeds cap " + std::to_string(cap));
  return TableEnumerator(lattice, /*path_independent=*/false).run();
}

std::vector<ChoiceFunction> enumerate_path_independent(const LatticePtr& lattice,
                                                       std::uint64_t cap) {
  if (candidate_table_count(*lattice, cap) > cap)
    throw Error(ErrorKind::CapExceeded,
                "candidate table count exceeds cap " + std::to_string(cap));
  return TableEnumerator(lattice, /*path_independent=*/true).run();
}

}  // namespace pcf
