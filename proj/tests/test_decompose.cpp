#include <stdexcept>
#include <utility>
#include <vector>

#include "corpus.hpp"
#include "doctest_util.hpp"
#include "pcf/decompose.hpp"

using namespace pcf;
using corpus::make_antichain;
using corpus::make_chain;
using corpus::make_poset;
using corpus::make_v;

namespace {

const ElemSet E;
const ElemSet A0 = ElemSet::of({0});
const ElemSet A1 = ElemSet::of({1});
const ElemSet A01 = ElemSet::of({0, 1});

Sequence seq(const Poset& p, std::vector<int> items) {
  return Sequence::from_indices(p, std::move(items));
}

LatticePtr pair2() { return IdealLattice::build(make_antichain(2)); }

ChoiceFunction fab(const LatticePtr& lat) { return elementary_cf(lat, seq(lat->poset(), {0, 1})); }

}  // namespace

TEST_CASE("witness sequence: frozen traces") {
  LatticePtr lat = pair2();
  ChoiceFunction f = fab(lat);
  // f(P) = {a} misses b, so a enters first; then B_1 = {b} and b is chosen.
  CHECK(witness_sequence(f, A1, 1) == seq(lat->poset(), {0, 1}));
  // Shortcut: the element is already chosen from P.
  ChoiceFunction id = ChoiceFunction::identity(lat);
  CHECK(witness_sequence(id, A01, 0) == seq(lat->poset(), {0}));
  CHECK(witness_sequence(id, A01, 1) == seq(lat->poset(), {1}));

  CHECK_KIND(witness_sequence(f, A01, 1), ElementNotChosen);  // b not in f({a,b})
  LatticePtr c2 = IdealLattice::build(make_poset(2, {{0, 1}}));
  ChoiceFunction bad = ChoiceFunction::from_table(
      c2, std::vector<std::pair<ElemSet, ElemSet>>{{E, E}, {A0, E}, {A01, A01}});
  CHECK_KIND(witness_sequence(bad, A01, 0), NotConservative);
}

TEST_CASE("witness sequence: proved invariants hold") {
  for (const Poset& p : corpus::small_posets(3)) {
    LatticePtr lat = IdealLattice::build(p);
    for (const ChoiceFunction& f : enumerate_conservative(lat))
      for (int i = 0; i < lat->count(); ++i)
        for (int x : f.value(i).members()) {
          Sequence a = witness_sequence(f, lat->ideal(i), x);
          CHECK(p.is_antichain(a.support()));
          CHECK(is_compatible(a, f));
          CHECK(eval_elementary(p, a, lat->ideal(i)).contains(x));
        }
  }
}

TEST_CASE("decompose: frozen outputs") {
  LatticePtr c2 = IdealLattice::build(make_poset(2, {{0, 1}}));
  Decomposition constant = decompose(ChoiceFunction::constant(c2, A0));
  CHECK(constant.sequences == std::vector<Sequence>{seq(c2->poset(), {0})});

  LatticePtr lat = pair2();
  Decomposition id = decompose(ChoiceFunction::identity(lat));
  CHECK(id.sequences == std::vector<Sequence>{seq(lat->poset(), {0}), seq(lat->poset(), {1})});

  CHECK(decompose(ChoiceFunction::empty(lat)).sequences.empty());

  ChoiceFunction bad = ChoiceFunction::from_table(
      c2, std::vector<std::pair<ElemSet, ElemSet>>{{E, E}, {A0, E}, {A01, A01}});
  CHECK_KIND(decompose(bad), NotConservative);
}

TEST_CASE("decompose then verify, everywhere") {
  for (const Poset& p : corpus::small_posets(3)) {
    LatticePtr lat = IdealLattice::build(p);
    for (const ChoiceFunction& f : enumerate_conservative(lat)) {
      Decomposition d = decompose(f);
      CHECK(verify_decomposition(f, d));
      for (const Sequence& a : d.sequences) {
        CHECK(p.is_antichain(a.support()));
        CHECK(is_compatible(a, f));
      }
    }
  }
}

TEST_CASE("verify rejects wrong decompositions") {
  LatticePtr lat = pair2();
  ChoiceFunction id = ChoiceFunction::identity(lat);
  const Poset& p = lat->poset();

  Decomposition narrow{lat, {seq(p, {0})}};  // covers a but not b
  CheckReport r = verify_decomposition(id, narrow);
  REQUIRE(!r);
  CHECK(r.witness->a == A1);  // first ideal where the union disagrees
  CHECK(r.witness->b == E);   // what the union produces there

  Decomposition incompatible{lat, {seq(p, {0}), seq(p, {1}), seq(p, {1, 0})}};
  CHECK(!verify_decomposition(fab(lat), incompatible));

  LatticePtr c2 = IdealLattice::build(make_poset(2, {{0, 1}}));
  Decomposition chained{c2, {seq(c2->poset(), {0, 1})}};  // x,y comparable: not AC
  CHECK(!verify_decomposition(ChoiceFunction::identity(c2), chained));

  Decomposition foreign{c2, {seq(c2->poset(), {0})}};
  CHECK_KIND(verify_decomposition(id, foreign), PosetMismatch);
}

TEST_CASE("minimize drops redundant sequences") {
  LatticePtr lat = pair2();
  const Poset& p = lat->poset();
  ChoiceFunction id = ChoiceFunction::identity(lat);

  Decomposition fat{lat, {seq(p, {0}), seq(p, {0, 1}), seq(p, {1, 0})}};
  REQUIRE(verify_decomposition(id, fat));
  Decomposition slim = minimize(id, fat);
  CHECK(slim.sequences == std::vector<Sequence>{seq(p, {0, 1}), seq(p, {1, 0})});
  CHECK(verify_decomposition(id, slim));
  CHECK(minimize(id, slim).sequences == slim.sequences);  // already minimal

  Decomposition wrong{lat, {seq(p, {0})}};
  CHECK_THROWS_AS(minimize(id, wrong), std::invalid_argument);
}

TEST_CASE("minimized decompositions still verify") {
  for (const Poset& p : corpus::small_posets(3)) {
    LatticePtr lat = IdealLattice::build(p);
    for (const ChoiceFunction& f : enumerate_conservative(lat)) {
      Decomposition d = minimize(f, decompose(f));
      CHECK(verify_decomposition(f, d));
      // Irredundant: no single sequence can be dropped any further.
      for (std::size_t skip = 0; skip < d.sequences.size(); ++skip) {
        Decomposition rest{lat, {}};
        for (std::size_t j = 0; j < d.sequences.size(); ++j)
          if (j != skip) rest.sequences.push_back(d.sequences[j]);
        CHECK(!verify_decomposition(f, rest));
      }
    }
  }
}

TEST_CASE("galleries: frozen traces") {
  LatticePtr lat = pair2();
  ChoiceFunction id = ChoiceFunction::identity(lat);
  CHECK(build_gallery(id, min_index_selector(id)) == seq(lat->poset(), {0, 1}));

  LatticePtr c2 = IdealLattice::build(make_poset(2, {{0, 1}}));
  ChoiceFunction idc = ChoiceFunction::identity(c2);
  CHECK(build_gallery(idc, min_index_selector(idc)) == seq(c2->poset(), {0}));

  CHECK(build_gallery(ChoiceFunction::empty(lat), min_index_selector(ChoiceFunction::empty(lat)))
            .empty());

  // A selector stepping outside f's choice is rejected.
  ChoiceFunction f = fab(lat);
  Selector wild = [](Filter) { return 1; };  // b is never in f(P - F) first
  CHECK_KIND(build_gallery(f, wild), SelectorViolation);
}

TEST_CASE("galleries under a fixed selector form a chain") {
  LatticePtr lat = pair2();
  ChoiceFunction id = ChoiceFunction::identity(lat);
  CHECK(galleries_are_chain(id, min_index_selector(id)));

  for (const Poset& p : corpus::small_posets(3)) {
    LatticePtr l = IdealLattice::build(p);
    for (const ChoiceFunction& f : enumerate_conservative(l))
      CHECK(galleries_are_chain(f, min_index_selector(f)));
  }
}

TEST_CASE("capturing selector reaches the marked element") {
  LatticePtr lat = pair2();
  ChoiceFunction f = fab(lat);
  Gallery u = build_gallery(f, capturing_selector(f, A1, 1));
  CHECK(u == seq(lat->poset(), {0, 1}));
  CHECK(eval_elementary(lat->poset(), u, A1).contains(1));

  CHECK_KIND(capturing_selector(f, A01, 1), ElementNotChosen);

  for (const Poset& p : corpus::small_posets(3)) {
    LatticePtr l = IdealLattice::build(p);
    for (const ChoiceFunction& g : enumerate_conservative(l))
      for (int i = 0; i < l->count(); ++i)
        for (int x : g.value(i).members()) {
          Gallery through = build_gallery(g, capturing_selector(g, l->ideal(i), x));
          CHECK(eval_elementary(p, through, l->ideal(i)).contains(x));
        }
  }
}

TEST_CASE("join irreducibility: frozen verdicts") {
  LatticePtr lat = pair2();
  CHECK(is_join_irreducible(fab(lat)));
  CHECK(!is_join_irreducible(ChoiceFunction::identity(lat)));
  CHECK(!is_join_irreducible(ChoiceFunction::empty(lat)));

  LatticePtr c2 = IdealLattice::build(make_poset(2, {{0, 1}}));
  CHECK(is_join_irreducible(ChoiceFunction::constant(c2, A0)));

  ChoiceFunction bad = ChoiceFunction::from_table(
      c2, std::vector<std::pair<ElemSet, ElemSet>>{{E, E}, {A0, E}, {A01, A01}});
  CHECK_KIND(is_join_irreducible(bad), NotConservative);
  CHECK_KIND(is_join_irreducible(fab(IdealLattice::build(make_antichain(4), 65536))),
             CapExceeded);
}

TEST_CASE("join splits") {
  LatticePtr lat = pair2();
  auto split = join_split(ChoiceFunction::identity(lat));
  REQUIRE(split.has_value());
  ChoiceFunction expect_ab = fab(lat);
  ChoiceFunction expect_ba = elementary_cf(lat, seq(lat->poset(), {1, 0}));
  bool straight = split->first == expect_ab && split->second == expect_ba;
  bool swapped = split->first == expect_ba && split->second == expect_ab;
  CHECK((straight || swapped));

  CHECK(!join_split(fab(lat)).has_value());
  CHECK(!join_split(ChoiceFunction::empty(lat)).has_value());
}

TEST_CASE("irreducibility agrees with the naive oracle") {
  for (const Poset& p : corpus::small_posets(3)) {
    LatticePtr lat = IdealLattice::build(p);
    std::vector<ChoiceFunction> cons = corpus::naive_tables(lat, corpus::naive_conservative);
    for (const ChoiceFunction& f : cons) {
      // Union every strictly smaller conservative table, independently.
      ChoiceFunction below = ChoiceFunction::empty(lat);
      for (const ChoiceFunction& g : cons) {
        if (!g.subset_of(f) || g == f) continue;
        std::vector<ChoiceFunction> two{below, g};
        below = union_cf(two);
      }
      bool expect = !(f == ChoiceFunction::empty(lat)) && !(below == f);
      CHECK(is_join_irreducible(f) == expect);

      auto split = join_split(f);
      CHECK(split.has_value() == (!expect && !(f == ChoiceFunction::empty(lat))));
      if (split) {
        std::vector<ChoiceFunction> parts{split->first, split->second};
        CHECK(union_cf(parts) == f);
        CHECK(split->first.subset_of(f));
        CHECK(split->second.subset_of(f));
        CHECK(!(split->first == f));
        CHECK(!(split->second == f));
      }
    }
  }
}
