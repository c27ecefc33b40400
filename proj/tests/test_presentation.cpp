#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strata/presentation.hpp"

using namespace strata;

namespace {

Composition C(std::vector<int> parts) { return Composition(std::move(parts)); }

ThetaPoset extorsion() {
  return closure({C({3, 1}), C({1, 3}), C({1, 3, 1, 1}), C({1, 1, 3, 1}),
                  C({2, 2, 1, 1}), C({1, 2, 2, 1}), C({1, 1, 2, 2}),
                  C({2, 1, 1, 2})},
                 6);
}

ThetaPoset single3(int d) {
  std::vector<Composition> seeds;
  for (const Composition& w : enumerate_omega(d, NormFilter::ReducedEq, 2)) {
    int threes = 0;
    bool ok = true;
    for (int p : w.parts()) {
      if (p == 3) {
        ++threes;
      } else if (p != 1) {
        ok = false;
      }
    }
    if (ok && threes == 1) seeds.push_back(w);
  }
  return closure(seeds, d);
}

}  // namespace

TEST_CASE("generators") {
  CHECK(generators(6) == std::vector<std::pair<int, int>>{
                             {1, 1}, {1, 3}, {2, 0}, {2, 2}, {3, 1}, {4, 0}});
  CHECK(generators(5) ==
        std::vector<std::pair<int, int>>{{1, 0}, {1, 2}, {2, 1}, {3, 0}});
  CHECK(generators(2).empty());
}

TEST_CASE("type (3) relators") {
  CHECK(relation_type3(C({3, 1, 1, 1})) == Relator{{1, 3, -1}});
  CHECK(relation_type3(C({1, 1, 1, 3})) == Relator{{3, 1, 1}, {4, 0, -1}});
  CHECK(relation_type3(C({1, 3, 1, 1})) == Relator{{1, 3, 1}, {2, 2, -1}});
  CHECK(relation_type3(C({3, 1, 1, 1}), true) ==
        Relator{{0, 4, 1}, {1, 3, -1}});
  CHECK_THROWS_AS(relation_type3(C({2, 2})), std::invalid_argument);
}

TEST_CASE("type (22) relators") {
  CHECK(relation_type22(C({2, 2})) == Relator{{2, 0, 1}});
  CHECK(relation_type22(C({2, 1, 2, 1})) == Relator{{1, 1, 1}, {3, 1, 1}});
  CHECK(relation_type22(C({1, 2, 1, 2})) ==
        Relator{{2, 0, 1}, {4, 0, 1}, {1, 3, -1}, {1, 1, -1}});
  CHECK(relation_type22(C({2, 2}), true) ==
        Relator{{0, 0, 1}, {2, 0, 1}, {0, 2, -1}, {0, 0, -1}});
  CHECK_THROWS_AS(relation_type22(C({3, 1})), std::invalid_argument);
}

TEST_CASE("free presentation for the full codim-2 avoidance") {
  ThetaPoset all = closure(enumerate_omega(6, NormFilter::ReducedGe, 2), 6);
  Presentation p = presentation(all);
  CHECK(p.generators.size() == 6);
  CHECK(p.relators.empty());
}

TEST_CASE("extorsion presentation") {
  Presentation p = presentation(extorsion());
  CHECK(p.generators == generators(6));
  REQUIRE(p.relators.size() == 5);
  // Complement order: (2,2) then norm-6 elements lexicographically.
  CHECK(p.relators[0] == Relator{{2, 0, 1}});
  CHECK(p.relators[1] == Relator{{3, 1, 1}, {4, 0, -1}});
  CHECK(p.relators[2] ==
        Relator{{2, 0, 1}, {4, 0, 1}, {1, 3, -1}, {1, 1, -1}});
  CHECK(p.relators[3] == Relator{{1, 1, 1}, {3, 1, 1}});
  CHECK(p.relators[4] == Relator{{1, 3, -1}});
  int type3 = 0, type22 = 0;
  for (RelatorType t : p.provenance) {
    (t == RelatorType::Type3 ? type3 : type22) += 1;
  }
  CHECK(type3 == 2);
  CHECK(type22 == 3);
}

TEST_CASE("one relator per avoided codim-2 stratum") {
  ThetaPoset ge3 = closure(enumerate_omega(6, NormFilter::ReducedGe, 3), 6);
  Presentation p = presentation(ge3);
  CHECK(p.generators.size() == 6);
  CHECK(p.relators.size() == 13);
}

TEST_CASE("presentation preconditions") {
  ThetaPoset open(6, CompositionSet{C({3, 1})});
  CHECK_THROWS_AS(presentation(open), PreconditionError);
  ThetaPoset wall = closure({C({2, 1, 1, 1, 1})}, 6);  // codim-1 member
  CHECK_THROWS_AS(presentation(wall), PreconditionError);
}

TEST_CASE("pi1 of the compactified locus") {
  CHECK(pi1_compactified(ThetaPoset(6, CompositionSet{C({6})})) ==
        Pi1Compactified::InfiniteCyclic);
  auto all = enumerate_omega(6);
  CHECK(pi1_compactified(
            ThetaPoset(6, CompositionSet(all.begin(), all.end()))) ==
        Pi1Compactified::Trivial);
  CHECK(pi1_compactified(extorsion()) == Pi1Compactified::Trivial);
  ThetaPoset open(6, CompositionSet{C({3, 1})});
  CHECK_THROWS_AS(pi1_compactified(open), PreconditionError);
}

TEST_CASE("freeness classification") {
  CHECK(classify_freeness(single3(6)) == FreenessClass::CaseII);
  CHECK(classify_freeness(extorsion()) == FreenessClass::Unclassified);
  ThetaPoset ge3 = closure(enumerate_omega(6, NormFilter::ReducedGe, 3), 6);
  CHECK(classify_freeness(ge3) == FreenessClass::ShortcutGe3);
  ThetaPoset ge2 = closure(enumerate_omega(6, NormFilter::ReducedGe, 2), 6);
  CHECK(classify_freeness(ge2) == FreenessClass::CaseI);
}

TEST_CASE("stabilize") {
  ThetaPoset t8 = stabilize(extorsion(), 8);
  CHECK(t8.d() == 8);
  CHECK(t8.closed());
  CompositionSet slice;
  for (const Composition& w : t8.members()) {
    if (w.reduced_norm() == 2) slice.insert(w);
  }
  CHECK(slice == CompositionSet{C({3, 1}), C({1, 3}), C({1, 3, 1, 1}),
                                C({1, 1, 3, 1}), C({2, 2, 1, 1}),
                                C({1, 2, 2, 1}), C({1, 1, 2, 2}),
                                C({2, 1, 1, 2})});

  ThetaPoset top = stabilize(ThetaPoset(6, CompositionSet{C({6})}), 8);
  CHECK(top.contains(C({6})));
  CHECK(top.contains(C({8})));
  CHECK(top.closed());

  CHECK(stabilize(extorsion(), 6).members() == extorsion().members());
  CHECK_THROWS_AS(stabilize(extorsion(), 7), PreconditionError);
  CHECK_THROWS_AS(stabilize(extorsion(), 4), PreconditionError);
}

TEST_CASE("free product split") {
  // Extorsion seeds plus the full norm-8 codim-2 slice at d=10.
  ThetaPoset ext_theta = extorsion();
  std::vector<Composition> seeds(ext_theta.members().begin(),
                                 ext_theta.members().end());
  for (const Composition& w : enumerate_omega(10, NormFilter::ReducedEq, 2)) {
    if (w.norm() == 8) seeds.push_back(w);
  }
  ThetaPoset theta = closure(seeds, 10);
  auto split = free_product_split(theta);
  REQUIRE(split.has_value());
  CHECK(split->d_prime == 8);
  Presentation ext = presentation(extorsion());
  CHECK(split->low.generators == ext.generators);
  CHECK(split->low.relators == ext.relators);

  ThetaPoset ge2 = closure(enumerate_omega(8, NormFilter::ReducedGe, 2), 8);
  auto free_split = free_product_split(ge2);
  REQUIRE(free_split.has_value());
  CHECK(free_split->low.relators.empty());
  CHECK(free_split->high.relators.empty());

  CHECK_FALSE(free_product_split(extorsion()).has_value());
}

TEST_CASE("critical points wrapper") {
  Presentation a = critical_presentation(extorsion());
  Presentation b = presentation(extorsion());
  CHECK(a.generators == b.generators);
  CHECK(a.relators == b.relators);
}

TEST_CASE("relators expand to admissible loop words") {
  for (const ThetaPoset& theta :
       {extorsion(), single3(6),
        closure(enumerate_omega(6, NormFilter::ReducedGe, 3), 6)}) {
    Presentation p = presentation(theta);
    for (const Relator& r : p.relators) {
      CHECK(is_admissible(expand_relator(r, p.d), p.d));
    }
  }
}
