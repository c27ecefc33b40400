#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "strata/composition.hpp"

using namespace strata;

namespace {

Composition C(std::vector<int> parts) { return Composition(std::move(parts)); }

// Exhaustive reachability oracle: closed = every chain of single steps
// stays inside. Used to cross-check the single-step closed() shortcut.
bool closed_by_bfs(const ThetaPoset& theta) {
  for (const Composition& w : theta.members()) {
    std::vector<Composition> frontier{w};
    std::set<Composition> seen{w};
    while (!frontier.empty()) {
      Composition cur = frontier.back();
      frontier.pop_back();
      for (const Composition& next : step_descendants(cur, theta.d())) {
        if (!theta.contains(next)) return false;
        if (seen.insert(next).second) frontier.push_back(next);
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("merge") {
  CHECK(merge(C({2, 1, 3}), 1) == C({3, 3}));
  CHECK(merge(C({1, 1}), 1) == C({2}));
  CHECK(merge(C({4}), 2) == C({4}));
  CHECK(merge(C({1, 2, 1}), 2) == C({1, 3}));
}

TEST_CASE("insert") {
  CHECK(insert(C({1, 1}), 1) == C({2, 1, 1}));
  CHECK(insert(C({1, 1}), 3) == C({1, 1, 2}));
  CHECK(insert(C({}), 1) == C({2}));
  CHECK(insert(C({1}), 3) == C({1}));
}

TEST_CASE("norms") {
  CHECK(C({}).norm() == 0);
  CHECK(C({1, 2, 1}).reduced_norm() == 1);
  CHECK(C({3, 1}).reduced_norm() == 2);
  CHECK(C({1, 2, 1}).str() == "(1 2 1)");
  CHECK(C({}).str() == "()");
}

TEST_CASE("step invariants") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::vector<int> parts(rng() % 5);
    for (int& p : parts) p = 1 + rng() % 3;
    Composition w(parts);
    for (int j = 1; j < w.length(); ++j) {
      Composition m = merge(w, j);
      CHECK(m.norm() == w.norm());
      CHECK(m.reduced_norm() == w.reduced_norm() + 1);
    }
    for (int j = 1; j <= w.length() + 1; ++j) {
      Composition m = insert(w, j);
      CHECK(m.norm() == w.norm() + 2);
      CHECK(m.reduced_norm() == w.reduced_norm() + 1);
    }
  }
}

TEST_CASE("precedes") {
  CHECK(precedes(C({2}), C({1, 1})));
  CHECK(precedes(C({4}), C({2, 2})));
  CHECK_FALSE(precedes(C({2}), C({2, 2})));
  CHECK(precedes(C({2, 2}), C({2, 2})));
  CHECK(precedes(C({6}), C({1, 1, 1, 1})));
  CHECK_FALSE(precedes(C({1, 1}), C({2})));
}

TEST_CASE("enumerate_omega") {
  auto cells = enumerate_omega(6, NormFilter::ReducedEq, 0);
  REQUIRE(cells.size() == 4);
  CHECK(cells[0] == C({}));
  CHECK(cells[3] == Composition::ones(6));
  CHECK(enumerate_omega(6, NormFilter::ReducedEq, 1).size() == 9);
  auto codim2 = enumerate_omega(6, NormFilter::ReducedEq, 2);
  CHECK(codim2.size() == 13);
  int norm4 = 0;
  for (const Composition& w : codim2) {
    if (w.norm() == 4) ++norm4;
  }
  CHECK(norm4 == 3);
}

TEST_CASE("closure") {
  ThetaPoset t = closure({C({2, 2})}, 4);
  CHECK(t.members() == CompositionSet{C({2, 2}), C({4})});

  ThetaPoset top = closure({C({6})}, 6);
  CHECK(top.members() == CompositionSet{C({6})});

  CHECK_THROWS_AS(closure({C({3})}, 6), PreconditionError);
}

TEST_CASE("closure of the extorsion seeds adds no codim-2 elements") {
  std::vector<Composition> seeds{C({3, 1}),       C({1, 3}),
                                 C({1, 3, 1, 1}), C({1, 1, 3, 1}),
                                 C({2, 2, 1, 1}), C({1, 2, 2, 1}),
                                 C({1, 1, 2, 2}), C({2, 1, 1, 2})};
  ThetaPoset theta = closure(seeds, 6);
  CHECK(theta.closed());
  CompositionSet slice;
  for (const Composition& w : theta.members()) {
    if (w.reduced_norm() == 2) slice.insert(w);
  }
  CHECK(slice == CompositionSet(seeds.begin(), seeds.end()));

  auto [in, out] = split_eq2(theta);
  CHECK(in.size() == 8);
  CHECK(out == CompositionSet{C({3, 1, 1, 1}), C({1, 1, 1, 3}), C({2, 2}),
                              C({2, 1, 2, 1}), C({1, 2, 1, 2})});
}

TEST_CASE("split_eq2 extremes") {
  ThetaPoset all = closure(enumerate_omega(6, NormFilter::ReducedGe, 2), 6);
  CHECK(split_eq2(all).second.empty());

  ThetaPoset ge3 = closure(enumerate_omega(6, NormFilter::ReducedGe, 3), 6);
  CHECK(split_eq2(ge3).second.size() == 13);

  ThetaPoset open(6, CompositionSet{C({3, 1})});
  CHECK_FALSE(open.closed());
  CHECK_THROWS_AS(split_eq2(open), PreconditionError);
}

TEST_CASE("closure is idempotent and closed; closed() matches BFS oracle") {
  std::mt19937 rng(11);
  auto pool = enumerate_omega(6, NormFilter::ReducedGe, 2);
  for (int t = 0; t < 50; ++t) {
    std::vector<Composition> seeds;
    for (const Composition& w : pool) {
      if (rng() % 3 == 0) seeds.push_back(w);
    }
    ThetaPoset theta = closure(seeds, 6);
    CHECK(theta.closed());
    CHECK(closed_by_bfs(theta));
    std::vector<Composition> members(theta.members().begin(),
                                     theta.members().end());
    CHECK(closure(members, 6).members() == theta.members());

    // A random strict subset that misses a descendant is seen by both.
    if (!seeds.empty()) {
      CompositionSet partial(seeds.begin(), seeds.end());
      ThetaPoset sub(6, partial);
      CHECK(sub.closed() == closed_by_bfs(sub));
    }
  }
}

TEST_CASE("precedes implies codimension increase") {
  auto pool = enumerate_omega(5, NormFilter::All, 0);
  for (const Composition& up : pool) {
    for (const Composition& lo : pool) {
      if (precedes(lo, up)) {
        CHECK(lo.reduced_norm() >= up.reduced_norm());
      }
    }
  }
}
