#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "strata/simplify.hpp"

using namespace strata;

namespace {

Composition C(std::vector<int> parts) { return Composition(std::move(parts)); }

ThetaPoset extorsion() {
  return closure({C({3, 1}), C({1, 3}), C({1, 3, 1, 1}), C({1, 1, 3, 1}),
                  C({2, 2, 1, 1}), C({1, 2, 2, 1}), C({1, 1, 2, 2}),
                  C({2, 1, 1, 2})},
                 6);
}

IntegerMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntegerMatrix m(static_cast<int>(rows.size()),
                  rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

ThetaPoset random_theta(std::mt19937& rng, int d) {
  auto pool = enumerate_omega(d, NormFilter::ReducedGe, 2);
  std::vector<Composition> seeds;
  for (const Composition& w : pool) {
    if (rng() % 3 == 0) seeds.push_back(w);
  }
  return closure(seeds, d);
}

}  // namespace

TEST_CASE("smith normal form oracles") {
  CHECK(smith_normal_form(from_rows({{2}})) == std::vector<BigInt>{2});
  CHECK(smith_normal_form(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) ==
        std::vector<BigInt>{1, 1, 1});
  CHECK(smith_normal_form(from_rows({{2, 4}, {6, 8}})) ==
        std::vector<BigInt>{2, 4});
  CHECK(smith_normal_form(from_rows({{0, 0}, {0, 0}})) ==
        std::vector<BigInt>{0, 0});
  CHECK(smith_normal_form(from_rows({{6, 4}, {4, 6}})) ==
        std::vector<BigInt>{2, 10});
}

TEST_CASE("smith normal form is invariant under permutations and sign flips") {
  std::mt19937 rng(5);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + rng() % 3;
    std::vector<std::vector<long long>> rows(n, std::vector<long long>(n));
    for (auto& row : rows) {
      for (auto& x : row) x = static_cast<long long>(rng() % 11) - 5;
    }
    auto base = smith_normal_form(from_rows(rows));

    auto shuffled = rows;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& row : shuffled) {
      if (rng() % 2) {
        for (auto& x : row) x = -x;
      }
    }
    CHECK(smith_normal_form(from_rows(shuffled)) == base);

    // Divisibility chain.
    for (size_t k = 0; k + 1 < base.size(); ++k) {
      if (base[k] != 0) CHECK(base[k + 1] % base[k] == 0);
    }
  }
}

TEST_CASE("extorsion simplification") {
  Presentation p = presentation(extorsion());
  SimplifiedPresentation s = simplify(p);
  CHECK(s.generators ==
        std::vector<std::pair<int, int>>{{1, 1}, {2, 2}});
  REQUIRE(s.relators.size() == 1);
  REQUIRE(s.relators[0].size() == 2);
  CHECK(s.relators[0][0].i == 1);
  CHECK(s.relators[0][0].j == 1);
  CHECK(s.relators[0][0] == s.relators[0][1]);

  CHECK_FALSE(certify_free(s).has_value());
  AbelianInvariants ab = abelianize(s);
  CHECK(ab.torsion == std::vector<long long>{2});
  CHECK(abelianize(p).torsion == std::vector<long long>{2});
}

TEST_CASE("free cases") {
  ThetaPoset ge2 = closure(enumerate_omega(6, NormFilter::ReducedGe, 2), 6);
  SimplifiedPresentation s = simplify(presentation(ge2));
  CHECK(certify_free(s) == 6);
  AbelianInvariants ab = abelianize(s);
  CHECK(ab.free_rank == 6);
  CHECK(ab.torsion.empty());

  ThetaPoset ge3 = closure(enumerate_omega(6, NormFilter::ReducedGe, 3), 6);
  SimplifiedPresentation t = simplify(presentation(ge3));
  CHECK(t.generators.empty());
  CHECK(t.relators.empty());
  CHECK(certify_free(t) == 0);
}

TEST_CASE("replay and idempotence") {
  Presentation p = presentation(extorsion());
  SimplifiedPresentation s = simplify(p);
  SimplifiedPresentation r = replay(p, s.log);
  CHECK(r.generators == s.generators);
  CHECK(r.relators == s.relators);
  CHECK(r.log == s.log);

  // Re-simplifying the residual presentation changes nothing.
  Presentation residual;
  residual.d = p.d;
  residual.generators = s.generators;
  residual.relators = s.relators;
  SimplifiedPresentation again = simplify(residual);
  CHECK(again.same_shape(s));
}

TEST_CASE("Tietze invariance of the abelianization") {
  std::mt19937 rng(17);
  for (int t = 0; t < 60; ++t) {
    const int d = 6 + t % 3;
    Presentation p = presentation(random_theta(rng, d));
    SimplifiedPresentation s = simplify(p);
    CHECK(abelianize(p) == abelianize(s));
    if (auto rank = certify_free(s)) {
      AbelianInvariants ab = abelianize(s);
      CHECK(ab.free_rank == *rank);
      CHECK(ab.torsion.empty());
    }
    // No residual relator is reducible or of identification shape.
    for (const Relator& r : s.relators) {
      REQUIRE(!r.empty());
      CHECK(r.size() != 1);
      if (r.size() == 2) CHECK(std::make_pair(r[0].i, r[0].j) ==
                               std::make_pair(r[1].i, r[1].j));
    }
  }
}

TEST_CASE("empty presentation") {
  Presentation p;
  p.d = 2;
  AbelianInvariants ab = abelianize(p);
  CHECK(ab.free_rank == 0);
  CHECK(ab.torsion.empty());
  CHECK(certify_free(simplify(p)) == 0);
}
