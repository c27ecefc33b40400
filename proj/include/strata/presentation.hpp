#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "strata/composition.hpp"
#include "strata/word.hpp"

namespace strata {

// One occurrence of a generator symbol gamma(i,j)^exp inside a relator.
struct GammaSym {
  int i = 0;
  int j = 0;
  int exp = 1;  // +1 or -1

  auto operator<=>(const GammaSym&) const = default;
};

using Relator = std::vector<GammaSym>;

enum class RelatorType { Type3, Type22 };

struct Presentation {
  int d = 0;
  std::vector<std::pair<int, int>> generators;  // indices with i >= 1, sorted
  std::vector<Relator> relators;
  std::vector<RelatorType> provenance;  // parallel to relators
};

// Minimal generating set: all (i,j) with i >= 1, i+j <= d-2, i+j = d mod 2.
std::vector<std::pair<int, int>> generators(int d);

// Relator imposed by the codimension-2 stratum (1^i, 3, 1^j):
//   gamma(i,j+1) gamma(i+1,j)^-1.
// Symbols gamma(0,*) are elided unless keep_dummies is set.
Relator relation_type3(const Composition& w, bool keep_dummies = false);

// Relator imposed by (1^i, 2, 1^j, 2, 1^l):
//   gamma(i+j,l) gamma(i+j+2,l) gamma(i,j+l+2)^-1 gamma(i,j+l)^-1.
Relator relation_type22(const Composition& w, bool keep_dummies = false);

// Presentation of the fundamental group of the complement of the Theta
// locus: one relator per codimension-2 stratum outside Theta. Requires a
// closed poset whose members all have reduced norm >= 2.
Presentation presentation(const ThetaPoset& theta);

enum class Pi1Compactified { Trivial, InfiniteCyclic };

// pi1 of the one-point compactification of the Theta locus itself.
Pi1Compactified pi1_compactified(const ThetaPoset& theta);

enum class FreenessClass { ShortcutGe3, CaseI, CaseII, Unclassified };

FreenessClass classify_freeness(const ThetaPoset& theta);

// Smallest closed poset at a larger degree of the same parity containing
// the members of Theta.
ThetaPoset stabilize(const ThetaPoset& theta, int d_target);

struct FreeProductSplit {
  int d_prime = 0;
  Presentation low;
  Presentation high;
};

// If every codimension-2 stratum of norm d' < d lies in Theta, the group
// splits as a free product along that norm level.
std::optional<FreeProductSplit> free_product_split(const ThetaPoset& theta);

// Same presentation, describing degree d+1 polynomials constrained
// through their derivatives.
Presentation critical_presentation(const ThetaPoset& theta);

// Expand each symbol through gamma() and reduce; used to check that
// relators are admissible loop words.
Word expand_relator(const Relator& r, int d);

}  // namespace strata
