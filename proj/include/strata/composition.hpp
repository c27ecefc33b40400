#pragma once

#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace strata {

// Exit-code-3 class of failures: a structural precondition does not hold
// (non-closed poset, composition outside the ambient pattern set, ...).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exit-code-4 class of failures: a numeric computation could not be
// resolved at the requested tolerance.
struct ResolutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Multiplicity pattern of the real roots of a monic polynomial, parts
// listed in increasing root order. The empty pattern () is a valid value.
class Composition {
public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  // (1,...,1) with k parts; k = 0 gives ().
  static Composition ones(int k);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int norm() const;
  int reduced_norm() const { return norm() - length(); }
  bool all_ones() const;

  auto operator<=>(const Composition&) const = default;

  std::string str() const;  // "(1 2 1)", "()" for empty

private:
  std::vector<int> parts_;
};

// Canonical total order: by norm, then lexicographically by parts.
struct CompositionOrder {
  bool operator()(const Composition& a, const Composition& b) const;
};

using CompositionSet = std::set<Composition, CompositionOrder>;

// Sum parts j and j+1 (1-based). Identity for j >= length.
Composition merge(const Composition& w, int j);

// Insert a part 2 at position j (1-based). Identity for j > length+1.
Composition insert(const Composition& w, int j);

// All distinct single-step merge/insert results different from w itself,
// restricted to norm <= max_norm.
std::vector<Composition> step_descendants(const Composition& w, int max_norm);

// Reachability of `lower` from `upper` by merge/insert steps. BFS pruned
// at norm(lower); exact since no operation decreases the norm.
bool precedes(const Composition& lower, const Composition& upper);

// Membership in Omega_<d]: |w| <= d and |w| = d mod 2.
bool in_omega(const Composition& w, int d);

enum class NormFilter { All, ReducedEq, ReducedGe };

// Omega_<d] with an optional filter on the reduced norm, in canonical order.
std::vector<Composition> enumerate_omega(int d, NormFilter f = NormFilter::All,
                                         int k = 0);

// A degree d together with a pattern set inside Omega_<d].
class ThetaPoset {
public:
  ThetaPoset(int d, CompositionSet members);

  int d() const { return d_; }
  const CompositionSet& members() const { return members_; }
  bool contains(const Composition& w) const { return members_.count(w) > 0; }

  // Single-step closedness; equivalent to full transitive closedness.
  bool closed() const;

private:
  int d_ = 0;
  CompositionSet members_;
};

// Smallest closed poset in Omega_<d] containing the seed set.
ThetaPoset closure(const std::vector<Composition>& seed, int d);

// Partition of the codimension-2 slice Omega_<d],=2 into members of Theta
// and its complement. Requires a closed poset.
std::pair<CompositionSet, CompositionSet> split_eq2(const ThetaPoset& theta);

}  // namespace strata
