#include "strata/presentation.hpp"

#include <algorithm>
#include <array>

namespace strata {

namespace {

// (1^i, 3, 1^j) -> (i, j)
std::optional<std::pair<int, int>> match_type3(const Composition& w) {
  int threes = 0, pos = -1;
  for (int k = 0; k < w.length(); ++k) {
    if (w.parts()[k] == 3) {
      ++threes;
      pos = k;
    } else if (w.parts()[k] != 1) {
      return std::nullopt;
    }
  }
  if (threes != 1) return std::nullopt;
  return std::make_pair(pos, w.length() - 1 - pos);
}

// (1^i, 2, 1^j, 2, 1^l) -> (i, j, l)
std::optional<std::array<int, 3>> match_type22(const Composition& w) {
  std::vector<int> twos;
  for (int k = 0; k < w.length(); ++k) {
    if (w.parts()[k] == 2) {
      twos.push_back(k);
    } else if (w.parts()[k] != 1) {
      return std::nullopt;
    }
  }
  if (twos.size() != 2) return std::nullopt;
  return std::array<int, 3>{twos[0], twos[1] - twos[0] - 1,
                            w.length() - 1 - twos[1]};
}

void push_sym(Relator& r, int i, int j, int exp, bool keep_dummies) {
  if (i == 0 && !keep_dummies) return;  // gamma(0,*) = 1
  r.push_back({i, j, exp});
}

void require_presentable(const ThetaPoset& theta) {
  if (!theta.closed()) {
    throw PreconditionError("pattern poset is not closed");
  }
  for (const Composition& w : theta.members()) {
    if (w.reduced_norm() < 2) {
      throw PreconditionError(
          "poset member " + w.str() +
          " has codimension < 2; the complement would lose top cells");
    }
  }
}

}  // namespace

std::vector<std::pair<int, int>> generators(int d) {
  if (d < 2) throw std::invalid_argument("degree must be >= 2");
  std::vector<std::pair<int, int>> out;
  for (auto [i, j] : letter_indices(d)) {
    if (i >= 1) out.emplace_back(i, j);
  }
  return out;
}

Relator relation_type3(const Composition& w, bool keep_dummies) {
  auto ij = match_type3(w);
  if (!ij) {
    throw std::invalid_argument("composition " + w.str() +
                                " does not match the (1..1 3 1..1) pattern");
  }
  auto [i, j] = *ij;
  Relator r;
  push_sym(r, i, j + 1, +1, keep_dummies);
  push_sym(r, i + 1, j, -1, keep_dummies);
  return r;
}

Relator relation_type22(const Composition& w, bool keep_dummies) {
  auto ijl = match_type22(w);
  if (!ijl) {
    throw std::invalid_argument(
        "composition " + w.str() +
        " does not match the (1..1 2 1..1 2 1..1) pattern");
  }
  auto [i, j, l] = *ijl;
  Relator r;
  push_sym(r, i + j, l, +1, keep_dummies);
  push_sym(r, i + j + 2, l, +1, keep_dummies);
  push_sym(r, i, j + l + 2, -1, keep_dummies);
  push_sym(r, i, j + l, -1, keep_dummies);
  return r;
}

Presentation presentation(const ThetaPoset& theta) {
  require_presentable(theta);
  Presentation p;
  p.d = theta.d();
  p.generators = generators(theta.d());
  auto [in_theta, complement] = split_eq2(theta);
  (void)in_theta;
  for (const Composition& w : complement) {
    if (match_type3(w)) {
      p.relators.push_back(relation_type3(w));
      p.provenance.push_back(RelatorType::Type3);
    } else {
      p.relators.push_back(relation_type22(w));
      p.provenance.push_back(RelatorType::Type22);
    }
  }
  return p;
}

Pi1Compactified pi1_compactified(const ThetaPoset& theta) {
  if (!theta.closed()) {
    throw PreconditionError("pattern poset is not closed");
  }
  CompositionSet full_degree;
  full_degree.insert(Composition(std::vector<int>{theta.d()}));
  return theta.members() == full_degree ? Pi1Compactified::InfiniteCyclic
                                        : Pi1Compactified::Trivial;
}

FreenessClass classify_freeness(const ThetaPoset& theta) {
  require_presentable(theta);
  bool all_ge3 = std::all_of(
      theta.members().begin(), theta.members().end(),
      [](const Composition& w) { return w.reduced_norm() >= 3; });
  if (all_ge3) return FreenessClass::ShortcutGe3;

  auto slice = enumerate_omega(theta.d(), NormFilter::ReducedEq, 2);

  bool case_i = true;
  for (const Composition& w : slice) {
    auto ijl = match_type22(w);
    if (ijl && (*ijl)[1] > 0 && !theta.contains(w)) {
      case_i = false;
      break;
    }
  }
  if (case_i) return FreenessClass::CaseI;

  bool case_ii = true;
  for (const Composition& w : slice) {
    if (theta.contains(w) != match_type3(w).has_value()) {
      case_ii = false;
      break;
    }
  }
  if (case_ii) return FreenessClass::CaseII;

  return FreenessClass::Unclassified;
}

ThetaPoset stabilize(const ThetaPoset& theta, int d_target) {
  if (d_target < theta.d() || (d_target - theta.d()) % 2 != 0) {
    throw PreconditionError(
        "stabilization target must have the same parity and be >= " +
        std::to_string(theta.d()));
  }
  std::vector<Composition> seed(theta.members().begin(),
                                theta.members().end());
  return closure(seed, d_target);
}

std::optional<FreeProductSplit> free_product_split(const ThetaPoset& theta) {
  require_presentable(theta);
  const int d = theta.d();
  Presentation whole = presentation(theta);

  for (int d_prime = d - 2; d_prime >= 4; d_prime -= 2) {
    bool slice_nonempty = false;
    bool all_inside = true;
    for (const Composition& w :
         enumerate_omega(d, NormFilter::ReducedEq, 2)) {
      if (w.norm() != d_prime) continue;
      slice_nonempty = true;
      if (!theta.contains(w)) {
        all_inside = false;
        break;
      }
    }
    if (!slice_nonempty || !all_inside) continue;

    FreeProductSplit split;
    split.d_prime = d_prime;
    split.low.d = d_prime - 2;
    split.high.d = d;
    for (auto [i, j] : whole.generators) {
      // Generator level i+j+2 is the norm of its wall.
      (i + j + 2 < d_prime ? split.low : split.high)
          .generators.emplace_back(i, j);
    }
    auto [in_theta, complement] = split_eq2(theta);
    (void)in_theta;
    size_t idx = 0;
    for (const Composition& w : complement) {
      // Relators below the split level reference only low generators,
      // relators above it only high ones; the level itself is empty.
      auto& part = w.norm() < d_prime ? split.low : split.high;
      part.relators.push_back(whole.relators[idx]);
      part.provenance.push_back(whole.provenance[idx]);
      ++idx;
    }
    return split;
  }
  return std::nullopt;
}

Presentation critical_presentation(const ThetaPoset& theta) {
  return presentation(theta);
}

Word expand_relator(const Relator& r, int d) {
  Word out;
  for (const GammaSym& s : r) {
    Word g = gamma(s.i, s.j, d);
    out = concat(out, s.exp > 0 ? g : inverse(g));
  }
  return out;
}

}  // namespace strata
