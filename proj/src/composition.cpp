#include "strata/composition.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace strata {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("composition parts must be >= 1");
  }
}

Composition Composition::ones(int k) {
  if (k < 0) throw std::invalid_argument("negative part count");
  return Composition(std::vector<int>(k, 1));
}

int Composition::norm() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Composition::all_ones() const {
  return std::all_of(parts_.begin(), parts_.end(),
                     [](int p) { return p == 1; });
}

std::string Composition::str() const {
  std::string out = "(";
  for (size_t k = 0; k < parts_.size(); ++k) {
    if (k > 0) out += ' ';
    out += std::to_string(parts_[k]);
  }
  out += ')';
  return out;
}

bool CompositionOrder::operator()(const Composition& a,
                                  const Composition& b) const {
  if (a.norm() != b.norm()) return a.norm() < b.norm();
  return a.parts() < b.parts();
}

Composition merge(const Composition& w, int j) {
  if (j < 1) throw std::invalid_argument("merge index must be >= 1");
  if (j >= w.length()) return w;
  std::vector<int> parts = w.parts();
  parts[j - 1] += parts[j];
  parts.erase(parts.begin() + j);
  return Composition(std::move(parts));
}

Composition insert(const Composition& w, int j) {
  if (j < 1) throw std::invalid_argument("insert index must be >= 1");
  if (j > w.length() + 1) return w;
  std::vector<int> parts = w.parts();
  parts.insert(parts.begin() + (j - 1), 2);
  return Composition(std::move(parts));
}

std::vector<Composition> step_descendants(const Composition& w, int max_norm) {
  std::vector<Composition> out;
  for (int j = 1; j < w.length(); ++j) out.push_back(merge(w, j));
  if (w.norm() + 2 <= max_norm) {
    for (int j = 1; j <= w.length() + 1; ++j) out.push_back(insert(w, j));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool precedes(const Composition& lower, const Composition& upper) {
  if (lower == upper) return true;
  const int target = lower.norm();
  if (target < upper.norm()) return false;
  if ((target - upper.norm()) % 2 != 0) return false;

  std::set<Composition> seen{upper};
  std::deque<Composition> queue{upper};
  while (!queue.empty()) {
    Composition cur = queue.front();
    queue.pop_front();
    for (const Composition& next : step_descendants(cur, target)) {
      if (next == lower) return true;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return false;
}

bool in_omega(const Composition& w, int d) {
  return w.norm() <= d && (w.norm() % 2) == (d % 2);
}

namespace {

void compositions_of(int n, std::vector<int>& prefix,
                     std::vector<Composition>& out) {
  if (n == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int first = 1; first <= n; ++first) {
    prefix.push_back(first);
    compositions_of(n - first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> enumerate_omega(int d, NormFilter f, int k) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  std::vector<Composition> out;
  for (int n = d % 2; n <= d; n += 2) {
    std::vector<int> prefix;
    compositions_of(n, prefix, out);
  }
  if (f != NormFilter::All) {
    std::erase_if(out, [&](const Composition& w) {
      return f == NormFilter::ReducedEq ? w.reduced_norm() != k
                                        : w.reduced_norm() < k;
    });
  }
  std::sort(out.begin(), out.end(), CompositionOrder{});
  return out;
}

ThetaPoset::ThetaPoset(int d, CompositionSet members)
    : d_(d), members_(std::move(members)) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  for (const Composition& w : members_) {
    if (!in_omega(w, d)) {
      throw PreconditionError("composition " + w.str() +
                              " violates norm/parity bounds for degree " +
                              std::to_string(d));
    }
  }
}

bool ThetaPoset::closed() const {
  for (const Composition& w : members_) {
    for (const Composition& next : step_descendants(w, d_)) {
      if (!contains(next)) return false;
    }
  }
  return true;
}

ThetaPoset closure(const std::vector<Composition>& seed, int d) {
  CompositionSet members;
  std::deque<Composition> queue;
  for (const Composition& w : seed) {
    if (!in_omega(w, d)) {
      throw PreconditionError("seed composition " + w.str() +
                              " lies outside the degree-" + std::to_string(d) +
                              " pattern set");
    }
    if (members.insert(w).second) queue.push_back(w);
  }
  while (!queue.empty()) {
    Composition cur = queue.front();
    queue.pop_front();
    for (const Composition& next : step_descendants(cur, d)) {
      if (members.insert(next).second) queue.push_back(next);
    }
  }
  return ThetaPoset(d, std::move(members));
}

std::pair<CompositionSet, CompositionSet> split_eq2(const ThetaPoset& theta) {
  if (!theta.closed()) {
    throw PreconditionError("pattern poset is not closed");
  }
  CompositionSet in, out;
  for (const Composition& w :
       enumerate_omega(theta.d(), NormFilter::ReducedEq, 2)) {
    (theta.contains(w) ? in : out).insert(w);
  }
  return {std::move(in), std::move(out)};
}

}  // namespace strata
