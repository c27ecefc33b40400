#include "strata/tracer.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>

#include <Eigen/Dense>

namespace strata {

namespace {

std::vector<std::complex<double>> poly_roots(const std::vector<double>& coeffs) {
  const int d = static_cast<int>(coeffs.size());
  if (d == 0) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int r = 1; r < d; ++r) companion(r, r - 1) = 1.0;
  for (int r = 0; r < d; ++r) companion(r, d - 1) = -coeffs[r];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<std::complex<double>> roots(d);
  for (int r = 0; r < d; ++r) roots[r] = solver.eigenvalues()(r);
  return roots;
}

double root_scale(const std::vector<std::complex<double>>& roots) {
  double m = 0;
  for (const auto& z : roots) m = std::max(m, std::abs(z));
  return 1.0 + m;
}

std::vector<double> real_roots_sorted(const std::vector<double>& coeffs,
                                      double tol) {
  auto roots = poly_roots(coeffs);
  const double thresh = tol * root_scale(roots);
  std::vector<double> out;
  for (const auto& z : roots) {
    if (std::abs(z.imag()) < thresh) out.push_back(z.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> lerp(const std::vector<double>& a,
                         const std::vector<double>& b, double u) {
  std::vector<double> out(a.size());
  for (size_t k = 0; k < a.size(); ++k) out[k] = (1 - u) * a[k] + u * b[k];
  return out;
}

void check_path(const CoefficientPath& path) {
  if (path.d < 2) throw std::invalid_argument("path degree must be >= 2");
  if (path.samples.size() < 3) {
    throw PreconditionError("path needs at least 3 samples");
  }
  for (const auto& s : path.samples) {
    if (static_cast<int>(s.size()) != path.d) {
      throw std::invalid_argument("sample size does not match degree");
    }
    for (double v : s) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("non-finite coefficient in path");
      }
    }
  }
}

struct CrossingEvent {
  double t = 0;  // segment index + refined in-segment parameter
  Letter letter;
};

// Locate the inserted/removed adjacent pair: remove the adjacent pair
// from `many` whose leftover aligns best with `few` in order.
std::pair<int, int> identify_wall(const std::vector<double>& few,
                                  const std::vector<double>& many) {
  const int k = static_cast<int>(few.size());
  int best_p = 0;
  double best_cost = std::numeric_limits<double>::infinity();
  for (int p = 0; p + 1 < static_cast<int>(many.size()); ++p) {
    double cost = 0;
    int q = 0;
    for (int r = 0; r < static_cast<int>(many.size()); ++r) {
      if (r == p || r == p + 1) continue;
      cost += std::abs(many[r] - few[q]);
      ++q;
    }
    if (cost < best_cost) {
      best_cost = cost;
      best_p = p;
    }
  }
  const double mid = (many[best_p] + many[best_p + 1]) / 2;
  int below = 0;
  for (double r : few) {
    if (r < mid) ++below;
  }
  return {below, k - below};
}

class Tracer {
public:
  Tracer(const CoefficientPath& path, const TraceOptions& opts)
      : path_(path), opts_(opts) {}

  Word run() {
    check_path(path_);
    Composition base = root_pattern(path_.samples.front(), opts_.tol);
    const bool even = path_.d % 2 == 0;
    if (!(even ? base == Composition() : base == Composition::ones(1))) {
      throw PreconditionError(
          "base sample must have no real roots (even degree) or one simple "
          "real root (odd degree); found " +
          base.str());
    }
    const size_t n = path_.samples.size();
    std::vector<int> counts(n);
    for (size_t s = 0; s < n; ++s) {
      counts[s] = count_real_roots(path_.samples[s], opts_.tol);
    }
    std::vector<CrossingEvent> events;
    for (size_t s = 0; s < n; ++s) {
      const auto& a = path_.samples[s];
      const auto& b = path_.samples[(s + 1) % n];
      handle_segment(static_cast<double>(s), a, b, 0.0, counts[s], 1.0,
                     counts[(s + 1) % n], 0, events);
    }
    std::sort(events.begin(), events.end(),
              [](const CrossingEvent& x, const CrossingEvent& y) {
                return x.t < y.t;
              });
    std::vector<Letter> letters;
    for (const CrossingEvent& e : events) letters.push_back(e.letter);
    Word w{std::move(letters)};
    return opts_.raw ? w : reduce(w);
  }

private:
  int count_at(const std::vector<double>& a, const std::vector<double>& b,
               double u) const {
    return count_real_roots(lerp(a, b, u), opts_.tol);
  }

  void handle_segment(double seg, const std::vector<double>& a,
                      const std::vector<double>& b, double u0, int c0,
                      double u1, int c1, int depth,
                      std::vector<CrossingEvent>& events) {
    if (c0 == c1) return;
    if (std::abs(c1 - c0) == 2) {
      events.push_back(refine_crossing(seg, a, b, u0, c0, u1, c1));
      return;
    }
    if (depth >= opts_.max_subdivision) {
      throw ResolutionError(
          "loop not in generic position: forbidden tangency pattern "
          "suspected");
    }
    const double um = (u0 + u1) / 2;
    const int cm = count_at(a, b, um);
    handle_segment(seg, a, b, u0, c0, um, cm, depth + 1, events);
    handle_segment(seg, a, b, um, cm, u1, c1, depth + 1, events);
  }

  CrossingEvent refine_crossing(double seg, const std::vector<double>& a,
                                const std::vector<double>& b, double u0,
                                int c0, double u1, int c1) {
    double lo = u0, hi = u1;
    while (hi - lo > opts_.param_tol) {
      const double um = (lo + hi) / 2;
      if (count_at(a, b, um) == c0) {
        lo = um;
      } else {
        hi = um;
      }
    }
    const double ustar = (lo + hi) / 2;

    const bool increasing = c1 > c0;  // root count along path direction
    const double u_few_end = increasing ? u0 : u1;
    const double u_many_end = increasing ? u1 : u0;
    const int c_few = std::min(c0, c1);

    auto pick = [&](double toward, int want) {
      double h = std::max(1e-6 * std::abs(u1 - u0), 8 * opts_.param_tol);
      double u = ustar;
      const double dir = toward > ustar ? 1.0 : -1.0;
      while (h < 2 * std::abs(toward - ustar)) {
        u = ustar + dir * h;
        if ((dir > 0 && u > toward) || (dir < 0 && u < toward)) break;
        if (count_at(a, b, u) == want) return u;
        h *= 2;
      }
      return toward;  // segment endpoint is known to have the wanted count
    };
    const double u_few = pick(u_few_end, c_few);
    const double u_many = pick(u_many_end, c_few + 2);

    auto few = real_roots_sorted(lerp(a, b, u_few), opts_.tol);
    auto many = real_roots_sorted(lerp(a, b, u_many), opts_.tol);
    if (static_cast<int>(few.size()) != c_few ||
        static_cast<int>(many.size()) != c_few + 2) {
      throw ResolutionError(
          "could not stabilize root counts around a wall crossing");
    }
    auto [i, j] = identify_wall(few, many);
    return {seg + ustar, Letter{i, j, increasing}};
  }

  const CoefficientPath& path_;
  TraceOptions opts_;
};

// ---- synthesize -----------------------------------------------------------

// Crossing offsets kept slightly off the sample grid.
constexpr double kPlusCross = 0.7503;
constexpr double kMinusCross = 0.5003;

struct LoopState {
  std::vector<double> real_roots;                  // sorted
  std::vector<std::pair<double, double>> cpairs;   // {center, m > 0}
};

std::vector<double> coefficients(const std::vector<double>& real_roots,
                                 const std::vector<std::pair<double, double>>&
                                     quadratics) {
  std::vector<double> poly{1.0};
  auto mul = [&poly](const std::vector<double>& f) {
    std::vector<double> out(poly.size() + f.size() - 1, 0.0);
    for (size_t p = 0; p < poly.size(); ++p) {
      for (size_t q = 0; q < f.size(); ++q) out[p + q] += poly[p] * f[q];
    }
    poly = std::move(out);
  };
  for (double r : real_roots) mul({-r, 1.0});
  for (auto [c, m] : quadratics) mul({c * c + m, -2 * c, 1.0});
  poly.pop_back();  // drop the leading 1
  return poly;
}

// Insertion slot between the i-th and (i+1)-st of the current real roots.
std::pair<double, double> slot(const std::vector<double>& roots, int i) {
  const int k = static_cast<int>(roots.size());
  double lo, hi;
  if (k == 0) {
    lo = -1;
    hi = 1;
  } else if (i == 0) {
    lo = roots.front() - 2;
    hi = roots.front();
  } else if (i == k) {
    lo = roots.back();
    hi = roots.back() + 2;
  } else {
    lo = roots[i - 1];
    hi = roots[i];
  }
  const double mid = (lo + hi) / 2;
  const double delta = std::min(0.5, (hi - lo) / 4);
  return {mid, delta};
}

}  // namespace

Composition root_pattern(const std::vector<double>& coeffs, double tol) {
  if (!(tol > 0 && tol <= 1e-3)) {
    throw std::invalid_argument("tolerance must lie in (0, 1e-3]");
  }
  auto roots = poly_roots(coeffs);
  const int n = static_cast<int>(roots.size());
  const double scale = root_scale(roots);

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (std::abs(roots[a] - roots[b]) < tol * scale) {
        parent[find(a)] = find(b);
      }
    }
  }
  // A gap barely above the clustering radius cannot be decided.
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (find(a) != find(b) &&
          std::abs(roots[a] - roots[b]) < 2 * tol * scale) {
        throw ResolutionError("pattern unresolved at given tolerance");
      }
    }
  }
  std::vector<std::pair<double, int>> clusters;  // (real position, size)
  for (int rep = 0; rep < n; ++rep) {
    if (find(rep) != rep) continue;
    std::complex<double> centroid{0, 0};
    int size = 0;
    for (int a = 0; a < n; ++a) {
      if (find(a) == rep) {
        centroid += roots[a];
        ++size;
      }
    }
    centroid /= static_cast<double>(size);
    if (std::abs(centroid.imag()) < tol * scale) {
      clusters.emplace_back(centroid.real(), size);
    }
  }
  std::sort(clusters.begin(), clusters.end());
  std::vector<int> parts;
  for (auto [pos, size] : clusters) parts.push_back(size);
  return Composition(std::move(parts));
}

int count_real_roots(const std::vector<double>& coeffs, double tol) {
  return static_cast<int>(real_roots_sorted(coeffs, tol).size());
}

Word trace(const CoefficientPath& path, const TraceOptions& opts) {
  return Tracer(path, opts).run();
}

CoefficientPath synthesize(const Word& w, int d, int samples_per_letter) {
  if (d < 2) throw std::invalid_argument("degree must be >= 2");
  if (samples_per_letter < 4) {
    throw std::invalid_argument("need at least 4 samples per letter");
  }
  if (!w.is_reduced() || w != reduce(w)) {
    throw std::invalid_argument("synthesize requires a reduced word");
  }
  if (!is_admissible(w, d)) {
    throw std::invalid_argument("synthesize requires an admissible word");
  }

  LoopState state;
  if (d % 2 == 1) state.real_roots.push_back(0.0);
  for (int q = 0; q < (d - d % 2) / 2; ++q) {
    state.cpairs.emplace_back(0.0, 1.0);
  }

  CoefficientPath path;
  path.d = d;
  path.samples.push_back(coefficients(state.real_roots, state.cpairs));

  const int spp = samples_per_letter;
  for (const Letter& a : w.letters()) {
    if (a.positive) {
      // A dormant conjugate pair descends into the chosen slot and
      // becomes a real pair.
      auto [c0, m0] = state.cpairs.back();
      state.cpairs.pop_back();
      auto [ct, delta] = slot(state.real_roots, a.i);
      const double m_slot = delta * delta;
      for (int k = 1; k <= spp; ++k) {
        const double u = static_cast<double>(k) / spp;
        double c, m;
        if (u <= 0.5) {
          c = c0 + (ct - c0) * (u / 0.5);
          m = m0 + (m_slot - m0) * (u / 0.5);
        } else {
          c = ct;
          m = m_slot * (kPlusCross - u) / (kPlusCross - 0.5);
        }
        auto quads = state.cpairs;
        auto reals = state.real_roots;
        if (m >= 0) {
          quads.emplace_back(c, m);
        } else {
          reals.push_back(c - std::sqrt(-m));
          reals.push_back(c + std::sqrt(-m));
          std::sort(reals.begin(), reals.end());
        }
        path.samples.push_back(coefficients(reals, quads));
      }
      const double m_end = m_slot * (kPlusCross - 1) / (kPlusCross - 0.5);
      state.real_roots.push_back(ct - std::sqrt(-m_end));
      state.real_roots.push_back(ct + std::sqrt(-m_end));
      std::sort(state.real_roots.begin(), state.real_roots.end());
    } else {
      // The adjacent real pair above the i lowest roots merges and
      // lifts off into a conjugate pair.
      const double r_lo = state.real_roots[a.i];
      const double r_hi = state.real_roots[a.i + 1];
      state.real_roots.erase(state.real_roots.begin() + a.i,
                             state.real_roots.begin() + a.i + 2);
      const double ct = (r_lo + r_hi) / 2;
      const double delta0 = (r_hi - r_lo) / 2;
      for (int k = 1; k <= spp; ++k) {
        const double u = static_cast<double>(k) / spp;
        const double m = -delta0 * delta0 * (kMinusCross - u) / kMinusCross;
        auto quads = state.cpairs;
        auto reals = state.real_roots;
        if (m >= 0) {
          quads.emplace_back(ct, m);
        } else {
          reals.push_back(ct - std::sqrt(-m));
          reals.push_back(ct + std::sqrt(-m));
          std::sort(reals.begin(), reals.end());
        }
        path.samples.push_back(coefficients(reals, quads));
      }
      const double m_end = delta0 * delta0 * (1 - kMinusCross) / kMinusCross;
      state.cpairs.emplace_back(ct, m_end);
    }
  }

  // Return every conjugate pair (and the odd-degree base root) to the
  // base configuration; stays inside the base cell, so no crossings.
  LoopState target;
  if (d % 2 == 1) target.real_roots.push_back(0.0);
  for (size_t q = 0; q < state.cpairs.size(); ++q) {
    target.cpairs.emplace_back(0.0, 1.0);
  }
  for (int k = 1; k < spp; ++k) {
    const double u = static_cast<double>(k) / spp;
    auto reals = state.real_roots;
    for (size_t q = 0; q < reals.size(); ++q) {
      reals[q] = (1 - u) * reals[q] + u * target.real_roots[q];
    }
    auto quads = state.cpairs;
    for (size_t q = 0; q < quads.size(); ++q) {
      quads[q].first = (1 - u) * quads[q].first;
      quads[q].second = (1 - u) * quads[q].second + u;
    }
    path.samples.push_back(coefficients(reals, quads));
  }
  while (path.samples.size() < 3) {
    path.samples.push_back(path.samples.front());
  }
  return path;
}

std::vector<LocusPoint> export_zero_locus(const CoefficientPath& path,
                                          int resolution) {
  check_path(path);
  if (resolution < 1) throw std::invalid_argument("resolution must be >= 1");
  const size_t n = path.samples.size();
  std::vector<LocusPoint> out;
  for (int q = 0; q < resolution; ++q) {
    const double psi = static_cast<double>(q) / resolution;
    const double pos = psi * static_cast<double>(n);
    const size_t seg = std::min(n - 1, static_cast<size_t>(pos));
    const double u = pos - static_cast<double>(seg);
    auto coeffs =
        lerp(path.samples[seg], path.samples[(seg + 1) % n], u);
    for (double x : real_roots_sorted(coeffs, 1e-8)) {
      out.push_back({psi, x});
    }
  }
  return out;
}

}  // namespace strata
