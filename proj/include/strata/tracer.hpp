#pragma once

#include <vector>

#include "strata/composition.hpp"
#include "strata/word.hpp"

namespace strata {

// A sampled closed loop of monic degree-d polynomials
// x^d + a_{d-1} x^{d-1} + ... + a_0, one coefficient vector (a_0 ... a_{d-1})
// per sample. The first sample is revisited implicitly; segments are
// linearly interpolated.
struct CoefficientPath {
  int d = 0;
  std::vector<std::vector<double>> samples;
};

struct TraceOptions {
  double tol = 1e-8;         // relative root clustering / realness threshold
  double param_tol = 1e-12;  // crossing localization within a segment
  bool raw = false;          // keep the unreduced crossing word
  int max_subdivision = 16;
};

// Real root multiplicity pattern, parts in increasing root order. Roots
// closer than tol*scale are clustered; a cluster gap inside
// [tol, 2 tol)*scale is reported as unresolved.
Composition root_pattern(const std::vector<double>& coeffs, double tol = 1e-8);

// Number of real roots at the given realness threshold.
int count_real_roots(const std::vector<double>& coeffs, double tol = 1e-8);

// Wall-crossing word of a based loop: bisect each segment on the real
// root count, identify the wall (i,j) from the surviving roots around
// the merging pair, record signs by the root-count convention.
Word trace(const CoefficientPath& path, const TraceOptions& opts = {});

// Loop realizing a reduced admissible word: real quadratic excursions of
// complex-conjugate pairs choreographed per letter. trace() of the
// result equals the input word.
CoefficientPath synthesize(const Word& w, int d, int samples_per_letter = 16);

struct LocusPoint {
  double psi = 0;  // loop parameter in [0,1)
  double x = 0;    // real root
};

// Sampled zero locus {(psi, x) : P_psi(x) = 0} of the loop in the
// cylinder; the immersed-curve picture of the path.
std::vector<LocusPoint> export_zero_locus(const CoefficientPath& path,
                                          int resolution);

}  // namespace strata
