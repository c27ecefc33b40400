#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "strata/presentation.hpp"

namespace strata {

using BigInt = boost::multiprecision::cpp_int;

struct TietzeMove {
  enum class Kind { SetIdentity, Identify };
  Kind kind = Kind::SetIdentity;
  std::pair<int, int> gen;     // eliminated generator
  std::pair<int, int> target;  // Identify only: gen := target^sign
  int sign = 1;

  bool operator==(const TietzeMove&) const = default;
};

struct SimplifiedPresentation {
  int d = 0;
  std::vector<std::pair<int, int>> generators;  // surviving, sorted
  std::vector<Relator> relators;                // canonical cyclic forms, sorted
  std::vector<TietzeMove> log;

  bool same_shape(const SimplifiedPresentation& o) const {
    return generators == o.generators && relators == o.relators;
  }
};

// Fixpoint of the move loop: reduce relators freely and cyclically, use
// length-1 relators to kill generators, length-2 relators to identify
// them, substitute, repeat. Square relators g*g survive so torsion is
// still visible to abelianize(). Deterministic.
SimplifiedPresentation simplify(const Presentation& p);

// Re-applies a recorded move log; reproduces simplify()'s output exactly.
SimplifiedPresentation replay(const Presentation& p,
                              const std::vector<TietzeMove>& log);

// Residual generator count when no relators survive; nothing otherwise.
std::optional<int> certify_free(const SimplifiedPresentation& s);

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<long long> torsion;  // each >= 2, each dividing the next

  bool operator==(const AbelianInvariants&) const = default;
};

AbelianInvariants abelianize(const Presentation& p);
AbelianInvariants abelianize(const SimplifiedPresentation& s);

struct IntegerMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> a;  // row-major

  IntegerMatrix() = default;
  IntegerMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
  BigInt& at(int r, int c) { return a[size_t(r) * cols + c]; }
  const BigInt& at(int r, int c) const { return a[size_t(r) * cols + c]; }
};

// Diagonal d1 | d2 | ... of length min(rows, cols), entries nonnegative,
// via unimodular row/column operations.
std::vector<BigInt> smith_normal_form(IntegerMatrix m);

}  // namespace strata
