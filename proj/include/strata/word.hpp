#pragma once

#include <compare>
#include <string>
#include <vector>

#include "strata/composition.hpp"

namespace strata {

// A signed wall letter w(i,j)^+- for the wall (1^i, 2, 1^j). The "+"
// orientation points from the cell with i+j simple roots to the cell
// with i+j+2.
struct Letter {
  int i = 0;
  int j = 0;
  bool positive = true;

  int ones() const { return i + j; }
  Letter inverse() const { return {i, j, !positive}; }
  bool same_wall(const Letter& o) const { return i == o.i && j == o.j; }

  auto operator<=>(const Letter&) const = default;
};

// Validity of the index against an ambient degree.
bool letter_valid(const Letter& a, int d);

// All valid letter indices (i,j) for degree d, in lexicographic order.
std::vector<std::pair<int, int>> letter_indices(int d);

class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  size_t size() const { return letters_.size(); }

  bool is_reduced() const;

  auto operator<=>(const Word&) const = default;

private:
  std::vector<Letter> letters_;
};

// Free reduction: cancel adjacent inverse pairs until none remain.
Word reduce(const Word& w);

// Reverse the letter order and flip every sign.
Word inverse(const Word& w);

// Group law: reduce(u * v).
Word concat(const Word& u, const Word& v);

// Start/end and consecutive-letter rules for based loops in the dual
// multigraph. Throws on a letter that is invalid for d.
bool is_admissible(const Word& w, int d);

// Canonical generator loop: descend through the w(0,*) walls, cross
// w(i,j), return. gamma(0,j,.) reduces to the empty word.
Word gamma(int i, int j, int d);

// Text syntax: whitespace-separated tokens "w(i,j)+" / "w(i,j)-".
std::string print_word(const Word& w);
Word parse_word(const std::string& text);

}  // namespace strata
