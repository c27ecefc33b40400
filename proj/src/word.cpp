#include "strata/word.hpp"

#include <cstdio>
#include <sstream>

namespace strata {

bool letter_valid(const Letter& a, int d) {
  return a.i >= 0 && a.j >= 0 && a.ones() <= d - 2 && a.ones() % 2 == d % 2;
}

std::vector<std::pair<int, int>> letter_indices(int d) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i <= d - 2; ++i) {
    for (int j = 0; i + j <= d - 2; ++j) {
      if ((i + j) % 2 == d % 2) out.emplace_back(i, j);
    }
  }
  return out;
}

bool Word::is_reduced() const {
  for (size_t k = 0; k + 1 < letters_.size(); ++k) {
    if (letters_[k].same_wall(letters_[k + 1]) &&
        letters_[k].positive != letters_[k + 1].positive) {
      return false;
    }
  }
  return true;
}

Word reduce(const Word& w) {
  std::vector<Letter> stack;
  for (const Letter& a : w.letters()) {
    if (!stack.empty() && stack.back().same_wall(a) &&
        stack.back().positive != a.positive) {
      stack.pop_back();
    } else {
      stack.push_back(a);
    }
  }
  return Word(std::move(stack));
}

Word inverse(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> all = u.letters();
  all.insert(all.end(), v.letters().begin(), v.letters().end());
  return reduce(Word(std::move(all)));
}

bool is_admissible(const Word& w, int d) {
  for (const Letter& a : w.letters()) {
    if (!letter_valid(a, d)) {
      throw std::invalid_argument("letter w(" + std::to_string(a.i) + "," +
                                  std::to_string(a.j) +
                                  ") is not in the alphabet for degree " +
                                  std::to_string(d));
    }
  }
  if (w.empty()) return true;

  const Letter& first = w.letters().front();
  const Letter& last = w.letters().back();
  if (d % 2 == 0) {
    if (!(first.ones() == 0 && first.positive)) return false;
    if (!(last.ones() == 0 && !last.positive)) return false;
  } else {
    if (!(first.ones() == 1 && first.positive)) return false;
    if (!(last.ones() == 1 && !last.positive)) return false;
  }
  for (size_t k = 0; k + 1 < w.size(); ++k) {
    const Letter& a = w.letters()[k];
    const Letter& b = w.letters()[k + 1];
    if (a.ones() == b.ones()) {
      if (a.positive == b.positive) return false;
    } else if (b.ones() == a.ones() + 2) {
      if (!(a.positive && b.positive)) return false;
    } else if (b.ones() == a.ones() - 2) {
      if (a.positive || b.positive) return false;
    } else {
      return false;
    }
  }
  return true;
}

Word gamma(int i, int j, int d) {
  Letter target{i, j, true};
  if (!letter_valid(target, d)) {
    throw std::invalid_argument("gamma index (" + std::to_string(i) + "," +
                                std::to_string(j) +
                                ") is invalid for degree " +
                                std::to_string(d));
  }
  const int start = d % 2;  // lowest wall level: w(0,0) or w(0,1)
  std::vector<Letter> out;
  for (int p = start; p <= i + j - 2; p += 2) out.push_back({0, p, true});
  out.push_back(target);
  for (int q = i + j; q >= start; q -= 2) out.push_back({0, q, false});
  return Word(std::move(out));
}

std::string print_word(const Word& w) {
  std::string out;
  for (const Letter& a : w.letters()) {
    if (!out.empty()) out += ' ';
    out += "w(" + std::to_string(a.i) + "," + std::to_string(a.j) + ")" +
           (a.positive ? '+' : '-');
  }
  return out;
}

Word parse_word(const std::string& text) {
  std::vector<Letter> letters;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    int i = 0, j = 0;
    char sign = 0;
    if (std::sscanf(token.c_str(), "w(%d,%d)%c", &i, &j, &sign) != 3 ||
        (sign != '+' && sign != '-') || i < 0 || j < 0) {
      throw std::invalid_argument("malformed word token: " + token);
    }
    letters.push_back({i, j, sign == '+'});
  }
  return Word(std::move(letters));
}

}  // namespace strata
