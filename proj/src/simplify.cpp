#include "strata/simplify.hpp"

#include <algorithm>
#include <map>

namespace strata {

namespace {

using GenId = std::pair<int, int>;

// Current fate of a generator: still active, identified with another
// generator up to sign, or identified with the identity.
struct Definition {
  bool identity = false;
  GenId base;
  int sign = 1;
};

using DefMap = std::map<GenId, Definition>;

// Chase a definition chain down to an active generator or the identity.
std::optional<std::pair<GenId, int>> resolve(const DefMap& defs, GenId g) {
  int sign = 1;
  auto it = defs.find(g);
  while (it != defs.end()) {
    if (it->second.identity) return std::nullopt;
    sign *= it->second.sign;
    g = it->second.base;
    it = defs.find(g);
  }
  return std::make_pair(g, sign);
}

Relator free_reduce(const Relator& r) {
  Relator out;
  for (const GammaSym& s : r) {
    if (!out.empty() && out.back().i == s.i && out.back().j == s.j &&
        out.back().exp == -s.exp) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

Relator cyclic_reduce(Relator r) {
  r = free_reduce(r);
  while (r.size() >= 2) {
    const GammaSym& a = r.front();
    const GammaSym& b = r.back();
    if (a.i == b.i && a.j == b.j && a.exp == -b.exp) {
      r.erase(r.begin());
      r.pop_back();
      r = free_reduce(r);
    } else {
      break;
    }
  }
  return r;
}

Relator invert(const Relator& r) {
  Relator out;
  for (auto it = r.rbegin(); it != r.rend(); ++it) {
    out.push_back({it->i, it->j, -it->exp});
  }
  return out;
}

// Lexicographically minimal rotation of the relator or its inverse.
Relator canonical_cyclic(const Relator& r) {
  if (r.empty()) return r;
  Relator best = r;
  for (const Relator& base : {r, invert(r)}) {
    Relator rot = base;
    for (size_t k = 0; k < base.size(); ++k) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) best = rot;
    }
  }
  return best;
}

Relator substitute(const DefMap& defs, const Relator& r) {
  Relator out;
  for (const GammaSym& s : r) {
    auto resolved = resolve(defs, {s.i, s.j});
    if (!resolved) continue;
    out.push_back({resolved->first.first, resolved->first.second,
                   s.exp * resolved->second});
  }
  return cyclic_reduce(out);
}

// Shared final pass: rewrite through the definitions and canonicalize.
SimplifiedPresentation finalize(const Presentation& p, const DefMap& defs,
                                std::vector<TietzeMove> log) {
  SimplifiedPresentation out;
  out.d = p.d;
  out.log = std::move(log);
  for (const GenId& g : p.generators) {
    if (!defs.count(g)) out.generators.push_back(g);
  }
  for (const Relator& r : p.relators) {
    Relator c = canonical_cyclic(substitute(defs, r));
    if (!c.empty()) out.relators.push_back(std::move(c));
  }
  std::sort(out.relators.begin(), out.relators.end(),
            [](const Relator& a, const Relator& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return out;
}

}  // namespace

SimplifiedPresentation simplify(const Presentation& p) {
  DefMap defs;
  std::vector<TietzeMove> log;

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Relator> current;
    for (const Relator& r : p.relators) {
      Relator c = substitute(defs, r);
      if (!c.empty()) current.push_back(std::move(c));
    }
    std::sort(current.begin(), current.end(),
              [](const Relator& a, const Relator& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return a < b;
              });
    for (const Relator& r : current) {
      if (r.size() == 1) {
        defs[{r[0].i, r[0].j}] = Definition{true, {}, 1};
        log.push_back({TietzeMove::Kind::SetIdentity, {r[0].i, r[0].j}, {}, 1});
        changed = true;
        break;
      }
      if (r.size() == 2) {
        GenId g{r[0].i, r[0].j};
        GenId h{r[1].i, r[1].j};
        if (g == h) continue;  // square relator, keep for abelianize
        // Eliminate the canonically larger generator.
        GenId keep = std::min(g, h);
        GenId drop = std::max(g, h);
        int exp_keep = (keep == g) ? r[0].exp : r[1].exp;
        int exp_drop = (drop == g) ? r[0].exp : r[1].exp;
        int sign = -exp_keep * exp_drop;
        defs[drop] = Definition{false, keep, sign};
        log.push_back({TietzeMove::Kind::Identify, drop, keep, sign});
        changed = true;
        break;
      }
    }
  }
  return finalize(p, defs, std::move(log));
}

SimplifiedPresentation replay(const Presentation& p,
                              const std::vector<TietzeMove>& log) {
  DefMap defs;
  for (const TietzeMove& m : log) {
    if (m.kind == TietzeMove::Kind::SetIdentity) {
      defs[m.gen] = Definition{true, {}, 1};
    } else {
      defs[m.gen] = Definition{false, m.target, m.sign};
    }
  }
  return finalize(p, defs, log);
}

std::optional<int> certify_free(const SimplifiedPresentation& s) {
  if (!s.relators.empty()) return std::nullopt;
  return static_cast<int>(s.generators.size());
}

namespace {

AbelianInvariants abelian_invariants(
    const std::vector<std::pair<int, int>>& gens,
    const std::vector<Relator>& relators) {
  std::map<std::pair<int, int>, int> index;
  for (size_t k = 0; k < gens.size(); ++k) {
    index[gens[k]] = static_cast<int>(k);
  }
  IntegerMatrix m(static_cast<int>(relators.size()),
                  static_cast<int>(gens.size()));
  for (size_t r = 0; r < relators.size(); ++r) {
    for (const GammaSym& s : relators[r]) {
      m.at(static_cast<int>(r), index.at({s.i, s.j})) += s.exp;
    }
  }
  auto diag = smith_normal_form(std::move(m));
  AbelianInvariants out;
  int rank = 0;
  for (const BigInt& x : diag) {
    if (x != 0) ++rank;
    if (x > 1) out.torsion.push_back(x.convert_to<long long>());
  }
  out.free_rank = static_cast<int>(gens.size()) - rank;
  return out;
}

}  // namespace

AbelianInvariants abelianize(const Presentation& p) {
  return abelian_invariants(p.generators, p.relators);
}

AbelianInvariants abelianize(const SimplifiedPresentation& s) {
  return abelian_invariants(s.generators, s.relators);
}

std::vector<BigInt> smith_normal_form(IntegerMatrix m) {
  const int n = std::min(m.rows, m.cols);
  std::vector<BigInt> diag(n, 0);

  for (int t = 0; t < n; ++t) {
    // Locate a nonzero entry of minimal magnitude in the submatrix.
    auto find_pivot = [&]() -> std::optional<std::pair<int, int>> {
      std::optional<std::pair<int, int>> best;
      for (int r = t; r < m.rows; ++r) {
        for (int c = t; c < m.cols; ++c) {
          if (m.at(r, c) == 0) continue;
          if (!best || abs(m.at(r, c)) < abs(m.at(best->first, best->second))) {
            best = {r, c};
          }
        }
      }
      return best;
    };

    auto pivot = find_pivot();
    if (!pivot) break;

    while (true) {
      pivot = find_pivot();
      if (!pivot) break;
      for (int c = t; c < m.cols; ++c) {
        std::swap(m.at(pivot->first, c), m.at(t, c));
      }
      for (int r = t; r < m.rows; ++r) {
        std::swap(m.at(r, pivot->second), m.at(r, t));
      }
      bool clean = true;
      for (int r = t + 1; r < m.rows; ++r) {
        BigInt q = m.at(r, t) / m.at(t, t);
        if (q != 0) {
          for (int c = t; c < m.cols; ++c) m.at(r, c) -= q * m.at(t, c);
        }
        if (m.at(r, t) != 0) clean = false;
      }
      for (int c = t + 1; c < m.cols; ++c) {
        BigInt q = m.at(t, c) / m.at(t, t);
        if (q != 0) {
          for (int r = t; r < m.rows; ++r) m.at(r, c) -= q * m.at(r, t);
        }
        if (m.at(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the submatrix.
      bool divides = true;
      for (int r = t + 1; r < m.rows && divides; ++r) {
        for (int c = t + 1; c < m.cols && divides; ++c) {
          if (m.at(r, c) % m.at(t, t) != 0) {
            for (int k = t; k < m.cols; ++k) m.at(t, k) += m.at(r, k);
            divides = false;
          }
        }
      }
      if (divides) break;
    }
    diag[t] = abs(m.at(t, t));
  }
  return diag;
}

}  // namespace strata
