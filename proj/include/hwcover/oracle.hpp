#pragma once

// Brute-force verification by low-index subgroup search.
//
// A subgroup of index n is the stabilizer of the basepoint in a transitive
// action of G on n points.  The search builds coset tables for the
// two-generator presentation < x, y | x y^2 x^-1 y^2, y x^2 y^-1 x^2 >
// (z = (xy)^-1 eliminated) and never consults the canonical form, the
// descriptors or any closed formula.

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hwcover/catalog.hpp"
#include "hwcover/counts.hpp"
#include "hwcover/element.hpp"
#include "hwcover/types.hpp"

namespace hwcover::oracle {

inline constexpr Int kDefaultLimit = 16;
inline constexpr Int kHardCap = 24;

using Perm = std::vector<int>;

/// Right action of x, y, z on cosets 0..n-1; coset 0 is the subgroup.
/// Construction checks that the maps are permutations, that every relator
/// acts trivially and that the action is transitive.
class CosetTable {
 public:
  explicit CosetTable(std::array<Perm, 3> act) : act_(std::move(act)) { validate(); }

  int size() const { return static_cast<int>(act_[0].size()); }

  /// Generator 0, 1, 2 = x, y, z.
  const Perm& act(int gen) const { return act_[gen]; }
  const std::array<Perm, 3>& actions() const { return act_; }

  int image(int coset, const GeneratorWord& w) const {
    for (const Token& t : w.tokens) {
      const Perm& p = act_[letter_index(t.gen) - 1];
      if (!t.inverted) {
        coset = p[coset];
      } else {
        coset = static_cast<int>(std::find(p.begin(), p.end(), coset) - p.begin());
      }
    }
    return coset;
  }

  friend bool operator==(const CosetTable&, const CosetTable&) = default;
  friend auto operator<=>(const CosetTable&, const CosetTable&) = default;

 private:
  void validate() const {
    const std::size_t n = act_[0].size();
    if (n == 0) throw std::invalid_argument("CosetTable: empty");
    for (const Perm& p : act_) {
      if (p.size() != n) throw std::invalid_argument("CosetTable: size mismatch");
      std::vector<char> hit(n, 0);
      for (int v : p) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || hit[v]) throw std::invalid_argument("CosetTable: not a permutation");
        hit[v] = 1;
      }
    }
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < static_cast<int>(n); ++c)
        if (image(c, relators()[r]) != c) throw std::invalid_argument("CosetTable: relator acts nontrivially");
    std::vector<char> seen(n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const Perm& p : act_)
        if (!seen[p[queue[i]]]) {
          seen[p[queue[i]]] = 1;
          queue.push_back(p[queue[i]]);
        }
    if (queue.size() != n) throw std::invalid_argument("CosetTable: action is not transitive");
  }

  std::array<Perm, 3> act_;
};

namespace detail {

// Columns of the search table: x, x^-1, y, y^-1.
constexpr int inv_col(int c) { return c ^ 1; }

class LowIndexSearch {
 public:
  explicit LowIndexSearch(int n) : n_(n) {
    const std::vector<std::vector<int>> base = {{0, 2, 2, 1, 2, 2}, {2, 0, 0, 3, 0, 0}};
    for (const auto& r : base) {
      std::vector<int> inv(r.rbegin(), r.rend());
      for (int& c : inv) c = inv_col(c);
      for (const std::vector<int>* w : std::array<const std::vector<int>*, 2>{&r, &inv})
        for (std::size_t s = 0; s < w->size(); ++s) {
          std::vector<int> rot(w->begin() + static_cast<std::ptrdiff_t>(s), w->end());
          rot.insert(rot.end(), w->begin(), w->begin() + static_cast<std::ptrdiff_t>(s));
          if (std::find(words_.begin(), words_.end(), rot) == words_.end()) words_.push_back(rot);
        }
    }
  }

  std::vector<CosetTable> run() {
    State s;
    s.table.assign(static_cast<std::size_t>(n_) * 4, -1);
    s.count = 1;
    search(std::move(s));
    return std::move(out_);
  }

 private:
  struct State {
    std::vector<int> table;
    int count = 0;
  };

  int& at(State& s, int c, int col) const { return s.table[static_cast<std::size_t>(c) * 4 + col]; }

  // Scan one relator from coset c; returns false on a conflict.
  bool scan(State& s, int c, const std::vector<int>& w, bool& changed) const {
    const int len = static_cast<int>(w.size());
    int f = c, i = 0;
    while (i < len && at(s, f, w[i]) >= 0) f = at(s, f, w[i++]);
    if (i == len) return f == c;
    int b = c, j = len;
    while (j > i && at(s, b, inv_col(w[j - 1])) >= 0) b = at(s, b, inv_col(w[--j]));
    if (j == i) return false;
    if (j == i + 1) {
      int& back = at(s, b, inv_col(w[i]));
      if (back >= 0) return false;
      at(s, f, w[i]) = b;
      back = f;
      changed = true;
    }
    return true;
  }

  bool deduce(State& s) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int c = 0; c < s.count; ++c)
        for (const auto& w : words_)
          if (!scan(s, c, w, changed)) return false;
    }
    return true;
  }

  void search(State s) {
    if (!deduce(s)) return;
    int c = 0, col = 0;
    for (; c < s.count; ++c) {
      for (col = 0; col < 4; ++col)
        if (at(s, c, col) < 0) break;
      if (col < 4) break;
    }
    if (c == s.count) {
      if (s.count == n_) emit(s);
      return;
    }
    for (int j = 0; j < s.count; ++j) {
      if (at(s, j, inv_col(col)) >= 0) continue;
      State next = s;
      at(next, c, col) = j;
      at(next, j, inv_col(col)) = c;
      search(std::move(next));
    }
    if (s.count < n_) {
      const int j = s.count;
      ++s.count;
      at(s, c, col) = j;
      at(s, j, inv_col(col)) = c;
      search(std::move(s));
    }
  }

  void emit(State& s) {
    std::array<Perm, 3> act;
    for (auto& p : act) p.assign(static_cast<std::size_t>(n_), 0);
    for (int c = 0; c < n_; ++c) {
      act[0][c] = at(s, c, 0);
      act[1][c] = at(s, c, 2);
    }
    for (int c = 0; c < n_; ++c) act[2][act[1][act[0][c]]] = c;  // c x y z = c
    out_.emplace_back(std::move(act));
  }

  int n_;
  std::vector<std::vector<int>> words_;
  std::vector<CosetTable> out_;
};

}  // namespace detail

/// One table per index-n subgroup, in the search's standard numbering.
inline std::vector<CosetTable> low_index(Int n, Int limit = kDefaultLimit) {
  if (n < 1) throw std::invalid_argument("low_index: n must be positive");
  if (limit > kHardCap) throw std::length_error("low_index: limit exceeds hard cap " + std::to_string(kHardCap));
  if (n > limit) throw std::length_error("low_index: n=" + std::to_string(n) + " exceeds limit " + std::to_string(limit));
  return detail::LowIndexSearch(static_cast<int>(n)).run();
}

/// Relabel by breadth-first search from `base`, trying x, y, z, x^-1, y^-1,
/// z^-1 in that order.  The result depends only on the G-set and the base.
inline CosetTable canonical_table(const CosetTable& t, int base) {
  const int n = t.size();
  if (base < 0 || base >= n) throw std::out_of_range("canonical_table: bad base");
  std::array<Perm, 3> inv;
  for (int g = 0; g < 3; ++g) {
    inv[g].assign(static_cast<std::size_t>(n), 0);
    for (int c = 0; c < n; ++c) inv[g][t.act(g)[c]] = c;
  }
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<int> order{base};
  label[base] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int c = order[i];
    for (int g = 0; g < 6; ++g) {
      const int d = g < 3 ? t.act(g)[c] : inv[g - 3][c];
      if (label[d] < 0) {
        label[d] = static_cast<int>(order.size());
        order.push_back(d);
      }
    }
  }
  std::array<Perm, 3> act;
  for (int g = 0; g < 3; ++g) {
    act[g].assign(static_cast<std::size_t>(n), 0);
    for (int c = 0; c < n; ++c) act[g][label[c]] = label[t.act(g)[c]];
  }
  return CosetTable(std::move(act));
}

/// Minimum canonical form over all basepoints: equal exactly for tables of
/// conjugate subgroups.
inline CosetTable class_key(const CosetTable& t) {
  CosetTable best = canonical_table(t, 0);
  for (int b = 1; b < t.size(); ++b) best = std::min(best, canonical_table(t, b));
  return best;
}

/// Isomorphism type from the number of orbits of Lambda = <x^2, y^2, z^2>:
/// |phi(subgroup)| = 4 / orbits.
inline IsoType stabilizer_type(const CosetTable& t) {
  const int n = t.size();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int g = 0; g < 3; ++g)
    for (int c = 0; c < n; ++c) parent[find(c)] = find(t.act(g)[t.act(g)[c]]);
  // Lambda is normal, so its orbits must form a block system.
  for (int g = 0; g < 3; ++g)
    for (int c = 0; c < n; ++c)
      for (int d = 0; d < n; ++d)
        if (find(c) == find(d) && find(t.act(g)[c]) != find(t.act(g)[d]))
          throw std::logic_error("stabilizer_type: Lambda orbits are not blocks");
  int orbits = 0;
  for (int c = 0; c < n; ++c) orbits += find(c) == c;
  switch (orbits) {
    case 4: return IsoType::G1;
    case 2: return IsoType::G2;
    case 1: return IsoType::G6;
    default: throw std::logic_error("stabilizer_type: " + std::to_string(orbits) + " Lambda orbits");
  }
}

/// Group tables into conjugacy classes, ordered by class key.
inline std::vector<std::vector<CosetTable>> classes_of(const std::vector<CosetTable>& ts) {
  std::map<CosetTable, std::vector<CosetTable>> by_key;
  for (const CosetTable& t : ts) {
    if (t.size() != ts.front().size()) throw std::invalid_argument("classes_of: tables of different size");
    by_key[class_key(t)].push_back(t);
  }
  std::vector<std::vector<CosetTable>> out;
  for (auto& [key, members] : by_key) out.push_back(std::move(members));
  return out;
}

/// Action of x, y, z on the right cosets of the described subgroup, found by
/// coset enumeration with catalog::contains.  Coset 0 is the subgroup.
template <class D>
CosetTable descriptor_to_table(const D& d, Int limit = kDefaultLimit) {
  if (catalog::index_of(d) > limit)
    throw std::length_error("descriptor_to_table: index exceeds limit " + std::to_string(limit));
  std::vector<Element> reps{identity()};
  std::vector<Element> rep_inv{identity()};
  std::array<Perm, 3> act;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (int g = 0; g < 3; ++g) {
      const Element h = reps[i] * generator(static_cast<Letter>(g + 1));
      int found = -1;
      for (std::size_t j = 0; j < reps.size() && found < 0; ++j)
        if (catalog::contains(d, h * rep_inv[j])) found = static_cast<int>(j);
      if (found < 0) {
        if (static_cast<Int>(reps.size()) >= limit) throw std::length_error("descriptor_to_table: too many cosets");
        found = static_cast<int>(reps.size());
        reps.push_back(h);
        rep_inv.push_back(inverse(h));
      }
      act[g].resize(reps.size());
      act[g][i] = found;
    }
  }
  for (auto& p : act) p.resize(reps.size());
  if (static_cast<Int>(reps.size()) != catalog::index_of(d))
    throw std::logic_error("descriptor_to_table: coset count " + std::to_string(reps.size()) +
                           " differs from index " + std::to_string(catalog::index_of(d)));
  return CosetTable(std::move(act));
}

// ---------------------------------------------------------------------------
// Three-way comparison

struct TypeRow {
  IsoType type = IsoType::G1;
  Int s_closed = 0;
  Int s_catalog = 0;
  std::optional<Int> s_oracle;
  Int c_closed = 0;
  Int c_catalog = 0;
  std::optional<Int> c_oracle;
  bool match = false;
};

struct OracleReport {
  Int n = 0;
  std::array<TypeRow, 3> rows;
  /// Set when the oracle ran: the catalog's subgroups, as canonical tables,
  /// are exactly the oracle's.
  std::optional<bool> bijective;

  bool all_match() const {
    for (const TypeRow& r : rows)
      if (!r.match) return false;
    return bijective.value_or(true);
  }
};

inline OracleReport cross_check(Int n, Int oracle_limit = kDefaultLimit) {
  OracleReport rep;
  rep.n = n;
  const bool run_oracle = n <= oracle_limit;
  std::vector<CosetTable> oracle_tables;
  std::array<Int, 3> s_or{}, c_or{};
  if (run_oracle) {
    oracle_tables = low_index(n, oracle_limit);
    for (const CosetTable& t : oracle_tables) ++s_or[static_cast<int>(stabilizer_type(t))];
    for (const auto& cls : classes_of(oracle_tables)) ++c_or[static_cast<int>(stabilizer_type(cls.front()))];
  }
  std::vector<CosetTable> catalog_tables;
  for (IsoType type : kIsoTypes) {
    TypeRow& r = rep.rows[static_cast<int>(type)];
    r.type = type;
    r.s_closed = catalog::count_s(type, n);
    r.c_closed = catalog::count_c(type, n);
    const auto ds = catalog::enumerate(type, n);
    r.s_catalog = static_cast<Int>(ds.size());
    r.c_catalog = static_cast<Int>(catalog::conjugacy_classes(ds).size());
    r.match = r.s_closed == r.s_catalog && r.c_closed == r.c_catalog;
    if (run_oracle) {
      r.s_oracle = s_or[static_cast<int>(type)];
      r.c_oracle = c_or[static_cast<int>(type)];
      r.match = r.match && *r.s_oracle == r.s_closed && *r.c_oracle == r.c_closed;
      for (const auto& d : ds) catalog_tables.push_back(canonical_table(descriptor_to_table(d, oracle_limit), 0));
    }
  }
  if (run_oracle) {
    std::vector<CosetTable> from_oracle;
    for (const CosetTable& t : oracle_tables) from_oracle.push_back(canonical_table(t, 0));
    std::sort(from_oracle.begin(), from_oracle.end());
    std::sort(catalog_tables.begin(), catalog_tables.end());
    rep.bijective = from_oracle == catalog_tables &&
                    std::adjacent_find(from_oracle.begin(), from_oracle.end()) == from_oracle.end();
  }
  return rep;
}

}  // namespace hwcover::oracle
