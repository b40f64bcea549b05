#pragma once

// Full-rank sublattices of Z^2 and Z^3 in Hermite normal form.
//
// The matrices are upper triangular and their COLUMNS are the generators:
//
//   Hnf2   [ b  c ]      generators (b, 0), (c, a),            0 <= c < b
//          [ 0  a ]
//
//   Hnf3   [ c  e  f ]   generators (c, 0, 0), (e, b, 0), (f, d, a),
//          [ 0  b  d ]   0 <= e, f < c and 0 <= d < b
//          [ 0  0  a ]
//
// With these ranges every sublattice of index n has exactly one form, so
// there are sigma1(n) of them in Z^2 and omega(n) in Z^3.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <vector>

#include "hwcover/element.hpp"

namespace hwcover {

using Vec2 = std::array<Int, 2>;

namespace detail {

/// Floor modulus, result in [0, m).
inline Int mod(Int x, Int m) {
  const Int r = x % m;
  return r < 0 ? r + m : r;
}

inline Int floor_div(Int x, Int m) { return (x - mod(x, m)) / m; }

/// Column Hermite normal form of the lattice spanned by `gens`.  Returns
/// pivot columns P[0..D-1] with P[i][i] > 0, P[i][j] = 0 for j > i, and
/// 0 <= P[j][i] < P[i][i] for j > i.  Throws if the span is not full rank.
template <std::size_t D>
std::array<std::array<Int, D>, D> column_hnf(std::vector<std::array<Int, D>> pool) {
  std::array<std::array<Int, D>, D> pivots{};
  for (std::size_t ii = D; ii-- > 0;) {
    // Euclid on coordinate ii until a single vector carries it.
    while (true) {
      std::size_t best = pool.size();
      for (std::size_t j = 0; j < pool.size(); ++j) {
        if (pool[j][ii] == 0) continue;
        if (best == pool.size() || std::llabs(pool[j][ii]) < std::llabs(pool[best][ii])) best = j;
      }
      if (best == pool.size()) throw std::invalid_argument("column_hnf: generators are not of full rank");
      bool done = true;
      for (std::size_t j = 0; j < pool.size(); ++j) {
        if (j == best || pool[j][ii] == 0) continue;
        const Int q = pool[j][ii] / pool[best][ii];
        for (std::size_t k = 0; k < D; ++k) pool[j][k] -= q * pool[best][k];
        if (pool[j][ii] != 0) done = false;
      }
      if (done) {
        auto p = pool[best];
        if (p[ii] < 0)
          for (auto& v : p) v = -v;
        pivots[ii] = p;
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
        break;
      }
    }
  }
  // Reduce the entries above each pivot, highest coordinate first.
  for (std::size_t j = 0; j < D; ++j) {
    for (std::size_t ii = j; ii-- > 0;) {
      const Int q = floor_div(pivots[j][ii], pivots[ii][ii]);
      if (q == 0) continue;
      for (std::size_t k = 0; k <= ii; ++k) pivots[j][k] -= q * pivots[ii][k];
    }
  }
  return pivots;
}

}  // namespace detail

struct Hnf2 {
  Int b = 1;
  Int a = 1;
  Int c = 0;

  Int index() const { return a * b; }

  bool valid() const { return a > 0 && b > 0 && c >= 0 && c < b; }

  std::array<Vec2, 2> generators() const { return {Vec2{b, 0}, Vec2{c, a}}; }

  bool contains(const Vec2& v) const {
    if (v[1] % a != 0) return false;
    return (v[0] - (v[1] / a) * c) % b == 0;
  }

  /// Representative of v + H in the transversal [0, b) x [0, a).
  Vec2 reduce(const Vec2& v) const {
    const Int q = detail::floor_div(v[1], a);
    return {detail::mod(v[0] - q * c, b), v[1] - q * a};
  }

  static Hnf2 from_generators(std::vector<Vec2> gens) {
    const auto p = detail::column_hnf<2>(std::move(gens));
    return {p[0][0], p[1][1], p[1][0]};
  }

  friend bool operator==(const Hnf2&, const Hnf2&) = default;
  friend auto operator<=>(const Hnf2&, const Hnf2&) = default;
};

struct Hnf3 {
  Int c = 1;
  Int b = 1;
  Int a = 1;
  Int e = 0;
  Int f = 0;
  Int d = 0;

  Int index() const { return a * b * c; }

  bool valid() const {
    return a > 0 && b > 0 && c > 0 && e >= 0 && e < c && f >= 0 && f < c && d >= 0 && d < b;
  }

  std::array<Vec3, 3> generators() const { return {Vec3{c, 0, 0}, Vec3{e, b, 0}, Vec3{f, d, a}}; }

  bool contains(const Vec3& v) const {
    if (v[2] % a != 0) return false;
    const Int k3 = v[2] / a;
    const Int v1 = v[1] - k3 * d;
    if (v1 % b != 0) return false;
    const Int k2 = v1 / b;
    return (v[0] - k3 * f - k2 * e) % c == 0;
  }

  static Hnf3 from_generators(std::vector<Vec3> gens) {
    const auto p = detail::column_hnf<3>(std::move(gens));
    return {p[0][0], p[1][1], p[2][2], p[1][0], p[2][0], p[2][1]};
  }

  /// Image under the coordinate sign change v -> (s0 v0, s1 v1, s2 v2).
  Hnf3 flipped(const Vec3& s) const {
    std::vector<Vec3> g;
    for (const Vec3& v : generators()) g.push_back({s[0] * v[0], s[1] * v[1], s[2] * v[2]});
    return from_generators(std::move(g));
  }

  friend bool operator==(const Hnf3&, const Hnf3&) = default;
  friend auto operator<=>(const Hnf3&, const Hnf3&) = default;
};

inline Hnf2 flipped(const Hnf2& h, const Vec2& s) {
  std::vector<Vec2> g;
  for (const Vec2& v : h.generators()) g.push_back({s[0] * v[0], s[1] * v[1]});
  return Hnf2::from_generators(std::move(g));
}

/// All sublattices of Z^2 of index n, in field order.
inline std::vector<Hnf2> enumerate_hnf2(Int n) {
  std::vector<Hnf2> out;
  if (n < 1) return out;
  for (Int b = 1; b <= n; ++b) {
    if (n % b != 0) continue;
    for (Int c = 0; c < b; ++c) out.push_back({b, n / b, c});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// All sublattices of Z^3 of index n, in field order.
inline std::vector<Hnf3> enumerate_hnf3(Int n) {
  std::vector<Hnf3> out;
  if (n < 1) return out;
  for (Int c = 1; c <= n; ++c) {
    if (n % c != 0) continue;
    const Int rest = n / c;
    for (Int b = 1; b <= rest; ++b) {
      if (rest % b != 0) continue;
      const Int a = rest / b;
      for (Int e = 0; e < c; ++e)
        for (Int f = 0; f < c; ++f)
          for (Int d = 0; d < b; ++d) out.push_back({c, b, a, e, f, d});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hwcover
