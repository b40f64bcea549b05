#pragma once

// Finite-index subgroups of the Hantzsche-Wendt group, one parameterization
// per isomorphism type:
//
//   Z3Type  a sublattice of Lambda = <x^2, y^2, z^2> (half-exponent
//           coordinates); index 4 * det.
//   G2Type  a subgroup of Gamma_axis = <axis, Lambda> generated by
//           Z = axis^k * lambda(h) and the sublattice H of the two
//           complementary Lambda coordinates; index 2 * k * det(H).
//   G6Type  the 6-plet (k, l, m, u, v, w) with odd k, l, m; the subgroup is
//           N u X N u Y N u Z N with N = <x^2m, y^2k, z^2l> and
//             X = x^m y^[1-k+2w]_2k z^[l-1+2u]_2l
//             Y = y^k x^[m-1+2v]_2m z^2u
//             Z = z^l x^2v y^2w
//           so that XYZ lies in N; index k l m.
//
// Complementary coordinates follow the cyclic order: axis x uses (y, z),
// axis y uses (z, x), axis z uses (x, y).  The cyclic shift x -> y -> z -> x
// is an automorphism of the group, so the three axes are handled uniformly.

#include <algorithm>
#include <array>
#include <compare>
#include <deque>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hwcover/counts.hpp"
#include "hwcover/element.hpp"
#include "hwcover/lattice.hpp"
#include "hwcover/types.hpp"

namespace hwcover::catalog {

enum class Axis : std::uint8_t { x = 0, y = 1, z = 2 };

inline constexpr std::array<Axis, 3> kAxes = {Axis::x, Axis::y, Axis::z};

constexpr int axis_index(Axis a) { return static_cast<int>(a); }

constexpr Letter axis_letter(Axis a) { return static_cast<Letter>(axis_index(a) + 1); }

constexpr char axis_char(Axis a) { return "xyz"[axis_index(a)]; }

/// Lambda coordinates (0 = x, 1 = y, 2 = z) spanning the complement of `a`.
constexpr std::array<int, 2> complement(Axis a) {
  switch (a) {
    case Axis::x: return {1, 2};
    case Axis::y: return {2, 0};
    case Axis::z: return {0, 1};
  }
  return {1, 2};
}

inline Vec3 embed(Axis a, const Vec2& p) {
  Vec3 v{0, 0, 0};
  const auto cc = complement(a);
  v[cc[0]] = p[0];
  v[cc[1]] = p[1];
  return v;
}

inline Vec2 project(Axis a, const Vec3& v) {
  const auto cc = complement(a);
  return {v[cc[0]], v[cc[1]]};
}

struct Z3Type {
  Hnf3 lattice;

  friend bool operator==(const Z3Type&, const Z3Type&) = default;
  friend auto operator<=>(const Z3Type&, const Z3Type&) = default;
};

struct G2Type {
  Axis axis = Axis::x;
  Int k = 1;
  Hnf2 H;
  Int hs = 0;
  Int ht = 0;

  friend bool operator==(const G2Type&, const G2Type&) = default;
  friend auto operator<=>(const G2Type&, const G2Type&) = default;
};

struct G6Type {
  Int k = 1;
  Int l = 1;
  Int m = 1;
  Int u = 0;
  Int v = 0;
  Int w = 0;

  friend bool operator==(const G6Type&, const G6Type&) = default;
  friend auto operator<=>(const G6Type&, const G6Type&) = default;
};

using SubgroupDescriptor = std::variant<Z3Type, G2Type, G6Type>;

constexpr IsoType iso_type(const Z3Type&) { return IsoType::G1; }
constexpr IsoType iso_type(const G2Type&) { return IsoType::G2; }
constexpr IsoType iso_type(const G6Type&) { return IsoType::G6; }
inline IsoType iso_type(const SubgroupDescriptor& d) {
  return std::visit([](const auto& x) { return iso_type(x); }, d);
}

inline SubgroupDescriptor whole_group() { return G6Type{}; }

// ---------------------------------------------------------------------------
// Validity and index

inline bool valid(const Z3Type& d) { return d.lattice.valid(); }

inline bool valid(const G2Type& d) {
  return d.k > 0 && d.k % 2 == 1 && d.H.valid() && d.hs >= 0 && d.hs < d.H.b && d.ht >= 0 && d.ht < d.H.a;
}

inline bool valid(const G6Type& d) {
  const auto odd_pos = [](Int t) { return t > 0 && t % 2 == 1; };
  return odd_pos(d.k) && odd_pos(d.l) && odd_pos(d.m) && d.u >= 0 && d.u < d.l && d.v >= 0 && d.v < d.m &&
         d.w >= 0 && d.w < d.k;
}

inline bool valid(const SubgroupDescriptor& d) {
  return std::visit([](const auto& x) { return valid(x); }, d);
}

template <class T>
void require_valid(const T& d) {
  if (!valid(d)) throw std::invalid_argument("descriptor parameters out of range");
}

inline Int index_of(const Z3Type& d) { return 4 * d.lattice.index(); }
inline Int index_of(const G2Type& d) { return 2 * d.k * d.H.index(); }
inline Int index_of(const G6Type& d) { return d.k * d.l * d.m; }
inline Int index_of(const SubgroupDescriptor& d) {
  return std::visit([](const auto& x) { return index_of(x); }, d);
}

// ---------------------------------------------------------------------------
// Generators

using Generators = std::array<Element, 3>;

inline Generators generators(const Z3Type& d) {
  require_valid(d);
  const auto g = d.lattice.generators();
  return {lattice_element(g[0]), lattice_element(g[1]), lattice_element(g[2])};
}

/// (X, Y, Z): the two generators of H embedded in Lambda, then the element
/// with minimal positive odd exponent at the axis.
inline Generators generators(const G2Type& d) {
  require_valid(d);
  const auto g = d.H.generators();
  const Element z = generator_power(axis_letter(d.axis), d.k) * lattice_element(embed(d.axis, {d.hs, d.ht}));
  return {lattice_element(embed(d.axis, g[0])), lattice_element(embed(d.axis, g[1])), z};
}

inline Generators generators(const G6Type& d) {
  require_valid(d);
  using detail::mod;
  const Int r = mod(1 - d.k + 2 * d.w, 2 * d.k) / 2;
  const Int s = mod(d.l - 1 + 2 * d.u, 2 * d.l) / 2;
  const Int t = mod(d.m - 1 + 2 * d.v, 2 * d.m) / 2;
  return {generator_power(Letter::X, d.m) * lattice_element(0, r, s),
          generator_power(Letter::Y, d.k) * lattice_element(t, 0, d.u),
          generator_power(Letter::Z, d.l) * lattice_element(d.v, d.w, 0)};
}

inline Generators generators(const SubgroupDescriptor& d) {
  return std::visit([](const auto& x) { return generators(x); }, d);
}

// ---------------------------------------------------------------------------
// Membership

inline bool contains(const Z3Type& d, const Element& g) {
  return g.letter == Letter::E && d.lattice.contains(g.half_exponents());
}

inline bool contains(const G2Type& d, const Element& g) {
  const Letter al = axis_letter(d.axis);
  if (g.letter != Letter::E && g.letter != al) return false;
  const Int e = exponents(g)[axis_index(d.axis)];
  if (e % d.k != 0) return false;
  const Element z = generators(d)[2];
  const Element rest = g * power(z, -(e / d.k));
  // The remaining element lies in the complementary plane of Lambda.
  if (rest.letter != Letter::E || rest.half_exponents()[axis_index(d.axis)] != 0)
    throw std::logic_error("G2 membership: axis reduction failed");
  return d.H.contains(project(d.axis, rest.half_exponents()));
}

namespace detail {

inline bool in_core(const G6Type& d, const Element& g) {
  return g.letter == Letter::E && g.a % d.m == 0 && g.b % d.k == 0 && g.c % d.l == 0;
}

}  // namespace detail

inline bool contains(const G6Type& d, const Element& g) {
  if (g.letter == Letter::E) return detail::in_core(d, g);
  const Element rep = generators(d)[letter_index(g.letter) - 1];
  return detail::in_core(d, inverse(rep) * g);
}

inline bool contains(const SubgroupDescriptor& d, const Element& g) {
  return std::visit([&](const auto& x) { return contains(x, g); }, d);
}

// ---------------------------------------------------------------------------
// Conjugation: descriptor of v * D * v^-1

inline Z3Type conjugate_descriptor(const Z3Type& d, const Element& v) {
  return {d.lattice.flipped(sign_pattern(v.letter))};
}

inline G2Type conjugate_descriptor(const G2Type& d, const Element& v) {
  const Vec3 s = sign_pattern(v.letter);
  const Vec2 sp = project(d.axis, s);
  G2Type r{d.axis, d.k, flipped(d.H, sp), 0, 0};
  Element z = conjugate(generators(d)[2], v);
  if (exponents(z)[axis_index(d.axis)] < 0) z = inverse(z);
  if (z.letter != axis_letter(d.axis) || exponents(z)[axis_index(d.axis)] != d.k)
    throw std::logic_error("G2 conjugation: unexpected axis exponent");
  const Vec2 h = r.H.reduce(project(d.axis, z.half_exponents()));
  r.hs = h[0];
  r.ht = h[1];
  return r;
}

// The Y coset fixes u modulo l and the Z coset fixes v, w modulo m, k.
inline G6Type conjugate_descriptor(const G6Type& d, const Element& v) {
  const Generators g = generators(d);
  const Element y = conjugate(g[1], v);
  const Element z = conjugate(g[2], v);
  using hwcover::detail::mod;
  return {d.k, d.l, d.m, mod(y.c, d.l), mod(z.a, d.m), mod(z.b, d.k)};
}

inline SubgroupDescriptor conjugate_descriptor(const SubgroupDescriptor& d, const Element& v) {
  return std::visit([&](const auto& x) -> SubgroupDescriptor { return conjugate_descriptor(x, v); }, d);
}

template <class T>
bool is_normal(const T& d) {
  for (Letter l : {Letter::X, Letter::Y, Letter::Z})
    if (!(conjugate_descriptor(d, generator(l)) == d)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration

inline std::vector<Z3Type> enumerate_z3(Int n) {
  std::vector<Z3Type> out;
  if (n < 1 || n % 4 != 0) return out;
  for (const Hnf3& h : enumerate_hnf3(n / 4)) out.push_back({h});
  return out;
}

inline std::vector<G2Type> enumerate_g2(Int n) {
  std::vector<G2Type> out;
  if (n < 2 || n % 2 != 0) return out;
  const Int half = n / 2;
  for (Axis axis : kAxes) {
    for (Int k = 1; k <= half; k += 2) {
      if (half % k != 0) continue;
      for (const Hnf2& H : enumerate_hnf2(half / k))
        for (Int s = 0; s < H.b; ++s)
          for (Int t = 0; t < H.a; ++t) out.push_back({axis, k, H, s, t});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<G6Type> enumerate_g6(Int n) {
  std::vector<G6Type> out;
  if (n < 1 || n % 2 == 0) return out;
  for (Int k = 1; k <= n; k += 2) {
    if (n % k != 0) continue;
    for (Int l = 1; l <= n / k; l += 2) {
      if ((n / k) % l != 0) continue;
      const Int m = n / k / l;
      for (Int u = 0; u < l; ++u)
        for (Int v = 0; v < m; ++v)
          for (Int w = 0; w < k; ++w) out.push_back({k, l, m, u, v, w});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<SubgroupDescriptor> enumerate(IsoType type, Int n) {
  std::vector<SubgroupDescriptor> out;
  const auto append = [&](const auto& v) { out.insert(out.end(), v.begin(), v.end()); };
  switch (type) {
    case IsoType::G1: append(enumerate_z3(n)); break;
    case IsoType::G2: append(enumerate_g2(n)); break;
    case IsoType::G6: append(enumerate_g6(n)); break;
  }
  return out;
}

/// Every index-n subgroup, grouped by type (Z3, G2, G6) and sorted.
inline std::vector<SubgroupDescriptor> enumerate_all(Int n) {
  std::vector<SubgroupDescriptor> out;
  for (IsoType t : kIsoTypes) {
    auto part = enumerate(t, n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Orbits

inline const std::vector<Element>& generator_conjugators() {
  static const std::vector<Element> g = {generator(Letter::X), generator(Letter::Y), generator(Letter::Z)};
  return g;
}

/// Partition `ds` into orbits of the group generated by conjugation with
/// `conjugators` (by default x, y, z: full conjugacy classes).  Orbits are
/// closed transitively, so a class may contain conjugates absent from `ds`.
/// Classes are sorted internally and ordered by their first member.
template <class T>
std::vector<std::vector<T>> orbits(std::vector<T> ds, std::span<const Element> conjugators) {
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  if (!ds.empty()) {
    const Int n = index_of(ds.front());
    for (const T& d : ds)
      if (index_of(d) != n) throw std::invalid_argument("orbits: descriptors of different index");
  }
  std::set<T> seen;
  std::vector<std::vector<T>> classes;
  for (const T& start : ds) {
    if (seen.contains(start)) continue;
    std::vector<T> cls{start};
    seen.insert(start);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (const Element& g : conjugators) {
        T next = conjugate_descriptor(cls[i], g);
        if (seen.insert(next).second) cls.push_back(std::move(next));
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

template <class T>
std::vector<std::vector<T>> conjugacy_classes(std::vector<T> ds) {
  return orbits(std::move(ds), std::span<const Element>(generator_conjugators()));
}

/// Number of conjugacy classes among the index-n subgroups of one type.
inline Int class_count(IsoType type, Int n) {
  switch (type) {
    case IsoType::G1: return static_cast<Int>(conjugacy_classes(enumerate_z3(n)).size());
    case IsoType::G2: return static_cast<Int>(conjugacy_classes(enumerate_g2(n)).size());
    case IsoType::G6: return static_cast<Int>(conjugacy_classes(enumerate_g6(n)).size());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Partitions of the Z^3-type and G2-type counts

/// Z^3-type subgroups split by conjugacy class size: m1 normal ones, m2 in
/// classes of two, m4 in classes of four.
struct MPartition {
  Int m1 = 0;
  Int m2 = 0;
  Int m4 = 0;

  friend bool operator==(const MPartition&, const MPartition&) = default;
};

inline MPartition m_partition_by_orbits(Int n) {
  MPartition p;
  for (const auto& cls : conjugacy_classes(enumerate_z3(n))) {
    switch (cls.size()) {
      case 1: p.m1 += 1; break;
      case 2: p.m2 += 2; break;
      case 4: p.m4 += 4; break;
      default: throw std::logic_error("Z3 conjugacy class of size " + std::to_string(cls.size()));
    }
  }
  return p;
}

/// Index-n Z^3-type subgroups normalized by the given generator letter.
inline Int fixed_by_count(Int n, Letter l) {
  Int count = 0;
  const Element g = generator(l);
  for (const Z3Type& d : enumerate_z3(n))
    if (conjugate_descriptor(d, g) == d) ++count;
  return count;
}

/// m1 from the normal-subgroup formula; m2 from 3 m1 + m2 = |Mx|+|My|+|Mz|
/// where each |M_axis| is a sign-flip-invariant sublattice count.
inline MPartition m_partition_closed(Int n) {
  MPartition p;
  p.m1 = normal_z3_closed(n);
  const Int fixed = 3 * numtheory::at_dyadic(fixed_sublattices_3d_closed, n, 2);
  p.m2 = fixed - 3 * p.m1;
  p.m4 = count_s(IsoType::G1, n) - p.m1 - p.m2;
  return p;
}

inline MPartition m_partition(Int n) {
  if (n < 1) throw std::invalid_argument("m_partition: n must be positive");
  const MPartition a = m_partition_by_orbits(n);
  const MPartition b = m_partition_closed(n);
  if (!(a == b)) throw CrossCheckError("m_partition: orbit and closed-form partitions differ at n=" + std::to_string(n));
  return a;
}

/// Partial conjugacy classes of G2-type subgroups inside Gamma_x: k1 of them
/// are fixed by conjugation with y, k2 are not.
struct KPartition {
  Int k1 = 0;
  Int k2 = 0;

  friend bool operator==(const KPartition&, const KPartition&) = default;
};

inline KPartition k_partition_closed(Int n) {
  const Int k1 = k1_closed(n);
  return {k1, partial_classes_total(n) - k1};
}

inline KPartition k_partition_by_orbits(Int n) {
  std::vector<G2Type> ds;
  for (const G2Type& d : enumerate_g2(n))
    if (d.axis == Axis::x) ds.push_back(d);
  const std::vector<Element> gamma = {generator(Letter::X), lattice_element(0, 1, 0), lattice_element(0, 0, 1)};
  const auto partial = orbits(ds, std::span<const Element>(gamma));
  KPartition p;
  for (const auto& cls : partial) {
    const G2Type img = conjugate_descriptor(cls.front(), generator(Letter::Y));
    if (std::binary_search(cls.begin(), cls.end(), img))
      ++p.k1;
    else
      ++p.k2;
  }
  return p;
}

inline KPartition k_partition(Int n) {
  if (n < 1) throw std::invalid_argument("k_partition: n must be positive");
  const KPartition a = k_partition_closed(n);
  if (a.k1 != k1_piecewise(n))
    throw CrossCheckError("k_partition: closed and piecewise k1 differ at n=" + std::to_string(n));
  const KPartition b = k_partition_by_orbits(n);
  if (!(a == b)) throw CrossCheckError("k_partition: orbit and closed-form partitions differ at n=" + std::to_string(n));
  return a;
}

// ---------------------------------------------------------------------------
// Sign-flip invariant sublattices

inline Int fixed_sublattices_2d_constructive(Int n) {
  Int count = 0;
  for (const Hnf2& h : enumerate_hnf2(n))
    if (flipped(h, {1, -1}) == h) ++count;
  return count;
}

inline Int fixed_sublattices_3d_constructive(Int n) {
  Int count = 0;
  for (const Hnf3& h : enumerate_hnf3(n))
    if (h.flipped({1, 1, -1}) == h) ++count;
  return count;
}

inline Int fixed_sublattices_2d(Int n) {
  const Int a = fixed_sublattices_2d_closed(n);
  if (a != fixed_sublattices_2d_constructive(n))
    throw CrossCheckError("fixed_sublattices_2d: mismatch at n=" + std::to_string(n));
  return a;
}

inline Int fixed_sublattices_3d(Int n) {
  const Int a = fixed_sublattices_3d_closed(n);
  if (a != fixed_sublattices_3d_constructive(n))
    throw CrossCheckError("fixed_sublattices_3d: mismatch at n=" + std::to_string(n));
  return a;
}

// ---------------------------------------------------------------------------
// Normal subgroups

struct NormalCounts {
  Int z3 = 0;
  Int g2 = 0;
  Int g6 = 0;

  friend bool operator==(const NormalCounts&, const NormalCounts&) = default;
};

inline NormalCounts normal_counts_closed(Int n) {
  return {normal_z3_closed(n), normal_g2_closed(n), normal_g6_closed(n)};
}

inline NormalCounts normal_counts_enumerated(Int n) {
  NormalCounts c;
  for (const auto& d : enumerate_z3(n)) c.z3 += is_normal(d);
  for (const auto& d : enumerate_g2(n)) c.g2 += is_normal(d);
  for (const auto& d : enumerate_g6(n)) c.g6 += is_normal(d);
  return c;
}

inline NormalCounts normal_counts(Int n) {
  if (n < 1) throw std::invalid_argument("normal_counts: n must be positive");
  const NormalCounts a = normal_counts_closed(n);
  if (!(a == normal_counts_enumerated(n)))
    throw CrossCheckError("normal_counts: closed form and enumeration differ at n=" + std::to_string(n));
  return a;
}

}  // namespace hwcover::catalog
