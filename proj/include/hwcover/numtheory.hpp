#pragma once

// Divisor sums over ordered factorizations and truncated Dirichlet series.
//
// All arithmetic functions take an integer argument and return 0 for n <= 0.
// A value at a quotient n / d is read through at_quotient(), which returns 0
// when d does not divide n; this is how "f(n/4)" vanishes for n not divisible
// by 4.

#include <boost/rational.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hwcover/element.hpp"
#include "hwcover/types.hpp"

namespace hwcover::numtheory {

using Rational = boost::rational<Int>;

namespace detail {

template <class F>
Int divisor_sum(Int n, F&& f) {
  if (n <= 0) return 0;
  Int total = 0;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    total += f(d);
    if (d != n / d) total += f(n / d);
  }
  return total;
}

}  // namespace detail

/// Number of ordered pairs ab = n.
inline Int sigma0(Int n) {
  return detail::divisor_sum(n, [](Int) { return Int{1}; });
}

/// Sum over ab = n of a.
inline Int sigma1(Int n) {
  return detail::divisor_sum(n, [](Int d) { return d; });
}

/// Sum over abc = n of a, i.e. sum over ab = n of sigma1(a).
inline Int sigma2(Int n) {
  return detail::divisor_sum(n, [](Int d) { return sigma1(d); });
}

/// Number of ordered triples abc = n.
inline Int d3(Int n) {
  return detail::divisor_sum(n, [](Int d) { return sigma0(d); });
}

/// Sum over abc = n of a^2 b, i.e. sum over ab = n of a sigma1(a).
inline Int omega(Int n) {
  return detail::divisor_sum(n, [](Int d) { return d * sigma1(d); });
}

/// f(n / d), or 0 when n / d is not a positive integer.
template <class F>
Int at_quotient(F&& f, Int n, Int d) {
  if (d <= 0 || n <= 0 || n % d != 0) return 0;
  return f(n / d);
}

/// f(n / 2^k), or 0 when that is not a positive integer.
template <class F>
Int at_dyadic(F&& f, Int n, int k) {
  return at_quotient(f, n, Int{1} << k);
}

/// d3(n) - 3 d3(n/2) + 3 d3(n/4) - d3(n/8): the number of factorizations
/// n = abc with a, b, c all odd.
inline Int odd_d3(Int n) {
  return d3(n) - 3 * at_dyadic(d3, n, 1) + 3 * at_dyadic(d3, n, 2) - at_dyadic(d3, n, 3);
}

/// The alternating sum above equals d3(n) for odd n and 0 for even n.
inline bool lemma2_check(Int n) {
  if (n < 1) throw std::invalid_argument("lemma2_check: n must be positive");
  return odd_d3(n) == (n % 2 == 1 ? d3(n) : 0);
}

// ---------------------------------------------------------------------------
// Truncated Dirichlet series

/// Coefficients a_1 .. a_N of sum a_n n^-s.  Indexing is 1-based.
class CoeffSeries {
 public:
  CoeffSeries() = default;
  explicit CoeffSeries(std::size_t order) : coeffs_(order, 0) {
    if (order == 0) throw std::invalid_argument("CoeffSeries: order must be positive");
  }
  explicit CoeffSeries(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("CoeffSeries: order must be positive");
  }

  std::size_t order() const { return coeffs_.size(); }

  Int& operator[](Int n) { return coeffs_.at(static_cast<std::size_t>(n - 1)); }
  Int operator[](Int n) const { return coeffs_.at(static_cast<std::size_t>(n - 1)); }

  /// a_n, or 0 outside 1..N.
  Int value_at(Int n) const {
    return (n >= 1 && n <= static_cast<Int>(order())) ? coeffs_[static_cast<std::size_t>(n - 1)] : 0;
  }

  const std::vector<Int>& coeffs() const { return coeffs_; }

  friend bool operator==(const CoeffSeries&, const CoeffSeries&) = default;

 private:
  std::vector<Int> coeffs_;
};

/// Polynomial p_0 + p_1 t + p_2 t^2 + ... in t = 2^-s.  A factor 2^{-s+1}
/// is written as 2t.
struct TwoAdicPoly {
  std::vector<Int> coeffs{1};

  friend bool operator==(const TwoAdicPoly&, const TwoAdicPoly&) = default;
};

inline TwoAdicPoly operator*(const TwoAdicPoly& p, const TwoAdicPoly& q) {
  TwoAdicPoly r;
  r.coeffs.assign(p.coeffs.size() + q.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < p.coeffs.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs.size(); ++j) r.coeffs[i + j] += p.coeffs[i] * q.coeffs[j];
  return r;
}

inline TwoAdicPoly operator+(const TwoAdicPoly& p, const TwoAdicPoly& q) {
  TwoAdicPoly r;
  r.coeffs.assign(std::max(p.coeffs.size(), q.coeffs.size()), 0);
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) r.coeffs[i] += p.coeffs[i];
  for (std::size_t i = 0; i < q.coeffs.size(); ++i) r.coeffs[i] += q.coeffs[i];
  return r;
}

inline TwoAdicPoly pow(const TwoAdicPoly& p, int e) {
  TwoAdicPoly r;
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

/// t^k.
inline TwoAdicPoly monomial(int k, Int coeff = 1) {
  TwoAdicPoly r;
  r.coeffs.assign(static_cast<std::size_t>(k) + 1, 0);
  r.coeffs.back() = coeff;
  return r;
}

/// Dirichlet convolution (f * g)(n) = sum_{k | n} f(k) g(n / k).
inline CoeffSeries convolve(const CoeffSeries& f, const CoeffSeries& g) {
  if (f.order() != g.order()) throw std::invalid_argument("convolve: truncation orders differ");
  const Int N = static_cast<Int>(f.order());
  CoeffSeries r(f.order());
  for (Int k = 1; k <= N; ++k) {
    const Int fk = f[k];
    if (fk == 0) continue;
    for (Int m = 1; k * m <= N; ++m) r[k * m] += fk * g[m];
  }
  return r;
}

inline CoeffSeries operator*(const CoeffSeries& f, const CoeffSeries& g) { return convolve(f, g); }

inline CoeffSeries operator+(const CoeffSeries& f, const CoeffSeries& g) {
  if (f.order() != g.order()) throw std::invalid_argument("series sum: truncation orders differ");
  CoeffSeries r(f.order());
  for (Int n = 1; n <= static_cast<Int>(f.order()); ++n) r[n] = f[n] + g[n];
  return r;
}

/// Coefficients of zeta(s - shift): a_n = n^shift.
inline CoeffSeries zeta_coeffs(int shift, std::size_t N) {
  if (shift < 0) throw std::invalid_argument("zeta_coeffs: shift must be non-negative");
  CoeffSeries r(N);
  for (Int n = 1; n <= static_cast<Int>(N); ++n) {
    Int v = 1;
    for (int i = 0; i < shift; ++i) v *= n;
    r[n] = v;
  }
  return r;
}

/// scale * p(2^-s) * f(s):  result(n) = scale * sum_k p_k f(n / 2^k).
/// Throws std::domain_error if a resulting coefficient is not an integer.
inline CoeffSeries apply_poly(const TwoAdicPoly& p, const CoeffSeries& f, Rational scale = Rational(1)) {
  CoeffSeries r(f.order());
  for (Int n = 1; n <= static_cast<Int>(f.order()); ++n) {
    Int acc = 0;
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
      if (p.coeffs[k] == 0) continue;
      acc += p.coeffs[k] * at_dyadic([&](Int q) { return f[q]; }, n, static_cast<int>(k));
    }
    const Rational v = scale * acc;
    if (v.denominator() != 1)
      throw std::domain_error("apply_poly: non-integer coefficient at n=" + std::to_string(n));
    r[n] = v.numerator();
  }
  return r;
}

/// Coefficients of the tabulated Dirichlet generating functions, written
/// with t = 2^-s:
///
///   G1 s:  t^2 zeta(s) zeta(s-1) zeta(s-2)
///   G1 c:  (1/4) t^2 zeta(s) zeta(s-1) (zeta(s-2) + 3 (1 + 3t) zeta(s))
///   G2 s:  t (1 - t) zeta(s) zeta(s-1) zeta(s-2)
///   G2 c:  (3/2) t (1 - t) zeta^2(s) ((1 + 3t) zeta(s-1) + (1 - t)^2 (1 + 2t) zeta(s))
///   G6 s:  (1 - 2t)^3 zeta^3(s-1)
///   G6 c:  (1 - t)^3 zeta^3(s)
///
/// The G2 s entry is reproduced as tabulated; it is a third of the subgroup
/// count (see table2_verdicts).
inline CoeffSeries table2_coeffs(IsoType type, Kind kind, std::size_t N) {
  const CoeffSeries z0 = zeta_coeffs(0, N);
  const CoeffSeries z1 = zeta_coeffs(1, N);
  const CoeffSeries z2 = zeta_coeffs(2, N);
  const TwoAdicPoly t = monomial(1);
  const TwoAdicPoly one_minus_t{{1, -1}};
  switch (type) {
    case IsoType::G1:
      if (kind == Kind::s) return apply_poly(monomial(2), z0 * z1 * z2);
      return apply_poly(monomial(2), z0 * z1 * z2 + apply_poly(TwoAdicPoly{{3, 9}}, z0 * z1 * z0),
                        Rational(1, 4));
    case IsoType::G2:
      if (kind == Kind::s) return apply_poly(t * one_minus_t, z0 * z1 * z2);
      return apply_poly(t * one_minus_t,
                        apply_poly(TwoAdicPoly{{1, 3}}, z0 * z0 * z1) +
                            apply_poly(pow(one_minus_t, 2) * TwoAdicPoly{{1, 2}}, z0 * z0 * z0),
                        Rational(3, 2));
    case IsoType::G6:
      if (kind == Kind::s) return apply_poly(pow(TwoAdicPoly{{1, -2}}, 3), z1 * z1 * z1);
      return apply_poly(pow(one_minus_t, 3), z0 * z0 * z0);
  }
  throw std::invalid_argument("table2_coeffs: bad type");
}

}  // namespace hwcover::numtheory
