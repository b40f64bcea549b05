#pragma once

// Coefficientwise comparison of the tabulated generating functions with the
// closed-form counts.

#include <optional>
#include <string>
#include <vector>

#include "hwcover/counts.hpp"
#include "hwcover/numtheory.hpp"

namespace hwcover::series {

using numtheory::CoeffSeries;

/// Coefficients 1..N of the closed-form count sequence.
inline CoeffSeries theorem_coeffs(IsoType type, Kind kind, std::size_t N) {
  CoeffSeries r(N);
  for (Int n = 1; n <= static_cast<Int>(N); ++n)
    r[n] = kind == Kind::s ? catalog::count_s(type, n) : catalog::count_c(type, n);
  return r;
}

/// One comparison between a tabulated row and a count sequence.
struct Verdict {
  int row = 0;                // 1..3, as tabulated
  Kind kind = Kind::s;
  IsoType printed_label;      // label the row carries in the table
  IsoType compared_to;        // sequence it was compared against
  bool match = false;
  Int first_divergent = 0;    // 0 on match
  Int table_value = 0;        // at first_divergent
  Int theorem_value = 0;
};

/// First n where the two series differ, if any.
inline std::optional<Int> first_divergence(const CoeffSeries& a, const CoeffSeries& b) {
  for (Int n = 1; n <= static_cast<Int>(a.order()); ++n)
    if (a[n] != b[n]) return n;
  return std::nullopt;
}

inline Verdict compare_row(int row, IsoType printed, IsoType source, IsoType target, Kind kind, std::size_t N) {
  const CoeffSeries tab = numtheory::table2_coeffs(source, kind, N);
  const CoeffSeries thm = theorem_coeffs(target, kind, N);
  Verdict v{row, kind, printed, target, true, 0, 0, 0};
  if (auto n = first_divergence(tab, thm)) {
    v.match = false;
    v.first_divergent = *n;
    v.table_value = tab[*n];
    v.theorem_value = thm[*n];
  }
  return v;
}

/// All comparisons up to N.  Rows 1 and 2 are compared against the type they
/// are labeled with.  Row 3 is labeled G1 but has the shape of the G6
/// sequences, so it is compared against both.
inline std::vector<Verdict> table2_verdicts(std::size_t N) {
  std::vector<Verdict> out;
  for (Kind kind : {Kind::s, Kind::c}) {
    out.push_back(compare_row(1, IsoType::G1, IsoType::G1, IsoType::G1, kind, N));
    out.push_back(compare_row(2, IsoType::G2, IsoType::G2, IsoType::G2, kind, N));
    out.push_back(compare_row(3, IsoType::G1, IsoType::G6, IsoType::G6, kind, N));
    out.push_back(compare_row(3, IsoType::G1, IsoType::G6, IsoType::G1, kind, N));
  }
  return out;
}

/// The comparisons expected to agree: every row against its actual type,
/// except the G2 subgroup row, which is off by a factor of 3.
inline bool expected_match(const Verdict& v) {
  if (v.row == 3) return v.compared_to == IsoType::G6;
  return !(v.row == 2 && v.kind == Kind::s);
}

}  // namespace hwcover::series
