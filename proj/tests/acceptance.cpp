// Acceptance report: one PASS/FAIL line per criterion.
//
//   acceptance          run all criteria, exit 1 if any fails
//   acceptance K        run criterion K only
//
// Every comparison is exact; the only tolerances are the wall-clock budgets
// below.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "hwcover/catalog.hpp"
#include "hwcover/oracle.hpp"
#include "hwcover/selfcheck.hpp"
#include "hwcover/series.hpp"

namespace {

using namespace hwcover;
using namespace hwcover::catalog;

constexpr Int kThreeWayMax = 16;
constexpr double kThreeWayBudgetSeconds = 300.0;
constexpr Int kCatalogMax = 200;
constexpr double kCatalogBudgetSeconds = 60.0;
constexpr Int kGroupSamples = 100000;
constexpr Int kNormalMax = 64;
constexpr Int kPartitionMax = 128;
constexpr std::size_t kSeriesOrder = 4096;
constexpr Int kOddD3Max = 10000;
constexpr Int kParityMax = 200;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (!pass) detail << "; ";
    else detail.str("");
    pass = false;
    detail << why;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string triple(Int a, Int b, Int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

void three_way(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  for (Int n = 1; n <= kThreeWayMax; ++n) {
    const auto r = oracle::cross_check(n, kThreeWayMax);
    if (!r.all_match() || !r.bijective.value_or(false)) o.fail("disagreement at n=" + std::to_string(n));
  }
  const double s = seconds_since(t0);
  if (s > kThreeWayBudgetSeconds) o.fail("took " + std::to_string(s) + " s");
  if (o.pass) o.detail << "oracle = closed form = catalog for n <= " << kThreeWayMax << ", bijective, " << s << " s";
}

void catalog_vs_closed(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  for (Int n = 1; n <= kCatalogMax; ++n)
    for (IsoType t : kIsoTypes) {
      const auto ds = enumerate(t, n);
      if (static_cast<Int>(ds.size()) != count_s(t, n))
        o.fail("s " + to_string(t) + " n=" + std::to_string(n));
      if (static_cast<Int>(conjugacy_classes(ds).size()) != count_c(t, n))
        o.fail("c " + to_string(t) + " n=" + std::to_string(n));
    }
  const double s = seconds_since(t0);
  if (s > kCatalogBudgetSeconds) o.fail("took " + std::to_string(s) + " s");
  if (o.pass) o.detail << "subgroup and class counts agree for n <= " << kCatalogMax << ", " << s << " s";
}

void spot_values(Outcome& o) {
  auto check = [&](Int n, Kind k, Int g1, Int g2, Int g6) {
    Int got[3];
    for (IsoType t : kIsoTypes) {
      const auto ds = enumerate(t, n);
      got[static_cast<int>(t)] = k == Kind::s ? static_cast<Int>(ds.size()) : static_cast<Int>(conjugacy_classes(ds).size());
    }
    const auto rep = oracle::cross_check(n, kThreeWayMax);
    for (IsoType t : kIsoTypes) {
      const auto& row = rep.rows[static_cast<int>(t)];
      const Int closed = k == Kind::s ? row.s_closed : row.c_closed;
      const auto orc = k == Kind::s ? row.s_oracle : row.c_oracle;
      if (closed != got[static_cast<int>(t)] || (orc && *orc != closed))
        o.fail("sources disagree at n=" + std::to_string(n));
    }
    if (got[0] != g1 || got[1] != g2 || got[2] != g6)
      o.fail(to_string(k) + "(" + std::to_string(n) + ") = " + triple(got[0], got[1], got[2]) + ", want " +
             triple(g1, g2, g6));
  };
  check(2, Kind::s, 0, 3, 0);
  check(2, Kind::c, 0, 3, 0);
  check(4, Kind::s, 1, 18, 0);
  check(4, Kind::c, 1, 12, 0);
  check(3, Kind::s, 0, 0, 9);
  check(3, Kind::c, 0, 0, 3);
  check(15, Kind::s, 0, 0, 135);
  check(15, Kind::c, 0, 0, 9);
  if (static_cast<Int>(enumerate_z3(8).size()) != 7) o.fail("s_G1(8) != 7");
  if (!(m_partition(8) == MPartition{7, 0, 0})) o.fail("m_partition(8) != (7,0,0)");
  if (o.pass) o.detail << "s/c at n = 2, 3, 4, 15 and s_G1(8) = 7 with m_partition (7,0,0)";
}

void group_arithmetic(Outcome& o) {
  const LawCheck c = check_group_law(standard_law(), kGroupSamples, 2024, 1000);
  if (c.relator_failures) o.fail(std::to_string(c.relator_failures) + " relators not identity");
  if (c.homomorphism_failures) o.fail(std::to_string(c.homomorphism_failures) + " homomorphism failures");
  if (c.associativity_failures) o.fail(std::to_string(c.associativity_failures) + " associativity failures");
  if (c.inverse_failures) o.fail(std::to_string(c.inverse_failures) + " inverse failures");
  std::mt19937_64 rng(4048);
  Int unique_failures = 0;
  for (Int i = 0; i < kGroupSamples; ++i) {
    const Element p = random_element(rng, 1000), q = random_element(rng, 1000);
    if (from_affine(to_affine(p)) != p || (p == q) != (to_affine(p) == to_affine(q))) ++unique_failures;
  }
  if (unique_failures) o.fail(std::to_string(unique_failures) + " canonical-form failures");
  if (o.pass) o.detail << kGroupSamples << " samples, " << relators().size() << " relators";
}

void normality(Outcome& o) {
  // The quoted Z^3 formula carries a 2 d3(n/32) term.
  Int first_bad = 0, quoted = 0, counted = 0;
  bool corrected_ok = true, others_ok = true;
  for (Int n = 1; n <= kNormalMax; ++n) {
    const NormalCounts e = normal_counts_enumerated(n);
    if (first_bad == 0 && normal_z3_quoted(n) != e.z3) {
      first_bad = n;
      quoted = normal_z3_quoted(n);
      counted = e.z3;
    }
    corrected_ok = corrected_ok && normal_z3_closed(n) == e.z3;
    others_ok = others_ok && normal_g2_closed(n) == e.g2 && normal_g6_closed(n) == e.g6;
  }
  bool piecewise_ok = true;
  for (Int n = 1; n <= kParityMax; ++n)
    piecewise_ok = piecewise_ok && normal_g2_closed(n) == (n % 4 == 2 ? 3 : n % 8 == 4 ? 6 : 0);
  if (!others_ok) o.fail("G2/G6 normal counts disagree with enumeration");
  if (!piecewise_ok) o.fail("G2 piecewise values wrong");
  if (first_bad != 0) {
    std::ostringstream s;
    s << "quoted Z3 formula d3(n/4)+4d3(n/8)+d3(n/16)+2d3(n/32) gives " << quoted << " at n=" << first_bad
      << ", enumeration gives " << counted << " (corrected form without the n/32 term "
      << (corrected_ok ? "matches" : "also fails") << " for n <= " << kNormalMax << ")";
    o.fail(s.str());
  }
  if (o.pass) o.detail << "closed forms equal enumeration for n <= " << kNormalMax;
}

void partitions(Outcome& o) {
  for (Int n = 1; n <= kPartitionMax; ++n) {
    const MPartition m = m_partition_by_orbits(n);
    const KPartition k = k_partition_by_orbits(n);
    const Int mx = fixed_by_count(n, Letter::X) + fixed_by_count(n, Letter::Y) + fixed_by_count(n, Letter::Z);
    const Int cor2 = 3 * numtheory::at_dyadic(fixed_sublattices_3d_closed, n, 2);
    const std::string at = " at n=" + std::to_string(n);
    if (4 * m.m1 + 2 * m.m2 + m.m4 != 4 * count_c(IsoType::G1, n)) o.fail("m1 + m2/2 + m4/4 != c_G1" + at);
    if (3 * (2 * k.k1 + k.k2) != 2 * count_c(IsoType::G2, n)) o.fail("3(k1 + k2/2) != c_G2" + at);
    if (3 * m.m1 + m.m2 != mx || mx != cor2) o.fail("3|M1| + |M2| != |Mx|+|My|+|Mz|" + at);
    if (k.k1 != k1_closed(n)) o.fail("|K1| != closed form" + at);
    if (count_s(IsoType::G6, n) != n * count_c(IsoType::G6, n) ||
        static_cast<Int>(enumerate_g6(n).size()) != n * class_count(IsoType::G6, n))
      o.fail("s_G6 != n c_G6" + at);
  }
  if (o.pass) o.detail << "all identities hold for n <= " << kPartitionMax;
}

void series_check(Outcome& o) {
  for (const auto& v : series::table2_verdicts(kSeriesOrder)) {
    if (v.match != series::expected_match(v))
      o.fail("row " + std::to_string(v.row) + " " + to_string(v.kind) + " vs " + to_string(v.compared_to));
  }
  for (Int n = 1; n <= kOddD3Max; ++n)
    if (!numtheory::lemma2_check(n)) o.fail("odd-factorization identity fails at n=" + std::to_string(n));
  if (o.pass) {
    o.detail << "rows (G1,s),(G1,c),(G2,c),(G6,s),(G6,c) agree for n <= " << kSeriesOrder << "; ";
    for (const auto& v : series::table2_verdicts(kSeriesOrder)) {
      if (v.match) continue;
      if (v.row == 2)
        o.detail << "(G2,s) errata: first divergence n=" << v.first_divergent << " (" << v.table_value << " vs "
                 << v.theorem_value << "); ";
      else if (v.kind == Kind::s)
        o.detail << "row 3 label errata: matches G6, differs from G1 at n=" << v.first_divergent << "; ";
    }
    o.detail << "odd-factorization identity holds for n <= " << kOddD3Max;
  }
}

void parity(Outcome& o) {
  for (Int n = 1; n <= kParityMax; ++n) {
    const Int g1 = static_cast<Int>(enumerate_z3(n).size());
    const Int g2 = static_cast<Int>(enumerate_g2(n).size());
    const Int g6 = static_cast<Int>(enumerate_g6(n).size());
    const std::string at = " at n=" + std::to_string(n);
    if (n % 2 == 1 && (g1 != 0 || g2 != 0 || g6 == 0)) o.fail("odd" + at);
    if (n % 4 == 2 && (g1 != 0 || g6 != 0 || g2 == 0)) o.fail("2 mod 4" + at);
    if (n % 4 == 0 && g6 != 0) o.fail("0 mod 4" + at);
  }
  if (o.pass) o.detail << "holds for n <= " << kParityMax;
}

struct Criterion {
  const char* name;
  std::function<void(Outcome&)> run;
};

const Criterion kCriteria[] = {
    {"three-way agreement", three_way},    {"catalog vs closed form", catalog_vs_closed},
    {"spot values", spot_values},          {"group arithmetic", group_arithmetic},
    {"normality", normality},              {"partition identities", partitions},
    {"series", series_check},              {"parity structure", parity},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 8) {
      std::cerr << "usage: acceptance [1-8]\n";
      return 2;
    }
  }
  bool all_pass = true;
  for (int i = 0; i < 8; ++i) {
    if (only && only != i + 1) continue;
    Outcome o;
    try {
      kCriteria[i].run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all_pass = all_pass && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << " (" << kCriteria[i].name
              << "): " << o.detail.str() << std::endl;
  }
  return all_pass ? 0 : 1;
}
