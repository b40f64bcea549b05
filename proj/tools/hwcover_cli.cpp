// hwcover: subgroup counts, enumerations and verification reports for the
// Hantzsche-Wendt group.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or I/O error.

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "hwcover/catalog.hpp"
#include "hwcover/io.hpp"
#include "hwcover/oracle.hpp"
#include "hwcover/selfcheck.hpp"
#include "hwcover/series.hpp"

namespace {

using namespace hwcover;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct RunConfig {
  Int index = 0;
  Int max = 0;
  std::string type;
  std::string format = "csv";
  std::string out;
  Int oracle_limit = oracle::kDefaultLimit;
  int jobs = 1;
  std::vector<int> corrupt_cell;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs f(n) for n = 1..max on `jobs` threads; results come back in order.
template <class F>
auto parallel_map(Int max, int jobs, F f) -> std::vector<decltype(f(Int{1}))> {
  std::vector<decltype(f(Int{1}))> out(static_cast<std::size_t>(max));
  std::atomic<Int> next{1};
  auto worker = [&] {
    for (Int n = next++; n <= max; n = next++) out[static_cast<std::size_t>(n - 1)] = f(n);
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(cfg.out);
  if (!os) throw UsageError("cannot open output file: " + cfg.out);
  os << text;
  if (!os) throw UsageError("cannot write output file: " + cfg.out);
}

std::vector<IsoType> selected_types(const RunConfig& cfg) {
  if (cfg.type.empty()) return {kIsoTypes.begin(), kIsoTypes.end()};
  return {parse_iso_type(cfg.type)};
}

int cmd_count(const RunConfig& cfg) {
  const auto rows = parallel_map(cfg.max, cfg.jobs, [](Int n) {
    std::array<Int, 8> r{};
    for (IsoType t : kIsoTypes) {
      r[static_cast<int>(t)] = catalog::count_s(t, n);
      r[4 + static_cast<int>(t)] = catalog::count_c(t, n);
    }
    r[3] = r[0] + r[1] + r[2];
    r[7] = r[4] + r[5] + r[6];
    return r;
  });
  static const char* names[] = {"s_G1", "s_G2", "s_G6", "s_total", "c_G1", "c_G2", "c_G6", "c_total"};
  std::ostringstream os;
  if (cfg.format == "json") {
    json arr = json::array();
    for (Int n = 1; n <= cfg.max; ++n) {
      json j = {{"n", n}};
      for (int i = 0; i < 8; ++i) j[names[i]] = rows[static_cast<std::size_t>(n - 1)][i];
      arr.push_back(j);
    }
    os << arr.dump(2) << '\n';
  } else {
    os << "n";
    for (const char* name : names) os << ',' << name;
    os << '\n';
    for (Int n = 1; n <= cfg.max; ++n) {
      os << n;
      for (Int v : rows[static_cast<std::size_t>(n - 1)]) os << ',' << v;
      os << '\n';
    }
  }
  emit(cfg, os.str());
  return kOk;
}

int cmd_enumerate(const RunConfig& cfg) {
  std::vector<catalog::SubgroupDescriptor> ds;
  Int expected = 0;
  for (IsoType t : selected_types(cfg)) {
    auto part = catalog::enumerate(t, cfg.index);
    ds.insert(ds.end(), part.begin(), part.end());
    expected += catalog::count_s(t, cfg.index);
  }
  std::ostringstream os;
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& d : ds) arr.push_back(io::to_json(d));
    os << arr.dump(2) << '\n';
  } else {
    os << io::descriptor_csv_header() << '\n';
    for (const auto& d : ds) os << io::to_csv(d) << '\n';
  }
  emit(cfg, os.str());
  std::cerr << ds.size() << " records (closed form " << expected << ")\n";
  return static_cast<Int>(ds.size()) == expected ? kOk : kMismatch;
}

int cmd_classes(const RunConfig& cfg) {
  std::ostringstream os;
  json arr = json::array();
  if (cfg.format != "json") os << "n,type,class,size,normal\n";
  bool ok = true;
  for (IsoType t : selected_types(cfg)) {
    const auto classes = catalog::conjugacy_classes(catalog::enumerate(t, cfg.index));
    ok = ok && static_cast<Int>(classes.size()) == catalog::count_c(t, cfg.index);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const auto& cls = classes[i];
      const bool normal = cls.size() == 1 && catalog::is_normal(cls.front());
      if (cfg.format == "json") {
        json members = json::array();
        for (const auto& d : cls) members.push_back(io::to_json(d));
        arr.push_back({{"n", cfg.index},
                       {"type", to_string(t)},
                       {"class", i},
                       {"size", cls.size()},
                       {"normal", normal},
                       {"members", members}});
      } else {
        os << cfg.index << ',' << to_string(t) << ',' << i << ',' << cls.size() << ',' << (normal ? "true" : "false")
           << '\n';
      }
    }
  }
  if (cfg.format == "json") os << arr.dump(2) << '\n';
  emit(cfg, os.str());
  return ok ? kOk : kMismatch;
}

int cmd_normal(const RunConfig& cfg) {
  struct Row {
    std::array<Int, 3> s, c, normal;
    bool ok;
  };
  const auto rows = parallel_map(cfg.max, cfg.jobs, [](Int n) {
    Row r{};
    const auto closed = catalog::normal_counts_closed(n);
    const auto counted = catalog::normal_counts_enumerated(n);
    r.ok = closed == counted;
    r.normal = {closed.z3, closed.g2, closed.g6};
    for (IsoType t : kIsoTypes) {
      r.s[static_cast<int>(t)] = catalog::count_s(t, n);
      r.c[static_cast<int>(t)] = catalog::count_c(t, n);
    }
    return r;
  });
  std::ostringstream os;
  json arr = json::array();
  if (cfg.format != "json") os << "n,type,s,c,normal\n";
  bool ok = true;
  for (Int n = 1; n <= cfg.max; ++n) {
    const Row& r = rows[static_cast<std::size_t>(n - 1)];
    ok = ok && r.ok;
    if (!r.ok) std::cerr << "normal subgroup count mismatch at n=" << n << '\n';
    for (IsoType t : selected_types(cfg)) {
      const int i = static_cast<int>(t);
      if (cfg.format == "json")
        arr.push_back({{"n", n}, {"type", to_string(t)}, {"s", r.s[i]}, {"c", r.c[i]}, {"normal", r.normal[i]}});
      else
        os << n << ',' << to_string(t) << ',' << r.s[i] << ',' << r.c[i] << ',' << r.normal[i] << '\n';
    }
  }
  if (cfg.format == "json") os << arr.dump(2) << '\n';
  emit(cfg, os.str());
  return ok ? kOk : kMismatch;
}

int cmd_series(const RunConfig& cfg) {
  const auto N = static_cast<std::size_t>(cfg.max);
  const auto verdicts = series::table2_verdicts(N);
  std::ostringstream os;
  if (cfg.format == "json") {
    json rows = json::array();
    for (IsoType t : kIsoTypes)
      for (Kind k : {Kind::s, Kind::c})
        rows.push_back({{"type", to_string(t)},
                        {"kind", to_string(k)},
                        {"table2", io::to_json(numtheory::table2_coeffs(t, k, N))},
                        {"theorem", io::to_json(series::theorem_coeffs(t, k, N))}});
    json vs = json::array();
    for (const auto& v : verdicts) vs.push_back(io::to_json(v));
    os << json{{"N", cfg.max}, {"series", rows}, {"verdicts", vs}}.dump(2) << '\n';
  } else {
    os << "type,kind,n,table2,theorem\n";
    for (IsoType t : kIsoTypes)
      for (Kind k : {Kind::s, Kind::c}) {
        const auto tab = numtheory::table2_coeffs(t, k, N);
        const auto thm = series::theorem_coeffs(t, k, N);
        for (Int n = 1; n <= cfg.max; ++n)
          os << to_string(t) << ',' << to_string(k) << ',' << n << ',' << tab[n] << ',' << thm[n] << '\n';
      }
  }
  emit(cfg, os.str());
  for (const auto& v : verdicts) {
    std::cerr << "row " << v.row << " (" << to_string(v.printed_label) << ", " << to_string(v.kind) << ") vs "
              << to_string(v.compared_to) << ": ";
    if (v.match)
      std::cerr << "match for n <= " << cfg.max << '\n';
    else
      std::cerr << "mismatch at n=" << v.first_divergent << " (table " << v.table_value << ", formula "
                << v.theorem_value << ")\n";
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  bool ok = true;
  GroupLaw law;
  if (!cfg.corrupt_cell.empty()) {
    LetterTable t = kLetterTable;
    t.at(cfg.corrupt_cell.at(0)).at(cfg.corrupt_cell.at(1)).shift[0] += 1;
    law = GroupLaw(t);
  }
  const LawCheck lc = check_group_law(law, 20000);
  if (!lc.ok()) {
    ok = false;
    std::cerr << "group law: " << lc.relator_failures << " relator, " << lc.homomorphism_failures
              << " homomorphism, " << lc.associativity_failures << " associativity, " << lc.inverse_failures
              << " inverse failures\n";
  }
  for (const auto& v : series::table2_verdicts(static_cast<std::size_t>(cfg.max)))
    if (v.match != series::expected_match(v)) {
      ok = false;
      std::cerr << "series row " << v.row << " " << to_string(v.kind) << " vs " << to_string(v.compared_to)
                << ": unexpected verdict\n";
    }
  const Int limit = cfg.oracle_limit;
  const auto reports = parallel_map(cfg.max, cfg.jobs, [limit](Int n) { return oracle::cross_check(n, limit); });
  std::ostringstream os;
  json arr = json::array();
  if (cfg.format != "json") os << io::report_csv_header() << '\n';
  for (const auto& r : reports) {
    if (!r.all_match()) {
      ok = false;
      for (const auto& row : r.rows)
        if (!row.match) std::cerr << "mismatch: n=" << r.n << " type " << to_string(row.type) << '\n';
      if (r.bijective && !*r.bijective) std::cerr << "mismatch: n=" << r.n << " catalog/oracle subgroup sets differ\n";
    }
    if (cfg.format == "json")
      arr.push_back(io::to_json(r));
    else
      os << io::to_csv(r);
  }
  if (cfg.format == "json") os << arr.dump(2) << '\n';
  emit(cfg, os.str());
  std::cerr << (ok ? "verify: all checks agree\n" : "verify: MISMATCH\n");
  return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-index subgroups of the Hantzsche-Wendt group"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out, "Output path (default stdout)");
  };
  auto add_max = [&](CLI::App* sub) {
    sub->add_option("--max", cfg.max, "Largest index")->required()->check(CLI::Range(Int{1}, Int{1} << 20));
  };
  auto add_index = [&](CLI::App* sub) {
    sub->add_option("--index", cfg.index, "Subgroup index")->required()->check(CLI::Range(Int{1}, Int{1} << 20));
  };
  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--type", cfg.type, "Isomorphism type")->check(CLI::IsMember({"g1", "g2", "g6"}));
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1, 256));
  };

  auto* count = app.add_subcommand("count", "Closed-form subgroup and class counts");
  add_max(count);
  add_common(count);
  add_jobs(count);

  auto* enumerate = app.add_subcommand("enumerate", "List subgroup descriptors");
  add_index(enumerate);
  add_type(enumerate);
  add_common(enumerate);

  auto* classes = app.add_subcommand("classes", "Conjugacy classes of subgroups");
  add_index(classes);
  add_type(classes);
  add_common(classes);

  auto* normal = app.add_subcommand("normal", "Normal subgroup counts");
  add_max(normal);
  add_type(normal);
  add_common(normal);
  add_jobs(normal);

  auto* series = app.add_subcommand("series", "Dirichlet series coefficients and verdicts");
  add_max(series);
  add_common(series);

  auto* verify = app.add_subcommand("verify", "Closed form / catalog / oracle agreement");
  add_max(verify);
  add_common(verify);
  add_jobs(verify);
  verify->add_option("--oracle-limit", cfg.oracle_limit, "Largest index checked by the oracle")
      ->check(CLI::Range(Int{0}, oracle::kHardCap));
  verify->add_option("--corrupt-table-cell", cfg.corrupt_cell, "Fault injection: perturb letter table cell ROW COL")
      ->expected(2)
      ->check(CLI::Range(0, 3))
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*count) return cmd_count(cfg);
    if (*enumerate) return cmd_enumerate(cfg);
    if (*classes) return cmd_classes(cfg);
    if (*normal) return cmd_normal(cfg);
    if (*series) return cmd_series(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
