#pragma once

// JSON and CSV encodings of descriptors, series and reports.

#include "json.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "hwcover/catalog.hpp"
#include "hwcover/numtheory.hpp"
#include "hwcover/oracle.hpp"
#include "hwcover/series.hpp"

namespace hwcover::io {

using nlohmann::json;
using namespace catalog;

inline json to_json(const Z3Type& d) {
  const Hnf3& h = d.lattice;
  return {{"type", "z3"}, {"c", h.c}, {"b", h.b}, {"a", h.a}, {"e", h.e}, {"f", h.f}, {"d", h.d}};
}

inline json to_json(const G2Type& d) {
  return {{"type", "g2"},
          {"axis", std::string(1, axis_char(d.axis))},
          {"k", d.k},
          {"H", {{"b", d.H.b}, {"a", d.H.a}, {"c", d.H.c}}},
          {"h", {d.hs, d.ht}}};
}

inline json to_json(const G6Type& d) {
  return {{"type", "g6"}, {"k", d.k}, {"l", d.l}, {"m", d.m}, {"u", d.u}, {"v", d.v}, {"w", d.w}};
}

inline json to_json(const SubgroupDescriptor& d) {
  return std::visit([](const auto& x) { return to_json(x); }, d);
}

inline Axis parse_axis(const std::string& s) {
  if (s == "x") return Axis::x;
  if (s == "y") return Axis::y;
  if (s == "z") return Axis::z;
  throw std::invalid_argument("bad axis: " + s);
}

/// Inverse of to_json; throws on unknown types or out-of-range fields.
inline SubgroupDescriptor descriptor_from_json(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  SubgroupDescriptor d;
  if (type == "z3") {
    d = Z3Type{{j.at("c").get<Int>(), j.at("b").get<Int>(), j.at("a").get<Int>(), j.at("e").get<Int>(),
                j.at("f").get<Int>(), j.at("d").get<Int>()}};
  } else if (type == "g2") {
    const json& H = j.at("H");
    d = G2Type{parse_axis(j.at("axis").get<std::string>()), j.at("k").get<Int>(),
               Hnf2{H.at("b").get<Int>(), H.at("a").get<Int>(), H.at("c").get<Int>()}, j.at("h").at(0).get<Int>(),
               j.at("h").at(1).get<Int>()};
  } else if (type == "g6") {
    d = G6Type{j.at("k").get<Int>(), j.at("l").get<Int>(), j.at("m").get<Int>(),
               j.at("u").get<Int>(), j.at("v").get<Int>(), j.at("w").get<Int>()};
  } else {
    throw std::invalid_argument("unknown descriptor type: " + type);
  }
  if (!valid(d)) throw std::invalid_argument("descriptor fields out of range");
  return d;
}

// Descriptor CSV: one flat row per descriptor, unused columns left empty.
//   n,type,axis,k,l,m,u,v,w,hnf_c,hnf_b,hnf_a,hnf_e,hnf_f,hnf_d,h_s,h_t
// For g2 the Hnf2 (b, a, c) goes to hnf_b, hnf_a, hnf_c.

inline const char* descriptor_csv_header() { return "n,type,axis,k,l,m,u,v,w,hnf_c,hnf_b,hnf_a,hnf_e,hnf_f,hnf_d,h_s,h_t"; }

inline std::string to_csv(const SubgroupDescriptor& desc) {
  std::ostringstream os;
  os << index_of(desc) << ',';
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Z3Type>) {
          const Hnf3& h = d.lattice;
          os << "z3,,,,,,,," << h.c << ',' << h.b << ',' << h.a << ',' << h.e << ',' << h.f << ',' << h.d << ",,";
        } else if constexpr (std::is_same_v<T, G2Type>) {
          os << "g2," << axis_char(d.axis) << ',' << d.k << ",,,,,," << d.H.c << ',' << d.H.b << ',' << d.H.a
             << ",,,," << d.hs << ',' << d.ht;
        } else {
          os << "g6,," << d.k << ',' << d.l << ',' << d.m << ',' << d.u << ',' << d.v << ',' << d.w << ",,,,,,,,";
        }
      },
      desc);
  return os.str();
}

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline SubgroupDescriptor descriptor_from_csv(const std::string& line) {
  const auto f = split_csv(line);
  if (f.size() != 17) throw std::invalid_argument("descriptor CSV: expected 17 fields");
  const auto num = [&](int i) -> Int {
    if (f[i].empty()) throw std::invalid_argument("descriptor CSV: missing field " + std::to_string(i));
    return std::stoll(f[i]);
  };
  SubgroupDescriptor d;
  if (f[1] == "z3") {
    d = Z3Type{{num(9), num(10), num(11), num(12), num(13), num(14)}};
  } else if (f[1] == "g2") {
    d = G2Type{parse_axis(f[2]), num(3), Hnf2{num(10), num(11), num(9)}, num(15), num(16)};
  } else if (f[1] == "g6") {
    d = G6Type{num(3), num(4), num(5), num(6), num(7), num(8)};
  } else {
    throw std::invalid_argument("descriptor CSV: unknown type " + f[1]);
  }
  if (!valid(d)) throw std::invalid_argument("descriptor CSV: fields out of range");
  if (index_of(d) != num(0)) throw std::invalid_argument("descriptor CSV: index column disagrees");
  return d;
}

// ---------------------------------------------------------------------------

inline json to_json(const numtheory::CoeffSeries& s) { return s.coeffs(); }

inline std::string to_csv(const numtheory::CoeffSeries& s) {
  std::ostringstream os;
  os << "n,value\n";
  for (Int n = 1; n <= static_cast<Int>(s.order()); ++n) os << n << ',' << s[n] << '\n';
  return os.str();
}

inline json to_json(const series::Verdict& v) {
  json j = {{"row", v.row},
            {"kind", to_string(v.kind)},
            {"printed_label", to_string(v.printed_label)},
            {"compared_to", to_string(v.compared_to)},
            {"verdict", v.match ? "match" : "mismatch"}};
  if (!v.match) {
    j["first_divergent_n"] = v.first_divergent;
    j["table_value"] = v.table_value;
    j["theorem_value"] = v.theorem_value;
  }
  return j;
}

// ---------------------------------------------------------------------------

inline const char* report_csv_header() { return "n,type,s_closed,s_catalog,s_oracle,c_closed,c_catalog,c_oracle,match"; }

inline std::string to_csv(const oracle::OracleReport& r) {
  std::ostringstream os;
  for (const oracle::TypeRow& row : r.rows) {
    os << r.n << ',' << to_string(row.type) << ',' << row.s_closed << ',' << row.s_catalog << ',';
    if (row.s_oracle) os << *row.s_oracle;
    os << ',' << row.c_closed << ',' << row.c_catalog << ',';
    if (row.c_oracle) os << *row.c_oracle;
    os << ',' << ((row.match && r.bijective.value_or(true)) ? "true" : "false") << '\n';
  }
  return os.str();
}

inline json to_json(const oracle::OracleReport& r) {
  json rows = json::array();
  for (const oracle::TypeRow& row : r.rows) {
    json j = {{"type", to_string(row.type)},
              {"s_closed", row.s_closed},
              {"s_catalog", row.s_catalog},
              {"c_closed", row.c_closed},
              {"c_catalog", row.c_catalog},
              {"match", row.match}};
    j["s_oracle"] = row.s_oracle ? json(*row.s_oracle) : json(nullptr);
    j["c_oracle"] = row.c_oracle ? json(*row.c_oracle) : json(nullptr);
    rows.push_back(j);
  }
  json out = {{"n", r.n}, {"rows", rows}, {"match", r.all_match()}};
  out["bijective"] = r.bijective ? json(*r.bijective) : json(nullptr);
  return out;
}

}  // namespace hwcover::io
