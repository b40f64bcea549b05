#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hwcover {

/// Isomorphism type of a finite-index subgroup: Z^3 (G1), pi_1(G2) or
/// pi_1(G6).
enum class IsoType { G1 = 0, G2 = 1, G6 = 2 };

inline constexpr std::array<IsoType, 3> kIsoTypes = {IsoType::G1, IsoType::G2, IsoType::G6};

/// Subgroup counts (s) versus conjugacy-class counts (c).
enum class Kind { s, c };

inline std::string to_string(IsoType t) {
  switch (t) {
    case IsoType::G1: return "G1";
    case IsoType::G2: return "G2";
    case IsoType::G6: return "G6";
  }
  return "?";
}

inline std::string to_string(Kind k) { return k == Kind::s ? "s" : "c"; }

/// Accepts "g1", "G1", "z3" and friends.
inline IsoType parse_iso_type(std::string_view s) {
  if (s == "g1" || s == "G1" || s == "z3") return IsoType::G1;
  if (s == "g2" || s == "G2") return IsoType::G2;
  if (s == "g6" || s == "G6") return IsoType::G6;
  throw std::invalid_argument("unknown isomorphism type: " + std::string(s));
}

/// Raised when two independent computations of the same quantity disagree.
class CrossCheckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hwcover
