#pragma once

// Exact arithmetic in the Hantzsche-Wendt group
//
//   G = < x, y, z | x y^2 x^-1 y^2 = y x^2 y^-1 x^2 = x y z = 1 >
//
// Every element has a unique canonical form  g * x^{2a} y^{2b} z^{2c}  with
// g in {1, x, y, z}.  An Element stores the letter g and the half-exponents
// (a, b, c); the subgroup Lambda = <x^2, y^2, z^2> is the set of elements with
// letter E and is a normal free abelian subgroup of index 4.
//
// Conjugation convention: conjugate(g, v) is v * g * v^-1 (written g^v).
// This is the opposite of the more common v^-1 g v, and every conjugation
// in this library (descriptors, orbits, normality) uses it.

#include <array>
#include <cassert>
#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hwcover {

using Int = std::int64_t;
using Vec3 = std::array<Int, 3>;

namespace detail {

inline Int checked_add(Int a, Int b) {
#ifndef NDEBUG
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("hwcover: integer overflow");
  return r;
#else
  return a + b;
#endif
}

inline Int checked_mul(Int a, Int b) {
#ifndef NDEBUG
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("hwcover: integer overflow");
  return r;
#else
  return a * b;
#endif
}

}  // namespace detail

/// Coset representative of Lambda: 1, x, y or z.
enum class Letter : std::uint8_t { E = 0, X = 1, Y = 2, Z = 3 };

constexpr char letter_char(Letter l) { return "EXYZ"[static_cast<int>(l)]; }

constexpr int letter_index(Letter l) { return static_cast<int>(l); }

/// Product in the Klein four-group G / Lambda.
constexpr Letter klein_product(Letter p, Letter q) {
  return static_cast<Letter>(static_cast<int>(p) ^ static_cast<int>(q));
}

/// Signs by which conjugation with an element of letter `l` acts on Lambda
/// (equivalently the diagonal linear part of its affine image).
constexpr Vec3 sign_pattern(Letter l) {
  switch (l) {
    case Letter::E: return {1, 1, 1};
    case Letter::X: return {1, -1, -1};
    case Letter::Y: return {-1, 1, -1};
    case Letter::Z: return {-1, -1, 1};
  }
  return {1, 1, 1};
}

struct Element {
  Letter letter = Letter::E;
  Int a = 0;
  Int b = 0;
  Int c = 0;

  constexpr Vec3 half_exponents() const { return {a, b, c}; }

  friend constexpr bool operator==(const Element&, const Element&) = default;
  friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

constexpr Element identity() { return {}; }
constexpr Element lattice_element(Int a, Int b, Int c) { return {Letter::E, a, b, c}; }
constexpr Element lattice_element(const Vec3& v) { return {Letter::E, v[0], v[1], v[2]}; }
constexpr Element generator(Letter l) { return {l, 0, 0, 0}; }

/// One cell of the letter multiplication table: g_i * g_j = letter * lambda.
struct LetterProduct {
  Letter letter;
  Vec3 shift;
};

using LetterTable = std::array<std::array<LetterProduct, 4>, 4>;

// clang-format off
inline constexpr LetterTable kLetterTable = {{
  {{ {Letter::E, {0, 0, 0}},  {Letter::X, {0, 0, 0}},  {Letter::Y, {0, 0, 0}},  {Letter::Z, {0, 0, 0}} }},
  {{ {Letter::X, {0, 0, 0}},  {Letter::E, {1, 0, 0}},  {Letter::Z, {0, 0, -1}}, {Letter::Y, {-1, 0, 1}} }},
  {{ {Letter::Y, {0, 0, 0}},  {Letter::Z, {1, -1, 0}}, {Letter::E, {0, 1, 0}},  {Letter::X, {-1, 0, 0}} }},
  {{ {Letter::Z, {0, 0, 0}},  {Letter::Y, {0, -1, 0}}, {Letter::X, {0, 1, -1}}, {Letter::E, {0, 0, 1}} }},
}};
// clang-format on

/// The group law, parameterized by the letter table.  The default table is
/// the correct one; other tables exist only so that verification code can be
/// fed a corrupted law and shown to reject it.
class GroupLaw {
 public:
  constexpr GroupLaw() = default;
  constexpr explicit GroupLaw(const LetterTable& table) : table_(table) {}

  const LetterTable& table() const { return table_; }

  // Push p's Lambda part past q's letter (sign rule), then resolve the letter
  // product from the table and add the Lambda exponents.
  Element multiply(const Element& p, const Element& q) const {
    const LetterProduct& cell = table_[letter_index(p.letter)][letter_index(q.letter)];
    const Vec3 s = sign_pattern(q.letter);
    Element r{cell.letter, 0, 0, 0};
    r.a = detail::checked_add(detail::checked_add(cell.shift[0], s[0] * p.a), q.a);
    r.b = detail::checked_add(detail::checked_add(cell.shift[1], s[1] * p.b), q.b);
    r.c = detail::checked_add(detail::checked_add(cell.shift[2], s[2] * p.c), q.c);
    return r;
  }

  // (g * lambda)^-1 = lambda^-1 * g^-1, with g^-1 = g * (g^2)^-1.
  Element inverse(const Element& p) const {
    const Element lam_inv = lattice_element(-p.a, -p.b, -p.c);
    if (p.letter == Letter::E) return lam_inv;
    const Vec3& sq = table_[letter_index(p.letter)][letter_index(p.letter)].shift;
    return multiply(lam_inv, Element{p.letter, -sq[0], -sq[1], -sq[2]});
  }

 private:
  LetterTable table_ = kLetterTable;
};

inline const GroupLaw& standard_law() {
  static const GroupLaw law{};
  return law;
}

inline Element multiply(const Element& p, const Element& q) { return standard_law().multiply(p, q); }

inline Element inverse(const Element& p) { return standard_law().inverse(p); }

inline Element operator*(const Element& p, const Element& q) { return multiply(p, q); }

/// p^k for any integer k, by repeated squaring.
inline Element power(Element p, Int k) {
  if (k < 0) {
    p = inverse(p);
    k = -k;
  }
  Element r = identity();
  while (k > 0) {
    if (k & 1) r = multiply(r, p);
    p = multiply(p, p);
    k >>= 1;
  }
  return r;
}

/// g^v = v * g * v^-1.
inline Element conjugate(const Element& g, const Element& v) { return multiply(multiply(v, g), inverse(v)); }

/// Image in G / Lambda, the Klein four-group.
constexpr Letter phi(const Element& p) { return p.letter; }

/// Raw exponents at x, y, z: (2a, 2b, 2c) plus one at the letter's coordinate.
constexpr Vec3 exponents(const Element& p) {
  Vec3 e{2 * p.a, 2 * p.b, 2 * p.c};
  if (p.letter != Letter::E) e[letter_index(p.letter) - 1] += 1;
  return e;
}

/// x^k (resp. y^k, z^k) for the generator with letter `l`; needs l != E.
inline Element generator_power(Letter l, Int k) {
  assert(l != Letter::E);
  return power(generator(l), k);
}

// ---------------------------------------------------------------------------
// Affine representation

/// Isometry p -> D p + t of R^3 with D diagonal.  The linear part is always
/// one of the four sign patterns above.
struct AffineIso {
  Vec3 linear{1, 1, 1};
  Vec3 translation{0, 0, 0};

  Vec3 apply(const Vec3& p) const {
    return {linear[0] * p[0] + translation[0], linear[1] * p[1] + translation[1],
            linear[2] * p[2] + translation[2]};
  }

  bool valid() const {
    for (Letter l : {Letter::E, Letter::X, Letter::Y, Letter::Z})
      if (sign_pattern(l) == linear) return true;
    return false;
  }

  friend bool operator==(const AffineIso&, const AffineIso&) = default;
};

/// `first` applied, then `second`.  Words act left to right: the image of
/// w1 w2 is compose(image(w1), image(w2)).
inline AffineIso compose(const AffineIso& first, const AffineIso& second) {
  AffineIso r;
  for (int i = 0; i < 3; ++i) {
    r.linear[i] = first.linear[i] * second.linear[i];
    r.translation[i] = second.linear[i] * first.translation[i] + second.translation[i];
  }
  return r;
}

/// Translation part of the isometries for x, y, z:
///   x: (u, v, w) -> (u + 1, -v, -w + 1)
///   y: (u, v, w) -> (-u + 1, v + 1, -w)
///   z: (u, v, w) -> (-u, -v + 1, w + 1)
constexpr Vec3 generator_translation(Letter l) {
  switch (l) {
    case Letter::E: return {0, 0, 0};
    case Letter::X: return {1, 0, 1};
    case Letter::Y: return {1, 1, 0};
    case Letter::Z: return {0, 1, 1};
  }
  return {0, 0, 0};
}

/// Faithful image of p: apply the letter's isometry, then translate by
/// 2 (a, b, c) (x^2, y^2, z^2 are the unit translations by 2).
inline AffineIso to_affine(const Element& p) {
  AffineIso r;
  r.linear = sign_pattern(p.letter);
  const Vec3 t = generator_translation(p.letter);
  r.translation = {t[0] + 2 * p.a, t[1] + 2 * p.b, t[2] + 2 * p.c};
  return r;
}

/// Inverse of to_affine; throws if `f` is not in the image.
inline Element from_affine(const AffineIso& f) {
  for (Letter l : {Letter::E, Letter::X, Letter::Y, Letter::Z}) {
    if (sign_pattern(l) != f.linear) continue;
    const Vec3 t = generator_translation(l);
    Vec3 h{};
    for (int i = 0; i < 3; ++i) {
      const Int d = f.translation[i] - t[i];
      if (d % 2 != 0) throw std::invalid_argument("from_affine: isometry is not in the group");
      h[i] = d / 2;
    }
    return {l, h[0], h[1], h[2]};
  }
  throw std::invalid_argument("from_affine: linear part is not a group sign pattern");
}

// ---------------------------------------------------------------------------
// Words in the generators

struct Token {
  Letter gen = Letter::X;  // X, Y or Z
  bool inverted = false;

  friend bool operator==(const Token&, const Token&) = default;
};

struct GeneratorWord {
  std::vector<Token> tokens;

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
};

/// Whitespace-separated tokens `x y z X Y Z`; uppercase is the inverse.
inline GeneratorWord parse_word(std::string_view text) {
  GeneratorWord w;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
      ++i;
      continue;
    }
    const bool last = i + 1 == text.size();
    const char next = last ? ' ' : text[i + 1];
    if (!(next == ' ' || next == '\t' || next == '\n' || next == '\r'))
      throw std::invalid_argument("parse_word: tokens must be separated by whitespace");
    switch (ch) {
      case 'x': w.tokens.push_back({Letter::X, false}); break;
      case 'y': w.tokens.push_back({Letter::Y, false}); break;
      case 'z': w.tokens.push_back({Letter::Z, false}); break;
      case 'X': w.tokens.push_back({Letter::X, true}); break;
      case 'Y': w.tokens.push_back({Letter::Y, true}); break;
      case 'Z': w.tokens.push_back({Letter::Z, true}); break;
      default: throw std::invalid_argument(std::string("parse_word: bad token '") + ch + "'");
    }
    ++i;
  }
  return w;
}

inline std::string to_string(const GeneratorWord& w) {
  std::string s;
  for (const Token& t : w.tokens) {
    if (!s.empty()) s += ' ';
    const char c = "exyz"[letter_index(t.gen)];
    s += t.inverted ? static_cast<char>(c - 'a' + 'A') : c;
  }
  return s;
}

inline Element eval_word(const GeneratorWord& w, const GroupLaw& law = standard_law()) {
  Element r = identity();
  for (const Token& t : w.tokens) {
    const Element g = generator(t.gen);
    r = law.multiply(r, t.inverted ? law.inverse(g) : g);
  }
  return r;
}

inline Element eval_word(std::string_view text) { return eval_word(parse_word(text)); }

/// Defining relators of the presentation followed by the four relators that
/// are consequences of them.
inline const std::vector<GeneratorWord>& relators() {
  static const std::vector<GeneratorWord> r = {
      parse_word("x y y X y y"), parse_word("y x x Y x x"), parse_word("x y z"),
      parse_word("x z z X z z"), parse_word("y z z Y z z"), parse_word("z x x Z x x"),
      parse_word("z y y Z y y"),
  };
  return r;
}

}  // namespace hwcover
