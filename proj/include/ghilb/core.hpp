#pragma once

// Shared value types for the G-Hilb fan library: the cyclic action 1/r(1,a,r-a),
// Laurent exponent triples, and overflow-checked integer helpers. All arithmetic
// in this library is exact; anything that cannot be represented aborts loudly
// instead of wrapping.

#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ghilb {

using Int = std::int64_t;
using Int128 = __int128;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidAction : Error { using Error::Error; };
struct OverflowError : Error { using Error::Error; };
struct NotAGSet : Error { using Error::Error; };
struct MixedYZ : Error { using Error::Error; };
struct IllegalDirection : Error { using Error::Error; };
struct DegenerateWall : Error { using Error::Error; };
struct DegenerateInput : Error { using Error::Error; };
struct DominationFailure : Error { using Error::Error; };
struct ChainBroken : Error { using Error::Error; };
struct BoundExceeded : Error { using Error::Error; };

inline Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

inline Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in subtraction");
  return out;
}

inline Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
  return out;
}

// Narrow an exact 128-bit intermediate back to storage width.
inline Int narrow(Int128 v) {
  if (v > Int128(INT64_MAX) || v < Int128(INT64_MIN)) throw OverflowError("value exceeds 64-bit storage");
  return static_cast<Int>(v);
}

inline Int128 abs128(Int128 v) { return v < 0 ? -v : v; }

inline Int128 gcd128(Int128 a, Int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    Int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline int sign128(Int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Exponent triple of a (Laurent) monomial x^x y^y z^z. Also used for vectors of
// the dual lattice M, where membership means the weight vanishes.
struct Exponents {
  Int x = 0;
  Int y = 0;
  Int z = 0;

  friend bool operator==(const Exponents&, const Exponents&) = default;
  friend auto operator<=>(const Exponents&, const Exponents&) = default;

  Exponents operator+(const Exponents& o) const {
    return {checked_add(x, o.x), checked_add(y, o.y), checked_add(z, o.z)};
  }
  Exponents operator-(const Exponents& o) const {
    return {checked_sub(x, o.x), checked_sub(y, o.y), checked_sub(z, o.z)};
  }
  Exponents operator*(Int c) const {
    return {checked_mul(x, c), checked_mul(y, c), checked_mul(z, c)};
  }
  Exponents operator-() const { return {-x, -y, -z}; }

  bool is_ordinary() const { return x >= 0 && y >= 0 && z >= 0; }
  bool is_unit() const { return x == 0 && y == 0 && z == 0; }
  // Componentwise divisibility of ordinary monomials.
  bool divides(const Exponents& o) const { return x <= o.x && y <= o.y && z <= o.z; }
};

inline constexpr Exponents kUnit{0, 0, 0};

// "x^2yz^3" for ordinary monomials, "y^2/x" (numerator/denominator) for Laurent ones.
inline std::string monomial_string(const Exponents& m) {
  auto part = [](const char* var, Int e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return var;
    return std::string(var) + "^" + std::to_string(e);
  };
  std::string num = part("x", m.x > 0 ? m.x : 0) + part("y", m.y > 0 ? m.y : 0) + part("z", m.z > 0 ? m.z : 0);
  std::string den = part("x", m.x < 0 ? -m.x : 0) + part("y", m.y < 0 ? -m.y : 0) + part("z", m.z < 0 ? -m.z : 0);
  if (num.empty() && den.empty()) return "1";
  if (den.empty()) return num;
  if (num.empty()) num = "1";
  return num + "/" + den;
}

// The cyclic action of type 1/r(1, a, r-a). Construction canonicalizes to
// a < r-a by swapping the roles of y and z; `swapped` records whether that
// happened so exported data can be mapped back to the caller's orientation.
struct GroupAction {
  Int r = 0;
  Int a = 0;        // canonical weight of y, a < r-a
  Int b = 0;        // inverse of the canonical a modulo r
  bool swapped = false;

  static GroupAction make(Int r, Int a_in) {
    if (r < 2) throw InvalidAction("r must be at least 2");
    if (a_in < 1 || a_in > r - 1) throw InvalidAction("a must satisfy 1 <= a <= r-1");
    if (std::gcd(r, a_in) != 1) throw InvalidAction("r and a must be coprime");
    GroupAction g;
    g.r = r;
    g.swapped = a_in > r - a_in;
    g.a = g.swapped ? r - a_in : a_in;
    g.b = inverse_mod(g.a, r);
    return g;
  }

  static Int inverse_mod(Int a, Int r) {
    Int t = 0, new_t = 1, rr = r, new_r = a % r;
    while (new_r != 0) {
      Int q = rr / new_r;
      Int tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = rr - q * new_r;
      rr = new_r;
      new_r = tmp;
    }
    if (rr != 1) throw InvalidAction("a is not invertible modulo r");
    return ((t % r) + r) % r;
  }

  // The weights the caller asked for, before canonicalization.
  Int input_a() const { return swapped ? r - a : a; }
  Int input_b() const { return swapped ? r - b : b; }

  // The structured pipeline needs a and r-a both at least 2.
  bool structured() const { return a >= 2; }
  void require_structured() const {
    if (!structured())
      throw InvalidAction("a and r-a must both be at least 2 for the structured pipeline");
  }

  // Map internal (canonical) coordinates back to the caller's orientation.
  Exponents map_back(const Exponents& e) const { return swapped ? Exponents{e.x, e.z, e.y} : e; }

  friend bool operator==(const GroupAction&, const GroupAction&) = default;
};

}  // namespace ghilb
