#pragma once

// Exact arithmetic for the lattice pair of the action 1/r(1, a, r-a):
//   N = Z^3 + Z*(1, a, r-a)/r   (one-parameter subgroups)
//   M = weight-zero Laurent exponents inside M0 = Z^3 (invariant monomials)
// Points of N are stored r-scaled: the integer triple w stands for w/r, so the
// standard basis vector e1 is stored as (r, 0, 0). M vectors reuse Exponents.
//
// Coordinates handled here stay O(r^2) in practice; det3 guards its inputs so
// that 128-bit intermediates cannot silently wrap.

#include <algorithm>
#include <numeric>
#include <vector>

#include "ghilb/core.hpp"

namespace ghilb {

inline Int weight(const GroupAction& g, const Exponents& m) {
  Int128 w = Int128(m.x) + Int128(g.a) * m.y + Int128(g.r - g.a) * m.z;
  Int128 rem = w % g.r;
  if (rem < 0) rem += g.r;
  return static_cast<Int>(rem);
}

inline bool is_invariant(const GroupAction& g, const Exponents& m) { return weight(g, m) == 0; }

// r-scaled point or direction of N. Ordering is lexicographic.
struct NVec {
  Int w1 = 0;
  Int w2 = 0;
  Int w3 = 0;

  friend bool operator==(const NVec&, const NVec&) = default;
  friend auto operator<=>(const NVec&, const NVec&) = default;

  NVec operator+(const NVec& o) const {
    return {checked_add(w1, o.w1), checked_add(w2, o.w2), checked_add(w3, o.w3)};
  }
  NVec operator-() const { return {-w1, -w2, -w3}; }
  bool is_zero() const { return w1 == 0 && w2 == 0 && w3 == 0; }
};

// r*e_i, the primitive N-point on the i-th coordinate axis (i in {0,1,2}).
inline NVec axis_ray(const GroupAction& g, int i) {
  NVec v;
  (i == 0 ? v.w1 : i == 1 ? v.w2 : v.w3) = g.r;
  return v;
}

inline bool on_coordinate_axis(const NVec& v) {
  return (v.w1 == 0 && v.w2 == 0) || (v.w1 == 0 && v.w3 == 0) || (v.w2 == 0 && v.w3 == 0);
}

// Pairing of an N-point with an M-vector, scaled by r (sign-faithful).
inline Int128 pair(const NVec& v, const Exponents& m) {
  return Int128(v.w1) * m.x + Int128(v.w2) * m.y + Int128(v.w3) * m.z;
}

namespace detail {
inline void guard_det_input(const NVec& v) {
  constexpr Int bound = Int(1) << 40;
  if (v.w1 > bound || v.w1 < -bound || v.w2 > bound || v.w2 < -bound || v.w3 > bound ||
      v.w3 < -bound)
    throw OverflowError("coordinate too large for exact determinant");
}
}  // namespace detail

inline Int128 det3(const NVec& a, const NVec& b, const NVec& c) {
  detail::guard_det_input(a);
  detail::guard_det_input(b);
  detail::guard_det_input(c);
  Int128 m1 = Int128(b.w2) * c.w3 - Int128(b.w3) * c.w2;
  Int128 m2 = Int128(b.w1) * c.w3 - Int128(b.w3) * c.w1;
  Int128 m3 = Int128(b.w1) * c.w2 - Int128(b.w2) * c.w1;
  return Int128(a.w1) * m1 - Int128(a.w2) * m2 + Int128(a.w3) * m3;
}

inline Int128 det3m(const Exponents& a, const Exponents& b, const Exponents& c) {
  Int128 m1 = Int128(b.y) * c.z - Int128(b.z) * c.y;
  Int128 m2 = Int128(b.x) * c.z - Int128(b.z) * c.x;
  Int128 m3 = Int128(b.x) * c.y - Int128(b.y) * c.x;
  return Int128(a.x) * m1 - Int128(a.y) * m2 + Int128(a.z) * m3;
}

// Cross product of two M-vectors: an (unscaled) direction of N_R. Only the ray
// through it matters; feed it to primitivize_n.
inline NVec cross(const Exponents& u, const Exponents& v) {
  return {narrow(Int128(u.y) * v.z - Int128(u.z) * v.y),
          narrow(Int128(u.z) * v.x - Int128(u.x) * v.z),
          narrow(Int128(u.x) * v.y - Int128(u.y) * v.x)};
}

// Primitive generator in N of the ray through direction d, in r-scaled
// coordinates. The input scale is irrelevant.
inline NVec primitivize_n(const GroupAction& g, const NVec& d) {
  if (d.is_zero()) throw DegenerateInput("cannot primitivize the zero direction");
  Int gg = std::gcd(std::gcd(std::abs(d.w1), std::abs(d.w2)), std::abs(d.w3));
  Int d1 = d.w1 / gg, d2 = d.w2 / gg, d3 = d.w3 / gg;
  auto mod_r = [&](Int128 v) {
    Int128 rem = v % g.r;
    if (rem < 0) rem += g.r;
    return static_cast<Int>(rem);
  };
  Int c2 = mod_r(Int128(d2) - Int128(g.a) * d1);
  Int c3 = mod_r(Int128(d3) + Int128(g.a) * d1);
  Int f2 = g.r / std::gcd(g.r, c2);
  Int f3 = g.r / std::gcd(g.r, c3);
  Int mu = std::lcm(f2, f3);
  return {checked_mul(mu, d1), checked_mul(mu, d2), checked_mul(mu, d3)};
}

// Primitive generator in M of the ray through an integer direction.
inline Exponents primitivize_m(const GroupAction& g, const Exponents& d) {
  if (d.is_unit()) throw DegenerateInput("cannot primitivize the zero direction");
  Int gg = std::gcd(std::gcd(std::abs(d.x), std::abs(d.y)), std::abs(d.z));
  Exponents p{d.x / gg, d.y / gg, d.z / gg};
  Int mu = g.r / std::gcd(g.r, weight(g, p));
  return p * mu;
}

// Multiplicity of the simplicial cone on three r-scaled N-points: the index
// |det| normalized by the covolume r^2 of N in r-scaled coordinates. A
// non-divisible determinant would mean the inputs are not N-points.
inline Int normalized_det(const GroupAction& g, const NVec& a, const NVec& b, const NVec& c) {
  Int128 d = abs128(det3(a, b, c));
  Int128 rr = Int128(g.r) * g.r;
  if (d % rr != 0) throw Error("determinant not divisible by r^2; inputs are not N-points");
  return narrow(d / rr);
}

// Membership in the simplicial cone spanned by a, b, c (Cramer sign tests).
inline bool tri_cone_contains(const NVec& a, const NVec& b, const NVec& c, const NVec& p,
                              bool strict = false) {
  Int128 d = det3(a, b, c);
  if (d == 0) throw DegenerateInput("cone spanners are coplanar");
  int s = sign128(d);
  Int128 ca = s * det3(p, b, c);
  Int128 cb = s * det3(a, p, c);
  Int128 cc = s * det3(a, b, p);
  if (strict) return ca > 0 && cb > 0 && cc > 0;
  return ca >= 0 && cb >= 0 && cc >= 0;
}

// Cyclic order of the extremal rays of a strongly convex full-dimensional
// cone: ascending angle around the interior direction omega = sum of rays,
// rotated so the lexicographically least ray comes first, oriented so the
// leading triple has positive determinant. Distinct extremal rays always have
// distinct angles, so the order is canonical.
inline std::vector<NVec> cyclic_sort_rays(std::vector<NVec> rays) {
  if (rays.size() < 3) throw DegenerateInput("a full-dimensional cone needs at least 3 rays");
  NVec omega{0, 0, 0};
  for (const NVec& v : rays) omega = omega + v;
  const NVec ref = *std::min_element(rays.begin(), rays.end());
  auto half = [&](const NVec& p) -> int {
    if (p == ref) return 0;
    Int128 d = det3(omega, ref, p);
    if (d > 0) return 1;
    if (d < 0) return 3;
    return 2;  // coplanar with (omega, ref) and not ref itself: angle pi
  };
  std::sort(rays.begin(), rays.end(), [&](const NVec& p, const NVec& q) {
    int hp = half(p), hq = half(q);
    if (hp != hq) return hp < hq;
    if (hp == 0 || hp == 2) return p < q;  // classes hold at most one ray
    return det3(omega, p, q) > 0;
  });
  // ref sorted first, which is already the lexicographic minimum.
  if (det3(rays[0], rays[1], rays[2]) < 0) std::reverse(rays.begin() + 1, rays.end());
  return rays;
}

// Extremal rays of the dual cone in N of cone(gens) in M_R, for gens spanning
// a full-dimensional cone. Every extremal ray of the dual is tight on two
// independent generators, so all candidates arise as pairwise cross products;
// a candidate pairing >= 0 against every generator is kept.
inline std::vector<NVec> dual_cone_3d(const GroupAction& g, const std::vector<Exponents>& gens) {
  if (gens.size() < 3) throw DegenerateInput("dual cone needs at least 3 generators");
  auto admissible = [&](const NVec& c) {
    for (const Exponents& m : gens)
      if (pair(c, m) < 0) return false;
    return true;
  };
  std::vector<NVec> rays;
  for (size_t i = 0; i < gens.size(); ++i) {
    for (size_t j = i + 1; j < gens.size(); ++j) {
      NVec c = cross(gens[i], gens[j]);
      if (c.is_zero()) continue;
      if (admissible(c) && admissible(-c))
        throw DegenerateInput("generators do not span a full-dimensional cone");
      if (admissible(c))
        rays.push_back(primitivize_n(g, c));
      else if (admissible(-c))
        rays.push_back(primitivize_n(g, -c));
    }
  }
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return cyclic_sort_rays(std::move(rays));
}

}  // namespace ghilb
