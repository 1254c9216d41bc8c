#pragma once

// The cone of a G-set. The s-values of the distinguished complement monomials
// generate the semigroup of invariant monomials regular on the corresponding
// torus orbit; their dual cone sigma in N is the toric datum. Cones come out
// either smooth (three rays, basis dual generators) or as a quadric cone (four
// rays, multiplicity two) when the set has two valleys; both facts are
// asserted at construction rather than trusted.

#include <map>
#include <vector>

#include "ghilb/gset.hpp"

namespace ghilb {

enum class ConeKind { smooth, quadric };

struct Cone {
  ConeKind kind = ConeKind::smooth;
  std::vector<Exponents> dual_generators;  // facet normals of the ray cone
  std::vector<NVec> rays;                  // canonical cyclic order

  bool contains(const NVec& v, bool strict = false) const {
    for (const Exponents& m : dual_generators) {
      Int128 p = pair(v, m);
      if (strict ? p <= 0 : p < 0) return false;
    }
    return true;
  }
};

// Minimal generators of the ideal of monomials outside the set: the three
// pure-power walls, one corner per valley, and yz when both y and z are in.
inline std::vector<Exponents> complement_generators(const GSet& s) {
  std::vector<Exponents> out;
  out.push_back({s.top_x() + 1, 0, 0});
  out.push_back({0, s.top_y() + 1, 0});
  out.push_back({0, 0, s.top_z() + 1});
  Valleys v = s.valleys();
  if (v.y) out.push_back({v.y->col + 1, v.y->height + 1, 0});
  if (v.z) out.push_back({v.z->col + 1, 0, v.z->height + 1});
  if (s.top_y() >= 1 && s.top_z() >= 1) out.push_back({0, 1, 1});
  return out;
}

// s-values cutting out the cone: the three pure walls when the set has at
// most one valley, the two pure y/z walls plus the two valley corners when it
// has both.
inline std::vector<Exponents> dual_generators(const GSet& s) {
  Valleys v = s.valleys();
  Exponents alpha{s.top_x() + 1, 0, 0};
  Exponents beta{0, s.top_y() + 1, 0};
  Exponents gamma{0, 0, s.top_z() + 1};
  if (v.count() < 2) return {s.s_value(alpha), s.s_value(beta), s.s_value(gamma)};
  Exponents dy{v.y->col + 1, v.y->height + 1, 0};
  Exponents dz{v.z->col + 1, 0, v.z->height + 1};
  return {s.s_value(beta), s.s_value(gamma), s.s_value(dy), s.s_value(dz)};
}

// Exact evidence that a two-valley cone is the multiplicity-two quadric: the
// four generators satisfy one relation summing to yz, the closed forms for
// the s-values agree with the transfer computed from raw weights, and the
// determinant of the independent triple is r in absolute value.
struct QuadricCertificate {
  Exponents s_beta, s_gamma, s_dy, s_dz;
  bool relation_holds = false;
  bool closed_forms_match = false;
  Int det = 0;
};

inline QuadricCertificate quadric_certificate(const GSet& s) {
  Valleys v = s.valleys();
  if (v.count() != 2) throw Error("quadric certificate requires a two-valley set");
  std::vector<Exponents> gens = dual_generators(s);
  QuadricCertificate c;
  c.s_beta = gens[0];
  c.s_gamma = gens[1];
  c.s_dy = gens[2];
  c.s_dz = gens[3];
  Exponents yz{0, 1, 1};
  c.relation_holds = (c.s_beta + c.s_dz == yz) && (c.s_gamma + c.s_dy == yz);
  Int iy = v.y->col, jy = v.y->height, iz = v.z->col, kz = v.z->height;
  Int j = s.top_y(), k = s.top_z();
  c.closed_forms_match = c.s_beta == Exponents{-iz - 1, j + 1, -kz} &&
                         c.s_dy == Exponents{iy + 1, jy + 1, -k} &&
                         c.s_gamma == Exponents{-iy - 1, -jy, k + 1};
  c.det = narrow(abs128(det3m(c.s_beta, c.s_dy, c.s_gamma)));
  return c;
}

// Sum of the multiplicities of the triangulation around rays[0].
inline Int cone_multiplicity(const GroupAction& g, const Cone& c) {
  Int total = 0;
  for (size_t i = 1; i + 1 < c.rays.size(); ++i)
    total = checked_add(total, normalized_det(g, c.rays[0], c.rays[i], c.rays[i + 1]));
  return total;
}

inline Cone sigma(const GSet& s) {
  const GroupAction& g = s.action();
  Cone c;
  c.dual_generators = dual_generators(s);
  c.rays = dual_cone_3d(g, c.dual_generators);
  if (c.dual_generators.size() == 3) {
    c.kind = ConeKind::smooth;
    if (c.rays.size() != 3) throw Error("three dual generators must cut a simplicial cone");
    if (abs128(det3m(c.dual_generators[0], c.dual_generators[1], c.dual_generators[2])) != g.r)
      throw Error("dual generators of a smooth cone must have determinant r");
    if (cone_multiplicity(g, c) != 1) throw Error("three-ray cone is not smooth");
  } else {
    c.kind = ConeKind::quadric;
    if (c.rays.size() != 4) throw Error("four dual generators must cut a four-ray cone");
    QuadricCertificate cert = quadric_certificate(s);
    if (!cert.relation_holds || !cert.closed_forms_match || cert.det != g.r)
      throw Error("quadric certificate failed");
    if (cone_multiplicity(g, c) != 2) throw Error("four-ray cone is not the quadric");
  }
  return c;
}

// Decides membership of an M-point in the semigroup spanned by the dual
// generators, by memoized descent. Subtracting a generator strictly lowers
// the pairing with the interior direction sum(rays), so the search halts.
class SemigroupTester {
 public:
  explicit SemigroupTester(const Cone& c) : cone_(c) {}

  // t lies in the dual cone of the rays (the saturation of the semigroup).
  bool in_dual_cone(const Exponents& t) const {
    for (const NVec& ray : cone_.rays)
      if (pair(ray, t) < 0) return false;
    return true;
  }

  bool member(const Exponents& t) {
    if (t.is_unit()) return true;
    auto it = memo_.find(t);
    if (it != memo_.end()) return it->second;
    bool result = false;
    if (in_dual_cone(t)) {
      for (const Exponents& g : cone_.dual_generators) {
        if (member(t - g)) {
          result = true;
          break;
        }
      }
    }
    memo_.emplace(t, result);
    return result;
  }

 private:
  const Cone& cone_;
  std::map<Exponents, bool> memo_;
};

struct SaturationReport {
  Int checked = 0;
  std::vector<Exponents> failures;
  bool ok() const { return failures.empty(); }
};

// Every weight-zero lattice point of the cone's dual within the box must be
// reachable from the dual generators; anything missed lands in failures.
inline SaturationReport saturation_report(const GroupAction& g, const Cone& c, Int box) {
  SaturationReport rep;
  SemigroupTester tester(c);
  for (Int y = -box; y <= box; ++y) {
    for (Int z = -box; z <= box; ++z) {
      Int128 w = Int128(g.a) * y + Int128(g.r - g.a) * z;
      Int c0 = static_cast<Int>(((-w) % g.r + g.r) % g.r);
      Int x0 = -box + ((c0 - (-box)) % g.r + g.r) % g.r;
      for (Int x = x0; x <= box; x += g.r) {
        Exponents t{x, y, z};
        if (!tester.in_dual_cone(t)) continue;
        ++rep.checked;
        if (!tester.member(t)) rep.failures.push_back(t);
      }
    }
  }
  return rep;
}

}  // namespace ghilb
