#pragma once

// Serializers for computed fans: a stable versioned JSON document and a static
// SVG cross-section drawing. Both are deterministic byte-for-byte for a given
// fan and configuration, and both present data in the caller's original
// coordinate orientation (undoing the internal y/z canonicalization).

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ghilb/fan.hpp"

namespace ghilb {

enum class Chart { Barycentric, AffineYZ };

struct RenderConfig {
  Chart chart = Chart::Barycentric;
  int width = 840;
  int height = 760;
  bool labelRays = true;
  bool markTriangles = true;

  RenderConfig() = default;
  RenderConfig(Chart c, int w, int h, bool labels = true, bool marks = true)
      : chart(c), width(w), height(h), labelRays(labels), markTriangles(marks) {
    if (w <= 0 || h <= 0) throw Error("render dimensions must be positive");
  }
};

inline NVec map_back_ray(const GroupAction& g, const NVec& v) {
  return g.swapped ? NVec{v.w1, v.w3, v.w2} : v;
}

namespace detail {

inline nlohmann::ordered_json exp_triple(const Exponents& e) {
  return nlohmann::ordered_json::array({e.x, e.y, e.z});
}

inline nlohmann::ordered_json ray_triple(const NVec& v) {
  return nlohmann::ordered_json::array({v.w1, v.w2, v.w3});
}

}  // namespace detail

inline nlohmann::ordered_json fan_to_json(const Fan& fan, const FanReport& report) {
  using json = nlohmann::ordered_json;
  const GroupAction& g = fan.action;

  // Rays in the caller's orientation, lexicographically sorted; remember how
  // the internal indices move.
  std::vector<NVec> rays;
  rays.reserve(fan.rays.size());
  for (const NVec& v : fan.rays) rays.push_back(map_back_ray(g, v));
  std::vector<std::size_t> perm(rays.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t p, std::size_t q) { return rays[p] < rays[q]; });
  std::vector<std::size_t> newIndex(rays.size());
  for (std::size_t i = 0; i < perm.size(); ++i) newIndex[perm[i]] = i;

  json doc;
  doc["schema"] = 1;
  doc["r"] = g.r;
  doc["a"] = g.input_a();
  doc["b"] = g.input_b();
  doc["swapped"] = g.swapped;
  doc["count"] = fan.cones.size();

  json rayList = json::array();
  for (std::size_t i : perm) rayList.push_back(detail::ray_triple(rays[i]));
  doc["rays"] = std::move(rayList);

  json coneList = json::array();
  for (const FanCone& fc : fan.cones) {
    json c;
    c["gset"] = fc.set;
    json idx = json::array();
    for (std::size_t i : fc.rays) idx.push_back(newIndex[i]);
    c["rays"] = std::move(idx);
    c["kind"] = fc.cone.kind == ConeKind::quadric ? "quadric" : "smooth";
    c["region"] = json{{"kind", region_kind_name(fc.region.kind)}, {"index", fc.region.index}};
    coneList.push_back(std::move(c));
  }
  doc["cones"] = std::move(coneList);

  json setList = json::array();
  for (std::size_t i = 0; i < fan.gsets.size(); ++i) {
    const GSet& s = fan.gsets[i];
    json e;
    e["id"] = i;
    std::vector<Exponents> span = s.span();
    for (Exponents& m : span) m = g.map_back(m);
    std::sort(span.begin(), span.end());
    json spanList = json::array();
    for (const Exponents& m : span) spanList.push_back(detail::exp_triple(m));
    e["span"] = std::move(spanList);
    std::vector<Exponents> mem = s.members();
    for (Exponents& m : mem) m = g.map_back(m);
    std::sort(mem.begin(), mem.end());
    json memList = json::array();
    for (const Exponents& m : mem) memList.push_back(detail::exp_triple(m));
    e["monomials"] = std::move(memList);
    Valleys v = s.valleys();
    if (g.swapped) std::swap(v.y, v.z);
    json vj;
    vj["y"] = v.y ? json::array({v.y->col, v.y->height}) : json(nullptr);
    vj["z"] = v.z ? json::array({v.z->col, v.z->height}) : json(nullptr);
    e["valleys"] = std::move(vj);
    Int j = g.swapped ? s.top_z() : s.top_y();
    Int k = g.swapped ? s.top_y() : s.top_z();
    e["ijk"] = json::array({s.top_x(), j, k});
    setList.push_back(std::move(e));
  }
  doc["gsets"] = std::move(setList);

  json rhoList = json::array();
  for (const NVec& v : fan.rho) rhoList.push_back(detail::ray_triple(map_back_ray(g, v)));
  doc["rho"] = std::move(rhoList);

  doc["euclid"] = json{{"p", fan.trace.p}, {"q", fan.trace.q}};
  doc["validation"] = json{{"seed", report.seed},
                           {"samples", report.samples},
                           {"interior_walls", report.interiorWalls},
                           {"boundary_walls", report.boundaryWalls},
                           {"walls_ok", report.wallsOk},
                           {"coverage_ok", report.coverageOk},
                           {"count_ok", report.countOk},
                           {"oracle_checked", report.oracleChecked},
                           {"oracle_ok", report.oracleOk}};
  return doc;
}

inline std::string export_json(const Fan& fan, const FanReport& report) {
  return fan_to_json(fan, report).dump(2) + "\n";
}

inline std::string export_json(const Fan& fan) { return export_json(fan, validate_fan(fan)); }

namespace detail {

// Exact rational pixel coordinate; denominator kept positive.
struct Frac {
  Int128 num = 0;
  Int128 den = 1;
};

inline std::string fmt3(Frac f) {
  if (f.den < 0) {
    f.num = -f.num;
    f.den = -f.den;
  }
  bool neg = f.num < 0;
  Int128 n = neg ? -f.num : f.num;
  Int128 q = (n * 1000 + f.den / 2) / f.den;
  Int whole = narrow(q / 1000);
  Int frac = narrow(q % 1000);
  std::string out = neg && q != 0 ? "-" : "";
  out += std::to_string(whole);
  out += '.';
  if (frac < 100) out += '0';
  if (frac < 10) out += '0';
  out += std::to_string(frac);
  return out;
}

struct Pt {
  Frac x, y;
};

inline std::string pt_attr(const Pt& p) { return fmt3(p.x) + "," + fmt3(p.y); }

inline Frac frac_mid(const Frac& a, const Frac& b) {
  return {a.num * b.den + b.num * a.den, 2 * a.den * b.den};
}

inline Pt pt_mid(const Pt& a, const Pt& b) { return {frac_mid(a.x, b.x), frac_mid(a.y, b.y)}; }

}  // namespace detail

// Draw the fan as a planar subdivision. The barycentric chart scales each ray
// to the triangle spanned by the three axis directions; the affine chart
// slices the octant with the plane where the second and third coordinates sum
// to r, sending the first axis direction to infinity (straight up), so cones
// containing it are drawn as vertically clipped strips.
inline std::string export_svg(const Fan& fan, const RenderConfig& cfg) {
  using detail::Frac;
  using detail::Pt;
  const GroupAction& g = fan.action;
  const Int W = cfg.width, H = cfg.height;
  const Int M = std::max<Int>(std::min<Int>(48, std::min(W, H) / 8), 1);

  std::vector<NVec> rays;
  rays.reserve(fan.rays.size());
  for (const NVec& v : fan.rays) rays.push_back(map_back_ray(g, v));

  const bool affine = cfg.chart == Chart::AffineYZ;
  NVec e1{g.r, 0, 0};

  // Affine vertical scale: the largest slice height among drawable rays.
  Int128 vmaxN = 1, vmaxD = 1;
  if (affine) {
    for (const NVec& v : rays) {
      Int128 s = Int128(v.w2) + v.w3;
      if (s <= 0) continue;
      if (Int128(v.w1) * vmaxD > vmaxN * s) {
        vmaxN = v.w1;
        vmaxD = narrow(s);
      }
    }
  }

  auto project = [&](const NVec& v) -> Pt {
    if (!affine) {
      Int128 s = Int128(v.w1) + v.w2 + v.w3;
      // Corners: first axis top-center, second bottom-right, third bottom-left.
      Int128 xn = Int128(v.w1) * W + Int128(v.w2) * 2 * (W - M) + Int128(v.w3) * 2 * M;
      Int128 yn = Int128(v.w1) * 2 * M + (Int128(v.w2) + v.w3) * 2 * (H - M);
      return {{xn, 2 * s}, {yn, 2 * s}};
    }
    Int128 s = Int128(v.w2) + v.w3;
    if (s <= 0) return {{Int128(W), 2}, {Int128(M), 1}};  // marker for the infinite direction
    // x runs from the third axis (left) to the second (right); the height is
    // the first coordinate of the slice point, scaled so the tallest ray
    // touches the top margin.
    Frac x{Int128(M) * s + Int128(W - 2 * M) * v.w2, s};
    Frac y{Int128(H - M) * s * vmaxN - Int128(v.w1) * (H - 2 * M) * vmaxD, s * vmaxN};
    return {x, y};
  };

  std::vector<Pt> pos;
  pos.reserve(rays.size());
  for (const NVec& v : rays) pos.push_back(project(v));

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(W) + "\" height=\"" + std::to_string(H) + "\" viewBox=\"0 0 " +
         std::to_string(W) + " " + std::to_string(H) + "\">\n";
  svg +=
      "<style>\n"
      ".face{fill:#eef3fb;stroke:#2b2b2b;stroke-width:1;stroke-linejoin:round}\n"
      ".face.quadric{fill:#fbeeee}\n"
      ".support{fill:none;stroke:#c0392b;stroke-width:3.5;stroke-linejoin:round}\n"
      ".vertex{fill:#1b3a6b}\n"
      ".raylabel{font:11px monospace;fill:#1b3a6b}\n"
      ".walllabel{font:9px monospace;fill:#555;text-anchor:middle}\n"
      "</style>\n";

  // Faces, one polygon per cone.
  svg += "<g id=\"faces\">\n";
  for (const FanCone& fc : fan.cones) {
    std::vector<std::string> points;
    bool strip = false;
    if (affine) {
      std::size_t n = fc.rays.size();
      for (std::size_t t = 0; t < n && !strip; ++t)
        if (rays[fc.rays[t]] == e1) {
          // Clip the cone at the top margin: finite corners then two top corners.
          const Pt& u = pos[fc.rays[(t + 1) % n]];
          const Pt& v = pos[fc.rays[(t + 2) % n]];
          points = {detail::pt_attr(u), detail::pt_attr(v),
                    detail::fmt3(v.x) + "," + std::to_string(M),
                    detail::fmt3(u.x) + "," + std::to_string(M)};
          strip = true;
        }
    }
    if (!strip)
      for (std::size_t i : fc.rays) points.push_back(detail::pt_attr(pos[i]));
    svg += "<polygon class=\"face";
    if (fc.cone.kind == ConeKind::quadric) svg += " quadric";
    svg += "\" points=\"";
    for (std::size_t t = 0; t < points.size(); ++t) {
      if (t) svg += ' ';
      svg += points[t];
    }
    svg += "\"/>\n";
  }
  svg += "</g>\n";

  // Thick outlines around the support of each triangle of transformations.
  if (cfg.markTriangles && !fan.triangles.empty()) {
    svg += "<g id=\"supports\">\n";
    for (const Triangle& tri : fan.triangles) {
      svg += "<polygon class=\"support\" points=\"";
      for (std::size_t t = 0; t < tri.support.size(); ++t) {
        if (t) svg += ' ';
        svg += detail::pt_attr(project(map_back_ray(g, tri.support[t])));
      }
      svg += "\"/>\n";
    }
    svg += "</g>\n";
  }

  // Wall labels: each interior wall carries the primitive normal that both of
  // its rays annihilate, written multiplicatively with a canonical sign.
  if (cfg.labelRays) {
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> walls;
    for (std::size_t c = 0; c < fan.cones.size(); ++c) {
      const auto& idx = fan.cones[c].rays;
      for (std::size_t t = 0; t < idx.size(); ++t) {
        std::size_t i = idx[t], j = idx[(t + 1) % idx.size()];
        walls[std::minmax(i, j)].push_back(c);
      }
    }
    svg += "<g id=\"walls\">\n";
    for (const auto& [key, owners] : walls) {
      if (owners.size() != 2) continue;
      const NVec& u = fan.rays[key.first];
      const NVec& v = fan.rays[key.second];
      Exponents normal{0, 0, 0};
      bool found = false;
      for (const Exponents& d : fan.cones[owners.front()].cone.dual_generators)
        if (pair(u, d) == 0 && pair(v, d) == 0) {
          normal = d;
          found = true;
        }
      if (!found) continue;
      normal = g.map_back(normal);
      Int lead = normal.x != 0 ? normal.x : normal.y != 0 ? normal.y : normal.z;
      if (lead < 0) normal = Exponents{-normal.x, -normal.y, -normal.z};
      Pt at;
      if (affine && (rays[key.first] == e1 || rays[key.second] == e1)) {
        const Pt& fin = rays[key.first] == e1 ? pos[key.second] : pos[key.first];
        at = {fin.x, detail::frac_mid(fin.y, Frac{Int128(M), 1})};
      } else {
        at = detail::pt_mid(pos[key.first], pos[key.second]);
      }
      svg += "<text class=\"walllabel\" x=\"" + detail::fmt3(at.x) + "\" y=\"" +
             detail::fmt3(at.y) + "\">" + monomial_string(normal) + "</text>\n";
    }
    svg += "</g>\n";
  }

  // One vertex marker per ray.
  svg += "<g id=\"vertices\">\n";
  for (std::size_t i = 0; i < rays.size(); ++i)
    svg += "<circle class=\"vertex\" cx=\"" + detail::fmt3(pos[i].x) + "\" cy=\"" +
           detail::fmt3(pos[i].y) + "\" r=\"3\"/>\n";
  svg += "</g>\n";

  if (cfg.labelRays) {
    svg += "<g id=\"raylabels\">\n";
    for (std::size_t i = 0; i < rays.size(); ++i) {
      const NVec& v = rays[i];
      std::string text = "(" + std::to_string(v.w1) + "," + std::to_string(v.w2) + "," +
                         std::to_string(v.w3) + ")";
      if (affine && Int128(v.w2) + v.w3 <= 0) text += " at infinity";
      svg += "<text class=\"raylabel\" x=\"" + detail::fmt3({pos[i].x.num + 5 * pos[i].x.den,
                                                             pos[i].x.den}) +
             "\" y=\"" + detail::fmt3({pos[i].y.num - 5 * pos[i].y.den, pos[i].y.den}) + "\">" +
             text + "</text>\n";
    }
    svg += "</g>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace ghilb
