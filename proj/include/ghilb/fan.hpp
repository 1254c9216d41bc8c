#pragma once

// Fan assembly: the yz strips around e1, one triangle of transformations per
// primitive set, and the upper chain ending at the x-row set. The builder
// fails loudly on any structural anomaly (duplicate sets, wrong counts,
// non-simplicial triangle supports, ambiguous region rays); validate_fan
// re-checks the fan axioms and compares against the brute-force enumerator.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "ghilb/cones.hpp"
#include "ghilb/euclid.hpp"

namespace ghilb {

enum class RegionKind { YZ, Triangle, UpperChain };

inline const char* region_kind_name(RegionKind k) {
  switch (k) {
    case RegionKind::YZ: return "yz-region";
    case RegionKind::Triangle: return "triangle";
    case RegionKind::UpperChain: return "upper-chain";
  }
  return "";
}

struct Region {
  RegionKind kind = RegionKind::YZ;
  Int index = 0;  // strip l, triangle n (1-based), or chain step l
  friend bool operator==(const Region&, const Region&) = default;
};

// All corner-move images of one primitive set, plus the extremal rays of the
// union of their cones.
struct Triangle {
  std::size_t base = 0;               // gset index of the (0,0) member
  Int bound = 0;                      // corner moves allowed: min{top_y, top_z}
  std::vector<std::size_t> members;   // gset indices, (ur, ul) lexicographic
  std::array<std::size_t, 3> corners{};  // gset indices of (0,0), (bound,0), (0,bound)
  std::array<NVec, 3> support{};
};

struct FanCone {
  std::size_t set = 0;             // index into Fan::gsets
  Cone cone;                       // rays in canonical cyclic order
  std::vector<std::size_t> rays;   // the same rays as indices into Fan::rays
  Region region;
};

struct Fan {
  GroupAction action;
  std::vector<GSet> gsets;
  std::vector<FanCone> cones;       // parallel to gsets
  std::vector<NVec> rays;           // deduplicated, lexicographically sorted
  std::vector<Triangle> triangles;  // one per primitive set
  std::vector<NVec> rho;            // region rays rho_1 .. rho_{m+1}
  EuclidTrace trace;                // division data of (max, min) of (b, r-b)
  Int m = 0;
};

namespace detail {

// The unique triple of candidate rays whose cone contains every given ray.
// Any such triple spans the same cone, so survivors agree as sets.
inline std::array<NVec, 3> simplicial_hull(const std::vector<NVec>& candidates,
                                           const std::vector<NVec>& rays) {
  std::vector<std::array<NVec, 3>> found;
  for (std::size_t p = 0; p < candidates.size(); ++p)
    for (std::size_t q = p + 1; q < candidates.size(); ++q)
      for (std::size_t s = q + 1; s < candidates.size(); ++s) {
        const NVec &A = candidates[p], &B = candidates[q], &C = candidates[s];
        if (det3(A, B, C) == 0) continue;
        bool all = true;
        for (const NVec& v : rays)
          if (!tri_cone_contains(A, B, C, v, false)) {
            all = false;
            break;
          }
        if (!all) continue;
        std::array<NVec, 3> triple{A, B, C};
        std::sort(triple.begin(), triple.end());
        found.push_back(triple);
      }
  if (found.empty()) throw ChainBroken("region union is not a simplicial cone");
  for (const auto& t : found)
    if (t != found.front()) throw ChainBroken("region union has an ambiguous hull");
  return found.front();
}

}  // namespace detail

inline Fan build_fan(const GroupAction& g) {
  g.require_structured();
  Fan fan;
  fan.action = g;
  std::vector<Region> regions;

  for (Int l = 0; l < g.r; ++l) {
    fan.gsets.push_back(GSet::of_yz(g, l));
    regions.push_back({RegionKind::YZ, l});
  }

  std::vector<GSet> seq = primitive_sequence(g);
  fan.m = Int(seq.size()) - 1;
  for (std::size_t n = 0; n + 1 < seq.size(); ++n) {
    Triangle tri;
    tri.base = fan.gsets.size();
    tri.bound = std::min(seq[n].top_y(), seq[n].top_z());
    GSet rowStart = seq[n];
    for (Int ur = 0; ur <= tri.bound; ++ur) {
      if (ur > 0) rowStart = transform(rowStart, Direction::UpperRight);
      GSet cur = rowStart;
      for (Int ul = 0; ul <= tri.bound - ur; ++ul) {
        if (ul > 0) cur = transform(cur, Direction::UpperLeft);
        if (ur == 0 && ul == tri.bound) tri.corners[2] = fan.gsets.size();
        tri.members.push_back(fan.gsets.size());
        fan.gsets.push_back(cur);
        regions.push_back({RegionKind::Triangle, Int(n) + 1});
      }
    }
    tri.corners[0] = tri.base;
    tri.corners[1] = fan.gsets.size() - 1;  // (bound, 0) closes the scan
    fan.triangles.push_back(tri);
  }

  std::size_t chainStart = fan.gsets.size();
  std::vector<GSet> chain = upper_chain(seq.back());
  for (std::size_t l = 0; l < chain.size(); ++l) {
    fan.gsets.push_back(chain[l]);
    regions.push_back({RegionKind::UpperChain, Int(l)});
  }

  std::map<std::vector<Exponents>, std::size_t> seen;
  for (std::size_t i = 0; i < fan.gsets.size(); ++i)
    if (!seen.emplace(fan.gsets[i].members(), i).second)
      throw Error("duplicate G-set across regions");
  if (Int(fan.gsets.size()) != predicted_count(g))
    throw Error("assembled G-set count disagrees with the closed formula");

  std::vector<Cone> cones;
  std::map<NVec, std::size_t> rayIndex;
  for (const GSet& s : fan.gsets) {
    cones.push_back(sigma(s));
    for (const NVec& v : cones.back().rays) rayIndex.emplace(v, 0);
  }
  for (auto& [v, idx] : rayIndex) {
    idx = fan.rays.size();
    fan.rays.push_back(v);
  }
  for (std::size_t i = 0; i < cones.size(); ++i) {
    FanCone fc;
    fc.set = i;
    fc.cone = std::move(cones[i]);
    fc.region = regions[i];
    for (const NVec& v : fc.cone.rays) fc.rays.push_back(rayIndex.at(v));
    fan.cones.push_back(std::move(fc));
  }

  NVec e1 = axis_ray(g, 0), e2 = axis_ray(g, 1), e3 = axis_ray(g, 2);
  for (Int l = 0; l < g.r; ++l) {
    const auto& rays = fan.cones[std::size_t(l)].cone.rays;
    if (std::find(rays.begin(), rays.end(), e1) == rays.end())
      throw Error("yz strip cone misses the e1 ray");
  }

  // Triangle supports and the region rays rho_n. The support corners sit at
  // the three corner cones; the hull is verified against every member ray.
  for (std::size_t n = 0; n < fan.triangles.size(); ++n) {
    Triangle& tri = fan.triangles[n];
    std::vector<NVec> candidates, memberRays;
    for (std::size_t c : tri.corners)
      for (const NVec& v : fan.cones[c].cone.rays) candidates.push_back(v);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (std::size_t i : tri.members)
      for (const NVec& v : fan.cones[i].cone.rays) memberRays.push_back(v);
    tri.support = detail::simplicial_hull(candidates, memberRays);

    const auto& baseRays = fan.cones[tri.base].cone.rays;
    std::vector<NVec> common;
    for (const NVec& v : tri.support)
      if (std::find(baseRays.begin(), baseRays.end(), v) != baseRays.end()) common.push_back(v);
    if (common.size() != 1)
      throw ChainBroken("triangle support and base cone share " +
                        std::to_string(common.size()) + " rays instead of one");
    fan.rho.push_back(common.front());

    // One support corner is the coordinate ray named by the shorter side.
    NVec axis = seq[n].top_y() < seq[n].top_z() ? e2 : e3;
    if (std::find(tri.support.begin(), tri.support.end(), axis) == tri.support.end())
      throw ChainBroken("triangle support misses its coordinate ray");
  }

  // rho_{m+1}: the ray of the first chain cone that spans the chain region
  // together with e2 and e3.
  {
    std::vector<NVec> chainRays;
    for (std::size_t i = chainStart; i < fan.cones.size(); ++i)
      for (const NVec& v : fan.cones[i].cone.rays) chainRays.push_back(v);
    std::vector<NVec> survivors;
    for (const NVec& cand : fan.cones[chainStart].cone.rays) {
      if (on_coordinate_axis(cand)) continue;
      bool all = true;
      for (const NVec& v : chainRays)
        if (!tri_cone_contains(e2, e3, cand, v, false)) {
          all = false;
          break;
        }
      if (all) survivors.push_back(cand);
    }
    if (survivors.size() != 1)
      throw ChainBroken("upper chain region has " + std::to_string(survivors.size()) +
                        " spanning rays instead of one");
    fan.rho.push_back(survivors.front());
  }

  // Telescope: triangle n fills cone(rho_n, e2, e3) up to cone(rho_{n+1}, e2, e3).
  for (std::size_t n = 0; n < fan.triangles.size(); ++n) {
    for (std::size_t i : fan.triangles[n].members)
      for (const NVec& v : fan.cones[i].cone.rays) {
        if (!tri_cone_contains(fan.rho[n], e2, e3, v, false))
          throw ChainBroken("triangle cone leaves its telescope region");
        if (tri_cone_contains(fan.rho[n + 1], e2, e3, v, true))
          throw ChainBroken("triangle cone overlaps the next telescope region");
      }
  }

  fan.trace = euclid_trace(std::max(g.b, g.r - g.b), std::min(g.b, g.r - g.b));
  return fan;
}

inline const std::vector<NVec>& rho_chain(const Fan& fan) { return fan.rho; }

inline constexpr std::uint64_t kValidationSeed = 1000003;

struct FanReport {
  bool wallsOk = false;
  bool coverageOk = false;
  bool countOk = false;
  bool oracleChecked = false;
  bool oracleOk = false;
  Int interiorWalls = 0;
  Int boundaryWalls = 0;
  Int samples = 0;
  std::uint64_t seed = 0;
  bool ok() const { return wallsOk && coverageOk && countOk && (!oracleChecked || oracleOk); }
};

// Fan axioms and cross-checks: every wall interior to the octant is shared by
// exactly two cones, sampled octant points land in exactly one cone interior
// or on a shared face, the G-sets match the supplied oracle, and the cone
// count matches the closed formula.
inline FanReport validate_fan(const Fan& fan, const std::vector<GSet>* oracle = nullptr,
                              Int samples = 1000, std::uint64_t seed = kValidationSeed) {
  FanReport report;
  report.samples = samples;
  report.seed = seed;

  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> walls;
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    const auto& idx = fan.cones[i].rays;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      std::size_t p = idx[k], q = idx[(k + 1) % idx.size()];
      walls[std::minmax(p, q)].push_back(i);
    }
  }
  report.wallsOk = true;
  for (const auto& [key, owners] : walls) {
    if (owners.size() == 2) {
      ++report.interiorWalls;
      continue;
    }
    const NVec &p = fan.rays[key.first], &q = fan.rays[key.second];
    bool boundary = (p.w1 == 0 && q.w1 == 0) || (p.w2 == 0 && q.w2 == 0) ||
                    (p.w3 == 0 && q.w3 == 0);
    if (owners.size() == 1 && boundary)
      ++report.boundaryWalls;
    else
      report.wallsOk = false;
  }

  std::mt19937_64 rng(seed);
  Int range = 1000 * fan.action.r;
  report.coverageOk = true;
  for (Int s = 0; s < samples; ++s) {
    NVec v{Int(rng() % std::uint64_t(range)) + 1, Int(rng() % std::uint64_t(range)) + 1,
           Int(rng() % std::uint64_t(range)) + 1};
    int strict = 0, loose = 0;
    for (const FanCone& fc : fan.cones) {
      if (fc.cone.contains(v, true)) ++strict;
      if (fc.cone.contains(v, false)) ++loose;
    }
    if (!(strict <= 1 && loose >= 1 && (strict == 1 || loose >= 2))) report.coverageOk = false;
  }

  if (oracle) {
    report.oracleChecked = true;
    std::vector<std::vector<Exponents>> ours, theirs;
    for (const GSet& s : fan.gsets) ours.push_back(s.members());
    for (const GSet& s : *oracle) theirs.push_back(s.members());
    std::sort(ours.begin(), ours.end());
    std::sort(theirs.begin(), theirs.end());
    report.oracleOk = ours == theirs;
  }

  report.countOk = Int(fan.cones.size()) == predicted_count(fan.action);
  return report;
}

}  // namespace ghilb
