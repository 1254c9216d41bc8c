#pragma once

// Wall crossings between G-sets. Each admissible direction names a complement
// generator u; the set is rearranged by shifting every member w by the
// invariant step u - transfer(u), scaled by how often transfer(u) divides w.
// Crossing a boundary wall of the octant (transfer(u) = 1) is impossible and
// reported as such.

#include <vector>

#include "ghilb/gset.hpp"

namespace ghilb {

enum class Direction { Upper, Right, Left, UpperRight, UpperLeft };

inline const char* direction_name(Direction d) {
  switch (d) {
    case Direction::Upper: return "upper";
    case Direction::Right: return "right";
    case Direction::Left: return "left";
    case Direction::UpperRight: return "upper-right";
    case Direction::UpperLeft: return "upper-left";
  }
  return "?";
}

// Sets with at most one valley move through their three pure-power walls.
// Two-valley sets move through the valley corners, and through the pure y/z
// walls only when the opposite valley sits strictly above the x-row.
inline std::vector<Direction> available_directions(const GSet& s) {
  Valleys v = s.valleys();
  if (v.count() < 2) return {Direction::Upper, Direction::Right, Direction::Left};
  std::vector<Direction> out;
  if (v.z->height >= 1) out.push_back(Direction::Right);
  if (v.y->height >= 1) out.push_back(Direction::Left);
  out.push_back(Direction::UpperRight);
  out.push_back(Direction::UpperLeft);
  return out;
}

// The complement generator whose wall the direction crosses.
inline Exponents direction_monomial(const GSet& s, Direction d) {
  Valleys v = s.valleys();
  const bool two = v.count() == 2;
  switch (d) {
    case Direction::Upper:
      if (two) throw IllegalDirection("upper wall requires at most one valley");
      return {s.top_x() + 1, 0, 0};
    case Direction::Right:
      if (two && v.z->height < 1)
        throw IllegalDirection("right wall blocked: z-valley sits on the x-row");
      return {0, s.top_y() + 1, 0};
    case Direction::Left:
      if (two && v.y->height < 1)
        throw IllegalDirection("left wall blocked: y-valley sits on the x-row");
      return {0, 0, s.top_z() + 1};
    case Direction::UpperRight:
      if (!two) throw IllegalDirection("upper-right wall requires two valleys");
      return {v.y->col + 1, v.y->height + 1, 0};
    case Direction::UpperLeft:
      if (!two) throw IllegalDirection("upper-left wall requires two valleys");
      return {v.z->col + 1, 0, v.z->height + 1};
  }
  throw IllegalDirection("unknown direction");
}

inline GSet transform(const GSet& s, Direction d) {
  Exponents u = direction_monomial(s, d);
  Exponents v = s.transfer(u);
  if (v.is_unit())
    throw DegenerateWall("wall " + monomial_string(u) + " lies on the boundary of the fan");
  Exponents step = u - v;
  std::vector<Exponents> members;
  members.reserve(static_cast<size_t>(s.action().r));
  for (const Exponents& w : s.members()) {
    Int c = INT64_MAX;
    if (v.x > 0) c = std::min(c, w.x / v.x);
    if (v.y > 0) c = std::min(c, w.y / v.y);
    if (v.z > 0) c = std::min(c, w.z / v.z);
    members.push_back(w + step * c);
  }
  return GSet::from_members(s.action(), members);
}

}  // namespace ghilb
