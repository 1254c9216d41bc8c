#pragma once

// Monomial G-sets for the action 1/r(1, a, r-a): r monomials containing 1,
// one of each weight, closed under divisors, no member divisible by yz. Such
// a set lives in the (x,y)- and (x,z)-planes, so it is described by two
// non-increasing height profiles over a shared row of x-powers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ghilb/lattice.hpp"

namespace ghilb {

// Inner corner of a profile: the monomial x^col y^height (resp. x^col z^height)
// sits at the corner, x^col y^(height+1) and x^(col+1) y^height are still in
// the set, and x^(col+1) y^(height+1) is not.
struct Valley {
  Int col = 0;
  Int height = 0;
  friend bool operator==(const Valley&, const Valley&) = default;
};

struct Valleys {
  std::optional<Valley> y;
  std::optional<Valley> z;
  int count() const { return (y ? 1 : 0) + (z ? 1 : 0); }
};

class GSet {
 public:
  // Validates and builds; throws MixedYZ or NotAGSet on bad input.
  static GSet from_members(const GroupAction& g, const std::vector<Exponents>& members) {
    for (const Exponents& m : members)
      if (m.y > 0 && m.z > 0) throw MixedYZ("member " + monomial_string(m) + " is divisible by yz");
    std::vector<std::string> problems = check(g, members);
    if (!problems.empty()) {
      std::string msg = "not a G-set:";
      for (const std::string& p : problems) msg += " " + p + ";";
      throw NotAGSet(msg);
    }
    GSet s;
    s.g_ = g;
    Int cols = 0;
    for (const Exponents& m : members) cols = std::max(cols, m.x + 1);
    s.yTop_.assign(static_cast<size_t>(cols), 0);
    s.zTop_.assign(static_cast<size_t>(cols), 0);
    s.byWeight_.assign(static_cast<size_t>(g.r), Exponents{});
    for (const Exponents& m : members) {
      if (m.y > 0) s.yTop_[static_cast<size_t>(m.x)] = std::max(s.yTop_[static_cast<size_t>(m.x)], m.y);
      if (m.z > 0) s.zTop_[static_cast<size_t>(m.x)] = std::max(s.zTop_[static_cast<size_t>(m.x)], m.z);
      s.byWeight_[static_cast<size_t>(weight(g, m))] = m;
    }
    return s;
  }

  // Downward closure of the given monomials under divisibility.
  static GSet from_span(const GroupAction& g, const std::vector<Exponents>& spanners) {
    std::set<Exponents> closure;
    std::vector<Exponents> todo = spanners;
    while (!todo.empty()) {
      Exponents m = todo.back();
      todo.pop_back();
      if (!m.is_ordinary()) throw NotAGSet("spanner is not an ordinary monomial");
      if (m.y > 0 && m.z > 0) throw MixedYZ("spanner " + monomial_string(m) + " is divisible by yz");
      if (!closure.insert(m).second) continue;
      if (Int(closure.size()) > g.r) throw NotAGSet("closure of the span exceeds r monomials");
      if (m.x > 0) todo.push_back({m.x - 1, m.y, m.z});
      if (m.y > 0) todo.push_back({m.x, m.y - 1, m.z});
      if (m.z > 0) todo.push_back({m.x, m.y, m.z - 1});
    }
    return from_members(g, std::vector<Exponents>(closure.begin(), closure.end()));
  }

  static GSet of_x(const GroupAction& g) {
    std::vector<Exponents> members;
    for (Int p = 0; p < g.r; ++p) members.push_back({p, 0, 0});
    return from_members(g, members);
  }

  // The set {y^(r-1-l), ..., y, 1, z, ..., z^l} with no x at all.
  static GSet of_yz(const GroupAction& g, Int l) {
    if (l < 0 || l >= g.r) throw Error("yz-set index out of range");
    std::vector<Exponents> members;
    for (Int q = 0; q <= g.r - 1 - l; ++q) members.push_back({0, q, 0});
    for (Int s = 1; s <= l; ++s) members.push_back({0, 0, s});
    return from_members(g, members);
  }

  // Non-throwing diagnosis; empty result means the members form a G-set.
  static std::vector<std::string> check(const GroupAction& g, const std::vector<Exponents>& members) {
    std::vector<std::string> problems;
    if (Int(members.size()) != g.r)
      problems.push_back("expected " + std::to_string(g.r) + " monomials, got " +
                         std::to_string(members.size()));
    std::set<Exponents> set;
    for (const Exponents& m : members) {
      if (!m.is_ordinary()) problems.push_back(monomial_string(m) + " has a negative exponent");
      if (m.y > 0 && m.z > 0) problems.push_back(monomial_string(m) + " is divisible by yz");
      if (!set.insert(m).second) problems.push_back("duplicate member " + monomial_string(m));
    }
    if (!set.count(kUnit)) problems.push_back("1 is missing");
    for (const Exponents& m : set) {
      for (const Exponents& q : {Exponents{m.x - 1, m.y, m.z}, Exponents{m.x, m.y - 1, m.z},
                                 Exponents{m.x, m.y, m.z - 1}}) {
        if (q.is_ordinary() && !set.count(q)) {
          problems.push_back("divisor " + monomial_string(q) + " of " + monomial_string(m) +
                             " is missing");
          break;
        }
      }
    }
    std::vector<int> seen(static_cast<size_t>(g.r), 0);
    for (const Exponents& m : set)
      if (m.is_ordinary()) ++seen[static_cast<size_t>(weight(g, m))];
    for (Int w = 0; w < g.r; ++w)
      if (seen[static_cast<size_t>(w)] > 1)
        problems.push_back("weight " + std::to_string(w) + " appears more than once");
    return problems;
  }

  const GroupAction& action() const { return g_; }
  Int columns() const { return Int(yTop_.size()); }
  Int top_x() const { return columns() - 1; }
  Int top_y() const { return yTop_[0]; }
  Int top_z() const { return zTop_[0]; }
  Int y_top(Int col) const { return yTop_[static_cast<size_t>(col)]; }
  Int z_top(Int col) const { return zTop_[static_cast<size_t>(col)]; }

  bool contains(const Exponents& m) const {
    if (!m.is_ordinary() || (m.y > 0 && m.z > 0)) return false;
    if (m.x >= columns()) return false;
    if (m.y > 0) return m.y <= yTop_[static_cast<size_t>(m.x)];
    if (m.z > 0) return m.z <= zTop_[static_cast<size_t>(m.x)];
    return true;
  }

  std::vector<Exponents> members() const {
    std::vector<Exponents> out;
    out.reserve(static_cast<size_t>(g_.r));
    for (Int p = 0; p < columns(); ++p) {
      out.push_back({p, 0, 0});
      for (Int q = 1; q <= yTop_[static_cast<size_t>(p)]; ++q) out.push_back({p, q, 0});
      for (Int s = 1; s <= zTop_[static_cast<size_t>(p)]; ++s) out.push_back({p, 0, s});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Maximal members under divisibility: the minimal data spanning the set.
  std::vector<Exponents> span() const {
    std::vector<Exponents> out;
    for (const Exponents& m : members())
      if (!contains({m.x + 1, m.y, m.z}) && !contains({m.x, m.y + 1, m.z}) &&
          !contains({m.x, m.y, m.z + 1}))
        out.push_back(m);
    return out;
  }

  // Each profile of a G-set descends at most once before its final drop; a
  // second descent would break the weight bijection, so it is trapped here.
  Valleys valleys() const {
    Valleys v;
    for (Int p = 0; p + 1 < columns(); ++p) {
      if (yTop_[static_cast<size_t>(p)] > yTop_[static_cast<size_t>(p + 1)]) {
        if (v.y) throw NotAGSet("profile has more than one y-valley");
        v.y = Valley{p, yTop_[static_cast<size_t>(p + 1)]};
      }
      if (zTop_[static_cast<size_t>(p)] > zTop_[static_cast<size_t>(p + 1)]) {
        if (v.z) throw NotAGSet("profile has more than one z-valley");
        v.z = Valley{p, zTop_[static_cast<size_t>(p + 1)]};
      }
    }
    return v;
  }

  // Primitive: two valleys whose corner monomials are pure powers of x.
  bool primitive() const {
    Valleys v = valleys();
    return v.count() == 2 && v.y->height == 0 && v.z->height == 0;
  }

  const Exponents& member_of_weight(Int w) const { return byWeight_[static_cast<size_t>(w)]; }

  // The unique member with the same weight as v.
  const Exponents& transfer(const Exponents& v) const { return member_of_weight(weight(g_, v)); }

  // Difference v - transfer(v), an invariant Laurent exponent vector.
  Exponents s_value(const Exponents& v) const { return v - transfer(v); }

  friend bool operator==(const GSet& p, const GSet& q) {
    return p.g_ == q.g_ && p.yTop_ == q.yTop_ && p.zTop_ == q.zTop_;
  }

 private:
  GroupAction g_;
  std::vector<Int> yTop_;
  std::vector<Int> zTop_;
  std::vector<Exponents> byWeight_;
};

// Exhaustive enumeration straight from the definition, column by column with
// weight-freshness pruning. Independent of every other construction here, so
// it serves as the reference the structural machinery is tested against.
inline std::vector<GSet> enumerate_all(const GroupAction& g, Int bound = 60) {
  if (g.r > bound || g.r > 60) throw BoundExceeded("r too large for exhaustive enumeration");
  std::vector<GSet> out;
  std::vector<std::pair<Int, Int>> shape;  // (y height, z height) per column

  auto record = [&]() {
    std::vector<Exponents> members;
    for (Int p = 0; p < Int(shape.size()); ++p) {
      members.push_back({p, 0, 0});
      for (Int q = 1; q <= shape[static_cast<size_t>(p)].first; ++q) members.push_back({p, q, 0});
      for (Int s = 1; s <= shape[static_cast<size_t>(p)].second; ++s) members.push_back({p, 0, s});
    }
    out.push_back(GSet::from_members(g, members));
  };

  std::function<void(Int, Int, Int, std::uint64_t, Int)> rec = [&](Int col, Int maxY, Int maxZ,
                                                                   std::uint64_t mask, Int count) {
    if (count == g.r) {
      record();
      return;
    }
    std::uint64_t colMask = std::uint64_t(1) << ((col) % g.r);
    if (mask & colMask) return;  // x^col itself must be fresh
    std::uint64_t maskY = mask | colMask;
    for (Int yh = 0; yh <= maxY && count + yh + 1 <= g.r; ++yh) {
      if (yh > 0) {
        std::uint64_t bit = std::uint64_t(1)
                            << (static_cast<std::uint64_t>((col + g.a * yh) % g.r));
        if (maskY & bit) break;
        maskY |= bit;
      }
      std::uint64_t maskYZ = maskY;
      for (Int zh = 0; zh <= maxZ && count + yh + zh + 1 <= g.r; ++zh) {
        if (zh > 0) {
          std::uint64_t bit = std::uint64_t(1)
                              << (static_cast<std::uint64_t>((col + (g.r - g.a) * zh) % g.r));
          if (maskYZ & bit) break;
          maskYZ |= bit;
        }
        shape.push_back({yh, zh});
        rec(col + 1, yh, zh, maskYZ, count + yh + zh + 1);
        shape.pop_back();
      }
    }
  };

  rec(0, g.r - 1, g.r - 1, 0, 0);
  std::sort(out.begin(), out.end(),
            [](const GSet& p, const GSet& q) { return p.members() < q.members(); });
  return out;
}

}  // namespace ghilb
