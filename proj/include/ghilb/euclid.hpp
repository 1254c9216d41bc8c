#pragma once

// The arithmetic backbone of the fan: a subtractive Euclid run on (b, r-b)
// drives the sequence of primitive sets, whose valley corner moves sweep out
// the triangular regions, and the division trace of the same pair predicts
// every region size.

#include <vector>

#include "ghilb/gigsaw.hpp"

namespace ghilb {

// Division chain p1 = q1*p2 + p3, ..., stopping after the division with
// remainder zero. For coprime inputs the last remainder kept is 1. A first
// entry smaller than the second yields a leading zero quotient.
struct EuclidTrace {
  std::vector<Int> p;  // n+1 entries, ends at 1 for coprime input
  std::vector<Int> q;  // n quotients
};

inline EuclidTrace euclid_trace(Int p1, Int p2) {
  if (p1 < 1 || p2 < 1) throw DegenerateInput("trace requires positive integers");
  if (std::gcd(p1, p2) != 1) throw DegenerateInput("trace requires coprime integers");
  EuclidTrace t;
  t.p = {p1, p2};
  while (true) {
    Int a = t.p[t.p.size() - 2];
    Int b = t.p.back();
    t.q.push_back(a / b);
    Int rem = a % b;
    if (rem == 0) break;
    t.p.push_back(rem);
  }
  return t;
}

// The seed of the structured pipeline: both valleys sit at 1.
inline GSet gamma_1(const GroupAction& g) {
  g.require_structured();
  return GSet::from_span(g, {{1, 0, 0}, {0, g.b - 1, 0}, {0, 0, g.r - g.b - 1}});
}

// Gamma_1, Gamma_2, ..., stopping at the first set that is not primitive.
// Each step exhausts the shorter valley direction and moves up; the result is
// cross-checked against its closed span form and the subtractive Euclid
// recurrence on (top_y + 1, top_z + 1).
inline std::vector<GSet> primitive_sequence(const GroupAction& g) {
  std::vector<GSet> out{gamma_1(g)};
  Int guard = g.r;
  while (out.back().primitive()) {
    if (--guard < 0) throw ChainBroken("primitive sequence exceeded r steps");
    const GSet& cur = out.back();
    Valleys v = cur.valleys();
    Int i = cur.top_x(), j = cur.top_y(), k = cur.top_z();
    GSet s = cur;
    Exponents expectedSpan1, expectedSpan2, expectedSpan3;
    if (j < k) {
      for (Int t = 0; t < j; ++t) s = transform(s, Direction::UpperRight);
      expectedSpan1 = {i + v.z->col + 1, 0, 0};
      expectedSpan2 = {v.z->col, 0, k - j - 1};
      expectedSpan3 = {i, j, 0};
    } else {
      for (Int t = 0; t < k; ++t) s = transform(s, Direction::UpperLeft);
      expectedSpan1 = {i + v.y->col + 1, 0, 0};
      expectedSpan2 = {v.y->col, j - k - 1, 0};
      expectedSpan3 = {i, 0, k};
    }
    GSet next = transform(s, Direction::Upper);
    if (!(next == GSet::from_span(g, {expectedSpan1, expectedSpan2, expectedSpan3})))
      throw ChainBroken("primitive step disagrees with its closed span form");
    Int nextJ = j < k ? j : j - k - 1;
    Int nextK = j < k ? k - j - 1 : k;
    if (next.top_y() != nextJ || next.top_z() != nextK)
      throw ChainBroken("primitive step disagrees with the subtractive recurrence");
    out.push_back(next);
  }
  return out;
}

// T_U orbit from the last sequence member up to the pure x-row set.
inline std::vector<GSet> upper_chain(const GSet& last) {
  std::vector<GSet> chain{last};
  Int len = std::max(last.top_y(), last.top_z());
  for (Int l = 0; l < len; ++l) chain.push_back(transform(chain.back(), Direction::Upper));
  if (!(chain.back() == GSet::of_x(last.action())))
    throw ChainBroken("upper chain does not end at the x-row set");
  return chain;
}

// Closed form for the number of maximal cones: (3r + b(r-b) - 1) / 2.
inline Int predicted_count(const GroupAction& g) {
  return narrow((Int128(3) * g.r + Int128(g.b) * (g.r - g.b) - 1) / 2);
}

}  // namespace ghilb
