#include <catch2/catch_amalgamated.hpp>

#include "ghilb/euclid.hpp"

using namespace ghilb;

namespace {

GSet span_of(const GroupAction& g, std::initializer_list<Exponents> tops) {
  return GSet::from_span(g, std::vector<Exponents>(tops));
}

std::pair<Int, Int> tops(const GSet& s) { return {s.top_y(), s.top_z()}; }

}  // namespace

TEST_CASE("division traces on frozen pairs", "[euclid]") {
  EuclidTrace t = euclid_trace(11, 3);
  CHECK(t.p == std::vector<Int>{11, 3, 2, 1});
  CHECK(t.q == std::vector<Int>{3, 1, 2});

  t = euclid_trace(3, 11);
  CHECK(t.p == std::vector<Int>{3, 11, 3, 2, 1});
  CHECK(t.q == std::vector<Int>{0, 3, 1, 2});

  t = euclid_trace(5, 1);
  CHECK(t.p == std::vector<Int>{5, 1});
  CHECK(t.q == std::vector<Int>{5});

  t = euclid_trace(1, 7);
  CHECK(t.p == std::vector<Int>{1, 7, 1});
  CHECK(t.q == std::vector<Int>{0, 7});

  t = euclid_trace(1, 1);
  CHECK(t.p == std::vector<Int>{1, 1});
  CHECK(t.q == std::vector<Int>{1});
}

TEST_CASE("trace rejects degenerate pairs", "[euclid]") {
  CHECK_THROWS_AS(euclid_trace(6, 3), DegenerateInput);
  CHECK_THROWS_AS(euclid_trace(0, 5), DegenerateInput);
  CHECK_THROWS_AS(euclid_trace(5, 0), DegenerateInput);
}

TEST_CASE("trace identities sum to p1 + p2 - 1 and p1 * p2", "[euclid]") {
  for (auto [p1, p2] : std::vector<std::pair<Int, Int>>{
           {11, 3}, {3, 11}, {8, 3}, {17, 5}, {9, 2}, {1, 7}, {5, 1}, {13, 8}, {21, 13}}) {
    EuclidTrace t = euclid_trace(p1, p2);
    REQUIRE(t.p.size() == t.q.size() + 1);
    CHECK(t.p.back() == 1);
    Int linear = 0, quadratic = 0;
    for (std::size_t l = 0; l < t.q.size(); ++l) {
      linear += t.q[l] * t.p[l + 1];
      quadratic += t.q[l] * t.p[l + 1] * t.p[l + 1];
    }
    CHECK(linear == p1 + p2 - 1);
    CHECK(quadratic == p1 * p2);
  }
}

TEST_CASE("seed set spans x, y^(b-1), z^(r-b-1)", "[euclid]") {
  GroupAction g = GroupAction::make(5, 2);
  GSet seed = gamma_1(g);
  CHECK(seed == span_of(g, {{1, 0, 0}, {0, 2, 0}, {0, 0, 1}}));
  CHECK(seed.primitive());

  g = GroupAction::make(7, 2);
  CHECK(gamma_1(g) == span_of(g, {{1, 0, 0}, {0, 3, 0}, {0, 0, 2}}));

  CHECK_THROWS_AS(gamma_1(GroupAction::make(7, 1)), InvalidAction);
  CHECK_THROWS_AS(gamma_1(GroupAction::make(7, 6)), InvalidAction);
}

TEST_CASE("primitive sequence for 1/5(1,2,3)", "[euclid]") {
  GroupAction g = GroupAction::make(5, 2);
  std::vector<GSet> seq = primitive_sequence(g);
  REQUIRE(seq.size() == 2);
  CHECK(seq[0] == gamma_1(g));
  CHECK(seq[1] == span_of(g, {{2, 0, 0}, {1, 0, 1}}));
  CHECK(seq[0].primitive());
  CHECK_FALSE(seq[1].primitive());
  CHECK(tops(seq[0]) == std::pair<Int, Int>{2, 1});
  CHECK(tops(seq[1]) == std::pair<Int, Int>{0, 1});
}

TEST_CASE("primitive sequence for 1/7(1,2,5)", "[euclid]") {
  GroupAction g = GroupAction::make(7, 2);
  std::vector<GSet> seq = primitive_sequence(g);
  REQUIRE(seq.size() == 2);
  CHECK(seq[1] == span_of(g, {{2, 0, 0}, {1, 0, 2}}));
  CHECK(tops(seq[0]) == std::pair<Int, Int>{3, 2});
  CHECK(tops(seq[1]) == std::pair<Int, Int>{0, 2});
}

TEST_CASE("primitive sequence for 1/11(1,4,7)", "[euclid]") {
  GroupAction g = GroupAction::make(11, 4);
  REQUIRE(g.b == 3);
  std::vector<GSet> seq = primitive_sequence(g);
  REQUIRE(seq.size() == 4);
  CHECK(seq[1] == span_of(g, {{2, 0, 0}, {0, 0, 4}, {1, 2, 0}}));
  std::vector<std::pair<Int, Int>> expected{{2, 7}, {2, 4}, {2, 1}, {0, 1}};
  for (std::size_t n = 0; n < seq.size(); ++n) {
    CHECK(tops(seq[n]) == expected[n]);
    CHECK(seq[n].primitive() == (n + 1 < seq.size()));
  }
}

TEST_CASE("primitive sequence for 1/14(1,5,9)", "[euclid]") {
  GroupAction g = GroupAction::make(14, 5);
  REQUIRE(g.b == 3);
  std::vector<GSet> seq = primitive_sequence(g);
  REQUIRE(seq.size() == 5);
  std::vector<std::pair<Int, Int>> expected{{2, 10}, {2, 7}, {2, 4}, {2, 1}, {0, 1}};
  for (std::size_t n = 0; n < seq.size(); ++n) CHECK(tops(seq[n]) == expected[n]);
}

TEST_CASE("swapped input runs the same sequence", "[euclid]") {
  // Only the swap flag differs between the two actions, so the sequences
  // agree member for member even though the sets compare unequal as wholes.
  std::vector<GSet> a = primitive_sequence(GroupAction::make(5, 2));
  std::vector<GSet> b = primitive_sequence(GroupAction::make(5, 3));
  REQUIRE(a.size() == b.size());
  for (std::size_t n = 0; n < a.size(); ++n) CHECK(a[n].members() == b[n].members());
}

TEST_CASE("upper chain climbs to the x-row set", "[euclid]") {
  GroupAction g = GroupAction::make(5, 2);
  std::vector<GSet> chain = upper_chain(primitive_sequence(g).back());
  REQUIRE(chain.size() == 2);
  CHECK(chain[1] == GSet::of_x(g));

  g = GroupAction::make(7, 2);
  chain = upper_chain(primitive_sequence(g).back());
  REQUIRE(chain.size() == 3);
  CHECK(chain[0] == span_of(g, {{2, 0, 0}, {1, 0, 2}}));
  CHECK(chain[1] == span_of(g, {{4, 0, 0}, {1, 0, 1}}));
  CHECK(chain[2] == GSet::of_x(g));
}

TEST_CASE("predicted count matches enumeration", "[euclid]") {
  struct Row {
    Int r, a, count;
  };
  for (Row row : {Row{5, 2, 10}, Row{7, 2, 16}, Row{7, 3, 15}, Row{11, 3, 30}, Row{11, 4, 28},
                  Row{13, 5, 39}, Row{14, 5, 37}, Row{2, 1, 3}, Row{3, 1, 5}}) {
    GroupAction g = GroupAction::make(row.r, row.a);
    CHECK(predicted_count(g) == row.count);
    CHECK(Int(enumerate_all(g).size()) == row.count);
  }
}

TEST_CASE("count decomposes over regions", "[euclid]") {
  // r strips, one chain, and a triangular block of C(min+1, 2) sets per
  // primitive step.
  for (auto [r, a] : std::vector<std::pair<Int, Int>>{
           {5, 2}, {7, 2}, {7, 3}, {11, 3}, {11, 4}, {12, 5}, {13, 5}, {14, 5}, {19, 7}}) {
    GroupAction g = GroupAction::make(r, a);
    std::vector<GSet> seq = primitive_sequence(g);
    Int total = g.r;
    total += std::max(seq.back().top_y(), seq.back().top_z()) + 1;
    for (std::size_t n = 0; n + 1 < seq.size(); ++n) {
      Int mn = std::min(seq[n].top_y(), seq[n].top_z()) + 1;
      total += mn * (mn + 1) / 2;
    }
    CHECK(total == predicted_count(g));
  }
}

TEST_CASE("trace entries bound the triangle widths", "[euclid]") {
  // With quotients prefixed by q0 = 1, the C-th primitive set has width
  // min{top_y, top_z} + 1 equal to the trace entry p[D + 1], where D is the
  // block of partial quotient sums containing C. The final quotient is the
  // length of the top chain.
  for (auto [r, a] : std::vector<std::pair<Int, Int>>{
           {5, 2}, {7, 2}, {7, 3}, {11, 3}, {11, 4}, {13, 5}, {14, 5}, {19, 7}}) {
    GroupAction g = GroupAction::make(r, a);
    std::vector<GSet> seq = primitive_sequence(g);
    EuclidTrace t = euclid_trace(std::max(g.b, g.r - g.b), std::min(g.b, g.r - g.b));
    std::vector<Int> sums{1};
    for (Int q : t.q) sums.push_back(sums.back() + q);
    for (std::size_t c = 0; c + 1 < seq.size(); ++c) {
      Int C = Int(c) + 1;
      std::size_t D = 0;
      while (D + 1 < sums.size() && sums[D + 1] <= C) ++D;
      REQUIRE(D + 1 < t.p.size());
      CHECK(std::min(seq[c].top_y(), seq[c].top_z()) + 1 == t.p[D + 1]);
    }
    CHECK(t.q.back() == std::max(seq.back().top_y(), seq.back().top_z()) + 1);
  }
}
