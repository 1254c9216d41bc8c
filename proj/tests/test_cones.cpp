#include <catch2/catch_amalgamated.hpp>

#include "ghilb/cones.hpp"

using namespace ghilb;

namespace {
const GroupAction g52 = GroupAction::make(5, 2);

GSet gamma1() { return GSet::from_span(g52, {{1, 0, 0}, {0, 2, 0}, {0, 0, 1}}); }

std::vector<NVec> sorted(std::vector<NVec> rays) {
  std::sort(rays.begin(), rays.end());
  return rays;
}
}  // namespace

TEST_CASE("complement generators", "[cones]") {
  CHECK(complement_generators(gamma1()) ==
        std::vector<Exponents>{
            {2, 0, 0}, {0, 3, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  CHECK(complement_generators(GSet::of_x(g52)) ==
        std::vector<Exponents>{{5, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(complement_generators(GSet::of_yz(g52, 2)) ==
        std::vector<Exponents>{{1, 0, 0}, {0, 3, 0}, {0, 0, 3}, {0, 1, 1}});
  CHECK(complement_generators(GSet::from_span(g52, {{0, 2, 0}, {1, 1, 0}})) ==
        std::vector<Exponents>{{2, 0, 0}, {0, 3, 0}, {0, 0, 1}, {1, 2, 0}});

  // every complement generator is outside, every proper divisor of one inside
  for (const GSet& s : enumerate_all(g52)) {
    for (const Exponents& c : complement_generators(s)) {
      CHECK_FALSE(s.contains(c));
      for (const Exponents& q : {Exponents{c.x - 1, c.y, c.z}, Exponents{c.x, c.y - 1, c.z},
                                 Exponents{c.x, c.y, c.z - 1}})
        if (q.is_ordinary()) CHECK(s.contains(q));
    }
  }
}

TEST_CASE("dual generators", "[cones]") {
  CHECK(dual_generators(gamma1()) ==
        std::vector<Exponents>{{-1, 3, 0}, {-1, 0, 2}, {1, 1, -1}, {1, -2, 1}});
  CHECK(dual_generators(GSet::of_x(g52)) ==
        std::vector<Exponents>{{5, 0, 0}, {-2, 1, 0}, {-3, 0, 1}});
  CHECK(dual_generators(GSet::of_yz(g52, 2)) ==
        std::vector<Exponents>{{1, 0, -2}, {0, 3, -2}, {0, -2, 3}});
  CHECK(dual_generators(GSet::from_span(g52, {{0, 2, 0}, {1, 1, 0}})) ==
        std::vector<Exponents>{{2, -1, 0}, {-1, 3, 0}, {-1, -1, 1}});
  // dual generators are invariant vectors
  for (const GSet& s : enumerate_all(g52))
    for (const Exponents& d : dual_generators(s)) CHECK(is_invariant(g52, d));
}

TEST_CASE("quadric certificate", "[cones]") {
  QuadricCertificate cert = quadric_certificate(gamma1());
  CHECK(cert.relation_holds);
  CHECK(cert.closed_forms_match);
  CHECK(cert.det == 5);
  CHECK(cert.s_beta == Exponents{-1, 3, 0});
  CHECK(cert.s_dz == Exponents{1, -2, 1});
  CHECK_THROWS_AS(quadric_certificate(GSet::of_x(g52)), Error);
}

TEST_CASE("cones of the ten sets at r=5", "[cones]") {
  Cone q = sigma(gamma1());
  CHECK(q.kind == ConeKind::quadric);
  CHECK(q.rays == std::vector<NVec>{{1, 2, 3}, {3, 1, 4}, {6, 2, 3}, {4, 3, 2}});
  CHECK(cone_multiplicity(g52, q) == 2);

  Cone cx = sigma(GSet::of_x(g52));
  CHECK(cx.kind == ConeKind::smooth);
  CHECK(cx.rays == std::vector<NVec>{{0, 0, 5}, {1, 2, 3}, {0, 5, 0}});
  CHECK(cone_multiplicity(g52, cx) == 1);

  auto rays_of = [&](const GSet& s) { return sorted(sigma(s).rays); };
  CHECK(rays_of(GSet::of_yz(g52, 0)) == sorted({{5, 0, 0}, {0, 0, 5}, {3, 1, 4}}));
  CHECK(rays_of(GSet::of_yz(g52, 1)) == sorted({{5, 0, 0}, {3, 1, 4}, {6, 2, 3}}));
  CHECK(rays_of(GSet::of_yz(g52, 2)) == sorted({{5, 0, 0}, {6, 2, 3}, {4, 3, 2}}));
  CHECK(rays_of(GSet::of_yz(g52, 3)) == sorted({{5, 0, 0}, {4, 3, 2}, {2, 4, 1}}));
  CHECK(rays_of(GSet::of_yz(g52, 4)) == sorted({{5, 0, 0}, {0, 5, 0}, {2, 4, 1}}));
  CHECK(rays_of(GSet::from_span(g52, {{0, 2, 0}, {1, 1, 0}})) ==
        sorted({{0, 0, 5}, {1, 2, 3}, {3, 1, 4}}));
  CHECK(rays_of(GSet::from_span(g52, {{0, 1, 0}, {1, 0, 1}})) ==
        sorted({{1, 2, 3}, {2, 4, 1}, {4, 3, 2}}));
  CHECK(rays_of(GSet::from_span(g52, {{2, 0, 0}, {1, 0, 1}})) ==
        sorted({{1, 2, 3}, {0, 5, 0}, {2, 4, 1}}));
}

TEST_CASE("cone membership by facet normals", "[cones]") {
  Cone q = sigma(gamma1());
  CHECK(q.contains({3, 1, 4}));
  CHECK_FALSE(q.contains({3, 1, 4}, true));
  CHECK(q.contains({14, 8, 12}, true));  // sum of the four rays
  CHECK_FALSE(q.contains({5, 0, 0}));
  CHECK_FALSE(q.contains({0, 0, 5}));
}

TEST_CASE("semigroup membership and saturation", "[cones]") {
  Cone cx = sigma(GSet::of_x(g52));
  SemigroupTester tester(cx);
  CHECK(tester.member({0, 0, 0}));
  CHECK(tester.member({5, 0, 0}));
  CHECK(tester.member({0, 5, 0}));
  CHECK(tester.member({0, 1, 1}));
  CHECK(tester.member({-2, 1, 0}));
  CHECK_FALSE(tester.member({4, 1, 0}));   // not an invariant monomial
  CHECK_FALSE(tester.member({-1, 1, 0}));  // invariant direction, outside the cone

  for (const GSet& s : enumerate_all(g52)) {
    SaturationReport rep = saturation_report(g52, sigma(s), 4 * g52.r);
    CHECK(rep.checked > 0);
    CHECK(rep.ok());
  }
}

TEST_CASE("structure assertions hold across small actions", "[cones]") {
  for (auto [r, a] : std::vector<std::pair<Int, Int>>{{7, 2}, {7, 3}, {11, 3}, {12, 5}, {13, 5}}) {
    GroupAction g = GroupAction::make(r, a);
    for (const GSet& s : enumerate_all(g)) {
      Cone c = sigma(s);  // throws if smooth/quadric structure fails
      Int expected = s.valleys().count() == 2 ? 2 : 1;
      CHECK(cone_multiplicity(g, c) == expected);
    }
  }
}
