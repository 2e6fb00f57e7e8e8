#include "cubic27/projgeom.hpp"

#include "doctest.h"

using namespace cubic;

namespace {
Pt4 p4(const Fq& F, int a, int b, int c, int d) {
  return make_pt<4>(F, {F.from_int(a), F.from_int(b), F.from_int(c), F.from_int(d)});
}
Pt2 p2(const Fq& F, int a, int b) { return make_pt<2>(F, {F.from_int(a), F.from_int(b)}); }
}  // namespace

TEST_CASE("pluecker relation holds for constructed lines") {
  auto F = Fq::prime(7);
  Rng rng(404);
  for (int t = 0; t < 30; ++t) {
    Pt4 p{{F->rand(rng), F->rand(rng), F->rand(rng), F->rand(rng)}};
    Pt4 q{{F->rand(rng), F->rand(rng), F->rand(rng), F->rand(rng)}};
    if (pt_is_zero<4>(*F, p) || pt_is_zero<4>(*F, q)) continue;
    p = pt_normalize<4>(*F, p);
    q = pt_normalize<4>(*F, q);
    if (p == q) continue;
    Line3 l = make_line(*F, p, q);
    // p01 p23 - p02 p13 + p03 p12 = 0
    Elem s = F->mul(l.pluecker[0], l.pluecker[5]);
    s = F->sub(s, F->mul(l.pluecker[1], l.pluecker[4]));
    s = F->add(s, F->mul(l.pluecker[2], l.pluecker[3]));
    CHECK(F->is_zero(s));
    CHECK(on_line(*F, l, p));
    CHECK(on_line(*F, l, q));
  }
}

TEST_CASE("line_meet examples") {
  auto F = Fq::prime(5);
  // x-axis {x2=x3=0} and y-axis-ish line both through (1:0:0:0)
  Line3 a = make_line(*F, p4(*F, 1, 0, 0, 0), p4(*F, 0, 1, 0, 0));
  Line3 b = make_line(*F, p4(*F, 1, 0, 0, 0), p4(*F, 0, 0, 1, 0));
  auto m = line_meet(*F, a, b);
  REQUIRE(m.has_value());
  CHECK(*m == p4(*F, 1, 0, 0, 0));
  // skew: {x2=x3=0} and {x0=x1=0}
  Line3 c = make_line(*F, p4(*F, 0, 0, 1, 0), p4(*F, 0, 0, 0, 1));
  CHECK(!line_meet(*F, a, c).has_value());
  CHECK_THROWS_AS((void)line_meet(*F, a, a), InvalidInput);
}

TEST_CASE("line_meet over GF(2), derived example") {
  auto F = Fq::prime(2);
  // x0+x1 = x2+x3 = 0 and x0+x2 = x1+x3 = 0 meet at (1:1:1:1)
  Line3 a = make_line(*F, p4(*F, 1, 1, 0, 0), p4(*F, 0, 0, 1, 1));
  Line3 b = make_line(*F, p4(*F, 1, 0, 1, 0), p4(*F, 0, 1, 0, 1));
  auto m = line_meet(*F, a, b);
  REQUIRE(m.has_value());
  CHECK(*m == p4(*F, 1, 1, 1, 1));
}

TEST_CASE("meet is symmetric") {
  auto F = Fq::prime(11);
  Rng rng(7);
  for (int t = 0; t < 40; ++t) {
    Pt4 p{{F->rand(rng), F->rand(rng), F->rand(rng), F->rand(rng)}};
    Pt4 q{{F->rand(rng), F->rand(rng), F->rand(rng), F->rand(rng)}};
    Pt4 r{{F->rand(rng), F->rand(rng), F->rand(rng), F->rand(rng)}};
    if (pt_is_zero<4>(*F, p) || pt_is_zero<4>(*F, q) || pt_is_zero<4>(*F, r)) continue;
    p = pt_normalize<4>(*F, p);
    q = pt_normalize<4>(*F, q);
    r = pt_normalize<4>(*F, r);
    if (p == q || p == r || q == r) continue;
    Line3 a = make_line(*F, p, q);
    Line3 b = make_line(*F, p, r);
    if (line_eq(a, b)) continue;
    auto m1 = line_meet(*F, a, b);
    auto m2 = line_meet(*F, b, a);
    REQUIRE(m1.has_value());
    REQUIRE(m2.has_value());
    CHECK(*m1 == *m2);
    CHECK(*m1 == p);  // both pass through p
  }
}

TEST_CASE("map_from_points: identity and swaps") {
  auto F = Fq::prime(7);
  std::array<Pt4, 5> frame = {p4(*F, 1, 0, 0, 0), p4(*F, 0, 1, 0, 0), p4(*F, 0, 0, 1, 0),
                              p4(*F, 0, 0, 0, 1), p4(*F, 1, 1, 1, 1)};
  CHECK(is_frame4(*F, frame));
  auto id = map_from_points(*F, frame, frame);
  REQUIRE(id.has_value());
  CHECK(*id == map_identity<4>(*F));
  // swap the first two points: transposition of coordinates 0,1
  std::array<Pt4, 5> sw = frame;
  std::swap(sw[0], sw[1]);
  auto tr = map_from_points(*F, frame, sw);
  REQUIRE(tr.has_value());
  Map4 expect = map_identity<4>(*F);
  expect.a[0 * 4 + 0] = F->zero();
  expect.a[0 * 4 + 1] = F->one();
  expect.a[1 * 4 + 0] = F->one();
  expect.a[1 * 4 + 1] = F->zero();
  CHECK(*tr == map_normalize<4>(*F, expect));
}

TEST_CASE("map_from_points: diagonal example over GF(7)") {
  auto F = Fq::prime(7);
  Map4 d = map_identity<4>(*F);
  d.a[1 * 4 + 1] = F->from_int(2);
  d.a[2 * 4 + 2] = F->from_int(4);
  d = map_normalize<4>(*F, d);
  std::array<Pt4, 5> frame = {p4(*F, 1, 0, 0, 0), p4(*F, 0, 1, 0, 0), p4(*F, 0, 0, 1, 0),
                              p4(*F, 0, 0, 0, 1), p4(*F, 1, 1, 1, 1)};
  std::array<Pt4, 5> img;
  for (int i = 0; i < 5; ++i) img[i] = map_apply<4>(*F, d, frame[i]);
  auto got = map_from_points(*F, frame, img);
  REQUIRE(got.has_value());
  CHECK(*got == d);
}

TEST_CASE("degenerate frame is rejected") {
  auto F = Fq::prime(7);
  // 5th point in the span of the first three -> 4 coplanar
  std::array<Pt4, 5> bad = {p4(*F, 1, 0, 0, 0), p4(*F, 0, 1, 0, 0), p4(*F, 0, 0, 1, 0),
                            p4(*F, 0, 0, 0, 1), p4(*F, 1, 1, 0, 0)};
  CHECK(!is_frame4(*F, bad));
  std::array<Pt4, 5> good = {p4(*F, 1, 0, 0, 0), p4(*F, 0, 1, 0, 0), p4(*F, 0, 0, 1, 0),
                             p4(*F, 0, 0, 0, 1), p4(*F, 1, 1, 1, 1)};
  CHECK(!map_from_points(*F, good, bad).has_value());
}

TEST_CASE("no nontrivial map of P^1 fixes three points") {
  auto F = Fq::prime(101);
  Rng rng(2024);
  for (int t = 0; t < 20; ++t) {
    Pt2 a = {{F->rand(rng), F->rand(rng)}};
    Pt2 b = {{F->rand(rng), F->rand(rng)}};
    Pt2 c = {{F->rand(rng), F->rand(rng)}};
    if (pt_is_zero<2>(*F, a) || pt_is_zero<2>(*F, b) || pt_is_zero<2>(*F, c)) continue;
    a = pt_normalize<2>(*F, a);
    b = pt_normalize<2>(*F, b);
    c = pt_normalize<2>(*F, c);
    if (a == b || a == c || b == c) continue;
    auto m = map2_from_points(*F, {a, b, c}, {a, b, c});
    REQUIRE(m.has_value());
    CHECK(*m == map_identity<2>(*F));
  }
}

TEST_CASE("pgl2 stabilizer: generic 5 points is trivial") {
  auto F = Fq::prime(101);
  std::array<Pt2, 5> pts = {p2(*F, 1, 0), p2(*F, 0, 1), p2(*F, 1, -1), p2(*F, -3, 1),
                            p2(*F, 1, -7)};
  auto g = pgl2_stabilizer(*F, pts);
  CHECK(g.order == 1);
  CHECK(g.tag == "1");
}

TEST_CASE("pgl2 stabilizer: a=b=phi gives D10 over GF(11)") {
  auto F = Fq::prime(11);
  // phi = 8: 8^2 - 8 - 1 = 55 = 0 mod 11
  CHECK((8 * 8 - 8 - 1) % 11 == 0);
  std::array<Pt2, 5> pts = {p2(*F, 1, 0), p2(*F, 0, 1), p2(*F, 1, -1), p2(*F, -8, 1),
                            p2(*F, 1, -8)};
  auto g = pgl2_stabilizer(*F, pts);
  CHECK(g.order == 10);
  CHECK(g.tag == "D10");
  // closure under composition and inverse
  for (auto& x : g.elems)
    for (auto& y : g.elems) {
      Map2 z = map_mul<2>(*F, x, y);
      CHECK(std::find(g.elems.begin(), g.elems.end(), z) != g.elems.end());
    }
  // order divides |PGL2(11)| = 11*(11^2-1) = 1320
  CHECK(1320 % g.order == 0);
}

TEST_CASE("pgl2 stabilizer: char 2, a=b=zeta gives A5 over GF(4)") {
  auto F4 = Fq::prime(2)->extend(2);
  Elem z = F4->from_residues({0, 1});
  // zeta^2+zeta+1 = 0 for the GF(4) generator
  std::array<Pt2, 5> pts;
  pts[0] = make_pt<2>(*F4, {F4->one(), F4->zero()});
  pts[1] = make_pt<2>(*F4, {F4->zero(), F4->one()});
  pts[2] = make_pt<2>(*F4, {F4->one(), F4->one()});
  pts[3] = make_pt<2>(*F4, {z, F4->one()});            // (-a:1), char 2
  pts[4] = make_pt<2>(*F4, {F4->one(), z});            // (1:-b)
  auto g = pgl2_stabilizer(*F4, pts);
  CHECK(g.order == 60);
  CHECK(g.tag == "A5");
}

TEST_CASE("degenerate configuration rejected") {
  auto F = Fq::prime(7);
  std::array<Pt2, 5> pts = {p2(*F, 1, 0), p2(*F, 1, 0), p2(*F, 0, 1), p2(*F, 1, 1),
                            p2(*F, 1, 2)};
  CHECK_THROWS_AS((void)pgl2_stabilizer(*F, pts), InvalidInput);
}
