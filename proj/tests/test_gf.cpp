#include "cubic27/gf.hpp"

#include "doctest.h"

using namespace cubic;

TEST_CASE("prime field arithmetic") {
  auto F7 = Fq::prime(7);
  Elem a = F7->from_int(3), b = F7->from_int(5);
  CHECK(F7->residues(F7->add(a, b))[0] == 1);
  CHECK(F7->residues(F7->mul(a, b))[0] == 1);
  CHECK(F7->residues(F7->inv(a))[0] == 5);  // 3*5 = 15 = 1
  CHECK(F7->residues(F7->neg(a))[0] == 4);
  CHECK(F7->is_zero(F7->sub(a, a)));
}

TEST_CASE("GF(4) is the unique field of order 4") {
  auto F2 = Fq::prime(2);
  auto F4 = F2->extend(2);
  CHECK(F4->k == 2);
  CHECK(F4->order_u64() == 4);
  // omega^2 + omega + 1 = 0 for any generator omega not in GF(2)
  Elem w = F4->from_residues({0, 1});
  Elem w2 = F4->mul(w, w);
  Elem lhs = F4->add(F4->add(w2, w), F4->one());
  // the modulus is some irreducible quadratic; x^2+x+1 is the only one over GF(2)
  CHECK(F4->is_zero(lhs));
  // sqrt in char 2
  CHECK(F4->sqrt_char2(F4->one()) == F4->one());
  CHECK(F4->sqrt_char2(F4->zero()) == F4->zero());
  Elem s = F4->sqrt_char2(w);
  CHECK(F4->mul(s, s) == w);
  CHECK(s == w2);  // sqrt(w) = w^2 since w^4 = w
}

TEST_CASE("GF(9) contains i with i^2 = -1") {
  auto F9 = Fq::prime(3)->extend(2);
  CHECK(F9->order_u64() == 9);
  Poly f{{F9->one(), F9->zero(), F9->one()}};  // x^2 + 1
  auto rts = roots_in_field(*F9, f, *F9);
  REQUIRE(rts.size() == 2);
  CHECK(F9->mul(rts[0], rts[0]) == F9->neg(F9->one()));
}

TEST_CASE("extend(GF(7),1) is the identity") {
  auto F7 = Fq::prime(7);
  CHECK(F7->extend(1).get() == F7.get());
}

TEST_CASE("freshman's dream and inverses, several fields") {
  for (auto [p, d] : std::vector<std::pair<uint32_t, uint32_t>>{
           {2, 5}, {3, 3}, {7, 2}, {101, 2}, {11, 3}}) {
    auto F = Fq::prime(p)->extend(d);
    Rng rng(42 + p + d);
    for (int t = 0; t < 40; ++t) {
      Elem a = F->rand(rng), b = F->rand(rng);
      CHECK(F->pow_u64(F->add(a, b), p) == F->add(F->pow_u64(a, p), F->pow_u64(b, p)));
      if (!F->is_zero(a)) CHECK(F->mul(a, F->inv(a)) == F->one());
    }
  }
}

TEST_CASE("roots with brute-force oracle") {
  auto F7 = Fq::prime(7);
  // x^3 - 1 over GF(7)
  Poly f{{F7->neg(F7->one()), F7->zero(), F7->zero(), F7->one()}};
  // oracle: try all residues
  std::vector<uint32_t> expect;
  for (uint32_t r = 0; r < 7; ++r)
    if ((r * r * r) % 7 == 1) expect.push_back(r);
  CHECK(expect == std::vector<uint32_t>{1, 2, 4});
  auto rts = roots_in_field(*F7, f, *F7);
  std::vector<uint32_t> got;
  for (auto& r : rts) got.push_back(F7->residues(r)[0]);
  std::sort(got.begin(), got.end());
  CHECK(got == expect);
}

TEST_CASE("x^2+x+1 has no roots over GF(2) and splits over GF(4)") {
  auto F2 = Fq::prime(2);
  Poly f{{F2->one(), F2->one(), F2->one()}};
  CHECK(roots_in_field(*F2, f, *F2).empty());
  auto F4 = F2->extend(2);
  auto rts = roots_in_field(*F2, f, *F4);
  REQUIRE(rts.size() == 2);
  for (auto& r : rts) {
    Elem v = F4->add(F4->add(F4->mul(r, r), r), F4->one());
    CHECK(F4->is_zero(v));
  }
}

TEST_CASE("x^9 - x over GF(9) has all 9 elements as roots") {
  auto F9 = Fq::prime(3)->extend(2);
  Poly f;
  f.c.assign(10, F9->zero());
  f.c[9] = F9->one();
  f.c[1] = F9->neg(F9->one());
  auto rts = roots_in_field(*F9, f, *F9);
  CHECK(rts.size() == 9);
}

TEST_CASE("roots: |S| <= deg f and evaluation vanishes exactly on S") {
  auto F = Fq::prime(5)->extend(2);
  Rng rng(7);
  for (int t = 0; t < 10; ++t) {
    Poly f;
    f.c.resize(6, F->zero());
    for (auto& c : f.c) c = F->rand(rng);
    f = ptrim(*F, f);
    if (f.deg() < 1) continue;
    auto rts = roots_in_field(*F, f, *F);
    CHECK((int)rts.size() <= f.deg());
    for (uint64_t i = 0; i < F->order_u64(); ++i) {
      Elem x = F->from_uint(i);
      bool is_root = std::find(rts.begin(), rts.end(), x) != rts.end();
      CHECK(F->is_zero(peval(*F, f, x)) == is_root);
    }
  }
}

TEST_CASE("root multiplicities by repeated division") {
  auto F7 = Fq::prime(7);
  // (x-1)^2 (x-3)
  Poly a{{F7->neg(F7->one()), F7->one()}};
  Poly b{{F7->from_int(-3), F7->one()}};
  Poly f = pmul(*F7, pmul(*F7, a, a), b);
  std::vector<int> mults;
  auto rts = roots_in_field(*F7, f, *F7, &mults);
  REQUIRE(rts.size() == 2);
  for (size_t i = 0; i < rts.size(); ++i) {
    uint32_t r = F7->residues(rts[i])[0];
    CHECK(mults[i] == (r == 1 ? 2 : 1));
  }
}

TEST_CASE("embeddings compose through towers") {
  for (uint32_t p : {2u, 3u, 7u}) {
    auto K = Fq::prime(p)->extend(2);
    auto K2 = K->extend(2);
    auto K4 = K2->extend(2);
    Rng rng(99 + p);
    for (int t = 0; t < 100; ++t) {
      Elem a = K->rand(rng);
      Elem via = K4->embed_from(*K2, K2->embed_from(*K, a));
      Elem direct = K4->embed_from(*K, a);
      CHECK(via == direct);
    }
  }
}

TEST_CASE("embedding is a field homomorphism") {
  auto F = Fq::prime(11);
  auto K = F->extend(3);
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    Elem a = F->rand(rng), b = F->rand(rng);
    CHECK(K->embed_from(*F, F->add(a, b)) ==
          K->add(K->embed_from(*F, a), K->embed_from(*F, b)));
    CHECK(K->embed_from(*F, F->mul(a, b)) ==
          K->mul(K->embed_from(*F, a), K->embed_from(*F, b)));
  }
}

TEST_CASE("retract inverts embed") {
  auto F = Fq::prime(3)->extend(2);
  auto K = F->extend(3);
  Rng rng(17);
  for (int t = 0; t < 30; ++t) {
    Elem a = F->rand(rng);
    auto back = K->retract_to(*F, K->embed_from(*F, a));
    REQUIRE(back.has_value());
    CHECK(*back == a);
  }
  // something outside the subfield does not retract
  Elem gen = K->from_residues({0, 1});
  bool in_sub = K->retract_to(*F, gen).has_value();
  CHECK(!in_sub);
}

TEST_CASE("factorization round trip") {
  auto F = Fq::prime(2)->extend(3);  // GF(8)
  Rng rng(1234);
  Poly f = pconst(*F, F->one());
  for (int i = 0; i < 3; ++i) {
    Poly g;
    g.c.resize(3, F->zero());
    for (auto& c : g.c) c = F->rand(rng);
    g.c.push_back(F->one());
    f = pmul(*F, f, g);
  }
  auto fac = pfactor(*F, f);
  Poly prod = pconst(*F, F->one());
  int degsum = 0;
  for (auto& [g, m] : fac) {
    CHECK(pirreducible(*F, g));
    for (int i = 0; i < m; ++i) prod = pmul(*F, prod, g);
    degsum += g.deg() * m;
  }
  CHECK(degsum == f.deg());
  CHECK(psub(*F, pmonic(*F, f), prod).is_zero());
}

TEST_CASE("interpolation") {
  auto F = Fq::prime(101);
  Poly f{{F->from_int(3), F->from_int(0), F->from_int(5), F->from_int(1)}};
  std::vector<Elem> xs, ys;
  for (int i = 0; i < 4; ++i) {
    xs.push_back(F->from_int(i + 2));
    ys.push_back(peval(*F, f, xs.back()));
  }
  Poly g = pinterpolate(*F, xs, ys);
  CHECK(psub(*F, f, g).is_zero());
}

TEST_CASE("large char-2 field sanity (GF(2^84))") {
  auto F = Fq::prime(2)->extend(84);
  Rng rng(31337);
  Elem a = F->rand_nonzero(rng), b = F->rand(rng);
  CHECK(F->mul(a, F->inv(a)) == F->one());
  CHECK(F->mul(F->add(a, b), F->add(a, b)) ==
        F->add(F->mul(a, a), F->mul(b, b)));
  Elem s = F->sqrt_char2(a);
  CHECK(F->mul(s, s) == a);
}
