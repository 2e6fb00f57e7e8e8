#include "cubic27/weyl.hpp"

#include <map>
#include <set>

#include "doctest.h"

using namespace cubic;

TEST_CASE("abstract incidence structure") {
  const auto& inc = abstract_incidence();
  for (int a = 0; a < 27; ++a) {
    int deg = 0;
    for (int b = 0; b < 27; ++b) deg += inc[a][b];
    CHECK(deg == 10);
  }
  CHECK(abstract_trios().size() == 45);
  CHECK(abstract_double_sixers().size() == 36);
  // each line lies in exactly 5 trios
  for (int a = 0; a < 27; ++a) {
    int cnt = 0;
    for (auto& t : abstract_trios())
      if (t[0] == a || t[1] == a || t[2] == a) ++cnt;
    CHECK(cnt == 5);
  }
  // standard marking rules
  CHECK(!inc[label_E(1)][label_E(2)]);
  CHECK(inc[label_E(1)][label_F(1, 2)]);
  CHECK(!inc[label_E(3)][label_F(1, 2)]);
  CHECK(inc[label_E(1)][label_G(2)]);
  CHECK(!inc[label_E(1)][label_G(1)]);
  CHECK(inc[label_F(1, 2)][label_F(3, 4)]);
  CHECK(!inc[label_F(1, 2)][label_F(1, 3)]);
  CHECK(inc[label_F(1, 2)][label_G(1)]);
  CHECK(!inc[label_G(1)][label_G(2)]);
}

TEST_CASE("W(E6) group order and conjugacy class census") {
  const WE6& g = we6();
  REQUIRE(g.elems.size() == 51840);
  std::map<std::string, uint64_t> census;
  for (auto& w : g.elems) census[class_of(w).name]++;
  CHECK(census.size() == 25);
  uint64_t total = 0;
  for (auto& row : weyl_e6_classes()) {
    REQUIRE(census.count(row.name));
    CHECK(census[row.name] == 51840u / (uint64_t)row.centralizer);
    total += census[row.name];
  }
  CHECK(total == 51840);
}

TEST_CASE("identity and S6 elements classify correctly") {
  CHECK(class_of(perm_identity()).name == "1A");
  // 5-cycle on E1..E5 fixing E6
  std::array<int, 6> c5{1, 2, 3, 4, 0, 5};
  CHECK(class_of(perm_from_s6(c5)).name == "5A");
  // simple transposition is a root reflection, class 2C (not geometric 2A)
  std::array<int, 6> tr{1, 0, 2, 3, 4, 5};
  CHECK(class_of(perm_from_s6(tr)).name == "2C");
}

TEST_CASE("class_of is constant on conjugacy classes") {
  const WE6& g = we6();
  Rng rng(777);
  for (int t = 0; t < 500; ++t) {
    const Perm27& w = g.elems[rng.below(g.elems.size())];
    const Perm27& h = g.elems[rng.below(g.elems.size())];
    Perm27 conj = perm_compose(perm_compose(h, w), perm_inverse(h));
    CHECK(class_index_of(conj) == class_index_of(w));
  }
}

TEST_CASE("power map consistency") {
  const WE6& g = we6();
  Rng rng(4242);
  int seen4A = 0, seen4B = 0, seen6E = 0;
  for (size_t i = 0; i < g.elems.size() && (seen4A < 5 || seen4B < 5 || seen6E < 5); ++i) {
    const Perm27& w = g.elems[rng.below(g.elems.size())];
    std::string c = class_of(w).name;
    if (c == "4A" && seen4A < 5) {
      CHECK(class_of(perm_compose(w, w)).name == "2A");
      ++seen4A;
    } else if (c == "4B" && seen4B < 5) {
      CHECK(class_of(perm_compose(w, w)).name == "2B");
      ++seen4B;
    } else if (c == "6E" && seen6E < 5) {
      Perm27 cube = perm_compose(w, perm_compose(w, w));
      CHECK(class_of(cube).name == "2A");
      CHECK(class_of(perm_compose(w, cube)).name == "3D");  // w^4 wrong; w^2 below
      CHECK(class_of(perm_compose(w, w)).name == "3D");
      ++seen6E;
    }
  }
  CHECK(seen4A == 5);
  CHECK(seen4B == 5);
  CHECK(seen6E == 5);
}

TEST_CASE("table signatures have degree 6 and distinct") {
  std::set<std::vector<std::pair<int, int>>> sigs;
  for (auto& row : weyl_e6_classes()) {
    int deg = 0;
    for (auto& [d, m] : row.signature) {
      int phi_deg = d == 1 ? 1 : d == 2 ? 1 : d <= 6 ? (d == 5 ? 4 : 2) : d == 8 ? 4 : d == 9 ? 6 : 4;
      deg += phi_deg * m;
    }
    CHECK(deg == 6);
    CHECK(sigs.insert(row.signature).second);
  }
}

TEST_CASE("W(D5) model and class decomposition") {
  const auto& vs = odd_vectors();
  // each model line meets exactly 5 others
  for (int i = 0; i < 16; ++i) {
    int deg = 0;
    for (int j = 0; j < 16; ++j)
      if (j != i) deg += d5_meets(vs[i], vs[j]);
    CHECK(deg == 5);
  }
  auto translation = [&](uint8_t t) {
    std::array<uint8_t, 16> p{};
    for (int i = 0; i < 16; ++i) p[i] = (uint8_t)odd_vector_index(vs[i] ^ t);
    return p;
  };
  // identity
  auto id = translation(0);
  CHECK(weyl_d5_classes()[d5_class_of(id).table_index].e6_class == "1A");
  // first kind: four sign flips
  auto i1234 = d5_class_of(translation(0b01111));
  CHECK(weyl_d5_classes()[i1234.table_index].type == "1-1-1-1-1");
  CHECK(weyl_d5_classes()[i1234.table_index].e6_class == "2A");
  // second kind: two sign flips
  auto i12 = d5_class_of(translation(0b00011));
  CHECK(weyl_d5_classes()[i12.table_index].type == "111-1-1");
  CHECK(weyl_d5_classes()[i12.table_index].e6_class == "2B");
  // a permutation part: 5-cycle of bits
  std::array<uint8_t, 16> p5{};
  for (int i = 0; i < 16; ++i) {
    uint8_t v = vs[i], im = 0;
    for (int b = 0; b < 5; ++b)
      if (v >> b & 1) im |= (uint8_t)(1u << ((b + 1) % 5));
    p5[i] = (uint8_t)odd_vector_index(im);
  }
  CHECK(weyl_d5_classes()[d5_class_of(p5).table_index].type == "5");
}

TEST_CASE("D5 table reproduces char poly columns from the signed types") {
  for (auto& row : weyl_d5_classes()) {
    // multiply out prod (x^len -+ 1) and refactor into cyclotomics
    std::vector<int64_t> poly{1};
    for (auto& [len, neg] : row.cycles) {
      std::vector<int64_t> f(len + 1, 0);
      f[len] = 1;
      f[0] = neg ? 1 : -1;
      std::vector<int64_t> r(poly.size() + f.size() - 1, 0);
      for (size_t i = 0; i < poly.size(); ++i)
        for (size_t j = 0; j < f.size(); ++j) r[i + j] += poly[i] * f[j];
      poly = r;
    }
    // divide by the expected cyclotomic factors
    auto divexact = [](std::vector<int64_t> a, const std::vector<int64_t>& b)
        -> std::optional<std::vector<int64_t>> {
      int db = (int)b.size() - 1;
      if ((int)a.size() - 1 < db) return std::nullopt;
      std::vector<int64_t> q(a.size() - b.size() + 1, 0);
      for (int i = (int)a.size() - 1; i >= db; --i) {
        if (a[i] % b[db] != 0) return std::nullopt;
        int64_t c = a[i] / b[db];
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
      }
      for (auto v : a)
        if (v) return std::nullopt;
      return q;
    };
    std::map<int, std::vector<int64_t>> phi = {
        {1, {-1, 1}}, {2, {1, 1}},          {3, {1, 1, 1}},
        {4, {1, 0, 1}}, {5, {1, 1, 1, 1, 1}}, {6, {1, -1, 1}},
        {8, {1, 0, 0, 0, 1}}, {12, {1, 0, -1, 0, 1}}};
    for (auto& [d, m] : row.signature)
      for (int t = 0; t < m; ++t) {
        auto q = divexact(poly, phi[d]);
        REQUIRE(q.has_value());
        poly = *q;
      }
    REQUIRE(poly.size() == 1);
    CHECK(poly[0] == 1);
    // trace check: sum of diagonal = +-1 per 1-cycle
    int tr = 0;
    for (auto& [len, neg] : row.cycles)
      if (len == 1) tr += neg ? -1 : 1;
    CHECK(tr == row.trace);
  }
}
