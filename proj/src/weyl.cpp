#include "cubic27/weyl.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <deque>
#include <mutex>
#include <set>

namespace cubic {

int label_E(int i) { return i - 1; }

int label_F(int i, int j) {
  check(1 <= i && i < j && j <= 6, "label_F: bad indices");
  int idx = 0;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) {
      if (a == i && b == j) return 6 + idx;
      ++idx;
    }
  throw InternalError("label_F");
}

int label_G(int i) { return 20 + i; }

std::string label_name(int idx) {
  if (idx < 6) return "E" + std::to_string(idx + 1);
  if (idx >= 21) return "G" + std::to_string(idx - 20);
  int t = idx - 6;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      if (t-- == 0) return "F" + std::to_string(a) + std::to_string(b);
  throw InternalError("label_name");
}

namespace {

struct FPair {
  int i, j;
};

FPair f_pair(int idx) {
  int t = idx - 6;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      if (t-- == 0) return {a, b};
  throw InternalError("f_pair");
}

// picard class of a label in the basis (h, e1..e6)
std::array<int, 7> pic_vec(int idx) {
  std::array<int, 7> v{};
  if (idx < 6) {
    v[idx + 1] = 1;
  } else if (idx >= 21) {
    v[0] = 2;
    for (int t = 1; t <= 6; ++t) v[t] = -1;
    v[idx - 20] = 0;
  } else {
    auto [i, j] = f_pair(idx);
    v[0] = 1;
    v[i] = -1;
    v[j] = -1;
  }
  return v;
}

int pic_dot(const std::array<int, 7>& a, const std::array<int, 7>& b) {
  int s = a[0] * b[0];
  for (int t = 1; t <= 6; ++t) s -= a[t] * b[t];
  return s;
}

}  // namespace

const std::array<std::array<uint8_t, 27>, 27>& abstract_incidence() {
  static const auto inc = [] {
    std::array<std::array<uint8_t, 27>, 27> m{};
    for (int a = 0; a < 27; ++a)
      for (int b = 0; b < 27; ++b)
        m[a][b] = a != b && pic_dot(pic_vec(a), pic_vec(b)) == 1;
    return m;
  }();
  return inc;
}

const std::vector<std::array<uint8_t, 3>>& abstract_trios() {
  static const auto trios = [] {
    std::vector<std::array<uint8_t, 3>> out;
    const auto& inc = abstract_incidence();
    for (int a = 0; a < 27; ++a)
      for (int b = a + 1; b < 27; ++b) {
        if (!inc[a][b]) continue;
        for (int c = b + 1; c < 27; ++c)
          if (inc[a][c] && inc[b][c]) out.push_back({(uint8_t)a, (uint8_t)b, (uint8_t)c});
      }
    check(out.size() == 45, "expected 45 tritangent trios");
    return out;
  }();
  return trios;
}

int trio_of_pair(int a, int b) {
  static const auto table = [] {
    std::array<std::array<int16_t, 27>, 27> t;
    for (auto& row : t) row.fill(-1);
    const auto& trios = abstract_trios();
    for (size_t i = 0; i < trios.size(); ++i) {
      int x = trios[i][0], y = trios[i][1], z = trios[i][2];
      t[x][y] = t[y][x] = t[x][z] = t[z][x] = t[y][z] = t[z][y] = (int16_t)i;
    }
    return t;
  }();
  return table[a][b];
}

const std::vector<std::array<uint8_t, 12>>& abstract_double_sixers() {
  static const auto ds = [] {
    const auto& inc = abstract_incidence();
    // enumerate sixers: maximal sets of 6 pairwise-skew lines
    std::vector<std::array<uint8_t, 6>> sixers;
    std::array<uint8_t, 6> cur{};
    auto rec = [&](auto&& self, int start, int depth) -> void {
      if (depth == 6) {
        sixers.push_back(cur);
        return;
      }
      for (int x = start; x < 27; ++x) {
        bool ok = true;
        for (int t = 0; t < depth; ++t) ok = ok && !inc[cur[t]][x] && cur[t] != x;
        if (!ok) continue;
        cur[depth] = (uint8_t)x;
        self(self, x + 1, depth + 1);
      }
    };
    rec(rec, 0, 0);
    check(sixers.size() == 72, "expected 72 sixers");
    // pair each sixer with the unique partner: disjoint, each line meets 5 of the other
    std::vector<std::array<uint8_t, 12>> out;
    std::set<std::array<uint8_t, 12>> seen;
    for (auto& s : sixers)
      for (auto& t : sixers) {
        bool disjoint = true;
        for (int a : s)
          for (int b : t) disjoint = disjoint && a != b;
        if (!disjoint) continue;
        bool good = true;
        for (int a : s) {
          int deg = 0;
          for (int b : t) deg += inc[a][b];
          good = good && deg == 5;
        }
        if (!good) continue;
        std::array<uint8_t, 12> d{};
        std::copy(s.begin(), s.end(), d.begin());
        std::copy(t.begin(), t.end(), d.begin() + 6);
        std::sort(d.begin(), d.end());
        if (seen.insert(d).second) out.push_back(d);
      }
    check(out.size() == 36, "expected 36 double-sixers");
    return out;
  }();
  return ds;
}

bool perm_preserves_incidence(const Perm27& w) {
  const auto& inc = abstract_incidence();
  std::array<bool, 27> hit{};
  for (int a = 0; a < 27; ++a) {
    if (w[a] >= 27 || hit[w[a]]) return false;
    hit[w[a]] = true;
  }
  for (int a = 0; a < 27; ++a)
    for (int b = a + 1; b < 27; ++b)
      if (inc[a][b] != inc[w[a]][w[b]]) return false;
  return true;
}

Perm27 perm_compose(const Perm27& a, const Perm27& b) {
  Perm27 r;
  for (int i = 0; i < 27; ++i) r[i] = a[b[i]];
  return r;
}

Perm27 perm_inverse(const Perm27& a) {
  Perm27 r;
  for (int i = 0; i < 27; ++i) r[a[i]] = (uint8_t)i;
  return r;
}

Perm27 perm_identity() {
  Perm27 r;
  for (int i = 0; i < 27; ++i) r[i] = (uint8_t)i;
  return r;
}

Perm27 perm_from_s6(const std::array<int, 6>& sigma) {
  Perm27 w;
  for (int i = 0; i < 6; ++i) {
    w[label_E(i + 1)] = (uint8_t)label_E(sigma[i] + 1);
    w[label_G(i + 1)] = (uint8_t)label_G(sigma[i] + 1);
  }
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      int a = sigma[i - 1] + 1, b = sigma[j - 1] + 1;
      if (a > b) std::swap(a, b);
      w[label_F(i, j)] = (uint8_t)label_F(a, b);
    }
  return w;
}

int perm_order(const Perm27& a) {
  Perm27 cur = a;
  Perm27 id = perm_identity();
  int o = 1;
  while (!(cur == id)) {
    cur = perm_compose(cur, a);
    ++o;
    check(o <= 12, "perm_order: order exceeds 12 in W(E6)");
  }
  return o;
}

// the quadratic transformation based at p1, p2, p3
static Perm27 sigma123() {
  Perm27 w = perm_identity();
  auto swap2 = [&](int a, int b) {
    w[a] = (uint8_t)b;
    w[b] = (uint8_t)a;
  };
  swap2(label_E(1), label_F(2, 3));
  swap2(label_E(2), label_F(1, 3));
  swap2(label_E(3), label_F(1, 2));
  swap2(label_G(4), label_F(5, 6));
  swap2(label_G(5), label_F(4, 6));
  swap2(label_G(6), label_F(4, 5));
  return w;
}

static WE6* g_we6 = nullptr;
static std::once_flag g_we6_once;

static void build_we6() {
  auto* table = new WE6;
  std::vector<Perm27> gens;
  std::array<int, 6> tr{1, 0, 2, 3, 4, 5};
  std::array<int, 6> cyc{1, 2, 3, 4, 5, 0};
  gens.push_back(perm_from_s6(tr));
  gens.push_back(perm_from_s6(cyc));
  gens.push_back(sigma123());
  for (auto& g : gens) check(perm_preserves_incidence(g), "W(E6) generator is invalid");
  std::unordered_map<Perm27, uint32_t, Perm27Hash> seen;
  std::deque<Perm27> queue;
  Perm27 id = perm_identity();
  seen.emplace(id, 0);
  queue.push_back(id);
  std::vector<Perm27> elems{id};
  while (!queue.empty()) {
    Perm27 x = queue.front();
    queue.pop_front();
    for (auto& g : gens) {
      Perm27 y = perm_compose(g, x);
      if (seen.emplace(y, (uint32_t)elems.size()).second) {
        elems.push_back(y);
        queue.push_back(y);
      }
    }
  }
  check(elems.size() == 51840, "W(E6) closure has wrong order");
  std::sort(elems.begin(), elems.end());
  table->elems = std::move(elems);
  table->index.reserve(51840 * 2);
  for (uint32_t i = 0; i < table->elems.size(); ++i) table->index.emplace(table->elems[i], i);
  g_we6 = table;
}

const WE6& we6() {
  std::call_once(g_we6_once, build_we6);
  return *g_we6;
}

uint32_t WE6::index_of(const Perm27& w) const {
  auto it = index.find(w);
  check(it != index.end(), "permutation not in W(E6)");
  return it->second;
}

static const char kWe6Magic[8] = {'W', 'E', '6', 'P', 'R', 'M', 'v', '1'};

bool we6_save(const std::string& path) {
  const WE6& t = we6();
  FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) return false;
  uint32_t count = (uint32_t)t.elems.size();
  bool ok = std::fwrite(kWe6Magic, 1, 8, f) == 8 &&
            std::fwrite(&count, sizeof count, 1, f) == 1;
  for (auto& p : t.elems) ok = ok && std::fwrite(p.data(), 1, 27, f) == 27;
  std::fclose(f);
  return ok;
}

bool we6_load(const std::string& path) {
  FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) return false;
  char magic[8];
  uint32_t count = 0;
  bool ok = std::fread(magic, 1, 8, f) == 8 && std::memcmp(magic, kWe6Magic, 8) == 0 &&
            std::fread(&count, sizeof count, 1, f) == 1 && count == 51840;
  auto* table = new WE6;
  if (ok) {
    table->elems.resize(count);
    for (auto& p : table->elems)
      if (std::fread(p.data(), 1, 27, f) != 27) {
        ok = false;
        break;
      }
  }
  std::fclose(f);
  if (ok)
    for (uint32_t i = 0; ok && i < count; ++i) {
      if (i + 1 < count && !(table->elems[i] < table->elems[i + 1])) ok = false;
    }
  if (!ok) {
    delete table;
    return false;
  }
  table->index.reserve(51840 * 2);
  for (uint32_t i = 0; i < count; ++i) table->index.emplace(table->elems[i], i);
  std::call_once(g_we6_once, [&] { g_we6 = table; });
  return g_we6 == table;
}

// --- conjugacy classification ---

namespace {

// simple roots a1 = h-e1-e2-e3, a_i = e_(i-1) - e_i  (i = 2..6)
const std::array<std::array<int, 7>, 6>& simple_roots() {
  static const std::array<std::array<int, 7>, 6> roots = [] {
    std::array<std::array<int, 7>, 6> r{};
    r[0] = {1, -1, -1, -1, 0, 0, 0};
    for (int i = 2; i <= 6; ++i) {
      r[i - 1] = {};
      r[i - 1][i - 1] = 1;
      r[i - 1][i] = -1;
    }
    return r;
  }();
  return roots;
}

// integer determinant by fraction-free elimination (small matrices)
int64_t int_det(std::vector<std::vector<int64_t>> m) {
  size_t n = m.size();
  int64_t det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    for (size_t r = c + 1; r < n; ++r) {
      while (m[r][c] != 0) {  // euclidean row reduction keeps entries integral
        int64_t q = m[r][c] / m[c][c];
        for (size_t j = c; j < n; ++j) m[r][j] -= q * m[c][j];
        if (m[r][c] != 0) {
          std::swap(m[r], m[c]);
          det = -det;
        }
      }
    }
    det *= m[c][c];
  }
  return det;
}

// adjugate of the Gram matrix of the simple roots, G * adj = det * I
struct RootBasisData {
  std::array<std::array<int64_t, 6>, 6> gram;
  std::array<std::array<int64_t, 6>, 6> adj;
  int64_t det;
};

const RootBasisData& root_basis() {
  static const RootBasisData data = [] {
    RootBasisData d{};
    const auto& roots = simple_roots();
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        std::array<int, 7> a, b;
        for (int t = 0; t < 7; ++t) {
          a[t] = roots[i][t];
          b[t] = roots[j][t];
        }
        d.gram[i][j] = pic_dot(a, b);
      }
    std::vector<std::vector<int64_t>> g(6, std::vector<int64_t>(6));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) g[i][j] = d.gram[i][j];
    d.det = int_det(g);
    check(d.det != 0, "root basis gram must be invertible");
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        std::vector<std::vector<int64_t>> minor;
        for (int r = 0; r < 6; ++r) {
          if (r == j) continue;
          std::vector<int64_t> row;
          for (int c = 0; c < 6; ++c)
            if (c != i) row.push_back(g[r][c]);
          minor.push_back(std::move(row));
        }
        int64_t co = int_det(minor);
        d.adj[i][j] = ((i + j) % 2 ? -co : co);
      }
    return d;
  }();
  return data;
}

// characteristic polynomial of an integer matrix (Faddeev-LeVerrier)
std::array<int64_t, 7> char_poly6(const std::array<std::array<int64_t, 6>, 6>& a) {
  std::array<int64_t, 7> c{};
  c[6] = 1;  // x^6 coefficient
  std::array<std::array<int64_t, 6>, 6> m{};
  for (int k = 1; k <= 6; ++k) {
    // m = a * (m + c_{6-k+1} I)
    std::array<std::array<int64_t, 6>, 6> t = m;
    for (int i = 0; i < 6; ++i) t[i][i] += c[7 - k];
    std::array<std::array<int64_t, 6>, 6> nm{};
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        int64_t s = 0;
        for (int l = 0; l < 6; ++l) s += a[i][l] * t[l][j];
        nm[i][j] = s;
      }
    m = nm;
    int64_t tr = 0;
    for (int i = 0; i < 6; ++i) tr += m[i][i];
    check(tr % k == 0, "char_poly6: inexact division");
    c[6 - k] = -tr / k;
  }
  return c;
}

const std::vector<std::vector<int64_t>>& cyclotomics() {
  // d in {1,2,3,4,5,6,8,9,12}, low -> high
  static const std::vector<std::vector<int64_t>> phi = {
      {},                      // unused
      {-1, 1},                 // x-1
      {1, 1},                  // x+1
      {1, 1, 1},               // x^2+x+1
      {1, 0, 1},               // x^2+1
      {1, 1, 1, 1, 1},         // phi5
      {1, -1, 1},              // x^2-x+1
      {},                      // 7 unused
      {1, 0, 0, 0, 1},         // x^4+1
      {1, 0, 0, 1, 0, 0, 1},   // x^6+x^3+1
      {},                      // 10 unused
      {},                      // 11 unused
      {1, 0, -1, 0, 1},        // x^4-x^2+1
  };
  return phi;
}

// exact division of integer polynomials; nullopt when not divisible
std::optional<std::vector<int64_t>> int_poly_div(const std::vector<int64_t>& a,
                                                 const std::vector<int64_t>& b) {
  std::vector<int64_t> r = a, q;
  int db = (int)b.size() - 1;
  if ((int)r.size() - 1 < db) return std::nullopt;
  q.assign(r.size() - b.size() + 1, 0);
  for (int i = (int)r.size() - 1; i >= db; --i) {
    if (r[i] == 0) continue;
    if (r[i] % b[db] != 0) return std::nullopt;
    int64_t c = r[i] / b[db];
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
  }
  for (auto v : r)
    if (v != 0) return std::nullopt;
  return q;
}

}  // namespace

int class_index_of(const Perm27& w) {
  // extend to the picard lattice: images of e_i and h
  std::array<std::array<int, 7>, 7> img{};  // columns: h, e1..e6
  for (int i = 0; i < 6; ++i) {
    auto v = pic_vec(w[label_E(i + 1)]);
    for (int t = 0; t < 7; ++t) img[i + 1][t] = v[t];
  }
  {
    auto a = pic_vec(w[label_E(1)]);
    auto b = pic_vec(w[label_E(2)]);
    auto c = pic_vec(w[label_F(1, 2)]);
    for (int t = 0; t < 7; ++t) img[0][t] = a[t] + b[t] + c[t];
  }
  // canonical class -3h + sum e_i must be fixed
  {
    std::array<int, 7> k{};
    for (int t = 0; t < 7; ++t) k[t] = -3 * img[0][t];
    for (int i = 1; i <= 6; ++i)
      for (int t = 0; t < 7; ++t) k[t] += img[i][t];
    check(k[0] == -3, "class_of: canonical class not preserved");
    for (int t = 1; t <= 6; ++t) check(k[t] == 1, "class_of: canonical class not preserved");
  }
  const auto& roots = simple_roots();
  const auto& rb = root_basis();
  std::array<std::array<int64_t, 6>, 6> mat{};
  for (int i = 0; i < 6; ++i) {
    // image of root i in picard coordinates
    std::array<int, 7> wi{};
    for (int t = 0; t < 7; ++t)
      for (int s = 0; s < 7; ++s) wi[t] += roots[i][s] * img[s][t];
    // coordinates in the root basis via the gram adjugate
    std::array<int64_t, 6> b{};
    for (int j = 0; j < 6; ++j) {
      std::array<int, 7> rj;
      for (int t = 0; t < 7; ++t) rj[t] = roots[j][t];
      b[j] = pic_dot(rj, wi);
    }
    for (int r = 0; r < 6; ++r) {
      int64_t num = 0;
      for (int j = 0; j < 6; ++j) num += rb.adj[r][j] * b[j];
      check(num % rb.det == 0, "class_of: non-integral root coordinates");
      mat[r][i] = num / rb.det;
    }
  }
  auto cp = char_poly6(mat);
  // cyclotomic signature by trial division
  std::vector<int64_t> rem(cp.begin(), cp.end());
  std::vector<std::pair<int, int>> sig;
  for (int d : {1, 2, 3, 4, 5, 6, 8, 9, 12}) {
    int mult = 0;
    while (true) {
      auto q = int_poly_div(rem, cyclotomics()[d]);
      if (!q) break;
      rem = *q;
      ++mult;
    }
    if (mult) sig.emplace_back(d, mult);
  }
  check(rem.size() == 1 && rem[0] == 1, "class_of: no cyclotomic factorization match");
  const auto& rows = weyl_e6_classes();
  for (size_t i = 0; i < rows.size(); ++i)
    if (rows[i].signature == sig) {
      check(rows[i].order == perm_order(w), "class_of: order mismatch with table");
      int64_t tr = 0;
      for (int t = 0; t < 6; ++t) tr += mat[t][t];
      check(rows[i].trace == tr, "class_of: trace mismatch with table");
      return (int)i;
    }
  throw InternalError("class_of: signature not found in the table");
}

const WeylClassInfo& class_of(const Perm27& w) { return weyl_e6_classes()[class_index_of(w)]; }

// --- W(D5) ---

const std::array<uint8_t, 16>& odd_vectors() {
  static const std::array<uint8_t, 16> vs = [] {
    std::array<uint8_t, 16> out{};
    int n = 0;
    for (uint8_t m = 0; m < 32; ++m)
      if (__builtin_popcount(m) % 2 == 1) out[n++] = m;
    check(n == 16, "odd_vectors");
    return out;
  }();
  return vs;
}

int odd_vector_index(uint8_t mask) {
  const auto& vs = odd_vectors();
  for (int i = 0; i < 16; ++i)
    if (vs[i] == mask) return i;
  throw InternalError("odd_vector_index: not an odd-weight mask");
}

bool d5_meets(uint8_t a, uint8_t b) { return __builtin_popcount(a ^ b) == 4; }

D5Element d5_class_of(const std::array<uint8_t, 16>& perm16) {
  const auto& vs = odd_vectors();
  // sanity: a permutation preserving the meets relation
  {
    std::array<bool, 16> hit{};
    for (int i = 0; i < 16; ++i) {
      check(perm16[i] < 16 && !hit[perm16[i]], "d5_class_of: not a permutation");
      hit[perm16[i]] = true;
    }
    for (int i = 0; i < 16; ++i)
      for (int j = i + 1; j < 16; ++j)
        check(d5_meets(vs[i], vs[j]) == d5_meets(vs[perm16[i]], vs[perm16[j]]),
              "d5_class_of: incidence not preserved");
  }
  D5Element el{};
  // recover the bit permutation and the translation from bit partitions
  for (int bit = 0; bit < 5; ++bit) {
    // image of the partition {v : bit set}
    uint16_t img_set = 0;
    for (int i = 0; i < 16; ++i)
      if (vs[i] >> bit & 1) img_set |= (uint16_t)(1u << perm16[i]);
    int target = -1, flip = -1;
    for (int tb = 0; tb < 5 && target < 0; ++tb) {
      uint16_t ones = 0, zeros = 0;
      for (int i = 0; i < 16; ++i)
        if (vs[i] >> tb & 1)
          ones |= (uint16_t)(1u << i);
        else
          zeros |= (uint16_t)(1u << i);
      if (img_set == ones) {
        target = tb;
        flip = 0;
      } else if (img_set == zeros) {
        target = tb;
        flip = 1;
      }
    }
    check(target >= 0, "d5_class_of: bit partition not preserved");
    el.sigma[bit] = target;
    el.flip[target] = flip;
  }
  // verify: v -> sigma(v) + t reproduces the permutation
  for (int i = 0; i < 16; ++i) {
    uint8_t im = 0;
    for (int bit = 0; bit < 5; ++bit)
      if (vs[i] >> bit & 1) im ^= (uint8_t)(1u << el.sigma[bit]);
    for (int bit = 0; bit < 5; ++bit)
      if (el.flip[bit]) im ^= (uint8_t)(1u << bit);
    check(odd_vector_index(im) == perm16[i], "d5_class_of: decomposition mismatch");
  }
  // signed cycle type: cycles of sigma, negative iff the flips along it sum odd
  std::vector<std::pair<int, bool>> cycles;
  std::array<bool, 5> used{};
  int flips_total = 0;
  for (int b = 0; b < 5; ++b) flips_total += el.flip[b];
  check(flips_total % 2 == 0, "d5_class_of: odd number of sign flips");
  for (int b = 0; b < 5; ++b) {
    if (used[b]) continue;
    int len = 0, fl = 0, cur = b;
    do {
      used[cur] = true;
      ++len;
      fl += el.flip[el.sigma[cur]];
      cur = el.sigma[cur];
    } while (cur != b);
    cycles.emplace_back(len, fl % 2 == 1);
  }
  el.table_index = d5_class_index(cycles);
  return el;
}


std::optional<std::array<int, 16>> d5_find_model(
    const std::array<std::array<uint8_t, 16>, 16>& meets) {
  for (int a = 0; a < 16; ++a) {
    int deg = 0;
    for (int b = 0; b < 16; ++b)
      if (b != a) deg += meets[a][b];
    if (deg != 5) return std::nullopt;
  }
  std::array<int, 16> out;
  std::array<int, 5> pick{};
  auto attempt = [&](const std::array<int, 5>& s) -> bool {
    std::array<bool, 16> used{};
    int conic = -1;
    for (int c = 0; c < 16; ++c) {
      bool all = true;
      for (int i = 0; i < 5; ++i) all = all && c != s[i] && meets[c][s[i]];
      if (all) {
        if (conic >= 0) return false;
        conic = c;
      }
    }
    if (conic < 0) return false;
    out.fill(-1);
    out[odd_vector_index(0b11111)] = conic;
    used[conic] = true;
    for (int i = 0; i < 5; ++i) {
      out[odd_vector_index((uint8_t)(1u << i))] = s[i];
      used[s[i]] = true;
    }
    for (int c = 0; c < 16; ++c) {
      if (used[c]) continue;
      uint8_t mask = 0b11111;
      int cnt = 0;
      for (int i = 0; i < 5; ++i)
        if (meets[c][s[i]]) {
          mask ^= (uint8_t)(1u << i);
          ++cnt;
        }
      if (cnt != 2) return false;
      int slot = odd_vector_index(mask);
      if (out[slot] >= 0) return false;
      out[slot] = c;
    }
    for (int i = 0; i < 16; ++i)
      for (int j = i + 1; j < 16; ++j)
        if ((meets[out[i]][out[j]] != 0) != d5_meets(odd_vectors()[i], odd_vectors()[j]))
          return false;
    return true;
  };
  auto rec = [&](auto&& self, int start, int depth) -> bool {
    if (depth == 5) return attempt(pick);
    for (int x = start; x < 16; ++x) {
      bool ok = true;
      for (int t = 0; t < depth; ++t) ok = ok && !meets[pick[t]][x];
      if (!ok) continue;
      pick[depth] = x;
      if (self(self, x + 1, depth + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0, 0)) return std::nullopt;
  return out;
}

}  // namespace cubic
