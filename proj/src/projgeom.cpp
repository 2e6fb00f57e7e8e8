#include "cubic27/projgeom.hpp"

#include <algorithm>
#include <set>

namespace cubic {

template <int N>
Pt<N> pt_normalize(const Fq& F, Pt<N> p) {
  for (int i = 0; i < N; ++i) {
    if (!F.is_zero(p.x[i])) {
      Elem s = F.inv(p.x[i]);
      for (int j = 0; j < N; ++j) p.x[j] = F.mul(p.x[j], s);
      return p;
    }
  }
  throw InvalidInput("projective point cannot be the zero vector");
}

template <int N>
Pt<N> make_pt(const Fq& F, std::array<Elem, N> coords) {
  Pt<N> p{coords};
  return pt_normalize<N>(F, p);
}

template <int N>
bool pt_is_zero(const Fq& F, const Pt<N>& p) {
  for (auto& c : p.x)
    if (!F.is_zero(c)) return false;
  return true;
}

template <int N>
Pt<N> pt_embed(const Fq& from, const Fq& to, const Pt<N>& p) {
  Pt<N> r;
  for (int i = 0; i < N; ++i) r.x[i] = to.embed_from(from, p.x[i]);
  return r;
}

template <int N>
Map<N> map_normalize(const Fq& F, Map<N> m) {
  for (int i = 0; i < N * N; ++i) {
    if (!F.is_zero(m.a[i])) {
      Elem s = F.inv(m.a[i]);
      for (int j = 0; j < N * N; ++j) m.a[j] = F.mul(m.a[j], s);
      return m;
    }
  }
  throw InternalError("zero matrix cannot be normalized");
}

template <int N>
Map<N> map_mul(const Fq& F, const Map<N>& a, const Map<N>& b) {
  Map<N> r;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Elem s = F.zero();
      for (int k = 0; k < N; ++k) s = F.add(s, F.mul(a.a[i * N + k], b.a[k * N + j]));
      r.a[i * N + j] = s;
    }
  return map_normalize<N>(F, r);
}

template <int N>
Elem map_det(const Fq& F, const Map<N>& m) {
  // gaussian elimination on a copy
  std::array<Elem, N * N> a = m.a;
  Elem det = F.one();
  for (int col = 0; col < N; ++col) {
    int piv = -1;
    for (int r = col; r < N; ++r)
      if (!F.is_zero(a[r * N + col])) {
        piv = r;
        break;
      }
    if (piv < 0) return F.zero();
    if (piv != col) {
      for (int j = 0; j < N; ++j) std::swap(a[piv * N + j], a[col * N + j]);
      det = F.neg(det);
    }
    det = F.mul(det, a[col * N + col]);
    Elem ilc = F.inv(a[col * N + col]);
    for (int r = col + 1; r < N; ++r) {
      if (F.is_zero(a[r * N + col])) continue;
      Elem f = F.mul(a[r * N + col], ilc);
      for (int j = col; j < N; ++j)
        a[r * N + j] = F.sub(a[r * N + j], F.mul(f, a[col * N + j]));
    }
  }
  return det;
}

template <int N>
Map<N> map_inverse(const Fq& F, const Map<N>& m) {
  std::array<Elem, N * N> a = m.a;
  Map<N> inv;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) inv.a[i * N + j] = i == j ? F.one() : F.zero();
  for (int col = 0; col < N; ++col) {
    int piv = -1;
    for (int r = col; r < N; ++r)
      if (!F.is_zero(a[r * N + col])) {
        piv = r;
        break;
      }
    check(piv >= 0, "map_inverse: singular matrix");
    if (piv != col)
      for (int j = 0; j < N; ++j) {
        std::swap(a[piv * N + j], a[col * N + j]);
        std::swap(inv.a[piv * N + j], inv.a[col * N + j]);
      }
    Elem ilc = F.inv(a[col * N + col]);
    for (int j = 0; j < N; ++j) {
      a[col * N + j] = F.mul(a[col * N + j], ilc);
      inv.a[col * N + j] = F.mul(inv.a[col * N + j], ilc);
    }
    for (int r = 0; r < N; ++r) {
      if (r == col || F.is_zero(a[r * N + col])) continue;
      Elem f = a[r * N + col];
      for (int j = 0; j < N; ++j) {
        a[r * N + j] = F.sub(a[r * N + j], F.mul(f, a[col * N + j]));
        inv.a[r * N + j] = F.sub(inv.a[r * N + j], F.mul(f, inv.a[col * N + j]));
      }
    }
  }
  return map_normalize<N>(F, inv);
}

template <int N>
Pt<N> map_apply(const Fq& F, const Map<N>& m, const Pt<N>& p) {
  Pt<N> r;
  for (int i = 0; i < N; ++i) {
    Elem s = F.zero();
    for (int j = 0; j < N; ++j) s = F.add(s, F.mul(m.a[i * N + j], p.x[j]));
    r.x[i] = s;
  }
  return pt_normalize<N>(F, r);
}

template <int N>
Map<N> map_identity(const Fq& F) {
  Map<N> m;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) m.a[i * N + j] = i == j ? F.one() : F.zero();
  return m;
}

template <int N>
Map<N> map_embed(const Fq& from, const Fq& to, const Map<N>& m) {
  Map<N> r;
  for (int i = 0; i < N * N; ++i) r.a[i] = to.embed_from(from, m.a[i]);
  return r;
}

// explicit instantiations
template Pt<4> pt_normalize<4>(const Fq&, Pt<4>);
template Pt<2> pt_normalize<2>(const Fq&, Pt<2>);
template Pt<5> pt_normalize<5>(const Fq&, Pt<5>);
template Pt<4> make_pt<4>(const Fq&, std::array<Elem, 4>);
template Pt<2> make_pt<2>(const Fq&, std::array<Elem, 2>);
template Pt<5> make_pt<5>(const Fq&, std::array<Elem, 5>);
template bool pt_is_zero<4>(const Fq&, const Pt<4>&);
template bool pt_is_zero<2>(const Fq&, const Pt<2>&);
template Pt<4> pt_embed<4>(const Fq&, const Fq&, const Pt<4>&);
template Pt<2> pt_embed<2>(const Fq&, const Fq&, const Pt<2>&);
template Pt<5> pt_embed<5>(const Fq&, const Fq&, const Pt<5>&);
template Map<4> map_normalize<4>(const Fq&, Map<4>);
template Map<2> map_normalize<2>(const Fq&, Map<2>);
template Map<5> map_normalize<5>(const Fq&, Map<5>);
template Map<4> map_mul<4>(const Fq&, const Map<4>&, const Map<4>&);
template Map<2> map_mul<2>(const Fq&, const Map<2>&, const Map<2>&);
template Map<5> map_mul<5>(const Fq&, const Map<5>&, const Map<5>&);
template Map<4> map_inverse<4>(const Fq&, const Map<4>&);
template Map<2> map_inverse<2>(const Fq&, const Map<2>&);
template Map<5> map_inverse<5>(const Fq&, const Map<5>&);
template Pt<4> map_apply<4>(const Fq&, const Map<4>&, const Pt<4>&);
template Pt<2> map_apply<2>(const Fq&, const Map<2>&, const Pt<2>&);
template Pt<5> map_apply<5>(const Fq&, const Map<5>&, const Pt<5>&);
template Map<4> map_identity<4>(const Fq&);
template Map<2> map_identity<2>(const Fq&);
template Map<5> map_identity<5>(const Fq&);
template Elem map_det<4>(const Fq&, const Map<4>&);
template Elem map_det<2>(const Fq&, const Map<2>&);
template Elem map_det<5>(const Fq&, const Map<5>&);
template Map<4> map_embed<4>(const Fq&, const Fq&, const Map<4>&);
template Map<2> map_embed<2>(const Fq&, const Fq&, const Map<2>&);
template Map<5> map_embed<5>(const Fq&, const Fq&, const Map<5>&);

// --- lines ---

Line3 make_line(const Fq& F, const Pt4& pp, const Pt4& qq) {
  Line3 l;
  l.p = pt_normalize<4>(F, pp);
  l.q = pt_normalize<4>(F, qq);
  check(!(l.p == l.q), "make_line: coincident points");
  // pluecker p_ij = p_i q_j - p_j q_i, order 01 02 03 12 13 23
  int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (int t = 0; t < 6; ++t) {
    int i = pairs[t][0], j = pairs[t][1];
    l.pluecker[t] = F.sub(F.mul(l.p.x[i], l.q.x[j]), F.mul(l.p.x[j], l.q.x[i]));
  }
  // normalize the pluecker vector
  for (int t = 0; t < 6; ++t) {
    if (!F.is_zero(l.pluecker[t])) {
      Elem s = F.inv(l.pluecker[t]);
      for (int u = 0; u < 6; ++u) l.pluecker[u] = F.mul(l.pluecker[u], s);
      break;
    }
  }
  // dual: two independent rows of the kernel of [p; q] (hyperplanes through the line)
  Mat m{{l.p.x.begin(), l.p.x.end()}, {l.q.x.begin(), l.q.x.end()}};
  auto ker = mat_kernel(F, m);
  check(ker.size() == 2, "make_line: dual computation failed");
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 4; ++c) l.dual[r * 4 + c] = ker[r][c];
  return l;
}

bool line_eq(const Line3& a, const Line3& b) { return a.pluecker == b.pluecker; }

bool on_line(const Fq& F, const Line3& l, const Pt4& pt) {
  for (int r = 0; r < 2; ++r) {
    Elem s = F.zero();
    for (int c = 0; c < 4; ++c) s = F.add(s, F.mul(l.dual[r * 4 + c], pt.x[c]));
    if (!F.is_zero(s)) return false;
  }
  return true;
}

Elem pluecker_pairing(const Fq& F, const Line3& a, const Line3& b) {
  // omega(a,b) = a01 b23 - a02 b13 + a03 b12 + a12 b03 - a13 b02 + a23 b01
  const auto& x = a.pluecker;
  const auto& y = b.pluecker;
  Elem s = F.mul(x[0], y[5]);
  s = F.sub(s, F.mul(x[1], y[4]));
  s = F.add(s, F.mul(x[2], y[3]));
  s = F.add(s, F.mul(x[3], y[2]));
  s = F.sub(s, F.mul(x[4], y[1]));
  s = F.add(s, F.mul(x[5], y[0]));
  return s;
}

bool lines_meet(const Fq& F, const Line3& a, const Line3& b) {
  return F.is_zero(pluecker_pairing(F, a, b));
}

std::optional<Pt4> line_meet(const Fq& F, const Line3& a, const Line3& b) {
  if (line_eq(a, b)) throw InvalidInput("line_meet: equal lines");
  if (!lines_meet(F, a, b)) return std::nullopt;
  // solve alpha*a.p + beta*a.q = gamma*b.p + delta*b.q
  Mat m(4, std::vector<Elem>(4));
  for (int i = 0; i < 4; ++i) {
    m[i][0] = a.p.x[i];
    m[i][1] = a.q.x[i];
    m[i][2] = F.neg(b.p.x[i]);
    m[i][3] = F.neg(b.q.x[i]);
  }
  auto ker = mat_kernel(F, m);
  check(ker.size() == 1, "line_meet: expected 1-dim solution space");
  Pt4 r;
  for (int i = 0; i < 4; ++i)
    r.x[i] = F.add(F.mul(ker[0][0], a.p.x[i]), F.mul(ker[0][1], a.q.x[i]));
  return pt_normalize<4>(F, r);
}

Line3 line_embed(const Fq& from, const Fq& to, const Line3& l) {
  return make_line(to, pt_embed<4>(from, to, l.p), pt_embed<4>(from, to, l.q));
}

Line3 line_map(const Fq& F, const Map4& m, const Line3& l) {
  return make_line(F, map_apply<4>(F, m, l.p), map_apply<4>(F, m, l.q));
}

// --- frames and maps from point correspondences ---

static Elem det4_cols(const Fq& F, const Pt4& a, const Pt4& b, const Pt4& c, const Pt4& d) {
  Map4 m;
  for (int i = 0; i < 4; ++i) {
    m.a[i * 4 + 0] = a.x[i];
    m.a[i * 4 + 1] = b.x[i];
    m.a[i * 4 + 2] = c.x[i];
    m.a[i * 4 + 3] = d.x[i];
  }
  // direct determinant without normalization
  std::array<Elem, 16> v = m.a;
  Elem det = F.one();
  for (int col = 0; col < 4; ++col) {
    int piv = -1;
    for (int r = col; r < 4; ++r)
      if (!F.is_zero(v[r * 4 + col])) {
        piv = r;
        break;
      }
    if (piv < 0) return F.zero();
    if (piv != col) {
      for (int j = 0; j < 4; ++j) std::swap(v[piv * 4 + j], v[col * 4 + j]);
      det = F.neg(det);
    }
    det = F.mul(det, v[col * 4 + col]);
    Elem ilc = F.inv(v[col * 4 + col]);
    for (int r = col + 1; r < 4; ++r) {
      if (F.is_zero(v[r * 4 + col])) continue;
      Elem f = F.mul(v[r * 4 + col], ilc);
      for (int j = col; j < 4; ++j) v[r * 4 + j] = F.sub(v[r * 4 + j], F.mul(f, v[col * 4 + j]));
    }
  }
  return det;
}

bool is_frame4(const Fq& F, const std::array<Pt4, 5>& pts) {
  static const int quads[5][4] = {
      {0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4}};
  for (auto& q : quads)
    if (F.is_zero(det4_cols(F, pts[q[0]], pts[q[1]], pts[q[2]], pts[q[3]]))) return false;
  return true;
}

// matrix sending the standard frame e0..e3, e0+e1+e2+e3 to the given frame
std::optional<Map4> frame_matrix(const Fq& F, const std::array<Pt4, 5>& pts) {
  // solve [p0 p1 p2 p3] mu = p4; need all mu_i nonzero
  Mat m(4, std::vector<Elem>(4));
  std::vector<Elem> rhs(4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m[i][j] = pts[j].x[i];
    rhs[i] = pts[4].x[i];
  }
  auto mu = mat_solve(F, m, rhs);
  if (!mu) return std::nullopt;
  Map4 r;
  for (int j = 0; j < 4; ++j) {
    if (F.is_zero((*mu)[j])) return std::nullopt;
    for (int i = 0; i < 4; ++i) r.a[i * 4 + j] = F.mul(pts[j].x[i], (*mu)[j]);
  }
  return map_normalize<4>(F, r);
}

std::optional<Map4> map_from_points(const Fq& F, const std::array<Pt4, 5>& src,
                                    const std::array<Pt4, 5>& dst) {
  auto ms = frame_matrix(F, src);
  auto md = frame_matrix(F, dst);
  if (!ms || !md) return std::nullopt;
  return map_mul<4>(F, *md, map_inverse<4>(F, *ms));
}

std::optional<Map2> map2_from_points(const Fq& F, const std::array<Pt2, 3>& src,
                                     const std::array<Pt2, 3>& dst) {
  auto part = [&](const std::array<Pt2, 3>& pts) -> std::optional<Map2> {
    // [p0 p1] mu = p2
    Mat m(2, std::vector<Elem>(2));
    std::vector<Elem> rhs(2);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) m[i][j] = pts[j].x[i];
      rhs[i] = pts[2].x[i];
    }
    auto mu = mat_solve(F, m, rhs);
    if (!mu) return std::nullopt;
    Map2 r;
    for (int j = 0; j < 2; ++j) {
      if (F.is_zero((*mu)[j])) return std::nullopt;
      for (int i = 0; i < 2; ++i) r.a[i * 2 + j] = F.mul(pts[j].x[i], (*mu)[j]);
    }
    return map_normalize<2>(F, r);
  };
  auto ms = part(src), md = part(dst);
  if (!ms || !md) return std::nullopt;
  return map_mul<2>(F, *md, map_inverse<2>(F, *ms));
}

Pt2 map2_apply(const Fq& F, const Map2& m, const Pt2& p) { return map_apply<2>(F, m, p); }

// --- PGL2 stabilizer of 5 points ---

Pgl2Group pgl2_stabilizer(const Fq& F, const std::array<Pt2, 5>& pts_in) {
  std::array<Pt2, 5> pts = pts_in;
  for (auto& p : pts) p = pt_normalize<2>(F, p);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (pts[i] == pts[j]) throw InvalidInput("pgl2_stabilizer: degenerate configuration");
  // fixed first triple in canonical sorted order
  std::array<Pt2, 5> sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  std::array<Pt2, 3> base{sorted[0], sorted[1], sorted[2]};
  std::set<Map2> found;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (j == i) continue;
      for (int k = 0; k < 5; ++k) {
        if (k == i || k == j) continue;
        auto m = map2_from_points(F, base, {pts[i], pts[j], pts[k]});
        if (!m) continue;
        bool ok = true;
        for (int t = 0; t < 5 && ok; ++t) {
          Pt2 im = map2_apply(F, *m, pts[t]);
          ok = std::find(pts.begin(), pts.end(), im) != pts.end();
        }
        if (ok) found.insert(*m);
      }
    }
  Pgl2Group g;
  g.elems.assign(found.begin(), found.end());
  g.order = g.elems.size();
  // isomorphism tag
  auto elem_order = [&](const Map2& m) {
    Map2 cur = m;
    Map2 id = map_identity<2>(F);
    int o = 1;
    while (!(cur == id)) {
      cur = map_mul<2>(F, cur, m);
      ++o;
      check(o <= 61, "pgl2 element order overflow");
    }
    return o;
  };
  int maxord = 1;
  for (auto& m : g.elems) maxord = std::max(maxord, elem_order(m));
  switch (g.order) {
    case 1: g.tag = "1"; break;
    case 2: g.tag = "2"; break;
    case 3: g.tag = "3"; break;
    case 4: g.tag = maxord == 4 ? "4" : "2^2"; break;
    case 5: g.tag = "5"; break;
    case 6: g.tag = "S3"; break;
    case 10: g.tag = "D10"; break;
    case 20: g.tag = "5:4"; break;
    case 60: g.tag = "A5"; break;
    default: throw InternalError("pgl2_stabilizer: unexpected group order");
  }
  // greedy generators
  std::set<Map2> gen_span{map_identity<2>(F)};
  for (auto& m : g.elems) {
    if (gen_span.count(m)) continue;
    g.gens.push_back(m);
    // close span
    std::vector<Map2> frontier(gen_span.begin(), gen_span.end());
    gen_span.insert(m);
    frontier.push_back(m);
    while (!frontier.empty()) {
      Map2 x = frontier.back();
      frontier.pop_back();
      for (auto& h : g.gens) {
        Map2 y = map_mul<2>(F, x, h);
        if (gen_span.insert(y).second) frontier.push_back(y);
      }
    }
    if (gen_span.size() == g.elems.size()) break;
  }
  return g;
}

// --- dense linear algebra ---

static uint32_t row_reduce(const Fq& F, Mat& m, std::vector<int>& pivot_cols) {
  uint32_t rows = (uint32_t)m.size();
  uint32_t cols = rows ? (uint32_t)m[0].size() : 0;
  uint32_t rank = 0;
  pivot_cols.clear();
  for (uint32_t c = 0; c < cols && rank < rows; ++c) {
    uint32_t sel = rank;
    while (sel < rows && F.is_zero(m[sel][c])) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[rank]);
    Elem ilc = F.inv(m[rank][c]);
    for (uint32_t j = c; j < cols; ++j) m[rank][j] = F.mul(m[rank][j], ilc);
    for (uint32_t i = 0; i < rows; ++i) {
      if (i == rank || F.is_zero(m[i][c])) continue;
      Elem f = m[i][c];
      for (uint32_t j = c; j < cols; ++j) m[i][j] = F.sub(m[i][j], F.mul(f, m[rank][j]));
    }
    pivot_cols.push_back((int)c);
    ++rank;
  }
  return rank;
}

int mat_rank(const Fq& F, Mat m) {
  std::vector<int> pc;
  return (int)row_reduce(F, m, pc);
}

std::vector<std::vector<Elem>> mat_kernel(const Fq& F, const Mat& m_in) {
  Mat m = m_in;
  uint32_t cols = m.empty() ? 0 : (uint32_t)m[0].size();
  std::vector<int> pc;
  uint32_t rank = row_reduce(F, m, pc);
  std::vector<std::vector<Elem>> basis;
  std::vector<bool> is_pivot(cols, false);
  for (int c : pc) is_pivot[c] = true;
  for (uint32_t freec = 0; freec < cols; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<Elem> v(cols, F.zero());
    v[freec] = F.one();
    for (uint32_t r = 0; r < rank; ++r) v[pc[r]] = F.neg(m[r][freec]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Elem>> mat_solve(const Fq& F, Mat m, std::vector<Elem> rhs) {
  uint32_t rows = (uint32_t)m.size();
  check(rhs.size() == rows, "mat_solve: rhs size mismatch");
  for (uint32_t i = 0; i < rows; ++i) m[i].push_back(rhs[i]);
  uint32_t cols = rows ? (uint32_t)m[0].size() - 1 : 0;
  std::vector<int> pc;
  uint32_t rank = row_reduce(F, m, pc);
  std::vector<Elem> x(cols, F.zero());
  for (uint32_t r = 0; r < rank; ++r) {
    if (pc[r] == (int)cols) return std::nullopt;  // inconsistent
    x[pc[r]] = m[r][cols];
  }
  return x;
}

}  // namespace cubic
