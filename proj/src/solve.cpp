#include "cubic27/solve.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cubic {

Elem mat_det(const Fq& F, Mat m) {
  size_t n = m.size();
  Elem det = F.one();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && F.is_zero(m[piv][col])) ++piv;
    if (piv == n) return F.zero();
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = F.neg(det);
    }
    det = F.mul(det, m[col][col]);
    Elem ilc = F.inv(m[col][col]);
    for (size_t r = col + 1; r < n; ++r) {
      if (F.is_zero(m[r][col])) continue;
      Elem f = F.mul(m[r][col], ilc);
      for (size_t j = col; j < n; ++j) m[r][j] = F.sub(m[r][j], F.mul(f, m[col][j]));
    }
  }
  return det;
}

Elem sylvester_det(const Fq& F, const std::vector<Elem>& A, const std::vector<Elem>& B) {
  int m = (int)A.size() - 1, n = (int)B.size() - 1;
  check(m >= 0 && n >= 0, "sylvester_det: empty coefficient vector");
  if (m == 0 && n == 0) return F.one();
  if (m == 0) return F.pow_u64(A[0], (uint64_t)n);
  if (n == 0) return F.pow_u64(B[0], (uint64_t)m);
  int sz = m + n;
  Mat mat(sz, std::vector<Elem>(sz, F.zero()));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) mat[r][r + (m - i)] = A[i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) mat[n + r][r + (n - i)] = B[i];
  return mat_det(F, mat);
}

// --- symbolic resultant ---

static MP mp_minor_det(const Fq& F, const std::vector<std::vector<MP>>& m,
                       std::vector<int> rows, std::vector<int> cols) {
  size_t n = rows.size();
  if (n == 1) return m[rows[0]][cols[0]];
  MP acc((int)m[0][0].nvars);
  for (size_t i = 0; i < n; ++i) {
    const MP& e = m[rows[i]][cols[0]];
    if (e.is_zero()) continue;
    std::vector<int> sub_rows;
    for (size_t j = 0; j < n; ++j)
      if (j != i) sub_rows.push_back(rows[j]);
    std::vector<int> sub_cols(cols.begin() + 1, cols.end());
    MP sub = mp_minor_det(F, m, sub_rows, sub_cols);
    MP term = mp_mul(F, e, sub);
    if (i % 2) term = mp_scale(F, term, F.neg(F.one()));
    acc = mp_add(F, acc, term);
  }
  return acc;
}

MP mp_resultant_sym(const Fq& F, const MP& A, const MP& B, int var) {
  if (A.is_zero() || B.is_zero()) return MP(A.nvars ? A.nvars : B.nvars);
  auto ca = mp_collect(F, A, var);
  auto cb = mp_collect(F, B, var);
  int m = (int)ca.size() - 1, n = (int)cb.size() - 1;
  if (m == 0 && n == 0) return mp_const(F, A.nvars, F.one());
  auto mp_pow = [&](const MP& x, int e) {
    MP r = mp_const(F, A.nvars, F.one());
    for (int i = 0; i < e; ++i) r = mp_mul(F, r, x);
    return r;
  };
  if (m == 0) return mp_pow(ca[0], n);
  if (n == 0) return mp_pow(cb[0], m);
  int sz = m + n;
  std::vector<std::vector<MP>> mat(sz, std::vector<MP>(sz, MP(A.nvars)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) mat[r][r + (m - i)] = ca[i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) mat[n + r][r + (n - i)] = cb[i];
  std::vector<int> rows(sz), cols(sz);
  for (int i = 0; i < sz; ++i) rows[i] = cols[i] = i;
  return mp_minor_det(F, mat, rows, cols);
}

// --- evaluation/interpolation resultant ---

MP mp_resultant_ei(const Fq& Fb, const Fq& E, const MP& A, const MP& B, int var) {
  check(!A.is_zero() && !B.is_zero(), "mp_resultant_ei: zero input");
  int nv = A.nvars;
  std::vector<int> others;
  for (int v = 0; v < nv; ++v)
    if (v != var && (A.deg_in(v) > 0 || B.deg_in(v) > 0)) others.push_back(v);
  check(others.size() <= 2, "mp_resultant_ei: too many free variables");
  int m = A.deg_in(var), n = B.deg_in(var);
  MP Ae = mp_embed(Fb, E, A), Be = mp_embed(Fb, E, B);
  auto ca = mp_collect(E, Ae, var);
  auto cb = mp_collect(E, Be, var);
  ca.resize(m + 1, MP(nv));
  cb.resize(n + 1, MP(nv));

  auto retract_mp = [&](const MP& r) {
    MP out(nv);
    for (auto& [k, v] : r.t) {
      auto rv = E.retract_to(Fb, v);
      check(rv.has_value(), "mp_resultant_ei: coefficient not in base field");
      if (!Fb.is_zero(*rv)) out.t[k] = *rv;
    }
    return out;
  };

  if (others.empty()) {
    std::vector<Elem> va(m + 1), vb(n + 1);
    for (int i = 0; i <= m; ++i) va[i] = ca[i].is_zero() ? E.zero() : ca[i].t.begin()->second;
    for (int i = 0; i <= n; ++i) vb[i] = cb[i].is_zero() ? E.zero() : cb[i].t.begin()->second;
    Elem d = sylvester_det(E, va, vb);
    MP r(nv);
    if (!E.is_zero(d)) r.t[{}] = d;
    return retract_mp(r);
  }

  auto eval_coeffs = [&](const std::vector<MP>& cs, std::span<const Elem> point,
                         std::vector<Elem>& out) {
    out.resize(cs.size());
    std::vector<Elem> full(nv, E.zero());
    for (size_t i = 0; i < others.size(); ++i) full[others[i]] = point[i];
    for (size_t i = 0; i < cs.size(); ++i) out[i] = mp_eval(E, cs[i], full);
  };

  if (others.size() == 1) {
    int x = others[0];
    int D = n * A.deg_in(x) + m * B.deg_in(x);
    check(E.order_fits_u64() && E.order_u64() > (uint64_t)D + 1,
          "mp_resultant_ei: evaluation field too small");
    std::vector<Elem> xs(D + 1), ys(D + 1), va, vb;
    for (int i = 0; i <= D; ++i) {
      xs[i] = E.from_uint((uint64_t)i);
      std::array<Elem, 1> pt{xs[i]};
      eval_coeffs(ca, pt, va);
      eval_coeffs(cb, pt, vb);
      ys[i] = sylvester_det(E, va, vb);
    }
    Poly r = pinterpolate(E, xs, ys);
    MP out(nv);
    for (size_t i = 0; i < r.c.size(); ++i) {
      if (E.is_zero(r.c[i])) continue;
      MP::Key k{};
      k[x] = (uint8_t)i;
      out.t[k] = r.c[i];
    }
    return retract_mp(out);
  }

  int x = others[0], y = others[1];
  int Dx = n * A.deg_in(x) + m * B.deg_in(x);
  int Dy = n * A.deg_in(y) + m * B.deg_in(y);
  check(E.order_fits_u64() && E.order_u64() > (uint64_t)std::max(Dx, Dy) + 1,
        "mp_resultant_ei: evaluation field too small");
  std::vector<Elem> xs(Dx + 1), ys(Dy + 1);
  for (int i = 0; i <= Dx; ++i) xs[i] = E.from_uint((uint64_t)i);
  for (int j = 0; j <= Dy; ++j) ys[j] = E.from_uint((uint64_t)j);
  // interpolate rows in y, then columns in x
  std::vector<Poly> rowpolys(Dx + 1);
  std::vector<Elem> va, vb;
  for (int i = 0; i <= Dx; ++i) {
    std::vector<Elem> vals(Dy + 1);
    for (int j = 0; j <= Dy; ++j) {
      std::array<Elem, 2> pt{xs[i], ys[j]};
      eval_coeffs(ca, pt, va);
      eval_coeffs(cb, pt, vb);
      vals[j] = sylvester_det(E, va, vb);
    }
    rowpolys[i] = pinterpolate(E, ys, vals);
  }
  MP out(nv);
  for (int jd = 0; jd <= Dy; ++jd) {
    std::vector<Elem> cvec(Dx + 1);
    bool any = false;
    for (int i = 0; i <= Dx; ++i) {
      cvec[i] = jd < (int)rowpolys[i].c.size() ? rowpolys[i].c[jd] : E.zero();
      any = any || !E.is_zero(cvec[i]);
    }
    if (!any) continue;
    Poly px = pinterpolate(E, xs, cvec);
    for (size_t id = 0; id < px.c.size(); ++id) {
      if (E.is_zero(px.c[id])) continue;
      MP::Key k{};
      k[x] = (uint8_t)id;
      k[y] = (uint8_t)jd;
      out.t[k] = px.c[id];
    }
  }
  return retract_mp(out);
}

MP mp_content_in(const Fq& F, const MP& A, int var, int othervar) {
  auto cs = mp_collect(F, A, var);
  Poly g;
  for (auto& c : cs) {
    for (auto& [k, v] : c.t)
      for (int t = 0; t < 6; ++t)
        check(t == othervar || k[t] == 0, "mp_content_in: extra variables");
    g = pgcd(F, g, mp_to_poly(F, c, othervar));
  }
  return mp_from_poly(F, g, A.nvars, othervar);
}

Poly mp_to_poly(const Fq& F, const MP& a, int var) {
  Poly r;
  r.c.assign(a.deg_in(var) + 1, F.zero());
  for (auto& [k, v] : a.t) {
    for (int t = 0; t < 6; ++t) check(t == var || k[t] == 0, "mp_to_poly: extra variables");
    r.c[k[var]] = v;
  }
  return ptrim(F, std::move(r));
}

MP mp_from_poly(const Fq& F, const Poly& a, int nvars, int var) {
  MP r(nvars);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (F.is_zero(a.c[i])) continue;
    MP::Key k{};
    k[var] = (uint8_t)i;
    r.t[k] = a.c[i];
  }
  return r;
}

FqPtr eval_extension(const FqPtr& F, uint64_t points) {
  if (F->order_fits_u64() && F->order_u64() > 4 * points + 4) return F;
  for (uint32_t d = 2;; ++d) {
    long double sz = 1;
    for (uint32_t i = 0; i < F->k * d; ++i) {
      sz *= F->p;
      if (sz > 4.0L * points + 4) return F->extend(d);
    }
  }
}

// ---------------------------------------------------------------------------
// affine system solver (<= 3 variables)
// ---------------------------------------------------------------------------

namespace {

const int kExtCandidates[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};

// roots over K of a polynomial with coefficients in F (K extends F)
std::vector<Elem> roots_over(const Fq& F, const Poly& f, const Fq& K) {
  if (f.is_zero()) return {};
  return roots_in_field(F, f, K);
}

bool point_seen_smaller(const Fq& F, const Fq& K, const std::vector<Elem>& x, int m) {
  // does the point retract into a proper subfield F.extend(d), d|m, d<m?
  for (int d = 1; d < m; ++d) {
    if (m % d) continue;
    auto Kd = F.extend((uint32_t)d);
    bool all = true;
    for (auto& c : x)
      if (!K.retract_to(*Kd, c)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

}  // namespace

std::vector<AffPoint> solve_affine(const FqPtr& F, std::vector<MP> eqs, int nvars,
                                   int max_ext) {
  check(nvars >= 0 && nvars <= 3, "solve_affine: nvars out of range");
  std::vector<AffPoint> out;
  for (auto& e : eqs) check(e.nvars >= nvars, "solve_affine: nvars mismatch");
  // drop identically-zero equations
  std::vector<MP> sys;
  for (auto& e : eqs)
    if (!e.is_zero()) sys.push_back(e);
  if (sys.empty()) throw InternalError("solve_affine: all equations vanish");

  if (nvars == 0) {
    bool ok = true;
    std::vector<Elem> none;
    for (auto& e : sys)
      if (!F->is_zero(mp_eval(*F, e, std::span<const Elem>(none.data(), 0)))) ok = false;
    if (ok) out.push_back({F, {}});
    return out;
  }

  // univariate eliminant in var 0
  Poly elim;
  if (nvars == 1) {
    elim = mp_to_poly(*F, sys[0], 0);
    for (size_t i = 1; i < sys.size(); ++i) elim = pgcd(*F, elim, mp_to_poly(*F, sys[i], 0));
  } else if (nvars == 2) {
    uint64_t bound = 1;
    for (auto& e : sys) bound = std::max<uint64_t>(bound, (uint64_t)e.total_deg());
    auto E = eval_extension(F, 4 * bound * bound + 16);
    Poly g;
    for (size_t i = 1; i < sys.size(); ++i) {
      MP r = mp_resultant_ei(*F, *E, sys[0], sys[i], 1);
      g = pgcd(*F, g, mp_to_poly(*F, r, 0));
      if (g.deg() == 0) break;
    }
    elim = g;
  } else {
    // eliminate var 2 symbolically pairwise, then var 1 by evaluation
    std::vector<MP> stage;
    for (size_t i = 1; i < sys.size(); ++i) {
      MP r = mp_resultant_sym(*F, sys[0], sys[i], 2);
      if (!r.is_zero()) stage.push_back(r);
    }
    if (sys.size() >= 3) {
      MP r = mp_resultant_sym(*F, sys[1], sys[2], 2);
      if (!r.is_zero()) stage.push_back(r);
    }
    if (stage.size() < 2) throw InternalError("solve_affine: degenerate elimination");
    uint64_t bound = 1;
    for (auto& e : stage) bound = std::max<uint64_t>(bound, (uint64_t)e.total_deg());
    auto E = eval_extension(F, 4 * bound * bound + 16);
    Poly g;
    for (size_t i = 1; i < stage.size(); ++i) {
      MP r = mp_resultant_ei(*F, *E, stage[0], stage[i], 1);
      g = pgcd(*F, g, mp_to_poly(*F, r, 0));
      if (g.deg() == 0) break;
    }
    elim = g;
  }
  if (elim.deg() == 0) return out;  // no solutions
  check(!elim.is_zero(), "solve_affine: eliminant vanished identically");

  auto factors = pfactors_up_to_degree(*F, elim, max_ext);
  for (int m : kExtCandidates) {
    if (m > max_ext) break;
    bool relevant = false;
    for (auto& f : factors) relevant = relevant || (m % f.deg() == 0);
    if (!relevant) continue;
    auto K = F->extend((uint32_t)m);
    std::vector<MP> sysK;
    for (auto& e : sys) sysK.push_back(mp_embed(*F, *K, e));
    std::vector<Elem> alphas;
    for (auto& f : factors)
      if (m % f.deg() == 0)
        for (auto& r : roots_over(*F, f, *K)) alphas.push_back(r);
    std::sort(alphas.begin(), alphas.end());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
    for (auto& a : alphas) {
      if (nvars == 1) {
        bool ok = true;
        for (auto& e : sysK) {
          std::vector<Elem> pt(e.nvars, K->zero());
          pt[0] = a;
          if (!K->is_zero(mp_eval(*K, e, pt))) {
            ok = false;
            break;
          }
        }
        if (ok && !point_seen_smaller(*F, *K, {a}, m)) out.push_back({K, {a}});
        continue;
      }
      std::vector<MP> spec;
      for (auto& e : sysK) spec.push_back(mp_eval_var(*K, e, 0, a));
      // recurse on remaining vars by shifting them down one slot
      std::vector<MP> shifted;
      bool all_zero = true;
      for (auto& e : spec) {
        MP s(e.nvars);
        for (auto& [k, v] : e.t) {
          MP::Key nk{};
          for (int t = 1; t < 6; ++t) nk[t - 1] = k[t];
          s.t[nk] = v;
        }
        if (!s.is_zero()) all_zero = false;
        shifted.push_back(std::move(s));
      }
      if (all_zero) throw InternalError("solve_affine: positive-dimensional fiber");
      std::vector<AffPoint> sub = solve_affine(K, shifted, nvars - 1, 1);
      for (auto& sp : sub) {
        check(sp.field.get() == K.get(), "solve_affine: fiber field mismatch");
        std::vector<Elem> full{a};
        for (auto& c : sp.x) full.push_back(c);
        // verify against every equation
        bool ok = true;
        for (auto& e : sysK) {
          std::vector<Elem> pt(e.nvars, K->zero());
          for (int t = 0; t < nvars; ++t) pt[t] = full[t];
          if (!K->is_zero(mp_eval(*K, e, pt))) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        if (point_seen_smaller(*F, *K, full, m)) continue;
        out.push_back({K, full});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// 27 lines: chart elimination
// ---------------------------------------------------------------------------

bool line_in_form(const Fq& F, const Form& f, const Line3& l) {
  check(f.nvars == 4, "line_in_form: expected a form on P^3");
  // coefficients of f(s*p + t*q) as a binary form in (s,t)
  const auto& mons = monomials(4, f.deg);
  std::vector<Elem> bin(f.deg + 1, F.zero());
  for (size_t i = 0; i < mons.size(); ++i) {
    if (F.is_zero(f.c[i])) continue;
    // expand prod over vars of (p_v s + q_v t)^(e_v)
    std::vector<Elem> acc{f.c[i]};
    for (int v = 0; v < 4; ++v)
      for (int e = 0; e < mons[i][v]; ++e) {
        std::vector<Elem> nxt(acc.size() + 1, F.zero());
        for (size_t t = 0; t < acc.size(); ++t) {
          nxt[t] = F.add(nxt[t], F.mul(acc[t], l.p.x[v]));
          nxt[t + 1] = F.add(nxt[t + 1], F.mul(acc[t], l.q.x[v]));
        }
        acc = std::move(nxt);
      }
    for (size_t t = 0; t < acc.size(); ++t) bin[t] = F.add(bin[t], acc[t]);
  }
  for (auto& c : bin)
    if (!F.is_zero(c)) return false;
  return true;
}

namespace {

// e_t(a,b,c,d): coefficients of F(x0, x1, a x0 + b x1, c x0 + d x1) in x0^(3-t) x1^t
std::array<MP, 4> chart_equations(const Fq& F, const Form& cubic) {
  std::array<MP, 4> e{MP(4), MP(4), MP(4), MP(4)};
  const auto& mons = monomials(4, 3);
  const int binom[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
  for (size_t idx = 0; idx < mons.size(); ++idx) {
    if (F.is_zero(cubic.c[idx])) continue;
    int m0 = mons[idx][0], m1 = mons[idx][1], m2 = mons[idx][2], m3 = mons[idx][3];
    for (int i = 0; i <= m2; ++i)
      for (int j = 0; j <= m3; ++j) {
        // a^i b^(m2-i) c^j d^(m3-j), x1-degree m1 + (m2-i) + (m3-j)
        int t = m1 + (m2 - i) + (m3 - j);
        Elem coef = F.mul(cubic.c[idx],
                          F.mul(F.from_int(binom[m2][i]), F.from_int(binom[m3][j])));
        MP::Key k{};
        k[0] = (uint8_t)i;
        k[1] = (uint8_t)(m2 - i);
        k[2] = (uint8_t)j;
        k[3] = (uint8_t)(m3 - j);
        mp_add_term(F, e[t], k, coef);
      }
  }
  return e;
}

struct ChartData {
  bool degenerate = false;
  std::array<MP, 4> e;        // e0..e3 over the base field
  std::vector<Poly> factors;  // irreducible factors (deg <= max_ext) of the eliminant gcd
};

ChartData build_chart(const FqPtr& F, const Form& cubic, int max_ext) {
  ChartData cd;
  cd.e = chart_equations(*F, cubic);
  const MP &e0 = cd.e[0], &e1 = cd.e[1], &e2 = cd.e[2], &e3 = cd.e[3];
  if (e0.is_zero() || e1.is_zero() || e2.is_zero() || e3.is_zero()) {
    cd.degenerate = true;
    return cd;
  }
  // resultants in d, then c, then b; a = var 0, b = 1, c = 2, d = 3
  MP r1 = mp_resultant_sym(*F, e1, e2, 3);
  MP r2 = mp_resultant_sym(*F, e1, e3, 3);
  MP r3 = mp_resultant_sym(*F, e2, e3, 3);
  if (r1.is_zero() || r2.is_zero() || r3.is_zero()) {
    cd.degenerate = true;
    return cd;
  }
  uint64_t bound = 0;
  for (const MP* r : {&r1, &r2, &r3})
    bound = std::max<uint64_t>(bound, (uint64_t)(r->total_deg() + 4) * (e0.total_deg() + 1));
  auto E = eval_extension(F, 4 * bound * bound + 64);
  MP s1 = mp_resultant_ei(*F, *E, e0, r1, 2);
  MP s2 = mp_resultant_ei(*F, *E, e0, r2, 2);
  MP s3 = mp_resultant_ei(*F, *E, e0, r3, 2);
  Poly g;
  std::vector<std::pair<const MP*, const MP*>> pairs{{&s1, &s2}, {&s1, &s3}, {&s2, &s3}};
  for (auto [sa, sb] : pairs) {
    if (sa->is_zero() || sb->is_zero()) continue;
    if (sa->deg_in(1) == 0) {
      g = pgcd(*F, g, mp_to_poly(*F, *sa, 0));
      continue;
    }
    MP t = mp_resultant_ei(*F, *E, *sa, *sb, 1);
    if (t.is_zero()) continue;
    g = pgcd(*F, g, mp_to_poly(*F, t, 0));
    if (g.deg() == 0) break;
  }
  // contents catch candidates lost to a common factor in b
  for (const MP* s : {&s1, &s2, &s3}) {
    if (s->is_zero()) continue;
    MP cont = mp_content_in(*F, *s, 1, 0);
    Poly cp = mp_to_poly(*F, cont, 0);
    if (cp.deg() >= 1) g = pmul(*F, g, cp);
  }
  if (g.is_zero()) {
    cd.degenerate = true;
    return cd;
  }
  if (g.deg() >= 1) cd.factors = pfactors_up_to_degree(*F, g, max_ext);
  return cd;
}

// lines of the chart system over K for one root a = alpha
void chart_back_substitute(const Fq& K, const std::array<MP, 4>& eK, const Elem& alpha,
                           std::vector<std::pair<Pt4, Pt4>>& out, bool& degenerate) {
  MP e0a = mp_eval_var(K, eK[0], 0, alpha);
  Poly e0c = mp_to_poly(K, e0a, 2);
  if (e0c.is_zero()) {
    degenerate = true;
    return;
  }
  if (e0c.deg() < 1) return;
  auto gammas = roots_in_field(K, e0c, K);
  for (auto& gamma : gammas) {
    MP E1 = mp_eval_var(K, mp_eval_var(K, eK[1], 0, alpha), 2, gamma);
    MP E2 = mp_eval_var(K, mp_eval_var(K, eK[2], 0, alpha), 2, gamma);
    MP E3 = mp_eval_var(K, mp_eval_var(K, eK[3], 0, alpha), 2, gamma);
    std::vector<std::pair<Elem, Elem>> bd;
    auto push_checked = [&](const Elem& b, const Elem& d) {
      std::array<Elem, 4> pt{alpha, b, gamma, d};
      for (auto& E : {E1, E2, E3})
        if (!K.is_zero(mp_eval(K, E, std::span<const Elem>(pt.data(), 4)))) return;
      bd.emplace_back(b, d);
    };
    if (!E1.is_zero()) {
      // E1 = L + M b + N d
      Elem L = K.zero(), M = K.zero(), N = K.zero();
      for (auto& [k, v] : E1.t) {
        if (k[1] == 0 && k[3] == 0)
          L = v;
        else if (k[1] == 1 && k[3] == 0)
          M = v;
        else if (k[1] == 0 && k[3] == 1)
          N = v;
        else
          check(false, "chart: e1 not linear in (b,d)");
      }
      if (!K.is_zero(N)) {
        // d = -(L + M b)/N, substitute into e3
        Elem iN = K.inv(N);
        MP dsub(4);
        mp_add_term(K, dsub, MP::Key{}, K.neg(K.mul(L, iN)));
        MP::Key kb{};
        kb[1] = 1;
        mp_add_term(K, dsub, kb, K.neg(K.mul(M, iN)));
        // build e3(b, dsub(b)) as univariate in b
        Poly ub;
        for (auto& [k, v] : E3.t) {
          MP term = mp_const(K, 4, v);
          for (int t = 0; t < k[1]; ++t) term = mp_mul(K, term, mp_var(K, 4, 1));
          for (int t = 0; t < k[3]; ++t) term = mp_mul(K, term, dsub);
          ub = padd(K, ub, mp_to_poly(K, term, 1));
        }
        if (ub.is_zero()) {
          degenerate = true;
          continue;
        }
        if (ub.deg() >= 1)
          for (auto& b : roots_in_field(K, ub, K)) {
            Elem d = K.neg(K.mul(K.add(L, K.mul(M, b)), iN));
            push_checked(b, d);
          }
      } else if (!K.is_zero(M)) {
        Elem b = K.neg(K.mul(L, K.inv(M)));
        Poly ud = mp_to_poly(K, mp_eval_var(K, E3, 1, b), 3);
        if (ud.is_zero()) {
          degenerate = true;
          continue;
        }
        if (ud.deg() >= 1)
          for (auto& d : roots_in_field(K, ud, K)) push_checked(b, d);
      }
      // L != 0 with M = N = 0: no solutions
    } else {
      if (E2.is_zero() || E3.is_zero()) {
        degenerate = true;
        continue;
      }
      MP rb = mp_resultant_sym(K, E2, E3, 3);
      Poly pb = mp_to_poly(K, rb, 1);
      if (pb.is_zero()) {
        degenerate = true;
        continue;
      }
      if (pb.deg() >= 1)
        for (auto& b : roots_in_field(K, pb, K)) {
          Poly g = pgcd(K, mp_to_poly(K, mp_eval_var(K, E2, 1, b), 3),
                        mp_to_poly(K, mp_eval_var(K, E3, 1, b), 3));
          if (g.deg() >= 1)
            for (auto& d : roots_in_field(K, g, K)) push_checked(b, d);
        }
    }
    for (auto& [b, d] : bd) {
      Pt4 p0{{K.one(), K.zero(), alpha, gamma}};
      Pt4 p1{{K.zero(), K.one(), b, d}};
      out.emplace_back(p0, p1);
    }
  }
}

// the six coordinate swaps taking each pivot pair to (0,1)
const int kChartPerms[6][4] = {
    {0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 2, 1}, {2, 1, 0, 3}, {3, 1, 2, 0}, {2, 3, 0, 1}};

}  // namespace

LineSolveResult find_lines_elimination(const FqPtr& F, const Form& cubic, int max_ext) {
  check(cubic.nvars == 4 && cubic.deg == 3, "find_lines: expected a cubic surface form");
  Rng rng(0x11ead5);
  for (int attempt = 0; attempt < 6; ++attempt) {
    // coordinate change: identity first, then random
    std::vector<Elem> A(16, F->zero());
    if (attempt == 0) {
      for (int i = 0; i < 4; ++i) A[i * 4 + i] = F->one();
    } else {
      while (true) {
        for (auto& x : A) x = F->rand(rng);
        Map4 m;
        std::copy(A.begin(), A.end(), m.a.begin());
        if (!F->is_zero(map_det<4>(*F, m))) break;
      }
    }
    Map4 Amat;
    std::copy(A.begin(), A.end(), Amat.a.begin());
    Form G0 = form_subst_linear(*F, cubic, A);

    bool any_degenerate = false;
    std::vector<ChartData> charts;
    std::vector<Map4> chart_maps;  // maps chart coordinates to original ones
    auto try_find = [&](int upto_chart) -> std::optional<LineSolveResult> {
      for (int m : kExtCandidates) {
        if (m > max_ext) break;
        bool relevant = false;
        for (int c = 0; c <= upto_chart; ++c)
          for (auto& f : charts[c].factors) relevant = relevant || (m % f.deg() == 0);
        if (!relevant && m != 1) continue;
        auto K = F->extend((uint32_t)m);
        Form cubicK = form_embed(*F, *K, cubic);
        std::map<std::array<Elem, 6>, Line3> found;
        for (int c = 0; c <= upto_chart; ++c) {
          std::array<MP, 4> eK;
          for (int t = 0; t < 4; ++t) eK[t] = mp_embed(*F, *K, charts[c].e[t]);
          Map4 back = map_embed<4>(*F, *K, chart_maps[c]);
          for (auto& f : charts[c].factors) {
            if (m % f.deg()) continue;
            for (auto& alpha : roots_in_field(*F, f, *K)) {
              std::vector<std::pair<Pt4, Pt4>> pts;
              bool deg2 = false;
              chart_back_substitute(*K, eK, alpha, pts, deg2);
              if (deg2) any_degenerate = true;
              for (auto& [p, q] : pts) {
                Line3 l = make_line(*K, map_apply<4>(*K, back, p), map_apply<4>(*K, back, q));
                if (!line_in_form(*K, cubicK, l)) continue;
                found.emplace(l.pluecker, l);
              }
            }
          }
        }
        if (found.size() == 27) {
          LineSolveResult res;
          res.field = K;
          for (auto& [k, l] : found) res.lines.push_back(l);
          res.complete = true;
          return res;
        }
        if (found.size() > 27) throw InvalidInput("find_lines: more than 27 lines, surface is not smooth");
      }
      return std::nullopt;
    };

    bool chart_failed = false;
    for (int c = 0; c < 6; ++c) {
      // chart permutation sigma, combined map back to original coordinates
      std::vector<Elem> P(16, F->zero());
      for (int i = 0; i < 4; ++i) P[kChartPerms[c][i] * 4 + i] = F->one();
      Form G = form_subst_linear(*F, G0, P);
      ChartData cd = build_chart(F, G, max_ext);
      if (cd.degenerate) {
        chart_failed = true;
        break;
      }
      charts.push_back(std::move(cd));
      Map4 Pm;
      std::copy(P.begin(), P.end(), Pm.a.begin());
      chart_maps.push_back(map_mul<4>(*F, Amat, Pm));
      auto res = try_find((int)charts.size() - 1);
      if (res) return *res;
    }
    if (chart_failed || any_degenerate) continue;  // retry with a random change
  }
  throw InvalidInput(
      "find_lines: did not find 27 distinct lines (surface not smooth, or max_ext too small)");
}

std::vector<Line3> all_lines_P3(const Fq& K) {
  std::vector<Line3> out;
  uint64_t q = K.order_u64();
  // reduced row echelon 2x4 matrices, one per line
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      std::vector<int> free_cols0, free_cols1;
      for (int c = i + 1; c < 4; ++c)
        if (c != j) free_cols0.push_back(c);
      for (int c = j + 1; c < 4; ++c) free_cols1.push_back(c);
      uint64_t n0 = 1, n1 = 1;
      for (size_t t = 0; t < free_cols0.size(); ++t) n0 *= q;
      for (size_t t = 0; t < free_cols1.size(); ++t) n1 *= q;
      for (uint64_t u = 0; u < n0; ++u)
        for (uint64_t v = 0; v < n1; ++v) {
          std::array<Elem, 4> r0{}, r1{};
          for (auto& x : r0) x = K.zero();
          for (auto& x : r1) x = K.zero();
          r0[i] = K.one();
          r1[j] = K.one();
          uint64_t uu = u;
          for (int c : free_cols0) {
            r0[c] = K.from_uint(uu % q);
            uu /= q;
          }
          uint64_t vv = v;
          for (int c : free_cols1) {
            r1[c] = K.from_uint(vv % q);
            vv /= q;
          }
          out.push_back(make_line(K, Pt4{r0}, Pt4{r1}));
        }
    }
  return out;
}

LineSolveResult find_lines_exhaustive(const FqPtr& F, const Form& cubic, int max_ext,
                                      uint64_t field_size_cap) {
  for (int m : kExtCandidates) {
    if (m > max_ext) break;
    auto K = F->extend((uint32_t)m);
    if (!K->order_fits_u64() || K->order_u64() > field_size_cap) break;
    Form cubicK = form_embed(*F, *K, cubic);
    std::map<std::array<Elem, 6>, Line3> found;
    for (auto& l : all_lines_P3(*K))
      if (line_in_form(*K, cubicK, l)) found.emplace(l.pluecker, l);
    if (found.size() == 27) {
      LineSolveResult res;
      res.field = K;
      for (auto& [k, l] : found) res.lines.push_back(l);
      res.complete = true;
      return res;
    }
    if (found.size() > 27) throw InvalidInput("find_lines: more than 27 lines, surface is not smooth");
  }
  throw InvalidInput("find_lines_exhaustive: 27 lines not found within the field size cap");
}

}  // namespace cubic
