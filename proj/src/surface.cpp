#include "cubic27/surface.hpp"

#include <algorithm>

namespace cubic {

CubicForm make_cubic(const FqPtr& field, std::vector<Elem> coeffs, std::string label) {
  check(coeffs.size() == 20, "cubic form needs 20 coefficients");
  CubicForm X;
  X.field = field;
  X.f = Form(4, 3);
  X.f.c = std::move(coeffs);
  X.label = std::move(label);
  if (form_is_zero(*field, X.f)) throw InvalidInput("cubic form is identically zero");
  return X;
}

CubicForm cubic_embed(const CubicForm& c, const FqPtr& K) {
  CubicForm r;
  r.field = K;
  r.f = form_embed(*c.field, *K, c.f);
  r.label = c.label;
  return r;
}

bool cubic_proportional(const CubicForm& a, const CubicForm& b) {
  check(a.field.get() == b.field.get(), "cubic_proportional: field mismatch");
  const Fq& F = *a.field;
  Form na = form_normalize(F, a.f), nb = form_normalize(F, b.f);
  return form_is_zero(F, form_sub(F, na, nb));
}

Form polar(const CubicForm& X, const std::array<Elem, 4>& y) {
  const Fq& F = *X.field;
  Form acc = form_zero(F, 4, 2);
  for (int i = 0; i < 4; ++i) {
    if (F.is_zero(y[i])) continue;
    acc = form_add(F, acc, form_scale(F, form_partial(F, X.f, i), y[i]));
  }
  return acc;
}

static std::array<std::array<Form, 4>, 4> second_partials(const CubicForm& X) {
  const Fq& F = *X.field;
  std::array<std::array<Form, 4>, 4> h;
  std::array<Form, 4> first;
  for (int i = 0; i < 4; ++i) first[i] = form_partial(F, X.f, i);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) h[i][j] = form_partial(F, first[i], j);
  return h;
}

Form hessian(const CubicForm& X) {
  const Fq& F = *X.field;
  auto h = second_partials(X);
  // determinant of a 4x4 matrix of linear forms, expanded over S4
  Form det = form_zero(F, 4, 4);
  int perm[4] = {0, 1, 2, 3};
  std::sort(perm, perm + 4);
  do {
    int sign = 1;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Form term = h[0][perm[0]];
    for (int i = 1; i < 4; ++i) term = form_mul(F, term, h[i][perm[i]]);
    if (sign < 0) term = form_scale(F, term, F.neg(F.one()));
    det = form_add(F, det, term);
  } while (std::next_permutation(perm, perm + 4));
  return det;
}

std::array<std::array<Elem, 4>, 4> hessian_matrix_at(const CubicForm& X,
                                                     const std::array<Elem, 4>& y) {
  const Fq& F = *X.field;
  auto h = second_partials(X);
  std::array<std::array<Elem, 4>, 4> m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      m[i][j] = form_eval(F, h[i][j], std::span<const Elem>(y.data(), 4));
  return m;
}

CanonicalData canonical_point(const CubicForm& X) {
  const Fq& F = *X.field;
  check(F.p == 2, "canonical_point: not characteristic 2");
  CanonicalData out;
  // v = (a123 : a023 : a013 : a012)
  auto coeff = [&](int e0, int e1, int e2, int e3) {
    std::array<uint8_t, 6> e{(uint8_t)e0, (uint8_t)e1, (uint8_t)e2, (uint8_t)e3, 0, 0};
    return X.f.c[monomial_index(4, 3, e)];
  };
  std::array<Elem, 4> v{coeff(0, 1, 1, 1), coeff(1, 0, 1, 1), coeff(1, 1, 0, 1),
                        coeff(1, 1, 1, 0)};
  bool zero = true;
  for (auto& c : v) zero = zero && F.is_zero(c);
  if (zero) {
    out.tag = 'a';
    return out;
  }
  // H(F)(y) v = 0 identically in y, and v is unique: rank of the 16x4 system is 3
  auto h = second_partials(X);
  Mat sys;
  for (int i = 0; i < 4; ++i)
    for (int ycoord = 0; ycoord < 4; ++ycoord) {
      std::vector<Elem> row(4);
      for (int j = 0; j < 4; ++j) row[j] = h[i][j].c[ycoord];  // linear form coefficient
      sys.push_back(row);
    }
  check(mat_rank(F, sys) == 3, "canonical_point: Hessian kernel is not 1-dimensional");
  for (auto& row : sys) {
    Elem s = F.zero();
    for (int j = 0; j < 4; ++j) s = F.add(s, F.mul(row[j], v[j]));
    check(F.is_zero(s), "canonical_point: H(F)(y)v != 0");
  }
  Pt4 cx = make_pt<4>(F, v);
  out.point = cx;
  // canonical plane: P_v(F) must be the square of a linear form (char 2)
  Form pv = polar(X, cx.x);
  Form plane = form_zero(F, 4, 1);
  const auto& q2 = monomials(4, 2);
  for (size_t i = 0; i < q2.size(); ++i) {
    int var = -1;
    bool sq = false;
    for (int t = 0; t < 4; ++t)
      if (q2[i][t] == 2) {
        var = t;
        sq = true;
      }
    if (sq)
      plane.c[var] = F.sqrt_char2(pv.c[i]);
    else if (!F.is_zero(pv.c[i]))
      throw InternalError("canonical_point: polar is not a perfect square");
  }
  out.plane = plane;
  Elem fval = form_eval(F, X.f, std::span<const Elem>(cx.x.data(), 4));
  if (!F.is_zero(fval)) {
    out.tag = 'b';
    return out;
  }
  // on X: distinguish (c) from (d) by the plane section being a cone with vertex c_X
  Mat pm{{plane.c[0], plane.c[1], plane.c[2], plane.c[3]}};
  auto ker = mat_kernel(F, pm);
  check(ker.size() == 3, "canonical_point: degenerate canonical plane");
  // basis of the plane with the canonical point last
  std::vector<std::vector<Elem>> basis;
  for (auto& kv : ker) basis.push_back(kv);
  // ensure cx is in the span and replace one vector by it
  {
    Mat m(4, std::vector<Elem>(3));
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 3; ++c) m[r][c] = basis[c][r];
    auto sol = mat_solve(F, m, {cx.x[0], cx.x[1], cx.x[2], cx.x[3]});
    check(sol.has_value(), "canonical_point: c_X not on its canonical plane");
    int drop = -1;
    for (int c = 0; c < 3; ++c)
      if (!F.is_zero((*sol)[c])) drop = c;
    basis.erase(basis.begin() + drop);
    basis.push_back({cx.x[0], cx.x[1], cx.x[2], cx.x[3]});
  }
  // G(s,t,u) = F(s b0 + t b1 + u c_X); (d) iff G has no u and the s,t part is squarefree
  MP G(3);
  {
    MP xf = mp_from_form(F, X.f);
    std::array<MP, 4> repl;
    for (int i = 0; i < 4; ++i) {
      MP r(3);
      for (int b = 0; b < 3; ++b) {
        MP::Key key{};
        key[b] = 1;
        mp_add_term(F, r, key, basis[b][i]);
      }
      repl[i] = r;
    }
    for (auto& [k, vcoef] : xf.t) {
      MP term = mp_const(F, 3, vcoef);
      for (int i = 0; i < 4; ++i)
        for (int e = 0; e < k[i]; ++e) term = mp_mul(F, term, repl[i]);
      G = mp_add(F, G, term);
    }
  }
  bool has_u = false;
  for (auto& [k, c] : G.t)
    if (k[2] > 0) has_u = true;
  if (!has_u) {
    // binary cubic in (s,t): three distinct lines through c_X?
    Poly c_st = mp_to_poly(F, mp_eval_var(F, G, 1, F.one()), 0);  // C(s,1)
    bool squarefree = false;
    if (c_st.deg() >= 2) squarefree = psquarefree_part(F, c_st).deg() == c_st.deg();
    if (squarefree) {
      out.tag = 'd';
      return out;
    }
  }
  out.tag = 'c';
  return out;
}

namespace {

// the four partials (or with F appended when p = 3), as forms
std::vector<Form> critical_system(const CubicForm& X) {
  const Fq& F = *X.field;
  std::vector<Form> sys;
  for (int i = 0; i < 4; ++i) sys.push_back(form_partial(F, X.f, i));
  return sys;
}

// restrict forms to the slice chart {x_j = 1, x_i = 0 for i < j}
std::vector<MP> slice_chart(const Fq& F, const std::vector<Form>& sys, int j) {
  std::vector<MP> out;
  for (auto& f : sys) {
    MP m(3);
    const auto& mons = monomials(4, f.deg);
    for (size_t i = 0; i < mons.size(); ++i) {
      if (F.is_zero(f.c[i])) continue;
      bool dead = false;
      for (int t = 0; t < j; ++t) dead = dead || mons[i][t] > 0;
      if (dead) continue;
      MP::Key k{};
      for (int t = j + 1; t < 4; ++t) k[t - j - 1] = mons[i][t];
      mp_add_term(F, m, k, f.c[i]);
    }
    out.push_back(std::move(m));
  }
  return out;
}

Pt4 chart_point(const Fq& K, int j, std::span<const Elem> x) {
  Pt4 p;
  for (int t = 0; t < 4; ++t) p.x[t] = K.zero();
  p.x[j] = K.one();
  for (int t = j + 1; t < 4; ++t) p.x[t] = x[t - j - 1];
  return p;
}

// all projective common zeros of the system over extensions <= max_ext
std::vector<std::pair<FqPtr, Pt4>> solve_projective(const FqPtr& F,
                                                    const std::vector<Form>& sys,
                                                    int max_ext) {
  std::vector<std::pair<FqPtr, Pt4>> out;
  for (int j = 0; j < 4; ++j) {
    auto eqs = slice_chart(*F, sys, j);
    bool all_zero = true;
    for (auto& e : eqs) all_zero = all_zero && e.is_zero();
    if (all_zero) throw InternalError("solve_projective: system vanishes on a whole chart");
    for (auto& sol : solve_affine(F, eqs, 3 - j, max_ext))
      out.emplace_back(sol.field, chart_point(*sol.field, j, sol.x));
  }
  return out;
}

}  // namespace

SmoothnessReport is_smooth(const CubicForm& X, int max_ext) {
  const Fq& F = *X.field;
  SmoothnessReport rep;
  auto sys = critical_system(X);
  bool partials_vanish = true;
  for (auto& f : sys) partials_vanish = partials_vanish && form_is_zero(F, f);
  if (partials_vanish) {
    // every point of X is singular; find one on a coordinate line
    rep.smooth = false;
    for (int i = 0; i < 4 && !rep.witness; ++i)
      for (int j = i + 1; j < 4 && !rep.witness; ++j) {
        // F restricted to the line x_i = s, x_j = t
        std::array<Elem, 4> p{}, q{};
        for (auto& c : p) c = F.zero();
        for (auto& c : q) c = F.zero();
        p[i] = F.one();
        q[j] = F.one();
        Line3 l = make_line(F, Pt4{p}, Pt4{q});
        // roots of F(s p + t q)
        MP bin(1);
        const auto& mons = monomials(4, 3);
        for (size_t t = 0; t < mons.size(); ++t) {
          if (F.is_zero(X.f.c[t])) continue;
          if (mons[t][i] + mons[t][j] != 3) continue;
          MP::Key k{};
          k[0] = mons[t][i];
          mp_add_term(F, bin, k, X.f.c[t]);
        }
        Poly pb = mp_to_poly(F, bin, 0);
        if (pb.is_zero()) {
          rep.witness_field = X.field;
          rep.witness = Pt4{p};
          continue;
        }
        for (int m = 1; m <= max_ext && !rep.witness; ++m) {
          auto K = F.extend((uint32_t)m);
          auto roots = roots_in_field(F, pb, *K);
          if (roots.empty()) continue;
          rep.witness_field = K;
          Pt4 w;
          for (int t = 0; t < 4; ++t) w.x[t] = K->zero();
          w.x[i] = roots[0];
          w.x[j] = K->one();
          rep.witness = pt_normalize<4>(*K, w);
        }
      }
    check(rep.witness.has_value(), "is_smooth: vanishing partials but no witness found");
    return rep;
  }
  auto crit = solve_projective(X.field, sys, max_ext);
  for (auto& [K, P] : crit) {
    Form fK = form_embed(F, *K, X.f);
    if (K->is_zero(form_eval(*K, fK, std::span<const Elem>(P.x.data(), 4)))) {
      rep.smooth = false;
      rep.witness_field = K;
      rep.witness = P;
      return rep;
    }
    if (F.p != 3)
      throw InternalError("is_smooth: critical point off X in characteristic != 3");
  }
  return rep;
}

CriticalScheme critical_locus(const CubicForm& X, int max_ext) {
  const Fq& F = *X.field;
  check(F.p == 3, "critical_locus: characteristic must divide 3");
  auto sys = critical_system(X);
  auto pts = solve_projective(X.field, sys, max_ext);
  CriticalScheme out;
  for (auto& [K, P] : pts) {
    Form fK = form_embed(F, *K, X.f);
    if (K->is_zero(form_eval(*K, fK, std::span<const Elem>(P.x.data(), 4))))
      throw InvalidInput("critical_locus: critical point lies on X (surface is singular)");
    // local multiplicity: dim of K[y]/(I + m^7) at the point, open chart x_pivot = 1
    int pivot = 0;
    while (K->is_zero(P.x[pivot])) ++pivot;
    // affine local coordinates: x_t = P_t + y_t for t != pivot
    std::vector<MP> local;
    for (auto& f : sys) {
      MP g(3);
      MP xf = mp_from_form(*K, form_embed(F, *K, f));
      std::array<MP, 4> repl;
      int yi = 0;
      for (int t = 0; t < 4; ++t) {
        MP r(3);
        mp_add_term(*K, r, MP::Key{}, P.x[t]);
        if (t != pivot) {
          MP::Key key{};
          key[yi] = 1;
          mp_add_term(*K, r, key, K->one());
          ++yi;
        }
        repl[t] = r;
      }
      for (auto& [k, vcoef] : xf.t) {
        MP term = mp_const(*K, 3, vcoef);
        for (int i = 0; i < 4; ++i)
          for (int e = 0; e < k[i]; ++e) term = mp_mul(*K, term, repl[i]);
        g = mp_add(*K, g, term);
      }
      local.push_back(std::move(g));
    }
    // row space of truncated multiples y^alpha * g inside degrees <= 6
    const int cap = 6;
    const auto idx_of = [&](const MP::Key& k) {
      int d = k[0] + k[1] + k[2];
      check(d <= cap, "critical_locus: truncation overflow");
      // dense index over all monomials of degree <= cap in 3 vars
      int base = 0;
      for (int dd = 0; dd < d; ++dd) base += (dd + 2) * (dd + 1) / 2;
      const auto& mons = monomials(3, d);
      for (size_t i = 0; i < mons.size(); ++i)
        if (mons[i][0] == k[0] && mons[i][1] == k[1] && mons[i][2] == k[2])
          return base + (int)i;
      throw InternalError("critical_locus: monomial index");
    };
    int dim = 0;
    for (int dd = 0; dd <= cap; ++dd) dim += (dd + 2) * (dd + 1) / 2;
    Mat rows;
    for (auto& g : local) {
      check(!g.t.count(MP::Key{}), "critical_locus: generator does not vanish at the point");
      for (int d = 0; d <= cap; ++d)
        for (auto& mono : monomials(3, d)) {
          std::vector<Elem> row(dim, K->zero());
          bool nonzero = false;
          for (auto& [k, v] : g.t) {
            MP::Key nk{};
            int total = 0;
            for (int t = 0; t < 3; ++t) {
              nk[t] = (uint8_t)(k[t] + mono[t]);
              total += nk[t];
            }
            if (total > cap) continue;  // truncate at degree 6
            row[idx_of(nk)] = v;
            nonzero = true;
          }
          if (nonzero) rows.push_back(std::move(row));
        }
    }
    int mult = dim - mat_rank(*K, rows);
    check(mult >= 1, "critical_locus: nonpositive multiplicity");
    out.points.push_back({K, P, mult});
  }
  // conjugate points over bigger fields are returned individually by the solver
  for (auto& cp : out.points) {
    out.total_degree += cp.mult;
    out.pattern.push_back(cp.mult);
  }
  std::sort(out.pattern.rbegin(), out.pattern.rend());
  return out;
}

}  // namespace cubic
