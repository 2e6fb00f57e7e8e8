#include "cubic27/lines.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cubic {

namespace {

// greedy-with-backtracking search for six pairwise skew lines
bool find_sixer(const std::array<std::array<uint8_t, 27>, 27>& meets, std::array<int, 6>& out) {
  std::array<int, 6> cur{};
  auto rec = [&](auto&& self, int start, int depth) -> bool {
    if (depth == 6) {
      out = cur;
      return true;
    }
    for (int x = start; x < 27; ++x) {
      bool ok = true;
      for (int t = 0; t < depth; ++t) ok = ok && !meets[cur[t]][x];
      if (!ok) continue;
      cur[depth] = x;
      if (self(self, x + 1, depth + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

}  // namespace

LineConfiguration build_configuration(const CubicForm& X, int max_ext, bool use_exhaustive) {
  auto rep = is_smooth(X, max_ext);
  if (!rep.smooth) throw InvalidInput("build_configuration: surface is singular");
  LineConfiguration cfg;
  cfg.surface = X;
  LineSolveResult sol = use_exhaustive ? find_lines_exhaustive(X.field, X.f, max_ext)
                                       : find_lines_elimination(X.field, X.f, max_ext);
  check(sol.complete && sol.lines.size() == 27, "build_configuration: need 27 lines");
  cfg.field = sol.field;
  cfg.surface_k = cubic_embed(X, cfg.field);
  cfg.lines = std::move(sol.lines);
  const Fq& K = *cfg.field;
  for (int a = 0; a < 27; ++a)
    for (int b = 0; b < 27; ++b)
      cfg.meets[a][b] = a != b && lines_meet(K, cfg.lines[a], cfg.lines[b]);
  for (int a = 0; a < 27; ++a) {
    int deg = 0;
    for (int b = 0; b < 27; ++b) deg += cfg.meets[a][b];
    check(deg == 10, "line configuration: incidence degree must be 10");
  }
  // geometric marking: a sixer by backtracking, then F/G by incidence pattern
  std::array<int, 6> sixer{};
  check(find_sixer(cfg.meets, sixer), "line configuration: no sixer found");
  cfg.to_abstract.fill(-1);
  for (int i = 0; i < 6; ++i) cfg.to_abstract[sixer[i]] = label_E(i + 1);
  for (int l = 0; l < 27; ++l) {
    if (cfg.to_abstract[l] >= 0) continue;
    std::vector<int> met;
    for (int i = 0; i < 6; ++i)
      if (cfg.meets[l][sixer[i]]) met.push_back(i + 1);
    if (met.size() == 5) {
      int missing = 21 - met[0] - met[1] - met[2] - met[3] - met[4];
      cfg.to_abstract[l] = label_G(missing);
    } else if (met.size() == 2) {
      cfg.to_abstract[l] = label_F(met[0], met[1]);
    } else {
      throw InternalError("line configuration: marking pattern broken");
    }
  }
  for (int l = 0; l < 27; ++l) {
    check(cfg.to_abstract[l] >= 0, "marking incomplete");
    cfg.from_abstract[cfg.to_abstract[l]] = l;
  }
  // full incidence isomorphism with the abstract configuration
  const auto& inc = abstract_incidence();
  for (int a = 0; a < 27; ++a)
    for (int b = 0; b < 27; ++b)
      check(cfg.meets[a][b] == inc[cfg.to_abstract[a]][cfg.to_abstract[b]],
            "marking does not match the abstract incidence");
  // geometric trios and intersection points
  for (auto& t : abstract_trios()) {
    std::array<uint8_t, 3> g{(uint8_t)cfg.from_abstract[t[0]], (uint8_t)cfg.from_abstract[t[1]],
                             (uint8_t)cfg.from_abstract[t[2]]};
    std::sort(g.begin(), g.end());
    cfg.trios.push_back(g);
  }
  std::sort(cfg.trios.begin(), cfg.trios.end());
  for (auto& row : cfg.meet_point) row.fill(-1);
  for (int a = 0; a < 27; ++a)
    for (int b = a + 1; b < 27; ++b) {
      if (!cfg.meets[a][b]) continue;
      auto pt = line_meet(K, cfg.lines[a], cfg.lines[b]);
      check(pt.has_value(), "incident lines must meet");
      cfg.meet_point[a][b] = cfg.meet_point[b][a] = (int)cfg.points.size();
      cfg.points.push_back(*pt);
    }
  return cfg;
}

bool line_inseparable(const LineConfiguration& cfg, int line_idx) {
  const Fq& K = *cfg.field;
  const Line3& l = cfg.lines[line_idx];
  // complete p, q to a basis of K^4
  Mat m{{l.p.x.begin(), l.p.x.end()}, {l.q.x.begin(), l.q.x.end()}};
  std::vector<std::vector<Elem>> w;
  for (int i = 0; i < 4 && w.size() < 2; ++i) {
    std::vector<Elem> cand(4, K.zero());
    cand[i] = K.one();
    Mat test = m;
    for (auto& r : w) test.push_back(r);
    test.push_back(cand);
    if (mat_rank(K, test) == (int)test.size()) w.push_back(cand);
  }
  check(w.size() == 2, "line_inseparable: basis completion failed");
  // G(s,t,alpha,beta) = F(s p + t q + alpha w0 + beta w1); A = dG/dalpha|0, B = dG/dbeta|0
  MP G(4);
  {
    MP xf = mp_from_form(K, cfg.surface_k.f);
    std::array<MP, 4> repl;
    for (int i = 0; i < 4; ++i) {
      MP r(4);
      MP::Key ks{}, kt{}, ka{}, kb{};
      ks[0] = kt[1] = ka[2] = kb[3] = 1;
      mp_add_term(K, r, ks, l.p.x[i]);
      mp_add_term(K, r, kt, l.q.x[i]);
      mp_add_term(K, r, ka, w[0][i]);
      mp_add_term(K, r, kb, w[1][i]);
      repl[i] = r;
    }
    for (auto& [k, vcoef] : xf.t) {
      MP term = mp_const(K, 4, vcoef);
      for (int i = 0; i < 4; ++i)
        for (int e = 0; e < k[i]; ++e) term = mp_mul(K, term, repl[i]);
      G = mp_add(K, G, term);
    }
  }
  // quadratic coefficients of alpha and beta, as binary forms in (s,t)
  MP A(2), B(2);
  for (auto& [k, v] : G.t) {
    if (k[2] == 1 && k[3] == 0) {
      MP::Key nk{};
      nk[0] = k[0];
      nk[1] = k[1];
      mp_add_term(K, A, nk, v);
    } else if (k[2] == 0 && k[3] == 1) {
      MP::Key nk{};
      nk[0] = k[0];
      nk[1] = k[1];
      mp_add_term(K, B, nk, v);
    }
  }
  check(!A.is_zero() && !B.is_zero(), "line_inseparable: degenerate pencil restriction");
  // no base point: Res(A, B) != 0 (else the surface would be singular)
  {
    auto coeffs = [&](const MP& q) {
      std::vector<Elem> c(3, K.zero());
      for (auto& [k, v] : q.t) c[k[1]] = v;  // by t-degree 0..2
      return c;
    };
    check(!K.is_zero(sylvester_det(K, coeffs(A), coeffs(B))),
          "line_inseparable: pencil restriction has a base point");
  }
  // jacobian criterion for separability of (A : B)
  auto d = [&](const MP& q, int var) {
    MP r(2);
    for (auto& [k, v] : q.t) {
      if (!k[var]) continue;
      MP::Key nk = k;
      nk[var]--;
      mp_add_term(K, r, nk, K.mul(v, K.from_int(k[var])));
    }
    return r;
  };
  MP jac = mp_sub(K, mp_mul(K, d(A, 0), d(B, 1)), mp_mul(K, d(A, 1), d(B, 0)));
  return jac.is_zero();
}

EckardtGeometry eckardt_points(const LineConfiguration& cfg) {
  const Fq& K = *cfg.field;
  EckardtGeometry geo;
  geo.per_line.fill(0);
  for (size_t t = 0; t < cfg.trios.size(); ++t) {
    auto [a, b, c] = cfg.trios[t];
    int pid = cfg.meet_point[a][b];
    check(pid >= 0, "trio lines must meet");
    const Pt4& P = cfg.points[pid];
    if (!on_line(K, cfg.lines[c], P)) continue;
    geo.trio_ids.push_back((int)t);
    geo.points.push_back(P);
    geo.per_line[a]++;
    geo.per_line[b]++;
    geo.per_line[c]++;
  }
  // eckardt points are pairwise distinct (each lies on exactly its three lines)
  for (size_t i = 0; i < geo.points.size(); ++i)
    for (size_t j = i + 1; j < geo.points.size(); ++j)
      check(!(geo.points[i] == geo.points[j]), "distinct trios share an Eckardt point");
  // per-line counts and separability
  for (int l = 0; l < 27; ++l) {
    geo.inseparable[l] = line_inseparable(cfg, l);
    if (K.p == 2) {
      check(geo.per_line[l] == 0 || geo.per_line[l] == 1 || geo.per_line[l] == 5,
            "per-line Eckardt count must be 0, 1 or 5 in char 2");
      check(geo.inseparable[l] == (geo.per_line[l] == 5),
            "inseparable iff the line carries 5 Eckardt points");
    } else {
      check(geo.per_line[l] <= 2, "per-line Eckardt count must be 0, 1 or 2");
      check(!geo.inseparable[l], "lines are separable away from characteristic 2");
    }
  }
  // lines through two Eckardt points: exceptional ones and trihedral ones
  std::set<int> exc;
  std::map<std::array<Elem, 6>, TrihedralLine> tri;
  for (size_t i = 0; i < geo.points.size(); ++i)
    for (size_t j = i + 1; j < geo.points.size(); ++j) {
      Line3 span = make_line(K, geo.points[i], geo.points[j]);
      int match = -1;
      for (int l = 0; l < 27; ++l)
        if (line_eq(span, cfg.lines[l])) match = l;
      if (match >= 0) {
        exc.insert(match);
        continue;
      }
      auto it = tri.find(span.pluecker);
      if (it == tri.end()) {
        TrihedralLine tl;
        tl.line = span;
        tl.eckardt = {(int)i, (int)j};
        tri.emplace(span.pluecker, std::move(tl));
      } else {
        auto& ids = it->second.eckardt;
        if (std::find(ids.begin(), ids.end(), (int)i) == ids.end()) ids.push_back((int)i);
        if (std::find(ids.begin(), ids.end(), (int)j) == ids.end()) ids.push_back((int)j);
      }
    }
  geo.exc_through_two.assign(exc.begin(), exc.end());
  for (auto& [key, tl] : tri) {
    // a line off the surface through two Eckardt points contains exactly three
    check(tl.eckardt.size() == 3, "trihedral line must contain exactly 3 Eckardt points");
    for (int e : tl.eckardt) check(on_line(K, tl.line, geo.points[e]), "trihedral incidence");
    std::sort(tl.eckardt.begin(), tl.eckardt.end());
    geo.trihedral.push_back(tl);
  }
  // span of the Eckardt points
  if (geo.points.empty()) {
    geo.span_dim = -1;
  } else {
    Mat m;
    for (auto& P : geo.points) m.push_back({P.x.begin(), P.x.end()});
    geo.span_dim = mat_rank(K, m) - 1;
  }
  // match against the configuration table
  int matches = 0;
  for (auto& row : eckardt_configs()) {
    if (!char_cond_matches(row.cond, K.p)) continue;
    if (row.span == geo.span_dim && row.n_points == (int)geo.points.size() &&
        row.n_lines == (int)geo.exc_through_two.size() &&
        row.n_trihedral == (int)geo.trihedral.size()) {
      geo.config_tag = row.name;
      ++matches;
    }
  }
  check(matches == 1, "Eckardt data does not match exactly one configuration row");
  return geo;
}

bool hesse_check(const LineConfiguration& cfg, const EckardtGeometry& geom) {
  if (geom.config_tag != "C9")
    throw InvalidInput("hesse_check: configuration tag must be C9");
  const Fq& K = *cfg.field;
  check(geom.points.size() == 9 && geom.trihedral.size() == 12, "C9 shape");
  for (auto& tl : geom.trihedral)
    if (tl.eckardt.size() != 3) return false;
  for (size_t i = 0; i < geom.points.size(); ++i) {
    int on = 0;
    for (auto& tl : geom.trihedral)
      if (on_line(K, tl.line, geom.points[i])) ++on;
    if (on != 4) return false;
  }
  return true;
}

std::array<int, 16> blowdown_model(const LineConfiguration& cfg, int ell) {
  // the 16 lines disjoint from ell
  std::vector<int> disj;
  for (int l = 0; l < 27; ++l)
    if (l != ell && !cfg.meets[ell][l]) disj.push_back(l);
  check(disj.size() == 16, "blow-down: expected 16 disjoint lines");
  std::array<std::array<uint8_t, 16>, 16> meets{};
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) meets[a][b] = a != b && cfg.meets[disj[a]][disj[b]];
  auto model = d5_find_model(meets);
  check(model.has_value(), "blow-down: no valid model marking found");
  std::array<int, 16> out;
  for (int i = 0; i < 16; ++i) out[i] = disj[(*model)[i]];
  return out;
}

}  // namespace cubic
