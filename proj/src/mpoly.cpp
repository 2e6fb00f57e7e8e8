#include "cubic27/mpoly.hpp"

#include <algorithm>

namespace cubic {

Form::Form(int n, int d) : nvars(n), deg(d) { c.resize(monomials(n, d).size()); }

static void gen_monomials(int nvars, int deg, int pos, std::array<uint8_t, 6>& cur, int left,
                          std::vector<std::array<uint8_t, 6>>& out) {
  if (pos == nvars - 1) {
    cur[pos] = (uint8_t)left;
    out.push_back(cur);
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur[pos] = (uint8_t)e;
    gen_monomials(nvars, deg, pos + 1, cur, left - e, out);
  }
}

const std::vector<std::array<uint8_t, 6>>& monomials(int nvars, int deg) {
  static std::map<std::pair<int, int>, std::vector<std::array<uint8_t, 6>>> cache;
  auto key = std::make_pair(nvars, deg);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::array<uint8_t, 6>> out;
  std::array<uint8_t, 6> cur{};
  gen_monomials(nvars, deg, 0, cur, deg, out);
  return cache.emplace(key, std::move(out)).first->second;
}

int monomial_index(int nvars, int deg, const std::array<uint8_t, 6>& e) {
  const auto& tbl = monomials(nvars, deg);
  for (size_t i = 0; i < tbl.size(); ++i)
    if (tbl[i] == e) return (int)i;
  throw InternalError("monomial_index: exponent not found");
}

Form form_zero(const Fq& F, int nvars, int deg) {
  Form f(nvars, deg);
  for (auto& x : f.c) x = F.zero();
  return f;
}

bool form_is_zero(const Fq& F, const Form& f) {
  for (auto& x : f.c)
    if (!F.is_zero(x)) return false;
  return true;
}

Form form_add(const Fq& F, const Form& a, const Form& b) {
  check(a.nvars == b.nvars && a.deg == b.deg, "form_add: shape mismatch");
  Form r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.add(r.c[i], b.c[i]);
  return r;
}

Form form_sub(const Fq& F, const Form& a, const Form& b) {
  check(a.nvars == b.nvars && a.deg == b.deg, "form_sub: shape mismatch");
  Form r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.sub(r.c[i], b.c[i]);
  return r;
}

Form form_scale(const Fq& F, const Form& a, const Elem& s) {
  Form r = a;
  for (auto& x : r.c) x = F.mul(x, s);
  return r;
}

Form form_mul(const Fq& F, const Form& a, const Form& b) {
  check(a.nvars == b.nvars, "form_mul: nvars mismatch");
  Form r = form_zero(F, a.nvars, a.deg + b.deg);
  const auto& ma = monomials(a.nvars, a.deg);
  const auto& mb = monomials(b.nvars, b.deg);
  const auto& mr = monomials(a.nvars, a.deg + b.deg);
  // index targets once
  for (size_t i = 0; i < ma.size(); ++i) {
    if (F.is_zero(a.c[i])) continue;
    for (size_t j = 0; j < mb.size(); ++j) {
      if (F.is_zero(b.c[j])) continue;
      std::array<uint8_t, 6> e{};
      for (int v = 0; v < a.nvars; ++v) e[v] = (uint8_t)(ma[i][v] + mb[j][v]);
      auto it = std::lower_bound(mr.begin(), mr.end(), e,
                                 [](const auto& x, const auto& y) { return x > y; });
      check(it != mr.end() && *it == e, "form_mul: index lookup failed");
      size_t idx = (size_t)(it - mr.begin());
      r.c[idx] = F.add(r.c[idx], F.mul(a.c[i], b.c[j]));
    }
  }
  return r;
}

Form form_partial(const Fq& F, const Form& a, int var) {
  Form r = form_zero(F, a.nvars, a.deg - 1);
  const auto& ma = monomials(a.nvars, a.deg);
  const auto& mr = monomials(a.nvars, a.deg - 1);
  for (size_t i = 0; i < ma.size(); ++i) {
    if (ma[i][var] == 0 || F.is_zero(a.c[i])) continue;
    std::array<uint8_t, 6> e = ma[i];
    e[var]--;
    auto it = std::lower_bound(mr.begin(), mr.end(), e,
                               [](const auto& x, const auto& y) { return x > y; });
    size_t idx = (size_t)(it - mr.begin());
    r.c[idx] = F.add(r.c[idx], F.mul(a.c[i], F.from_int(ma[i][var])));
  }
  return r;
}

Elem form_eval(const Fq& F, const Form& a, std::span<const Elem> x) {
  check((int)x.size() == a.nvars, "form_eval: wrong point size");
  const auto& ma = monomials(a.nvars, a.deg);
  Elem acc = F.zero();
  for (size_t i = 0; i < ma.size(); ++i) {
    if (F.is_zero(a.c[i])) continue;
    Elem t = a.c[i];
    for (int v = 0; v < a.nvars; ++v)
      for (int e = 0; e < ma[i][v]; ++e) t = F.mul(t, x[v]);
    acc = F.add(acc, t);
  }
  return acc;
}

Form form_subst_linear(const Fq& F, const Form& a, std::span<const Elem> m) {
  int n = a.nvars;
  check((int)m.size() == n * n, "form_subst_linear: matrix size");
  // images of the variables as degree-1 forms
  std::vector<Form> lin(n, form_zero(F, n, 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) lin[i].c[j] = m[(size_t)i * n + j];
  Form r = form_zero(F, n, a.deg);
  const auto& ma = monomials(n, a.deg);
  for (size_t i = 0; i < ma.size(); ++i) {
    if (F.is_zero(a.c[i])) continue;
    Form prod = form_zero(F, n, 0);
    prod.c[0] = a.c[i];
    for (int v = 0; v < n; ++v)
      for (int e = 0; e < ma[i][v]; ++e) prod = form_mul(F, prod, lin[v]);
    r = form_add(F, r, prod);
  }
  return r;
}

Form form_normalize(const Fq& F, const Form& a) {
  for (auto& x : a.c) {
    if (!F.is_zero(x)) return form_scale(F, a, F.inv(x));
  }
  return a;
}

Form form_embed(const Fq& from, const Fq& to, const Form& a) {
  Form r = a;
  for (auto& x : r.c) x = to.embed_from(from, x);
  return r;
}

// --- MP ---

int MP::deg_in(int var) const {
  int d = 0;
  for (auto& [k, v] : t) d = std::max(d, (int)k[var]);
  return d;
}

int MP::total_deg() const {
  int d = -1;
  for (auto& [k, v] : t) {
    int s = 0;
    for (int i = 0; i < nvars; ++i) s += k[i];
    d = std::max(d, s);
  }
  return d;
}

MP mp_const(const Fq& F, int nvars, const Elem& a) {
  MP p(nvars);
  if (!F.is_zero(a)) p.t[{}] = a;
  return p;
}

MP mp_var(const Fq& F, int nvars, int var) {
  MP p(nvars);
  MP::Key k{};
  k[var] = 1;
  p.t[k] = F.one();
  return p;
}

void mp_add_term(const Fq& F, MP& p, const MP::Key& k, const Elem& v) {
  if (F.is_zero(v)) return;
  auto it = p.t.find(k);
  if (it == p.t.end()) {
    p.t[k] = v;
    return;
  }
  it->second = F.add(it->second, v);
  if (F.is_zero(it->second)) p.t.erase(it);
}

MP mp_add(const Fq& F, const MP& a, const MP& b) {
  MP r = a;
  for (auto& [k, v] : b.t) mp_add_term(F, r, k, v);
  return r;
}

MP mp_sub(const Fq& F, const MP& a, const MP& b) {
  MP r = a;
  for (auto& [k, v] : b.t) mp_add_term(F, r, k, F.neg(v));
  return r;
}

MP mp_mul(const Fq& F, const MP& a, const MP& b) {
  MP r(a.nvars);
  for (auto& [ka, va] : a.t)
    for (auto& [kb, vb] : b.t) {
      MP::Key k{};
      for (int i = 0; i < 6; ++i) k[i] = (uint8_t)(ka[i] + kb[i]);
      mp_add_term(F, r, k, F.mul(va, vb));
    }
  return r;
}

MP mp_scale(const Fq& F, const MP& a, const Elem& s) {
  MP r(a.nvars);
  if (F.is_zero(s)) return r;
  for (auto& [k, v] : a.t) r.t[k] = F.mul(v, s);
  return r;
}

MP mp_eval_var(const Fq& F, const MP& a, int var, const Elem& value) {
  MP r(a.nvars);
  for (auto& [k, v] : a.t) {
    Elem c = v;
    for (int e = 0; e < k[var]; ++e) c = F.mul(c, value);
    MP::Key nk = k;
    nk[var] = 0;
    mp_add_term(F, r, nk, c);
  }
  return r;
}

Elem mp_eval(const Fq& F, const MP& a, std::span<const Elem> x) {
  Elem acc = F.zero();
  for (auto& [k, v] : a.t) {
    Elem t = v;
    for (int i = 0; i < a.nvars; ++i)
      for (int e = 0; e < k[i]; ++e) t = F.mul(t, x[i]);
    acc = F.add(acc, t);
  }
  return acc;
}

std::vector<MP> mp_collect(const Fq& F, const MP& a, int var) {
  std::vector<MP> out(a.deg_in(var) + 1, MP(a.nvars));
  for (auto& [k, v] : a.t) {
    MP::Key nk = k;
    int d = k[var];
    nk[var] = 0;
    mp_add_term(F, out[d], nk, v);
  }
  while (out.size() > 1 && out.back().is_zero()) out.pop_back();
  return out;
}

MP mp_embed(const Fq& from, const Fq& to, const MP& a) {
  MP r(a.nvars);
  for (auto& [k, v] : a.t) {
    Elem e = to.embed_from(from, v);
    if (!to.is_zero(e)) r.t[k] = e;
  }
  return r;
}

MP mp_from_form(const Fq& F, const Form& f) {
  MP r(f.nvars);
  const auto& m = monomials(f.nvars, f.deg);
  for (size_t i = 0; i < m.size(); ++i) {
    if (F.is_zero(f.c[i])) continue;
    MP::Key k{};
    for (int v = 0; v < f.nvars; ++v) k[v] = m[i][v];
    r.t[k] = f.c[i];
  }
  return r;
}

}  // namespace cubic
