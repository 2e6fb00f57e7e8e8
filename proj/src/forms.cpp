#include "cubic27/forms.hpp"

#include <algorithm>

#include "cubic27/autgrp.hpp"

namespace cubic {

namespace {

// small algebra of 4-variable forms for writing the normal forms verbatim
struct FB {
  const Fq& F;
  Form var(int i) const {
    Form l = form_zero(F, 4, 1);
    l.c[i] = F.one();
    return l;
  }
  Form lin(std::initializer_list<std::pair<int, Elem>> terms) const {
    Form l = form_zero(F, 4, 1);
    for (auto& [i, c] : terms) l.c[i] = F.add(l.c[i], c);
    return l;
  }
  Form mul(const Form& a, const Form& b) const { return form_mul(F, a, b); }
  Form mul(const Form& a, const Form& b, const Form& c) const {
    return form_mul(F, form_mul(F, a, b), c);
  }
  Form add(Form a, const Form& b) const { return form_add(F, a, b); }
  Form scale(const Form& a, const Elem& s) const { return form_scale(F, a, s); }
};

Form fermat_form(const Fq& F) {
  FB fb{F};
  Form f = form_zero(F, 4, 3);
  for (int i = 0; i < 4; ++i) f = fb.add(f, fb.mul(fb.var(i), fb.var(i), fb.var(i)));
  return f;
}

Form sigma3_form(const Fq& F) {
  FB fb{F};
  Form f = form_zero(F, 4, 3);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k) f = fb.add(f, fb.mul(fb.var(i), fb.var(j), fb.var(k)));
  return f;
}

}  // namespace

const std::vector<NormalFormSpec>& normal_form_specs() {
  static const std::vector<NormalFormSpec> specs = {
      {"2A", "!=2", 3}, {"2A", "=2", 3},  {"2B", "!=2", 2},   {"2B", "=2", 2},
      {"3A", "!=3", 1}, {"3A", "=3", 1},  {"3C", "!=3", 0},   {"3D", "!=3", 2},
      {"3D", "=3", 2},  {"4A", "!=2", 1}, {"4B", "any", 1},   {"5A", "!=2,5", 0},
      {"6E", "!=2,3", 1}, {"6E", "=3", 1}, {"8A", "!=2", 0},  {"12A", "!=2,3", 1},
  };
  return specs;
}

CubicForm generate_normal_form(const std::string& stratum, const FqPtr& Fp,
                               const std::vector<Elem>& params) {
  const Fq& F = *Fp;
  const NormalFormSpec* spec = nullptr;
  for (auto& s : normal_form_specs())
    if (s.stratum == stratum && char_cond_matches(s.cond, F.p)) spec = &s;
  if (!spec)
    throw InvalidInput("no normal form for stratum " + stratum + " in characteristic " +
                       std::to_string(F.p));
  check((int)params.size() == spec->arity, "wrong number of normal form parameters");
  FB fb{F};
  Form f = form_zero(F, 4, 3);
  Form x0 = fb.var(0), x1 = fb.var(1), x2 = fb.var(2), x3 = fb.var(3);
  Elem one = F.one();
  if (stratum == "2A" && F.p != 2) {
    // (x0+x1)(x0x1 + c0 x2^2 + c1 x3^2 + c2 x2x3) + x2x3(x2+x3)
    Form quad = fb.add(fb.mul(x0, x1),
                       fb.add(fb.scale(fb.mul(x2, x2), params[0]),
                              fb.add(fb.scale(fb.mul(x3, x3), params[1]),
                                     fb.scale(fb.mul(x2, x3), params[2]))));
    f = fb.add(fb.mul(fb.add(x0, x1), quad), fb.mul(x2, x3, fb.add(x2, x3)));
  } else if (stratum == "2A") {
    // x0x1x2 + (x0+x1)^2 x3 + c0 (x0+x1) x3^2 + c1 x2^3 + c2 x2 x3^2 + x3^3
    Form s = fb.add(x0, x1);
    f = fb.add(fb.mul(x0, x1, x2), fb.mul(s, s, x3));
    f = fb.add(f, fb.scale(fb.mul(s, x3, x3), params[0]));
    f = fb.add(f, fb.scale(fb.mul(x2, x2, x2), params[1]));
    f = fb.add(f, fb.scale(fb.mul(x2, x3, x3), params[2]));
    f = fb.add(f, fb.mul(x3, x3, x3));
  } else if (stratum == "2B" && F.p != 2) {
    // x0^2 (x2 + c0 x3) + x1^2 (c1 x2 + x3) + x2 x3 (x2 + x3)
    f = fb.add(fb.mul(x0, x0, fb.lin({{2, one}, {3, params[0]}})),
               fb.add(fb.mul(x1, x1, fb.lin({{2, params[1]}, {3, one}})),
                      fb.mul(x2, x3, fb.add(x2, x3))));
  } else if (stratum == "2B") {
    // Fermat + c0 x2x3(x0+x1) + c1 x0x1(x2+x3)
    f = fermat_form(F);
    f = fb.add(f, fb.scale(fb.mul(x2, x3, fb.add(x0, x1)), params[0]));
    f = fb.add(f, fb.scale(fb.mul(x0, x1, fb.add(x2, x3)), params[1]));
  } else if (stratum == "3A" && F.p != 3) {
    f = fb.add(fermat_form(F), fb.scale(fb.mul(x0, x1, x2), params[0]));
  } else if (stratum == "3A") {
    // x0^3 + x0 x3^2 - x1 x2^2 + x1^2 x3 + c x1 x3^2
    f = fb.add(fb.mul(x0, x0, x0), fb.mul(x0, x3, x3));
    f = fb.add(f, fb.scale(fb.mul(x1, x2, x2), F.neg(one)));
    f = fb.add(f, fb.mul(x1, x1, x3));
    f = fb.add(f, fb.scale(fb.mul(x1, x3, x3), params[0]));
  } else if (stratum == "3C") {
    f = fermat_form(F);
  } else if (stratum == "3D" && F.p != 3) {
    f = fb.add(fermat_form(F), fb.scale(fb.mul(x0, x1, x2), params[0]));
    f = fb.add(f, fb.scale(fb.mul(fb.add(fb.add(x0, x1), x2), x3, x3), params[1]));
  } else if (stratum == "3D") {
    // (c0(x0+x1+x2) + c1 x3)(x0x1+x0x2+x1x2) + x0x1x2 + (x0+x1+x2)x3^2
    Form s1 = fb.add(fb.add(x0, x1), x2);
    Form s2 = fb.add(fb.add(fb.mul(x0, x1), fb.mul(x0, x2)), fb.mul(x1, x2));
    Form l = fb.add(fb.scale(s1, params[0]), fb.scale(x3, params[1]));
    f = fb.add(fb.mul(l, s2), fb.add(fb.mul(x0, x1, x2), fb.mul(s1, fb.mul(x3, x3))));
  } else if (stratum == "4A") {
    // x3^2 x2 + x2^2 x0 + x1 (x1 - x0)(x1 - c x0)
    f = fb.add(fb.mul(x3, x3, x2), fb.mul(x2, x2, x0));
    Form l1 = fb.add(x1, fb.scale(x0, F.neg(one)));
    Form l2 = fb.add(x1, fb.scale(x0, F.neg(params[0])));
    f = fb.add(f, fb.mul(x1, l1, l2));
  } else if (stratum == "4B") {
    f = fb.add(fermat_form(F), fb.scale(sigma3_form(F), params[0]));
  } else if (stratum == "5A") {
    // sigma1 sigma2 - sigma3
    Form s1 = fb.add(fb.add(x0, x1), fb.add(x2, x3));
    Form s2 = form_zero(F, 4, 2);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) s2 = fb.add(s2, fb.mul(fb.var(i), fb.var(j)));
    f = fb.add(fb.mul(s1, s2), fb.scale(sigma3_form(F), F.neg(one)));
  } else if (stratum == "6E" && F.p != 3) {
    for (int i = 0; i < 3; ++i) f = fb.add(f, fb.mul(fb.var(i), fb.var(i), fb.var(i)));
    f = fb.add(f, fb.mul(fb.add(fb.add(x0, x1), x2), fb.mul(x3, x3)));
    f = fb.add(f, fb.scale(fb.mul(x0, x1, x2), params[0]));
  } else if (stratum == "6E") {
    Form s1 = fb.add(fb.add(x0, x1), x2);
    Form s2 = fb.add(fb.add(fb.mul(x0, x1), fb.mul(x0, x2)), fb.mul(x1, x2));
    f = fb.add(fb.scale(fb.mul(s1, s2), params[0]),
               fb.add(fb.mul(x0, x1, x2), fb.mul(s1, fb.mul(x3, x3))));
  } else if (stratum == "8A") {
    f = fb.add(fb.mul(x0, x0, x0), fb.mul(x0, x3, x3));
    f = fb.add(f, fb.scale(fb.mul(x1, x2, x2), F.neg(one)));
    f = fb.add(f, fb.mul(x1, x1, x3));
  } else if (stratum == "12A") {
    const Elem& sqrt3 = params[0];
    check(F.eq(F.mul(sqrt3, sqrt3), F.from_int(3)),
          "12A parameter must be a square root of 3");
    Elem lambda = F.mul(F.from_int(3), F.sub(sqrt3, one));
    f = fb.add(fermat_form(F), fb.scale(fb.mul(x0, x1, x2), lambda));
  } else {
    throw InvalidInput("unknown stratum " + stratum);
  }
  CubicForm X;
  X.field = Fp;
  X.f = f;
  X.label = stratum + "-normal-form";
  return X;
}

CubicForm sylvester_form(const FqPtr& Fp, const std::array<Elem, 5>& c) {
  const Fq& F = *Fp;
  if (F.p == 2 || F.p == 3) throw InvalidInput("Sylvester form needs characteristic != 2,3");
  for (auto& ci : c)
    if (F.is_zero(ci)) throw InvalidInput("Sylvester parameters must be nonzero");
  FB fb{F};
  Form f = form_zero(F, 4, 3);
  for (int i = 0; i < 4; ++i)
    f = fb.add(f, fb.scale(fb.mul(fb.var(i), fb.var(i), fb.var(i)), c[i]));
  // x4 = -(x0+x1+x2+x3)
  Form s = form_zero(F, 4, 1);
  for (int i = 0; i < 4; ++i) s.c[i] = F.neg(F.one());
  f = fb.add(f, fb.scale(fb.mul(s, s, s), c[4]));
  CubicForm X;
  X.field = Fp;
  X.f = f;
  X.label = "sylvester";
  return X;
}

CubicForm emch_form(const FqPtr& Fp, const Elem& a012, const Elem& a013, const Elem& a023,
                    const Elem& a123) {
  const Fq& F = *Fp;
  FB fb{F};
  Form f = fermat_form(F);
  auto x = [&](int i) { return fb.var(i); };
  f = fb.add(f, fb.scale(fb.mul(x(0), x(1), x(2)), a012));
  f = fb.add(f, fb.scale(fb.mul(x(0), x(1), x(3)), a013));
  f = fb.add(f, fb.scale(fb.mul(x(0), x(2), x(3)), a023));
  f = fb.add(f, fb.scale(fb.mul(x(1), x(2), x(3)), a123));
  CubicForm X;
  X.field = Fp;
  X.f = f;
  X.label = "emch";
  return X;
}

std::pair<FqPtr, Elem> root_of_unity(const FqPtr& F, int n) {
  check(n >= 1 && F->p % n != 0, "root_of_unity: n divisible by characteristic");
  // smallest d with n | p^(k d) - 1
  for (uint32_t d = 1; d <= 24; ++d) {
    uint64_t qm = 1;
    bool ok = false;
    // p^(k*d) mod n
    uint64_t m = 1;
    for (uint32_t t = 0; t < F->k * d; ++t) m = m * F->p % (uint64_t)n;
    ok = m == 1;
    (void)qm;
    if (!ok) continue;
    auto K = F->extend(d);
    // primitive n-th root: root of the n-th cyclotomic via x^n - 1 factored
    Poly xn;
    xn.c.assign(n + 1, K->zero());
    xn.c[0] = K->neg(K->one());
    xn.c[n] = K->one();
    auto roots = roots_in_field(*K, xn, *K);
    for (auto& r : roots) {
      // primitive: r^m != 1 for proper divisors m of n
      bool prim = true;
      for (int m2 = 1; m2 < n; ++m2)
        if (n % m2 == 0 && K->eq(K->pow_u64(r, (uint64_t)m2), K->one())) prim = false;
      if (prim) return {K, r};
    }
  }
  throw InternalError("root_of_unity: no primitive root found");
}

FormSymmetry normal_form_symmetry(const std::string& stratum, const CubicForm& X) {
  const FqPtr& F = X.field;
  uint32_t p = F->p;
  auto perm_matrix = [&](const FqPtr& K, std::array<int, 4> img) {
    Map4 m;
    for (int i = 0; i < 16; ++i) m.a[i] = K->zero();
    for (int j = 0; j < 4; ++j) m.a[img[j] * 4 + j] = K->one();
    return m;
  };
  if (stratum == "2A" || (stratum == "2B" && p == 2)) {
    // swap x0,x1 (2B char 2 also swaps x2,x3)
    std::array<int, 4> img = stratum == "2A" ? std::array<int, 4>{1, 0, 2, 3}
                                             : std::array<int, 4>{1, 0, 3, 2};
    return {F, perm_matrix(F, img)};
  }
  if (stratum == "2B") {
    Map4 m = map_identity<4>(*F);
    m.a[0] = F->neg(F->one());
    m.a[5] = F->neg(F->one());
    return {F, map_normalize<4>(*F, m)};
  }
  if (stratum == "3A" && p != 3) {
    auto [K, zeta] = root_of_unity(F, 3);
    Map4 m = map_identity<4>(*K);
    m.a[15] = zeta;
    return {K, map_normalize<4>(*K, m)};
  }
  if (stratum == "3A") {
    // x0 -> x0 + i x3 with i^2 = -1
    Poly f{{F->one(), F->zero(), F->one()}};
    auto K = F->extend(F->p % 4 == 3 || F->p == 2 ? 2u : 1u);
    auto roots = roots_in_field(*F, f, *K);
    check(!roots.empty(), "3A (p=3) symmetry needs i with i^2 = -1");
    Map4 m = map_identity<4>(*K);
    m.a[0 * 4 + 3] = roots[0];
    return {K, map_normalize<4>(*K, m)};
  }
  if (stratum == "3C" || stratum == "4B")
    return {F, perm_matrix(F, {1, 2, 3, 0})};  // 4-cycle inside S4
  if (stratum == "3D") return {F, perm_matrix(F, {1, 2, 0, 3})};
  if (stratum == "4A") {
    auto [K, i] = root_of_unity(F, 4);
    Map4 m = map_identity<4>(*K);
    m.a[2 * 4 + 2] = K->neg(K->one());
    m.a[3 * 4 + 3] = i;
    return {K, map_normalize<4>(*K, m)};
  }
  if (stratum == "5A") {
    // the order-5 shift of x0..x4 restricted to the hyperplane x4 = -(x0+..+x3)
    Map4 m;
    for (int i = 0; i < 16; ++i) m.a[i] = F->zero();
    m.a[0 * 4 + 1] = F->one();
    m.a[1 * 4 + 2] = F->one();
    m.a[2 * 4 + 3] = F->one();
    for (int j = 0; j < 4; ++j) m.a[3 * 4 + j] = F->neg(F->one());
    return {F, map_normalize<4>(*F, m)};
  }
  if (stratum == "6E") {
    Map4 m;
    for (int i = 0; i < 16; ++i) m.a[i] = F->zero();
    m.a[1 * 4 + 0] = F->one();
    m.a[2 * 4 + 1] = F->one();
    m.a[0 * 4 + 2] = F->one();
    m.a[3 * 4 + 3] = F->neg(F->one());
    return {F, map_normalize<4>(*F, m)};
  }
  if (stratum == "8A") {
    auto [K, eps] = root_of_unity(F, 8);
    Map4 m = map_identity<4>(*K);
    m.a[1 * 4 + 1] = K->pow_u64(eps, 6);
    m.a[2 * 4 + 2] = eps;
    m.a[3 * 4 + 3] = K->pow_u64(eps, 4);
    return {K, map_normalize<4>(*K, m)};
  }
  if (stratum == "12A") {
    auto [K, zeta] = root_of_unity(F, 3);
    Elem one = K->one(), zeta2 = K->mul(zeta, zeta);
    Map4 m;
    for (int i = 0; i < 16; ++i) m.a[i] = K->zero();
    m.a[0] = m.a[1] = m.a[2] = one;
    m.a[4] = one;
    m.a[5] = zeta;
    m.a[6] = zeta2;
    m.a[8] = one;
    m.a[9] = zeta2;
    m.a[10] = zeta;
    // bottom-right entry sqrt(3), recovered from lambda = 3(sqrt3 - 1);
    // the overall 1/sqrt3 factor is projective
    std::array<uint8_t, 6> e{1, 1, 1, 0, 0, 0};
    Elem lambda = X.f.c[monomial_index(4, 3, e)];
    Elem sqrt3 = K->add(K->mul(K->embed_from(*F, lambda), K->inv(K->from_int(3))), one);
    check(K->eq(K->mul(sqrt3, sqrt3), K->from_int(3)), "12A symmetry: lambda inconsistent");
    m.a[15] = sqrt3;
    return {K, map_normalize<4>(*K, m)};
  }
  throw InvalidInput("no advertised symmetry for stratum " + stratum);
}

GenericSample sample_generic(const std::string& stratum, const FqPtr& F, uint64_t seed) {
  const NormalFormSpec* spec = nullptr;
  for (auto& s : normal_form_specs())
    if (s.stratum == stratum && char_cond_matches(s.cond, F->p)) spec = &s;
  check(spec != nullptr, "sample_generic: no spec");
  uint64_t target = stratum_row(stratum, F->p).order;
  Rng rng(seed);
  for (int attempt = 0; attempt < 6; ++attempt) {
    std::vector<Elem> params;
    if (stratum == "12A") {
      // needs sqrt(3) in the field
      Poly f{{F->from_int(-3), F->zero(), F->one()}};
      auto roots = roots_in_field(*F, f, *F);
      if (roots.empty()) throw InvalidInput("sample_generic 12A: field lacks sqrt(3)");
      params.push_back(roots[0]);
    } else {
      for (int i = 0; i < spec->arity; ++i) params.push_back(F->rand_nonzero(rng));
    }
    CubicForm X = generate_normal_form(stratum, F, params);
    auto rep = is_smooth(X);
    if (!rep.smooth) continue;
    LineConfiguration cfg = build_configuration(X);
    EckardtGeometry geo = eckardt_points(cfg);
    AutGroup aut = compute_aut(cfg, geo);
    if (aut.order > target) continue;  // special parameters, resample
    check(aut.order == target, "sample_generic: group smaller than the generic order");
    GenericSample out;
    out.form = X;
    out.aut_order = aut.order;
    out.reflection_index = aut.reflection_index;
    out.profile = aut.profile;
    out.stratum = aut.stratum;
    out.config_tag = aut.config_tag;
    return out;
  }
  throw InvalidInput("sample_generic: no generic parameters found in 6 attempts");
}

}  // namespace cubic
