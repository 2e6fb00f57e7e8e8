#pragma once

#include <array>
#include <map>
#include <span>

#include "cubic27/gf.hpp"

namespace cubic {

// ---------------------------------------------------------------------------
// Form: dense homogeneous form of fixed degree in n variables.
// Coefficients are indexed by the grlex monomial list (x0 > x1 > ... ),
// which is also the on-disk order for cubic surfaces.
// ---------------------------------------------------------------------------
struct Form {
  int nvars = 0;
  int deg = 0;
  std::vector<Elem> c;
  Form() = default;
  Form(int n, int d);
};

/// exponent tuples of degree d in n vars, lex-descending (x0 > x1 > ...)
const std::vector<std::array<uint8_t, 6>>& monomials(int nvars, int deg);
int monomial_index(int nvars, int deg, const std::array<uint8_t, 6>& e);

Form form_zero(const Fq& F, int nvars, int deg);
bool form_is_zero(const Fq& F, const Form& f);
Form form_add(const Fq& F, const Form& a, const Form& b);
Form form_sub(const Fq& F, const Form& a, const Form& b);
Form form_scale(const Fq& F, const Form& a, const Elem& s);
Form form_mul(const Fq& F, const Form& a, const Form& b);
Form form_partial(const Fq& F, const Form& a, int var);
Elem form_eval(const Fq& F, const Form& a, std::span<const Elem> x);
/// substitute x_i -> sum_j m[i][j] y_j (m is nvars x nvars, row major)
Form form_subst_linear(const Fq& F, const Form& a, std::span<const Elem> m);
/// scale so the first nonzero coefficient is 1; zero form unchanged
Form form_normalize(const Fq& F, const Form& a);
/// map coefficients into an extension field
Form form_embed(const Fq& from, const Fq& to, const Form& a);

// ---------------------------------------------------------------------------
// MP: sparse polynomial in up to 6 variables, not necessarily homogeneous.
// Setup/elimination plumbing only; not used in hot loops.
// ---------------------------------------------------------------------------
struct MP {
  using Key = std::array<uint8_t, 6>;
  int nvars = 0;
  std::map<Key, Elem> t;

  explicit MP(int n = 0) : nvars(n) {}
  bool is_zero() const { return t.empty(); }
  int deg_in(int var) const;
  int total_deg() const;
};

MP mp_const(const Fq& F, int nvars, const Elem& a);
MP mp_var(const Fq& F, int nvars, int var);
void mp_add_term(const Fq& F, MP& p, const MP::Key& k, const Elem& v);
MP mp_add(const Fq& F, const MP& a, const MP& b);
MP mp_sub(const Fq& F, const MP& a, const MP& b);
MP mp_mul(const Fq& F, const MP& a, const MP& b);
MP mp_scale(const Fq& F, const MP& a, const Elem& s);
/// substitute var -> value, producing a polynomial in the remaining vars
MP mp_eval_var(const Fq& F, const MP& a, int var, const Elem& value);
Elem mp_eval(const Fq& F, const MP& a, std::span<const Elem> x);
/// coefficients of a as a univariate polynomial in `var` (entries lack `var`)
std::vector<MP> mp_collect(const Fq& F, const MP& a, int var);
MP mp_embed(const Fq& from, const Fq& to, const MP& a);
/// homogeneous Form -> MP with variables 0..nvars-1
MP mp_from_form(const Fq& F, const Form& f);

}  // namespace cubic
