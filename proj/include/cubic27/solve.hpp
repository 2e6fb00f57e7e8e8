#pragma once

#include "cubic27/mpoly.hpp"
#include "cubic27/projgeom.hpp"

namespace cubic {

/// determinant of the Sylvester matrix of two coefficient vectors with the
/// given formal degrees (sizes m+1, n+1); commutes with specialization
Elem sylvester_det(const Fq& F, const std::vector<Elem>& A, const std::vector<Elem>& B);

Elem mat_det(const Fq& F, Mat m);

/// resultant w.r.t. `var`, computed symbolically (small shapes only)
MP mp_resultant_sym(const Fq& F, const MP& A, const MP& B, int var);

/// resultant w.r.t. `var` by evaluation/interpolation over E (an extension
/// of F with enough points); at most two other variables may occur
MP mp_resultant_ei(const Fq& F, const Fq& E, const MP& A, const MP& B, int var);

/// univariate gcd of the coefficients of A collected in `var` (content)
MP mp_content_in(const Fq& F, const MP& A, int var, int othervar);

/// MP with a single variable -> Poly
Poly mp_to_poly(const Fq& F, const MP& a, int var);
MP mp_from_poly(const Fq& F, const Poly& a, int nvars, int var);

/// evaluation extension of F with more than `points` elements
FqPtr eval_extension(const FqPtr& F, uint64_t points);

/// one affine solution of a polynomial system over some extension of F
struct AffPoint {
  FqPtr field;
  std::vector<Elem> x;
};

/// all common zeros of eqs (vars 0..nvars-1) over extensions of degree
/// <= max_ext; exact elimination with full verification
std::vector<AffPoint> solve_affine(const FqPtr& F, std::vector<MP> eqs, int nvars,
                                   int max_ext);

struct LineSolveResult {
  FqPtr field;      // smallest extension containing all lines found
  std::vector<Line3> lines;
  bool complete = false;  // exactly 27 distinct lines
};

/// true iff the line lies on the zero locus of the (cubic) form
bool line_in_form(const Fq& F, const Form& f, const Line3& l);

/// chart elimination solver (resultants d -> c -> b -> a, back substitution)
LineSolveResult find_lines_elimination(const FqPtr& F, const Form& cubic, int max_ext);

/// all lines of P^3(K) by reduced-echelon enumeration (small fields)
std::vector<Line3> all_lines_P3(const Fq& K);

/// brute-force oracle: scan every line of P^3 over extensions <= max_ext
LineSolveResult find_lines_exhaustive(const FqPtr& F, const Form& cubic, int max_ext,
                                      uint64_t field_size_cap = 16);

}  // namespace cubic
