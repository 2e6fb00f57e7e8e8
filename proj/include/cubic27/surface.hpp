#pragma once

#include "cubic27/solve.hpp"

namespace cubic {

/// smooth cubic surface data: 20 coefficients in the fixed grlex order
struct CubicForm {
  FqPtr field;
  Form f;  // nvars = 4, deg = 3
  std::string label;
};

CubicForm make_cubic(const FqPtr& field, std::vector<Elem> coeffs, std::string label = "");
CubicForm cubic_embed(const CubicForm& c, const FqPtr& K);
/// normalized so the first nonzero coefficient is 1
bool cubic_proportional(const CubicForm& a, const CubicForm& b);

/// polar quadratic form P_y(F) = sum y_i dF/dx_i
Form polar(const CubicForm& X, const std::array<Elem, 4>& y);

/// determinant of the matrix of second partials (quartic form; zero in char 2)
Form hessian(const CubicForm& X);

/// the 4x4 Hessian matrix evaluated at a point
std::array<std::array<Elem, 4>, 4> hessian_matrix_at(const CubicForm& X,
                                                     const std::array<Elem, 4>& y);

struct CanonicalData {
  char tag;  // 'a' no canonical point (Fermat), 'b' point off X,
             // 'c' point on X, plane not tritangent, 'd' tritangent + Eckardt
  std::optional<Pt4> point;
  std::optional<Form> plane;  // linear form with P_v(F) = plane^2
};

/// characteristic-2 canonical point and case classification
CanonicalData canonical_point(const CubicForm& X);

struct SmoothnessReport {
  bool smooth = true;
  FqPtr witness_field;
  std::optional<Pt4> witness;
};

/// exact smoothness test over extensions of degree <= max_ext
SmoothnessReport is_smooth(const CubicForm& X, int max_ext = 12);

struct CriticalPoint {
  FqPtr field;
  Pt4 point;
  int mult = 1;
};

struct CriticalScheme {
  std::vector<CriticalPoint> points;
  int total_degree = 0;
  std::vector<int> pattern;  // multiplicities, descending
};

/// char-3 critical locus with multiplicities (total degree 5 for smooth cubics)
CriticalScheme critical_locus(const CubicForm& X, int max_ext = 12);

}  // namespace cubic
