#pragma once

#include "cubic27/surface.hpp"

namespace cubic {

struct NormalFormSpec {
  std::string stratum;
  std::string cond;  // characteristic condition of this branch
  int arity;         // number of field parameters
};
const std::vector<NormalFormSpec>& normal_form_specs();

/// the literal normal form of the stratum at this characteristic;
/// for 12A the single parameter is a square root of 3 in the field
CubicForm generate_normal_form(const std::string& stratum, const FqPtr& F,
                               const std::vector<Elem>& params);

/// sum c_i x_i^3 on the hyperplane x4 = -(x0+..+x3); p not 2 or 3, c_i nonzero
CubicForm sylvester_form(const FqPtr& F, const std::array<Elem, 5>& c);

/// sum x_i^3 + sum a_ijk x_i x_j x_k
CubicForm emch_form(const FqPtr& F, const Elem& a012, const Elem& a013, const Elem& a023,
                    const Elem& a123);

struct FormSymmetry {
  FqPtr field;  // extension where the advertised symmetry matrix lives
  Map4 m;
};
/// the symmetry matrix advertised for the stratum's normal form
FormSymmetry normal_form_symmetry(const std::string& stratum, const CubicForm& X);

/// smallest extension of F containing a primitive n-th root of unity, and one
std::pair<FqPtr, Elem> root_of_unity(const FqPtr& F, int n);

/// rejection sampling: random parameters until the computed group matches the
/// generic order of the stratum (<= 5 resamples), via the full pipeline
struct GenericSample {
  CubicForm form;
  uint64_t aut_order;
  uint64_t reflection_index;
  std::map<std::string, uint64_t> profile;
  std::string stratum;
  std::string config_tag;
};
GenericSample sample_generic(const std::string& stratum, const FqPtr& F, uint64_t seed);

}  // namespace cubic
