#pragma once

#include "cubic27/lines.hpp"

namespace cubic {

using Pt5 = Pt<5>;
using Map5 = Map<5>;

/// quartic del Pezzo surface as a pencil of quadrics in P^4
struct QuadricPencil {
  FqPtr field;
  Elem a, b;
  Form q1, q2;  // 5 variables, degree 2; the characteristic picks the shape
};

QuadricPencil make_pencil(const FqPtr& F, const Elem& a, const Elem& b);

/// {(1:0), (0:1), (1:-1), (-a:1), (1:-b)}, rejecting coincidences
std::array<Pt2, 5> dp4_delta_roots(const Fq& F, const Elem& a, const Elem& b);

struct Dp4Aut {
  uint64_t order = 0;        // 16 |G|
  std::string g_tag;         // from the PGL2 stabilizer table
  uint64_t g_order = 0;
  std::vector<Map5> rho;     // reflections at the singular quadric vertices
  std::vector<Map5> sixteen; // the projective group they generate
  std::vector<Pt5> vertices; // z_i
};
Dp4Aut dp4_aut(const QuadricPencil& Y);

/// characteristic 2 canonical point, fixed by every computed generator
Pt5 dp4_canonical_point(const QuadricPencil& Y);

/// characteristic 2: fixed locus of the first-kind involution with axis y1=y2
/// "two tangent conics" iff a = b, else "cuspidal rational curve"
std::string dp4_fixed_locus_type(const QuadricPencil& Y);

struct Dp4Lines {
  FqPtr field;
  std::vector<std::array<Pt5, 2>> lines;        // 16 spanning pairs
  std::array<std::array<uint8_t, 16>, 16> meets;
  std::array<int, 16> model;  // position in odd_vectors() order
};
/// the 16 lines, found by projecting from a surface point to a cubic surface
Dp4Lines dp4_lines(const QuadricPencil& Y, int max_ext = 12);

/// the 2^4 part acts on the 16 lines simply transitively by translations;
/// returns the D5 table rows realized by the computed group elements
std::vector<int> dp4_check_line_action(const QuadricPencil& Y, const Dp4Aut& aut,
                                       const Dp4Lines& lines);

}  // namespace cubic
