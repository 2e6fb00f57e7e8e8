#pragma once

#include <optional>

#include "cubic27/gf.hpp"

namespace cubic {

/// point of P^(N-1), normalized so the first nonzero coordinate is 1
template <int N>
struct Pt {
  std::array<Elem, N> x;
  bool operator==(const Pt& o) const { return x == o.x; }
  bool operator<(const Pt& o) const { return x < o.x; }
};
using Pt4 = Pt<4>;
using Pt2 = Pt<2>;

/// invertible N x N matrix up to scalar, row major, first nonzero entry 1
template <int N>
struct Map {
  std::array<Elem, N * N> a;
  bool operator==(const Map& o) const { return a == o.a; }
  bool operator<(const Map& o) const { return a < o.a; }
};
using Map4 = Map<4>;
using Map2 = Map<2>;

template <int N>
Pt<N> pt_normalize(const Fq& F, Pt<N> p);
template <int N>
Pt<N> make_pt(const Fq& F, std::array<Elem, N> coords);
template <int N>
bool pt_is_zero(const Fq& F, const Pt<N>& p);
template <int N>
Pt<N> pt_embed(const Fq& from, const Fq& to, const Pt<N>& p);

template <int N>
Map<N> map_normalize(const Fq& F, Map<N> m);
template <int N>
Map<N> map_mul(const Fq& F, const Map<N>& a, const Map<N>& b);
template <int N>
Map<N> map_inverse(const Fq& F, const Map<N>& m);
template <int N>
Pt<N> map_apply(const Fq& F, const Map<N>& m, const Pt<N>& p);
template <int N>
Map<N> map_identity(const Fq& F);
template <int N>
Elem map_det(const Fq& F, const Map<N>& m);
template <int N>
Map<N> map_embed(const Fq& from, const Fq& to, const Map<N>& m);

/// line of P^3 through two distinct points, with normalized Pluecker key
/// and a dual pair of hyperplanes for fast membership tests
struct Line3 {
  Pt4 p, q;
  std::array<Elem, 6> pluecker;   // p01 p02 p03 p12 p13 p23, normalized
  std::array<Elem, 8> dual;       // two hyperplanes vanishing on the line
};

Line3 make_line(const Fq& F, const Pt4& p, const Pt4& q);
bool line_eq(const Line3& a, const Line3& b);
bool on_line(const Fq& F, const Line3& l, const Pt4& pt);
/// point x line incidence via the Pluecker pairing; zero iff coplanar
Elem pluecker_pairing(const Fq& F, const Line3& a, const Line3& b);
bool lines_meet(const Fq& F, const Line3& a, const Line3& b);
/// intersection point of distinct coplanar lines; nullopt if skew
std::optional<Pt4> line_meet(const Fq& F, const Line3& a, const Line3& b);
Line3 line_embed(const Fq& from, const Fq& to, const Line3& l);
Line3 line_map(const Fq& F, const Map4& m, const Line3& l);

/// no 4 of the 5 points coplanar (resp. no 3 of 4 points collinear in P^1)
bool is_frame4(const Fq& F, const std::array<Pt4, 5>& pts);
/// matrix sending the standard frame to the given one; nullopt if degenerate
std::optional<Map4> frame_matrix(const Fq& F, const std::array<Pt4, 5>& pts);
/// unique projective map carrying the source frame to the target frame
std::optional<Map4> map_from_points(const Fq& F, const std::array<Pt4, 5>& src,
                                    const std::array<Pt4, 5>& dst);
std::optional<Map2> map2_from_points(const Fq& F, const std::array<Pt2, 3>& src,
                                     const std::array<Pt2, 3>& dst);
Pt2 map2_apply(const Fq& F, const Map2& m, const Pt2& p);

struct Pgl2Group {
  std::vector<Map2> elems;
  std::vector<Map2> gens;
  uint64_t order = 0;
  std::string tag;  // 1, 2, 3, 4, 2^2, 5, S3, D10, 5:4, A5
};

/// full set stabilizer of 5 distinct points of P^1 inside PGL_2
Pgl2Group pgl2_stabilizer(const Fq& F, const std::array<Pt2, 5>& pts);

// small dense linear algebra over Fq (cold paths)
using Mat = std::vector<std::vector<Elem>>;
int mat_rank(const Fq& F, Mat m);
/// solution space basis of M x = 0
std::vector<std::vector<Elem>> mat_kernel(const Fq& F, const Mat& m);
/// one solution of M x = rhs, if any
std::optional<std::vector<Elem>> mat_solve(const Fq& F, Mat m, std::vector<Elem> rhs);

}  // namespace cubic
