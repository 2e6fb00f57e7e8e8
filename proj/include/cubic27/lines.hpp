#pragma once

#include "cubic27/surface.hpp"
#include "cubic27/weyl.hpp"

namespace cubic {

/// the 27 lines of a smooth cubic with incidence, marking and trio data
struct LineConfiguration {
  CubicForm surface;        // over the base field
  FqPtr field;              // working field containing every line
  CubicForm surface_k;      // embedded in the working field
  std::vector<Line3> lines; // 27, deterministic order
  std::array<std::array<uint8_t, 27>, 27> meets;
  std::array<int, 27> to_abstract;    // geometric index -> abstract label
  std::array<int, 27> from_abstract;  // abstract label -> geometric index
  std::vector<std::array<uint8_t, 3>> trios;  // geometric trios, sorted triples
  // intersection points of incident pairs, indexed by trio (the trio plane point
  // lattice): point_of[a][b] for incident a < b
  std::array<std::array<int, 27>, 27> meet_point;  // index into points, -1 if skew
  std::vector<Pt4> points;
};

LineConfiguration build_configuration(const CubicForm& X, int max_ext = 12,
                                      bool use_exhaustive = false);

struct TrihedralLine {
  Line3 line;
  std::vector<int> eckardt;  // indices into EckardtGeometry::points
};

struct EckardtGeometry {
  std::vector<int> trio_ids;      // trios of concurrent lines, ascending
  std::vector<Pt4> points;        // the Eckardt points, parallel to trio_ids
  std::array<int, 27> per_line;   // Eckardt points on each exceptional line
  std::array<bool, 27> inseparable;
  std::vector<int> exc_through_two;   // |L|: lines through >= 2 Eckardt points
  std::vector<TrihedralLine> trihedral;  // |T|
  int span_dim = -1;
  std::string config_tag;
};

EckardtGeometry eckardt_points(const LineConfiguration& cfg);

/// inseparable iff the degree-2 projection cut by the plane pencil through
/// the line is a Frobenius twist (iff 5 Eckardt points in char 2)
bool line_inseparable(const LineConfiguration& cfg, int line_idx);

/// (9_4 12_3) tactical configuration test; requires tag C9
bool hesse_check(const LineConfiguration& cfg, const EckardtGeometry& geom);

/// identify the 16 lines disjoint from `ell` with the odd-weight F_2^5 model;
/// result[i] = geometric line index placed at odd_vectors()[i]
std::array<int, 16> blowdown_model(const LineConfiguration& cfg, int ell);

}  // namespace cubic
