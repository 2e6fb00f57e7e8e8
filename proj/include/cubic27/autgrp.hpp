#pragma once

#include <map>

#include "cubic27/lines.hpp"

namespace cubic {

/// the full projective automorphism group of a smooth cubic surface
struct AutGroup {
  FqPtr field;
  uint64_t order = 0;
  std::vector<Map4> maps;             // normalized matrices, scan order
  std::vector<Perm27> geom_perms;     // action on cfg.lines indices
  std::vector<Perm27> abstract_perms; // transported through the marking
  std::vector<int> class_idx;         // per element, into weyl_e6_classes()
  std::map<std::string, uint64_t> profile;
  std::vector<int> generators;        // indices of a generating set
  uint64_t reflection_order = 1;
  uint64_t reflection_index = 1;
  std::string stratum;        // e.g. "3C (=5A=12A)"
  std::string stratum_node;   // poset node, e.g. "3C=5A=12A"
  std::string config_tag;     // from the Eckardt geometry
};

/// scan W(E6) for liftable candidates; when prefilter is set, only elements
/// stabilizing the Eckardt trio set are lifted (must agree with a full scan)
AutGroup compute_aut(const LineConfiguration& cfg, const EckardtGeometry& geo,
                     bool prefilter = true);

/// stratum of the profile for characteristic p, with coincidence note applied
std::pair<std::string, std::string> stratum_of_profile(
    const std::map<std::string, uint64_t>& profile, uint32_t p);

/// every line-fixing element induces a W(D5) class on the 16 disjoint lines
/// matching its W(E6) class through the embedding table; throws otherwise
void check_d5_consistency(const LineConfiguration& cfg, const AutGroup& aut);

}  // namespace cubic
