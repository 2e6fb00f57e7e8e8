#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cubic {

/// does a characteristic condition like "any", "=2", "!=2,3" match p
bool char_cond_matches(const std::string& cond, uint32_t p);

struct WeylClassInfo {
  std::string name;    // atlas label
  std::string carter;  // carter label, for reports
  int order;
  int centralizer;     // |C|, class size is 51840 / |C|
  int trace;
  std::vector<std::pair<int, int>> signature;  // cyclotomic (d, exponent), sorted by d
  bool realizable;                             // occurs in Aut(X) for some p
};
const std::vector<WeylClassInfo>& weyl_e6_classes();  // 25 rows
int weyl_class_index(const std::string& name);

/// classes of the nontrivial proper powers of each class, e.g. 12A -> 2A,3A,4A,6A
const std::vector<std::pair<std::string, std::vector<std::string>>>& weyl_power_map();

struct D5ClassInfo {
  std::string type;                            // signed cycle type, '-' marks a bar: "1-1-1-1-1"
  std::vector<std::pair<int, bool>> cycles;    // (length, negative), sorted
  int order;
  int trace;
  std::vector<std::pair<int, int>> signature;  // on the 5-dim representation
  std::string realizable;                      // "", "any", "!=2", "!=3"
  std::string e6_class;
};
const std::vector<D5ClassInfo>& weyl_d5_classes();  // 18 rows
int d5_class_index(const std::vector<std::pair<int, bool>>& cycles);

struct StratumRow {
  std::string stratum;  // 1A 2A 2B 3A 3C 3D 4A 4B 5A 6E 8A 12A
  int dim;
  std::string cond;     // characteristic condition
  std::string group;    // group description
  uint64_t order;
};
const std::vector<StratumRow>& stratum_orders();  // Table 1 rows (unmerged entries)
const StratumRow& stratum_row(const std::string& stratum, uint32_t p);

struct ProfileRow {
  std::string stratum;
  std::string cond;
  uint64_t order;
  std::vector<std::pair<std::string, uint64_t>> profile;  // class -> count
};
const std::vector<ProfileRow>& stratum_profiles();  // Table 7
const ProfileRow& profile_row(const std::string& stratum, uint32_t p);

struct EckardtConfigRow {
  std::string name;  // C0 .. C45
  int span;          // projective dimension of the span of the Eckardt points
  int n_points, n_lines, n_trihedral;
  std::string cond;
  uint64_t group_order;  // reflection group order
  std::string surfaces;
};
const std::vector<EckardtConfigRow>& eckardt_configs();  // Table 4

struct StrataPoset {
  std::string char_class;                                    // "generic", "2", "3", "5"
  std::vector<std::string> nodes;                            // merged names like "4A=4B=6E"
  std::vector<std::pair<std::string, std::string>> arrows;   // specializations
};
const StrataPoset& strata_poset(uint32_t p);  // p = 0 means generic (!= 2,3,5)

/// stratum-label merges for a characteristic: representative -> merged set
std::vector<std::vector<std::string>> stratum_merges(uint32_t p);

/// classes excluded for this characteristic (never in any Aut(X))
std::vector<std::string> excluded_classes(uint32_t p);

}  // namespace cubic
