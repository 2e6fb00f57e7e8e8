#include "cubic27/tables.hpp"

#include <sstream>

#include "cubic27/gf.hpp"

namespace cubic {

bool char_cond_matches(const std::string& cond, uint32_t p) {
  if (cond == "any") return true;
  bool negate = cond.rfind("!=", 0) == 0;
  std::string list = cond.substr(negate ? 2 : 1);
  if (!negate) check(cond[0] == '=', "bad characteristic condition");
  std::stringstream ss(list);
  std::string tok;
  bool in_list = false;
  while (std::getline(ss, tok, ','))
    if ((uint32_t)std::stoul(tok) == p) in_list = true;
  return negate ? !in_list : in_list;
}

using Sig = std::vector<std::pair<int, int>>;

const std::vector<WeylClassInfo>& weyl_e6_classes() {
  static const std::vector<WeylClassInfo> rows = {
      {"1A", "0", 1, 51840, 6, Sig{{1, 6}}, true},
      {"2A", "4A1", 2, 1152, -2, Sig{{1, 2}, {2, 4}}, true},
      {"2B", "2A1", 2, 192, 2, Sig{{1, 4}, {2, 2}}, true},
      {"2C", "A1", 2, 1440, 4, Sig{{1, 5}, {2, 1}}, false},
      {"2D", "3A1", 2, 96, 0, Sig{{1, 3}, {2, 3}}, false},
      {"3A", "3A2", 3, 648, -3, Sig{{3, 3}}, true},
      {"3C", "A2", 3, 216, 3, Sig{{1, 4}, {3, 1}}, true},
      {"3D", "2A2", 3, 108, 0, Sig{{1, 2}, {3, 2}}, true},
      {"4A", "D4(a1)", 4, 96, 2, Sig{{1, 2}, {4, 2}}, true},
      {"4B", "A1+A3", 4, 16, 0, Sig{{1, 2}, {2, 2}, {4, 1}}, true},
      {"4C", "2A1+A3", 4, 96, -2, Sig{{1, 1}, {2, 3}, {4, 1}}, false},
      {"4D", "A3", 4, 32, 2, Sig{{1, 3}, {2, 1}, {4, 1}}, false},
      {"5A", "A4", 5, 10, 1, Sig{{1, 2}, {5, 1}}, true},
      {"6A", "E6(a2)", 6, 72, 1, Sig{{3, 1}, {6, 2}}, true},
      {"6C", "D4", 6, 36, 1, Sig{{1, 2}, {2, 2}, {6, 1}}, true},
      {"6E", "A1+A5", 6, 36, -2, Sig{{2, 2}, {3, 1}, {6, 1}}, true},
      {"6F", "2A1+A2", 6, 24, -1, Sig{{1, 2}, {2, 2}, {3, 1}}, true},
      {"6G", "A1+A2", 6, 36, 1, Sig{{1, 3}, {2, 1}, {3, 1}}, false},
      {"6H", "A1+2A2", 6, 36, -2, Sig{{1, 1}, {2, 1}, {3, 2}}, false},
      {"6I", "A5", 6, 12, 0, Sig{{1, 1}, {2, 1}, {3, 1}, {6, 1}}, false},
      {"8A", "D5", 8, 8, 0, Sig{{1, 1}, {2, 1}, {8, 1}}, true},
      {"9A", "E6(a1)", 9, 9, 0, Sig{{9, 1}}, true},
      {"10A", "A1+A4", 10, 10, -1, Sig{{1, 1}, {2, 1}, {5, 1}}, false},
      {"12A", "E6", 12, 12, -1, Sig{{3, 1}, {12, 1}}, true},
      {"12C", "D5(a1)", 12, 12, 1, Sig{{1, 1}, {2, 1}, {4, 1}, {6, 1}}, false},
  };
  return rows;
}

int weyl_class_index(const std::string& name) {
  const auto& rows = weyl_e6_classes();
  for (size_t i = 0; i < rows.size(); ++i)
    if (rows[i].name == name) return (int)i;
  throw InvalidInput("unknown W(E6) class: " + name);
}

const std::vector<std::pair<std::string, std::vector<std::string>>>& weyl_power_map() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> rows = {
      {"4A", {"2A"}},       {"4B", {"2B"}},
      {"4C", {"2B"}},       {"4D", {"2B"}},
      {"6A", {"2A", "3A"}}, {"6C", {"2A", "3C"}},
      {"6E", {"2A", "3D"}}, {"6F", {"2B", "3C"}},
      {"6G", {"2C", "3C"}}, {"6H", {"2C", "3D"}},
      {"6I", {"2D", "3D"}}, {"8A", {"2A", "4A"}},
      {"9A", {"3A"}},       {"10A", {"2C", "5A"}},
      {"12A", {"2A", "3A", "4A", "6A"}},
      {"12C", {"2B", "3C", "4C", "6F"}},
  };
  return rows;
}

using Cyc = std::vector<std::pair<int, bool>>;

static Cyc canon_cycles(Cyc c) {
  std::sort(c.begin(), c.end(), [](auto& a, auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  return c;
}

const std::vector<D5ClassInfo>& weyl_d5_classes() {
  auto mk = [](std::string type, Cyc cycles, int order, int trace, Sig sig,
               std::string realizable, std::string e6) {
    return D5ClassInfo{std::move(type), canon_cycles(std::move(cycles)), order,
                       trace,           std::move(sig),                  std::move(realizable),
                       std::move(e6)};
  };
  static const std::vector<D5ClassInfo> rows = {
      mk("11111", {{1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}}, 1, 5, {{1, 5}}, "any", "1A"),
      mk("111-1-1", {{1, 0}, {1, 0}, {1, 0}, {1, 1}, {1, 1}}, 2, 1, {{1, 3}, {2, 2}}, "any",
         "2B"),
      mk("1-1-1-1-1", {{1, 0}, {1, 1}, {1, 1}, {1, 1}, {1, 1}}, 2, -3, {{1, 1}, {2, 4}}, "any",
         "2A"),
      mk("2111", {{2, 0}, {1, 0}, {1, 0}, {1, 0}}, 2, 3, {{1, 4}, {2, 1}}, "", "2C"),
      mk("21-1-1", {{2, 0}, {1, 0}, {1, 1}, {1, 1}}, 2, -1, {{1, 2}, {2, 3}}, "", "2D"),
      mk("221", {{2, 0}, {2, 0}, {1, 0}}, 2, 1, {{1, 3}, {2, 2}}, "any", "2B"),
      mk("311", {{3, 0}, {1, 0}, {1, 0}}, 3, 2, {{1, 3}, {3, 1}}, "!=3", "3C"),
      mk("2-2-1", {{2, 0}, {2, 1}, {1, 1}}, 4, -1, {{1, 1}, {2, 2}, {4, 1}}, "any", "4B"),
      mk("41", {{4, 0}, {1, 0}}, 4, 1, {{1, 2}, {2, 1}, {4, 1}}, "!=2", "4D"),
      mk("-211-1", {{2, 1}, {1, 0}, {1, 0}, {1, 1}}, 4, 1, {{1, 2}, {2, 1}, {4, 1}}, "", "4D"),
      mk("-2-1-1-1", {{2, 1}, {1, 1}, {1, 1}, {1, 1}}, 4, -3, {{2, 3}, {4, 1}}, "", "4C"),
      mk("-2-21", {{2, 1}, {2, 1}, {1, 0}}, 4, 1, {{1, 1}, {4, 2}}, "any", "4A"),
      mk("5", {{5, 0}}, 5, 0, {{1, 1}, {5, 1}}, "any", "5A"),
      mk("32", {{3, 0}, {2, 0}}, 6, 0, {{1, 2}, {2, 1}, {3, 1}}, "", "6G"),
      mk("3-1-1", {{3, 0}, {1, 1}, {1, 1}}, 6, -2, {{1, 1}, {2, 2}, {3, 1}}, "!=3", "6F"),
      mk("-31-1", {{3, 1}, {1, 0}, {1, 1}}, 6, 0, {{1, 1}, {2, 2}, {6, 1}}, "!=3", "6C"),
      mk("-4-1", {{4, 1}, {1, 1}}, 8, -1, {{2, 1}, {8, 1}}, "!=2", "8A"),
      mk("-3-2", {{3, 1}, {2, 1}}, 12, 0, {{2, 1}, {4, 1}, {6, 1}}, "", "12C"),
  };
  return rows;
}

int d5_class_index(const Cyc& cycles) {
  Cyc c = canon_cycles(cycles);
  const auto& rows = weyl_d5_classes();
  for (size_t i = 0; i < rows.size(); ++i)
    if (rows[i].cycles == c) return (int)i;
  throw InternalError("signed cycle type not in the W(D5) table");
}

const std::vector<StratumRow>& stratum_orders() {
  static const std::vector<StratumRow> rows = {
      {"1A", 4, "any", "1", 1},
      {"2A", 3, "any", "2", 2},
      {"2B", 2, "!=2", "2^2", 4},
      {"2B", 2, "=2", "2^4", 16},
      {"3A", 1, "any", "H3(3):2", 54},
      {"3C", 0, "!=2,3", "3^3:S4", 648},
      {"3C", 0, "=2", "PSU4(2)", 25920},
      {"3D", 2, "any", "S3", 6},
      {"4A", 1, "!=2", "4", 4},
      {"4A", 1, "=2", "2^3:S4", 192},
      {"4B", 1, "!=2", "S4", 24},
      {"5A", 0, "!=2,5", "S5", 120},
      {"6E", 1, "!=2", "S3xS2", 12},
      {"8A", 0, "!=2,3", "8", 8},
      {"8A", 0, "=3", "H3(3):8", 216},
      {"12A", 0, "!=2,3", "H3(3):4", 108},
  };
  return rows;
}

const StratumRow& stratum_row(const std::string& stratum, uint32_t p) {
  for (auto& r : stratum_orders())
    if (r.stratum == stratum && char_cond_matches(r.cond, p)) return r;
  throw InvalidInput("no Table-1 row for stratum " + stratum + " at this characteristic");
}

using Prof = std::vector<std::pair<std::string, uint64_t>>;

const std::vector<ProfileRow>& stratum_profiles() {
  static const std::vector<ProfileRow> rows = {
      {"1A", "any", 1, Prof{{"1A", 1}}},
      {"2A", "any", 2, Prof{{"1A", 1}, {"2A", 1}}},
      {"2B", "!=2", 4, Prof{{"1A", 1}, {"2A", 2}, {"2B", 1}}},
      {"2B", "=2", 16, Prof{{"1A", 1}, {"2A", 5}, {"2B", 10}}},
      {"3A", "any", 54,
       Prof{{"1A", 1}, {"2A", 9}, {"3A", 2}, {"3D", 24}, {"6A", 18}}},
      {"3C", "!=2,3", 648,
       Prof{{"1A", 1},
            {"2A", 18},
            {"2B", 27},
            {"3A", 8},
            {"3C", 6},
            {"3D", 84},
            {"4B", 162},
            {"6A", 72},
            {"6C", 36},
            {"6E", 36},
            {"6F", 54},
            {"9A", 144}}},
      {"3C", "=2", 25920,
       Prof{{"1A", 1},
            {"2A", 45},
            {"2B", 270},
            {"3A", 80},
            {"3C", 240},
            {"3D", 480},
            {"4A", 540},
            {"4B", 3240},
            {"5A", 5184},
            {"6A", 720},
            {"6C", 1440},
            {"6E", 1440},
            {"6F", 2160},
            {"9A", 5760},
            {"12A", 4320}}},
      {"3D", "any", 6, Prof{{"1A", 1}, {"2A", 3}, {"3D", 2}}},
      {"4A", "!=2", 4, Prof{{"1A", 1}, {"2A", 1}, {"4A", 2}}},
      {"4A", "=2", 192,
       Prof{{"1A", 1},
            {"2A", 13},
            {"2B", 30},
            {"3D", 32},
            {"4A", 12},
            {"4B", 72},
            {"6E", 32}}},
      {"4B", "!=2", 24,
       Prof{{"1A", 1}, {"2A", 6}, {"2B", 3}, {"3D", 8}, {"4B", 6}}},
      {"5A", "!=2,5", 120,
       Prof{{"1A", 1},
            {"2A", 10},
            {"2B", 15},
            {"3D", 20},
            {"4B", 30},
            {"5A", 24},
            {"6E", 20}}},
      {"6E", "!=2", 12,
       Prof{{"1A", 1}, {"2A", 4}, {"2B", 3}, {"3D", 2}, {"6E", 2}}},
      {"8A", "!=2,3", 8, Prof{{"1A", 1}, {"2A", 1}, {"4A", 2}, {"8A", 4}}},
      {"8A", "=3", 216,
       Prof{{"1A", 1},
            {"2A", 9},
            {"3A", 2},
            {"3D", 24},
            {"4A", 18},
            {"6A", 18},
            {"8A", 108},
            {"12A", 36}}},
      {"12A", "!=2,3", 108,
       Prof{{"1A", 1},
            {"2A", 9},
            {"3A", 2},
            {"3D", 24},
            {"4A", 18},
            {"6A", 18},
            {"12A", 36}}},
  };
  return rows;
}

const ProfileRow& profile_row(const std::string& stratum, uint32_t p) {
  for (auto& r : stratum_profiles())
    if (r.stratum == stratum && char_cond_matches(r.cond, p)) return r;
  throw InvalidInput("no Table-7 row for stratum " + stratum + " at this characteristic");
}

const std::vector<EckardtConfigRow>& eckardt_configs() {
  static const std::vector<EckardtConfigRow> rows = {
      {"C0", -1, 0, 0, 0, "any", 1, "1A"},
      {"C1", 0, 1, 0, 0, "any", 2, "2A, 4A (p!=2), 8A (p!=2,3)"},
      {"C2", 1, 2, 1, 0, "!=2", 4, "2B (p!=2)"},
      {"C3", 1, 3, 0, 1, "any", 6, "3D"},
      {"C5", 1, 5, 1, 0, "=2", 16, "2B (p=2)"},
      {"C4", 2, 4, 3, 1, "!=2", 12, "6E (p!=2)"},
      {"C6", 2, 6, 3, 4, "!=2", 24, "4B (p!=2)"},
      {"C9", 2, 9, 0, 12, "any", 54, "3A, 8A=12A (p=3), 12A (p!=2,3)"},
      {"C13", 2, 13, 3, 16, "=2", 192, "4A=4B=6E (p=2)"},
      {"C10", 3, 10, 15, 10, "!=2,5", 120, "5A (p!=2)"},
      {"C18", 3, 18, 27, 42, "!=3", 648, "3C (p!=2,3)"},
      {"C45", 3, 45, 27, 240, "=2", 25920, "3C=5A=12A (p=2)"},
  };
  return rows;
}

const StrataPoset& strata_poset(uint32_t p) {
  using A = std::vector<std::pair<std::string, std::string>>;
  static const StrataPoset generic = {
      "generic",
      {"1A", "2A", "2B", "3D", "4B", "6E", "3A", "4A", "5A", "3C", "12A", "8A"},
      A{{"1A", "2A"},
        {"2A", "2B"},
        {"2A", "3D"},
        {"2A", "4A"},
        {"2B", "4B"},
        {"2B", "6E"},
        {"3D", "4B"},
        {"3D", "6E"},
        {"3D", "3A"},
        {"4B", "5A"},
        {"4B", "3C"},
        {"6E", "5A"},
        {"6E", "3C"},
        {"3A", "3C"},
        {"3A", "12A"},
        {"4A", "12A"},
        {"4A", "8A"}}};
  static const StrataPoset p2 = {
      "2",
      {"1A", "2A", "2B", "3D", "4A=4B=6E", "3A", "3C=5A=12A"},
      A{{"1A", "2A"},
        {"2A", "2B"},
        {"2A", "3D"},
        {"2B", "4A=4B=6E"},
        {"3D", "4A=4B=6E"},
        {"3D", "3A"},
        {"4A=4B=6E", "3C=5A=12A"},
        {"3A", "3C=5A=12A"}}};
  static const StrataPoset p3 = {
      "3",
      {"1A", "2A", "2B", "3D", "4B", "6E", "3A", "4A", "5A", "8A=12A"},
      A{{"1A", "2A"},
        {"2A", "2B"},
        {"2A", "3D"},
        {"2A", "4A"},
        {"2B", "4B"},
        {"2B", "6E"},
        {"3D", "4B"},
        {"3D", "6E"},
        {"3D", "3A"},
        {"4B", "5A"},
        {"6E", "5A"},
        {"3A", "8A=12A"},
        {"4A", "8A=12A"}}};
  static const StrataPoset p5 = {
      "5",
      {"1A", "2A", "2B", "3D", "4B", "6E", "3A", "4A", "3C", "12A", "8A"},
      A{{"1A", "2A"},
        {"2A", "2B"},
        {"2A", "3D"},
        {"2A", "4A"},
        {"2B", "4B"},
        {"2B", "6E"},
        {"3D", "4B"},
        {"3D", "6E"},
        {"3D", "3A"},
        {"4B", "3C"},
        {"6E", "3C"},
        {"3A", "3C"},
        {"3A", "12A"},
        {"4A", "12A"},
        {"4A", "8A"}}};
  if (p == 2) return p2;
  if (p == 3) return p3;
  if (p == 5) return p5;
  return generic;
}

std::vector<std::vector<std::string>> stratum_merges(uint32_t p) {
  if (p == 2) return {{"4A", "4B", "6E"}, {"3C", "5A", "12A"}};
  if (p == 3) return {{"8A", "12A"}};
  return {};
}

std::vector<std::string> excluded_classes(uint32_t p) {
  std::vector<std::string> out = {"2C", "2D", "4C", "4D", "6G", "6H", "6I", "10A", "12C"};
  if (p == 2) out.push_back("8A");
  if (p == 3) {
    out.push_back("3C");
    out.push_back("6C");
    out.push_back("6F");
    out.push_back("9A");
  }
  if (p == 5) out.push_back("5A");
  return out;
}

}  // namespace cubic
