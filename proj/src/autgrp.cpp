#include "cubic27/autgrp.hpp"

#include <algorithm>
#include <bitset>
#include <set>
#include <unordered_map>

namespace cubic {

namespace {

struct SourceTuple {
  std::array<std::pair<int, int>, 5> pairs;  // incident line pairs (a < b)
  std::array<Pt4, 5> points;
  Map4 minv;  // inverse of the standard-frame matrix of the points
};

// fixed list of candidate 5-tuples drawn from pairwise intersections:
// greedy frame assembly along a deterministic ordering of the 135 pairs
std::vector<SourceTuple> source_tuples(const LineConfiguration& cfg) {
  const Fq& K = *cfg.field;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 27; ++a)
    for (int b = a + 1; b < 27; ++b)
      if (cfg.meets[a][b]) pairs.emplace_back(a, b);
  check(pairs.size() == 135, "expected 135 incident pairs");
  Rng rng(0xec6a);  // deterministic order
  for (size_t i = pairs.size(); i > 1; --i)
    std::swap(pairs[i - 1], pairs[rng.below(i)]);

  auto extendable = [&](const std::vector<Pt4>& chosen, const Pt4& cand) {
    for (auto& p : chosen)
      if (p == cand) return false;
    // every 3-subset independent, every 4-subset spanning
    size_t n = chosen.size();
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) {
        Mat m{{chosen[i].x.begin(), chosen[i].x.end()},
              {chosen[j].x.begin(), chosen[j].x.end()},
              {cand.x.begin(), cand.x.end()}};
        if (mat_rank(K, m) < 3) return false;
        for (size_t l = j + 1; l < n; ++l) {
          Mat m4 = m;
          m4.push_back({chosen[l].x.begin(), chosen[l].x.end()});
          if (mat_rank(K, m4) < 4) return false;
        }
      }
    }
    return true;
  };

  std::vector<SourceTuple> out;
  std::set<std::array<std::pair<int, int>, 5>> seen;
  for (size_t offset = 0; offset < pairs.size() && out.size() < 10; ++offset) {
    std::vector<Pt4> chosen;
    SourceTuple t;
    int found = 0;
    for (size_t step = 0; step < pairs.size() && found < 5; ++step) {
      auto [a, b] = pairs[(offset + step) % pairs.size()];
      const Pt4& pt = cfg.points[cfg.meet_point[a][b]];
      if (!extendable(chosen, pt)) continue;
      t.pairs[found] = {a, b};
      chosen.push_back(pt);
      ++found;
    }
    if (found < 5) continue;
    std::copy(chosen.begin(), chosen.end(), t.points.begin());
    if (!is_frame4(K, t.points)) continue;
    auto m = frame_matrix(K, t.points);
    if (!m) continue;
    if (!seen.insert(t.pairs).second) continue;
    t.minv = map_inverse<4>(K, *m);
    out.push_back(std::move(t));
  }
  check(out.size() == 10, "could not assemble 10 frame tuples");
  return out;
}

}  // namespace

std::pair<std::string, std::string> stratum_of_profile(
    const std::map<std::string, uint64_t>& profile, uint32_t p) {
  for (auto& bad : excluded_classes(p))
    if (profile.count(bad) && profile.at(bad) > 0)
      throw InternalError("profile contains the excluded class " + bad);
  const StrataPoset& poset = strata_poset(p);
  auto node_of = [&](const std::string& cls) -> int {
    for (size_t i = 0; i < poset.nodes.size(); ++i) {
      std::string n = poset.nodes[i];
      size_t pos = 0;
      while (pos <= n.size()) {
        size_t e = n.find('=', pos);
        std::string tok = n.substr(pos, e == std::string::npos ? e : e - pos);
        if (tok == cls) return (int)i;
        if (e == std::string::npos) break;
        pos = e + 1;
      }
    }
    return -1;
  };
  // depth = longest path from the top
  std::map<std::string, int> depth;
  for (auto& n : poset.nodes) depth[n] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto& [a, b] : poset.arrows)
      if (depth[b] < depth[a] + 1) {
        depth[b] = depth[a] + 1;
        changed = true;
      }
  }
  // reachability for the comparability assertion
  auto reaches = [&](const std::string& from, const std::string& to) {
    if (from == to) return true;
    std::vector<std::string> stack{from};
    std::set<std::string> seen{from};
    while (!stack.empty()) {
      std::string cur = stack.back();
      stack.pop_back();
      for (auto& [a, b] : poset.arrows)
        if (a == cur && seen.insert(b).second) {
          if (b == to) return true;
          stack.push_back(b);
        }
    }
    return false;
  };
  std::set<int> present;
  for (auto& [cls, cnt] : profile) {
    if (!cnt) continue;
    int n = node_of(cls);
    if (n >= 0) present.insert(n);
  }
  check(!present.empty(), "profile admits no stratum node");
  int best = *present.begin();
  for (int n : present)
    if (depth[poset.nodes[n]] > depth[poset.nodes[best]]) best = n;
  for (int n : present)
    check(reaches(poset.nodes[n], poset.nodes[best]),
          "present stratum classes are not totally ordered towards the deepest");
  std::string node = poset.nodes[best];
  size_t e = node.find('=');
  std::string name = e == std::string::npos ? node : node.substr(0, e);
  std::string display = name;
  if (e != std::string::npos) display += " (=" + node.substr(e + 1) + ")";
  return {display, node};
}

AutGroup compute_aut(const LineConfiguration& cfg, const EckardtGeometry& geo,
                     bool prefilter) {
  const Fq& K = *cfg.field;
  const WE6& W = we6();
  AutGroup out;
  out.field = cfg.field;
  out.config_tag = geo.config_tag;

  auto tuples = source_tuples(cfg);

  // abstract Eckardt trio set for the prefilter
  std::bitset<45> eck_trio;
  for (int t : geo.trio_ids) {
    auto [a, b, c] = cfg.trios[t];
    int abs_id = trio_of_pair(cfg.to_abstract[a], cfg.to_abstract[b]);
    check(abs_id >= 0, "trio transport failed");
    eck_trio.set(abs_id);
  }
  const auto& trios = abstract_trios();
  std::vector<int> eck_list;
  for (int t = 0; t < 45; ++t)
    if (eck_trio.test(t)) eck_list.push_back(t);

  Form normal_f = form_normalize(K, cfg.surface_k.f);

  for (const Perm27& w : W.elems) {
    if (prefilter) {
      bool ok = true;
      for (int t : eck_list) {
        int img = trio_of_pair(w[trios[t][0]], w[trios[t][1]]);
        if (img < 0 || !eck_trio.test(img)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
    }
    // geometric permutation of the line indices
    Perm27 g;
    for (int i = 0; i < 27; ++i)
      g[i] = (uint8_t)cfg.from_abstract[w[cfg.to_abstract[i]]];
    // lift: build the candidate matrix from a source frame and its image
    std::optional<Map4> cand;
    bool any_map = false;
    for (auto& t : tuples) {
      std::array<Pt4, 5> dst;
      for (int i = 0; i < 5; ++i) {
        auto [a, b] = t.pairs[i];
        int pid = cfg.meet_point[g[a]][g[b]];
        check(pid >= 0, "image pair must stay incident");
        dst[i] = cfg.points[pid];
      }
      auto n = frame_matrix(K, dst);
      if (!n) continue;
      any_map = true;
      cand = map_mul<4>(K, *n, t.minv);
      break;
    }
    if (!any_map)
      throw InternalError("frame extraction failed for a W(E6) candidate on all 10 tuples");
    // must realize w on all 27 lines
    bool realizes = true;
    for (int i = 0; i < 27 && realizes; ++i) {
      const Line3& src = cfg.lines[i];
      const Line3& im = cfg.lines[g[i]];
      realizes = on_line(K, im, map_apply<4>(K, *cand, src.p)) &&
                 on_line(K, im, map_apply<4>(K, *cand, src.q));
    }
    if (!realizes) continue;
    // and map F to a scalar multiple
    std::vector<Elem> msp(cand->a.begin(), cand->a.end());
    Form fa = form_subst_linear(K, cfg.surface_k.f, msp);
    if (!form_is_zero(K, form_sub(K, form_normalize(K, fa), normal_f))) continue;
    out.maps.push_back(*cand);
    out.geom_perms.push_back(g);
    out.abstract_perms.push_back(w);
  }
  out.order = out.maps.size();

  // the matrix <-> permutation pairing is a bijection onto its image
  {
    std::set<Perm27> uniq(out.geom_perms.begin(), out.geom_perms.end());
    check(uniq.size() == out.order, "distinct candidates induced the same permutation");
    std::set<Map4> uniqm(out.maps.begin(), out.maps.end());
    check(uniqm.size() == out.order, "distinct permutations share a matrix");
  }

  // group structure checks on the permutation side
  std::unordered_map<Perm27, uint32_t, Perm27Hash> index;
  for (uint32_t i = 0; i < out.geom_perms.size(); ++i) index.emplace(out.geom_perms[i], i);
  Rng rng(777);
  for (int t = 0; t < 256; ++t) {
    uint32_t i = (uint32_t)rng.below(out.order), j = (uint32_t)rng.below(out.order);
    Perm27 prod = perm_compose(out.geom_perms[i], out.geom_perms[j]);
    check(index.count(prod), "computed set is not closed under composition");
  }
  for (auto& g : out.geom_perms)
    check(index.count(perm_inverse(g)), "computed set is not closed under inverse");

  // profile and class indices
  for (auto& w : out.abstract_perms) {
    int ci = class_index_of(w);
    out.class_idx.push_back(ci);
    out.profile[weyl_e6_classes()[ci].name]++;
  }
  check(out.profile["1A"] == 1, "profile must contain the identity exactly once");
  check(51840 % out.order == 0, "group order must divide |W(E6)|");

  // reflections (class 2A) match the Eckardt points
  std::vector<uint32_t> refl;
  for (uint32_t i = 0; i < out.order; ++i)
    if (weyl_e6_classes()[out.class_idx[i]].name == "2A") refl.push_back(i);
  check(refl.size() == geo.points.size(),
        "number of reflections must equal the number of Eckardt points");
  for (uint32_t i : refl) {
    // invariant lines of a reflection form a concurrent trio (its Eckardt point)
    std::vector<int> fixed;
    for (int l = 0; l < 27; ++l)
      if (out.geom_perms[i][l] == l) fixed.push_back(l);
    check(fixed.size() == 3, "a 2A element must fix exactly 3 lines");
    int pid = cfg.meet_point[fixed[0]][fixed[1]];
    check(pid >= 0 && on_line(K, cfg.lines[fixed[2]], cfg.points[pid]),
          "2A invariant lines must be concurrent");
  }
  // 2B elements pointwise-fix their canonical line
  for (uint32_t i = 0; i < out.order; ++i) {
    if (weyl_e6_classes()[out.class_idx[i]].name != "2B") continue;
    std::vector<int> fixed;
    for (int l = 0; l < 27; ++l)
      if (out.geom_perms[i][l] == l) fixed.push_back(l);
    int canonical = -1;
    for (int a : fixed) {
      bool meets_all = true;
      for (int b : fixed)
        if (b != a) meets_all = meets_all && cfg.meets[a][b];
      if (meets_all) {
        check(canonical < 0, "2B canonical line must be unique");
        canonical = a;
      }
    }
    check(canonical >= 0, "2B element with no canonical line");
    const Line3& l = cfg.lines[canonical];
    Pt4 third;
    for (int t = 0; t < 4; ++t) third.x[t] = K.add(l.p.x[t], l.q.x[t]);
    third = pt_normalize<4>(K, third);
    for (const Pt4& pt : {l.p, l.q, third})
      check(map_apply<4>(K, out.maps[i], pt) == pt, "2B canonical line is not pointwise fixed");
  }

  // reflection subgroup: closure of the 2A elements
  {
    std::set<uint32_t> sub;
    std::vector<uint32_t> frontier;
    uint32_t id_idx = index.at(perm_identity());
    sub.insert(id_idx);
    for (uint32_t r : refl)
      if (sub.insert(r).second) frontier.push_back(r);
    while (!frontier.empty()) {
      uint32_t x = frontier.back();
      frontier.pop_back();
      for (uint32_t r : refl) {
        Perm27 p = perm_compose(out.geom_perms[x], out.geom_perms[r]);
        uint32_t idx = index.at(p);
        if (sub.insert(idx).second) frontier.push_back(idx);
      }
    }
    out.reflection_order = sub.size();
    check(out.order % out.reflection_order == 0, "reflection subgroup order must divide");
    out.reflection_index = out.order / out.reflection_order;
    check(out.reflection_index == 1 || out.reflection_index == 2 || out.reflection_index == 4,
          "reflection index must be 1, 2 or 4");
    // configuration tag vs reflection group order (Table 4)
    for (auto& row : eckardt_configs())
      if (row.name == geo.config_tag && char_cond_matches(row.cond, K.p))
        check(row.group_order == out.reflection_order,
              "reflection group order does not match the configuration table");
  }

  // generators: greedy closure
  {
    std::set<uint32_t> span;
    uint32_t id_idx = index.at(perm_identity());
    span.insert(id_idx);
    for (uint32_t i = 0; i < out.order && span.size() < out.order; ++i) {
      if (span.count(i)) continue;
      out.generators.push_back((int)i);
      std::vector<uint32_t> frontier(span.begin(), span.end());
      span.insert(i);
      frontier.push_back(i);
      while (!frontier.empty()) {
        uint32_t x = frontier.back();
        frontier.pop_back();
        for (int gidx : out.generators) {
          Perm27 p = perm_compose(out.geom_perms[x], out.geom_perms[(uint32_t)gidx]);
          uint32_t idx = index.at(p);
          if (span.insert(idx).second) frontier.push_back(idx);
        }
      }
    }
  }

  auto [display, node] = stratum_of_profile(out.profile, K.p);
  out.stratum = display;
  out.stratum_node = node;
  return out;
}

void check_d5_consistency(const LineConfiguration& cfg, const AutGroup& aut) {
  // cache one blow-down model per fixed line
  std::map<int, std::array<int, 16>> models;
  for (uint32_t i = 0; i < aut.order; ++i) {
    const Perm27& g = aut.geom_perms[i];
    int fixed = -1;
    for (int l = 0; l < 27 && fixed < 0; ++l)
      if (g[l] == l) fixed = l;
    if (fixed < 0) continue;  // no invariant line
    auto it = models.find(fixed);
    if (it == models.end()) it = models.emplace(fixed, blowdown_model(cfg, fixed)).first;
    const auto& model = it->second;
    std::array<int, 16> pos_of_line;
    std::array<uint8_t, 16> perm16{};
    std::array<int, 27> where{};
    where.fill(-1);
    for (int t = 0; t < 16; ++t) where[model[t]] = t;
    for (int t = 0; t < 16; ++t) {
      int img = g[model[t]];
      check(where[img] >= 0, "line-fixing element must permute the disjoint 16 lines");
      perm16[t] = (uint8_t)where[img];
    }
    (void)pos_of_line;
    D5Element el = d5_class_of(perm16);
    const auto& row = weyl_d5_classes()[el.table_index];
    const auto& e6row = weyl_e6_classes()[aut.class_idx[i]];
    check(row.e6_class == e6row.name,
          "W(D5) class image does not match the element's W(E6) class");
  }
}

}  // namespace cubic
