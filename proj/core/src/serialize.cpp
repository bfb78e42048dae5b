#include "planelayers/serialize.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "planelayers/error.hpp"

namespace planelayers {

namespace {

using nlohmann::ordered_json;

ordered_json edges_json(EdgeList edges) {
  std::sort(edges.begin(), edges.end());
  ordered_json out = ordered_json::array();
  for (const Segment& e : edges) out.push_back({e.a, e.b});
  return out;
}

ordered_json pair_list(const std::vector<std::pair<Segment, Segment>>& pairs) {
  ordered_json out = ordered_json::array();
  for (const auto& [a, b] : pairs) out.push_back({{a.a, a.b}, {b.a, b.b}});
  return out;
}

std::string finish(const ordered_json& j) { return j.dump(2) + "\n"; }

EdgeList parse_edges(const nlohmann::json& j) {
  EdgeList edges;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw PreconditionError("edge must be a pair of ids");
    edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return edges;
}

}  // namespace

std::string two_tree_json(const TwoTreeBuild& build, const PointSet& ps) {
  ordered_json j;
  j["mode"] = "two-tree";
  j["n"] = ps.size();
  j["red"] = edges_json(build.trees.red);
  j["blue"] = edges_json(build.trees.blue);
  j["shared"] = build.trees.shared ? ordered_json{build.trees.shared->a, build.trees.shared->b} : ordered_json();
  j["ratios"] = {{"red", build.trees.max_ratio_red}, {"blue", build.trees.max_ratio_blue}};
  j["bound"] = build.bound;
  j["mst_bottleneck"] = build.mst_bottleneck.length;
  ordered_json c;
  if (build.flat_vertex) {
    c["branch"] = "flat";
    c["flat_vertex"] = *build.flat_vertex;
  } else if (build.pcase) {
    c["branch"] = "pointed";
    c["tag"] = to_string(build.pcase->tag);
    c["p"] = {build.pcase->v3(), build.pcase->v2(), build.pcase->v1(), build.pcase->v0()};
    c["mirrored"] = build.pcase->mirrored;
    if (build.pointed.replaced_by) {
      c["replaced_by"] = {build.pointed.replaced_by->a, build.pointed.replaced_by->b};
    }
  }
  j["construction"] = c;
  return finish(j);
}

std::string layer_set_json(const DistributedBuild& build, const PointSet& ps) {
  const LayerSet& ls = build.layers;
  ordered_json j;
  j["mode"] = "distributed";
  j["n"] = ps.size();
  j["k"] = ls.k;
  j["beta"] = ls.beta;
  j["cell_side"] = build.grid.cell_side;
  ordered_json layers = ordered_json::array();
  for (const EdgeList& l : ls.layers) layers.push_back(edges_json(l));
  j["layers"] = layers;
  ordered_json stats = ordered_json::array();
  for (const LayerStats& s : ls.stats) stats.push_back({{"bottleneck", s.bottleneck}, {"edges", s.edges}});
  j["stats"] = stats;
  j["bound"] = 12.0 * std::sqrt(2.0) * ls.k;
  j["max_edge_bound"] = build.bound;
  j["mst_bottleneck"] = build.mst_bottleneck.length;
  ordered_json dense = ordered_json::array();
  for (const Cell& c : build.grid.dense) dense.push_back({c.i, c.j});
  j["dense_boxes"] = dense;
  return finish(j);
}

std::string report_json(const VerificationReport& r) {
  ordered_json j;
  j["ok"] = r.ok();
  j["n"] = r.n;
  j["mst_bottleneck"] = r.mst_bottleneck;
  ordered_json layers = ordered_json::array();
  for (const LayerReport& l : r.layers) {
    ordered_json o;
    o["edges"] = l.edges;
    o["valid"] = l.valid;
    o["invalid"] = edges_json(l.invalid);
    o["plane"] = l.plane;
    o["crossings"] = pair_list(l.crossings);
    o["overlaps"] = pair_list(l.overlaps);
    o["spanning"] = l.spanning;
    o["components"] = l.components;
    o["acyclic"] = l.acyclic;
    o["bottleneck"] = l.bottleneck;
    o["ratio"] = l.ratio;
    o["edges_above_2be"] = l.edges_above_2be;
    layers.push_back(o);
  }
  j["layers"] = layers;
  j["pairwise_disjoint"] = r.pairwise_disjoint;
  j["duplicates"] = edges_json(r.duplicates);
  j["overall_max_ratio"] = r.overall_max_ratio;
  j["ratio_bound"] = r.ratio_bound ? ordered_json(*r.ratio_bound) : ordered_json();
  j["ratio_ok"] = r.ratio_ok;
  j["edges_above_2be"] = r.edges_above_2be;
  j["long_edges_ok"] = r.long_edges_ok;
  j["failures"] = r.failures;
  return finish(j);
}

LayerFile parse_layer_file(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("layer file: ") + e.what());
  }
  try {
    LayerFile f;
    f.mode = j.at("mode").get<std::string>();
    f.n = j.value("n", std::size_t{0});
    if (f.mode == "two-tree") {
      f.k = 2;
      f.layers.push_back(parse_edges(j.at("red")));
      f.layers.push_back(parse_edges(j.at("blue")));
      if (j.contains("bound")) f.bound = j.at("bound").get<double>();
    } else if (f.mode == "distributed") {
      f.k = j.at("k").get<int>();
      for (const auto& l : j.at("layers")) f.layers.push_back(parse_edges(l));
      f.beta = j.at("beta").get<double>();
      if (j.contains("cell_side")) f.cell_side = j.at("cell_side").get<double>();
    } else {
      throw PreconditionError("layer file: unknown mode '" + f.mode + "'");
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("layer file: ") + e.what());
  }
}

VerificationReport verify_layer_file(const LayerFile& file, const PointSet& ps, bool flag_overlaps) {
  if (file.mode == "two-tree") {
    VerifyOptions o = two_tree_options();
    o.flag_overlaps = flag_overlaps;
    if (file.bound && *file.bound < *o.ratio_bound) {
      o.ratio_bound = *file.bound;
      if (*file.bound <= 2.0) o.max_edges_above_2be = 0;
    }
    return verify_layers(file.layers, ps, o);
  }
  LayerSet ls;
  ls.k = file.k;
  ls.layers = file.layers;
  ls.beta = file.beta.value_or(0.0);
  VerifyOptions o;
  o.flag_overlaps = flag_overlaps;
  return verify_layer_set(ls, ps, o);
}

}  // namespace planelayers
