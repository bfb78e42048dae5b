#include "golden.hpp"

#include "oracles.hpp"

#include <fstream>
#include <random>
#include <sstream>

namespace golden {

using namespace planelayers;

std::string data_dir() { return PLANE_LAYERS_TEST_DATA; }

std::string Entry::points_path() const { return data_dir() + "/" + name + ".txt"; }
std::string Entry::json_path() const { return data_dir() + "/" + name + "." + mode + ".json"; }
std::string Entry::svg_path() const { return data_dir() + "/" + name + "." + mode + ".svg"; }

std::vector<Entry> manifest() {
  std::vector<Entry> out;
  std::istringstream in(read_text_file(data_dir() + "/manifest.txt"));
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    Entry e;
    row >> e.name >> e.mode >> e.k;
    out.push_back(e);
  }
  return out;
}

VerificationReport verify_file(const LayerFile& file, const PointSet& ps) { return verify_layer_file(file, ps); }

bool oracle_valid(const LayerFile& file, const PointSet& ps) {
  const oracle::BigInt be2 = oracle::max_squared(build_emst(ps), ps);
  std::set<Segment> seen;
  for (const EdgeList& layer : file.layers) {
    for (const Segment& e : layer) {
      if (e.a == e.b || e.b >= ps.size() || !seen.insert(e).second) return false;
    }
    if (!oracle::plane(layer, ps) || oracle::bfs_components(layer, ps.size()) != 1) return false;
  }
  auto above = [&](const oracle::BigInt& limit2) {
    std::size_t c = 0;
    for (const EdgeList& layer : file.layers) {
      for (const Segment& e : layer) {
        const oracle::BigInt dx = oracle::BigInt(ps[e.a].x) - ps[e.b].x;
        const oracle::BigInt dy = oracle::BigInt(ps[e.a].y) - ps[e.b].y;
        c += dx * dx + dy * dy > limit2;
      }
    }
    return c;
  };
  if (file.mode == "two-tree") {
    for (const EdgeList& layer : file.layers) {
      if (!oracle::spanning_tree(layer, ps.size())) return false;
    }
    if (file.bound && *file.bound <= 2.0) return above(4 * be2) == 0;
    return above(9 * be2) == 0 && above(4 * be2) <= 1;
  }
  // (12 sqrt2 k)^2 = 288 k^2
  return file.layers.size() == static_cast<std::size_t>(file.k) && above(288 * file.k * file.k * be2) == 0;
}

MutationStats mutate(const LayerFile& file, const PointSet& ps, std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  MutationStats stats;
  for (std::size_t t = 0; t < trials; ++t) {
    LayerFile bad = file;
    EdgeList& layer = bad.layers[rng() % bad.layers.size()];
    Segment& e = layer[rng() % layer.size()];
    PointId w = rng() % ps.size();
    while (e.has(w)) w = rng() % ps.size();
    const PointId keep = rng() % 2 ? e.a : e.b;
    e = Segment(keep, w);
    ++stats.trials;
    const bool tripped = !verify_file(bad, ps).ok();
    const bool valid = oracle_valid(bad, ps);
    stats.tripped += tripped;
    stats.equivalent += valid;
    stats.disagreements += tripped == valid;
  }
  return stats;
}

}  // namespace golden
