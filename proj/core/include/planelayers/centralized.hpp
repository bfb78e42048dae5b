#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "planelayers/geometry.hpp"
#include "planelayers/mst.hpp"

namespace planelayers {

struct TwoTrees {
  EdgeList red;
  EdgeList blue;
  std::optional<Segment> shared;
  double max_ratio_red = 0.0;   // BE(red) / BE(MST)
  double max_ratio_blue = 0.0;  // BE(blue) / BE(MST)
};

// Fills the ratio fields against the given MST bottleneck.
void set_ratios(TwoTrees& trees, const PointSet& ps, const BottleneckInfo& mst_bottleneck);

struct SideSplit {
  Segment rs;
  std::vector<PointId> s_minus;  // sorted, contains r and s
  std::vector<PointId> s_plus;   // sorted, contains r and s
  EdgeList e_r_minus;
  EdgeList e_r_plus;
  EdgeList e_b_minus;
  EdgeList e_b_plus;
};

enum class Recolor { Original, Inverted, MinusInverted, PlusInverted };

const char* to_string(Recolor v);

// Red takes parent edges on odd levels and grandparent edges on even levels;
// blue the opposite. Both contain rs.
TwoTrees construction1(const RootedMst& rm, const PointSet& ps);

SideSplit side_split(const RootedMst& rm, const PointSet& ps, const TwoTrees& trees);

TwoTrees recolor(const SideSplit& split, Recolor variant);

// Smallest-id vertex of degree >= 3 whose consecutive incident edges all span
// angles < pi.
std::optional<PointId> find_flat_vertex(const EdgeList& mst, const PointSet& ps);

TwoTrees disjoint_trees_flat(const EdgeList& mst, const PointSet& ps, PointId v);

enum class PTag { k1a, k1b, k1c, k1d, k1e, k1f, k2a, k2b };

const char* to_string(PTag tag);

struct PCase {
  std::array<PointId, 4> p{};  // v3, v2, v1, v0
  PTag tag = PTag::k1a;
  bool mirrored = false;

  PointId v3() const { return p[0]; }
  PointId v2() const { return p[1]; }
  PointId v1() const { return p[2]; }
  PointId v0() const { return p[3]; }
};

// Requires every vertex to have a big angle. `leaf` overrides the choice of v3
// (default: smallest-id leaf).
PCase select_p(const EdgeList& mst, const PointSet& ps, std::optional<PointId> leaf = {});

struct PointedDetails {
  std::optional<Segment> replaced_by;  // edge that took the place of v3v0
  std::vector<PointId> region;         // points inside the triangle when replacing
};

// `ps` is the original (unmirrored) set; the case data says whether to mirror.
TwoTrees disjoint_trees_pointed(const EdgeList& mst, const PointSet& ps, const PCase& pc,
                                PointedDetails* details = nullptr);

// The hull-path edge that reconnects blue after dropping v3v0. `canonical` is
// the point set in the orientation the case was computed for. Throws
// InternalError when no unique such edge exists.
Segment mst3_replacement(const EdgeList& blue, const PointSet& canonical, const PCase& pc,
                         std::vector<PointId>* region = nullptr);

struct TwoTreeOptions {
  std::optional<PointId> leaf;
};

struct TwoTreeBuild {
  TwoTrees trees;
  EdgeList mst;
  BottleneckInfo mst_bottleneck;
  std::optional<PointId> flat_vertex;
  std::optional<PCase> pcase;
  PointedDetails pointed;
  double bound = 0.0;  // 2 for the flat branch, 3 for the pointed one
};

TwoTreeBuild build_two_disjoint_trees_detailed(const PointSet& ps, const TwoTreeOptions& options = {});

TwoTrees build_two_disjoint_trees(const PointSet& ps, const TwoTreeOptions& options = {});

}  // namespace planelayers
