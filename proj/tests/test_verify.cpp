#include <cmath>
#include <random>

#include "doctest.h"
#include "golden.hpp"
#include "oracles.hpp"
#include "planelayers/centralized.hpp"
#include "planelayers/error.hpp"
#include "planelayers/generators.hpp"
#include "planelayers/general_position.hpp"
#include "planelayers/verify.hpp"

using namespace planelayers;

TEST_SUITE("verify") {
  TEST_CASE("counting bound closed form") {
    const CountingBound a = counting_lower_bound(5, 2);
    CHECK(a.short_edges == 7);
    CHECK(a.needed == 8);
    CHECK_FALSE(a.feasible);
    const CountingBound b = counting_lower_bound(10, 1);
    CHECK(b.short_edges == 9);
    CHECK(b.needed == 9);
    CHECK(b.feasible);
    CHECK_THROWS(counting_lower_bound(1, 2));
    CHECK_THROWS(counting_lower_bound(5, 0));
  }

  TEST_CASE("counting bound matches pair enumeration on the unit line") {
    for (std::size_t n = 2; n <= 100; ++n) {
      for (std::size_t k = 1; k <= 10 && k < n; ++k) {
        std::size_t pairs = 0;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i + 1; j < n; ++j) pairs += j - i < k + 1;
        }
        const CountingBound c = counting_lower_bound(n, k);
        CHECK(c.short_edges == pairs);
        CHECK(c.needed == k * (n - 1));
        CHECK(c.feasible == (k == 1));
      }
    }
  }

  TEST_CASE("line instance coordinates are exact") {
    const PointSet ps = gen_line_instance(30, parse_decimal("0.001"));
    const oracle::BigRational eps(1, 1000);
    const oracle::BigInt unit = boost::multiprecision::pow(oracle::BigInt(10), ps.scale());
    for (PointId i = 0; i < ps.size(); ++i) {
      CHECK(oracle::BigInt(ps[i].x) == unit * i);
      CHECK(oracle::BigRational(ps[i].y) == oracle::line_offset(i, eps) * unit);
    }
  }

  TEST_CASE("line instance guards") {
    CHECK_THROWS_AS(gen_line_instance(4, parse_decimal("0")), PreconditionError);
    CHECK(gen_line_instance(4, parse_decimal("0"), true).size() == 4);
    CHECK_THROWS_AS(gen_line_instance(1, parse_decimal("0.001")), PreconditionError);
  }

  TEST_CASE("line instance of five points has the path as MST") {
    const PointSet ps = gen_line_instance(5, parse_decimal("0.001"));
    CHECK(build_emst(ps) == EdgeList{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(std::abs(bottleneck(build_emst(ps), ps).length - 1.0) < 1e-3);
  }

  TEST_CASE("two trees on line instances stay within three times the bottleneck") {
    for (std::size_t n = 4; n <= 64; n += 6) {
      const PointSet ps = perturb(gen_line_instance(n, parse_decimal("0.001")));
      const TwoTrees t = build_two_disjoint_trees(ps);
      const VerificationReport r = verify_two_trees(t, ps);
      CHECK(r.ok());
      CHECK(r.overall_max_ratio <= 3.0 + 1e-9);
      if (n >= 10) CHECK(r.overall_max_ratio >= 2.0 - 1e-6);
    }
  }

  TEST_CASE("verifier plane check agrees with rational arithmetic") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
      const PointSet ps = oracle::random_general(12, 700 + trial, 50, 0);
      EdgeList layer;
      std::set<Segment> seen;
      while (layer.size() < 11) {
        const Segment e(rng() % 12, rng() % 12);
        if (e.a != e.b && seen.insert(e).second) layer.push_back(e);
      }
      const VerificationReport r = verify_layers({layer}, ps);
      CHECK(r.layers[0].plane == oracle::plane(layer, ps));
      for (const auto& [e, f] : r.layers[0].crossings) {
        CHECK(oracle::rational_cross(ps[e.a], ps[e.b], ps[f.a], ps[f.b]));
      }
      CHECK(r.layers[0].spanning == (oracle::bfs_components(layer, 12) == 1));
    }
  }

  TEST_CASE("corrupted layers are reported") {
    const PointSet ps = gen_uniform(60, 3);
    const TwoTrees t = build_two_disjoint_trees(ps);
    REQUIRE(verify_two_trees(t, ps).ok());
    std::mt19937_64 rng(1);
    std::size_t tripped = 0;
    for (int trial = 0; trial < 200; ++trial) {
      LayerFile bad{"two-tree", 2, ps.size(), {t.red, t.blue}, std::nullopt, std::nullopt, 3.0};
      EdgeList& layer = bad.layers[trial % 2];
      Segment& e = layer[rng() % layer.size()];
      PointId w = rng() % ps.size();
      while (e.has(w)) w = rng() % ps.size();
      e = Segment(e.a, w);
      const bool flagged = !verify_layer_file(bad, ps).ok();
      CHECK(flagged != golden::oracle_valid(bad, ps));
      tripped += flagged;
    }
    CHECK(tripped > 150);
    TwoTrees cut = t;
    cut.red.pop_back();
    CHECK_FALSE(verify_two_trees(cut, ps).ok());
    TwoTrees shared = t;
    shared.blue.push_back(t.red.front());
    CHECK_FALSE(verify_two_trees(shared, ps).ok());
  }

  TEST_CASE("empty layer on one point") {
    const PointSet ps({{0, 0}}, 0);
    const VerificationReport r = verify_layers({EdgeList{}}, ps);
    CHECK(r.ok());
    CHECK(r.layers[0].spanning);
    CHECK(r.layers[0].plane);
  }

  TEST_CASE("overlaps are flagged on request") {
    const PointSet ps({{0, 0}, {4, 0}, {2, 0}, {2, 3}}, 0);
    const EdgeList layer{{0, 1}, {2, 3}, {1, 3}};
    VerifyOptions opt;
    CHECK(verify_layers({layer}, ps, opt).layers[0].overlaps.empty());
    opt.flag_overlaps = true;
    const VerificationReport r = verify_layers({layer}, ps, opt);
    CHECK(r.layers[0].overlaps.size() == 1);
    CHECK_FALSE(r.ok());
  }

  TEST_CASE("layer count must match k") {
    const PointSet ps = gen_uniform(100, 2);
    LayerSet ls = build_k_layers(ps, 2);
    CHECK(verify_layer_set(ls, ps).ok());
    ls.layers.pop_back();
    CHECK_FALSE(verify_layer_set(ls, ps).ok());
  }
}

TEST_SUITE("generators") {
  TEST_CASE("uniform points are deterministic and in range") {
    const PointSet a = gen_uniform(200, 7);
    const PointSet b = gen_uniform(200, 7);
    CHECK(a.points() == b.points());
    CHECK(a.points() != gen_uniform(200, 8).points());
    for (PointId i = 0; i < a.size(); ++i) {
      CHECK(a.real_x(i) >= 0.0);
      CHECK(a.real_x(i) <= 1000.0);
      CHECK(a.real_y(i) >= 0.0);
      CHECK(a.real_y(i) <= 1000.0);
    }
  }

  TEST_CASE("clusters are deterministic") {
    const PointSet a = gen_clusters(60, 3, 1);
    CHECK(a.size() == 60);
    CHECK(a.points() == gen_clusters(60, 3, 1).points());
    CHECK_THROWS_AS(gen_clusters(10, 0, 1), UsageError);
    CHECK_THROWS_AS(gen_uniform(0, 1), UsageError);
  }
}
