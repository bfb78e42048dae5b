#pragma once

// Independent reference implementations used only by the tests. They share no
// code with the library beyond the Point/PointSet containers.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "planelayers/geometry.hpp"

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
using planelayers::EdgeList;
using planelayers::Point;
using planelayers::PointId;
using planelayers::PointSet;
using planelayers::Segment;

BigInt big_cross(const Point& o, const Point& a, const Point& b);

// Segment intersection by solving the parametric system over the rationals.
// True iff the segments meet in a single point interior to both.
bool rational_cross(const Point& p1, const Point& p2, const Point& q1, const Point& q2);

// Kruskal with the same (d^2, min id, max id) order; sorted edges.
EdgeList kruskal(const PointSet& ps);

// Components of the graph on n vertices by BFS.
std::size_t bfs_components(const EdgeList& edges, std::size_t n);

// Strict hull corners by testing every pair line: O(n^3).
std::set<PointId> brute_hull_vertices(std::span<const PointId> ids, const PointSet& ps);

// Tukey depth of c: closed halfplane counts over O(m^2) candidate boundary
// directions, O(m^3) total. Coordinates must stay below 2^62 / 4.
std::size_t brute_tukey_depth(const Point& c, std::span<const Point> pts);

// Angle order by pairwise counting: rank(u) = number of directions strictly
// smaller, decided by quadrant and an exact cross product in BigInt.
std::vector<std::size_t> angle_ranks(std::span<const Point> dirs);

// Graph distance in a tree via BFS from every vertex (small n).
std::vector<std::vector<int>> tree_distances(const EdgeList& edges, std::size_t n);

// Random point set in general position with integer coordinates in [0, range).
PointSet random_general(std::size_t n, std::uint64_t seed, std::int64_t range = 1000000, int scale = 3);

// Points (i, eps_i) of the perturbed unit line, built independently of the
// library generator from exact rationals.
BigRational line_offset(std::size_t i, const BigRational& eps);

}  // namespace oracle

namespace oracle {

// No two edges without a common endpoint cross (rational arithmetic).
bool plane(const EdgeList& edges, const PointSet& ps);

// Spanning tree on all n points: n-1 distinct edges, connected.
bool spanning_tree(const EdgeList& edges, std::size_t n);

// Longest edge squared in BigInt.
BigInt max_squared(const EdgeList& edges, const PointSet& ps);

}  // namespace oracle
