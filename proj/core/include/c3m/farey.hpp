#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "c3m/base.hpp"

namespace c3m {

// Complexity of a coprime pair, defined by the recursive collapse
//   |1,0| = |0,1| = |1,1| = 0 (up to sign),
//   |p,q| = 1 + |p,q-p|      for q > p > 0,
//   |p,q| = 1 + |p-q,q|      for p > q > 0,
//   |p,q| = 1 + |p,-q|       for p > 0 > q,
//   |p,q| = |-p,-q|          for p < 0,
// evaluated with quotient-accumulated Euclidean steps (O(log) arithmetic).
// Throws domain_error("not coprime") when gcd(p, q) != 1 (this covers (0, 0)).
Int pq_complexity(Int p, Int q);

// A slope p/q on the torus: a coprime pair up to overall sign.
// Canonical representative: q > 0, or (p, q) = (1, 0) for infinity.
struct Slope {
  Int p = 1;
  Int q = 0;

  Slope() = default;                 // infinity
  Slope(Int p_raw, Int q_raw);       // canonicalizes; throws on non-coprime

  static Slope infinity() { return Slope(1, 0); }
  bool is_infinity() const { return q == 0; }

  // Total order: lexicographic on (q, p); infinity sorts first.
  friend bool operator==(const Slope& a, const Slope& b) = default;
  friend bool operator<(const Slope& a, const Slope& b) {
    if (a.q != b.q) return a.q < b.q;
    return a.p < b.p;
  }
};

// det of the 2x2 matrix with columns u, v.
inline Int slope_det(const Slope& u, const Slope& v) {
  return u.p * v.q - u.q * v.p;
}

std::string slope_to_string(const Slope& s);
Slope parse_slope(const std::string& text);  // "p/q", "p", "inf"

// (x, y) with a*y - b*x == 1, for coprime (a, b).
std::pair<Int, Int> dual_curve(Int a, Int b);

// Distance in the dual tree of the Farey tessellation; -1 means
// "slope is a vertex of the triangle".
struct TreeDistance {
  Int value = 0;
  friend bool operator==(const TreeDistance&, const TreeDistance&) = default;
  friend bool operator<(const TreeDistance& a, const TreeDistance& b) {
    return a.value < b.value;
  }
};

// An unordered triple of pairwise Farey-adjacent slopes (an ideal triangle
// of the tessellation), stored sorted in the slope order.
struct ThetaGraph {
  std::array<Slope, 3> slopes{};

  ThetaGraph() = default;
  ThetaGraph(const Slope& a, const Slope& b, const Slope& c);  // validates

  bool contains(const Slope& s) const {
    return slopes[0] == s || slopes[1] == s || slopes[2] == s;
  }

  friend bool operator==(const ThetaGraph&, const ThetaGraph&) = default;
  friend bool operator<(const ThetaGraph& a, const ThetaGraph& b) {
    return a.slopes < b.slopes;
  }
};

std::string theta_to_string(const ThetaGraph& t);
ThetaGraph parse_theta(const std::string& text);  // "{s1,s2,s3}"

// theta^(i) = {i, i+1, infinity}.
ThetaGraph theta_std(Int i);
// theta_(i) = {0, 1/i, 1/(i+1)}; requires i and i+1 nonzero.
ThetaGraph theta_fan(Int i);

// The three triangles sharing an edge with t.
std::array<ThetaGraph, 3> flips(const ThetaGraph& t);

// Flip distance between triangles, computed by walking the unique
// separating edge at each step (not by breadth-first search).
Int dist_theta_theta(const ThetaGraph& a, const ThetaGraph& b);

// The unique simple path a = t_0, ..., t_n = b in the dual tree.
std::vector<ThetaGraph> path_theta(const ThetaGraph& a, const ThetaGraph& b);

// Distance from a slope to a triangle: (number of triangles walked to reach
// one containing s) - 1; equals -1 exactly when s is a vertex of t.
TreeDistance dist_slope_theta(const Slope& s, const ThetaGraph& t);

}  // namespace c3m
