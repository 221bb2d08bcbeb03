#include "c3m/farey.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <utility>

namespace c3m {

std::pair<Int, Int> dual_curve(Int a, Int b) {
  // Extended Euclid: a*u + b*v == 1.
  Int old_r = a, r = b;
  Int old_u = 1, u = 0;
  Int old_v = 0, v = 1;
  while (r != 0) {
    Int quot = old_r / r;
    old_r = std::exchange(r, old_r - quot * r);
    old_u = std::exchange(u, old_u - quot * u);
    old_v = std::exchange(v, old_v - quot * v);
  }
  require(old_r == 1 || old_r == -1, "dual_curve needs coprime input");
  if (old_r == -1) {
    old_u = -old_u;
    old_v = -old_v;
  }
  return {-old_v, old_u};
}

Int pq_complexity(Int p, Int q) {
  if (gcd_int(p, q) != 1) throw domain_error("not coprime");
  if (p < 0) {
    p = -p;
    q = -q;
  }
  Int extra = 0;
  if (q < 0) {
    // |p,q| = 1 + |p,-q| for p > 0 > q; p = 0 forces q = -1, handled below.
    q = -q;
    extra = 1;
    if (p == 0) return 0;  // |0,-1| = |0,1| = 0
  }
  // Now p >= 0, q >= 0, not both zero, coprime.
  if (p == 0 || q == 0) return extra;        // |0,1|, |1,0|
  Int count = extra;
  while (!(p == 1 && q == 1)) {
    if (p < q) std::swap(p, q);              // |p,q| = |q,p|
    if (q == 1) {
      count += p - 1;                        // collapse (p,1) -> (1,1)
      break;
    }
    count += p / q;                          // quotient-accumulated steps
    p %= q;                                  // p stays >= 1 by coprimality
  }
  return count;
}

Slope::Slope(Int p_raw, Int q_raw) {
  if (gcd_int(p_raw, q_raw) != 1) throw domain_error("not coprime");
  if (q_raw < 0 || (q_raw == 0 && p_raw < 0)) {
    p_raw = -p_raw;
    q_raw = -q_raw;
  }
  p = p_raw;
  q = q_raw;
}

std::string slope_to_string(const Slope& s) {
  if (s.q == 0) return "inf";
  if (s.q == 1) return std::to_string(s.p);
  return std::to_string(s.p) + "/" + std::to_string(s.q);
}

namespace {

std::string strip_ws(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

Int parse_int_full(const std::string& tok) {
  if (tok.empty()) throw parse_error("expected an integer");
  Int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw parse_error("bad integer '" + tok + "'");
  }
  return value;
}

}  // namespace

Slope parse_slope(const std::string& text) {
  std::string tok = strip_ws(text);
  if (tok == "inf") return Slope::infinity();
  auto bar = tok.find('/');
  if (bar == std::string::npos) return Slope(parse_int_full(tok), 1);
  return Slope(parse_int_full(tok.substr(0, bar)),
               parse_int_full(tok.substr(bar + 1)));
}

ThetaGraph::ThetaGraph(const Slope& a, const Slope& b, const Slope& c) {
  slopes = {a, b, c};
  std::sort(slopes.begin(), slopes.end());
  if (abs_int(slope_det(slopes[0], slopes[1])) != 1 ||
      abs_int(slope_det(slopes[0], slopes[2])) != 1 ||
      abs_int(slope_det(slopes[1], slopes[2])) != 1) {
    throw domain_error("not a theta graph");
  }
}

std::string theta_to_string(const ThetaGraph& t) {
  return "{" + slope_to_string(t.slopes[0]) + "," +
         slope_to_string(t.slopes[1]) + "," + slope_to_string(t.slopes[2]) +
         "}";
}

ThetaGraph parse_theta(const std::string& text) {
  std::string tok = strip_ws(text);
  if (tok.size() < 2 || tok.front() != '{' || tok.back() != '}') {
    throw parse_error("theta graph must look like {s1,s2,s3}");
  }
  tok = tok.substr(1, tok.size() - 2);
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto comma = tok.find(',', start);
    if (comma == std::string::npos) {
      parts.push_back(tok.substr(start));
      break;
    }
    parts.push_back(tok.substr(start, comma - start));
    start = comma + 1;
  }
  if (parts.size() != 3) throw parse_error("theta graph needs three slopes");
  return ThetaGraph(parse_slope(parts[0]), parse_slope(parts[1]),
                    parse_slope(parts[2]));
}

ThetaGraph theta_std(Int i) {
  return ThetaGraph(Slope(i, 1), Slope(i + 1, 1), Slope::infinity());
}

ThetaGraph theta_fan(Int i) {
  if (i == 0 || i == -1) throw domain_error("theta_fan needs i, i+1 nonzero");
  return ThetaGraph(Slope(0, 1), Slope(1, i), Slope(1, i + 1));
}

namespace {

// The two triangles adjacent across edge {e1, e2} have third vertices
// e1 + e2 and e1 - e2 (as vectors, up to sign).
ThetaGraph flip_across(const Slope& e1, const Slope& e2, const Slope& third) {
  Slope sum(e1.p + e2.p, e1.q + e2.q);
  Slope diff(e1.p - e2.p, e1.q - e2.q);
  if (sum == third) return ThetaGraph(e1, e2, diff);
  require(diff == third, "flip_across: edge does not bound the triangle");
  return ThetaGraph(e1, e2, sum);
}

struct Edge {
  Slope a, b, opposite;
};

std::array<Edge, 3> edges_of(const ThetaGraph& t) {
  const auto& s = t.slopes;
  return {Edge{s[0], s[1], s[2]}, Edge{s[0], s[2], s[1]},
          Edge{s[1], s[2], s[0]}};
}

// Sign of the side of the projective line through (e1, e2) on which x lies.
// The sign is only meaningful when compared for two slopes with the same
// fixed (e1, e2); it is zero exactly on the endpoints.
Int side(const Slope& e1, const Slope& e2, const Slope& x) {
  return slope_det(e1, x) * slope_det(x, e2);
}

// An edge of cur separates cur from the targets when every target slope
// that is not an endpoint lies strictly on the side away from the
// opposite vertex.  For cur != destination exactly one edge qualifies.
template <typename TargetRange>
const Edge* separating_edge(const std::array<Edge, 3>& edges,
                            const TargetRange& targets) {
  const Edge* found = nullptr;
  for (const Edge& e : edges) {
    Int w_side = side(e.a, e.b, e.opposite);
    bool separates = true;
    bool any = false;
    for (const Slope& v : targets) {
      if (v == e.a || v == e.b) continue;
      any = true;
      if (side(e.a, e.b, v) * w_side >= 0) {
        separates = false;
        break;
      }
    }
    if (separates && any) {
      require(found == nullptr, "separating edge is not unique");
      found = &e;
    }
  }
  require(found != nullptr, "no separating edge");
  return found;
}

constexpr Int kMaxWalkSteps = 1 << 22;

}  // namespace

Int dist_theta_theta(const ThetaGraph& a, const ThetaGraph& b) {
  ThetaGraph cur = a;
  Int steps = 0;
  while (!(cur == b)) {
    auto edges = edges_of(cur);
    const Edge* e = separating_edge(edges, b.slopes);
    cur = flip_across(e->a, e->b, e->opposite);
    require(++steps < kMaxWalkSteps, "walk did not terminate");
  }
  return steps;
}

std::vector<ThetaGraph> path_theta(const ThetaGraph& a, const ThetaGraph& b) {
  std::vector<ThetaGraph> path{a};
  ThetaGraph cur = a;
  while (!(cur == b)) {
    auto edges = edges_of(cur);
    const Edge* e = separating_edge(edges, b.slopes);
    cur = flip_across(e->a, e->b, e->opposite);
    path.push_back(cur);
    require(static_cast<Int>(path.size()) < kMaxWalkSteps,
            "walk did not terminate");
  }
  return path;
}

TreeDistance dist_slope_theta(const Slope& s, const ThetaGraph& t) {
  if (t.contains(s)) return TreeDistance{-1};
  ThetaGraph cur = t;
  Int steps = 0;
  std::array<Slope, 1> target{s};
  while (!cur.contains(s)) {
    auto edges = edges_of(cur);
    const Edge* e = separating_edge(edges, target);
    cur = flip_across(e->a, e->b, e->opposite);
    require(++steps < kMaxWalkSteps, "walk did not terminate");
  }
  return TreeDistance{steps - 1};
}

std::array<ThetaGraph, 3> flips(const ThetaGraph& t) {
  auto edges = edges_of(t);
  return {flip_across(edges[0].a, edges[0].b, edges[0].opposite),
          flip_across(edges[1].a, edges[1].b, edges[1].opposite),
          flip_across(edges[2].a, edges[2].b, edges[2].opposite)};
}

}  // namespace c3m
