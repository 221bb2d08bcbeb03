#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "c3m/farey.hpp"

using namespace c3m;

namespace {

// Oracle 1: the recursive collapse, implemented literally with single
// subtraction steps (no quotient shortcuts).
Int naive_pq(Int p, Int q) {
  if ((p == 1 && q == 0) || (p == -1 && q == 0) || (p == 0 && q == 1) ||
      (p == 0 && q == -1) || (p == 1 && q == 1)) {
    return 0;
  }
  if (p < 0) return naive_pq(-p, -q);
  if (q > p && p > 0) return 1 + naive_pq(p, q - p);
  if (p > q && q > 0) return 1 + naive_pq(p - q, q);
  if (p > 0 && q < 0) return 1 + naive_pq(p, -q);
  REQUIRE(p == q);  // coprime: only (1,1), already handled
  return 0;
}

// Oracle 2: number of Farey edges crossed by the ray from the interior of
// {0, 1, inf} to the slope p/q, found by fanning around infinity and then
// descending by mediants.  Fully independent of the recursive definition.
struct Frac {
  Int n, d;  // d >= 1
};

bool frac_less(const Frac& a, const Frac& b) { return a.n * b.d < b.n * a.d; }
bool frac_eq(const Frac& a, const Frac& b) { return a.n * b.d == b.n * a.d; }

Int crossing_count(Int p, Int q) {
  REQUIRE(q >= 0);
  if (q == 0) return 0;  // infinity is a vertex
  Frac g{p, q};
  if (q == 1 && (p == 0 || p == 1)) return 0;  // vertices 0, 1
  Int count = 0;
  Frac lo{0, 1}, hi{0, 1};
  if (q == 1) {
    // Integer slope: walk the fan around infinity only.
    return p >= 2 ? p - 1 : -p;  // p >= 2 or p <= -1 here
  }
  if (p > q) {  // g > 1: cross {1,inf}, ..., {k,inf}
    Int k = p / q;
    count = k;
    lo = {k, 1};
    hi = {k + 1, 1};
  } else if (p > 0) {  // 0 < g < 1
    lo = {0, 1};
    hi = {1, 1};
  } else {  // g < 0: cross {0,inf}, {-1,inf}, ..., then descend
    Int k = (-p) / q;  // g in (-k-1, -k)
    count = k + 1;
    lo = {-k - 1, 1};
    hi = {-k, 1};
  }
  while (true) {
    ++count;  // entering interval (lo, hi) crosses the edge {lo, hi}
    Frac mid{lo.n + hi.n, lo.d + hi.d};
    if (frac_eq(mid, g)) return count;
    if (frac_less(g, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
}

std::map<ThetaGraph, Int> bfs_ball(const ThetaGraph& root, Int radius) {
  std::map<ThetaGraph, Int> dist{{root, 0}};
  std::vector<ThetaGraph> frontier{root};
  for (Int r = 1; r <= radius; ++r) {
    std::vector<ThetaGraph> next;
    for (const auto& t : frontier) {
      for (const auto& nb : flips(t)) {
        if (dist.emplace(nb, r).second) next.push_back(nb);
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

Int modinv(Int q, Int p) {
  Int t = 0, new_t = 1, r = p, new_r = q % p;
  while (new_r != 0) {
    Int quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  REQUIRE(r == 1);
  return ((t % p) + p) % p;
}

}  // namespace

TEST_CASE("pq_complexity matches the literal recursion on |p|,|q| <= 200") {
  for (Int p = -200; p <= 200; ++p) {
    for (Int q = -200; q <= 200; ++q) {
      if (gcd_int(p, q) != 1) continue;
      CAPTURE(p);
      CAPTURE(q);
      REQUIRE(pq_complexity(p, q) == naive_pq(p, q));
    }
  }
}

TEST_CASE("pq_complexity equals the geodesic crossing count") {
  for (Int p = -200; p <= 200; ++p) {
    for (Int q = 0; q <= 200; ++q) {
      if (gcd_int(p, q) != 1) continue;
      if (q == 0 && p != 1) continue;  // canonical infinity only
      CAPTURE(p);
      CAPTURE(q);
      REQUIRE(pq_complexity(p, q) == crossing_count(p, q));
    }
  }
}

TEST_CASE("pq_complexity fixed values") {
  CHECK(pq_complexity(1, 0) == 0);
  CHECK(pq_complexity(0, 1) == 0);
  CHECK(pq_complexity(1, 1) == 0);
  CHECK(pq_complexity(2, 1) == 1);
  CHECK(pq_complexity(5, 2) == 3);
  CHECK(pq_complexity(3, -1) == 3);
  CHECK(pq_complexity(-5, -2) == 3);
  CHECK(pq_complexity(3, 2) == 2);
  CHECK(pq_complexity(11, 2) == 6);
  CHECK(pq_complexity(13, 2) == 7);
  CHECK(pq_complexity(16, 3) == 7);
  CHECK(pq_complexity(17, 3) == 7);
  CHECK(pq_complexity(16, 7) == 6);
  CHECK(pq_complexity(1, -5) == 5);
  CHECK(pq_complexity(5, -1) == 5);
  CHECK(pq_complexity(4, 3) == 3);
  CHECK(pq_complexity(5, 4) == 4);
  for (Int n = 1; n <= 20; ++n) {
    CHECK(pq_complexity(n, 1) == n - 1);
    CHECK(pq_complexity(-n, 1) == n);
    CHECK(pq_complexity(1, n) == n - 1);
  }
}

TEST_CASE("pq_complexity rejects non-coprime input") {
  CHECK_THROWS_AS(pq_complexity(4, 2), domain_error);
  CHECK_THROWS_AS(pq_complexity(0, 0), domain_error);
  CHECK_THROWS_AS(pq_complexity(6, -9), domain_error);
  CHECK_THROWS_WITH(pq_complexity(4, 2), "not coprime");
}

TEST_CASE("pq_complexity symmetries (randomized)") {
  std::mt19937_64 rng(20260822);
  std::uniform_int_distribution<Int> d(1, 2000);
  int done = 0;
  while (done < 10000) {
    Int p = d(rng), q = d(rng);
    if (gcd_int(p, q) != 1) continue;
    ++done;
    Int base = pq_complexity(p, q);
    CHECK(pq_complexity(q, p) == base);
    if (q < p) {
      CHECK(pq_complexity(p, p - q) == base);
      Int qi = modinv(q, p);
      CHECK(pq_complexity(p, qi) == base);
      CHECK(pq_complexity(p, p - qi) == base);
      for (Int k = 0; k <= 4; ++k) {
        CHECK(pq_complexity(p, q + k * p) == base + k);
        CHECK(pq_complexity(p, -q - k * p) == base + k + 1);
      }
    }
    CHECK(pq_complexity(p + q, q) == pq_complexity(p, -q));
  }
}

TEST_CASE("slope canonical form and order") {
  CHECK(Slope(3, -1) == Slope(-3, 1));
  CHECK(Slope(-1, 0) == Slope::infinity());
}

TEST_CASE("slope construction rejects non-coprime pairs") {
  CHECK_THROWS_AS(Slope(2, 4), domain_error);
  CHECK_THROWS_AS(Slope(0, 0), domain_error);
}

TEST_CASE("slope ordering: infinity first, then by (q, p)") {
  std::vector<Slope> v{Slope(1, 1), Slope::infinity(), Slope(-1, 2),
                       Slope(0, 1), Slope(-5, 1)};
  std::sort(v.begin(), v.end());
  CHECK(v[0] == Slope::infinity());
  CHECK(v[1] == Slope(-5, 1));
  CHECK(v[2] == Slope(0, 1));
  CHECK(v[3] == Slope(1, 1));
  CHECK(v[4] == Slope(-1, 2));
}

TEST_CASE("slope parse and print round-trip") {
  for (const char* s : {"inf", "0", "1", "-4", "-3/2", "5/2", "-17/3"}) {
    CHECK(slope_to_string(parse_slope(s)) == s);
  }
  CHECK(parse_slope(" - 3 / 2 ") == Slope(-3, 2));
}

TEST_CASE("slope parse rejects garbage") {
  CHECK_THROWS_AS(parse_slope(""), parse_error);
  CHECK_THROWS_AS(parse_slope("x/2"), parse_error);
  CHECK_THROWS_AS(parse_slope("4/2"), domain_error);
}

TEST_CASE("theta graph validation and printing") {
  ThetaGraph t0 = theta_std(0);
  CHECK(theta_to_string(t0) == "{inf,0,1}");
  CHECK(parse_theta("{0, 1, inf}") == t0);
  CHECK_THROWS_AS(ThetaGraph(Slope(0, 1), Slope(2, 1), Slope::infinity()),
                  domain_error);
  ThetaGraph b5(Slope(-1, 1), Slope(-6, 5), Slope(-5, 4));
  CHECK(b5.slopes[0] == Slope(-1, 1));
}

TEST_CASE("flips of the base triangle") {
  std::set<ThetaGraph> got;
  for (const auto& t : flips(theta_std(0))) got.insert(t);
  std::set<ThetaGraph> want{
      ThetaGraph(Slope(0, 1), Slope(1, 1), Slope(1, 2)),
      ThetaGraph(Slope(1, 1), Slope(2, 1), Slope::infinity()),
      ThetaGraph(Slope(-1, 1), Slope(0, 1), Slope::infinity())};
  CHECK(got == want);
}

TEST_CASE("distance between standard triangles") {
  for (Int i = -8; i <= 8; ++i) {
    for (Int j = -8; j <= 8; ++j) {
      CHECK(dist_theta_theta(theta_std(i), theta_std(j)) == abs_int(i - j));
    }
  }
  CHECK(dist_theta_theta(theta_std(-1), theta_std(3)) == 4);
  ThetaGraph fan(Slope(-1, 1), Slope(-1, 2), Slope(0, 1));
  CHECK(dist_theta_theta(theta_std(-2), fan) == 2);
  ThetaGraph b5(Slope(-1, 1), Slope(-6, 5), Slope(-5, 4));
  CHECK(dist_theta_theta(b5, theta_std(-1)) == 5);
}

TEST_CASE("path between triangles") {
  auto path = path_theta(theta_std(0), theta_std(2));
  REQUIRE(path.size() == 3);
  CHECK(path[0] == theta_std(0));
  CHECK(path[1] == theta_std(1));
  CHECK(path[2] == theta_std(2));

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> d(-12, 12);
  for (int it = 0; it < 200; ++it) {
    ThetaGraph a = theta_std(d(rng));
    ThetaGraph b = theta_std(d(rng));
    auto p = path_theta(a, b);
    CHECK(static_cast<Int>(p.size()) == dist_theta_theta(a, b) + 1);
    CHECK(p.front() == a);
    CHECK(p.back() == b);
  }
}

TEST_CASE("slope-to-triangle distances") {
  CHECK(dist_slope_theta(Slope(0, 1), theta_std(0)).value == -1);
  CHECK(dist_slope_theta(Slope(2, 1), theta_std(0)).value == 0);
  CHECK(dist_slope_theta(Slope(3, 1), theta_std(0)).value == 1);
  CHECK(dist_slope_theta(Slope(2, 1), theta_std(-1)).value == 1);
  CHECK(dist_slope_theta(Slope(1, 1), theta_std(-2)).value == 1);
  CHECK(dist_slope_theta(Slope(-5, 1), theta_std(-2)).value == 2);
}

TEST_CASE("slope-to-triangle distance closed form") {
  for (Int i = -3; i <= 3; ++i) {
    for (Int p = -30; p <= 30; ++p) {
      for (Int q = 1; q <= 30; ++q) {
        if (gcd_int(p, q) != 1) continue;
        CAPTURE(i);
        CAPTURE(p);
        CAPTURE(q);
        REQUIRE(dist_slope_theta(Slope(p, q), theta_std(i)).value ==
                pq_complexity(p - i * q, q) - 1);
      }
    }
  }
}

TEST_CASE("triangle distance agrees with breadth-first search") {
  auto ball = bfs_ball(theta_std(0), 6);
  for (const auto& [t, d] : ball) {
    CHECK(dist_theta_theta(theta_std(0), t) == d);
    CHECK(dist_theta_theta(t, theta_std(0)) == d);
  }
  CHECK(ball.size() == 1 + 3 * ((1 << 6) - 1));  // trivalent tree ball
}

TEST_CASE("slope distance equals minimum over triangles containing it") {
  auto ball = bfs_ball(theta_std(0), 6);
  for (Int p = -5; p <= 5; ++p) {
    for (Int q = 1; q <= 5; ++q) {
      if (gcd_int(p, q) != 1) continue;
      Slope s(p, q);
      Int best = -100;
      for (const auto& [t, d] : ball) {
        if (t.contains(s) && (best == -100 || d < best)) best = d;
      }
      if (best == -100) continue;  // not reached within the ball
      Int direct = dist_slope_theta(s, theta_std(0)).value;
      if (direct + 1 <= 5) {  // the true minimizer lies inside the ball
        CHECK(direct == best - 1);
      }
    }
  }
}
