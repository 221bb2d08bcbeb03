#include "c3m/chainlink.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace c3m {

namespace {

Slope sl(Int p, Int q) { return Slope(p, q); }

const Slope kOne{1, 1};
const Slope kTwo{2, 1};
const Slope kMinusFour{-4, 1};
const Slope kMinusThreeHalves{-3, 2};
const Slope kMinusFiveHalves{-5, 2};
const Slope kMinusHalf{-1, 2};

// Relation moves, written as unimodular coefficient maps.
const GL2Mat kRel1A{-1, -1, 1, 2};     // x -> q/(p+2q) - 1
const GL2Mat kRel1B{-1, -3, 0, 1};     // x -> -x - 3 (involution)
const GL2Mat kRel1AInv{-2, -1, 1, 1};  // inverse of kRel1A
const GL2Mat kRel2{-2, -5, 1, 2};      // x -> (-2x-5)/(x+2) (involution)
const GL2Mat kRel3F{-1, -3, 1, 2};     // x -> (-x-3)/(x+2)
const GL2Mat kRel3G{-2, -3, 1, 1};     // projective inverse of kRel3F
const GL2Mat kRel4{-1, -4, 0, 1};      // x -> -x - 4 (involution)
const GL2Mat kRel5{-1, 2, 0, 1};       // x -> 2 - x (involution)
const GL2Mat kRel6{0, 1, 1, 0};        // x -> 1/x (involution)

}  // namespace

FillingTriple::FillingTriple(const Slope& a, const Slope& b, const Slope& c)
    : slopes{a, b, c} {
  std::sort(slopes.begin(), slopes.end());
}

Int FillingTriple::height() const {
  Int h = 0;
  for (const Slope& s : slopes) {
    h = std::max({h, abs_int(s.p), abs_int(s.q)});
  }
  return h;
}

Int FillingTriple::count(const Slope& s) const {
  Int n = 0;
  for (const Slope& x : slopes) {
    if (x == s) ++n;
  }
  return n;
}

std::string triple_to_string(const FillingTriple& t) {
  std::ostringstream os;
  os << "chain(" << slope_to_string(t.slopes[0]) << ","
     << slope_to_string(t.slopes[1]) << "," << slope_to_string(t.slopes[2])
     << ")";
  return os.str();
}

bool m221_exceptional(const Slope& s) {
  static const std::set<Slope> kBad{Slope::infinity(), sl(-3, 1), sl(-2, 1),
                                    sl(-1, 1),         sl(-1, 2), sl(-1, 3),
                                    sl(0, 1),          sl(1, 1)};
  return kBad.count(s) > 0;
}

bool is_hyperbolic(const FillingTriple& t) {
  static const std::set<Slope> kBadSingle{Slope::infinity(), sl(-3, 1),
                                          sl(-2, 1), sl(-1, 1), sl(0, 1)};
  for (const Slope& s : t.slopes) {
    if (kBadSingle.count(s)) return false;
  }
  if (t.count(kOne) >= 2) return false;
  if (t.contains(kMinusFour) && t.contains(kMinusHalf)) return false;
  if (t.contains(kMinusThreeHalves) && t.contains(kMinusFiveHalves)) {
    return false;
  }
  static const std::set<FillingTriple> kBadTriples{
      {sl(-5, 1), sl(-5, 1), sl(-1, 2)},
      {sl(-4, 1), sl(-4, 1), sl(-2, 3)},
      {sl(-4, 1), sl(-3, 2), sl(-3, 2)},
      {sl(-4, 1), sl(-1, 3), sl(1, 1)},
      {sl(-8, 3), sl(-3, 2), sl(-3, 2)},
      {sl(-5, 2), sl(-5, 2), sl(-4, 3)},
      {sl(-5, 2), sl(-5, 3), sl(-5, 3)},
      {sl(-7, 3), sl(-7, 3), sl(-3, 2)},
      {sl(1, 1), sl(2, 1), sl(2, 1)},
      {sl(1, 1), sl(2, 1), sl(3, 1)},
      {sl(1, 1), sl(2, 1), sl(4, 1)},
      {sl(1, 1), sl(2, 1), sl(5, 1)},
      {sl(1, 1), sl(3, 1), sl(3, 1)},
      {sl(2, 1), sl(2, 1), sl(2, 1)},
  };
  return kBadTriples.count(t) == 0;
}

std::vector<FillingTriple> relation_neighbors(const FillingTriple& t) {
  std::set<FillingTriple> out;
  const auto& s = t.slopes;
  for (int i = 0; i < 3; ++i) {
    Slope x = s[(i + 1) % 3];
    Slope y = s[(i + 2) % 3];
    if (s[i] == kMinusThreeHalves) {
      out.insert(FillingTriple(kMinusFour, apply_mat(kRel1A, x),
                            apply_mat(kRel1B, y)));
      out.insert(FillingTriple(kMinusFour, apply_mat(kRel1A, y),
                            apply_mat(kRel1B, x)));
      out.insert(FillingTriple(kMinusThreeHalves, apply_mat(kRel2, x),
                            apply_mat(kRel2, y)));
    }
    if (s[i] == kMinusFour) {
      out.insert(FillingTriple(kMinusThreeHalves, apply_mat(kRel1AInv, x),
                            apply_mat(kRel1B, y)));
      out.insert(FillingTriple(kMinusThreeHalves, apply_mat(kRel1AInv, y),
                            apply_mat(kRel1B, x)));
    }
    if (s[i] == kMinusFiveHalves) {
      out.insert(FillingTriple(kMinusFiveHalves, apply_mat(kRel3F, x),
                            apply_mat(kRel3G, y)));
      out.insert(FillingTriple(kMinusFiveHalves, apply_mat(kRel3F, y),
                            apply_mat(kRel3G, x)));
    }
    if (s[i] == kMinusHalf) {
      out.insert(FillingTriple(kMinusHalf, apply_mat(kRel4, x),
                            apply_mat(kRel4, y)));
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      int k = 3 - i - j;
      if (s[i] == kOne && s[j] == kTwo) {
        out.insert(FillingTriple(kOne, kTwo, apply_mat(kRel5, s[k])));
      }
      if (s[i] == kOne && s[j] == kMinusFour) {
        out.insert(FillingTriple(kOne, kMinusFour, apply_mat(kRel6, s[k])));
      }
    }
  }
  return {out.begin(), out.end()};
}

OrbitResult orbit(const FillingTriple& t, Int height_cap, Int node_cap) {
  require(height_cap > 0 && node_cap > 0, "orbit caps must be positive");
  std::set<FillingTriple> seen{t};
  std::vector<FillingTriple> queue{t};
  bool complete = true;
  for (size_t head = 0; head < queue.size() && complete; ++head) {
    for (const FillingTriple& nb : relation_neighbors(queue[head])) {
      if (seen.count(nb)) continue;
      if (nb.height() > height_cap) {
        complete = false;
        continue;
      }
      if (static_cast<Int>(seen.size()) >= node_cap) {
        complete = false;
        break;
      }
      seen.insert(nb);
      queue.push_back(nb);
    }
  }
  OrbitResult res;
  res.members.assign(seen.begin(), seen.end());
  res.complete = complete;
  return res;
}

FillingTriple canonical_triple(const FillingTriple& t, Int height_cap,
                               Int node_cap) {
  OrbitResult res = orbit(t, height_cap, node_cap);
  if (!res.complete) {
    throw domain_error("orbit exploration hit a cap; result would be partial");
  }
  return res.members.front();
}

std::pair<FillingTriple, bool> canonical_triple_tolerant(
    const FillingTriple& t, Int height_cap, Int node_cap) {
  OrbitResult res = orbit(t, height_cap, node_cap);
  return {res.members.front(), res.complete};
}

Int w_value(const Slope& s) { return pq_complexity(s.p + 2 * s.q, s.q); }

namespace {

// The additive constant of h: decided by the pattern of the coefficients.
Int g_value(const FillingTriple& t) {
  const auto& s = t.slopes;
  bool all_big = true;
  for (const Slope& x : s) {
    if (x == kOne || x.p + 2 * x.q <= 0) all_big = false;  // x == 1 or x <= -2
  }
  if (all_big) return 6;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      if (s[i] != kOne) continue;
      if (s[j] != sl(-4, 1) && s[j] != sl(-5, 1)) continue;
      const Slope& third = s[3 - i - j];
      if (third.p + third.q < 0) return 4;  // third < -1
      if (third.p + third.q > 0) return 2;  // third > -1
    }
  }
  return 5;
}

}  // namespace

Int h_value(const FillingTriple& t) {
  Int total = 0;
  for (const Slope& s : t.slopes) {
    if (s.is_infinity()) throw domain_error("h is undefined for slope inf");
    total += w_value(s);
  }
  return total + g_value(t);
}

Int c9_hyperbolic(const FillingTriple& t, Int height_cap, Int node_cap) {
  if (!is_hyperbolic(t)) throw domain_error("filling is not hyperbolic");
  OrbitResult res = orbit(t, height_cap, node_cap);
  Int best = -1;
  for (const FillingTriple& m : res.members) {
    if (m.contains(Slope::infinity())) continue;
    Int h = h_value(m);
    if (best < 0 || h < best) best = h;
  }
  require(best >= 0, "orbit of a hyperbolic filling has no finite member");
  return best;
}

Int c8_m221(const Slope& s) {
  if (m221_exceptional(s)) throw domain_error("filling is not hyperbolic");
  return std::min(7 + pq_complexity(s.p, -s.q), 7 + pq_complexity(s.q, -s.p));
}

std::optional<Int> c8_hyperbolic(const FillingTriple& t, Int height_cap,
                                 Int node_cap) {
  if (!is_hyperbolic(t)) throw domain_error("filling is not hyperbolic");
  OrbitResult res = orbit(t, height_cap, node_cap);
  std::optional<Int> best;
  for (const FillingTriple& m : res.members) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        if (m.slopes[i] != kOne || m.slopes[j] != kMinusFour) continue;
        const Slope& third = m.slopes[3 - i - j];
        if (m221_exceptional(third)) continue;
        Int val = c8_m221(third);
        if (!best || val < *best) best = val;
      }
    }
  }
  return best;
}

std::array<Int, 3> filling_homology(const FillingTriple& t) {
  std::array<std::array<Int, 3>, 3> rows{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      rows[i][j] = (i == j) ? t.slopes[i].p : t.slopes[i].q;
    }
  }
  return smith_normal_form(rows);
}

std::string homology_to_string(const std::array<Int, 3>& smith) {
  std::vector<std::string> parts;
  for (Int d : smith) {
    if (d == 0) parts.push_back("Z");
  }
  for (Int d : smith) {
    if (d > 1) parts.push_back("Z_" + std::to_string(d));
  }
  if (parts.empty()) return "trivial";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

NonHypIdentity nonhyperbolic_identity(const FillingTriple& t) {
  const auto& s = t.slopes;
  auto others = [&](int i) {
    return std::pair<Slope, Slope>{s[(i + 1) % 3], s[(i + 2) % 3]};
  };
  // Solid torus pair: lens space via the Heegaard gluing; the wall map
  // between the two cusps swaps the coordinates.
  for (int i = 0; i < 3; ++i) {
    if (!s[i].is_infinity()) continue;
    auto [a, b] = others(i);
    NonHypIdentity res;
    res.kind = NonHypIdentity::Kind::lens;
    Int p = abs_int(a.p * b.p - a.q * b.q);
    if (p == 0) throw domain_error("reducible manifold");
    auto [x, y] = dual_curve(a.p, a.q);
    Int q = ((b.q * y - b.p * x) % p + p) % p;
    res.p = p;
    res.q = (p == 1) ? 0 : q;
    return res;
  }
  for (int i = 0; i < 3; ++i) {
    if (s[i] != sl(-3, 1)) continue;
    auto [a, b] = others(i);
    NonHypIdentity res;
    res.kind = NonHypIdentity::Kind::two_block;
    res.block1 = {kTwo, apply_mat(GL2Mat{1, 1, 1, 2}, a)};
    res.block2 = {kTwo, apply_mat(GL2Mat{1, 1, 1, 2}, b)};
    res.gluing = GL2Mat{1, 1, 0, -1};
    return res;
  }
  for (int i = 0; i < 3; ++i) {
    if (s[i] != sl(-2, 1)) continue;
    auto [a, b] = others(i);
    NonHypIdentity res;
    res.kind = NonHypIdentity::Kind::one_block;
    res.block1 = {sl(3, 2), apply_mat(GL2Mat{-1, -2, 0, 1}, a),
                  apply_mat(GL2Mat{-1, -2, 0, 1}, b)};
    return res;
  }
  for (int i = 0; i < 3; ++i) {
    if (s[i] != sl(-1, 1)) continue;
    auto [a, b] = others(i);
    NonHypIdentity res;
    res.kind = NonHypIdentity::Kind::one_block;
    res.block1 = {kTwo, apply_mat(GL2Mat{-1, -3, 0, 1}, a),
                  apply_mat(GL2Mat{-1, -3, 0, 1}, b)};
    return res;
  }
  for (int i = 0; i < 3; ++i) {
    if (s[i] != sl(0, 1)) continue;
    auto [a, b] = others(i);
    NonHypIdentity res;
    res.kind = NonHypIdentity::Kind::two_block;
    res.block1 = {apply_mat(GL2Mat{0, 1, 1, 2}, a),
                  apply_mat(GL2Mat{0, 1, 1, 2}, b)};
    res.block2 = {kTwo, sl(3, 1)};
    res.gluing = GL2Mat{0, -1, 1, 1};
    return res;
  }
  if (t.count(kOne) >= 2) {
    Slope third = kOne;
    for (const Slope& x : s) {
      if (x != kOne) third = x;
    }
    NonHypIdentity res;
    res.kind = NonHypIdentity::Kind::self_glued;
    res.block1 = {apply_mat(GL2Mat{0, -1, 1, 2}, third)};
    res.gluing = GL2Mat{1, -1, -1, 0};
    return res;
  }
  throw domain_error("not a recognized pattern");
}

SeifertManifold one_block_to_seifert(const std::vector<Slope>& fractions) {
  SeifertManifold m{kSphere, {}, 0};
  for (const Slope& f : fractions) {
    if (f.p == 0 || f.is_infinity()) {
      throw domain_error("degenerate block filling");
    }
    if (abs_int(f.p) == 1) {
      m.t += f.p * f.q;  // fraction q/p with p = +-1 is an integer twist
    } else {
      m.fibres.push_back({f.p, f.q});
    }
  }
  return normalize(m);
}

Int slot_distance(const BlockSlot& s, const ThetaGraph& target) {
  if (const Slope* sp = std::get_if<Slope>(&s)) {
    return dist_slope_theta(*sp, target).value;
  }
  return dist_theta_theta(std::get<ThetaGraph>(s), target);
}

Int one_block_bound(const BlockSlot& x1, const BlockSlot& x2,
                    const BlockSlot& x3) {
  std::array<const BlockSlot*, 3> xs{&x1, &x2, &x3};
  Int best = -1;
  for (int i = 0; i < 3; ++i) {
    Int sum = slot_distance(*xs[i], theta_std(-1));
    for (int j = 0; j < 3; ++j) {
      if (j != i) sum += slot_distance(*xs[j], theta_std(0));
    }
    if (best < 0 || sum < best) best = sum;
  }
  return 3 + best;
}

Int two_block_bound(const std::array<BlockSlot, 2>& pair1, const GL2Mat& glue,
                    const std::array<BlockSlot, 2>& pair2) {
  Int sum = 0;
  for (const BlockSlot& s : pair1) sum += slot_distance(s, theta_std(0));
  for (const BlockSlot& s : pair2) sum += slot_distance(s, theta_std(0));
  GL2Mat twisted{glue.a, -glue.b, -glue.c, glue.d};
  return 6 + sum + norm(twisted);
}

Int self_glued_bound(const BlockSlot& alpha) {
  return 9 + slot_distance(alpha, theta_std(-1));
}

}  // namespace c3m
