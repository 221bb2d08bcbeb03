#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "c3m/seifert.hpp"

namespace c3m {

// Unordered triple of filling coefficients on the three cusps of the
// chain-link exterior, stored sorted in the slope order.
struct FillingTriple {
  std::array<Slope, 3> slopes{};

  FillingTriple() = default;
  FillingTriple(const Slope& a, const Slope& b, const Slope& c);

  Int height() const;  // max over the slopes of max(|p|, |q|)
  bool contains(const Slope& s) const {
    return slopes[0] == s || slopes[1] == s || slopes[2] == s;
  }
  Int count(const Slope& s) const;

  friend bool operator==(const FillingTriple&, const FillingTriple&) = default;
  friend bool operator<(const FillingTriple& a, const FillingTriple& b) {
    return a.slopes < b.slopes;
  }
};

std::string triple_to_string(const FillingTriple& t);  // "chain(x,y,z)"

// Fillings of the distinguished cusped brick that stay hyperbolic are
// exactly the non-exceptional coefficients.
bool m221_exceptional(const Slope& s);

// Hyperbolicity of the filled chain-link exterior: false exactly on the
// exceptional coefficients, pairs and triples.
bool is_hyperbolic(const FillingTriple& t);

// Triples one relation move away: same filled manifold, different
// coefficients.  Includes both directions of every relation, applied at
// every pivot occurrence and in both slot orders.
std::vector<FillingTriple> relation_neighbors(const FillingTriple& t);

struct OrbitResult {
  std::vector<FillingTriple> members;  // sorted
  bool complete = false;               // true when no cap was hit
};

inline constexpr Int kDefaultHeightCap = 10000;
inline constexpr Int kDefaultNodeCap = 20000;

// Breadth-first closure of t under the relation moves.  Neighbors above
// height_cap are not expanded, and exploration stops at node_cap members;
// either event clears `complete`.
OrbitResult orbit(const FillingTriple& t, Int height_cap = kDefaultHeightCap,
                  Int node_cap = kDefaultNodeCap);

// Lex-least member of the orbit.  Throws domain_error when a cap was hit
// (the orbit could extend beyond what was explored).
FillingTriple canonical_triple(const FillingTriple& t,
                               Int height_cap = kDefaultHeightCap,
                               Int node_cap = kDefaultNodeCap);

// Lex-least explored member plus a completeness flag; never throws on caps.
std::pair<FillingTriple, bool> canonical_triple_tolerant(
    const FillingTriple& t, Int height_cap = kDefaultHeightCap,
    Int node_cap = kDefaultNodeCap);

// Weight of one filling coefficient: |p + 2q, q|.
Int w_value(const Slope& s);

// Filling norm h = g + w(x) + w(y) + w(z); infinity coefficients have no h.
Int h_value(const FillingTriple& t);

// Upper bound for the ninth complexity of a hyperbolic filling: the minimum
// of h over the explored orbit.
Int c9_hyperbolic(const FillingTriple& t, Int height_cap = kDefaultHeightCap,
                  Int node_cap = kDefaultNodeCap);

// Value of the distinguished one-cusp filling {1, -4, s}; requires a
// hyperbolic coefficient s.
Int c8_m221(const Slope& s);

// Least c8_m221 over orbit members of the form {1, -4, s}; nullopt when the
// explored orbit has no such member.
std::optional<Int> c8_hyperbolic(const FillingTriple& t,
                                 Int height_cap = kDefaultHeightCap,
                                 Int node_cap = kDefaultNodeCap);

// First homology of the filled manifold as Smith invariants of the filling
// matrix (rows [p1 q1 q1 / q2 p2 q2 / q3 q3 p3]).
std::array<Int, 3> filling_homology(const FillingTriple& t);

// "Z + Z_2 + Z_4" style rendering: free summands first, then torsion in
// ascending order; "trivial" for the trivial group.
std::string homology_to_string(const std::array<Int, 3>& smith);

// Structure of a filled manifold matching one of the recognized
// non-hyperbolic patterns (a coefficient in {inf, -3, -2, -1, 0} or a pair
// of 1s).  Throws domain_error("not a recognized pattern") otherwise.
struct NonHypIdentity {
  enum class Kind { lens, one_block, two_block, self_glued };
  Kind kind = Kind::lens;
  Int p = 0, q = 0;                   // lens parameters; p == 1 means S3
  std::vector<Slope> block1, block2;  // fractional parameters per block
  GL2Mat gluing = kIdentity;          // two_block / self_glued
};

NonHypIdentity nonhyperbolic_identity(const FillingTriple& t);

// Closed Seifert form of a one-block assembly: fraction p/q becomes the
// fibre (p, q), fractions with |p| == 1 are absorbed into t, and a fraction
// 0 or infinity is degenerate.
SeifertManifold one_block_to_seifert(const std::vector<Slope>& fractions);

// A slot in an assembly bound: a filling fraction or a skeleton triangle.
using BlockSlot = std::variant<Slope, ThetaGraph>;

Int slot_distance(const BlockSlot& s, const ThetaGraph& target);

// Complexity upper bounds for graph assemblies.
Int one_block_bound(const BlockSlot& x1, const BlockSlot& x2,
                    const BlockSlot& x3);
Int two_block_bound(const std::array<BlockSlot, 2>& pair1, const GL2Mat& glue,
                    const std::array<BlockSlot, 2>& pair2);
Int self_glued_bound(const BlockSlot& alpha);

}  // namespace c3m
