#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "c3m/gl2.hpp"

namespace c3m {

// Closed base surface of a Seifert fibration; only chi(F) >= 0 is supported.
struct BaseSurface {
  bool orientable = true;
  Int genus = 0;

  Int chi() const { return orientable ? 2 - 2 * genus : 2 - genus; }

  friend bool operator==(const BaseSurface&, const BaseSurface&) = default;
  friend bool operator<(const BaseSurface& a, const BaseSurface& b) {
    return std::tuple(a.orientable ? 0 : 1, a.genus) <
           std::tuple(b.orientable ? 0 : 1, b.genus);
  }
};

inline constexpr BaseSurface kSphere{true, 0};
inline constexpr BaseSurface kTorus{true, 1};
inline constexpr BaseSurface kProjectivePlane{false, 1};
inline constexpr BaseSurface kKleinBottle{false, 2};

std::string base_to_string(const BaseSurface& b);  // "S2", "T2", "P2", "K2"
BaseSurface parse_base(const std::string& s);

// One exceptional fibre with coprime parameters (p, q).
struct Fibre {
  Int p = 2, q = 1;

  friend bool operator==(const Fibre&, const Fibre&) = default;
  friend bool operator<(const Fibre& a, const Fibre& b) {
    return std::tuple(a.p, a.q) < std::tuple(b.p, b.q);
  }
};

// Seifert invariants (F; (p1,q1), ..., (pk,qk); t) of an orientable total
// space over the base F.
struct SeifertManifold {
  BaseSurface base;
  std::vector<Fibre> fibres;
  Int t = 0;

  friend bool operator==(const SeifertManifold&,
                         const SeifertManifold&) = default;
  friend bool operator<(const SeifertManifold& a, const SeifertManifold& b) {
    return std::tie(a.base, a.fibres, a.t) < std::tie(b.base, b.fibres, b.t);
  }
};

std::string seifert_to_string(const SeifertManifold& m);

// Unique normalized form: every fibre has p >= 2 and 1 <= q < p, fibres are
// sorted, and the integer parts are moved into t.  Requires |p| >= 2 and
// coprime parameters on input.
SeifertManifold normalize(const SeifertManifold& m);

// Same manifold with the opposite orientation, in normalized form:
// t -> -t - k and q_i -> p_i - q_i.
SeifertManifold reverse_orientation(const SeifertManifold& m);

// Preferred representative of the pair {M, -M}: the orientation with
// 2t > -k, with a lexicographic tie-break when 2t == -k.
SeifertManifold canonical_unoriented(const SeifertManifold& m);

// How a small Seifert form collapses into another census family.  Forms with
// few fibres are lens spaces or torus bundles rather than genuine fibred
// manifolds, and four exceptional parameter sets are flat torus bundles.
struct CoincidenceResult {
  enum class Kind { none, lens, bundle };
  Kind kind = Kind::none;
  Int p = 0, q = 0;              // lens parameters; p == 1 means S3
  GL2Mat monodromy = kIdentity;  // bundle monodromy
};

CoincidenceResult coincidence(const SeifertManifold& m);

enum class Geometry {
  lens,
  elliptic,
  flat,
  nil,
  sl2,
  h2xr,
  sol,
  hyperbolic,
  s2xr,
};

std::string geometry_to_string(Geometry g);

// Geometry of a genuine Seifert form (enough fibres for the base; use
// coincidence() first otherwise).  Decided by the signs of the orbifold
// Euler characteristic and of the Euler number, in exact arithmetic.
Geometry geometry_of(const SeifertManifold& m);

// Member data for the family (S2; (2,1), (n,1), (m,1); -1) with
// 2 <= n <= m, excluding the flat parameter sets (3,6) and (4,4).  Members
// carry adapted complexity profiles built from the stable value cstar.
struct MStarInfo {
  char series = 'C';  // 'C' (two indices) or 'E' (one index)
  Int a = 0, b = 0;   // C: 1 <= a <= b; E: index a >= 0, a != 1, b unused
  Int cstar = 0;

  std::string label() const;
};

std::optional<MStarInfo> mstar_info(const SeifertManifold& m);

// Inverse of mstar_info on valid series indices; nullopt outside the family.
std::optional<SeifertManifold> mstar_form(char series, Int a, Int b);

}  // namespace c3m
