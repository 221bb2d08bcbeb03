#pragma once

#include <array>
#include <string>
#include <vector>

#include "c3m/base.hpp"
#include "c3m/chainlink.hpp"
#include "c3m/complexity.hpp"
#include "c3m/gl2.hpp"
#include "c3m/seifert.hpp"

namespace c3m {

// All lens spaces of complexity exactly c (1 <= c <= 9), one canonical
// descriptor L(p, q_min) per homeomorphism class, sorted by (p, q).  The
// pairs are produced by walking the recursion tree of the coprime-pair
// complexity to depth c + 2, so the cost is proportional to the output.
std::vector<ManifoldDescriptor> enumerate_lens(Int c);

struct SeifertEntry {
  SeifertManifold manifold;  // canonical unoriented form
  Geometry geometry;

  friend bool operator==(const SeifertEntry&, const SeifertEntry&) = default;
  friend bool operator<(const SeifertEntry& a, const SeifertEntry& b) {
    return a.manifold < b.manifold;
  }
};

// All genuine Seifert fibred spaces of complexity exactly c (2 <= c <= 9),
// one canonical unoriented form per class, sorted.  Expressions that are
// really lens spaces or torus bundles are excluded here; the bundle
// expressions reappear through enumerate_bundles.  Members of the adapted
// families and of the thin-fibre family are listed at their stable
// complexity, which the profile filter applies automatically.  The search
// splits into independent (base, fibre count, twist) units; `shards` many
// workers process them, with output independent of the shard count.
std::vector<SeifertEntry> enumerate_seifert(Int c, Int shards = 1);

struct BundleClass {
  ConjClassKey key;
  GL2Mat representative = kIdentity;
  Geometry geometry;  // flat, nil, or sol

  friend bool operator==(const BundleClass&, const BundleClass&) = default;
  friend bool operator<(const BundleClass& a, const BundleClass& b) {
    return a.key < b.key;
  }
};

// All torus bundle monodromy classes of complexity exactly c (6 <= c <= 9),
// i.e. with max(||A|| + 5, 6) == c, sorted by class key.  Finite-order
// classes are flat, parabolic classes are nil, Anosov classes are sol.
std::vector<BundleClass> enumerate_bundles(Int c);

// Seifert presentation of a flat or nil bundle class.  Every class with
// |trace| <= 2 must resolve here; a gap in the table is an internal error,
// never a silently separate census entry.
SeifertManifold bundle_seifert_form(const ConjClassKey& key);

struct HyperbolicEntry {
  FillingTriple filling;  // representative minimizing (h, lexicographic)
  std::array<Int, 3> homology{};

  friend bool operator==(const HyperbolicEntry&,
                         const HyperbolicEntry&) = default;
  friend bool operator<(const HyperbolicEntry& a, const HyperbolicEntry& b) {
    return a.filling < b.filling;
  }
};

struct HyperbolicList {
  std::vector<HyperbolicEntry> entries;
  // False when some relation orbit hit an exploration cap, in which case
  // the orbit-level deduplication may have split one class in two.
  bool orbits_complete = true;
};

// All closed hyperbolic fillings of the chain-link exterior with minimal
// orbit h-value exactly c, for c in {9, 10}.  One representative per
// relation orbit; completeness of the relation moves is conjectural, which
// full_census surfaces as a caveat.
HyperbolicList enumerate_hyperbolic(Int c, Int height_cap = 200,
                                    Int node_cap = 5000);

struct CensusRow {
  Int complexity = 0;
  Geometry geometry = Geometry::lens;
  std::vector<ManifoldDescriptor> manifolds;  // sorted, duplicate free

  Int count() const { return static_cast<Int>(manifolds.size()); }
};

struct CensusOptions {
  Int orbit_height_cap = 200;
  Int orbit_node_cap = 5000;
  Int shards = 1;  // parallel workers; the output does not depend on it
};

struct CensusReport {
  std::vector<CensusRow> rows;  // sorted by (complexity, geometry column)
  std::vector<std::string> caveats;

  Int count(Int complexity, Geometry geometry) const;
  Int total(Int complexity) const;
};

// Column order of the geometry rows within one complexity level.
Int geometry_column(Geometry g);

// Merged census of all closed orientable geometric manifolds of complexity
// up to c_max (0 <= c_max <= 9): lens spaces, genuine Seifert fibred
// spaces, torus bundles folded onto their Seifert forms where both exist,
// and closed hyperbolic chain-link fillings.  Complexity 0 contributes the
// three exceptional spaces.  Sol rows list only the circle-fibred classes,
// recorded as a caveat.  Every descriptor is re-profiled as a self check.
CensusReport full_census(Int c_max);
CensusReport full_census(Int c_max, const CensusOptions& options);

}  // namespace c3m
