#pragma once

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "c3m/base.hpp"
#include "c3m/chainlink.hpp"
#include "c3m/farey.hpp"
#include "c3m/gl2.hpp"
#include "c3m/seifert.hpp"

namespace c3m {

// How a profile entry is certified.
enum class Exactness { exact, upper_bound, conditional };

std::string exactness_to_string(Exactness e);

// One approximation value: a natural number or infinity.  Infinity is a
// legitimate value (the manifold has no expression at that level), encoded
// as an empty optional, never as a sentinel integer.
struct ComplexityValue {
  std::optional<Int> value;
  Exactness tag = Exactness::exact;

  bool is_infinite() const { return !value.has_value(); }

  friend bool operator==(const ComplexityValue&, const ComplexityValue&) =
      default;
};

// "inf", "7", "<=7" (upper bound), "7?" (conditional on the filling
// conjecture).
std::string complexity_value_to_string(const ComplexityValue& v);

// The ten approximations c0..c9 of the complexity of one manifold, with
// per-entry certification and free-form notes about how the values were
// obtained.
struct ComplexityProfile {
  std::array<ComplexityValue, 10> c{};
  std::vector<std::string> notes;

  std::string to_string() const;  // "c0..c9 = [inf, 7, ...]"
  std::string to_json() const;    // {"c": [{"value": ..., "tag": ...}], ...}
};

// A closed orientable geometric manifold in one of the supported
// presentations.  Construct through the factories below: they canonicalize
// lens parameters and validate monodromies, so equal descriptors describe
// equal manifolds within each kind.
struct ManifoldDescriptor {
  enum class Kind { exceptional, lens, seifert, torus_bundle, chain_filling };
  enum class Small { s3, rp3, l31 };

  Kind kind = Kind::exceptional;
  Small small = Small::s3;
  Int p = 0, q = 0;              // lens kind, canonical (p >= 4, q minimal)
  SeifertManifold seifert;       // seifert kind
  GL2Mat monodromy = kIdentity;  // torus_bundle kind
  FillingTriple filling;         // chain_filling kind

  friend bool operator==(const ManifoldDescriptor&, const ManifoldDescriptor&) =
      default;
  friend bool operator<(const ManifoldDescriptor& x,
                        const ManifoldDescriptor& y) {
    auto key = [](const ManifoldDescriptor& d) {
      return std::tie(d.kind, d.small, d.p, d.q, d.seifert, d.monodromy,
                      d.filling);
    };
    return key(x) < key(y);
  }
};

ManifoldDescriptor make_s3();
ManifoldDescriptor make_rp3();
// Canonicalizes: mirror and parameter equivalences are folded away, and the
// three smallest spaces become exceptional descriptors.  Throws for p = 0
// (reducible) and non-coprime parameters.
ManifoldDescriptor make_lens(Int p, Int q);
ManifoldDescriptor make_seifert(const SeifertManifold& m);
ManifoldDescriptor make_torus_bundle(const GL2Mat& a);  // requires det +1
ManifoldDescriptor make_chain(const FillingTriple& t);

// "s3", "rp3", "lens(7,2)", "sfs(S2;(2,1),(3,2);-1)", "tb[[2,1],[1,1]]",
// "chain(-4,1,-3/2)".  Matches the descriptor grammar of the command line.
std::string descriptor_to_string(const ManifoldDescriptor& d);

// First homology as Smith invariants: zeros are free factors, entries
// above 1 finite cyclic factors in divisibility order.  The display form
// lists free factors first ("Z + Z_2 + Z_4"); a trivial group prints as
// "trivial".
std::vector<Int> descriptor_homology(const ManifoldDescriptor& d);
std::string homology_invariants_to_string(const std::vector<Int>& inv);

// Least q' with L(p,q') = L(p,q) up to orientation: the minimum of q, p - q
// and their inverses mod p.  Requires coprime parameters, p >= 1.
Int lens_q_min(Int p, Int q);

// Complexity profile of the described manifold.  The cap overload bounds
// the relation-orbit exploration used for chain fillings.
ComplexityProfile profile(const ManifoldDescriptor& d);
ComplexityProfile profile(const ManifoldDescriptor& d, Int height_cap,
                          Int node_cap);

// Per-class evaluators.  Each accepts any valid parameters for its class
// and canonicalizes internally; seifert_profile detects coincidences with
// lens spaces and torus bundles, the adapted family, and the thin-fibre
// family before applying the generic fibred formula.
ComplexityProfile lens_profile(Int p, Int q);
ComplexityProfile torus_bundle_profile(const GL2Mat& a);
ComplexityProfile seifert_profile(const SeifertManifold& m);

// Value of the stable formula for a genuine fibred form, evaluated on the
// normalized form as given (not on the canonical orientation; callers that
// want the complexity of the underlying manifold must canonicalize first).
// The two versions compute the same number along different routes - one
// from the Euler characteristic of the base, one from a per-base table -
// and are kept separate as a transcription cross-check.
Int seifert_c3_value(const SeifertManifold& m);
Int seifert_c3_value_alt(const SeifertManifold& m);

// First-level approximation of the thick torus with marked boundaries: the
// flip distance between the two boundary graphs.
Int c1_t_times_i(const ThetaGraph& t0, const ThetaGraph& t1);

// First-level approximation of the solid torus with marked boundary: least
// flip distance from the marking to a winding translate of the base
// triangle {0, -1/2, -1}.  Undefined when the meridian is a vertex of the
// marking ("c undefined by this formula").
Int c1_solid_torus(const ThetaGraph& t);

// The eleven bricks with boundary that generate all triangulations counted
// by c0..c9, with their complexities.
struct Brick {
  std::string name;
  Int complexity = 0;
  std::string description;
};

const std::vector<Brick>& brick_registry();

}  // namespace c3m
