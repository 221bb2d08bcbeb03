#include "c3m/complexity.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string_view>

namespace c3m {

namespace {

ComplexityValue inf_value(Exactness tag = Exactness::exact) {
  return {std::nullopt, tag};
}

ComplexityValue finite(Int v, Exactness tag = Exactness::exact) {
  return {v, tag};
}

ComplexityProfile all_zero() {
  ComplexityProfile pr;
  for (ComplexityValue& v : pr.c) v = finite(0);
  return pr;
}

std::string lens_name(Int p, Int q) {
  if (p == 1) return "s3";
  if (p == 2) return "rp3";
  return "lens(" + std::to_string(p) + "," + std::to_string(lens_q_min(p, q)) +
         ")";
}

void escape_json(const std::string& s, std::string& out) {
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
}

// Stable values of the adapted two-parameter family.  The family member
// with indices (series, a, b) has stable value cstar; below the stable
// level the profile sits at the generic fibred value instead, and the two
// series leave that plateau at different levels.
ComplexityProfile mstar_profile(const MStarInfo& ms) {
  Int cstar = ms.cstar;
  Int generic = ms.series == 'C' ? 1 + ms.a + ms.b : ms.a + 7;
  ComplexityProfile pr;
  pr.c[0] = pr.c[1] = pr.c[2] = inf_value();
  if (cstar <= 9) {
    for (int n = 3; n <= 9; ++n) {
      if (n >= cstar) {
        pr.c[n] = finite(cstar);
      } else if (n <= 7) {
        pr.c[n] = finite(generic);
      } else {
        pr.c[n] = finite(ms.series == 'E' ? ms.a + 6 : generic);
      }
    }
  } else if (ms.series == 'C') {
    for (int n = 3; n <= 9; ++n) pr.c[n] = finite(generic);
  } else {
    pr.c[3] = finite(generic);
    for (int n = 4; n <= 7; ++n)
      pr.c[n] = finite(generic, Exactness::upper_bound);
    pr.c[8] = finite(ms.a + 6);
    pr.c[9] = finite(ms.a + 6);
  }
  pr.notes.push_back("member " + ms.label() +
                     " of the adapted family, stable value " +
                     std::to_string(cstar));
  return pr;
}

ComplexityProfile chain_profile(const FillingTriple& t, Int height_cap,
                                Int node_cap);

}  // namespace

std::string exactness_to_string(Exactness e) {
  switch (e) {
    case Exactness::exact:
      return "exact";
    case Exactness::upper_bound:
      return "upper_bound";
    case Exactness::conditional:
      return "conditional";
  }
  throw internal_error("unreachable");
}

std::string complexity_value_to_string(const ComplexityValue& v) {
  if (v.is_infinite()) return "inf";
  std::string num = std::to_string(*v.value);
  switch (v.tag) {
    case Exactness::exact:
      return num;
    case Exactness::upper_bound:
      return "<=" + num;
    case Exactness::conditional:
      return num + "?";
  }
  throw internal_error("unreachable");
}

std::string ComplexityProfile::to_string() const {
  std::string out = "c0..c9 = [";
  for (int n = 0; n < 10; ++n) {
    if (n > 0) out += ", ";
    out += complexity_value_to_string(c[n]);
  }
  out += "]";
  return out;
}

std::string ComplexityProfile::to_json() const {
  std::string out = "{\"c\": [";
  for (int n = 0; n < 10; ++n) {
    if (n > 0) out += ", ";
    out += "{\"value\": ";
    out += c[n].is_infinite() ? "null" : std::to_string(*c[n].value);
    out += ", \"tag\": \"" + exactness_to_string(c[n].tag) + "\"}";
  }
  out += "], \"notes\": [";
  for (size_t i = 0; i < notes.size(); ++i) {
    if (i > 0) out += ", ";
    out += '"';
    escape_json(notes[i], out);
    out += '"';
  }
  out += "]}";
  return out;
}

Int lens_q_min(Int p, Int q) {
  if (p <= 0) throw domain_error("lens parameter must be positive");
  Int qm = ((q % p) + p) % p;
  if (p == 1) return 0;
  if (std::gcd(p, qm) != 1) throw domain_error("not coprime");
  auto [x, y] = dual_curve(qm, p);  // qm * y - p * x = 1
  Int inv = ((y % p) + p) % p;
  return std::min({qm, p - qm, inv, p - inv});
}

ManifoldDescriptor make_s3() {
  ManifoldDescriptor d;
  d.kind = ManifoldDescriptor::Kind::exceptional;
  d.small = ManifoldDescriptor::Small::s3;
  return d;
}

ManifoldDescriptor make_rp3() {
  ManifoldDescriptor d;
  d.kind = ManifoldDescriptor::Kind::exceptional;
  d.small = ManifoldDescriptor::Small::rp3;
  return d;
}

ManifoldDescriptor make_lens(Int p, Int q) {
  if (p < 0) p = -p;  // the mirror has the same profile
  if (p == 0) {
    if (q != 1 && q != -1) throw domain_error("not coprime");
    throw domain_error("reducible manifold");
  }
  if (p == 1) return make_s3();
  Int qc = lens_q_min(p, q);
  if (p == 2) return make_rp3();
  if (p == 3) {
    ManifoldDescriptor d;
    d.kind = ManifoldDescriptor::Kind::exceptional;
    d.small = ManifoldDescriptor::Small::l31;
    return d;
  }
  ManifoldDescriptor d;
  d.kind = ManifoldDescriptor::Kind::lens;
  d.p = p;
  d.q = qc;
  return d;
}

ManifoldDescriptor make_seifert(const SeifertManifold& m) {
  ManifoldDescriptor d;
  d.kind = ManifoldDescriptor::Kind::seifert;
  d.seifert = normalize(m);
  return d;
}

ManifoldDescriptor make_torus_bundle(const GL2Mat& a) {
  if (a.det() != 1) throw domain_error("not a monodromy");
  ManifoldDescriptor d;
  d.kind = ManifoldDescriptor::Kind::torus_bundle;
  d.monodromy = a;
  return d;
}

ManifoldDescriptor make_chain(const FillingTriple& t) {
  ManifoldDescriptor d;
  d.kind = ManifoldDescriptor::Kind::chain_filling;
  d.filling = t;
  return d;
}

std::string descriptor_to_string(const ManifoldDescriptor& d) {
  switch (d.kind) {
    case ManifoldDescriptor::Kind::exceptional:
      switch (d.small) {
        case ManifoldDescriptor::Small::s3:
          return "s3";
        case ManifoldDescriptor::Small::rp3:
          return "rp3";
        case ManifoldDescriptor::Small::l31:
          return "lens(3,1)";
      }
      throw internal_error("unreachable");
    case ManifoldDescriptor::Kind::lens:
      return "lens(" + std::to_string(d.p) + "," + std::to_string(d.q) + ")";
    case ManifoldDescriptor::Kind::seifert:
      return seifert_to_string(d.seifert);
    case ManifoldDescriptor::Kind::torus_bundle:
      return "tb" + mat_to_string(d.monodromy);
    case ManifoldDescriptor::Kind::chain_filling:
      return triple_to_string(d.filling);
  }
  throw internal_error("unreachable");
}

std::vector<Int> descriptor_homology(const ManifoldDescriptor& d) {
  switch (d.kind) {
    case ManifoldDescriptor::Kind::exceptional:
      switch (d.small) {
        case ManifoldDescriptor::Small::s3:
          return {};
        case ManifoldDescriptor::Small::rp3:
          return {2};
        case ManifoldDescriptor::Small::l31:
          return {3};
      }
      throw internal_error("unreachable");
    case ManifoldDescriptor::Kind::lens:
      return {d.p};
    case ManifoldDescriptor::Kind::seifert: {
      const SeifertManifold m = normalize(d.seifert);
      const std::size_t k = m.fibres.size();
      std::vector<std::vector<Int>> rel;
      if (m.base.orientable) {
        // Generators: one class per exceptional fibre and the regular
        // fibre h; handle loops are free and join as 2g zero invariants.
        // Relations: p_i x_i + q_i h = 0 and sum x_i - t h = 0; the sign
        // is the one that makes (S2;;t) into L(t,1) and the (2,3,5)
        // triple at t = -1 into a homology sphere.
        const std::size_t n = k + 1;
        for (std::size_t i = 0; i < k; ++i) {
          std::vector<Int> row(n, 0);
          row[i] = m.fibres[i].p;
          row[n - 1] = m.fibres[i].q;
          rel.push_back(std::move(row));
        }
        std::vector<Int> section(n, 1);
        section[n - 1] = -m.t;
        rel.push_back(std::move(section));
        std::vector<Int> inv = smith_invariants(std::move(rel));
        inv.insert(inv.end(), 2 * static_cast<std::size_t>(m.base.genus), 0);
        return inv;
      }
      // Non-orientable base of genus g: crosscap loops a_1..a_g reverse
      // the fibre, so abelianizing adds 2h = 0 and the section relation
      // reads 2 sum a_j + sum x_i - t h = 0.
      const std::size_t g = static_cast<std::size_t>(m.base.genus);
      const std::size_t n = g + k + 1;
      for (std::size_t i = 0; i < k; ++i) {
        std::vector<Int> row(n, 0);
        row[g + i] = m.fibres[i].p;
        row[n - 1] = m.fibres[i].q;
        rel.push_back(std::move(row));
      }
      std::vector<Int> section(n, 1);
      for (std::size_t j = 0; j < g; ++j) section[j] = 2;
      section[n - 1] = -m.t;
      rel.push_back(std::move(section));
      std::vector<Int> torsion(n, 0);
      torsion[n - 1] = 2;
      rel.push_back(std::move(torsion));
      return smith_invariants(std::move(rel));
    }
    case ManifoldDescriptor::Kind::torus_bundle: {
      const GL2Mat& a = d.monodromy;
      std::vector<std::vector<Int>> rel{{a.a - 1, a.b}, {a.c, a.d - 1}};
      std::vector<Int> inv = smith_invariants(std::move(rel));
      inv.push_back(0);  // the base circle
      return inv;
    }
    case ManifoldDescriptor::Kind::chain_filling: {
      std::array<Int, 3> h = filling_homology(d.filling);
      return {h.begin(), h.end()};
    }
  }
  throw internal_error("unreachable");
}

std::string homology_invariants_to_string(const std::vector<Int>& inv) {
  std::string out;
  auto add = [&out](const std::string& part) {
    if (!out.empty()) out += " + ";
    out += part;
  };
  for (Int d : inv) {
    require(d >= 0, "negative invariant factor");
    if (d == 0) add("Z");
  }
  for (Int d : inv) {
    if (d > 1) add("Z_" + std::to_string(d));
  }
  return out.empty() ? "trivial" : out;
}

ComplexityProfile lens_profile(Int p, Int q) {
  if (p < 0) p = -p;
  if (p == 0) throw domain_error("reducible manifold");
  Int qm = p == 1 ? 0 : lens_q_min(p, q);
  Int v = pq_complexity(p, qm) - 2;
  if (v <= 0) {
    ComplexityProfile pr = all_zero();
    pr.notes.push_back("exceptional small space " + lens_name(p, qm));
    return pr;
  }
  ComplexityProfile pr;
  pr.c[0] = inf_value();
  for (int n = 1; n <= 9; ++n) pr.c[n] = finite(v);
  return pr;
}

ComplexityProfile torus_bundle_profile(const GL2Mat& a) {
  if (a.det() != 1) throw domain_error("not a monodromy");
  Int nn = conj_norm(a);
  ComplexityProfile pr;
  pr.c[0] = nn <= 1 ? finite(6) : inf_value();
  Int v = std::max<Int>(nn + 5, 6);
  for (int n = 1; n <= 9; ++n) pr.c[n] = finite(v);
  return pr;
}

Int seifert_c3_value(const SeifertManifold& m) {
  SeifertManifold n = normalize(m);
  Int chi = n.base.chi();
  Int v = std::max<Int>(0, n.t - 1 + chi) - 6 * (chi - 1);
  for (const Fibre& f : n.fibres) v += pq_complexity(f.p, f.q) + 2;
  return v;
}

Int seifert_c3_value_alt(const SeifertManifold& m) {
  SeifertManifold n = normalize(m);
  Int fib = 0;
  for (const Fibre& f : n.fibres) fib += pq_complexity(f.p, f.q) + 2;
  if (n.base == kSphere) return fib - 6 + std::max<Int>(0, n.t + 1);
  if (n.base == kProjectivePlane) return fib + std::max<Int>(0, n.t);
  if (n.base == kTorus || n.base == kKleinBottle)
    return fib + 6 + std::max<Int>(0, n.t - 1);
  throw domain_error("unsupported base surface");
}

ComplexityProfile seifert_profile(const SeifertManifold& m) {
  SeifertManifold n = normalize(m);
  CoincidenceResult co = coincidence(n);
  if (co.kind == CoincidenceResult::Kind::lens) {
    ComplexityProfile pr = lens_profile(co.p, co.q);
    pr.notes.push_back("fibred form of " + lens_name(co.p, co.q));
    return pr;
  }
  if (co.kind == CoincidenceResult::Kind::bundle) {
    ComplexityProfile pr = torus_bundle_profile(co.monodromy);
    pr.notes.push_back("fibred form of the torus bundle tb" +
                       mat_to_string(co.monodromy));
    return pr;
  }
  if (auto ms = mstar_info(n)) return mstar_profile(*ms);
  SeifertManifold cu = canonical_unoriented(n);
  Int v = seifert_c3_value(cu);
  ComplexityProfile pr;
  pr.c[0] = pr.c[1] = pr.c[2] = inf_value();
  for (int k = 3; k <= 7; ++k) pr.c[k] = finite(v);
  bool thin_fibre = cu.base == kSphere && cu.fibres.size() == 3 &&
                    cu.t == -1 && cu.fibres[0] == Fibre{2, 1} &&
                    cu.fibres[1] == Fibre{3, 1} &&
                    cu.fibres[2].p > 5 * cu.fibres[2].q;
  if (thin_fibre) {
    Int w = pq_complexity(cu.fibres[2].p, cu.fibres[2].q) + 2;
    pr.c[8] = pr.c[9] = finite(w);
    pr.notes.push_back("thin-fibre family: c8 = c9 = c3 - 1");
  } else {
    pr.c[8] = pr.c[9] = finite(v);
  }
  return pr;
}

namespace {

ComplexityProfile chain_profile(const FillingTriple& t, Int height_cap,
                                Int node_cap) {
  if (is_hyperbolic(t)) {
    ComplexityProfile pr;
    for (int n = 0; n <= 7; ++n) pr.c[n] = inf_value();
    std::optional<Int> c8 = c8_hyperbolic(t, height_cap, node_cap);
    pr.c[8] = c8 ? finite(*c8, Exactness::conditional)
                 : inf_value(Exactness::conditional);
    pr.c[9] = finite(c9_hyperbolic(t, height_cap, node_cap),
                     Exactness::conditional);
    pr.notes.push_back(
        "hyperbolic filling: c8 and c9 assume the minimality conjecture for "
        "chain-link fillings");
    return pr;
  }
  OrbitResult orb = orbit(t, height_cap, node_cap);
  std::vector<ComplexityProfile> identified;
  std::vector<std::string> identified_via;
  std::optional<Int> best_bound;
  for (const FillingTriple& member : orb.members) {
    NonHypIdentity id;
    try {
      id = nonhyperbolic_identity(member);
    } catch (const domain_error& e) {
      if (std::string_view(e.what()) == "reducible manifold") throw;
      continue;  // this member matches no pattern; try the others
    }
    switch (id.kind) {
      case NonHypIdentity::Kind::lens: {
        ComplexityProfile pr = lens_profile(id.p, id.q);
        pr.notes.push_back("identified as " + lens_name(id.p, id.q) + " via " +
                           triple_to_string(member));
        identified.push_back(std::move(pr));
        break;
      }
      case NonHypIdentity::Kind::one_block: {
        SeifertManifold sm;
        try {
          sm = one_block_to_seifert(id.block1);
        } catch (const domain_error& e) {
          if (std::string_view(e.what()) == "degenerate block filling")
            continue;
          throw;
        }
        ComplexityProfile pr = seifert_profile(sm);
        pr.notes.push_back("identified as " + seifert_to_string(normalize(sm)) +
                           " via " + triple_to_string(member));
        identified.push_back(std::move(pr));
        break;
      }
      case NonHypIdentity::Kind::two_block: {
        std::array<BlockSlot, 2> p1{BlockSlot{id.block1[0]},
                                    BlockSlot{id.block1[1]}};
        std::array<BlockSlot, 2> p2{BlockSlot{id.block2[0]},
                                    BlockSlot{id.block2[1]}};
        Int b = two_block_bound(p1, id.gluing, p2);
        if (!best_bound || b < *best_bound) best_bound = b;
        break;
      }
      case NonHypIdentity::Kind::self_glued: {
        Int b = self_glued_bound(BlockSlot{id.block1[0]});
        if (!best_bound || b < *best_bound) best_bound = b;
        break;
      }
    }
  }
  if (!identified.empty()) {
    for (size_t i = 1; i < identified.size(); ++i) {
      if (identified[i].c != identified[0].c)
        throw internal_error(
            "inconsistent identifications across the relation orbit");
    }
    return identified.front();
  }
  if (best_bound) {
    ComplexityProfile pr;
    pr.c[0] = pr.c[1] = pr.c[2] = inf_value(Exactness::upper_bound);
    for (int n = 3; n <= 9; ++n)
      pr.c[n] = finite(*best_bound, Exactness::upper_bound);
    pr.notes.push_back(
        "graph pattern: c3..c9 are assembly upper bounds, not exact values");
    if (!orb.complete)
      pr.notes.push_back(
          "orbit exploration hit a cap; the bound may be improvable");
    return pr;
  }
  throw domain_error("not a recognized pattern");
}

}  // namespace

ComplexityProfile profile(const ManifoldDescriptor& d, Int height_cap,
                          Int node_cap) {
  switch (d.kind) {
    case ManifoldDescriptor::Kind::exceptional:
      return all_zero();
    case ManifoldDescriptor::Kind::lens:
      return lens_profile(d.p, d.q);
    case ManifoldDescriptor::Kind::seifert:
      return seifert_profile(d.seifert);
    case ManifoldDescriptor::Kind::torus_bundle:
      return torus_bundle_profile(d.monodromy);
    case ManifoldDescriptor::Kind::chain_filling:
      return chain_profile(d.filling, height_cap, node_cap);
  }
  throw internal_error("unreachable");
}

ComplexityProfile profile(const ManifoldDescriptor& d) {
  return profile(d, kDefaultHeightCap, kDefaultNodeCap);
}

Int c1_t_times_i(const ThetaGraph& t0, const ThetaGraph& t1) {
  return dist_theta_theta(t0, t1);
}

Int c1_solid_torus(const ThetaGraph& t) {
  if (t.contains(Slope::infinity()))
    throw domain_error("c undefined by this formula");
  ThetaGraph base = theta_fan(-2);
  Int radius = 2 * dist_theta_theta(t, base) + 2;
  Int best = -1;
  for (Int n = -radius; n <= radius; ++n) {
    ThetaGraph shifted = apply_mat(GL2Mat{1, n, 0, 1}, base);
    Int d = dist_theta_theta(t, shifted);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

const std::vector<Brick>& brick_registry() {
  static const std::vector<Brick> table = {
      {"B0", 0, "thickened torus, parallel boundary markings"},
      {"B1", 0, "solid torus, meridian a vertex of the boundary marking"},
      {"B2", 0, "solid torus, meridian crossing the boundary marking"},
      {"B3", 1, "thickened torus, boundary markings one flip apart"},
      {"B4", 3, "circle bundle over the three-holed disc, flip markings"},
      {"B5", 8, "fibred block over the disc with fibres (2,1) and (3,1)"},
      {"B6", 8, "one-cusped hyperbolic block M2_2^1, a chain-link filling"},
      {"B7", 9, "one-cusped hyperbolic block M3_4^1, a chain-link filling"},
      {"B8", 9, "two-cusped hyperbolic block M4_1^2, a chain-link filling"},
      {"B9", 9, "chain-link exterior, first boundary marking"},
      {"B10", 9, "chain-link exterior, second boundary marking"},
  };
  return table;
}

}  // namespace c3m
