#include "c3m/seifert.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace c3m {

namespace {

using I128 = __int128;

// Lens parameters of a sphere base form with at most two fibres, read off
// from the Heegaard gluing of the two fibred solid tori.
std::pair<Int, Int> lens_parameters(const SeifertManifold& n) {
  std::array<std::array<Int, 2>, 2> f{{{1, 0}, {1, 0}}};
  for (size_t i = 0; i < n.fibres.size(); ++i) {
    f[i] = {n.fibres[i].p, n.fibres[i].q};
  }
  Int a1 = f[0][0], b1 = f[0][1];
  Int a2 = f[1][0], b2 = f[1][1];
  auto [x, y] = dual_curve(a1, b1);
  Int mw_p = -a2;
  Int mw_q = b2 + n.t * a2;
  Int p = abs_int(a1 * b2 + b1 * a2 + n.t * a1 * a2);
  if (p == 0) throw domain_error("reducible manifold");
  Int q = ((mw_p * y - mw_q * x) % p + p) % p;
  if (p == 1) q = 0;
  return {p, q};
}

}  // namespace

std::string base_to_string(const BaseSurface& b) {
  if (b == kSphere) return "S2";
  if (b == kTorus) return "T2";
  if (b == kProjectivePlane) return "P2";
  if (b == kKleinBottle) return "K2";
  throw domain_error("unsupported base surface");
}

BaseSurface parse_base(const std::string& s) {
  if (s == "S2") return kSphere;
  if (s == "T2") return kTorus;
  if (s == "P2") return kProjectivePlane;
  if (s == "K2") return kKleinBottle;
  throw parse_error("unknown base surface: " + s);
}

std::string seifert_to_string(const SeifertManifold& m) {
  std::ostringstream os;
  os << "sfs(" << base_to_string(m.base) << ";";
  for (size_t i = 0; i < m.fibres.size(); ++i) {
    if (i > 0) os << ",";
    os << "(" << m.fibres[i].p << "," << m.fibres[i].q << ")";
  }
  os << ";" << m.t << ")";
  return os.str();
}

SeifertManifold normalize(const SeifertManifold& m) {
  if (m.base.chi() < 0) throw domain_error("unsupported base surface");
  SeifertManifold out;
  out.base = m.base;
  out.t = m.t;
  for (const Fibre& f : m.fibres) {
    if (gcd_int(f.p, f.q) != 1) throw domain_error("not coprime");
    if (abs_int(f.p) < 2) {
      throw domain_error("fibre index must have absolute value at least 2");
    }
    Int p = abs_int(f.p);
    Int s = sign_int(f.p);
    Int q = ((s * f.q) % p + p) % p;  // in [1, p-1] by coprimality
    out.t += (s * f.q - q) / p;
    out.fibres.push_back({p, q});
  }
  std::sort(out.fibres.begin(), out.fibres.end());
  return out;
}

SeifertManifold reverse_orientation(const SeifertManifold& m) {
  SeifertManifold n = normalize(m);
  SeifertManifold out;
  out.base = n.base;
  out.t = -n.t - static_cast<Int>(n.fibres.size());
  for (const Fibre& f : n.fibres) out.fibres.push_back({f.p, f.p - f.q});
  std::sort(out.fibres.begin(), out.fibres.end());
  return out;
}

SeifertManifold canonical_unoriented(const SeifertManifold& m) {
  SeifertManifold n = normalize(m);
  Int k = static_cast<Int>(n.fibres.size());
  if (2 * n.t > -k) return n;
  SeifertManifold r = reverse_orientation(n);
  if (2 * n.t < -k) return r;
  return std::min(n, r);
}

CoincidenceResult coincidence(const SeifertManifold& m) {
  SeifertManifold n = normalize(m);
  Int k = static_cast<Int>(n.fibres.size());
  CoincidenceResult res;
  if (n.base == kSphere) {
    if (k <= 2) {
      auto [p, q] = lens_parameters(n);
      res.kind = CoincidenceResult::Kind::lens;
      res.p = p;
      res.q = q;
      return res;
    }
    static const std::vector<std::pair<SeifertManifold, GL2Mat>> kQuadruples{
        {{kSphere, {{2, 1}, {3, 1}, {6, 1}}, -1}, GL2Mat{0, 1, -1, 1}},
        {{kSphere, {{2, 1}, {4, 1}, {4, 1}}, -1}, GL2Mat{0, 1, -1, 0}},
        {{kSphere, {{3, 1}, {3, 1}, {3, 1}}, -1}, GL2Mat{0, 1, -1, -1}},
        {{kSphere, {{2, 1}, {2, 1}, {2, 1}, {2, 1}}, -2},
         GL2Mat{-1, 0, 0, -1}},
    };
    SeifertManifold c = canonical_unoriented(n);
    for (const auto& [form, mat] : kQuadruples) {
      if (c == form) {
        res.kind = CoincidenceResult::Kind::bundle;
        res.monodromy = mat;
        return res;
      }
    }
    return res;
  }
  if (n.base == kProjectivePlane) {
    if (k <= 1) {
      throw domain_error(
          "projective base needs at least two exceptional fibres");
    }
    return res;
  }
  if (k == 0) {
    res.kind = CoincidenceResult::Kind::bundle;
    res.monodromy = (n.base == kTorus) ? GL2Mat{1, n.t, 0, 1}
                                       : GL2Mat{-1, 0, n.t, -1};
    return res;
  }
  return res;
}

std::string geometry_to_string(Geometry g) {
  switch (g) {
    case Geometry::lens: return "lens";
    case Geometry::elliptic: return "elliptic";
    case Geometry::flat: return "flat";
    case Geometry::nil: return "nil";
    case Geometry::sl2: return "sl2";
    case Geometry::h2xr: return "h2xr";
    case Geometry::sol: return "sol";
    case Geometry::hyperbolic: return "hyperbolic";
    case Geometry::s2xr: return "s2xr";
  }
  throw internal_error("unknown geometry");
}

Geometry geometry_of(const SeifertManifold& m) {
  SeifertManifold n = normalize(m);
  Int k = static_cast<Int>(n.fibres.size());
  bool genuine = (n.base == kSphere && k >= 3) ||
                 (n.base == kProjectivePlane && k >= 2) ||
                 ((n.base == kTorus || n.base == kKleinBottle) && k >= 1);
  if (!genuine) {
    throw domain_error("not a genuine Seifert form; resolve coincidences");
  }
  I128 prod = 1;
  for (const Fibre& f : n.fibres) prod *= f.p;
  I128 chi_orb = I128(n.base.chi()) * prod;
  for (const Fibre& f : n.fibres) chi_orb -= prod - prod / f.p;
  I128 euler = I128(n.t) * prod;
  for (const Fibre& f : n.fibres) euler += (prod / f.p) * f.q;
  bool euler_zero = euler == 0;
  if (chi_orb > 0) return euler_zero ? Geometry::s2xr : Geometry::elliptic;
  if (chi_orb == 0) return euler_zero ? Geometry::flat : Geometry::nil;
  return euler_zero ? Geometry::h2xr : Geometry::sl2;
}

std::string MStarInfo::label() const {
  std::ostringstream os;
  if (series == 'E') {
    os << "E" << a;
  } else {
    os << "C" << a << "," << b;
  }
  return os.str();
}

std::optional<MStarInfo> mstar_info(const SeifertManifold& m) {
  SeifertManifold n = canonical_unoriented(m);
  if (n.base != kSphere || n.fibres.size() != 3 || n.t != -1) {
    return std::nullopt;
  }
  for (const Fibre& f : n.fibres) {
    if (f.q != 1) return std::nullopt;
  }
  if (n.fibres[0].p != 2) return std::nullopt;
  Int a = n.fibres[1].p, b = n.fibres[2].p;
  if ((a == 3 && b == 6) || (a == 4 && b == 4)) return std::nullopt;
  MStarInfo info;
  if (a == 2) {
    info = {'C', 1, b - 1, b};
  } else if (a == 3 && b <= 4) {
    info = {'C', 2, b - 1, b + 1};
  } else if (a == 3) {
    info = {'E', b - 5, 0, b};
  } else {
    info = {'C', a - 1, b - 1, a + b - 2};
  }
  return info;
}

std::optional<SeifertManifold> mstar_form(char series, Int a, Int b) {
  Int n = 0, m = 0;
  if (series == 'E') {
    if (a < 0 || a == 1) return std::nullopt;
    n = 3;
    m = a + 5;
  } else if (series == 'C') {
    if (a < 1 || b < a) return std::nullopt;
    if (a == 2 && b > 3) return std::nullopt;
    if (a == 3 && b == 3) return std::nullopt;
    if (a == 1) {
      n = 2;
      m = b + 1;
    } else if (a == 2) {
      n = 3;
      m = b + 1;
    } else {
      n = a + 1;
      m = b + 1;
    }
  } else {
    return std::nullopt;
  }
  return SeifertManifold{kSphere, {{2, 1}, {n, 1}, {m, 1}}, -1};
}

}  // namespace c3m
