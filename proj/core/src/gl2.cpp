#include "c3m/gl2.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <tuple>

namespace c3m {

GL2Mat unimodular_inverse(const GL2Mat& m) {
  Int det = m.det();
  if (det == 1) return {m.d, -m.b, -m.c, m.a};
  if (det == -1) return {-m.d, m.b, m.c, -m.a};
  throw domain_error("matrix is not unimodular");
}

Slope apply_mat(const GL2Mat& m, const Slope& s) {
  return Slope(m.a * s.p + m.b * s.q, m.c * s.p + m.d * s.q);
}

ThetaGraph apply_mat(const GL2Mat& m, const ThetaGraph& t) {
  return ThetaGraph(apply_mat(m, t.slopes[0]), apply_mat(m, t.slopes[1]),
                    apply_mat(m, t.slopes[2]));
}

std::string mat_to_string(const GL2Mat& m) {
  return "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" +
         std::to_string(m.c) + "," + std::to_string(m.d) + "]]";
}

GL2Mat parse_mat(const std::string& text) {
  std::string tok;
  tok.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) tok.push_back(c);
  }
  auto fail = [&]() -> GL2Mat {
    throw parse_error("matrix must look like [[a,b],[c,d]]");
  };
  if (tok.size() < 2 || tok.substr(0, 2) != "[[" ||
      tok.substr(tok.size() - 2) != "]]") {
    return fail();
  }
  std::string inner = tok.substr(2, tok.size() - 4);
  auto mid = inner.find("],[");
  if (mid == std::string::npos) return fail();
  auto split_pair = [&](const std::string& row) {
    auto comma = row.find(',');
    if (comma == std::string::npos) fail();
    auto num = [&](const std::string& s) {
      if (s.empty()) fail();
      std::size_t pos = 0;
      Int v = 0;
      try {
        v = std::stoll(s, &pos);
      } catch (...) {
        fail();
      }
      if (pos != s.size()) fail();
      return v;
    };
    return std::pair<Int, Int>(num(row.substr(0, comma)),
                               num(row.substr(comma + 1)));
  };
  auto [a, b] = split_pair(inner.substr(0, mid));
  auto [c, d] = split_pair(inner.substr(mid + 3));
  return GL2Mat{a, b, c, d};
}

namespace {

const GL2Mat& s_mat(int i) {
  switch (i) {
    case 1: return kS1;
    case 2: return kS2;
    default: return kS3;
  }
}

const ThetaGraph& theta_zero() {
  static const ThetaGraph t = theta_std(0);
  return t;
}

// The twelve matrices fixing theta^(0): eps * S_i * S1^m.
const std::map<GL2Mat, Decomposition>& stabilizer_table() {
  static const std::map<GL2Mat, Decomposition> table = [] {
    std::map<GL2Mat, Decomposition> t;
    for (int eps : {1, -1}) {
      for (int i : {1, 2, 3}) {
        for (int m : {0, 1}) {
          GL2Mat mat = s_mat(i);
          if (m == 1) mat = mat * kS1;
          if (eps == -1) mat = -mat;
          t.emplace(mat, Decomposition{eps, {i}, m});
        }
      }
    }
    require(t.size() == 12, "stabilizer of theta^(0) must have 12 elements");
    return t;
  }();
  return table;
}

}  // namespace

Decomposition decompose(const GL2Mat& m) {
  if (abs_int(m.det()) != 1) throw domain_error("matrix is not unimodular");
  std::vector<int> prefix;
  GL2Mat cur = m;
  while (true) {
    ThetaGraph img = apply_mat(cur, theta_zero());
    if (img == theta_zero()) {
      auto it = stabilizer_table().find(cur);
      require(it != stabilizer_table().end(), "stabilizer lookup failed");
      Decomposition d = it->second;
      d.indices.insert(d.indices.begin(), prefix.begin(), prefix.end());
      for (std::size_t j = 1; j + 1 < d.indices.size(); ++j) {
        require(d.indices[j] == 1 || d.indices[j] == 2,
                "interior index escaped {1,2}");
      }
      require(reconstruct(d) == m, "decomposition does not reproduce input");
      return d;
    }
    ThetaGraph first = path_theta(theta_zero(), img)[1];
    bool peeled = false;
    for (int i0 : {1, 2, 3}) {
      GL2Mat sj = s_mat(i0) * kJ;
      if (apply_mat(sj, theta_zero()) == first) {
        cur = unimodular_inverse(sj) * cur;
        prefix.push_back(i0);
        peeled = true;
        break;
      }
    }
    require(peeled, "no generator matches the first step of the geodesic");
  }
}

GL2Mat reconstruct(const Decomposition& d) {
  require(!d.indices.empty(), "decomposition needs at least one index");
  GL2Mat m = kIdentity;
  for (std::size_t j = 0; j + 1 < d.indices.size(); ++j) {
    m = m * s_mat(d.indices[j]) * kJ;
  }
  m = m * s_mat(d.indices.back());
  if (d.m == 1) m = m * kS1;
  if (d.epsilon == -1) m = -m;
  return m;
}

std::string decomposition_to_string(const Decomposition& d) {
  std::string out = "eps=";
  out += (d.epsilon == 1) ? "+1" : "-1";
  out += " indices=[";
  for (std::size_t j = 0; j < d.indices.size(); ++j) {
    if (j > 0) out += ",";
    out += std::to_string(d.indices[j]);
  }
  out += "] m=" + std::to_string(d.m);
  return out;
}

Int norm(const GL2Mat& m) {
  if (abs_int(m.det()) != 1) throw domain_error("matrix is not unimodular");
  return dist_theta_theta(theta_zero(), apply_mat(m, theta_zero()));
}

namespace {

Int displacement(const GL2Mat& m, const ThetaGraph& t) {
  return dist_theta_theta(t, apply_mat(m, t));
}

}  // namespace

Int conj_norm(const GL2Mat& m) {
  if (abs_int(m.det()) != 1) throw domain_error("matrix is not unimodular");
  ThetaGraph cur = theta_zero();
  Int best = displacement(m, cur);
  while (best > 0) {
    bool improved = false;
    for (const ThetaGraph& nb : flips(cur)) {
      Int d = displacement(m, nb);
      if (d < best) {
        cur = nb;
        best = d;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return best;
}

std::string canonical_cyclic_word(const std::string& word) {
  require(!word.empty(), "cyclic word must be nonempty");
  auto swapped = [](std::string w) {
    for (char& c : w) c = (c == 'R') ? 'L' : 'R';
    return w;
  };
  std::string best;
  for (std::string base :
       {word, swapped(word), std::string(word.rbegin(), word.rend()),
        swapped(std::string(word.rbegin(), word.rend()))}) {
    for (std::size_t r = 0; r < base.size(); ++r) {
      std::string rot = base.substr(r) + base.substr(0, r);
      if (best.empty() || rot < best) best = rot;
    }
  }
  return best;
}

GL2Mat word_to_matrix(const std::string& word) {
  GL2Mat m = kIdentity;
  for (char c : word) {
    if (c == 'R') {
      m = m * kR;
    } else if (c == 'L') {
      m = m * kL;
    } else {
      throw domain_error("word letters must be R or L");
    }
  }
  return m;
}

namespace {

// One letter of the axis word, read from the turn the axis makes at cur.
char turn_letter(const ThetaGraph& prev, const ThetaGraph& cur,
                 const ThetaGraph& next) {
  std::vector<Slope> e_in, e_out;
  Slope m_vertex;
  bool have_m = false;
  for (const Slope& s : cur.slopes) {
    if (prev.contains(s)) {
      e_in.push_back(s);
    } else {
      m_vertex = s;
      have_m = true;
    }
    if (next.contains(s)) e_out.push_back(s);
  }
  require(e_in.size() == 2 && have_m, "consecutive triangles must share an edge");
  require(e_out.size() == 2, "consecutive triangles must share an edge");
  require(e_out[0] == m_vertex || e_out[1] == m_vertex,
          "outgoing edge must contain the new vertex");
  Slope pivot = (e_out[0] == m_vertex) ? e_out[1] : e_out[0];
  require(pivot == e_in[0] || pivot == e_in[1], "pivot must lie on both edges");

  // Write the canonical vector of m as alpha*x + beta*y, alpha, beta = +-1.
  const Slope& x = e_in[0];
  const Slope& y = e_in[1];
  Int d = slope_det(x, y);
  Int alpha = slope_det(m_vertex, y) * d;
  Int beta = slope_det(x, m_vertex) * d;
  require(abs_int(alpha) == 1 && abs_int(beta) == 1,
          "third vertex is not a unit combination of the edge");
  Int ux = alpha * x.p, uy = alpha * x.q;
  Int vx = beta * y.p, vy = beta * y.q;
  bool x_first = (ux * vy - uy * vx) == 1;
  const Slope& first = x_first ? x : y;
  return (pivot == first) ? 'R' : 'L';
}

// Cyclic R/L word of a hyperbolic matrix with trace >= 3, read off the
// turns made along one fundamental period of its axis.
std::string axis_word(const GL2Mat& b) {
  ThetaGraph t0 = theta_zero();
  std::vector<ThetaGraph> approach = path_theta(t0, apply_mat(b, t0));
  ThetaGraph theta_star = approach[0];
  Int best = displacement(b, theta_star);
  for (const ThetaGraph& t : approach) {
    Int d = displacement(b, t);
    if (d < best) {
      best = d;
      theta_star = t;
    }
  }
  require(best == conj_norm(b), "axis search missed the minimum");
  require(best >= 2, "hyperbolic displacement must be at least 2");
  std::vector<ThetaGraph> axis = path_theta(theta_star, apply_mat(b, theta_star));
  ThetaGraph wrap = apply_mat(b, axis[1]);
  std::string word;
  std::size_t n = axis.size() - 1;
  for (std::size_t j = 1; j <= n; ++j) {
    const ThetaGraph& next = (j < n) ? axis[j + 1] : wrap;
    word.push_back(turn_letter(axis[j - 1], axis[j], next));
  }
  return word;
}

}  // namespace

ConjClassKey conj_class_key(const GL2Mat& m) {
  if (m.det() != 1) throw domain_error("not a monodromy");
  ConjClassKey key;
  Int tr = m.trace();
  if (m == kIdentity) {
    key.finite_tag = "id";
    return key;
  }
  if (m == -kIdentity) {
    key.finite_tag = "neg_id";
    return key;
  }
  if (tr == 0 || tr == 1 || tr == -1) {
    key.finite_tag = (tr == 0) ? "tr0" : (tr == 1 ? "tr+1" : "tr-1");
    return key;
  }
  if (tr == 2 || tr == -2) {
    key.kind = ConjClassKey::Kind::parabolic;
    key.sign = (tr > 0) ? 1 : -1;
    GL2Mat b = (key.sign == 1) ? m : -m;
    key.k = gcd_int(gcd_int(b.a - 1, b.b), gcd_int(b.c, b.d - 1));
    require(key.k > 0, "parabolic class must be positive");
    return key;
  }
  key.kind = ConjClassKey::Kind::hyperbolic;
  key.sign = (tr > 0) ? 1 : -1;
  GL2Mat b = (key.sign == 1) ? m : -m;
  std::string word = axis_word(b);
  require(static_cast<Int>(word.size()) == conj_norm(b),
          "axis word length must equal the conjugation norm");
  key.word = canonical_cyclic_word(word);
  return key;
}

std::string key_to_string(const ConjClassKey& key) {
  switch (key.kind) {
    case ConjClassKey::Kind::finite:
      return "finite:" + key.finite_tag;
    case ConjClassKey::Kind::parabolic:
      return std::string("parabolic:") + (key.sign > 0 ? "+" : "-") + ":" +
             std::to_string(key.k);
    default:
      return std::string("hyperbolic:") + (key.sign > 0 ? "+" : "-") + ":" +
             key.word;
  }
}

std::vector<Int> smith_invariants(std::vector<std::vector<Int>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (const auto& r : a) require(r.size() == cols, "ragged matrix");
  const std::size_t steps = std::min(rows, cols);
  std::vector<Int> d(cols, 0);
  for (std::size_t k = 0; k < steps; ++k) {
    while (true) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = k; i < rows; ++i) {
        for (std::size_t j = k; j < cols; ++j) {
          if (a[i][j] != 0 &&
              (pi == rows || abs_int(a[i][j]) < abs_int(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) break;  // the block is zero; d[k..] stay 0
      std::swap(a[pi], a[k]);
      for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][pj], a[i][k]);
      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (a[i][k] == 0) continue;
        Int f = a[i][k] / a[k][k];
        for (std::size_t j = k; j < cols; ++j) a[i][j] -= f * a[k][j];
        if (a[i][k] != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (a[k][j] == 0) continue;
        Int f = a[k][j] / a[k][k];
        for (std::size_t i = k; i < rows; ++i) a[i][j] -= f * a[i][k];
        if (a[k][j] != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = k + 1; i < rows && divides; ++i) {
        for (std::size_t j = k + 1; j < cols && divides; ++j) {
          if (a[i][j] % a[k][k] != 0) {
            // Pull the offending row up so the pivot shrinks to the gcd.
            for (std::size_t jj = k; jj < cols; ++jj) a[k][jj] += a[i][jj];
            divides = false;
          }
        }
      }
      if (divides) break;
    }
    d[k] = abs_int(a[k][k]);
  }
  return d;
}

std::array<Int, 3> smith_normal_form(std::array<std::array<Int, 3>, 3> m) {
  std::vector<std::vector<Int>> rows(3, std::vector<Int>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rows[i][j] = m[i][j];
  std::vector<Int> d = smith_invariants(std::move(rows));
  return {d[0], d[1], d[2]};
}

}  // namespace c3m
