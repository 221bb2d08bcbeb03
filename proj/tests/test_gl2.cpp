#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "c3m/gl2.hpp"

using namespace c3m;

namespace {

bool deco_eq(const Decomposition& a, const Decomposition& b) {
  return a.epsilon == b.epsilon && a.indices == b.indices && a.m == b.m;
}

GL2Mat s_gen(int i) {
  switch (i) {
    case 1: return kS1;
    case 2: return kS2;
    default: return kS3;
  }
}

// All normal forms eps * S_{i0} J S_{i1} J ... J S_{in} * S1^m with n <= nmax.
std::vector<Decomposition> all_normal_forms(int nmax) {
  std::vector<Decomposition> out;
  for (int eps : {1, -1}) {
    for (int m : {0, 1}) {
      for (int i0 = 1; i0 <= 3; ++i0) out.push_back({eps, {i0}, m});
      for (int n = 1; n <= nmax; ++n) {
        Int interior = n - 1;
        for (Int mask = 0; mask < (Int(1) << interior); ++mask) {
          for (int i0 = 1; i0 <= 3; ++i0) {
            for (int in = 1; in <= 3; ++in) {
              std::vector<int> idx{i0};
              for (Int b = 0; b < interior; ++b) {
                idx.push_back(((mask >> b) & 1) ? 2 : 1);
              }
              idx.push_back(in);
              out.push_back({eps, idx, m});
            }
          }
        }
      }
    }
  }
  return out;
}

GL2Mat random_word(std::mt19937_64& rng, int max_len) {
  static const std::vector<GL2Mat> gens{
      kR, kL, unimodular_inverse(kR), unimodular_inverse(kL),
      kJ, kS1, kS2, kS3};
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
  GL2Mat m = kIdentity;
  int n = len(rng);
  for (int i = 0; i < n; ++i) m = m * gens[pick(rng)];
  return m;
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

Int brute_min_displacement(const GL2Mat& a) {
  Int r = norm(a);
  Int best = r;
  for (const auto& [t, d] : bfs_ball(theta_std(0), r)) {
    Int disp = dist_theta_theta(t, apply_mat(a, t));
    if (disp < best) best = disp;
  }
  return best;
}

using Mat3 = std::array<std::array<Int, 3>, 3>;

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

Int mat3_det(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 random_unimodular3(std::mt19937_64& rng) {
  Mat3 u{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  std::uniform_int_distribution<int> row(0, 2), coef(-2, 2), op(0, 1);
  for (int step = 0; step < 8; ++step) {
    int i = row(rng), j = row(rng);
    if (i == j) continue;
    if (op(rng) == 0) {
      Int k = coef(rng);
      for (int col = 0; col < 3; ++col) u[i][col] += k * u[j][col];
    } else {
      for (int col = 0; col < 3; ++col) {
        std::swap(u[i][col], u[j][col]);
        u[i][col] = -u[i][col];
      }
    }
  }
  return u;
}

}  // namespace

TEST_CASE("generator identities") {
  CHECK(kS1 * kS1 == kIdentity);
  CHECK(kS2 * kS2 == kIdentity);
  CHECK(kS3 * kS3 == kIdentity);
  CHECK(kJ * kJ == kIdentity);
  CHECK(kS1.det() == -1);
  CHECK(kS2.det() == -1);
  CHECK(kS3.det() == -1);
  CHECK(kJ.det() == -1);
}

TEST_CASE("neighbour triangles of the generators") {
  CHECK(apply_mat(kS1 * kJ, theta_std(0)) == theta_std(1));
  CHECK(apply_mat(kS2 * kJ, theta_std(0)) ==
        ThetaGraph(Slope(0, 1), Slope(1, 2), Slope(1, 1)));
  CHECK(apply_mat(kS3 * kJ, theta_std(0)) ==
        ThetaGraph(Slope(-1, 1), Slope(0, 1), Slope::infinity()));
}

TEST_CASE("normal forms with n <= 4 are distinct and round-trip") {
  auto forms = all_normal_forms(4);
  REQUIRE(forms.size() == 552);
  std::set<GL2Mat> seen;
  for (const auto& d : forms) {
    GL2Mat m = reconstruct(d);
    CAPTURE(decomposition_to_string(d));
    REQUIRE(seen.insert(m).second);
    auto back = decompose(m);
    REQUIRE(deco_eq(back, d));
    REQUIRE(back.n() == norm(m));
  }
}

TEST_CASE("stabilizer of the base triangle") {
  auto forms = all_normal_forms(0);
  REQUIRE(forms.size() == 12);
  for (const auto& d : forms) {
    GL2Mat m = reconstruct(d);
    CHECK(apply_mat(m, theta_std(0)) == theta_std(0));
    CHECK(norm(m) == 0);
  }
}

TEST_CASE("decompose round-trips on random words") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 500; ++it) {
    GL2Mat a = random_word(rng, 12);
    auto d = decompose(a);
    CHECK(reconstruct(d) == a);
    CHECK(d.n() == norm(a));
    CHECK(d.n() == dist_theta_theta(theta_std(0), apply_mat(a, theta_std(0))));
  }
}

TEST_CASE("norm fixed values") {
  CHECK(norm(kIdentity) == 0);
  CHECK(norm(kJ) == 1);  // J carries {inf,0,1} to {inf,-1,0}
  CHECK(norm(GL2Mat{1, 3, 0, 1}) == 3);
  CHECK(norm(GL2Mat{1, -3, 0, 1}) == 3);
  CHECK(norm(-kIdentity) == 0);
}

TEST_CASE("norm rejects non-unimodular matrices") {
  CHECK_THROWS_AS(norm(GL2Mat{2, 0, 0, 1}), domain_error);
  CHECK_THROWS_WITH(decompose(GL2Mat{2, 0, 0, 1}),
                    "matrix is not unimodular");
}

TEST_CASE("norm is invariant under inverse") {
  std::mt19937_64 rng(123);
  for (int it = 0; it < 1000; ++it) {
    GL2Mat a = random_word(rng, 12);
    CHECK(norm(unimodular_inverse(a)) == norm(a));
  }
}

TEST_CASE("conjugacy norm fixed values") {
  CHECK(conj_norm(GL2Mat{-3, -1, 1, 0}) == 2);
  CHECK(conj_norm(GL2Mat{3, -1, 1, 0}) == 2);
  CHECK(conj_norm(kIdentity) == 0);
  CHECK(conj_norm(-kIdentity) == 0);
  CHECK(conj_norm(GL2Mat{0, -1, 1, 1}) == 0);   // trace 1
  CHECK(conj_norm(GL2Mat{-1, 1, -1, 0}) == 0);  // trace -1
  CHECK(conj_norm(GL2Mat{0, -1, 1, 0}) == 1);   // trace 0
  for (Int t = 0; t <= 6; ++t) {
    CHECK(conj_norm(GL2Mat{1, t, 0, 1}) == t);
    CHECK(conj_norm(GL2Mat{1, 0, -t, 1}) == t);
    CHECK(conj_norm(GL2Mat{-1, t, 0, -1}) == t);
  }
  CHECK(conj_norm(word_to_matrix("LR")) == 2);
  CHECK(conj_norm(word_to_matrix("LLR")) == 3);
  CHECK(conj_norm(word_to_matrix("LRLR")) == 4);
}

TEST_CASE("conjugacy norm equals brute-force ball minimum") {
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 300; ++it) {
    GL2Mat a = random_word(rng, 10);
    CAPTURE(mat_to_string(a));
    REQUIRE(conj_norm(a) == brute_min_displacement(a));
  }
}

TEST_CASE("conjugacy norm invariances") {
  std::mt19937_64 rng(555);
  for (int it = 0; it < 1000; ++it) {
    GL2Mat a = random_word(rng, 10);
    GL2Mat b = random_word(rng, 6);
    Int base = conj_norm(a);
    CHECK(conj_norm(unimodular_inverse(a)) == base);
    CHECK(conj_norm(b * a * unimodular_inverse(b)) == base);
  }
}

TEST_CASE("cyclic word canonicalization") {
  CHECK(canonical_cyclic_word("RL") == "LR");
  CHECK(canonical_cyclic_word("RRL") == "LLR");
  CHECK(canonical_cyclic_word("LRL") == "LLR");
  CHECK(canonical_cyclic_word("RRRL") == "LLLR");
  CHECK(canonical_cyclic_word("RRLL") == "LLRR");
  CHECK(canonical_cyclic_word("LRLR") == "LRLR");
  CHECK(canonical_cyclic_word("RLRL") == "LRLR");
}

TEST_CASE("hyperbolic word classes per length") {
  for (int n : {2, 3, 4}) {
    std::set<std::string> classes;
    for (Int mask = 0; mask < (Int(1) << n); ++mask) {
      std::string w;
      for (int b = 0; b < n; ++b) w += ((mask >> b) & 1) ? 'R' : 'L';
      if (w.find('R') == std::string::npos) continue;
      if (w.find('L') == std::string::npos) continue;
      classes.insert(canonical_cyclic_word(w));
    }
    if (n == 2) CHECK(classes == std::set<std::string>{"LR"});
    if (n == 3) CHECK(classes == std::set<std::string>{"LLR"});
    if (n == 4) {
      CHECK(classes == std::set<std::string>{"LLLR", "LLRR", "LRLR"});
    }
  }
}

TEST_CASE("word_to_matrix fixed values") {
  CHECK(word_to_matrix("LR") == GL2Mat{1, 1, 1, 2});
  CHECK(word_to_matrix("LLR") == GL2Mat{1, 1, 2, 3});
  CHECK(word_to_matrix("RRL") == GL2Mat{3, 2, 1, 1});
  CHECK(word_to_matrix("LLLR").trace() == 5);
  CHECK(word_to_matrix("LLRR").trace() == 6);
  CHECK(word_to_matrix("LRLR").trace() == 7);
}

TEST_CASE("conjugacy class keys: finite order") {
  auto k_id = conj_class_key(kIdentity);
  CHECK(k_id.kind == ConjClassKey::Kind::finite);
  CHECK(k_id.finite_tag == "id");
  CHECK(conj_class_key(-kIdentity).finite_tag == "neg_id");
  CHECK(conj_class_key(GL2Mat{0, -1, 1, 0}).finite_tag == "tr0");
  CHECK(conj_class_key(GL2Mat{0, -1, 1, 1}).finite_tag == "tr+1");
  CHECK(conj_class_key(GL2Mat{-1, 1, -1, 0}).finite_tag == "tr-1");
}

TEST_CASE("conjugacy class keys: parabolic") {
  auto k = conj_class_key(GL2Mat{1, 3, 0, 1});
  CHECK(k.kind == ConjClassKey::Kind::parabolic);
  CHECK(k.sign == 1);
  CHECK(k.k == 3);
  auto k2 = conj_class_key(GL2Mat{-1, 0, 2, -1});
  CHECK(k2.kind == ConjClassKey::Kind::parabolic);
  CHECK(k2.sign == -1);
  CHECK(k2.k == 2);
  auto k3 = conj_class_key(GL2Mat{1, 0, -4, 1});
  CHECK(k3.sign == 1);
  CHECK(k3.k == 4);
}

TEST_CASE("conjugacy class keys: hyperbolic") {
  auto k = conj_class_key(word_to_matrix("LR"));
  CHECK(k.kind == ConjClassKey::Kind::hyperbolic);
  CHECK(k.sign == 1);
  CHECK(k.word == "LR");
  CHECK(conj_class_key(GL2Mat{3, -1, 1, 0}) == k);
  auto kneg = conj_class_key(-word_to_matrix("LR"));
  CHECK(kneg.sign == -1);
  CHECK(kneg.word == "LR");
  CHECK(conj_class_key(GL2Mat{3, 2, 1, 1}).word == "LLR");
  CHECK(conj_class_key(GL2Mat{4, -1, 1, 0}).word == "LLR");
}

TEST_CASE("conjugacy class key rejects orientation-reversing matrices") {
  CHECK_THROWS_AS(conj_class_key(kS3), domain_error);
  CHECK_THROWS_WITH(conj_class_key(kJ), "not a monodromy");
}

TEST_CASE("conjugacy class key invariances") {
  std::mt19937_64 rng(31337);
  int done = 0;
  while (done < 300) {
    GL2Mat a = random_word(rng, 10);
    if (a.det() != 1) continue;
    ++done;
    GL2Mat b = random_word(rng, 6);
    auto base = conj_class_key(a);
    CHECK(conj_class_key(b * a * unimodular_inverse(b)) == base);
    CHECK(conj_class_key(unimodular_inverse(a)) == base);
  }
}

TEST_CASE("key string rendering") {
  CHECK(key_to_string(conj_class_key(kIdentity)) == "finite:id");
  CHECK(key_to_string(conj_class_key(GL2Mat{1, 3, 0, 1})) == "parabolic:+:3");
  CHECK(key_to_string(conj_class_key(-word_to_matrix("LLR"))) ==
        "hyperbolic:-:LLR");
}

TEST_CASE("matrix parse and print") {
  GL2Mat m{3, -1, 1, 0};
  CHECK(mat_to_string(m) == "[[3,-1],[1,0]]");
  CHECK(parse_mat("[[3,-1],[1,0]]") == m);
  CHECK(parse_mat(" [ [ 3 , -1 ] , [ 1 , 0 ] ] ") == m);
  CHECK_THROWS_AS(parse_mat("[[1,2],[3]]"), parse_error);
  CHECK_THROWS_AS(parse_mat("hello"), parse_error);
}

TEST_CASE("smith normal form fixed values") {
  Mat3 a{{{-4, 1, 1}, {2, -3, 2}, {1, 1, 1}}};
  CHECK(smith_normal_form(a) == std::array<Int, 3>{1, 5, 5});
  Mat3 d{{{2, 0, 0}, {0, 3, 0}, {0, 0, 0}}};
  CHECK(smith_normal_form(d) == std::array<Int, 3>{1, 6, 0});
  Mat3 id{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  CHECK(smith_normal_form(id) == std::array<Int, 3>{1, 1, 1});
  Mat3 z{};
  CHECK(smith_normal_form(z) == std::array<Int, 3>{0, 0, 0});
}

TEST_CASE("smith normal form properties") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<Int> entry(-9, 9);
  for (int it = 0; it < 1000; ++it) {
    Mat3 a;
    for (auto& row : a) {
      for (auto& x : row) x = entry(rng);
    }
    auto s = smith_normal_form(a);
    // Divisibility chain, with zeros trailing.
    for (int i = 0; i + 1 < 3; ++i) {
      if (s[i] == 0) {
        CHECK(s[i + 1] == 0);
      } else if (s[i + 1] != 0) {
        CHECK(s[i + 1] % s[i] == 0);
      }
    }
    Int det = mat3_det(a);
    if (det != 0) {
      CHECK(s[0] * s[1] * s[2] == abs_int(det));
    } else {
      CHECK(s[2] == 0);
    }
    // Invariance under unimodular row and column operations.
    Mat3 u = random_unimodular3(rng);
    Mat3 v = random_unimodular3(rng);
    CHECK(abs_int(mat3_det(u)) == 1);
    CHECK(smith_normal_form(mat3_mul(mat3_mul(u, a), v)) == s);
  }
}
