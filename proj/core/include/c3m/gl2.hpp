#pragma once

#include <array>
#include <string>
#include <tuple>
#include <vector>

#include "c3m/farey.hpp"

namespace c3m {

// Integer 2x2 matrix, acting on slopes as columns: A(p, q) = (ap+bq, cp+dq).
struct GL2Mat {
  Int a = 1, b = 0, c = 0, d = 1;

  Int det() const { return a * d - b * c; }
  Int trace() const { return a + d; }

  friend bool operator==(const GL2Mat&, const GL2Mat&) = default;
  friend bool operator<(const GL2Mat& x, const GL2Mat& y) {
    return std::array<Int, 4>{x.a, x.b, x.c, x.d} <
           std::array<Int, 4>{y.a, y.b, y.c, y.d};
  }

  friend GL2Mat operator*(const GL2Mat& x, const GL2Mat& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  GL2Mat operator-() const { return {-a, -b, -c, -d}; }
};

// Generators of GL2(Z) used by the normal form, and the R/L shears.
inline constexpr GL2Mat kS1{1, -1, 0, -1};
inline constexpr GL2Mat kS2{-1, 0, -1, 1};
inline constexpr GL2Mat kS3{0, 1, 1, 0};
inline constexpr GL2Mat kJ{-1, 0, 0, 1};
inline constexpr GL2Mat kR{1, 1, 0, 1};
inline constexpr GL2Mat kL{1, 0, 1, 1};
inline constexpr GL2Mat kIdentity{1, 0, 0, 1};

// Inverse of a matrix with det = +-1.
GL2Mat unimodular_inverse(const GL2Mat& m);

Slope apply_mat(const GL2Mat& m, const Slope& s);
ThetaGraph apply_mat(const GL2Mat& m, const ThetaGraph& t);

std::string mat_to_string(const GL2Mat& m);
GL2Mat parse_mat(const std::string& text);  // "[[a,b],[c,d]]"

// Normal form A = eps * S_{i0} J S_{i1} J ... J S_{in} * S1^m with n = |A|
// factors of J, end indices in {1,2,3}, interior indices in {1,2},
// m in {0,1}, eps = +-1.  The form is unique.
struct Decomposition {
  int epsilon = 1;
  std::vector<int> indices;  // i0..in; n = indices.size() - 1 letters J
  int m = 0;

  Int n() const { return static_cast<Int>(indices.size()) - 1; }
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

Decomposition decompose(const GL2Mat& m);      // throws on |det| != 1
GL2Mat reconstruct(const Decomposition& d);
std::string decomposition_to_string(const Decomposition& d);

// |A| = d(theta^(0), A theta^(0)), the number of J factors above.
Int norm(const GL2Mat& m);

// ||A|| = min over triangles of d(theta, A theta), computed by strict
// descent from theta^(0); the displacement function of a tree isometry
// decreases strictly toward its minimum set, so a local minimum is global.
Int conj_norm(const GL2Mat& m);

// Conjugacy class of a det +1 matrix in GL2(Z), up to taking inverses.
struct ConjClassKey {
  enum class Kind { finite, parabolic, hyperbolic };
  Kind kind = Kind::finite;
  std::string finite_tag;  // "id", "neg_id", "tr0", "tr+1", "tr-1"
  int sign = 0;            // sign of trace for parabolic / hyperbolic
  Int k = 0;               // parabolic translation class, > 0
  std::string word;        // hyperbolic: canonical cyclic word over R, L

  friend bool operator==(const ConjClassKey&, const ConjClassKey&) = default;
  friend bool operator<(const ConjClassKey& a, const ConjClassKey& b) {
    auto rank = [](const ConjClassKey& x) {
      return std::tuple(static_cast<int>(x.kind), x.finite_tag, x.sign, x.k,
                        x.word);
    };
    return rank(a) < rank(b);
  }
};

ConjClassKey conj_class_key(const GL2Mat& m);  // det -1: "not a monodromy"
std::string key_to_string(const ConjClassKey& key);

// Lexicographically least representative over all rotations of the word,
// its reversal, and both with R and L exchanged.  This makes the result
// independent of orientation conventions and of taking inverses.
std::string canonical_cyclic_word(const std::string& word);
GL2Mat word_to_matrix(const std::string& word);

// Smith invariants of an arbitrary integer matrix acting on Z^cols by
// rows: the diagonal d1 | d2 | ..., all >= 0, padded with zeros to the
// column count.  A zero entry marks a free factor of the cokernel and
// entries of 1 are trivial factors the caller may drop.  Rows must all
// have the same length; an empty matrix yields the empty vector.
std::vector<Int> smith_invariants(std::vector<std::vector<Int>> m);

// Smith normal form of a 3x3 integer matrix: diagonal (d1, d2, d3) with
// d1 | d2 | d3, all >= 0, via exact gcd pivoting.
std::array<Int, 3> smith_normal_form(std::array<std::array<Int, 3>, 3> m);

}  // namespace c3m
