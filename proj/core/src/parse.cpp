#include "c3m/parse.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

#include "c3m/base.hpp"
#include "c3m/chainlink.hpp"
#include "c3m/farey.hpp"
#include "c3m/gl2.hpp"
#include "c3m/seifert.hpp"

namespace c3m {

namespace {

// Cursor over the original text; every skip happens lazily so reported
// positions always refer to the input as the caller wrote it.
class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) {}

  bool try_literal(const char* lit) {
    skip_ws();
    std::size_t len = std::char_traits<char>::length(lit);
    if (text_.compare(pos_, len, lit) != 0) return false;
    pos_ += len;
    return true;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Int integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
      ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    try {
      return std::stoll(text_.substr(start, pos_ - start));
    } catch (...) {
      pos_ = start;
      fail("integer out of range");
    }
  }

  Slope slope() {
    if (try_literal("inf")) return Slope::infinity();
    Int p = integer();
    if (!peek_is('/')) return Slope{p, 1};
    expect('/');
    Int q = integer();
    return Slope{p, q};
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& what) {
    throw parse_error(what + " at position " + std::to_string(pos_ + 1));
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

ManifoldDescriptor parse_descriptor(const std::string& text) {
  Scanner s(text);
  if (s.try_literal("s3")) {
    s.finish();
    return make_s3();
  }
  if (s.try_literal("rp3")) {
    s.finish();
    return make_rp3();
  }
  if (s.try_literal("lens")) {
    s.expect('(');
    Int p = s.integer();
    s.expect(',');
    Int q = s.integer();
    s.expect(')');
    s.finish();
    return make_lens(p, q);
  }
  if (s.try_literal("sfs")) {
    s.expect('(');
    BaseSurface base;
    if (s.try_literal("S2"))
      base = kSphere;
    else if (s.try_literal("P2"))
      base = kProjectivePlane;
    else if (s.try_literal("T2"))
      base = kTorus;
    else if (s.try_literal("K2"))
      base = kKleinBottle;
    else
      s.fail("expected a base surface (S2, P2, T2 or K2)");
    s.expect(';');
    std::vector<Fibre> fibres;
    while (s.peek_is('(')) {
      s.expect('(');
      Int p = s.integer();
      s.expect(',');
      Int q = s.integer();
      s.expect(')');
      fibres.push_back({p, q});
      if (!s.peek_is(',')) break;
      s.expect(',');
    }
    s.expect(';');
    Int t = s.integer();
    s.expect(')');
    s.finish();
    return make_seifert({base, fibres, t});
  }
  if (s.try_literal("tb")) {
    s.expect('[');
    s.expect('[');
    Int a = s.integer();
    s.expect(',');
    Int b = s.integer();
    s.expect(']');
    s.expect(',');
    s.expect('[');
    Int c = s.integer();
    s.expect(',');
    Int d = s.integer();
    s.expect(']');
    s.expect(']');
    s.finish();
    return make_torus_bundle(GL2Mat{a, b, c, d});
  }
  if (s.try_literal("chain")) {
    s.expect('(');
    Slope x = s.slope();
    s.expect(',');
    Slope y = s.slope();
    s.expect(',');
    Slope z = s.slope();
    s.expect(')');
    s.finish();
    return make_chain(FillingTriple(x, y, z));
  }
  s.fail("expected a manifold descriptor");
}

}  // namespace c3m
