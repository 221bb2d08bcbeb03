#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace c3m {

using Int = std::int64_t;

// Raised when an operation is called outside its mathematical domain
// (non-coprime pairs, wrong determinant, unsupported manifold class, ...).
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a textual description cannot be parsed.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal invariant violation; indicates a bug, not bad input.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

constexpr Int abs_int(Int a) { return a < 0 ? -a : a; }
constexpr int sign_int(Int a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

constexpr Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline void require(bool cond, const char* msg) {
  if (!cond) throw internal_error(msg);
}

}  // namespace c3m
