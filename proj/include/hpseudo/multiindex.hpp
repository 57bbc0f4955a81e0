#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hp {

constexpr int kMaxVars = 8;

// Exponent tuple packed as 7 bits per variable, total degree in the top byte.
// Numeric order of the code is graded, and within a degree ∂1 sorts first.
struct MI {
  uint64_t code = 0;

  static constexpr uint64_t kMask = 127;

  int operator[](int i) const { return static_cast<int>((code >> (7 * i)) & kMask); }
  int deg() const { return static_cast<int>(code >> 56); }
  bool zero() const { return code == 0; }

  static MI unit(int i) { return MI{}.plus(i, 1); }
  static MI from(const std::vector<int>& e) {
    MI m;
    for (size_t i = 0; i < e.size(); ++i) m = m.plus(static_cast<int>(i), e[i]);
    return m;
  }

  MI plus(int i, int k) const {
    int e = (*this)[i] + k;
    if (e < 0 || e > static_cast<int>(kMask)) throw std::out_of_range("multi-index exponent");
    MI m;
    uint64_t body = code & ((uint64_t(1) << 56) - 1);
    body = (body & ~(kMask << (7 * i))) | (uint64_t(e) << (7 * i));
    m.code = body | (uint64_t(deg() + k) << 56);
    return m;
  }
  MI operator+(MI o) const {
    MI m = *this;
    for (int i = 0; i < kMaxVars; ++i)
      if (o[i]) m = m.plus(i, o[i]);
    return m;
  }
  MI operator-(MI o) const {
    MI m = *this;
    for (int i = 0; i < kMaxVars; ++i)
      if (o[i]) m = m.plus(i, -o[i]);
    return m;
  }
  bool leq(MI o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if ((*this)[i] > o[i]) return false;
    return true;
  }
  // Highest variable with a nonzero exponent, or -1.
  int last() const {
    for (int i = kMaxVars - 1; i >= 0; --i)
      if ((*this)[i]) return i;
    return -1;
  }
  std::vector<int> exps(int n) const {
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = (*this)[i];
    return e;
  }
  std::string str(int n) const {
    std::string s = "(";
    for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string((*this)[i]);
    return s + ")";
  }

  bool operator<(MI o) const { return code < o.code; }
  bool operator==(MI o) const { return code == o.code; }
  bool operator!=(MI o) const { return code != o.code; }
};

struct MIHash {
  size_t operator()(MI m) const { return std::hash<uint64_t>()(m.code); }
};

// All multi-indices in n variables of degree <= k, ascending.
std::vector<MI> multi_indices_upto(int n, int k);
// All J <= I componentwise.
std::vector<MI> sub_indices(MI I, int n);

}  // namespace hp
