#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hp {

using Q = mpq_class;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts "p", "-p", "p/q"; surrounding quotes and blanks are ignored.
Q parse_rational(const std::string& text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Q& q);

// a/b in lowest terms; mpq_class(a, b) does not reduce.
inline Q frac(long a, long b) {
  Q q(a, b);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Q& q) { return sgn(q) == 0; }

Q factorial(int n);
Q binomial(int n, int k);
Q qpow(const Q& base, int e);

}  // namespace hp
