#include "hpseudo/rational.hpp"

#include <cctype>

namespace hp {

Q parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '"' && ch != '\'') s += ch;
  if (s.empty()) throw ParseError("empty rational");
  auto valid_int = [](const std::string& t) {
    size_t i = (t.size() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw ParseError("bad rational '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  Q q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Q& q0) {
  Q q = q0;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Q factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Q(f);
}

Q binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Q(b);
}

Q qpow(const Q& base, int e) {
  Q r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace hp
