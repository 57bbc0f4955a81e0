#pragma once

// Independent reference computations used by the tests.

#include <map>
#include <random>
#include <vector>

#include "hpseudo/hopf.hpp"

namespace oracle {

using hp::MI;
using hp::Q;

// Noncommutative word straightening: a word is a list of generator indices.
// Returns the ordinary (non-divided) PBW expansion as exponent → coefficient.
inline std::map<std::vector<int>, Q> straighten_word(const hp::LieAlgebraSpec& s, const std::vector<int>& w) {
  std::map<std::vector<int>, Q> out;
  std::vector<std::pair<std::vector<int>, Q>> todo{{w, Q(1)}};
  while (!todo.empty()) {
    auto [word, c] = todo.back();
    todo.pop_back();
    size_t p = 0;
    while (p + 1 < word.size() && word[p] <= word[p + 1]) ++p;
    if (p + 1 >= word.size()) {
      std::vector<int> e(s.dim, 0);
      for (int x : word) ++e[x];
      out[e] += c;
      continue;
    }
    int a = word[p], b = word[p + 1];
    auto swapped = word;
    std::swap(swapped[p], swapped[p + 1]);
    todo.emplace_back(swapped, c);
    for (int k = 0; k < s.dim; ++k) {
      Q ck = s.C(a, b, k);
      if (ck == 0) continue;
      std::vector<int> shorter(word.begin(), word.begin() + p);
      shorter.push_back(k);
      shorter.insert(shorter.end(), word.begin() + p + 2, word.end());
      todo.emplace_back(shorter, c * ck);
    }
  }
  return out;
}

// Product of divided-power basis elements via words.
inline hp::HElement word_product(const hp::LieAlgebraSpec& s, MI a, MI b) {
  std::vector<int> w;
  Q scale = 1;
  for (MI m : {a, b})
    for (int k = 0; k < s.dim; ++k) {
      for (int t = 0; t < m[k]; ++t) w.push_back(k);
      scale /= hp::factorial(m[k]);
    }
  hp::HElement h;
  for (const auto& [e, c] : straighten_word(s, w)) {
    Q f = 1;
    for (int x : e) f *= hp::factorial(x);
    h.add(MI::from(e), c * scale * f);
  }
  return h;
}

inline hp::HElement random_h(std::mt19937& rng, int n, int maxdeg, int terms = 4) {
  hp::HElement h;
  std::uniform_int_distribution<int> coef(-3, 3);
  auto all = hp::multi_indices_upto(n, maxdeg);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  for (int t = 0; t < terms; ++t) h.add(all[pick(rng)], Q(coef(rng)) / (1 + (t % 2)));
  return h;
}

inline hp::JetElement random_jet(std::mt19937& rng, int n, int order, int terms = 6) {
  hp::JetElement x;
  x.order = order;
  std::uniform_int_distribution<int> coef(-4, 4);
  auto all = hp::multi_indices_upto(n, order);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  for (int t = 0; t < terms; ++t) x.add(all[pick(rng)], Q(coef(rng)));
  return x;
}

}  // namespace oracle
