#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>

#include "hpseudo/hopf.hpp"

namespace hp {

// Element of the free H-module H⊗V0: (∂^(I), coordinate) → coefficient.
struct ModElem {
  std::map<std::pair<MI, int>, Q> t;

  static ModElem gen(int v, const Q& q = 1);
  static ModElem term(const HElement& h, int v);
  void add(MI m, int v, const Q& q);
  ModElem& operator+=(const ModElem& o);
  ModElem operator+(const ModElem& o) const;
  ModElem operator-(const ModElem& o) const;
  ModElem operator*(const Q& q) const;
  bool operator==(const ModElem& o) const { return t == o.t; }
  bool zero() const { return t.empty(); }
  int degree() const;
  std::string str(int n) const;
};

// Left multiplication of a module element by h.
ModElem h_times(const Hopf& H, const HElement& h, const ModElem& x);

// H^{⊗K} ⊗ V0 with a fixed coordinate: canonical form of H^{⊗K}⊗_H(H⊗V0),
// where a term (a_1,...,a_K, w) stands for (a_1⊗...⊗a_K)⊗_H(1⊗w).
template <int K>
struct TKey {
  std::array<uint64_t, K> m{};
  int v = 0;
  bool operator<(const TKey& o) const { return m != o.m ? m < o.m : v < o.v; }
  bool operator==(const TKey& o) const { return m == o.m && v == o.v; }
};

template <int K>
struct HTensor {
  std::map<TKey<K>, Q> t;

  void add(const TKey<K>& k, const Q& q) {
    if (is_zero(q)) return;
    auto it = t.find(k);
    if (it == t.end()) {
      t.emplace(k, q);
    } else {
      it->second += q;
      if (is_zero(it->second)) t.erase(it);
    }
  }
  HTensor& operator+=(const HTensor& o) {
    for (const auto& [k, q] : o.t) add(k, q);
    return *this;
  }
  HTensor& operator-=(const HTensor& o) {
    for (const auto& [k, q] : o.t) add(k, -q);
    return *this;
  }
  HTensor operator+(const HTensor& o) const {
    HTensor r = *this;
    r += o;
    return r;
  }
  HTensor operator-(const HTensor& o) const {
    HTensor r = *this;
    r -= o;
    return r;
  }
  HTensor operator*(const Q& q) const {
    HTensor r;
    if (is_zero(q)) return r;
    r.t = t;
    for (auto& [k, x] : r.t) x *= q;
    return r;
  }
  bool operator==(const HTensor& o) const { return t == o.t; }
  bool zero() const { return t.empty(); }
};

using T2 = HTensor<2>;
using T3 = HTensor<3>;

std::string t2_str(const T2& x, int n);

// (f⊗g)⊗_H v for arbitrary v ∈ H⊗V0.
T2 two_sided(const Hopf& H, const HElement& f, const HElement& g, const ModElem& v);
// Adds (f⊗g)⊗_H(1⊗w) scaled by q.
void add_simple(T2& out, const HElement& f, const HElement& g, int w, const Q& q = 1);
// (h1⊗h2)·x
T2 mul_left(const Hopf& H, const HElement& h1, const HElement& h2, const T2& x);

// Left-normal form Σ(∂^(I)⊗1)⊗_H v'_I and right-normal form Σ(1⊗∂^(I))⊗_H v''_I.
using NormalForm = std::map<MI, ModElem>;
NormalForm left_normal(const Hopf& H, const T2& x);
NormalForm right_normal(const Hopf& H, const T2& x);
T2 from_left_normal(const Hopf& H, const NormalForm& nf);
T2 from_right_normal(const Hopf& H, const NormalForm& nf);

// A pseudobracket on H⊗V0 (or a pseudoaction of L on a module) given on
// generators: gen(a, b) = [(1⊗a)*(1⊗b)] in tensor form.
using GenBracket = std::function<T2(int, int)>;

// H-bilinear extension to arbitrary elements.
T2 bracket_elems(const Hopf& H, const GenBracket& br, const ModElem& x, const ModElem& y);

// [x*y] ↦ [[x*y]*z] with [(h⊗_H a)*b] = (h⊗1)(Δ⊗id)[a*b].
T3 compose_outer(const Hopf& H, const T2& xy, const std::function<T2(int)>& act);
// [y*z] ↦ [x*[y*z]] with [a*(h⊗_H b)] = (1⊗h)(id⊗Δ)[a*b].
T3 compose_inner(const Hopf& H, const T2& yz, const std::function<T2(int)>& act);
T3 swap12(const T3& x);
T2 swap(const T2& x);

// Brackets on generators.
GenBracket w_bracket(const LieAlgebraSpec& s);                 // W(d), V0 = d
GenBracket cur_gl_bracket(int n);                              // Cur gl(d), V0 = gl(d) with basis E_ab
T2 h_generator_bracket(const Hopf& H, const DerivedData& dd);  // [e*e] in He
GenBracket h_bracket(const Hopf& H, const DerivedData& dd, const Matrix* r_override = nullptr);

// W(d) pseudobracket on arbitrary f⊗a, g⊗b.
T2 w_bracket_elems(const Hopf& H, const HElement& f, const Vec& a, const HElement& g, const Vec& b);

bool check_skew(const Hopf& H, int dimV0, const GenBracket& br);
bool check_jacobi(const Hopf& H, int dimV0, const GenBracket& br);
// Jacobi on explicit elements with H-coefficients.
bool check_jacobi_elems(const Hopf& H, const GenBracket& br, const ModElem& x, const ModElem& y, const ModElem& z);

// ι(e) = −Σ ∂̄_i⊗∂^i ∈ H⊗d.
ModElem iota_embed(const Hopf& H, const DerivedData& dd);
bool check_iota_homomorphism(const Hopf& H, const DerivedData& dd);

// τ(e) ∈ H⊗gl(d) from ι(e), and the two closed expressions for it.
ModElem tau_of_e(const Hopf& H, const DerivedData& dd);
ModElem tau_expression_adsp(const Hopf& H, const DerivedData& dd);
ModElem tau_expression_dual(const Hopf& H, const DerivedData& dd);
ModElem matrix_term(const HElement& h, const Matrix& M);

}  // namespace hp
