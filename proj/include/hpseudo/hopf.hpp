#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hpseudo/algebra_data.hpp"
#include "hpseudo/multiindex.hpp"

namespace hp {

// Element of H = U(d) in the divided-power PBW basis ∂^(I).
struct HElement {
  std::map<MI, Q> t;

  static HElement one() { return scalar(1); }
  static HElement scalar(const Q& q);
  static HElement basis(MI m, const Q& q = 1);

  void add(MI m, const Q& q);
  HElement& operator+=(const HElement& o);
  HElement& operator-=(const HElement& o);
  HElement operator+(const HElement& o) const;
  HElement operator-(const HElement& o) const;
  HElement operator*(const Q& q) const;
  bool operator==(const HElement& o) const { return t == o.t; }
  bool zero() const { return t.empty(); }
  int degree() const;  // -1 for zero
  Q coeff(MI m) const;
  std::string str(int n) const;  // sorted "(I): p/q" lines
};

using CoproductTerms = std::map<std::pair<MI, MI>, Q>;

// Element of X = H* truncated at order M, coordinates in the basis x_I dual to ∂^(I).
struct JetElement {
  int order = 0;
  std::map<MI, Q> t;

  static JetElement coord(int order, MI m, const Q& q = 1);
  void add(MI m, const Q& q);
  JetElement operator+(const JetElement& o) const;
  JetElement operator-(const JetElement& o) const;
  JetElement operator*(const Q& q) const;
  JetElement truncated(int m) const;
  bool zero() const { return t.empty(); }
  Q coeff(MI m) const;
  std::string str(int n) const;
};

// Equality of jets at the smaller of the two orders.
bool jets_agree(const JetElement& a, const JetElement& b);

class Hopf {
 public:
  explicit Hopf(LieAlgebraSpec s);

  int dim() const { return n_; }
  const LieAlgebraSpec& spec() const { return s_; }

  HElement gen(int i) const { return HElement::basis(MI::unit(i)); }
  HElement gen_bar(int i) const;  // ∂̄_i = ∂_i − χ(∂_i)

  HElement mul_basis(MI a, MI b) const;
  HElement mul(const HElement& a, const HElement& b) const;
  HElement left_gen(int i, const HElement& h) const { return mul(gen(i), h); }

  CoproductTerms coproduct(const HElement& h) const;
  HElement antipode(const HElement& h) const;
  Q counit(const HElement& h) const { return h.coeff(MI{}); }
  HElement bar(const HElement& h, const Vec& chi) const;
  HElement bar_inverse(const HElement& h, const Vec& chi) const;

  Q pair(const JetElement& x, const HElement& h) const;
  JetElement jet_multiply(const JetElement& x, const JetElement& y) const;
  // ⟨hx,k⟩ = ⟨x,S(h)k⟩ and ⟨xh,k⟩ = ⟨x,kS(h)⟩; order drops by deg h.
  JetElement act_left(const HElement& h, const JetElement& x) const;
  JetElement act_right(const JetElement& x, const HElement& h) const;
  JetElement exp_minus_chi(int order) const;

 private:
  HElement mul_gen(MI k, int j) const;  // ∂^(K)·∂_j
  HElement mul_gen_elem(const HElement& h, int j) const;

  LieAlgebraSpec s_;
  int n_;
  bool abelian_;
  mutable std::shared_mutex mu_;
  mutable std::map<std::pair<uint64_t, int>, HElement> gen_memo_;
  mutable std::map<std::pair<uint64_t, uint64_t>, HElement> pair_memo_;
};

// Coassociativity, multiplicativity of Δ, antipode and counit identities, S² = id
// and the bar automorphism, on pseudo-random elements of degree ≤ maxdeg.
std::vector<CheckItem> check_hopf_axioms(const Hopf& H, unsigned seed, int trials, int maxdeg);

}  // namespace hp
