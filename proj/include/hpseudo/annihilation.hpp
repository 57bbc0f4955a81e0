#pragma once

#include <map>
#include <string>
#include <vector>

#include "hpseudo/tensor_module.hpp"

namespace hp {

// x ⊗_H e in P, stored as the jet x.
using AnnElement = JetElement;

// Σ_k x_k ⊗ ∂_k in W = X⊗d.
struct WJetElement {
  std::vector<JetElement> comp;

  static WJetElement zero(int n, int order);
  int order() const;
  WJetElement operator+(const WJetElement& o) const;
  WJetElement operator-(const WJetElement& o) const;
  WJetElement operator*(const Q& q) const;
  WJetElement truncated(int m) const;
  bool is_zero() const;
  std::string str(int n) const;
};

bool wjets_agree(const WJetElement& a, const WJetElement& b);

// Lowest n with x ∈ fil_n X, i.e. one less than the smallest degree present.
// Returns order for the zero jet.
int jet_filtration(const JetElement& x);

// [x ⊗_H a, y ⊗_H b] = Σ (x f)(y g) ⊗_H c for [a*b] = Σ (f⊗g) ⊗_H c, on
// vectors of jets indexed by the generators.
std::vector<JetElement> annihilation_bracket(const Hopf& H, const GenBracket& br, int dim0,
                                             const std::vector<JetElement>& x, const std::vector<JetElement>& y);

AnnElement p_bracket(const Hopf& H, const DerivedData& dd, const AnnElement& x, const AnnElement& y);
WJetElement w_jet_bracket(const Hopf& H, const WJetElement& u, const WJetElement& v);
// ι_*(x) = −Σ x∂̄_i ⊗ ∂^i.
WJetElement iota_star(const Hopf& H, const DerivedData& dd, const AnnElement& x);

// (x ⊗_H e)·v on a module; needs x.order ≥ deg v + 2.
ModElem ann_act(const PseudoModule& M, const AnnElement& x, const ModElem& v);

// All (x_I ⊗_H e)·v at once, keyed by I; |I| ≤ deg v + 2.
std::map<MI, ModElem> fourier_coefficients(const PseudoModule& M, const ModElem& v);

// e∗v rebuilt from the actions of x_I (twisted: x_I e^{−χ} with bar(S ∂^(I))).
T2 reconstruct_action(const PseudoModule& M, const ModElem& v, bool twisted);

// Images of e^{−χ}, x^k e^{−χ}, x^i x^j e^{−χ} under ι_* against the closed forms.
struct DistinguishedImages {
  bool kernel_ok = true;     // ι_*(e^{−χ}) = 0
  bool linear_ok = true;     // x^k e^{−χ} case
  bool quadratic_ok = true;  // x^i x^j e^{−χ} ↦ 2 f^{ij}
  bool central_ok = true;    // e^{−χ} central on the jets tried
  std::vector<Matrix> quadratic;  // gl images at (i,j), i ≤ j, row major
  std::vector<std::string> failures;
  bool ok() const { return kernel_ok && linear_ok && quadratic_ok && central_ok; }
};

DistinguishedImages distinguished_images(const Hopf& H, const DerivedData& dd, int order = 4);

// W_0/W_1 → gl d: x⊗a ↦ −a⊗(x mod fil_1 X). Throws if w ∉ W_0.
Matrix gl_image(const WJetElement& w);

// ρ_sing on singular vectors through Fourier coefficients.
class SingAction {
 public:
  explicit SingAction(const PseudoModule& M);

  ModElem f(int i, int j, const ModElem& v) const;  // ½ (x^i x^j ⊗_H e)·v
  ModElem c(const ModElem& v) const;                // (e^{−χ} ⊗_H e)·v
  ModElem sp(const Matrix& A, const ModElem& v) const;
  ModElem dhat_upper(int k, const ModElem& v) const;
  ModElem dhat(int l, const ModElem& v) const;
  const DerivedData& derived() const { return dd_; }

 private:
  const PseudoModule& M_;
  DerivedData dd_;
};

}  // namespace hp
