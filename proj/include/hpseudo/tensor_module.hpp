#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hpseudo/pseudo.hpp"
#include "hpseudo/sprep.hpp"

namespace hp {

// ρ(h) on a d-module given by ρ(∂_i), extended to H = U(d).
Matrix rep_of(const Hopf& H, const std::vector<Matrix>& act, MI m);
Matrix rep_of(const Hopf& H, const std::vector<Matrix>& act, const HElement& h);

// Free H-module H⊗V0 with a pseudoaction of He, given on the generators 1⊗v.
class PseudoModule {
 public:
  PseudoModule(std::shared_ptr<const Hopf> H, int dim0, std::string label);
  virtual ~PseudoModule() = default;

  const Hopf& hopf() const { return *H_; }
  std::shared_ptr<const Hopf> hopf_ptr() const { return H_; }
  int dim0() const { return dim0_; }
  const std::string& label() const { return label_; }

  // e∗(1⊗v) in tensor form.
  const T2& act_gen(int v) const;
  // e∗x by H-linearity: e∗(h⊗v) = (1⊗h)(e∗v).
  T2 act_elem(const ModElem& x) const;

 protected:
  virtual T2 compute_gen(int v) const = 0;

 private:
  std::shared_ptr<const Hopf> H_;
  int dim0_;
  std::string label_;
  mutable std::vector<std::optional<T2>> cache_;
  mutable std::mutex mu_;
};

using ModulePtr = std::shared_ptr<const PseudoModule>;

// V(R) with R = Π′⊠U; coordinate p·dim U + u.
class VModule : public PseudoModule {
 public:
  VModule(std::shared_ptr<const Hopf> H, DPrimeModule pi, SpRep U, std::string label = "");

  const DPrimeModule& pi() const { return pi_; }
  const SpRep& U() const { return U_; }
  const DerivedData& derived() const { return dd_; }
  int dim_pi() const { return pi_.dim; }

  Matrix rho_d(int l) const;               // ρ_R(∂̂_l)
  Matrix rho_d_upper(int k) const;         // ρ_R(∂̂^k)
  Matrix rho_f(int i, int j) const;        // ρ_R(f^{ij})
  Matrix rho_sp(const Matrix& A) const;    // ρ_R(A), A ∈ sp(d)
  Matrix rho_c() const;                    // λ·Id

 protected:
  T2 compute_gen(int v) const override;

 private:
  DPrimeModule pi_;
  SpRep U_;
  DerivedData dd_;
};

// V(Π′,U) and T(Π′,U) = V(Π′_{−φ},U).
std::shared_ptr<const VModule> make_v_module(std::shared_ptr<const Hopf> H, const DPrimeModule& pi, const SpRep& U,
                                             const std::string& label = "");
std::shared_ptr<const VModule> make_t_module(std::shared_ptr<const Hopf> H, const DPrimeModule& pi, const SpRep& U,
                                             const std::string& label = "");

// W(d)-tensor module T(Π,U) for a gl(d)-module U, restricted to He ⊂ W(d) through ι.
class WRestricted : public PseudoModule {
 public:
  WRestricted(std::shared_ptr<const Hopf> H, DPrimeModule pi, SpRep U);
  // (1⊗∂_i)∗v in the W(d)-module.
  T2 w_act_gen(int i, int v) const;

 protected:
  T2 compute_gen(int v) const override;

 private:
  DPrimeModule pi_;
  SpRep U_;
  DerivedData dd_;
};

// T_Π(V): coordinate p·dim V0 + v.
class TwistedModule : public PseudoModule {
 public:
  TwistedModule(std::vector<Matrix> pi_act, ModulePtr base);

 protected:
  T2 compute_gen(int v) const override;

 private:
  std::vector<Matrix> pi_;
  int dpi_;
  ModulePtr base_;
};

ModulePtr twist_module(const std::vector<Matrix>& pi_act, ModulePtr base);

// Same pseudoaction on both sides.
bool same_action(const PseudoModule& a, const PseudoModule& b);

// [e∗e]∗v = e∗(e∗v) − (σ⊗_H id)(e∗(e∗v)) on the given element.
bool check_module_axiom(const PseudoModule& M, const ModElem& v);
bool check_module_axiom_generators(const PseudoModule& M);

// Basis of fil^k(H⊗V0): (multi-index, coordinate) pairs, multi-index major.
struct FilBasis {
  int k = 0;
  int dim0 = 0;
  std::vector<MI> mis;
  std::map<MI, int> pos;
  FilBasis(int n, int k, int dim0);
  int size() const { return static_cast<int>(mis.size()) * dim0; }
  int index(MI m, int v) const;  // −1 outside
  ModElem element(int idx) const;
  Vec coords(const ModElem& x) const;  // throws if x is outside fil^k
};

// H-linear map given by the images of the generators.
struct ModuleMap {
  ModulePtr src, dst;
  std::vector<ModElem> images;
  int shift = 1;
  std::string label;

  ModElem apply(const ModElem& x) const;
  // Matrix fil^k(src) → fil^{k+shift}(dst).
  Matrix block(int k) const;
  bool is_zero() const;
};

ModuleMap compose(const ModuleMap& second, const ModuleMap& first);
// β((id⊗id)⊗_H x) for x in tensor form.
T2 push_forward(const Hopf& H, const T2& x, const ModuleMap& m);
// e∗β(v) = ((id⊗id)⊗_H β)(e∗v) on every generator.
bool check_homomorphism(const ModuleMap& m);
ModuleMap twist_map(const std::vector<Matrix>& pi_act, const ModuleMap& m, ModulePtr src, ModulePtr dst);

}  // namespace hp
