#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hpseudo/forms.hpp"
#include "hpseudo/tensor_module.hpp"

namespace hp {

struct Complex {
  std::vector<ModulePtr> terms;
  std::vector<ModuleMap> maps;  // maps[t]: terms[t] → terms[t+1]
  std::vector<std::string> labels;
};

// Pseudoforms twisted by a d-module Π. The parameter t selects Π_{tχ}.
class DeRham {
 public:
  DeRham(std::shared_ptr<const Hopf> H, std::vector<Matrix> pi);

  const Hopf& hopf() const { return *H_; }
  const Forms& forms() const { return F_; }
  int N() const { return H_->dim() / 2; }
  int dim_pi() const { return dpi_; }
  std::vector<Matrix> pi_shift(const Q& t) const;

  // Ω^n_{Π_tχ} = T(Π_{tχ−nχ/2}, Ω^n) and its quotient/sub pieces.
  ModulePtr omega(int n, const Q& t) const;
  ModulePtr quotient(int n, const Q& t) const;  // Ω^n/I^n
  ModulePtr jpart(int n, const Q& t) const;     // J^n

  ModuleMap d(int n, const Q& t) const;
  ModuleMap d_quotient(int n, const Q& t) const;
  ModuleMap d_j(int n, const Q& t) const;
  ModuleMap psi_chi(int n, const Q& t) const;  // Ω^n_{Π_tχ} → Ω^{n+2}_{Π_{(t+1)χ}}
  ModuleMap rumin(const Q& t) const;           // Ω^N/I^N over Π_tχ → J^N over Π_{(t−1)χ}

  // Lifts quotient / J coordinates back to Ω^n coordinates.
  ModElem lift_quotient(int n, const ModElem& x) const;
  ModElem lift_j(int n, const ModElem& x) const;

  Complex pseudo_de_rham(const Q& t = 0) const;  // Ω^0 → … → Ω^{2N}
  Complex csdr() const;                          // the conformally symplectic complex

 private:
  ModulePtr cached(const std::string& key, const std::function<ModulePtr()>& make) const;
  // d on a single form generator 1⊗u_p⊗α, in Ω^{n+1} coordinates.
  ModElem d_form(int n, const Q& t, int p, const Vec& alpha) const;
  // Regroups an element of H⊗Π⊗Ω^n and maps the Ω^n part of each coefficient.
  ModElem regroup(const ModElem& x, int from_dim, int to_dim, const std::function<Vec(const Vec&)>& f) const;

  std::shared_ptr<const Hopf> H_;
  LieAlgebraSpec s_;
  Forms F_;
  std::vector<Matrix> pi_;
  int dpi_;
  mutable std::map<std::string, ModulePtr> cache_;
  mutable std::mutex mu_;
};

ModuleMap de_rham_d(const DeRham& dr, int n);
ModuleMap psi_chi_map(const DeRham& dr, int n);
ModuleMap rumin_map(const DeRham& dr);
Complex build_csdr_complex(const DeRham& dr);

// Graded verification of a complex up to a degree cap.
struct ExactnessRow {
  int term = 0;
  int degree = 0;
  int kernel = 0;  // dim ker(out-map) on fil^degree
  int image = 0;   // dim of in-map image from the matching filtration piece
  bool exact = false;
};

struct ExactnessReport {
  bool zero_compositions = true;
  std::vector<ExactnessRow> rows;
  bool exact_at(int term) const;
};

// Checks maps[t+1]∘maps[t] = 0 and ker = im at each listed term for k ≤ cap.
ExactnessReport exactness_check(const Complex& c, int cap, const std::vector<int>& terms);
// dim fil^k(terms.back()) − rank of the last map into it, for k ≤ cap.
std::vector<int> cokernel_profile(const Complex& c, int cap);

std::string twist_label(const Q& coeff_of_chi, const std::string& rep);

}  // namespace hp
