#pragma once

#include <string>
#include <vector>

#include "hpseudo/algebra_data.hpp"

namespace hp {

// Exterior algebra Λd*. A degree-k form is a dense vector indexed by the
// k-subsets of {0..n-1} in lexicographic order; the coordinate at K is the
// value on (∂_{k1},...,∂_{kk}) with k1<...<kk.
struct FormElement {
  int deg = 0;
  Vec c;
};

class Forms {
 public:
  explicit Forms(const LieAlgebraSpec& s);

  int n() const { return n_; }
  int count(int deg) const;
  const std::vector<unsigned>& subsets(int deg) const { return subsets_[deg]; }
  int index(unsigned mask) const { return index_[mask]; }
  std::string label(int deg, int idx) const;  // e.g. "x1^x3"
  FormElement basis(int deg, int idx) const;
  FormElement zero(int deg) const { return {deg, Vec(count(deg))}; }

  // Value on a tuple of basis vectors (any order, repeats give 0).
  Q eval(const FormElement& a, const std::vector<int>& idx) const;
  FormElement wedge(const FormElement& a, const FormElement& b) const;
  FormElement d0(const FormElement& a) const;
  FormElement contract(const Vec& v, const FormElement& a) const;
  FormElement gl_act(const Matrix& A, const FormElement& a) const;
  FormElement omega_form() const;
  FormElement chi_form() const;
  FormElement psi(const FormElement& a) const { return wedge(omega_form(), a); }

  Matrix psi_matrix(int deg) const;  // Ω^deg → Ω^{deg+2}
  Matrix gl_matrix(const Matrix& A, int deg) const;
  Matrix d0_matrix(int deg) const;
  std::vector<Vec> subspace_I(int deg) const;  // image of Ψ from Ω^{deg−2}, reduced basis
  std::vector<Vec> subspace_J(int deg) const;  // kernel of Ψ on Ω^deg
  Matrix psi_power_iso(int m) const;           // Ψ^m: Ω^{N−m} → Ω^{N+m}

 private:
  LieAlgebraSpec s_;
  int n_;
  std::vector<std::vector<unsigned>> subsets_;
  std::vector<int> index_;
};

}  // namespace hp
