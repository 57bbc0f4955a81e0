#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hpseudo/algebra_data.hpp"
#include "hpseudo/forms.hpp"

namespace hp {

// Finite-dimensional sp(d)-module given by the matrices of f^{ij}, i ≤ j.
// Modules coming from gl(d) keep the gl action as well.
struct SpRep {
  int n = 0;
  int dim = 0;
  std::string label;
  Matrix omega;
  std::vector<Matrix> f;                 // ρ(f^{ij}) at f_slot(i,j)
  std::optional<std::vector<Matrix>> gl; // ρ(E_ab) at a*n+b

  int f_slot(int i, int j) const;
  const Matrix& F(int i, int j) const { return f[f_slot(i, j)]; }
  // ρ(A) for A ∈ sp(d) via A = −Σ B_ij f^{ij}, B = −ωA.
  Matrix rho(const Matrix& A) const;
  Matrix rho_gl(const Matrix& A) const;
  bool has_gl() const { return gl.has_value(); }
};

// Builds the sp-module from a gl-module given by ρ(E_ab).
SpRep rep_from_gl(const LieAlgebraSpec& s, std::vector<Matrix> gl, std::string label);
SpRep rep_from_f(const LieAlgebraSpec& s, std::vector<Matrix> f, std::string label);
ValidationReport validate_sp_rep(const LieAlgebraSpec& s, const SpRep& r);

SpRep trivial_rep(const LieAlgebraSpec& s);
// One-dimensional gl-module A ↦ k·tr(A)/n, so I acts by k.
SpRep scalar_gl_rep(const LieAlgebraSpec& s, const Q& k);
SpRep vector_rep(const LieAlgebraSpec& s);
SpRep sym2_rep(const LieAlgebraSpec& s);
SpRep forms_rep(const LieAlgebraSpec& s, int deg);

// Fixed complement of a subspace chosen by pivoting: basis vectors e_k for the
// non-pivot columns of the reduced basis of the subspace.
struct Quotient {
  int ambient = 0;
  std::vector<Vec> sub;        // reduced basis of the subspace
  std::vector<int> pivots;     // pivot columns of sub
  std::vector<int> complement; // coordinates kept in the quotient
  Vec project(const Vec& v) const;
  Vec lift(const Vec& q) const;
  int dim() const { return static_cast<int>(complement.size()); }
};
Quotient make_quotient(const std::vector<Vec>& sub, int ambient);

// Coordinates of v in a reduced basis (pivot columns); nullopt if v is outside.
std::optional<Vec> coords_in(const std::vector<Vec>& basis, const Vec& v);

SpRep forms_quotient_rep(const LieAlgebraSpec& s, const Forms& F, int deg);  // Ω^n/I^n
SpRep forms_J_rep(const LieAlgebraSpec& s, const Forms& F, int deg);         // J^n
SpRep build_fundamental_rep(const LieAlgebraSpec& s, int n);                 // R(π_n) on J^{2N−n}

// Symplectic basis p_1..p_N, q_1..q_N (columns of P) with ω(p_a,q_b) = δ_ab,
// plus Cartan and root vectors expressed in the original basis.
struct SymplecticFrame {
  Matrix P;
  std::vector<Matrix> cartan;
  std::vector<Matrix> raising;
  std::vector<Matrix> lowering;
};
SymplecticFrame symplectic_frame(const LieAlgebraSpec& s);

// Highest weights (m_1 ≥ ... ≥ m_N) with multiplicities.
using WeightMap = std::map<std::vector<int>, int>;
WeightMap highest_weights(const SymplecticFrame& fr, const SpRep& r);
std::string weight_label(const std::vector<int>& m);
std::vector<int> fundamental_weight(int N, int n);
std::string labels_string(const WeightMap& w);

// Isotypic components: for each highest weight, a basis of the submodule
// generated by its highest-weight vectors.
std::map<std::vector<int>, std::vector<Vec>> isotypic_components(const SymplecticFrame& fr, const SpRep& r);

}  // namespace hp
