#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hpseudo/linalg.hpp"

namespace hp {

// Lie algebra d with basis ∂_1..∂_n, trace form chi and 2-form omega.
struct LieAlgebraSpec {
  std::string name;
  int dim = 0;
  std::vector<Q> c;  // c[(i*dim+j)*dim+k] = c_ij^k, [∂_i,∂_j] = Σ_k c_ij^k ∂_k
  Vec chi;
  Matrix omega;      // omega(i,j) = ω(∂_i∧∂_j)

  LieAlgebraSpec() = default;
  LieAlgebraSpec(std::string name, int dim);
  const Q& C(int i, int j, int k) const { return c[(static_cast<size_t>(i) * dim + j) * dim + k]; }
  void set_bracket(int i, int j, int k, const Q& v);  // sets c_ij^k and c_ji^k = -v
  int N() const { return dim / 2; }
  bool abelian() const;
  bool chi_zero() const;
};

struct CheckItem {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct ValidationReport {
  std::vector<CheckItem> items;
  bool ok() const;
  // First failing item, formatted; empty when all pass.
  std::string first_failure() const;
};

ValidationReport validate_spec(const LieAlgebraSpec& s);

struct DerivedData {
  Matrix r;                  // r(i,j) = r^{ij}, inverse of omega
  Vec s;                     // coordinates of s = Σ χ(∂_i)∂^i
  Vec rho;                   // ρ = ½ Σ r^{ij}[∂_i,∂_j]
  Vec phi;                   // φ = −χ + ι_ρ ω
  std::vector<Matrix> ad;    // ad ∂_i
  std::vector<Matrix> adsp;  // ad^sp ∂^k
  Vec chi_up;                // χ(∂^k)
};

DerivedData derive_invariants(const LieAlgebraSpec& s);

// e^{ij} = Σ_k r^{ik} E_{kj} and f^{ij} = −½(e^{ij}+e^{ji}).
Matrix e_upper(const DerivedData& dd, int i, int j);
Matrix f_upper(const DerivedData& dd, int i, int j);
// Coordinates B with A = Σ_{ij} B_ij e^{ij}; B symmetric iff A ∈ sp.
Matrix sp_coords(const LieAlgebraSpec& s, const Matrix& A);
bool in_sp(const LieAlgebraSpec& s, const Matrix& A);

struct ZetaResult {
  bool exists = false;
  Vec zeta;
  bool unique = true;
};

// Solves −ζ([∂_i,∂_j]) = ω_ij; free coordinates are set to zero.
ZetaResult solve_frobenius_splitting(const LieAlgebraSpec& s);

// Module over d′ = d̂ ⊕ kc: act[i] = ρ(∂̂_i), lambda = ρ(c).
struct DPrimeModule {
  int dim = 1;
  std::vector<Matrix> act;
  Q lambda = 0;

  static DPrimeModule trivial(int n);
  // d-module Π lifted with c acting by 0, shifted by a covector: act_i + psi_i.
  DPrimeModule shifted(const Vec& psi) const;
};

ValidationReport validate_dprime_module(const LieAlgebraSpec& s, const DPrimeModule& m);

// Battery algebras.
LieAlgebraSpec spec_A2();
LieAlgebraSpec spec_F2();
LieAlgebraSpec spec_X2();
LieAlgebraSpec spec_A4();
LieAlgebraSpec spec_F4();
std::vector<LieAlgebraSpec> battery();

// Relabels the basis by a permutation: new ∂_i = old ∂_{perm[i]}.
LieAlgebraSpec permute_basis(const LieAlgebraSpec& s, const std::vector<int>& perm);

// Text format: "key = value" lines, nested bracketed arrays, rationals as p/q.
LieAlgebraSpec parse_spec_text(const std::string& text);
LieAlgebraSpec load_spec_file(const std::string& path);
std::string format_spec_text(const LieAlgebraSpec& s);

}  // namespace hp
