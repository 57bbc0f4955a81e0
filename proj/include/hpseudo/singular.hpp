#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hpseudo/annihilation.hpp"
#include "hpseudo/complexes.hpp"
#include "hpseudo/linalg.hpp"

namespace hp {

// Subspace of fil^W(H⊗V0), echelonized from the top coordinate down, so that
// S ∩ fil^k is spanned by the basis vectors whose leading coordinate is in fil^k.
class FilSubspace {
 public:
  FilSubspace(int n, int W, int dim0);

  const FilBasis& fil() const { return fb_; }
  int cap() const { return fb_.k; }
  // False if x was already in the span. Throws outside fil^W.
  bool add(const ModElem& x);
  bool contains(const ModElem& x) const;
  int dim() const { return el_.rank(); }
  int dim_at(int k) const;
  std::vector<int> profile() const;  // dim_at(0..W)
  // Fully reduced basis; leading coordinates ascending.
  std::vector<ModElem> basis() const;

 private:
  SparseVec key(const ModElem& x) const;
  FilBasis fb_;
  std::vector<int> sizes_;
  Eliminator el_;
};

// dim(A∩B) at each filtration level, from dim A + dim B − dim(A+B).
std::vector<int> intersection_profile(const FilSubspace& a, const FilSubspace& b);
FilSubspace subspace_sum(const FilSubspace& a, const FilSubspace& b);
bool subspace_contains(const FilSubspace& big, const FilSubspace& small);

enum class Detector { LeftNormal, P1Action };

struct SingularBasis {
  ModulePtr module;
  int cap = 0;
  Detector detector = Detector::LeftNormal;
  std::vector<ModElem> vectors;  // reduced, leading coordinate ascending
  std::vector<int> degree;       // filtration degree of each vector
  std::vector<int> dims;         // dim sing ∩ fil^k for k = 0..cap
};

// sing V ∩ fil^cap: kernel of v ↦ {v'_I : |I| ≥ 3} (or of v ↦ {(x_I⊗e)·v : |I| ≥ 3}).
SingularBasis solve_singular(ModulePtr M, int cap, Detector det = Detector::LeftNormal);
bool same_span(const SingularBasis& a, const SingularBasis& b);
// Coordinates of x along sb.vectors, or nullopt if x is not in their span.
std::optional<Vec> sing_coords(const SingularBasis& sb, const ModElem& x);
bool is_singular(const PseudoModule& M, const ModElem& v);

// ρ_sing on sing V ∩ fil^cap in the basis of sb.
struct SingRep {
  std::vector<Matrix> f;     // at SpRep::f_slot(i, j)
  std::vector<Matrix> dhat;  // ρ_sing(∂̂_l)
  Matrix c;
  bool closed = true;        // every image landed back in the span
};
SingRep sing_rep(const SingularBasis& sb);

struct WeightDegree {
  std::vector<int> weight;
  int degree = 0;
  int multiplicity = 0;
  bool operator==(const WeightDegree& o) const = default;
  bool operator<(const WeightDegree& o) const {
    return degree != o.degree ? degree < o.degree : weight < o.weight;
  }
};
std::string profile_string(const std::vector<WeightDegree>& p);

struct IsotypicBlock {
  std::vector<int> weight;
  int degree = 0;
  int multiplicity = 0;
  std::string label;                // e.g. "R(pi1)@2"
  std::vector<ModElem> vectors;     // basis of the block, empty if not separated
  Q c = 0;                          // scalar of ρ_sing(c) on the block
  bool deformed = false;            // λ ≠ 0 degree-two block in S_λ form
};

struct SingularDecomposition {
  std::vector<WeightDegree> profile;
  std::vector<IsotypicBlock> blocks;
  bool closed = true;
  bool homogeneous_ok = true;  // homogeneous components of singular vectors are singular
  bool separated = true;       // every block got its own vector basis
};
SingularDecomposition decompose_isotypic(const SingularBasis& sb);

// The profile predicted for V(Π′,U) with U of highest weight u_weight (Π′ of dimension pdim).
std::vector<WeightDegree> predicted_profile(int N, const std::vector<int>& u_weight, int pdim);

struct ClassifyVerdict {
  bool pass = false;
  std::vector<WeightDegree> expected, found;
  std::vector<int> dims;
  bool lambda_case = false;
  bool fil1_lambda_independent = true;  // λ ≠ 0 only
  bool deformation_ok = true;           // λ ≠ 0 only
  bool irreducible_flag = false;        // V(Π′,𝕜) with c acting non-trivially
  std::vector<std::string> notes;
};
ClassifyVerdict classify_compare(std::shared_ptr<const Hopf> H, const DPrimeModule& pi, const SpRep& U, int cap);

// ℓ = Σ ζ(∂^k) ∂_k.
HElement ell_element(const Hopf& H, const Vec& zeta);
// Π ⊠ 𝕜_0 for Π′ = Π ⊠ 𝕜_λ: drops the λζ part and sets λ = 0.
DPrimeModule strip_lambda(const LieAlgebraSpec& s, const DPrimeModule& pi);

// Homomorphisms V(src) → tgt sending 1⊗r into sing(tgt) equivariantly.
std::vector<ModuleMap> intertwiners(std::shared_ptr<const VModule> src, ModulePtr tgt, const SingularBasis& sing_tgt,
                                    const std::string& label);
// Isomorphism of tensor modules with equal Π′ and isomorphic U.
std::optional<ModuleMap> tensor_iso(std::shared_ptr<const VModule> a, std::shared_ptr<const VModule> b);

// H-span closure of generators inside fil^W under ∂-multiplication and v'_I extraction.
struct GeneratedSubmodule {
  FilSubspace space;
  bool stabilized = true;  // no extraction left fil^W
  std::vector<int> profile() const { return space.profile(); }
};
GeneratedSubmodule generate_submodule(const PseudoModule& M, const std::vector<ModElem>& gens, int W);
// Image of a module map on fil^{W−shift}, inside fil^W.
FilSubspace image_subspace(const ModuleMap& m, int W);

// The split exact complex for c acting by λ ≠ 0: D¹, …, D^N, D^R, D^{N+1}, …, D^{2N}.
struct SplitComplex {
  Complex complex;
  std::vector<std::shared_ptr<const VModule>> modules;
  bool built = true;
  std::vector<std::string> notes;
};
SplitComplex build_split_complex(std::shared_ptr<const Hopf> H, const DPrimeModule& pi, int cap);

struct SplitVerdict {
  bool built = false;
  bool zero_compositions = false;
  bool exact = false;
  bool split = false;  // middle terms are im D^n ⊕ im D^{2N−n} (im D^N ⊕ im D^R at n = N)
  int slack = 0;
  std::vector<ExactnessRow> rows;
  std::vector<std::string> notes;
};
SplitVerdict split_complex_check(std::shared_ptr<const Hopf> H, const DPrimeModule& pi, int cap);

// No proper submodule of V(Π′,𝕜) is generated by singular vectors up to fil^cap.
struct IrreducibilityVerdict {
  bool irreducible = false;
  std::vector<std::string> notes;
};
IrreducibilityVerdict irreducibility_check(std::shared_ptr<const Hopf> H, const DPrimeModule& pi, int cap);

struct LatticeVerdict {
  bool pass = false;
  std::string module;
  std::vector<std::string> chain;            // submodule names, largest first
  std::map<std::string, std::vector<int>> dims;
  bool proportional = true;                  // the two degree-two composites agree up to scalar
  std::string scalar;
  std::vector<std::string> notes;
};
// λ = 0: V(Π,R(π_n)) inside the conformally symplectic complex for Π.
LatticeVerdict lattice_check(std::shared_ptr<const Hopf> H, const std::vector<Matrix>& pi, int n, int cap);

}  // namespace hp
