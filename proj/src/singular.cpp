#include "hpseudo/singular.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <tuple>

#include "hpseudo/parallel.hpp"

namespace hp {

namespace {

using CondKey = std::tuple<uint64_t, uint64_t, int>;
using CondMap = std::map<CondKey, Q>;

// Entries of the singular condition: (I, monomial, coordinate) for |I| ≥ 3.
CondMap conditions(const PseudoModule& M, const ModElem& v, Detector det) {
  CondMap out;
  if (v.zero()) return out;
  std::map<MI, ModElem> parts;
  if (det == Detector::LeftNormal) {
    for (auto& [I, x] : left_normal(M.hopf(), M.act_elem(v)))
      if (I.deg() >= 3) parts.emplace(I, std::move(x));
  } else {
    for (auto& [I, x] : fourier_coefficients(M, v))
      if (I.deg() >= 3) parts.emplace(I, std::move(x));
  }
  for (const auto& [I, x] : parts)
    for (const auto& [k, q] : x.t)
      if (!is_zero(q)) out[{I.code, k.first.code, k.second}] += q;
  return out;
}

int elem_degree(const ModElem& x) { return x.zero() ? -1 : x.degree(); }

ModElem degree_part(const ModElem& x, int d) {
  ModElem r;
  for (const auto& [k, q] : x.t)
    if (k.first.deg() == d) r.add(k.first, k.second, q);
  return r;
}

Matrix restrict_top(const Matrix& m, int k) {
  Matrix r(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) r(i, j) = m(i, j);
  return r;
}

std::string block_label(const std::vector<int>& w, int d) { return "R(" + weight_label(w) + ")@" + std::to_string(d); }

}  // namespace

// ---------------------------------------------------------------- FilSubspace

FilSubspace::FilSubspace(int n, int W, int dim0) : fb_(n, W, dim0) {
  for (int k = 0; k <= W; ++k) sizes_.push_back(FilBasis(n, k, dim0).size());
}

SparseVec FilSubspace::key(const ModElem& x) const {
  std::map<long, Q> m;
  const long top = fb_.size() - 1;
  for (const auto& [k, q] : x.t) {
    int i = fb_.index(k.first, k.second);
    if (i < 0) throw std::out_of_range("element outside the filtration piece");
    m[top - i] += q;
  }
  return to_sparse(m);
}

bool FilSubspace::add(const ModElem& x) { return el_.add(key(x)); }
bool FilSubspace::contains(const ModElem& x) const { return el_.in_span(key(x)); }

int FilSubspace::dim_at(int k) const {
  if (k < 0) return 0;
  if (k >= static_cast<int>(sizes_.size())) return dim();
  return el_.count_pivots_at_least(fb_.size() - sizes_[k]);
}

std::vector<int> FilSubspace::profile() const {
  std::vector<int> p;
  for (int k = 0; k < static_cast<int>(sizes_.size()); ++k) p.push_back(dim_at(k));
  return p;
}

std::vector<ModElem> FilSubspace::basis() const {
  // Back substitution on the echelon rows, largest pivot first.
  std::map<long, std::map<long, Q>> rows;
  for (const SparseVec& r : el_.basis()) {
    std::map<long, Q> m(r.begin(), r.end());
    rows.emplace(r.front().first, std::move(m));
  }
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    std::map<long, Q>& row = it->second;
    for (auto e = std::next(row.begin()); e != row.end();) {
      auto p = rows.find(e->first);
      if (p == rows.end() || p->first == it->first) {
        ++e;
        continue;
      }
      Q f = e->second;
      long at = e->first;
      for (const auto& [k, q] : p->second) {
        Q& slot = row[k];
        slot -= f * q;
      }
      for (auto z = row.begin(); z != row.end();) z = is_zero(z->second) ? row.erase(z) : std::next(z);
      e = row.upper_bound(at);
    }
  }
  std::vector<ModElem> out;
  const long top = fb_.size() - 1;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    ModElem x;
    for (const auto& [k, q] : it->second) x.add(fb_.mis[(top - k) / fb_.dim0], static_cast<int>((top - k) % fb_.dim0), q);
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<int> intersection_profile(const FilSubspace& a, const FilSubspace& b) {
  int W = std::min(a.cap(), b.cap());
  std::vector<ModElem> ba = a.basis(), bb = b.basis();
  std::vector<int> out;
  for (int k = 0; k <= W; ++k) {
    Eliminator el;
    const FilBasis& fb = a.fil();
    int da = 0, db = 0;
    auto push = [&](const ModElem& x) {
      std::map<long, Q> m;
      for (const auto& [key, q] : x.t) m[fb.index(key.first, key.second)] += q;
      el.add(to_sparse(m));
    };
    for (const ModElem& x : ba)
      if (elem_degree(x) <= k) push(x), ++da;
    for (const ModElem& x : bb)
      if (elem_degree(x) <= k) push(x), ++db;
    out.push_back(da + db - el.rank());
  }
  return out;
}

FilSubspace subspace_sum(const FilSubspace& a, const FilSubspace& b) {
  FilSubspace r = a;
  for (const ModElem& x : b.basis()) r.add(x);
  return r;
}

bool subspace_contains(const FilSubspace& big, const FilSubspace& small) {
  for (const ModElem& x : small.basis())
    if (!big.contains(x)) return false;
  return true;
}

// ------------------------------------------------------------ singular solve

SingularBasis solve_singular(ModulePtr M, int cap, Detector det) {
  const int n = M->hopf().dim();
  FilBasis fb(n, cap, M->dim0());
  std::vector<CondMap> conds(fb.size());
  parallel_for(fb.size(), [&](int i) { conds[i] = conditions(*M, fb.element(i), det); });

  std::map<CondKey, long> ids;
  Eliminator el(true);
  for (const CondMap& c : conds) {
    std::map<long, Q> row;
    for (const auto& [k, q] : c) {
      auto it = ids.find(k);
      if (it == ids.end()) it = ids.emplace(k, static_cast<long>(ids.size())).first;
      row[it->second] += q;
    }
    el.add(to_sparse(row));
  }

  FilSubspace S(n, cap, M->dim0());
  for (const SparseVec& rel : el.relations()) {
    ModElem x;
    for (const auto& [i, q] : rel) x.add(fb.mis[i / fb.dim0], static_cast<int>(i % fb.dim0), q);
    S.add(x);
  }
  SingularBasis sb;
  sb.module = M;
  sb.cap = cap;
  sb.detector = det;
  sb.vectors = S.basis();
  for (const ModElem& v : sb.vectors) sb.degree.push_back(elem_degree(v));
  sb.dims = S.profile();
  return sb;
}

bool same_span(const SingularBasis& a, const SingularBasis& b) {
  if (a.vectors.size() != b.vectors.size()) return false;
  for (size_t i = 0; i < a.vectors.size(); ++i)
    if (!(a.vectors[i] == b.vectors[i])) return false;
  return true;
}

std::optional<Vec> sing_coords(const SingularBasis& sb, const ModElem& x) {
  // Basis vectors are fully reduced: each is the only one with its leading coordinate.
  Vec c(sb.vectors.size());
  ModElem rest = x;
  for (size_t i = sb.vectors.size(); i-- > 0;) {
    const auto& lead = *sb.vectors[i].t.rbegin();
    auto it = rest.t.find(lead.first);
    if (it == rest.t.end()) continue;
    c[i] = it->second / lead.second;
    rest = rest - sb.vectors[i] * c[i];
  }
  if (!rest.zero()) return std::nullopt;
  return c;
}

bool is_singular(const PseudoModule& M, const ModElem& v) { return conditions(M, v, Detector::LeftNormal).empty(); }

// ------------------------------------------------------------------ ρ_sing

SingRep sing_rep(const SingularBasis& sb) {
  const PseudoModule& M = *sb.module;
  const int n = M.hopf().dim();
  const int s = static_cast<int>(sb.vectors.size());
  SingAction act(M);
  SingRep rep;
  int nf = n * (n + 1) / 2;
  rep.f.assign(nf, Matrix(s, s));
  rep.dhat.assign(n, Matrix(s, s));
  rep.c = Matrix(s, s);
  std::vector<int> bad(s, 0);
  parallel_for(s, [&](int a) {
    const ModElem& v = sb.vectors[a];
    auto put = [&](Matrix& m, const ModElem& img) {
      auto c = sing_coords(sb, img);
      if (!c) {
        bad[a] = 1;
        return;
      }
      for (int b = 0; b < s; ++b) m(b, a) = (*c)[b];
    };
    int slot = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) put(rep.f[slot++], act.f(i, j, v));
    for (int l = 0; l < n; ++l) put(rep.dhat[l], act.dhat(l, v));
    put(rep.c, act.c(v));
  });
  rep.closed = std::none_of(bad.begin(), bad.end(), [](int b) { return b != 0; });
  return rep;
}

std::string profile_string(const std::vector<WeightDegree>& p) {
  std::string s;
  for (const auto& w : p) {
    if (!s.empty()) s += ", ";
    if (w.multiplicity > 1) s += std::to_string(w.multiplicity) + "*";
    s += block_label(w.weight, w.degree);
  }
  return s.empty() ? "none" : s;
}

SingularDecomposition decompose_isotypic(const SingularBasis& sb) {
  const PseudoModule& M = *sb.module;
  const LieAlgebraSpec& spec = M.hopf().spec();
  const int n = spec.dim;
  SingularDecomposition dec;
  SingRep rep = sing_rep(sb);
  dec.closed = rep.closed;
  SymplecticFrame fr = symplectic_frame(spec);

  int maxdeg = sb.vectors.empty() ? -1 : *std::max_element(sb.degree.begin(), sb.degree.end());
  Q lam = 0;
  if (auto V = std::dynamic_pointer_cast<const VModule>(sb.module)) lam = V->pi().lambda;

  // Restrictions to S_d = sing ∩ fil^d, which are the leading blocks of the basis.
  std::vector<WeightMap> wd;
  std::vector<std::map<std::vector<int>, std::vector<Vec>>> iso;
  std::vector<int> upto;
  for (int d = 0; d <= maxdeg; ++d) {
    int m = static_cast<int>(std::count_if(sb.degree.begin(), sb.degree.end(), [&](int e) { return e <= d; }));
    upto.push_back(m);
    if (m == 0) {
      wd.emplace_back();
      iso.emplace_back();
      continue;
    }
    std::vector<Matrix> f;
    for (const Matrix& x : rep.f) f.push_back(restrict_top(x, m));
    SpRep r = rep_from_f(spec, f, "sing");
    wd.push_back(highest_weights(fr, r));
    iso.push_back(isotypic_components(fr, r));
  }

  for (int d = 0; d <= maxdeg; ++d)
    for (const auto& [w, k] : wd[d]) {
      int prev = 0;
      if (d > 0) {
        auto it = wd[d - 1].find(w);
        if (it != wd[d - 1].end()) prev = it->second;
      }
      if (k > prev) dec.profile.push_back({w, d, k - prev});
    }
  std::sort(dec.profile.begin(), dec.profile.end());

  // Blocks: the isotypic part of S_d with no components in the degrees where the
  // same weight already occurs.
  for (const WeightDegree& wdg : dec.profile) {
    IsotypicBlock b;
    b.weight = wdg.weight;
    b.degree = wdg.degree;
    b.multiplicity = wdg.multiplicity;
    b.label = block_label(wdg.weight, wdg.degree);
    b.deformed = lam != 0 && wdg.degree == 2;
    const auto& comp = iso[wdg.degree].at(wdg.weight);
    std::vector<ModElem> cand;
    for (const Vec& c : comp) {
      ModElem x;
      for (size_t a = 0; a < c.size(); ++a)
        if (!is_zero(c[a])) x += sb.vectors[a] * c[a];
      cand.push_back(x);
    }
    int lower = 0;
    std::vector<int> banned;
    for (const WeightDegree& o : dec.profile)
      if (o.weight == wdg.weight && o.degree < wdg.degree) banned.push_back(o.degree);
    if (wdg.degree > 0) {
      auto it = iso[wdg.degree - 1].find(wdg.weight);
      if (it != iso[wdg.degree - 1].end()) lower = static_cast<int>(it->second.size());
    }
    int want = static_cast<int>(comp.size()) - lower;
    // Kernel of the projection onto the banned degrees.
    FilBasis fb(n, sb.cap, M.dim0());
    Matrix proj(fb.size(), static_cast<int>(cand.size()));
    for (size_t a = 0; a < cand.size(); ++a)
      for (const auto& [key, q] : cand[a].t)
        if (std::find(banned.begin(), banned.end(), key.first.deg()) != banned.end())
          proj(fb.index(key.first, key.second), static_cast<int>(a)) = q;
    std::vector<ModElem> vecs;
    for (const Vec& kv : kernel(proj)) {
      ModElem x;
      for (size_t a = 0; a < kv.size(); ++a)
        if (!is_zero(kv[a])) x += cand[a] * kv[a];
      vecs.push_back(x);
    }
    if (static_cast<int>(vecs.size()) == want) {
      FilSubspace sp(n, sb.cap, M.dim0());
      for (const ModElem& x : vecs) sp.add(x);
      b.vectors = sp.basis();
      const ModElem& lead = b.vectors.front();
      ModElem cv = SingAction(M).c(lead);
      auto it = cv.t.find(lead.t.rbegin()->first);
      if (it != cv.t.end()) b.c = it->second / lead.t.rbegin()->second;
    } else {
      dec.separated = false;
    }
    dec.blocks.push_back(std::move(b));
  }

  // Only an abelian d gives H a grading compatible with the action.
  if (lam == 0 && spec.abelian()) {
    for (const ModElem& v : sb.vectors)
      for (int d = 0; d <= elem_degree(v); ++d)
        if (!is_singular(M, degree_part(v, d))) dec.homogeneous_ok = false;
  }
  return dec;
}

std::vector<WeightDegree> predicted_profile(int N, const std::vector<int>& u, int pdim) {
  std::vector<WeightDegree> out;
  int n = -1;
  for (int k = 0; k <= N; ++k)
    if (fundamental_weight(N, k) == u) n = k;
  auto put = [&](int k, int d) { out.push_back({fundamental_weight(N, k), d, pdim}); };
  if (n == 0) {
    put(0, 0);
    put(1, 1);
  } else if (n > 0 && n < N) {
    put(n, 0);
    put(n - 1, 1);
    put(n + 1, 1);
    put(n, 2);
  } else if (n == N) {
    put(N, 0);
    put(N - 1, 1);
    put(N, 2);
  } else {
    out.push_back({u, 0, pdim});
  }
  std::sort(out.begin(), out.end());
  return out;
}

HElement ell_element(const Hopf& H, const Vec& zeta) {
  const LieAlgebraSpec& s = H.spec();
  auto dd = derive_invariants(s);
  HElement l;
  for (int k = 0; k < s.dim; ++k) {
    Q z = 0;
    for (int j = 0; j < s.dim; ++j) z += dd.r(k, j) * zeta[j];
    if (!is_zero(z)) l.add(MI::unit(k), z);
  }
  return l;
}

DPrimeModule strip_lambda(const LieAlgebraSpec& s, const DPrimeModule& pi) {
  DPrimeModule r = pi;
  if (pi.lambda == 0) return r;
  ZetaResult z = solve_frobenius_splitting(s);
  if (!z.exists) throw std::invalid_argument("c acts non-trivially but d has no Frobenius splitting");
  for (int i = 0; i < s.dim; ++i) r.act[i] = pi.act[i] - Matrix::identity(pi.dim) * (z.zeta[i] * pi.lambda);
  r.lambda = 0;
  return r;
}

namespace {

// Finds t with v − t·w singular; nullopt if there is none.
std::optional<Q> deformation_scalar(const PseudoModule& M, const ModElem& v, const ModElem& w) {
  CondMap cv = conditions(M, v, Detector::LeftNormal), cw = conditions(M, w, Detector::LeftNormal);
  if (cw.empty()) return cv.empty() ? std::optional<Q>(0) : std::nullopt;
  Q t = 0;
  bool set = false;
  for (const auto& [k, q] : cw) {
    auto it = cv.find(k);
    Q a = it == cv.end() ? Q(0) : it->second;
    if (!set) {
      t = a / q;
      set = true;
    }
  }
  for (const auto& [k, q] : cw) {
    auto it = cv.find(k);
    Q a = it == cv.end() ? Q(0) : it->second;
    if (a != t * q) return std::nullopt;
  }
  for (const auto& [k, q] : cv)
    if (!cw.count(k)) return std::nullopt;
  return t;
}

// u with top coefficients 2 f^{ij}(u) at ∂^(e_i+e_j), i ≤ j.
std::optional<Vec> recover_u(const VModule& V, const ModElem& v) {
  const int n = V.hopf().dim();
  const int d0 = V.dim0();
  std::vector<Vec> rows;
  Vec rhs;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Matrix F = V.rho_f(i, j) * Q(2);
      MI m = MI::unit(i).plus(j, 1);
      for (int w = 0; w < d0; ++w) {
        rows.push_back(F.row(w));
        auto it = v.t.find({m, w});
        rhs.push_back(it == v.t.end() ? Q(0) : it->second);
      }
    }
  return solve(from_rows(rows, d0), rhs);
}

}  // namespace

ClassifyVerdict classify_compare(std::shared_ptr<const Hopf> H, const DPrimeModule& pi, const SpRep& U, int cap) {
  const LieAlgebraSpec& s = H->spec();
  ClassifyVerdict v;
  auto V = make_v_module(H, pi, U);
  SingularBasis sb = solve_singular(V, cap);
  SingularDecomposition dec = decompose_isotypic(sb);
  v.dims = sb.dims;
  v.found = dec.profile;
  SymplecticFrame fr = symplectic_frame(s);
  for (const auto& [w, k] : highest_weights(fr, U)) {
    std::vector<WeightDegree> p = predicted_profile(s.N(), w, pi.dim * k);
    v.expected.insert(v.expected.end(), p.begin(), p.end());
  }
  std::sort(v.expected.begin(), v.expected.end());
  bool ok = v.expected == v.found && dec.closed && dec.separated;
  if (!dec.closed) v.notes.push_back("rho_sing images left the singular span");
  if (!dec.separated) v.notes.push_back("isotypic blocks could not be separated by degree");
  if (pi.lambda == 0 && !dec.homogeneous_ok) v.notes.push_back("a homogeneous component of a singular vector is not singular");

  v.lambda_case = pi.lambda != 0;
  if (v.lambda_case) {
    DPrimeModule p0 = strip_lambda(s, pi);
    auto V0 = make_v_module(H, p0, U);
    v.fil1_lambda_independent = same_span(solve_singular(V, std::min(cap, 1)), solve_singular(V0, std::min(cap, 1)));
    if (!v.fil1_lambda_independent) v.notes.push_back("sing ∩ fil^1 depends on lambda");
    ZetaResult z = solve_frobenius_splitting(s);
    HElement ell = ell_element(*H, z.zeta);
    for (const IsotypicBlock& b : dec.blocks) {
      if (!b.deformed) continue;
      for (const ModElem& x : b.vectors) {
        auto u = recover_u(*V, x);
        if (!u) {
          v.deformation_ok = false;
          v.notes.push_back("degree-two coefficients are not of the form 2 f^{ij}(u)");
          continue;
        }
        ModElem lu;
        for (int w = 0; w < V->dim0(); ++w)
          if (!is_zero((*u)[w])) lu += ModElem::term(ell, w) * (*u)[w];
        auto t = deformation_scalar(*V0, x, lu);
        if (!t || (*t != pi.lambda && *t != -pi.lambda)) {
          v.deformation_ok = false;
          v.notes.push_back("degree-two block is not S +/- lambda l(x)u" + (t ? " (scalar " + to_string(*t) + ")" : std::string()));
        } else {
          std::string sign = *t == pi.lambda ? "+" : "-";
          std::string note = "S_lambda = S " + sign + " lambda l(x)u";
          if (std::find(v.notes.begin(), v.notes.end(), note) == v.notes.end()) v.notes.push_back(note);
        }
      }
    }
    if (U.dim == 1 || highest_weights(fr, U) == WeightMap{{std::vector<int>(s.N(), 0), 1}}) {
      IrreducibilityVerdict iv = irreducibility_check(H, pi, std::min(cap, 3));
      v.irreducible_flag = iv.irreducible;
      if (!iv.irreducible) v.notes.insert(v.notes.end(), iv.notes.begin(), iv.notes.end());
      ok = ok && iv.irreducible;
    }
    ok = ok && v.fil1_lambda_independent && v.deformation_ok;
  }
  v.pass = ok;
  return v;
}

// ------------------------------------------------------ maps and submodules

namespace {

void normalize_first(std::vector<ModElem>& images) {
  for (const ModElem& x : images)
    if (!x.zero()) {
      Q inv = 1 / x.t.begin()->second;
      for (ModElem& y : images) y = y * inv;
      return;
    }
}

int max_degree(const std::vector<ModElem>& xs) {
  int d = 0;
  for (const ModElem& x : xs) d = std::max(d, elem_degree(x));
  return d;
}

ModElem combine(const std::vector<ModElem>& vs, const Vec& c) {
  ModElem x;
  for (size_t a = 0; a < vs.size(); ++a)
    if (!is_zero(c[a])) x += vs[a] * c[a];
  return x;
}

// Solutions A of S_X A = A R_X, X running over the given pairs.
std::vector<Matrix> intertwining_space(const std::vector<std::pair<Matrix, Matrix>>& pairs, int s, int ds) {
  std::vector<Vec> rows;
  for (const auto& [S, R] : pairs)
    for (int b = 0; b < s; ++b)
      for (int u = 0; u < ds; ++u) {
        Vec row(static_cast<size_t>(s) * ds);
        for (int a = 0; a < s; ++a) row[a * ds + u] += S(b, a);
        for (int w = 0; w < ds; ++w) row[b * ds + w] -= R(w, u);
        if (!vec_is_zero(row)) rows.push_back(std::move(row));
      }
  std::vector<Matrix> out;
  if (rows.empty()) {
    for (int i = 0; i < s * ds; ++i) {
      Matrix A(s, ds);
      A(i / ds, i % ds) = 1;
      out.push_back(A);
    }
    return out;
  }
  for (const Vec& k : kernel(from_rows(rows, s * ds))) {
    Matrix A(s, ds);
    for (int i = 0; i < s * ds; ++i) A(i / ds, i % ds) = k[i];
    out.push_back(A);
  }
  return out;
}

}  // namespace

std::vector<ModuleMap> intertwiners(std::shared_ptr<const VModule> src, ModulePtr tgt, const SingularBasis& sing_tgt,
                                    const std::string& label) {
  const int n = src->hopf().dim();
  const int s = static_cast<int>(sing_tgt.vectors.size());
  const int ds = src->dim0();
  SingRep rep = sing_rep(sing_tgt);
  std::vector<std::pair<Matrix, Matrix>> pairs;
  int slot = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) pairs.emplace_back(rep.f[slot++], src->rho_f(i, j));
  for (int l = 0; l < n; ++l) pairs.emplace_back(rep.dhat[l], src->rho_d(l));
  pairs.emplace_back(rep.c, src->rho_c());
  std::vector<ModuleMap> out;
  for (const Matrix& A : intertwining_space(pairs, s, ds)) {
    ModuleMap m;
    m.src = src;
    m.dst = tgt;
    m.label = label;
    for (int u = 0; u < ds; ++u) m.images.push_back(combine(sing_tgt.vectors, A.col(u)));
    normalize_first(m.images);
    m.shift = max_degree(m.images);
    if (check_homomorphism(m)) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), [](const ModuleMap& a, const ModuleMap& b) { return a.shift < b.shift; });
  return out;
}

std::optional<ModuleMap> tensor_iso(std::shared_ptr<const VModule> a, std::shared_ptr<const VModule> b) {
  if (!a || !b) return std::nullopt;
  const DPrimeModule &pa = a->pi(), &pb = b->pi();
  if (pa.dim != pb.dim || pa.lambda != pb.lambda || pa.act.size() != pb.act.size()) return std::nullopt;
  for (size_t i = 0; i < pa.act.size(); ++i)
    if (!(pa.act[i] == pb.act[i])) return std::nullopt;
  const SpRep &ua = a->U(), &ub = b->U();
  if (ua.dim != ub.dim) return std::nullopt;
  std::vector<std::pair<Matrix, Matrix>> pairs;
  for (size_t k = 0; k < ua.f.size(); ++k) pairs.emplace_back(ub.f[k], ua.f[k]);
  for (const Matrix& T : intertwining_space(pairs, ub.dim, ua.dim)) {
    if (!inverse(T)) continue;
    ModuleMap m;
    m.src = a;
    m.dst = b;
    m.shift = 0;
    m.label = "iso";
    for (int p = 0; p < pa.dim; ++p)
      for (int u = 0; u < ua.dim; ++u) {
        ModElem x;
        for (int w = 0; w < ub.dim; ++w)
          if (!is_zero(T(w, u))) x.add(MI{}, p * ub.dim + w, T(w, u));
        m.images.push_back(x);
      }
    normalize_first(m.images);
    if (check_homomorphism(m)) return m;
  }
  return std::nullopt;
}

GeneratedSubmodule generate_submodule(const PseudoModule& M, const std::vector<ModElem>& gens, int W) {
  const Hopf& H = M.hopf();
  const int n = H.dim();
  GeneratedSubmodule g{FilSubspace(n, W, M.dim0())};
  std::deque<ModElem> todo;
  auto push = [&](const ModElem& x) {
    if (x.zero()) return;
    if (x.degree() > W) {
      g.stabilized = false;
      return;
    }
    if (g.space.add(x)) todo.push_back(x);
  };
  for (const ModElem& x : gens) push(x);
  while (!todo.empty()) {
    ModElem x = std::move(todo.front());
    todo.pop_front();
    if (x.degree() < W)
      for (int k = 0; k < n; ++k) push(h_times(H, H.gen(k), x));
    for (const auto& [I, y] : left_normal(H, M.act_elem(x))) push(y);
  }
  return g;
}

FilSubspace image_subspace(const ModuleMap& m, int W) {
  const int n = m.src->hopf().dim();
  FilSubspace out(n, W, m.dst->dim0());
  if (W - m.shift < 0) return out;
  FilBasis fb(n, W - m.shift, m.src->dim0());
  std::vector<ModElem> imgs(fb.size());
  parallel_for(fb.size(), [&](int i) { imgs[i] = m.apply(fb.element(i)); });
  for (const ModElem& x : imgs)
    if (!x.zero()) out.add(x);
  return out;
}

// ------------------------------------------------------------ λ ≠ 0 complex

namespace {

bool same_subspace(const FilSubspace& a, const FilSubspace& b) {
  return a.dim() == b.dim() && subspace_contains(a, b);
}

std::vector<int> full_profile(int n, int W, int dim0) {
  std::vector<int> p;
  for (int k = 0; k <= W; ++k) p.push_back(FilBasis(n, k, dim0).size());
  return p;
}

}  // namespace

SplitComplex build_split_complex(std::shared_ptr<const Hopf> H, const DPrimeModule& pi, int cap) {
  (void)cap;
  const LieAlgebraSpec& s = H->spec();
  if (pi.lambda == 0) throw std::invalid_argument("c acts trivially: use the conformally symplectic complex");
  if (!s.chi_zero()) throw std::invalid_argument("c acting non-trivially needs chi = 0");
  const int N = s.N();
  SplitComplex sc;
  std::vector<std::shared_ptr<const VModule>> mods;
  std::vector<SingularBasis> sing;
  for (int n = 0; n <= N; ++n) {
    mods.push_back(make_v_module(H, pi, build_fundamental_rep(s, n), "V(Pi',R(pi" + std::to_string(n) + "))"));
    sing.push_back(solve_singular(mods.back(), 2));
  }
  auto unique_map = [&](int from, int to, const std::string& label) {
    auto maps = intertwiners(mods[from], mods[to], sing[to], label);
    if (maps.size() != 1) {
      sc.built = false;
      sc.notes.push_back(label + ": " + std::to_string(maps.size()) + " homomorphisms found");
      return ModuleMap{};
    }
    return maps.front();
  };
  std::vector<ModuleMap> first;
  for (int n = 1; n <= N; ++n) first.push_back(unique_map(n - 1, n, "D" + std::to_string(n)));
  ModuleMap dr;
  if (sc.built) {
    auto maps = intertwiners(mods[N], mods[N], sing[N], "DR");
    const ModuleMap& dN = first.back();
    // Pick the combination killing D^R ∘ D^N.
    std::vector<std::vector<ModElem>> comps;
    for (const ModuleMap& m : maps) comps.push_back(compose(m, dN).images);
    FilBasis fb(H->dim(), 4, mods[N]->dim0());
    std::vector<Vec> cols;
    int W = 0;
    for (const auto& c : comps) W = std::max(W, max_degree(c));
    FilBasis big(H->dim(), W, mods[N]->dim0());
    for (const auto& c : comps) {
      Vec col;
      for (const ModElem& x : c) {
        Vec v = big.coords(x);
        col.insert(col.end(), v.begin(), v.end());
      }
      cols.push_back(col);
    }
    auto ker = cols.empty() ? std::vector<Vec>{} : kernel(from_cols(cols, static_cast<int>(cols[0].size())));
    if (ker.size() != 1) {
      sc.built = false;
      sc.notes.push_back("DR: " + std::to_string(ker.size()) + " candidates annihilating D" + std::to_string(N));
    } else {
      dr.src = mods[N];
      dr.dst = mods[N];
      dr.label = "DR";
      dr.images.assign(mods[N]->dim0(), ModElem{});
      for (size_t a = 0; a < maps.size(); ++a)
        for (int u = 0; u < mods[N]->dim0(); ++u) dr.images[u] += maps[a].images[u] * ker[0][a];
      normalize_first(dr.images);
      dr.shift = max_degree(dr.images);
    }
    (void)fb;
  }
  std::vector<ModuleMap> second;
  for (int k = N - 1; k >= 0; --k) second.push_back(unique_map(k + 1, k, "D" + std::to_string(2 * N - k)));
  if (!sc.built) return sc;
  for (int n = 0; n <= N; ++n) sc.complex.terms.push_back(mods[n]), sc.modules.push_back(mods[n]);
  for (int n = N; n >= 0; --n) sc.complex.terms.push_back(mods[n]), sc.modules.push_back(mods[n]);
  for (auto& m : first) sc.complex.maps.push_back(m);
  sc.complex.maps.push_back(dr);
  for (auto& m : second) sc.complex.maps.push_back(m);
  for (const auto& t : sc.complex.terms) sc.complex.labels.push_back(t->label());
  return sc;
}

SplitVerdict split_complex_check(std::shared_ptr<const Hopf> H, const DPrimeModule& pi, int cap) {
  SplitVerdict v;
  SplitComplex sc = build_split_complex(H, pi, cap);
  v.notes = sc.notes;
  v.built = sc.built;
  if (!sc.built) return v;
  const Complex& c = sc.complex;
  const int n = H->dim();
  const int T = static_cast<int>(c.terms.size());
  const int N = H->spec().N();
  v.zero_compositions = true;
  for (size_t t = 0; t + 1 < c.maps.size(); ++t)
    if (!compose(c.maps[t + 1], c.maps[t]).is_zero()) v.zero_compositions = false;

  // Images are taken from a larger filtration piece: the maps are not graded.
  const int max_slack = 3;
  std::vector<FilSubspace> images;
  for (int slack = 0; slack <= max_slack; ++slack) {
    images.clear();
    for (const ModuleMap& m : c.maps) images.push_back(image_subspace(m, cap + slack));
    v.rows.clear();
    bool exact = true;
    for (int t = 0; t < T; ++t)
      for (int k = 0; k <= cap; ++k) {
        ExactnessRow row;
        row.term = t;
        row.degree = k;
        int size = FilBasis(n, k, c.terms[t]->dim0()).size();
        row.kernel = t < static_cast<int>(c.maps.size()) ? size - rank(c.maps[t].block(k)) : size;
        row.image = t > 0 ? images[t - 1].dim_at(k) : 0;
        row.exact = row.kernel == row.image;
        exact = exact && row.exact;
        v.rows.push_back(row);
      }
    v.slack = slack;
    if (exact) {
      v.exact = true;
      break;
    }
  }

  // V(Π′,R(π_m)) = im D^m ⊕ im D^{2N−m}, and im D^N ⊕ im D^R in the middle.
  // The summands are not filtered pieces, so the sum is compared with fil^k
  // using images of a larger filtration piece.
  v.split = true;
  for (int m = 1; m <= N; ++m) {
    const ModuleMap& ma = c.maps[m - 1];
    const ModuleMap& mb = m == N ? c.maps[N] : c.maps[2 * N - m];
    bool good = false;
    for (int slack = 0; slack <= max_slack && !good; ++slack) {
      FilSubspace a = image_subspace(ma, cap + slack), b = image_subspace(mb, cap + slack);
      FilSubspace sum = subspace_sum(a, b);
      good = a.dim() + b.dim() == sum.dim();
      for (int k = 0; k <= cap && good; ++k)
        if (sum.dim_at(k) != FilBasis(n, k, c.terms[m]->dim0()).size()) good = false;
    }
    if (!good) {
      v.split = false;
      v.notes.push_back("V(Pi',R(pi" + std::to_string(m) + ")) does not split into the two images");
    }
  }
  return v;
}

namespace {

Matrix sub_block(const Matrix& m, int r0, int r1, int c0, int c1) {
  Matrix out(r1 - r0, c1 - c0);
  for (int i = r0; i < r1; ++i)
    for (int j = c0; j < c1; ++j) out(i - r0, j - c0) = m(i, j);
  return out;
}

// Dimension of the associative algebra generated by the matrices (with 1).
int algebra_dim(const std::vector<Matrix>& gens, int dim) {
  Eliminator el;
  std::deque<Matrix> todo{Matrix::identity(dim)};
  while (!todo.empty()) {
    Matrix m = todo.front();
    todo.pop_front();
    std::map<long, Q> r;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (!is_zero(m(i, j))) r[i * dim + j] = m(i, j);
    if (!el.add(to_sparse(r))) continue;
    for (const Matrix& g : gens) todo.push_back(g * m);
  }
  return el.rank();
}

}  // namespace

IrreducibilityVerdict irreducibility_check(std::shared_ptr<const Hopf> H, const DPrimeModule& pi, int cap) {
  const LieAlgebraSpec& s = H->spec();
  const int n = s.dim;
  IrreducibilityVerdict v;
  auto V = make_v_module(H, pi, trivial_rep(s));
  SingularBasis sb = solve_singular(V, cap);
  const int dim = static_cast<int>(sb.vectors.size());
  const int m0 = static_cast<int>(std::count(sb.degree.begin(), sb.degree.end(), 0));
  const int q = dim - m0;
  SingRep rep = sing_rep(sb);
  std::vector<Matrix> gens = rep.f;
  gens.insert(gens.end(), rep.dhat.begin(), rep.dhat.end());
  gens.push_back(rep.c);
  bool ok = rep.closed;
  if (!rep.closed) v.notes.push_back("rho_sing images left the singular span");

  // Every nonzero submodule contains a minimal N_P-stable subspace of sing V. With
  // L = fil^0 simple and sing V/L simple, these are L alone (non-split) or L and
  // the unique stable complement W; each of them has to generate V.
  std::vector<Matrix> gl, gq;
  for (const Matrix& g : gens) {
    if (!sub_block(g, m0, dim, 0, m0).is_zero()) {
      ok = false;
      v.notes.push_back("fil^0 is not stable under rho_sing");
    }
    gl.push_back(sub_block(g, 0, m0, 0, m0));
    gq.push_back(sub_block(g, m0, dim, m0, dim));
  }
  if (algebra_dim(gl, m0) != m0 * m0) {
    ok = false;
    v.notes.push_back("fil^0 is not simple under rho_sing");
  }
  std::vector<std::vector<ModElem>> minimal{std::vector<ModElem>(sb.vectors.begin(), sb.vectors.begin() + m0)};
  if (q > 0) {
    if (algebra_dim(gq, q) != q * q) {
      ok = false;
      v.notes.push_back("sing V / fil^0 is not simple under rho_sing");
    }
    // Stable complement {e_j + T e_j}: X_LQ + X_LL T − T X_QQ = 0 for every generator.
    std::vector<Vec> rows;
    Vec rhs;
    for (const Matrix& g : gens) {
      Matrix LL = sub_block(g, 0, m0, 0, m0), LQ = sub_block(g, 0, m0, m0, dim), QQ = sub_block(g, m0, dim, m0, dim);
      for (int i = 0; i < m0; ++i)
        for (int j = 0; j < q; ++j) {
          Vec row(static_cast<size_t>(m0) * q);
          for (int k = 0; k < m0; ++k) row[k * q + j] += LL(i, k);
          for (int k = 0; k < q; ++k) row[i * q + k] -= QQ(k, j);
          rows.push_back(row);
          rhs.push_back(-LQ(i, j));
        }
    }
    Matrix A = from_rows(rows, m0 * q);
    if (auto T = solve(A, rhs)) {
      if (!kernel(A).empty()) {
        ok = false;
        v.notes.push_back("fil^0 and sing V / fil^0 are isomorphic; stable subspaces are not isolated");
      }
      std::vector<ModElem> W;
      for (int j = 0; j < q; ++j) {
        ModElem w = sb.vectors[m0 + j];
        for (int i = 0; i < m0; ++i)
          if (!is_zero((*T)[i * q + j])) w += sb.vectors[i] * (*T)[i * q + j];
        W.push_back(w);
      }
      v.notes.push_back("sing V = fil^0 + stable complement");
      minimal.push_back(W);
    } else {
      v.notes.push_back("sing V is a non-split extension of sing V / fil^0 by fil^0");
    }
  }
  auto full = full_profile(n, cap, V->dim0());
  for (size_t a = 0; a < minimal.size(); ++a)
    if (generate_submodule(*V, minimal[a], cap).profile() != full) {
      ok = false;
      v.notes.push_back(std::string(a == 0 ? "fil^0" : "the stable complement") + " generates a proper submodule");
    }
  v.irreducible = ok;
  return v;
}

// ------------------------------------------------------------------ lattices

namespace {

const IsotypicBlock* find_block(const SingularDecomposition& d, const std::vector<int>& w, int deg) {
  for (const auto& b : d.blocks)
    if (b.weight == w && b.degree == deg) return &b;
  return nullptr;
}

std::shared_ptr<const VModule> as_v(ModulePtr m) { return std::dynamic_pointer_cast<const VModule>(m); }

ModuleMap iso_or_throw(ModulePtr a, ModulePtr b) {
  auto m = tensor_iso(as_v(a), as_v(b));
  if (!m) throw std::runtime_error("no tensor module isomorphism " + a->label() + " -> " + b->label());
  return *m;
}

// Scalar s with a = s·b on every generator, if any.
std::optional<Q> proportion(const ModuleMap& a, const ModuleMap& b) {
  std::optional<Q> s;
  for (size_t u = 0; u < a.images.size(); ++u) {
    const ModElem &x = a.images[u], &y = b.images[u];
    if (y.zero()) {
      if (!x.zero()) return std::nullopt;
      continue;
    }
    const auto& [key, q] = *y.t.begin();
    auto it = x.t.find(key);
    Q t = it == x.t.end() ? Q(0) : it->second / q;
    if (s && *s != t) return std::nullopt;
    s = t;
    if (!(x == y * t)) return std::nullopt;
  }
  return s;
}

}  // namespace

LatticeVerdict lattice_check(std::shared_ptr<const Hopf> H, const std::vector<Matrix>& pi, int n, int cap) {
  const LieAlgebraSpec& s = H->spec();
  const int N = s.N(), dim = s.dim;
  if (n < 1 || n > N) throw std::out_of_range("lattice_check needs 1 <= n <= N");
  DeRham dr(H, pi);
  LatticeVerdict v;
  ModulePtr V = dr.quotient(n, 0);
  v.module = V->label();
  SingularBasis sb = solve_singular(V, 2);
  SingularDecomposition dec = decompose_isotypic(sb);
  auto wt = [&](int k) { return fundamental_weight(N, k); };
  const IsotypicBlock* b0 = find_block(dec, wt(n), 0);
  const IsotypicBlock* bd = find_block(dec, wt(n - 1), 1);
  const IsotypicBlock* bs = n < N ? find_block(dec, wt(n + 1), 1) : nullptr;
  const IsotypicBlock* bD = find_block(dec, wt(n), 2);
  if (!b0 || !bd || !bD || (n < N && !bs) || !dec.separated) {
    v.notes.push_back("singular blocks missing: " + profile_string(dec.profile));
    return v;
  }
  auto full = full_profile(dim, cap, V->dim0());
  auto gen = [&](const std::vector<ModElem>& g) { return generate_submodule(*V, g, cap); };
  bool ok = true;
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      v.notes.push_back(what);
    }
  };

  GeneratedSubmodule G0 = gen(b0->vectors), Gd = gen(bd->vectors), GD = gen(bD->vectors);
  FilSubspace im_d = image_subspace(dr.d_quotient(n - 1, 0), cap);
  v.dims["V"] = full;
  v.dims["G(" + b0->label + ")"] = G0.profile();
  v.dims["im d"] = im_d.profile();
  v.dims["G(" + bd->label + ")"] = Gd.profile();
  v.dims["G(" + bD->label + ")"] = GD.profile();
  expect(G0.profile() == full, "degree-0 singular vectors do not generate V");
  expect(same_subspace(Gd.space, im_d), "G(" + bd->label + ") differs from im d");
  expect(subspace_contains(Gd.space, GD.space) && GD.space.dim() < Gd.space.dim(), "G(" + bD->label + ") is not strictly inside G(" + bd->label + ")");
  expect(Gd.space.dim() < G0.space.dim(), "im d is not proper");
  expect(GD.space.dim() > 0, "degree-two block generates zero");
  expect(gen({bd->vectors.front() + bD->vectors.front()}).space.dim() == Gd.space.dim(), "mixed degree-1/2 vector leaves im d");

  if (n == N) {
    // im D: the Rumin map into J^N over Π, identified with Ω^N/I^N.
    ModuleMap D = compose(iso_or_throw(dr.jpart(N, 0), V), dr.rumin(1));
    FilSubspace im_D = image_subspace(D, cap);
    v.dims["im D"] = im_D.profile();
    expect(same_subspace(GD.space, im_D), "G(" + bD->label + ") differs from im D");
    expect(gen({b0->vectors.front() + bD->vectors.front()}).profile() == full, "mixed degree-0/2 vector does not generate V");
    v.chain = {"V", "im d", "im D", "0"};

    // Two degree-two maps J^N over Π → Ω^N/I^N over Π_{−χ}.
    ModuleMap a = compose(dr.d_quotient(N - 1, -1), compose(iso_or_throw(dr.jpart(N + 1, 0), dr.quotient(N - 1, -1)), dr.d_j(N, 0)));
    ModuleMap b = compose(iso_or_throw(dr.jpart(N, -1), dr.quotient(N, -1)), compose(dr.rumin(0), iso_or_throw(dr.jpart(N, 0), dr.quotient(N, 0))));
    auto sc = proportion(a, b);
    v.proportional = sc && *sc != 0 && !b.is_zero();
    v.scalar = sc ? to_string(*sc) : "none";
  } else {
    ModuleMap ds = compose(iso_or_throw(dr.jpart(dim - n, N - n), V), dr.d_j(dim - n - 1, N - n));
    FilSubspace im_s = image_subspace(ds, cap);
    GeneratedSubmodule Gs = gen(bs->vectors);
    v.dims["im d*"] = im_s.profile();
    v.dims["G(" + bs->label + ")"] = Gs.profile();
    expect(same_subspace(Gs.space, im_s), "G(" + bs->label + ") differs from im d*");
    auto inter = intersection_profile(Gd.space, Gs.space);
    v.dims["im d ∩ im d*"] = inter;
    expect(GD.profile() == inter && subspace_contains(Gs.space, GD.space), "G(" + bD->label + ") differs from im d ∩ im d*");
    FilSubspace sum = subspace_sum(Gd.space, Gs.space);
    v.dims["im d + im d*"] = sum.profile();
    expect(sum.dim() < G0.space.dim(), "im d + im d* is not proper");
    expect(Gs.space.dim() > GD.space.dim() && Gd.space.dim() > GD.space.dim(), "im d ∩ im d* is not strictly smaller");
    expect(gen({bd->vectors.front() + bs->vectors.front()}).space.dim() == sum.dim(), "mixed degree-1 vector does not generate im d + im d*");
    v.chain = {"V", "im d + im d*", "im d", "im d*", "im d ∩ im d*", "0"};

    // J^{2N−n} over Π_{tχ} → Ω^n/I^n over Π_{(t−2)χ}, t = N − n + 1, two ways.
    const int t = N - n + 1, m = dim - n;
    ModuleMap c1 = compose(dr.d_quotient(n - 1, t - 2), compose(iso_or_throw(dr.jpart(m + 1, t), dr.quotient(n - 1, t - 2)), dr.d_j(m, t)));
    ModuleMap c2 = compose(
        iso_or_throw(dr.jpart(m, t - 1), dr.quotient(n, t - 2)),
        compose(dr.d_j(m - 1, t - 1),
                compose(iso_or_throw(dr.quotient(n + 1, t - 1), dr.jpart(m - 1, t - 1)),
                        compose(dr.d_quotient(n, t - 1), iso_or_throw(dr.jpart(m, t), dr.quotient(n, t - 1))))));
    auto sc = proportion(c1, c2);
    v.proportional = sc && *sc != 0 && !c2.is_zero();
    v.scalar = sc ? to_string(*sc) : "none";
  }
  if (!v.proportional) v.notes.push_back("degree-two composites are not proportional");
  v.pass = ok && v.proportional;
  return v;
}

}  // namespace hp
