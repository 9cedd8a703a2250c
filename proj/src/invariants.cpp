#include "modsuper/invariants.hpp"

#include <algorithm>

namespace modsuper {

namespace {

Elem binom_mod(const Field& F, int n, int k) {
  if (k < 0 || k > n) return F.zero();
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return F.from_int(r);
}

std::size_t projected_rank(const Field& F, const std::vector<Vec>& rows, const std::vector<int>& parity, int keep) {
  if (rows.empty()) return 0;
  Mat m(F, rows.size(), parity.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < parity.size(); ++j)
      if (parity[j] == keep) m(i, j) = rows[i][j];
  return rank(std::move(m));
}

}  // namespace

std::vector<CoproductTerm> comultiply(const Field& F, const std::vector<int>& parity, const std::vector<int>& e) {
  const std::size_t n = e.size();
  if (parity.size() != n) throw AlgebraError("comultiply: parity and exponent lengths differ");
  for (std::size_t i = 0; i < n; ++i)
    if (e[i] < 0 || e[i] >= (parity[i] ? 2 : static_cast<int>(F.p()))) throw AlgebraError("comultiply: exponent outside PBW bounds");
  std::vector<CoproductTerm> out;
  std::vector<int> left(n, 0);
  // Odometer over 0 <= left[i] <= e[i].
  while (true) {
    Elem c = F.one();
    int right_odd_before = 0;
    bool neg = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (parity[i]) {
        if (e[i] == 0) continue;
        if (left[i]) {
          if (right_odd_before & 1) neg = !neg;
        } else {
          ++right_odd_before;
        }
      } else {
        c = F.mul(c, binom_mod(F, e[i], left[i]));
      }
    }
    if (neg) c = F.neg(c);
    if (c.v != 0) {
      std::vector<int> right(n);
      for (std::size_t i = 0; i < n; ++i) right[i] = e[i] - left[i];
      out.push_back({c, left, right});
    }
    std::size_t i = 0;
    while (i < n && left[i] == e[i]) left[i++] = 0;
    if (i == n) break;
    ++left[i];
  }
  return out;
}

CoinducedAlgebra CoinducedAlgebra::build(std::shared_ptr<const LieSuperalgebra> g, std::vector<std::size_t> p_sub) {
  CoinducedAlgebra A;
  A.g_ = g;
  const Field& F = g->field();
  const std::size_t n = g->dim();
  std::sort(p_sub.begin(), p_sub.end());
  p_sub.erase(std::unique(p_sub.begin(), p_sub.end()), p_sub.end());
  std::vector<bool> in_p(n, false);
  for (std::size_t i : p_sub) {
    if (i >= n) throw AlgebraError("subalgebra index out of range");
    in_p[i] = true;
  }
  auto inside = [&](const Vec& x) {
    for (std::size_t k = 0; k < n; ++k)
      if (!in_p[k] && x[k].v != 0) return false;
    return true;
  };
  for (std::size_t i : p_sub) {
    for (std::size_t j : p_sub)
      if (!inside(g->bracket(i, j))) throw AlgebraError("subalgebra is not closed under the bracket");
    if (g->parity(i) == 0 && !inside(g->p_power(i))) throw AlgebraError("subalgebra is not closed under the p-map");
  }
  for (int par : {0, 1})
    for (std::size_t i = 0; i < n; ++i)
      if (!in_p[i] && g->parity(i) == par) A.comp_.push_back(i);
  for (std::size_t i : A.comp_) {
    A.comp_par_.push_back(g->parity(i));
    (g->parity(i) ? A.t_ : A.s_)++;
  }
  const std::size_t m = A.comp_.size();
  A.bound_.resize(m);
  A.stride_.resize(m);
  for (std::size_t k = 0; k < m; ++k) A.bound_[k] = A.comp_par_[k] ? 2 : static_cast<int>(F.p());
  for (std::size_t k = m; k-- > 0;) {
    A.stride_[k] = A.dim_;
    A.dim_ *= static_cast<std::size_t>(A.bound_[k]);
  }

  // delta_A * delta_B from the coproduct of delta_{A+B}'s monomial.
  A.table_.assign(A.dim_, {});
  for (std::size_t c = 0; c < A.dim_; ++c) {
    for (const auto& term : comultiply(F, A.comp_par_, A.exponents(c))) {
      const std::size_t a = A.index(term.left), b = A.index(term.right);
      const int pa = A.parity(a), pb = A.parity(b);
      const Elem coef = (pa & pb) ? F.neg(term.coef) : term.coef;
      A.table_[a].push_back({b, Prod{c, coef}});
    }
  }

  // U_0(g) ordered [p_sub, complement]; complement monomials then carry the same index.
  std::vector<std::size_t> order = p_sub;
  order.insert(order.end(), A.comp_.begin(), A.comp_.end());
  DeformedAlgebra U0(g, g->character_zero(), F.one(), order);
  for (std::size_t x = 0; x < n; ++x) {
    Mat M(F, A.dim_, A.dim_);
    const int px = g->parity(x);
    for (std::size_t v = 0; v < A.dim_; ++v) {
      const auto vx = U0.multiply(U0.monomial(v, F.one()), U0.generator(x));
      for (const auto& [w, c] : vx.terms) {
        if (w >= A.dim_) continue;  // nonzero p_sub part is killed by the augmentation
        const bool neg = px & (A.parity(w) ^ A.parity(v));
        M(v, w) = neg ? F.neg(c) : c;
      }
    }
    A.actions_.push_back(std::move(M));
  }
  return A;
}

std::vector<int> CoinducedAlgebra::exponents(std::size_t idx) const {
  std::vector<int> e(comp_.size());
  for (std::size_t k = 0; k < comp_.size(); ++k) e[k] = static_cast<int>((idx / stride_[k]) % bound_[k]);
  return e;
}

std::size_t CoinducedAlgebra::index(const std::vector<int>& e) const {
  std::size_t r = 0;
  for (std::size_t k = 0; k < comp_.size(); ++k) r += static_cast<std::size_t>(e[k]) * stride_[k];
  return r;
}

int CoinducedAlgebra::parity(std::size_t idx) const {
  int s = 0;
  for (std::size_t k = 0; k < comp_.size(); ++k)
    if (comp_par_[k]) s += static_cast<int>((idx / stride_[k]) % bound_[k]);
  return s & 1;
}

Vec CoinducedAlgebra::unit() const {
  Vec v(dim_);
  v[0] = field().one();
  return v;
}

Vec CoinducedAlgebra::multiply(const Vec& f, const Vec& h) const {
  const Field& F = field();
  Vec r(dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    if (f[a].v == 0) continue;
    for (const auto& [b, pr] : table_[a]) {
      if (h[b].v == 0) continue;
      r[pr.c] = F.add(r[pr.c], F.mul(F.mul(f[a], h[b]), pr.coef));
    }
  }
  return r;
}

Vec CoinducedAlgebra::phi(std::size_t i) const {
  if (i >= s_) throw AlgebraError("phi index out of range");
  Vec v(dim_);
  v[stride_[i]] = field().one();
  return v;
}

Vec CoinducedAlgebra::psi(std::size_t j) const {
  if (j >= t_) throw AlgebraError("psi index out of range");
  Vec v(dim_);
  v[stride_[s_ + j]] = field().one();
  return v;
}

Vec CoinducedAlgebra::dual_monomial(const std::vector<int>& a, const std::vector<int>& b) const {
  Vec r = unit();
  for (std::size_t i = 0; i < s_; ++i)
    for (int k = 0; k < a[i]; ++k) r = multiply(r, phi(i));
  for (std::size_t j = 0; j < t_; ++j)
    for (int k = 0; k < b[j]; ++k) r = multiply(r, psi(j));
  return r;
}

Mat CoinducedAlgebra::mult_matrix(std::size_t k) const {
  const Vec gen = k < s_ ? phi(k) : psi(k - s_);
  Mat M(field(), dim_, dim_);
  for (std::size_t w = 0; w < dim_; ++w) {
    Vec e(dim_);
    e[w] = field().one();
    const Vec r = multiply(gen, e);
    for (std::size_t i = 0; i < dim_; ++i) M(i, w) = r[i];
  }
  return M;
}

InvariantSetting setting_of(const DeformedAlgebra& S, std::uint64_t cap) {
  const Field& F = S.field();
  if (S.dim() > cap) throw AlgebraError("algebra dimension exceeds the configured cap");
  InvariantSetting st;
  st.F = F;
  st.dim = S.dim();
  for (std::uint64_t m = 0; m < S.dim(); ++m) st.parity.push_back(S.parity(m));
  for (std::size_t i = 0; i < S.g().dim(); ++i) {
    st.mult_ops.push_back(S.left_mult_matrix(i, cap));
    st.g_ops.push_back(S.action_matrix(i, cap));
  }
  // Evaluation x -> xi(x) on even generators, odd generators -> 0.
  st.augmentation.assign(S.dim(), F.zero());
  for (std::uint64_t m = 0; m < S.dim(); ++m) {
    Elem v = F.one();
    for (std::size_t pos = 0; pos < S.num_vars() && v.v != 0; ++pos) {
      const int e = S.exponent(m, pos);
      if (e == 0) continue;
      const std::size_t b = S.var_basis(pos);
      v = S.g().parity(b) ? F.zero() : F.mul(v, F.pow(S.xi().values[b], static_cast<std::uint64_t>(e)));
    }
    st.augmentation[m] = v;
  }
  return st;
}

InvariantSetting setting_of(const CoinducedAlgebra& A) {
  InvariantSetting st;
  st.F = A.field();
  st.dim = A.dim();
  for (std::size_t i = 0; i < A.dim(); ++i) st.parity.push_back(A.parity(i));
  for (std::size_t k = 0; k < A.s() + A.t(); ++k) st.mult_ops.push_back(A.mult_matrix(k));
  for (std::size_t x = 0; x < A.g().dim(); ++x) st.g_ops.push_back(A.action(x));
  st.augmentation = A.unit();  // f -> f(1) is the delta_0 coordinate
  return st;
}

namespace {

std::vector<Mat> all_ops(const InvariantSetting& S, bool transposed) {
  std::vector<Mat> ops;
  for (const auto* list : {&S.mult_ops, &S.g_ops})
    for (const Mat& m : *list) ops.push_back(transposed ? m.transpose() : m);
  return ops;
}

}  // namespace

InvariantIdeal largest_proper_invariant_ideal(const InvariantSetting& S) {
  // V_{k+1} = {v in V_k : T v in V_k} in dual form: the constraint space grows
  // from the augmentation functional under the transposed operators.
  const Echelon W = span_closure(S.F, S.dim, {S.augmentation}, all_ops(S, true));
  InvariantIdeal I;
  I.basis = annihilator(W);
  I.dim = I.basis.size();
  I.codim = W.dim();
  const std::size_t re = projected_rank(S.F, W.basis(), S.parity, 0);
  const std::size_t ro = projected_rank(S.F, W.basis(), S.parity, 1);
  I.graded = re + ro == W.dim();
  I.codim_even = re;
  I.codim_odd = ro;
  return I;
}

InvariantIdeal invariant_ideal_closure(const InvariantSetting& S, const Vec& v) {
  InvariantIdeal I;
  std::vector<Vec> seeds;
  if (!is_zero(v)) seeds.push_back(v);
  const Echelon W = span_closure(S.F, S.dim, seeds, all_ops(S, false));
  I.basis = W.basis();
  I.dim = W.dim();
  I.codim = S.dim - I.dim;
  const std::size_t re = projected_rank(S.F, I.basis, S.parity, 0);
  const std::size_t ro = projected_rank(S.F, I.basis, S.parity, 1);
  I.graded = re + ro == I.dim;
  std::size_t ne = 0;
  for (int q : S.parity) ne += q == 0;
  I.codim_even = ne - re;
  I.codim_odd = (S.dim - ne) - ro;
  return I;
}

bool is_invariant_ideal(const InvariantSetting& S, const InvariantIdeal& I) {
  Echelon E(S.F, S.dim);
  for (const Vec& b : I.basis) E.insert(b);
  for (const Mat& T : all_ops(S, false))
    for (const Vec& b : I.basis)
      if (!E.contains(T.apply(b))) return false;
  return true;
}

DivisibilityReport verify_codim_divisibility(const InvariantSetting& S, std::size_t d0, std::size_t d1,
                                             int samples, SplitMix64& rng) {
  DivisibilityReport rep;
  rep.d0 = d0;
  rep.d1 = d1;
  for (std::size_t k = 0; k < d0; ++k) rep.divisor *= S.F.p();
  for (std::size_t k = 0; k < d1; ++k) rep.divisor *= 2;
  const InvariantIdeal M = largest_proper_invariant_ideal(S);
  rep.max_ideal_codim = M.codim;
  rep.max_codim_even = M.codim_even;
  rep.max_codim_odd = M.codim_odd;
  rep.max_matches = M.codim == rep.divisor;
  Echelon ME(S.F, S.dim);
  for (const Vec& b : M.basis) ME.insert(b);
  for (int s = 0; s < samples; ++s) {
    const int par = static_cast<int>(rng.below(2));
    Vec v(S.dim);
    if (s % 2 == 1 && !M.basis.empty()) {
      for (const Vec& b : M.basis) {
        const Elem c{static_cast<std::uint32_t>(rng.below(S.F.q()))};
        v = vaxpy(S.F, v, c, b);
      }
    } else {
      for (std::size_t i = 0; i < S.dim; ++i)
        if (rng.below(4) == 0) v[i] = Elem{static_cast<std::uint32_t>(rng.below(S.F.q()))};
    }
    for (std::size_t i = 0; i < S.dim; ++i)
      if (S.parity[i] != par) v[i] = S.F.zero();
    const InvariantIdeal I = invariant_ideal_closure(S, v);
    rep.codims_observed.push_back(I.codim);
    if (I.codim % rep.divisor != 0) rep.closures_divisible = false;
    if (I.codim > 0)
      for (const Vec& b : I.basis)
        if (!ME.contains(b)) rep.closures_inside_max = false;
  }
  return rep;
}

}  // namespace modsuper
