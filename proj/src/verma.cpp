#include "modsuper/verma.hpp"

#include <algorithm>

#include "modsuper/kwverify.hpp"

namespace modsuper {

namespace {

bool toral(const LieSuperalgebra& g, std::size_t h) { return g.p_power(h) == g.unit(h); }

}  // namespace

bool in_lambda_set(const LieSuperalgebra& g, const PCharacter& chi, const std::vector<Elem>& lambda) {
  const Field& F = g.field();
  const auto& H = g.cartan();
  if (lambda.size() != H.size()) return false;
  for (std::size_t i = 0; i < H.size(); ++i) {
    const Vec hp = g.p_power(H[i]);
    Elem lhp = F.zero();
    for (std::size_t j = 0; j < H.size(); ++j) lhp = F.add(lhp, F.mul(lambda[j], hp[H[j]]));
    const Elem lhs = F.sub(F.pow(lambda[i], F.p()), lhp);
    if (lhs != F.pow(chi.values[H[i]], F.p())) return false;
  }
  return true;
}

LambdaSet lambda_set(const LieSuperalgebra& g, const PCharacter& chi, std::uint32_t k_max) {
  if (!is_standard(g, chi)) throw AlgebraError("lambda_set requires chi to vanish on root vectors");
  const Field& F = g.field();
  const auto& H = g.cartan();
  for (std::size_t h : H)
    if (!toral(g, h)) throw AlgebraError("Cartan basis vector " + g.basis()[h].name + " is not toral");
  for (std::uint32_t k = F.k(); k <= k_max; k += F.k()) {
    const Field F2 = Field::create(F.p(), k);
    std::vector<std::vector<Elem>> sols;
    bool ok = true;
    for (std::size_t h : H) {
      const Elem c = F2.embed_from(F, F.pow(chi.values[h], F.p()));
      auto r = artin_schreier_solve(F2, c);
      if (r.solutions.empty()) {
        ok = false;
        break;
      }
      sols.push_back(std::move(r.solutions));
    }
    if (!ok) continue;
    LambdaSet L;
    L.k = k;
    L.g = std::make_shared<const LieSuperalgebra>(k == static_cast<std::uint32_t>(F.k()) ? g : g.extend(F2));
    Vec vals(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) vals[i] = F2.embed_from(F, chi.values[i]);
    L.chi = PCharacter{vals};
    std::vector<std::size_t> idx(H.size(), 0);
    while (true) {
      std::vector<Elem> w(H.size());
      for (std::size_t i = 0; i < H.size(); ++i) w[i] = sols[i][idx[i]];
      L.weights.push_back(std::move(w));
      std::size_t i = H.size();
      while (i > 0 && ++idx[i - 1] == sols[i - 1].size()) idx[--i] = 0;
      if (i == 0) break;
    }
    return L;
  }
  throw AlgebraError("Lambda_chi is empty over every GF(p^k) with k <= " + std::to_string(k_max));
}

VermaFamily::VermaFamily(std::shared_ptr<const LieSuperalgebra> g, SimpleSystem ss, PCharacter chi)
    : g_(std::move(g)), ss_(std::move(ss)), chi_(std::move(chi)) {
  const Field& F = g_->field();
  const auto& pos = ss_.positive();
  const std::size_t N = pos.size();
  for (const auto& rv : g_->root_vectors()) {
    if (chi_.values[rv.index].v != 0 && ss_.is_positive(rv.root))
      throw AlgebraError("chi must vanish on the positive root vectors of the chosen system");
  }
  std::vector<std::size_t> order;
  for (std::size_t i = N; i-- > 0;) order.push_back(g_->root_index(wneg(pos[i])));
  for (std::size_t h : g_->cartan()) order.push_back(h);
  for (const auto& a : pos) order.push_back(g_->root_index(a));
  if (order.size() != g_->dim()) throw AlgebraError("basis is not Cartan plus root vectors");
  U_ = std::make_shared<DeformedAlgebra>(g_, chi_, F.one(), order);
  n_neg_ = N;
  for (std::size_t i = 0; i < N; ++i) {
    m_.push_back(g_->root_system()->is_even(pos[i]) ? static_cast<int>(F.p()) - 1 : 1);
    dim_ *= static_cast<std::size_t>(m_.back() + 1);
  }
  block_ = static_cast<std::size_t>(U_->dim() / dim_);
  for (std::size_t z = 0; z < dim_; ++z) par_.push_back(U_->parity(static_cast<std::uint64_t>(z) * block_));
  rho_vals_ = g_->weight_on_cartan(ss_.rho());

  const std::size_t r = g_->cartan().size();
  terms_.assign(g_->dim(), std::vector<std::vector<ProjTerm>>(dim_));
  for (std::size_t x = 0; x < g_->dim(); ++x)
    for (std::size_t z = 0; z < dim_; ++z) {
      const auto u = U_->left_mul_generator(x, U_->monomial(static_cast<std::uint64_t>(z) * block_, F.one()));
      for (const auto& [m, c] : u.terms) {
        bool killed = false;
        for (std::size_t p = N + r; p < U_->num_vars() && !killed; ++p) killed = U_->exponent(m, p) != 0;
        if (killed) continue;
        ProjTerm t{static_cast<std::size_t>(m / block_), c, std::vector<int>(r)};
        for (std::size_t i = 0; i < r; ++i) t.cartan_exp[i] = U_->exponent(m, N + i);
        terms_[x][z].push_back(std::move(t));
      }
    }
}

BabyVerma VermaFamily::build(const std::vector<Elem>& lambda) const {
  if (!in_lambda_set(*g_, chi_, lambda)) throw AlgebraError("lambda is not in Lambda_chi");
  const Field& F = field();
  // Cartan order in U follows g.cartan(), which is the order of lambda's coordinates.
  BabyVerma Z;
  Z.fam_ = this;
  Z.lambda_ = lambda;
  for (std::size_t x = 0; x < g_->dim(); ++x) {
    Mat M(F, dim_, dim_);
    for (std::size_t z = 0; z < dim_; ++z)
      for (const auto& t : terms_[x][z]) {
        Elem c = t.c;
        for (std::size_t i = 0; i < t.cartan_exp.size(); ++i)
          if (t.cartan_exp[i]) c = F.mul(c, F.pow(lambda[i], static_cast<std::uint64_t>(t.cartan_exp[i])));
        M(t.z, z) = F.add(M(t.z, z), c);
      }
    Z.act_.push_back(std::move(M));
  }
  return Z;
}

Elem VermaFamily::criterion_value(const std::vector<Elem>& lambda) const {
  const Field& F = field();
  const auto& H = g_->cartan();
  std::map<Weight, Elem> pairing;
  for (const auto& a : ss_.positive()) {
    const Vec co = g_->coroot(a);
    Elem s = F.zero();
    for (std::size_t i = 0; i < H.size(); ++i) s = F.add(s, F.mul(F.add(lambda[i], rho_vals_[i]), co[H[i]]));
    pairing[a] = s;
  }
  return phi_prime_eval(ss_, F, pairing);
}

Vec BabyVerma::highest_vector() const {
  Vec v(dim());
  v[0] = fam_->field().one();
  return v;
}

Vec BabyVerma::lowest_vector() const {
  Vec v = highest_vector();
  const auto& pos = fam_->positive();
  for (std::size_t i = pos.size(); i-- > 0;) {
    const Mat& A = root_action(wneg(pos[i]));
    for (int k = 0; k < fam_->m_alpha(i); ++k) v = A.apply(v);
  }
  return v;
}

Elem BabyVerma::phi_via_module() const {
  Vec v = lowest_vector();
  const auto& pos = fam_->positive();
  for (std::size_t i = pos.size(); i-- > 0;) {
    const Mat& A = root_action(pos[i]);
    for (int k = 0; k < fam_->m_alpha(i); ++k) v = A.apply(v);
  }
  return v[0];
}

std::vector<int> BabyVerma::basis_exponents(std::size_t i) const {
  const std::size_t N = fam_->n_neg_;
  std::vector<int> e(N);
  const std::uint64_t m = static_cast<std::uint64_t>(i) * fam_->block_;
  // position q holds -alpha_{N-q}
  for (std::size_t q = 0; q < N; ++q) e[N - 1 - q] = fam_->U_->exponent(m, q);
  return e;
}

OracleVerdict is_irreducible_oracle(const BabyVerma& Z) {
  const Echelon E = span_closure(Z.family().field(), Z.dim(), {Z.lowest_vector()}, Z.actions());
  return {E.dim() == Z.dim(), E.dim()};
}

CriterionVerdict is_irreducible_criterion(const VermaFamily& fam, const std::vector<Elem>& lambda) {
  const Elem v = fam.criterion_value(lambda);
  return {v.v != 0, v};
}

namespace {

Head make_head(const BabyVerma& Z, const Echelon& W) {
  const Field& F = Z.family().field();
  const std::size_t n = Z.dim();
  Head H;
  for (int par : {0, 1}) {
    Echelon E(F, n);
    for (const Vec& b : W.basis()) {
      Vec v = b;
      for (std::size_t i = 0; i < n; ++i)
        if (Z.parity(i) != par) v[i] = F.zero();
      if (auto r = E.insert(v)) {
        H.dual_basis.push_back(*r);
        H.parity.push_back(par);
      }
    }
  }
  if (H.dual_basis.size() != W.dim()) throw AlgebraError("head is not a graded subquotient");
  H.dim = W.dim();
  Mat S(F, n, H.dim);
  for (std::size_t j = 0; j < H.dim; ++j)
    for (std::size_t i = 0; i < n; ++i) S(i, j) = H.dual_basis[j][i];
  for (const Mat& A : Z.actions()) {
    const Mat At = A.transpose();
    Mat B(F, H.dim, H.dim);
    for (std::size_t j = 0; j < H.dim; ++j) {
      auto c = solve(S, At.apply(H.dual_basis[j]));
      if (!c) throw AlgebraError("head dual is not stable under the action");
      for (std::size_t i = 0; i < H.dim; ++i) B(i, j) = (*c)[i];
    }
    H.ops.push_back(std::move(B));
  }
  return H;
}

std::vector<Mat> transposed_actions(const BabyVerma& Z) {
  std::vector<Mat> t;
  for (const Mat& A : Z.actions()) t.push_back(A.transpose());
  return t;
}

}  // namespace

Head head_standard(const BabyVerma& Z) {
  // rad Z is graded by the root lattice, so it is the largest submodule
  // avoiding v_lambda; its annihilator is generated by v_lambda^*.
  const Echelon W = span_closure(Z.family().field(), Z.dim(), {Z.highest_vector()}, transposed_actions(Z));
  return make_head(Z, W);
}

Head head_socle(const BabyVerma& Z, std::size_t max_points) {
  const VermaFamily& fam = Z.family();
  const LieSuperalgebra& g = fam.g();
  const Field& F = fam.field();
  const std::size_t n = Z.dim();
  const auto T = transposed_actions(Z);
  // weights of basis vectors: Cartan matrices are diagonal on the PBW basis
  std::map<std::vector<std::uint32_t>, std::vector<std::size_t>> by_weight;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> key;
    for (std::size_t h : g.cartan()) key.push_back(Z.action(h)(i, i).v);
    by_weight[key].push_back(i);
  }
  std::vector<const Mat*> raise;
  for (const auto& a : fam.positive()) raise.push_back(&T[g.root_index(a)]);

  std::optional<Echelon> best;
  std::vector<Echelon> closures;
  std::size_t points = 0;
  for (const auto& [key, coords] : by_weight) {
    const std::size_t d = coords.size();
    Mat K(F, raise.size() * n, d);
    for (std::size_t r = 0; r < raise.size(); ++r)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) K(r * n + i, j) = (*raise[r])(i, coords[j]);
    const auto ker = kernel(K);
    if (ker.empty()) continue;
    const std::size_t kd = ker.size();
    // projective points of the invariant weight space
    std::vector<std::uint32_t> c(kd, 0);
    while (true) {
      std::size_t lead = 0;
      while (lead < kd && c[lead] == 0) ++lead;
      if (lead < kd && c[lead] == 1) {
        if (++points > max_points) throw AlgebraError("head_socle: invariant space too large to enumerate");
        Vec f(n);
        for (std::size_t b = 0; b < kd; ++b)
          for (std::size_t j = 0; j < d; ++j) f[coords[j]] = F.add(f[coords[j]], F.mul(Elem{c[b]}, ker[b][j]));
        Echelon C = span_closure(F, n, {f}, T);
        if (!best || C.dim() < best->dim()) best = C;
        closures.push_back(std::move(C));
      }
      std::size_t b = 0;
      while (b < kd && ++c[b] == F.q()) c[b++] = 0;
      if (b == kd) break;
    }
  }
  if (!best) throw AlgebraError("head_socle: no invariant vectors found");
  for (const Echelon& C : closures)
    for (const Vec& v : best->basis())
      if (!C.contains(v)) throw AlgebraError("head_socle: Z^* has no unique minimal submodule");
  return make_head(Z, *best);
}

Head head_of(const BabyVerma& Z) {
  return is_standard(Z.family().g(), Z.family().chi()) ? head_standard(Z) : head_socle(Z);
}

SemisimplicityReport semisimplicity_check(const LieSuperalgebra& g, const PCharacter& chi, std::uint32_t k_max) {
  SemisimplicityReport rep;
  const Field& F = g.field();
  const bool standard = is_standard(g, chi);
  rep.regular_semisimple = standard && is_regular_semisimple(g, chi);
  std::vector<Elem> hvals;
  for (std::size_t h : g.cartan()) hvals.push_back(chi.values[h]);
  const LambdaSet L = lambda_set(g, g.character_on_cartan(hvals), k_max);
  const Field& F2 = L.field();
  Vec full(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) full[i] = F2.embed_from(F, chi.values[i]);
  VermaFamily fam(L.g, L.g->simple_system(), PCharacter{full});
  rep.dim_u = 1;
  for (std::size_t i = 0; i < g.dim(); ++i) rep.dim_u *= g.parity(i) ? 2 : F.p();
  std::vector<int> op_par;
  for (std::size_t i = 0; i < g.dim(); ++i) op_par.push_back(g.parity(i));
  for (const auto& lam : L.weights) {
    const BabyVerma Z = fam.build(lam);
    VermaRecord r;
    r.lambda = lam;
    r.dim = Z.dim();
    const Head H = head_of(Z);
    r.head_dim = H.dim;
    if (standard) {
      r.phi_module = Z.phi_via_module();
      r.phi_product = fam.criterion_value(lam);
      r.irreducible_oracle = is_irreducible_oracle(Z).irreducible;
      r.irreducible_criterion = r.phi_product.v != 0;
    } else {
      r.irreducible_oracle = r.irreducible_criterion = H.dim == Z.dim();
    }
    r.walls = walls_type(H.ops, op_par, H.parity) == WallsType::Q ? 'Q' : 'M';
    if (H.dim != Z.dim()) rep.all_irreducible = false;
    const std::uint64_t sq = static_cast<std::uint64_t>(H.dim) * H.dim;
    rep.accounted += r.walls == 'Q' ? sq / 2 : sq;
    rep.records.push_back(std::move(r));
  }
  rep.semisimple = rep.all_irreducible && rep.accounted == rep.dim_u;
  return rep;
}

}  // namespace modsuper
