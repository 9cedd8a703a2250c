#include "modsuper/liesuper.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace modsuper {

namespace {

struct Natural {
  std::size_t N = 0;
  std::vector<int> par;
  std::vector<Weight> wt;
};

Mat elementary(const Field& F, std::size_t N, std::size_t a, std::size_t b) {
  Mat m(F, N, N);
  m(a, b) = F.one();
  return m;
}

Mat super_bracket(const Mat& x, int px, const Mat& y, int py) {
  const Mat xy = x * y, yx = y * x;
  return (px & py) ? xy + yx : xy - yx;
}

Elem supertrace(const Mat& m, const std::vector<int>& par) {
  const Field& F = m.field();
  Elem s = F.zero();
  for (std::size_t i = 0; i < m.rows(); ++i) s = par[i] ? F.sub(s, m(i, i)) : F.add(s, m(i, i));
  return s;
}

std::string root_name(const RootSystem& rs, const Weight& a) { return "X[" + rs.format(a) + "]"; }

}  // namespace

std::size_t LieSuperalgebra::dim_even() const {
  std::size_t c = 0;
  for (const auto& b : basis_) c += b.parity == 0;
  return c;
}

std::size_t LieSuperalgebra::root_index(const Weight& a) const {
  auto it = root_index_.find(a);
  if (it == root_index_.end()) throw AlgebraError("no root vector for " + rs_->format(a));
  return it->second;
}

Vec LieSuperalgebra::unit(std::size_t i) const {
  Vec v(dim());
  v[i] = F_.one();
  return v;
}

LieSuperalgebra LieSuperalgebra::build(const TypeSpec& t, const Field& F) {
  if (t.exceptional())
    throw AlgebraError(t.label() + ": root-combinatorics only; structure constants are not available for exceptional types");
  try {
    check_prime(t, F.p());
  } catch (const RootSystemError& e) {
    throw AlgebraError(std::string("admissibility table violated: ") + e.what());
  }
  LieSuperalgebra g;
  g.F_ = F;
  g.spec_ = t;
  g.rs_ = std::make_shared<const RootSystem>(t);
  g.ss_ = std::make_shared<const SimpleSystem>(distinguished_simple_system(g.rs_));
  const RootSystem& rs = *g.rs_;

  Natural nat;
  std::vector<Mat> mats;
  std::vector<BasisVector> basis;
  std::vector<Weight> root_order;
  for (const auto& a : g.ss_->positive()) root_order.push_back(a);
  for (const auto& a : g.ss_->positive()) root_order.push_back(wneg(a));

  if (t.type == SuperType::GL || t.type == SuperType::SL) {
    nat.N = static_cast<std::size_t>(t.m + t.n);
    for (std::size_t a = 0; a < nat.N; ++a) {
      nat.par.push_back(static_cast<int>(a) >= t.m);
      Weight w(nat.N, Rational(0));
      w[a] = 1;
      nat.wt.push_back(w);
      g.coord_slot_.push_back(a);
    }
    if (t.type == SuperType::GL) {
      for (std::size_t a = 0; a < nat.N; ++a) {
        mats.push_back(elementary(F, nat.N, a, a));
        basis.push_back({"E" + std::to_string(a + 1) + std::to_string(a + 1), 0});
      }
    } else {
      for (std::size_t a = 0; a + 1 < nat.N; ++a) {
        Mat h = elementary(F, nat.N, a, a);
        const bool same = nat.par[a] == nat.par[a + 1];
        h(a + 1, a + 1) = same ? F.neg(F.one()) : F.one();
        mats.push_back(h);
        basis.push_back({"h" + std::to_string(a + 1), 0});
      }
    }
    for (const auto& r : root_order) {
      std::size_t i = 0, j = 0;
      for (std::size_t a = 0; a < nat.N; ++a) {
        if (r[a] == Rational(1)) i = a;
        if (r[a] == Rational(-1)) j = a;
      }
      mats.push_back(elementary(F, nat.N, i, j));
      basis.push_back({"E" + std::to_string(i + 1) + std::to_string(j + 1), nat.par[i] ^ nat.par[j]});
    }
  } else {
    // osp(M|2n) on v_1..v_m, v_-1..v_-m, [v_0], w_1..w_n, w_-1..w_-n.
    const int m = t.type == SuperType::C ? 1 : t.m;
    const int n = t.type == SuperType::C ? t.n - 1 : t.n;
    const bool has_v0 = t.type == SuperType::B;
    const std::size_t D = rs.dim();
    auto coord = [&](int c, int sign) {
      Weight w(D, Rational(0));
      w[c] = sign;
      return w;
    };
    for (int i = 0; i < m; ++i) {
      nat.par.push_back(0);
      nat.wt.push_back(coord(i, 1));
    }
    for (int i = 0; i < m; ++i) {
      nat.par.push_back(0);
      nat.wt.push_back(coord(i, -1));
    }
    if (has_v0) {
      nat.par.push_back(0);
      nat.wt.push_back(Weight(D, Rational(0)));
    }
    const std::size_t w0 = nat.par.size();
    for (int j = 0; j < n; ++j) {
      nat.par.push_back(1);
      nat.wt.push_back(coord(m + j, 1));
    }
    for (int j = 0; j < n; ++j) {
      nat.par.push_back(1);
      nat.wt.push_back(coord(m + j, -1));
    }
    nat.N = nat.par.size();
    for (int i = 0; i < m; ++i) g.coord_slot_.push_back(static_cast<std::size_t>(i));
    for (int j = 0; j < n; ++j) g.coord_slot_.push_back(w0 + static_cast<std::size_t>(j));

    Mat J(F, nat.N, nat.N);
    for (int i = 0; i < m; ++i) {
      J(i, m + i) = F.one();
      J(m + i, i) = F.one();
    }
    if (has_v0) J(2 * m, 2 * m) = F.one();
    for (int j = 0; j < n; ++j) {
      J(w0 + j, w0 + n + j) = F.one();
      J(w0 + n + j, w0 + j) = F.neg(F.one());
    }

    for (int i = 0; i < m; ++i) {
      Mat h(F, nat.N, nat.N);
      h(i, i) = F.one();
      h(m + i, m + i) = F.neg(F.one());
      mats.push_back(h);
      basis.push_back({"H[" + rs.coord_names()[i] + "]", 0});
    }
    for (int j = 0; j < n; ++j) {
      Mat h(F, nat.N, nat.N);
      h(w0 + j, w0 + j) = F.one();
      h(w0 + n + j, w0 + n + j) = F.neg(F.one());
      mats.push_back(h);
      basis.push_back({"H[" + rs.coord_names()[m + j] + "]", 0});
    }
    for (const auto& r : root_order) {
      std::vector<std::pair<std::size_t, std::size_t>> cells;
      for (std::size_t a = 0; a < nat.N; ++a)
        for (std::size_t b = 0; b < nat.N; ++b)
          if (wsub(nat.wt[a], nat.wt[b]) == r) cells.emplace_back(a, b);
      if (cells.empty()) throw AlgebraError("no matrix entries of weight " + rs.format(r));
      const int px = nat.par[cells[0].first] ^ nat.par[cells[0].second];
      // Invariance B(Xu,v) + (-1)^{|X||u|} B(u,Xv) = 0 for all u, v.
      Mat sys(F, nat.N * nat.N, cells.size());
      for (std::size_t u = 0; u < nat.N; ++u)
        for (std::size_t v = 0; v < nat.N; ++v) {
          const std::size_t row = u * nat.N + v;
          const Elem sign = (px & nat.par[u]) ? F.neg(F.one()) : F.one();
          for (std::size_t c = 0; c < cells.size(); ++c) {
            const auto [a, b] = cells[c];
            Elem e = F.zero();
            if (b == u) e = F.add(e, J(a, v));
            if (b == v) e = F.add(e, F.mul(sign, J(u, a)));
            sys(row, c) = F.add(sys(row, c), e);
          }
        }
      const auto ker = kernel(sys);
      if (ker.size() != 1) throw AlgebraError("root space of " + rs.format(r) + " is not one-dimensional");
      Mat X(F, nat.N, nat.N);
      for (std::size_t c = 0; c < cells.size(); ++c) X(cells[c].first, cells[c].second) = ker[0][c];
      mats.push_back(X);
      basis.push_back({root_name(rs, r), px});
    }
  }

  const std::size_t ncartan = mats.size() - root_order.size();
  for (std::size_t i = 0; i < ncartan; ++i) g.cartan_.push_back(i);
  for (std::size_t k = 0; k < root_order.size(); ++k) {
    g.roots_.push_back({root_order[k], ncartan + k});
    g.root_index_[root_order[k]] = ncartan + k;
  }
  g.finish(std::move(mats), std::move(basis));
  // Supertrace form on the natural representation.
  g.form_ = Mat(F, g.dim(), g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) g.form_(i, j) = supertrace(g.mats_[i] * g.mats_[j], nat.par);
  auto rep = g.validate();
  if (!rep.ok) throw AlgebraError("validation failed for " + t.label() + ": " + rep.failures.front());
  return g;
}

void LieSuperalgebra::finish(std::vector<Mat> mats, std::vector<BasisVector> basis) {
  mats_ = std::move(mats);
  basis_ = std::move(basis);
  const std::size_t d = mats_.size();
  const std::size_t N = mats_.front().rows();
  Mat flat(F_, d, N * N);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) flat(i, a * N + b) = mats_[i](a, b);
  Mat red = flat;
  probe_ = rref(red);
  if (probe_.size() != d) throw AlgebraError("basis matrices are linearly dependent");
  Mat S(F_, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) S(i, k) = flat(i, probe_[k]);
  probe_inv_ = *inverse(S);

  table_.assign(d * d, Vec());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      table_[i * d + j] = coords_of(super_bracket(mats_[i], basis_[i].parity, mats_[j], basis_[j].parity));
  pmap_.assign(d, Vec());
  for (std::size_t i = 0; i < d; ++i)
    if (basis_[i].parity == 0) pmap_[i] = coords_of(mats_[i].pow(F_.p()));
}

Vec LieSuperalgebra::coords_of(const Mat& m) const {
  const std::size_t d = dim(), N = m.rows();
  Vec t(d);
  for (std::size_t k = 0; k < d; ++k) t[k] = m(probe_[k] / N, probe_[k] % N);
  Vec c(d);
  for (std::size_t j = 0; j < d; ++j) {
    Elem s = F_.zero();
    for (std::size_t k = 0; k < d; ++k)
      if (t[k].v != 0) s = F_.add(s, F_.mul(t[k], probe_inv_(k, j)));
    c[j] = s;
  }
  if (!(realize(c) == m)) throw AlgebraError("matrix is not in the span of the algebra basis");
  return c;
}

Mat LieSuperalgebra::realize(const Vec& x) const {
  Mat r(F_, mats_.front().rows(), mats_.front().cols());
  for (std::size_t i = 0; i < dim(); ++i)
    if (x[i].v != 0) r = r + mats_[i].scaled(x[i]);
  return r;
}

Vec LieSuperalgebra::bracket(const Vec& x, const Vec& y) const {
  Vec r(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].v == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j].v == 0) continue;
      r = vaxpy(F_, r, F_.mul(x[i], y[j]), bracket(i, j));
    }
  }
  return r;
}

const Vec& LieSuperalgebra::p_power(std::size_t i) const {
  if (basis_[i].parity != 0) throw AlgebraError("p-power of an odd basis vector");
  return pmap_[i];
}

Vec LieSuperalgebra::p_power(const Vec& x) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (x[i].v != 0 && basis_[i].parity != 0) throw AlgebraError("p-power of a non-even element");
  return coords_of(realize(x).pow(F_.p()));
}

Elem LieSuperalgebra::form(const Vec& x, const Vec& y) const {
  Elem s = F_.zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].v == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (y[j].v != 0 && form_(i, j).v != 0) s = F_.add(s, F_.mul(F_.mul(x[i], y[j]), form_(i, j)));
  }
  return s;
}

Mat LieSuperalgebra::ad(std::size_t i) const {
  Mat m(F_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    const Vec& c = bracket(i, j);
    for (std::size_t k = 0; k < dim(); ++k) m(k, j) = c[k];
  }
  return m;
}

Mat LieSuperalgebra::ad(const Vec& x) const {
  Mat m(F_, dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (x[i].v != 0) m = m + ad(i).scaled(x[i]);
  return m;
}

std::vector<Elem> LieSuperalgebra::weight_on_cartan(const Weight& w) const {
  std::vector<Elem> out;
  for (auto h : cartan_) {
    Elem s = F_.zero();
    for (std::size_t c = 0; c < w.size(); ++c)
      if (w[c] != Rational(0)) s = F_.add(s, F_.mul(to_field(F_, w[c]), mats_[h](coord_slot_[c], coord_slot_[c])));
    out.push_back(s);
  }
  return out;
}

Vec LieSuperalgebra::coroot(const Weight& a) const {
  const std::size_t r = cartan_.size();
  Mat G(F_, r, r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = 0; l < r; ++l) G(k, l) = form_(cartan_[k], cartan_[l]);
  const auto vals = weight_on_cartan(a);
  auto sol = solve(G, Vec(vals.begin(), vals.end()));
  if (!sol) throw AlgebraError("form is degenerate on the Cartan subalgebra");
  Vec t(dim());
  for (std::size_t k = 0; k < r; ++k) t[cartan_[k]] = (*sol)[k];
  if (rs_->is_isotropic(a)) return t;
  Elem n = F_.zero();
  for (std::size_t k = 0; k < r; ++k) n = F_.add(n, F_.mul((*sol)[k], vals[k]));
  if (n.v == 0) throw AlgebraError("non-isotropic root " + rs_->format(a) + " has vanishing norm mod p");
  return vscale(F_, F_.div(F_.from_int(2), n), t);
}

PCharacter LieSuperalgebra::character_on_cartan(const std::vector<Elem>& vals) const {
  if (vals.size() != cartan_.size()) throw AlgebraError("wrong number of Cartan values");
  PCharacter chi{Vec(dim())};
  for (std::size_t k = 0; k < cartan_.size(); ++k) chi.values[cartan_[k]] = vals[k];
  return chi;
}

PCharacter LieSuperalgebra::character_zero() const { return PCharacter{Vec(dim())}; }

LieSuperalgebra LieSuperalgebra::extend(const Field& F2) const {
  LieSuperalgebra g(*this);
  g.F_ = F2;
  auto mv = [&](const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = F2.embed_from(F_, v[i]);
    return r;
  };
  auto mm = [&](const Mat& m) {
    Mat r(F2, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = F2.embed_from(F_, m(i, j));
    return r;
  };
  for (auto& m : g.mats_) m = mm(m);
  for (auto& v : g.table_) v = mv(v);
  for (auto& v : g.pmap_) v = mv(v);
  g.form_ = mm(form_);
  g.probe_inv_ = mm(probe_inv_);
  return g;
}

ValidationReport LieSuperalgebra::validate() const {
  ValidationReport rep;
  auto fail = [&](const std::string& s) {
    rep.ok = false;
    if (rep.failures.size() < 20) rep.failures.push_back(s);
  };
  const std::size_t d = dim();
  auto sgn = [&](int a, int b) { return (a & b) ? F_.neg(F_.one()) : F_.one(); };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vec lhs = bracket(i, j);
      const Vec rhs = vscale(F_, F_.neg(sgn(parity(i), parity(j))), bracket(j, i));
      if (lhs != rhs) fail("skew-symmetry fails for " + basis_[i].name + ", " + basis_[j].name);
      for (std::size_t k = 0; k < d; ++k) {
        const Vec a = bracket(unit(i), bracket(j, k));
        const Vec b = bracket(bracket(i, j), unit(k));
        const Vec c = vscale(F_, sgn(parity(i), parity(j)), bracket(unit(j), bracket(i, k)));
        if (a != vadd(F_, b, c)) fail("Jacobi fails for " + basis_[i].name + ", " + basis_[j].name + ", " + basis_[k].name);
      }
    }
  for (std::size_t i = 0; i < d; ++i)
    if (parity(i) == 0 && !(ad(p_power(i)) == ad(i).pow(F_.p())))
      fail("restrictedness fails for " + basis_[i].name);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (parity(i) != parity(j) && form_(i, j).v != 0) fail("form is not even");
      if (form_(i, j) != F_.mul(sgn(parity(i), parity(j)), form_(j, i))) fail("form is not supersymmetric");
      for (std::size_t k = 0; k < d; ++k)
        if (form(bracket(i, j), unit(k)) != form(unit(i), bracket(j, k)))
          fail("form is not invariant on " + basis_[i].name + ", " + basis_[j].name + ", " + basis_[k].name);
    }
  if (rank(form_) != d) fail("form is degenerate");
  return rep;
}

std::string LieSuperalgebra::describe() const { return spec_.label() + " over " + F_.describe(); }

Centralizer centralizer(const LieSuperalgebra& g, const PCharacter& chi) {
  const Field& F = g.field();
  Centralizer out;
  for (int par : {0, 1}) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < g.dim(); ++i)
      if (g.parity(i) == par) idx.push_back(i);
    // A^T c = 0 where A[y][j] = chi([b_y, b_j]).
    Mat AT(F, g.dim(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t j = 0; j < g.dim(); ++j) AT(j, a) = dot(F, chi.values, g.bracket(idx[a], j));
    const auto ker = kernel(AT);
    for (const auto& k : ker) {
      Vec y(g.dim());
      for (std::size_t a = 0; a < idx.size(); ++a) y[idx[a]] = k[a];
      out.basis.push_back(y);
    }
    (par == 0 ? out.d0 : out.d1) = idx.size() - ker.size();
  }
  return out;
}

PCharacter character_from_element(const LieSuperalgebra& g, const Vec& y) {
  const Field& F = g.field();
  std::vector<std::size_t> even;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (g.parity(i) == 0)
      even.push_back(i);
    else if (y[i].v != 0)
      throw AlgebraError("element is not even");
  }
  Mat fe(F, even.size(), even.size());
  for (std::size_t a = 0; a < even.size(); ++a)
    for (std::size_t b = 0; b < even.size(); ++b) fe(a, b) = g.form()(even[a], even[b]);
  if (rank(fe) != even.size()) throw AlgebraError("form is degenerate on the even part");
  PCharacter chi{Vec(g.dim())};
  for (auto i : even) chi.values[i] = g.form(y, g.unit(i));
  return chi;
}

ElementKind classify_element(const LieSuperalgebra& g, const Vec& y) {
  const Mat Y = g.realize(y);
  const std::size_t D = Y.rows();
  if (Y.pow(D).is_zero()) return ElementKind::Nilpotent;
  std::uint64_t L = 1;
  for (std::uint64_t i = 2; i <= D; ++i) L = std::lcm(L, i);
  Mat Z = Y;
  for (std::uint64_t s = 0; s < L * static_cast<std::uint64_t>(g.field().k()); ++s) Z = Z.pow(g.field().p());
  return Z == Y ? ElementKind::Semisimple : ElementKind::Mixed;
}

bool is_standard(const LieSuperalgebra& g, const PCharacter& chi) {
  for (const auto& rv : g.root_vectors())
    if (chi.values[rv.index].v != 0) return false;
  return true;
}

bool is_regular_semisimple(const LieSuperalgebra& g, const PCharacter& chi) {
  if (!is_standard(g, chi))
    throw AlgebraError("p-character does not vanish on root vectors; conjugate it into standard form first");
  const Field& F = g.field();
  for (const auto& rv : g.root_vectors())
    if (dot(F, chi.values, g.coroot(rv.root)).v == 0) return false;
  return true;
}

PCharacter conjugate_character(const LieSuperalgebra& g, const PCharacter& chi, const Vec& x) {
  const Field& F = g.field();
  const Mat A = g.ad(x);
  if (!A.pow(F.p()).is_zero()) throw AlgebraError("ad x is not nilpotent of order below p");
  Mat E = Mat::identity(F, g.dim());
  Mat P = Mat::identity(F, g.dim());
  Elem fact = F.one();
  for (std::uint32_t k = 1; k < F.p(); ++k) {
    P = P * A;
    fact = F.mul(fact, F.from_int(k));
    E = E + P.scaled(F.inv(fact));
  }
  PCharacter out{Vec(g.dim())};
  for (std::size_t i = 0; i < g.dim(); ++i) out.values[i] = dot(F, chi.values, E.col(i));
  return out;
}

std::vector<StructureConstant> structure_constants(const LieSuperalgebra& g) {
  std::vector<StructureConstant> out;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      const Vec& c = g.bracket(i, j);
      for (std::size_t k = 0; k < g.dim(); ++k)
        if (c[k].v != 0) out.push_back({i, j, k, c[k]});
    }
  return out;
}

std::optional<PCharacter> find_semisimple_character(const LieSuperalgebra& g, bool regular, SplitMix64* rng) {
  const Field& F = g.field();
  const std::size_t r = g.cartan().size();
  auto test = [&](const std::vector<Elem>& v) -> std::optional<PCharacter> {
    bool nonzero = false;
    for (Elem e : v) nonzero |= e.v != 0;
    if (!nonzero) return std::nullopt;
    PCharacter chi = g.character_on_cartan(v);
    if (is_regular_semisimple(g, chi) == regular) return chi;
    return std::nullopt;
  };
  std::vector<Elem> v(r, F.zero());
  if (rng) {
    for (int t = 0; t < 4096; ++t) {
      for (auto& e : v) e = Elem{static_cast<std::uint32_t>(rng->below(F.q()))};
      if (auto c = test(v)) return c;
    }
    return std::nullopt;
  }
  while (true) {
    if (auto c = test(v)) return c;
    std::size_t i = r;
    while (i > 0 && ++v[i - 1].v == F.q()) v[--i].v = 0;
    if (i == 0) return std::nullopt;
  }
}

}  // namespace modsuper
