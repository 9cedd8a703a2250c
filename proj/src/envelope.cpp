#include "modsuper/envelope.hpp"

#include <numeric>
#include <sstream>

namespace modsuper {

DeformedAlgebra::DeformedAlgebra(std::shared_ptr<const LieSuperalgebra> g, PCharacter xi, Elem lambda,
                                 std::vector<std::size_t> order)
    : g_(std::move(g)), xi_(std::move(xi)), lambda_(lambda), order_(std::move(order)) {
  const Field& F = g_->field();
  const std::size_t n = g_->dim();
  if (order_.empty()) {
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
  }
  if (order_.size() != n) throw AlgebraError("PBW order must list every basis vector once");
  pos_of_.assign(n, n);
  for (std::size_t p = 0; p < n; ++p) {
    if (order_[p] >= n || pos_of_[order_[p]] != n) throw AlgebraError("PBW order is not a permutation");
    pos_of_[order_[p]] = p;
  }
  if (xi_.values.size() != n) throw AlgebraError("character has the wrong length");
  for (std::size_t i = 0; i < n; ++i)
    if (g_->parity(i) == 1 && xi_.values[i].v != 0) throw AlgebraError("character must vanish on the odd part");
  bound_.resize(n);
  par_.resize(n);
  stride_.assign(n, 1);
  xi_pow_p_.resize(n);
  for (std::size_t p = 0; p < n; ++p) {
    par_[p] = g_->parity(order_[p]);
    bound_[p] = par_[p] ? 2 : static_cast<int>(F.p());
    xi_pow_p_[p] = F.pow(xi_.values[order_[p]], F.p());
  }
  for (std::size_t p = n; p-- > 0;) {
    stride_[p] = dim_;
    dim_ *= static_cast<std::uint64_t>(bound_[p]);
  }
  half_lambda_ = F.div(lambda_, F.from_int(2));
}

std::vector<int> DeformedAlgebra::exponents(std::uint64_t m) const {
  std::vector<int> e(num_vars());
  for (std::size_t p = 0; p < num_vars(); ++p) e[p] = exponent(m, p);
  return e;
}

std::uint64_t DeformedAlgebra::encode(const std::vector<int>& e) const {
  std::uint64_t m = 0;
  for (std::size_t p = 0; p < num_vars(); ++p) {
    if (e[p] < 0 || e[p] >= bound_[p]) throw AlgebraError("exponent outside PBW bounds");
    m += static_cast<std::uint64_t>(e[p]) * stride_[p];
  }
  return m;
}

int DeformedAlgebra::degree(std::uint64_t m) const {
  int d = 0;
  for (std::size_t p = 0; p < num_vars(); ++p) d += exponent(m, p);
  return d;
}

int DeformedAlgebra::parity(std::uint64_t m) const {
  int s = 0;
  for (std::size_t p = 0; p < num_vars(); ++p)
    if (par_[p]) s += exponent(m, p);
  return s & 1;
}

AlgebraElement DeformedAlgebra::one() const { return monomial(0, field().one()); }

AlgebraElement DeformedAlgebra::monomial(std::uint64_t m, Elem c) const {
  AlgebraElement r;
  if (c.v != 0) r.terms[m] = c;
  return r;
}

AlgebraElement DeformedAlgebra::generator(std::size_t basis_index) const {
  return monomial(stride_[pos_of_[basis_index]], field().one());
}

AlgebraElement DeformedAlgebra::from_g(const Vec& x) const {
  AlgebraElement r;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i].v != 0) r.terms[stride_[pos_of_[i]]] = x[i];
  return r;
}

void DeformedAlgebra::accumulate(AlgebraElement& acc, Elem c, const AlgebraElement& t) const {
  if (c.v == 0) return;
  const Field& F = field();
  for (const auto& [m, v] : t.terms) {
    auto it = acc.terms.find(m);
    const Elem add = F.mul(c, v);
    if (it == acc.terms.end()) {
      acc.terms.emplace(m, add);
    } else {
      it->second = F.add(it->second, add);
      if (it->second.v == 0) acc.terms.erase(it);
    }
  }
}

AlgebraElement DeformedAlgebra::add(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement r = a;
  accumulate(r, field().one(), b);
  return r;
}

AlgebraElement DeformedAlgebra::sub(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement r = a;
  accumulate(r, field().neg(field().one()), b);
  return r;
}

AlgebraElement DeformedAlgebra::scale(Elem s, const AlgebraElement& a) const {
  AlgebraElement r;
  accumulate(r, s, a);
  return r;
}

const AlgebraElement& DeformedAlgebra::gen_mul(std::size_t pos, std::uint64_t m) const {
  const std::uint64_t key = static_cast<std::uint64_t>(pos) * dim_ + m;
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  AlgebraElement r = gen_mul_uncached(pos, m);
  return cache_.emplace(key, std::move(r)).first->second;
}

AlgebraElement DeformedAlgebra::g_elem_times_monomial(const Vec& x, std::uint64_t m) const {
  AlgebraElement r;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i].v != 0) accumulate(r, x[i], gen_mul(pos_of_[i], m));
  return r;
}

AlgebraElement DeformedAlgebra::gen_mul_uncached(std::size_t a, std::uint64_t m) const {
  const Field& F = field();
  std::size_t j = 0;
  while (j < num_vars() && exponent(m, j) == 0) ++j;
  if (j > a) return monomial(m + stride_[a], F.one());
  if (j == a) {
    const int e = exponent(m, a);
    if (e + 1 < bound_[a]) return monomial(m + stride_[a], F.one());
    const std::uint64_t rest = m - static_cast<std::uint64_t>(e) * stride_[a];
    AlgebraElement r;
    if (par_[a] == 0) {
      // x^p = lambda^{p-1} x^{[p]} + xi(x)^p
      const Elem lp = F.pow(lambda_, F.p() - 1);
      if (lp.v != 0) accumulate(r, lp, g_elem_times_monomial(g_->p_power(order_[a]), rest));
      if (xi_pow_p_[a].v != 0) accumulate(r, xi_pow_p_[a], monomial(rest, F.one()));
    } else {
      // y^2 = (lambda/2) [y, y]
      if (half_lambda_.v != 0) accumulate(r, half_lambda_, g_elem_times_monomial(g_->bracket(order_[a], order_[a]), rest));
    }
    return r;
  }
  // a > j: x_a x_j m1 = s x_j (x_a m1) + lambda [x_a, x_j] m1
  const std::uint64_t m1 = m - stride_[j];
  AlgebraElement r;
  const AlgebraElement inner = gen_mul(a, m1);
  const Elem s = (par_[a] & par_[j]) ? F.neg(F.one()) : F.one();
  for (const auto& [mm, c] : inner.terms) accumulate(r, F.mul(s, c), gen_mul(j, mm));
  if (lambda_.v != 0) accumulate(r, lambda_, g_elem_times_monomial(g_->bracket(order_[a], order_[j]), m1));
  return r;
}

AlgebraElement DeformedAlgebra::left_mul_generator(std::size_t basis_index, const AlgebraElement& u) const {
  AlgebraElement r;
  const std::size_t pos = pos_of_[basis_index];
  for (const auto& [m, c] : u.terms) accumulate(r, c, gen_mul(pos, m));
  return r;
}

AlgebraElement DeformedAlgebra::multiply(const AlgebraElement& u, const AlgebraElement& v) const {
  AlgebraElement r;
  for (const auto& [m, c] : u.terms) {
    AlgebraElement w = v;
    for (std::size_t p = num_vars(); p-- > 0;) {
      const int e = exponent(m, p);
      for (int k = 0; k < e; ++k) {
        AlgebraElement next;
        for (const auto& [mm, cc] : w.terms) accumulate(next, cc, gen_mul(p, mm));
        w = std::move(next);
      }
    }
    accumulate(r, c, w);
  }
  return r;
}

AlgebraElement DeformedAlgebra::g_action(std::size_t b, const AlgebraElement& u) const {
  const Field& F = field();
  const int pb = g_->parity(b);
  AlgebraElement r;
  for (const auto& [m, c] : u.terms) {
    // Word of the monomial: positions in order with multiplicity.
    std::vector<std::size_t> word;
    for (std::size_t p = 0; p < num_vars(); ++p)
      for (int k = 0; k < exponent(m, p); ++k) word.push_back(p);
    std::uint64_t prefix = 0;
    int prefix_par = 0;
    std::uint64_t suffix = m;
    for (std::size_t k = 0; k < word.size(); ++k) {
      const std::size_t p = word[k];
      suffix -= stride_[p];
      const Elem sign = (pb & prefix_par) ? F.neg(F.one()) : F.one();
      AlgebraElement mid = g_elem_times_monomial(g_->bracket(b, order_[p]), suffix);
      accumulate(r, F.mul(sign, c), multiply(monomial(prefix, F.one()), mid));
      prefix += stride_[p];
      prefix_par ^= par_[p];
    }
  }
  return r;
}

int DeformedAlgebra::parity(const AlgebraElement& u) const {
  int par = -1;
  for (const auto& [m, c] : u.terms) {
    const int q = parity(m);
    if (par >= 0 && q != par) throw AlgebraError("element is not homogeneous");
    par = q;
  }
  return par < 0 ? 0 : par;
}

Mat DeformedAlgebra::left_mult_matrix(std::size_t basis_index, std::uint64_t cap) const {
  if (dim_ > cap) throw AlgebraError("algebra dimension exceeds the matrix cap");
  Mat M(field(), dim_, dim_);
  const std::size_t pos = pos_of_[basis_index];
  for (std::uint64_t m = 0; m < dim_; ++m)
    for (const auto& [mm, c] : gen_mul(pos, m).terms) M(mm, m) = c;
  return M;
}

Mat DeformedAlgebra::action_matrix(std::size_t basis_index, std::uint64_t cap) const {
  if (dim_ > cap) throw AlgebraError("algebra dimension exceeds the matrix cap");
  Mat M(field(), dim_, dim_);
  for (std::uint64_t m = 0; m < dim_; ++m)
    for (const auto& [mm, c] : g_action(basis_index, monomial(m, field().one())).terms) M(mm, m) = c;
  return M;
}

Vec DeformedAlgebra::to_vec(const AlgebraElement& u) const {
  Vec v(dim_);
  for (const auto& [m, c] : u.terms) v[m] = c;
  return v;
}

AlgebraElement DeformedAlgebra::from_vec(const Vec& v) const {
  AlgebraElement r;
  for (std::uint64_t m = 0; m < v.size(); ++m)
    if (v[m].v != 0) r.terms[m] = v[m];
  return r;
}

std::string DeformedAlgebra::format(const AlgebraElement& u) const {
  if (u.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : u.terms) {
    if (!first) os << " + ";
    first = false;
    os << field().format(c);
    for (std::size_t p = 0; p < num_vars(); ++p) {
      const int e = exponent(m, p);
      if (e == 0) continue;
      os << "*" << g_->basis()[order_[p]].name;
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

AlgebraElement DeformedAlgebra::random_element(SplitMix64& rng, int terms) const {
  AlgebraElement r;
  const Field& F = field();
  for (int i = 0; i < terms; ++i) {
    const Elem c{static_cast<std::uint32_t>(1 + rng.below(F.q() - 1))};
    accumulate(r, c, monomial(rng.below(dim_), F.one()));
  }
  return r;
}

std::shared_ptr<DeformedAlgebra> specialize(std::shared_ptr<const LieSuperalgebra> g, const PCharacter& xi, Elem lambda) {
  return std::make_shared<DeformedAlgebra>(std::move(g), xi, lambda);
}

AlgebraElement theta_map(const DeformedAlgebra& src, const AlgebraElement& u, Elem t) {
  const Field& F = src.field();
  if (t.v == 0) throw AlgebraError("theta requires t != 0");
  const Elem ti = F.inv(t);
  AlgebraElement r;
  for (const auto& [m, c] : u.terms) r.terms[m] = F.mul(c, F.pow(ti, src.degree(m)));
  return r;
}

ThetaReport theta_check(const DeformedAlgebra& src, Elem t, SplitMix64& rng, int random_pairs) {
  const Field& F = src.field();
  if (t.v == 0) throw AlgebraError("theta requires t != 0");
  PCharacter txi{vscale(F, t, src.xi().values)};
  std::vector<std::size_t> order;
  for (std::size_t p = 0; p < src.num_vars(); ++p) order.push_back(src.var_basis(p));
  DeformedAlgebra dst(src.g_ptr(), txi, F.mul(t, src.lambda()), order);
  ThetaReport rep;
  auto check = [&](const AlgebraElement& u, const AlgebraElement& v, const std::string& what) {
    ++rep.checks;
    const auto lhs = theta_map(src, src.multiply(u, v), t);
    const auto rhs = dst.multiply(theta_map(src, u, t), theta_map(src, v, t));
    if (!(lhs == rhs)) rep.violations.push_back(what);
  };
  const auto& g = src.g();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      check(src.generator(i), src.generator(j), g.basis()[i].name + "*" + g.basis()[j].name);
  // p-th powers of even generators exercise the restricted relation.
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (g.parity(i) != 0) continue;
    AlgebraElement pw = src.one();
    for (std::uint32_t k = 0; k + 1 < F.p(); ++k) pw = src.multiply(pw, src.generator(i));
    check(pw, src.generator(i), g.basis()[i].name + "^p");
  }
  for (int k = 0; k < random_pairs; ++k) check(src.random_element(rng), src.random_element(rng), "random pair");
  return rep;
}

}  // namespace modsuper
