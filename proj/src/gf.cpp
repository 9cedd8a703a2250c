#include "modsuper/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace modsuper {

namespace {

using Poly = std::vector<int>;  // low-to-high, coefficients in [0, p)

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
  int r = 1;
  int base = a % p;
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = static_cast<int>(static_cast<long long>(r) * base % p);
    base = static_cast<int>(static_cast<long long>(base) * base % p);
  }
  return r;
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  const int lead_inv = inv_mod(m.back(), p);
  while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int c = static_cast<int>(static_cast<long long>(a.back()) * lead_inv % p);
    for (int i = 0; i <= dm; ++i) {
      auto& t = a[i + shift];
      t = static_cast<int>(((t - static_cast<long long>(c) * m[i]) % p + p) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<int>((r[i + j] + static_cast<long long>(a[i]) * b[j]) % p);
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, int p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// f monic of degree k: irreducible iff gcd(x^{p^i} - x, f) = 1 for 1 <= i <= k/2.
bool irreducible(const Poly& f, int p) {
  const int k = static_cast<int>(f.size()) - 1;
  if (k <= 0) return false;
  if (k == 1) return true;
  Poly xp{0, 1};
  for (int i = 1; i <= k / 2; ++i) {
    xp = poly_powmod(xp, static_cast<std::uint64_t>(p), f, p);
    Poly d = xp;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (d[1] - 1 + p) % p;
    trim(d);
    if (d.empty()) return false;  // f divides x^{p^i} - x
    Poly g = poly_gcd(f, d, p);
    if (g.size() > 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<std::uint32_t>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

constexpr std::uint32_t kMaxFieldSize = 1u << 22;
constexpr std::uint32_t kAddTableLimit = 729;

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::shared_ptr<const Field::Impl> Field::build(std::uint32_t p, std::vector<int> modulus) {
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->k = static_cast<int>(modulus.size()) - 1;
  impl->modulus = std::move(modulus);
  std::uint64_t q = 1;
  impl->pow_p.push_back(1);
  for (int i = 0; i < impl->k; ++i) {
    q *= p;
    if (q > kMaxFieldSize) throw FieldError("field GF(" + std::to_string(p) + "^" + std::to_string(impl->k) + ") is too large");
    impl->pow_p.push_back(static_cast<std::uint32_t>(q));
  }
  impl->q = static_cast<std::uint32_t>(q);
  const int k = impl->k;
  const Poly& m = impl->modulus;

  auto to_poly = [&](std::uint32_t a) {
    Poly r(k);
    for (int i = 0; i < k; ++i) {
      r[i] = static_cast<int>(a % p);
      a /= p;
    }
    trim(r);
    return r;
  };
  auto from_poly = [&](const Poly& a) {
    std::uint32_t r = 0;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) r = r * p + static_cast<std::uint32_t>(a[i]);
    return r;
  };

  // Primitive element search; the multiplicative group is cyclic of order q-1.
  const std::uint32_t order = impl->q - 1;
  const auto factors = prime_factors(order);
  std::uint32_t g = 0;
  for (std::uint32_t cand = (impl->q == 2 ? 1 : 2); cand < impl->q; ++cand) {
    Poly c = to_poly(cand);
    bool primitive = true;
    for (auto f : factors) {
      Poly r = poly_powmod(c, order / f, m, static_cast<int>(p));
      if (r.size() == 1 && r[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }
  if (order == 1) g = 1;
  if (g == 0) throw FieldError("no primitive element found; modulus not irreducible?");

  impl->exp.resize(2 * static_cast<std::size_t>(order));
  impl->log.assign(impl->q, 0);
  Poly gp = to_poly(g);
  Poly cur{1};
  for (std::uint32_t i = 0; i < order; ++i) {
    const std::uint32_t e = from_poly(cur);
    impl->exp[i] = e;
    impl->exp[i + order] = e;
    impl->log[e] = i;
    cur = poly_mulmod(cur, gp, m, static_cast<int>(p));
  }

  impl->neg_table.resize(impl->q);
  for (std::uint32_t a = 0; a < impl->q; ++a) {
    std::uint32_t r = 0, aa = a;
    for (int i = 0; i < k; ++i) {
      const std::uint32_t d = aa % p;
      aa /= p;
      r += ((p - d) % p) * impl->pow_p[i];
    }
    impl->neg_table[a] = r;
  }
  if (impl->q <= kAddTableLimit) {
    impl->add_table.resize(static_cast<std::size_t>(impl->q) * impl->q);
    for (std::uint32_t a = 0; a < impl->q; ++a)
      for (std::uint32_t b = 0; b < impl->q; ++b) {
        std::uint32_t r = 0, aa = a, bb = b;
        for (int i = 0; i < k; ++i) {
          r += ((aa % p + bb % p) % p) * impl->pow_p[i];
          aa /= p;
          bb /= p;
        }
        impl->add_table[static_cast<std::size_t>(a) * impl->q + b] = r;
      }
  }
  return impl;
}

Field Field::create(std::int64_t p, int k) {
  if (!is_prime(p)) throw FieldError("field characteristic " + std::to_string(p) + " is not prime");
  if (p == 2) throw FieldError("characteristic 2 is excluded (p must be > 2)");
  if (k < 1) throw FieldError("extension degree must be >= 1, got " + std::to_string(k));

  static std::mutex mu;
  static std::map<std::pair<std::int64_t, int>, std::shared_ptr<const Impl>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find({p, k}); it != cache.end()) return Field(it->second);
  }

  const int pi = static_cast<int>(p);
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    total *= static_cast<std::uint64_t>(p);
    if (total > kMaxFieldSize) throw FieldError("field GF(" + std::to_string(p) + "^" + std::to_string(k) + ") is too large");
  }
  Poly chosen;
  for (std::uint64_t n = 0; n < total; ++n) {
    Poly f(k + 1, 0);
    std::uint64_t t = n;
    for (int i = 0; i < k; ++i) {
      f[i] = static_cast<int>(t % p);
      t /= p;
    }
    f[k] = 1;
    if (irreducible(f, pi)) {
      chosen = f;
      break;
    }
  }
  auto impl = build(static_cast<std::uint32_t>(p), chosen);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(p, k), impl);
  return Field(impl);
}

Field Field::with_modulus(std::int64_t p, std::vector<int> modulus) {
  if (!is_prime(p) || p == 2) throw FieldError("characteristic must be an odd prime");
  if (modulus.size() < 2 || modulus.back() != 1) throw FieldError("modulus must be monic of degree >= 1");
  for (auto& c : modulus) c = static_cast<int>(((c % p) + p) % p);
  if (!irreducible(modulus, static_cast<int>(p))) throw FieldError("modulus is reducible");
  return Field(build(static_cast<std::uint32_t>(p), std::move(modulus)));
}

bool Field::operator==(const Field& o) const {
  if (impl_ == o.impl_) return true;
  return impl_->p == o.impl_->p && impl_->modulus == o.impl_->modulus;
}

Elem Field::gen() const {
  if (k() == 1) return from_int(-modulus()[0]);  // root of x + c
  return Elem{p()};
}

Elem Field::from_int(std::int64_t n) const {
  const auto pp = static_cast<std::int64_t>(p());
  return Elem{static_cast<std::uint32_t>(((n % pp) + pp) % pp)};
}

Elem Field::from_coeffs(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) > k()) throw FieldError("too many coefficients for GF(p^k)");
  std::uint32_t r = 0;
  const auto pp = static_cast<int>(p());
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) r = r * p() + static_cast<std::uint32_t>(((c[i] % pp) + pp) % pp);
  return Elem{r};
}

std::vector<int> Field::coeffs(Elem a) const {
  std::vector<int> r(k());
  std::uint32_t v = a.v;
  for (int i = 0; i < k(); ++i) {
    r[i] = static_cast<int>(v % p());
    v /= p();
  }
  return r;
}

std::optional<std::uint32_t> Field::as_prime(Elem a) const {
  if (a.v < p()) return a.v;
  return std::nullopt;
}

Elem Field::add(Elem a, Elem b) const {
  const auto& I = *impl_;
  if (I.k == 1) {
    const std::uint32_t s = a.v + b.v;
    return Elem{s >= I.p ? s - I.p : s};
  }
  if (!I.add_table.empty()) return Elem{I.add_table[static_cast<std::size_t>(a.v) * I.q + b.v]};
  std::uint32_t r = 0;
  for (int i = 0; i < I.k; ++i) {
    std::uint32_t d = a.v % I.p + b.v % I.p;
    if (d >= I.p) d -= I.p;
    r += d * I.pow_p[i];
    a.v /= I.p;
    b.v /= I.p;
  }
  return Elem{r};
}

Elem Field::neg(Elem a) const { return Elem{impl_->neg_table[a.v]}; }

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  if (a.v == 0 || b.v == 0) return Elem{0};
  const auto& I = *impl_;
  if (I.k == 1) return Elem{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % I.p)};
  return Elem{I.exp[I.log[a.v] + I.log[b.v]]};
}

Elem Field::inv(Elem a) const {
  if (a.v == 0) throw FieldError("division by zero in " + describe());
  const auto& I = *impl_;
  const std::uint32_t order = I.q - 1;
  return Elem{I.exp[(order - I.log[a.v]) % order]};
}

Elem Field::pow(Elem a, std::int64_t e) const {
  const std::int64_t order = static_cast<std::int64_t>(q()) - 1;
  if (a.v == 0) {
    if (e == 0) return one();
    if (e < 0) throw FieldError("zero raised to a negative power");
    return zero();
  }
  const auto& I = *impl_;
  std::int64_t r = (static_cast<std::int64_t>(I.log[a.v]) * (((e % order) + order) % order)) % order;
  return Elem{I.exp[static_cast<std::size_t>(r)]};
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << p();
  if (k() > 1) os << "^" << k();
  os << ")";
  return os.str();
}

std::string Field::format(Elem a) const {
  if (k() == 1) return std::to_string(a.v);
  auto c = coeffs(a);
  std::ostringstream os;
  bool first = true;
  for (int i = k() - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

Elem Field::embed_from(const Field& sub, Elem a) const {
  if (sub == *this) return a;
  if (sub.p() != p() || k() % sub.k() != 0)
    throw FieldError("cannot embed " + sub.describe() + " into " + describe());
  if (sub.k() == 1) return Elem{a.v};
  // Smallest root of sub's modulus in this field fixes the embedding.
  static std::mutex mu;
  static std::map<std::pair<const void*, const void*>, Elem> roots;
  Elem root{0};
  bool found = false;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = roots.find({sub.impl_.get(), impl_.get()}); it != roots.end()) {
      root = it->second;
      found = true;
    }
  }
  if (!found) {
    const auto& m = sub.modulus();
    for (std::uint32_t r = 0; r < q() && !found; ++r) {
      Elem acc = zero();
      for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i) acc = add(mul(acc, Elem{r}), from_int(m[i]));
      if (acc.v == 0) {
        root = Elem{r};
        found = true;
      }
    }
    if (!found) throw FieldError("modulus has no root in target field");
    std::lock_guard<std::mutex> lock(mu);
    roots[{sub.impl_.get(), impl_.get()}] = root;
  }
  auto c = sub.coeffs(a);
  Elem acc = zero();
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) acc = add(mul(acc, root), from_int(c[i]));
  return acc;
}

void FieldElement::check_same(const FieldElement& b) const {
  if (field_ != b.field_)
    throw FieldError("mixed fields: " + field_.describe() + " and " + b.field_.describe());
}

FieldElement FieldElement::operator+(const FieldElement& b) const {
  check_same(b);
  return {field_, field_.add(e_, b.e_)};
}
FieldElement FieldElement::operator-(const FieldElement& b) const {
  check_same(b);
  return {field_, field_.sub(e_, b.e_)};
}
FieldElement FieldElement::operator*(const FieldElement& b) const {
  check_same(b);
  return {field_, field_.mul(e_, b.e_)};
}
FieldElement FieldElement::operator/(const FieldElement& b) const {
  check_same(b);
  return {field_, field_.div(e_, b.e_)};
}
bool FieldElement::operator==(const FieldElement& b) const { return field_ == b.field_ && e_ == b.e_; }

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op, std::int64_t n) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
    case ArithOp::Pow: return a.pow(n);
    case ArithOp::Neg: return -a;
    case ArithOp::Inv: return a.inv();
  }
  throw FieldError("unknown arithmetic op");
}

ArtinSchreierResult artin_schreier_solve(const Field& F, Elem c) {
  const int k = F.k();
  const int p = static_cast<int>(F.p());
  // Augmented k x (k+1) system over GF(p): columns are images of x^i.
  std::vector<std::vector<int>> A(k, std::vector<int>(k + 1, 0));
  for (int i = 0; i < k; ++i) {
    std::vector<int> basis(k, 0);
    basis[i] = 1;
    const Elem b = F.from_coeffs(basis);
    const auto img = F.coeffs(F.sub(F.frobenius(b), b));
    for (int r = 0; r < k; ++r) A[r][i] = img[r];
  }
  const auto rhs = F.coeffs(c);
  for (int r = 0; r < k; ++r) A[r][k] = rhs[r];

  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < k && row < k; ++col) {
    int piv = -1;
    for (int r = row; r < k; ++r)
      if (A[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(A[row], A[piv]);
    const int iv = inv_mod(A[row][col], p);
    for (auto& x : A[row]) x = static_cast<int>(static_cast<long long>(x) * iv % p);
    for (int r = 0; r < k; ++r) {
      if (r == row || A[r][col] == 0) continue;
      const int f = A[r][col];
      for (int cc = 0; cc <= k; ++cc) A[r][cc] = static_cast<int>(((A[r][cc] - static_cast<long long>(f) * A[row][cc]) % p + p) % p);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int r = row; r < k; ++r)
    if (A[r][k] != 0) return {{}, true};

  // Kernel of t -> t^p - t is exactly GF(p), so the solution set is t0 + GF(p).
  std::vector<int> t0(k, 0);
  for (int r = 0; r < row; ++r) t0[pivot_col[r]] = A[r][k];
  const Elem base = F.from_coeffs(t0);
  ArtinSchreierResult res;
  for (int a = 0; a < p; ++a) res.solutions.push_back(F.add(base, F.from_int(a)));
  std::sort(res.solutions.begin(), res.solutions.end());
  return res;
}

}  // namespace modsuper
