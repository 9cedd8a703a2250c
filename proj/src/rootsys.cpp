#include "modsuper/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <regex>
#include <sstream>

namespace modsuper {

namespace {

Weight unit(std::size_t n, std::size_t i, Rational c = 1) {
  Weight w(n, Rational(0));
  w[i] = c;
  return w;
}

// All sign patterns s1 a + s2 b.
void add_pm_pm(std::vector<Weight>& out, const Weight& a, const Weight& b) {
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) out.push_back(wadd(wscale(s1, a), wscale(s2, b)));
}

void add_pm(std::vector<Weight>& out, const Weight& a) {
  out.push_back(a);
  out.push_back(wneg(a));
}

bool lex_greater(const Weight& a, const Weight& b) { return b < a; }

}  // namespace

Weight wadd(const Weight& a, const Weight& b) {
  Weight r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Weight wsub(const Weight& a, const Weight& b) {
  Weight r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

Weight wscale(const Rational& s, const Weight& a) {
  Weight r(a);
  for (auto& x : r) x *= s;
  return r;
}

Weight wneg(const Weight& a) { return wscale(Rational(-1), a); }

TypeSpec TypeSpec::parse(const std::string& label) {
  std::smatch mt;
  std::string s;
  for (char c : label)
    if (c != ' ') s += c;
  TypeSpec t;
  static const std::regex glsl(R"((gl|sl)\((\d+)\|(\d+)\))");
  static const std::regex osp(R"(osp\((\d+)\|(\d+)\))");
  static const std::regex bd(R"(([BD])\((\d+),(\d+)\))");
  static const std::regex c(R"(C\((\d+)\))");
  static const std::regex d21(R"(D\(2,1;(-?\d+)(?:/(\d+))?\))");
  if (std::regex_match(s, mt, glsl)) {
    t.type = mt[1] == "gl" ? SuperType::GL : SuperType::SL;
    t.m = std::stoi(mt[2]);
    t.n = std::stoi(mt[3]);
    if (t.m + t.n < 1) throw RootSystemError("gl/sl needs m + n >= 1");
  } else if (std::regex_match(s, mt, osp)) {
    const int M = std::stoi(mt[1]), N = std::stoi(mt[2]);
    if (N % 2 != 0 || N == 0) throw RootSystemError("osp(M|N) needs N even and positive");
    if (M % 2 == 1) {
      t.type = SuperType::B;
      t.m = (M - 1) / 2;
      t.n = N / 2;
    } else if (M == 2) {
      t.type = SuperType::C;
      t.n = N / 2 + 1;
      t.m = 1;
    } else if (M >= 4) {
      t.type = SuperType::D;
      t.m = M / 2;
      t.n = N / 2;
    } else {
      throw RootSystemError("osp(0|N) is not basic classical");
    }
  } else if (std::regex_match(s, mt, d21)) {
    t.type = SuperType::D21;
    t.m = 2;
    t.n = 1;
    t.alpha = Rational(std::stoll(mt[1]), mt[2].matched ? std::stoll(mt[2]) : 1);
    if (t.alpha == Rational(0) || t.alpha == Rational(-1)) throw RootSystemError("D(2,1;alpha) needs alpha not in {0, -1}");
  } else if (std::regex_match(s, mt, bd)) {
    t.type = mt[1] == "B" ? SuperType::B : SuperType::D;
    t.m = std::stoi(mt[2]);
    t.n = std::stoi(mt[3]);
    if (t.n < 1) throw RootSystemError("B(m,n), D(m,n) need n >= 1");
    if (t.type == SuperType::D && t.m < 2) throw RootSystemError("D(m,n) needs m >= 2");
  } else if (std::regex_match(s, mt, c)) {
    t.type = SuperType::C;
    t.m = 1;
    t.n = std::stoi(mt[1]);
    if (t.n < 2) throw RootSystemError("C(n) needs n >= 2");
  } else if (s == "F(4)") {
    t.type = SuperType::F4;
  } else if (s == "G(3)") {
    t.type = SuperType::G3;
  } else {
    throw RootSystemError("unrecognized type label '" + label + "'");
  }
  return t;
}

std::string TypeSpec::label() const {
  std::ostringstream os;
  switch (type) {
    case SuperType::GL: os << "gl(" << m << "|" << n << ")"; break;
    case SuperType::SL: os << "sl(" << m << "|" << n << ")"; break;
    case SuperType::B: os << "osp(" << 2 * m + 1 << "|" << 2 * n << ")"; break;
    case SuperType::C: os << "osp(2|" << 2 * n - 2 << ")"; break;
    case SuperType::D: os << "osp(" << 2 * m << "|" << 2 * n << ")"; break;
    case SuperType::D21: os << "D(2,1;" << alpha.numerator();
      if (alpha.denominator() != 1) os << "/" << alpha.denominator();
      os << ")";
      break;
    case SuperType::F4: os << "F(4)"; break;
    case SuperType::G3: os << "G(3)"; break;
  }
  return os.str();
}

void check_prime(const TypeSpec& t, std::int64_t p) {
  if (!is_prime(p)) throw RootSystemError(std::to_string(p) + " is not prime");
  if (p == 2) throw RootSystemError(t.label() + ": requires p > 2");
  switch (t.type) {
    case SuperType::SL:
      if ((t.m - t.n) % p == 0) throw RootSystemError(t.label() + ": requires p not dividing m - n");
      break;
    case SuperType::D21: {
      if (p <= 3) throw RootSystemError(t.label() + ": requires p > 3");
      const auto num = ((t.alpha.numerator() % p) + p) % p;
      const auto den = ((t.alpha.denominator() % p) + p) % p;
      if (den == 0) throw RootSystemError(t.label() + ": alpha has no reduction mod p");
      if (num == 0 || (num + den) % p == 0) throw RootSystemError(t.label() + ": requires alpha mod p not in {0, -1}");
      break;
    }
    case SuperType::G3:
      if (p <= 3) throw RootSystemError(t.label() + ": requires p > 3");
      break;
    default:
      break;
  }
}

RootSystem::RootSystem(const TypeSpec& t) : spec_(t) {
  const int m = t.m, n = t.n;
  auto eps_delta = [&](int ne, int nd) {
    for (int i = 1; i <= ne; ++i) coord_names_.push_back("e" + std::to_string(i));
    for (int k = 1; k <= nd; ++k) coord_names_.push_back("d" + std::to_string(k));
    const std::size_t D = coord_names_.size();
    gram_.assign(D, std::vector<Rational>(D, Rational(0)));
    for (int i = 0; i < ne; ++i) gram_[i][i] = 1;
    for (int k = 0; k < nd; ++k) gram_[ne + k][ne + k] = -1;
  };
  switch (t.type) {
    case SuperType::GL:
    case SuperType::SL: {
      eps_delta(m, n);
      const std::size_t D = m + n;
      for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = 0; j < D; ++j) {
          if (i == j) continue;
          Weight w = wsub(unit(D, i), unit(D, j));
          const bool odd = (static_cast<int>(i) < m) != (static_cast<int>(j) < m);
          (odd ? odd_ : even_).push_back(w);
        }
      break;
    }
    case SuperType::B:
    case SuperType::C:
    case SuperType::D: {
      const int ne = t.type == SuperType::C ? 1 : m;
      const int nd = t.type == SuperType::C ? n - 1 : n;
      eps_delta(ne, nd);
      const std::size_t D = ne + nd;
      auto E = [&](int i) { return unit(D, i); };
      auto Dl = [&](int k) { return unit(D, ne + k); };
      if (t.type != SuperType::C)
        for (int i = 0; i < ne; ++i)
          for (int j = i + 1; j < ne; ++j) add_pm_pm(even_, E(i), E(j));
      if (t.type == SuperType::B)
        for (int i = 0; i < ne; ++i) add_pm(even_, E(i));
      for (int k = 0; k < nd; ++k)
        for (int l = k + 1; l < nd; ++l) add_pm_pm(even_, Dl(k), Dl(l));
      for (int k = 0; k < nd; ++k) add_pm(even_, wscale(2, Dl(k)));
      for (int i = 0; i < ne; ++i)
        for (int k = 0; k < nd; ++k) add_pm_pm(odd_, E(i), Dl(k));
      if (t.type == SuperType::B)
        for (int k = 0; k < nd; ++k) add_pm(odd_, Dl(k));
      break;
    }
    case SuperType::D21: {
      coord_names_ = {"e1", "e2", "e3"};
      gram_.assign(3, std::vector<Rational>(3, Rational(0)));
      gram_[0][0] = -(Rational(1) + t.alpha);
      gram_[1][1] = 1;
      gram_[2][2] = t.alpha;
      for (int i = 0; i < 3; ++i) add_pm(even_, unit(3, i, 2));
      for (int a : {1, -1})
        for (int b : {1, -1})
          for (int c : {1, -1}) odd_.push_back(Weight{Rational(a), Rational(b), Rational(c)});
      break;
    }
    case SuperType::F4: {
      coord_names_ = {"e1", "e2", "e3", "d"};
      gram_.assign(4, std::vector<Rational>(4, Rational(0)));
      for (int i = 0; i < 3; ++i) gram_[i][i] = 1;
      gram_[3][3] = -3;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) add_pm_pm(even_, unit(4, i), unit(4, j));
      for (int i = 0; i < 3; ++i) add_pm(even_, unit(4, i));
      add_pm(even_, unit(4, 3));
      for (int s = 0; s < 16; ++s) {
        Weight w(4);
        for (int i = 0; i < 4; ++i) w[i] = Rational((s >> i) & 1 ? -1 : 1, 2);
        odd_.push_back(w);
      }
      break;
    }
    case SuperType::G3: {
      coord_names_ = {"e1", "e2", "d"};
      gram_ = {{-2, 1, 0}, {1, -2, 0}, {0, 0, 2}};
      const std::vector<Weight> eps = {Weight{1, 0, 0}, Weight{0, 1, 0}, Weight{-1, -1, 0}};
      const Weight d{0, 0, 1};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i != j) even_.push_back(wsub(eps[i], eps[j]));
      for (int i = 0; i < 3; ++i) add_pm(even_, eps[i]);
      add_pm(even_, wscale(2, d));
      for (int i = 0; i < 3; ++i) add_pm_pm(odd_, eps[i], d);
      add_pm(odd_, d);
      break;
    }
  }
  std::sort(even_.begin(), even_.end());
  std::sort(odd_.begin(), odd_.end());
  even_set_ = std::set<Weight>(even_.begin(), even_.end());
  odd_set_ = std::set<Weight>(odd_.begin(), odd_.end());
  if (even_set_.size() != even_.size() || odd_set_.size() != odd_.size())
    throw RootSystemError("duplicate roots generated for " + t.label());
}

Rational RootSystem::form(const Weight& a, const Weight& b) const {
  Rational r(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == Rational(0)) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (gram_[i][j] != Rational(0) && b[j] != Rational(0)) r += a[i] * gram_[i][j] * b[j];
  }
  return r;
}

std::vector<Weight> RootSystem::even_bar() const {
  std::vector<Weight> out;
  for (const auto& a : even_)
    if (!is_odd(wscale(Rational(1, 2), a))) out.push_back(a);
  return out;
}

std::vector<Weight> RootSystem::odd_bar() const {
  std::vector<Weight> out;
  for (const auto& a : odd_)
    if (is_isotropic(a)) out.push_back(a);
  return out;
}

std::string RootSystem::format(const Weight& w) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Rational c = w[i];
    if (c == Rational(0)) continue;
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    const Rational a = c < 0 ? -c : c;
    if (a != Rational(1)) {
      os << a.numerator();
      if (a.denominator() != 1) os << "/" << a.denominator();
    }
    os << coord_names_[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

SimpleSystem::SimpleSystem(std::shared_ptr<const RootSystem> rs, std::vector<Weight> simple)
    : rs_(std::move(rs)), simple_(std::move(simple)) {
  std::vector<std::pair<int, Weight>> pos;
  auto consider = [&](const Weight& a) {
    const auto c = simple_coords(a);
    if (c.empty()) throw RootSystemError("root " + rs_->format(a) + " not in the span of the simple roots");
    bool nonneg = true, nonpos = true;
    Rational h(0);
    for (const auto& x : c) {
      if (x.denominator() != 1) throw RootSystemError("non-integral simple coordinates for " + rs_->format(a));
      if (x < 0) nonneg = false;
      if (x > 0) nonpos = false;
      h += x;
    }
    if (!nonneg && !nonpos) throw RootSystemError("root " + rs_->format(a) + " has mixed signs; not a simple system");
    if (nonneg) pos.emplace_back(static_cast<int>(h.numerator()), a);
  };
  for (const auto& a : rs_->even_roots()) consider(a);
  for (const auto& a : rs_->odd_roots()) consider(a);
  std::sort(pos.begin(), pos.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return lex_greater(x.second, y.second);
  });
  for (auto& [h, a] : pos) positive_.push_back(a);
  positive_set_ = std::set<Weight>(positive_.begin(), positive_.end());
  if (2 * positive_.size() != rs_->even_roots().size() + rs_->odd_roots().size())
    throw RootSystemError("positive system does not contain half of the roots");
  rho_ = Weight(rs_->dim(), Rational(0));
  for (const auto& a : positive_)
    rho_ = wadd(rho_, wscale(rs_->is_even(a) ? Rational(1, 2) : Rational(-1, 2), a));
}

std::vector<Rational> SimpleSystem::simple_coords(const Weight& w) const {
  // Gaussian elimination on the dim x (r+1) system sum c_i alpha_i = w.
  const std::size_t D = rs_->dim(), r = simple_.size();
  std::vector<std::vector<Rational>> A(D, std::vector<Rational>(r + 1, Rational(0)));
  for (std::size_t i = 0; i < D; ++i) {
    for (std::size_t j = 0; j < r; ++j) A[i][j] = simple_[j][i];
    A[i][r] = w[i];
  }
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t c = 0; c < r && row < D; ++c) {
    std::size_t p = D;
    for (std::size_t i = row; i < D; ++i)
      if (A[i][c] != Rational(0)) {
        p = i;
        break;
      }
    if (p == D) continue;
    std::swap(A[row], A[p]);
    const Rational iv = Rational(1) / A[row][c];
    for (auto& x : A[row]) x *= iv;
    for (std::size_t i = 0; i < D; ++i) {
      if (i == row || A[i][c] == Rational(0)) continue;
      const Rational f = A[i][c];
      for (std::size_t j = 0; j <= r; ++j) A[i][j] -= f * A[row][j];
    }
    piv.push_back(c);
    ++row;
  }
  if (piv.size() != r) throw RootSystemError("simple roots are linearly dependent");
  for (std::size_t i = row; i < D; ++i)
    if (A[i][r] != Rational(0)) return {};
  std::vector<Rational> out(r, Rational(0));
  for (std::size_t i = 0; i < row; ++i) out[piv[i]] = A[i][r];
  return out;
}

int SimpleSystem::height(const Weight& w) const {
  Rational h(0);
  for (const auto& x : simple_coords(w)) h += x;
  return static_cast<int>(h.numerator() / h.denominator());
}

std::vector<Weight> SimpleSystem::positive_even() const {
  std::vector<Weight> out;
  for (const auto& a : positive_)
    if (rs_->is_even(a)) out.push_back(a);
  return out;
}

std::vector<Weight> SimpleSystem::positive_odd() const {
  std::vector<Weight> out;
  for (const auto& a : positive_)
    if (rs_->is_odd(a)) out.push_back(a);
  return out;
}

std::vector<Weight> SimpleSystem::key() const {
  std::vector<Weight> k(positive_);
  std::sort(k.begin(), k.end());
  return k;
}

SimpleSystem distinguished_simple_system(std::shared_ptr<const RootSystem> rs) {
  const TypeSpec& t = rs->spec();
  Weight f(rs->dim(), Rational(0));
  switch (t.type) {
    case SuperType::GL:
    case SuperType::SL:
      for (std::size_t i = 0; i < rs->dim(); ++i) f[i] = static_cast<long long>(rs->dim() - i);
      break;
    case SuperType::B:
    case SuperType::D: {
      for (int i = 0; i < t.m; ++i) f[i] = t.m - i;
      for (int k = 0; k < t.n; ++k) f[t.m + k] = t.m + t.n - k;
      break;
    }
    case SuperType::C:
      for (std::size_t i = 0; i < rs->dim(); ++i) f[i] = static_cast<long long>(rs->dim() - i);
      break;
    case SuperType::D21: f = {6, 2, 1}; break;
    case SuperType::F4: f = {3, 2, 1, 10}; break;
    case SuperType::G3: f = {1, 2, 10}; break;
  }
  auto val = [&](const Weight& a) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += f[i] * a[i];
    return s;
  };
  std::vector<Weight> pos;
  for (const auto* set : {&rs->even_roots(), &rs->odd_roots()})
    for (const auto& a : *set) {
      const Rational v = val(a);
      if (v == Rational(0)) throw RootSystemError("distinguishing functional is not generic");
      if (v > 0) pos.push_back(a);
    }
  std::set<Weight> pset(pos.begin(), pos.end());
  std::vector<Weight> simple;
  for (const auto& a : pos) {
    bool decomposable = false;
    for (const auto& b : pos)
      if (b != a && pset.count(wsub(a, b))) {
        decomposable = true;
        break;
      }
    if (!decomposable) simple.push_back(a);
  }
  std::sort(simple.begin(), simple.end(), lex_greater);
  return SimpleSystem(rs, simple);
}

Classification classify_simple_root(const SimpleSystem& ss, const Weight& delta) {
  if (std::find(ss.simple().begin(), ss.simple().end(), delta) == ss.simple().end())
    throw RootSystemError(ss.rs().format(delta) + " is not a simple root");
  const RootSystem& rs = ss.rs();
  if (rs.is_even(delta)) return {SimpleRootType::I, {delta}};
  if (rs.is_isotropic(delta)) return {SimpleRootType::II, {delta}};
  const Weight d2 = wscale(2, delta);
  if (!rs.is_even(d2)) throw RootSystemError("non-isotropic odd root without even double");
  return {SimpleRootType::III, {delta, d2}};
}

std::vector<Weight> odd_reflection_rule(const SimpleSystem& ss, const Weight& delta) {
  std::vector<Weight> out;
  for (const auto& b : ss.simple()) {
    if (b == delta)
      out.push_back(wneg(delta));
    else if (ss.rs().form(delta, b) != Rational(0))
      out.push_back(wadd(b, delta));
    else
      out.push_back(b);
  }
  return out;
}

SimpleSystem reflect(const SimpleSystem& ss, const Weight& delta) {
  const auto cls = classify_simple_root(ss, delta);
  const RootSystem& rs = ss.rs();
  std::vector<Weight> simple;
  if (cls.type == SimpleRootType::II) {
    simple = odd_reflection_rule(ss, delta);
  } else {
    const Rational dd = rs.form(delta, delta);
    for (const auto& b : ss.simple()) simple.push_back(wsub(b, wscale(Rational(2) * rs.form(delta, b) / dd, delta)));
  }
  SimpleSystem out(ss.rs_ptr(), simple);
  for (const auto& d : cls.delta_star)
    if (!out.is_positive(wneg(d))) throw RootSystemError("reflection postcondition failed: -delta* not positive");
  std::size_t common = 0;
  for (const auto& a : ss.positive()) {
    const bool in_star = std::find(cls.delta_star.begin(), cls.delta_star.end(), a) != cls.delta_star.end();
    if (out.is_positive(a)) {
      if (in_star) throw RootSystemError("reflection postcondition failed: delta* stays positive");
      ++common;
    } else if (!in_star) {
      throw RootSystemError("reflection postcondition failed: a root outside delta* changed sign");
    }
  }
  if (common != ss.positive().size() - cls.delta_star.size())
    throw RootSystemError("reflection postcondition failed: intersection size");
  return out;
}

std::vector<SimpleSystem> all_simple_systems(std::shared_ptr<const RootSystem> rs) {
  std::vector<SimpleSystem> out;
  std::set<std::vector<Weight>> seen;
  std::deque<SimpleSystem> queue;
  auto start = distinguished_simple_system(rs);
  seen.insert(start.key());
  queue.push_back(start);
  while (!queue.empty()) {
    SimpleSystem cur = queue.front();
    queue.pop_front();
    for (const auto& d : cur.simple()) {
      SimpleSystem nxt = reflect(cur, d);
      if (seen.insert(nxt.key()).second) queue.push_back(nxt);
    }
    out.push_back(std::move(cur));
  }
  return out;
}

Weight rho(const SimpleSystem& ss) { return ss.rho(); }

Elem to_field(const Field& F, const Rational& r) {
  const Elem den = F.from_int(r.denominator());
  if (den.v == 0) throw FieldError("denominator divisible by p");
  return F.div(F.from_int(r.numerator()), den);
}

Elem phi_prime_eval(const SimpleSystem& ss, const Field& F, const std::map<Weight, Elem>& pairing) {
  Elem acc = F.one();
  for (const auto& a : ss.positive()) {
    auto it = pairing.find(a);
    if (it == pairing.end()) throw RootSystemError("missing pairing for root " + ss.rs().format(a));
    if (ss.rs().is_even(a))
      acc = F.mul(acc, F.sub(F.pow(it->second, F.p() - 1), F.one()));
    else
      acc = F.mul(acc, it->second);
  }
  return acc;
}

Elem root_pairing(const RootSystem& rs, const Field& F, const std::vector<Elem>& lambda, const Weight& a) {
  Elem s = F.zero();
  for (std::size_t i = 0; i < rs.dim(); ++i) {
    Rational c(0);
    for (std::size_t j = 0; j < rs.dim(); ++j) c += rs.gram()[i][j] * a[j];
    if (c != Rational(0)) s = F.add(s, F.mul(lambda[i], to_field(F, c)));
  }
  const Rational aa = rs.form(a, a);
  if (aa == Rational(0)) return s;
  const Elem n = to_field(F, aa);
  if (n.v == 0) throw RootSystemError("root norm vanishes mod p");
  return F.div(F.mul(F.from_int(2), s), n);
}

}  // namespace modsuper
