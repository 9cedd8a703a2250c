#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "modsuper/rng.hpp"
#include "modsuper/rootsys.hpp"

using namespace modsuper;

namespace {

std::shared_ptr<const RootSystem> make(const std::string& label) {
  return std::make_shared<const RootSystem>(TypeSpec::parse(label));
}

Weight W(std::initializer_list<Rational> c) { return Weight(c); }

// Positive systems by brute force: sign choices on root pairs closed under
// addition, including 2a for odd a.
std::set<std::vector<Weight>> brute_positive_systems(const RootSystem& rs) {
  std::vector<Weight> all(rs.even_roots());
  all.insert(all.end(), rs.odd_roots().begin(), rs.odd_roots().end());
  std::vector<Weight> reps;
  for (const auto& a : all)
    if (a > wneg(a)) reps.push_back(a);
  std::set<std::vector<Weight>> out;
  for (std::uint64_t mask = 0; mask < (1ULL << reps.size()); ++mask) {
    std::set<Weight> P;
    for (std::size_t i = 0; i < reps.size(); ++i) P.insert((mask >> i) & 1 ? wneg(reps[i]) : reps[i]);
    bool closed = true;
    for (auto it = P.begin(); it != P.end() && closed; ++it)
      for (auto jt = P.begin(); jt != P.end(); ++jt) {
        Weight s = wadd(*it, *jt);
        if (rs.is_root(s) && !P.count(s)) {
          closed = false;
          break;
        }
      }
    if (closed) out.insert(std::vector<Weight>(P.begin(), P.end()));
  }
  return out;
}

std::set<std::vector<Weight>> keys(const std::vector<SimpleSystem>& v) {
  std::set<std::vector<Weight>> s;
  for (const auto& x : v) s.insert(x.key());
  return s;
}

}  // namespace

TEST_CASE("root enumeration") {
  auto g11 = make("gl(1|1)");
  CHECK(g11->even_roots().empty());
  CHECK(g11->odd_roots().size() == 2);
  for (const auto& a : g11->odd_roots()) CHECK(g11->is_isotropic(a));

  auto g21 = make("gl(2|1)");
  CHECK(g21->even_roots().size() == 2);
  CHECK(g21->is_even(W({1, -1, 0})));
  CHECK(g21->odd_roots().size() == 4);
  CHECK(g21->is_odd(W({1, 0, -1})));
  CHECK(g21->is_odd(W({0, -1, 1})));

  auto o12 = make("osp(1|2)");
  CHECK(o12->spec().type == SuperType::B);
  CHECK(o12->even_roots() == std::vector<Weight>{W({-2}), W({2})});
  CHECK(o12->odd_roots() == std::vector<Weight>{W({-1}), W({1})});
  CHECK_FALSE(o12->is_isotropic(W({1})));

  for (auto label : {"gl(2|2)", "sl(3|1)", "osp(3|2)", "osp(2|4)", "osp(4|2)", "D(2,1;2)", "F(4)", "G(3)", "osp(1|4)"}) {
    auto rs = make(label);
    for (const auto& a : rs->even_roots()) CHECK(rs->is_even(wneg(a)));
    for (const auto& a : rs->odd_roots()) {
      CHECK(rs->is_odd(wneg(a)));
      CHECK_FALSE(rs->is_even(a));
      if (!rs->is_isotropic(a)) CHECK(rs->is_even(wscale(2, a)));
    }
  }
  CHECK(make("F(4)")->even_roots().size() == 20);
  CHECK(make("F(4)")->odd_roots().size() == 16);
  CHECK(make("G(3)")->even_roots().size() == 14);
  CHECK(make("G(3)")->odd_roots().size() == 14);
  CHECK(make("D(2,1;2)")->odd_roots().size() == 8);
}

TEST_CASE("prime admissibility") {
  CHECK_THROWS_AS(check_prime(TypeSpec::parse("sl(1|1)"), 3), RootSystemError);
  CHECK_THROWS_AS(check_prime(TypeSpec::parse("sl(4|1)"), 3), RootSystemError);
  CHECK_NOTHROW(check_prime(TypeSpec::parse("sl(2|1)"), 3));
  CHECK_THROWS_AS(check_prime(TypeSpec::parse("gl(1|1)"), 2), RootSystemError);
  CHECK_THROWS_AS(check_prime(TypeSpec::parse("G(3)"), 3), RootSystemError);
  CHECK_NOTHROW(check_prime(TypeSpec::parse("G(3)"), 5));
  CHECK_THROWS_AS(check_prime(TypeSpec::parse("D(2,1;4)"), 5), RootSystemError);  // 4 = -1 mod 5
  CHECK_THROWS_AS(check_prime(TypeSpec::parse("D(2,1;5)"), 5), RootSystemError);
  CHECK_NOTHROW(check_prime(TypeSpec::parse("D(2,1;2)"), 5));
  CHECK_NOTHROW(check_prime(TypeSpec::parse("F(4)"), 3));
}

TEST_CASE("distinguished simple systems") {
  auto g11 = distinguished_simple_system(make("gl(1|1)"));
  CHECK(g11.simple() == std::vector<Weight>{W({1, -1})});

  auto o12 = distinguished_simple_system(make("osp(1|2)"));
  CHECK(o12.simple() == std::vector<Weight>{W({1})});
  CHECK(o12.positive() == std::vector<Weight>{W({1}), W({2})});

  auto g21 = distinguished_simple_system(make("gl(2|1)"));
  CHECK(g21.simple() == std::vector<Weight>{W({1, -1, 0}), W({0, 1, -1})});
  CHECK(g21.positive() == std::vector<Weight>{W({1, -1, 0}), W({0, 1, -1}), W({1, 0, -1})});

  for (auto label : {"gl(2|2)", "osp(3|2)", "osp(2|4)", "osp(4|2)", "D(2,1;2)", "F(4)", "G(3)"}) {
    auto ss = distinguished_simple_system(make(label));
    int odd_simple = 0;
    for (const auto& a : ss.simple()) odd_simple += ss.rs().is_odd(a);
    CHECK_MESSAGE(odd_simple == 1, label);
    for (std::size_t i = 1; i < ss.positive().size(); ++i)
      CHECK(ss.height(ss.positive()[i - 1]) <= ss.height(ss.positive()[i]));
  }
}

TEST_CASE("classification and reflection examples") {
  auto g21 = distinguished_simple_system(make("gl(2|1)"));
  CHECK(classify_simple_root(g21, W({1, -1, 0})).type == SimpleRootType::I);
  CHECK(classify_simple_root(g21, W({0, 1, -1})).type == SimpleRootType::II);
  CHECK_THROWS_AS(classify_simple_root(g21, W({1, 0, -1})), RootSystemError);
  auto r = reflect(g21, W({0, 1, -1}));
  CHECK(r.simple() == std::vector<Weight>{W({1, 0, -1}), W({0, -1, 1})});
  CHECK(odd_reflection_rule(g21, W({0, 1, -1})) == r.simple());

  auto o12 = distinguished_simple_system(make("osp(1|2)"));
  auto c = classify_simple_root(o12, W({1}));
  CHECK(c.type == SimpleRootType::III);
  CHECK(c.delta_star == std::vector<Weight>{W({1}), W({2})});
  CHECK(reflect(o12, W({1})).simple() == std::vector<Weight>{W({-1})});

  auto g11 = distinguished_simple_system(make("gl(1|1)"));
  CHECK(reflect(g11, W({1, -1})).simple() == std::vector<Weight>{W({-1, 1})});
}

TEST_CASE("rho") {
  auto g11 = distinguished_simple_system(make("gl(1|1)"));
  CHECK(g11.rho() == W({Rational(-1, 2), Rational(1, 2)}));
  auto o12 = distinguished_simple_system(make("osp(1|2)"));
  CHECK(o12.rho() == W({Rational(1, 2)}));
  auto g21 = distinguished_simple_system(make("gl(2|1)"));
  CHECK(g21.rho() == wsub(wscale(Rational(1, 2), W({1, -1, 0})), wscale(Rational(1, 2), W({1, 1, -2}))));
}

TEST_CASE("simple system closure against brute force") {
  std::map<std::string, std::size_t> expected = {{"gl(1|1)", 2}, {"osp(1|2)", 2}, {"gl(2|1)", 6}};
  for (auto label : {"gl(1|1)", "osp(1|2)", "gl(2|1)", "gl(2|2)", "gl(3|1)", "osp(3|2)", "osp(2|4)", "osp(4|2)", "D(2,1;2)", "G(3)", "osp(1|4)"}) {
    auto rs = make(label);
    auto all = all_simple_systems(rs);
    const auto brute = brute_positive_systems(*rs);
    CHECK_MESSAGE(keys(all) == brute, label);
    if (expected.count(label)) CHECK(all.size() == expected[label]);
  }
}

TEST_CASE("reflection properties on every system") {
  for (auto label : {"gl(2|1)", "osp(1|2)", "gl(2|2)", "osp(3|2)", "osp(2|4)", "D(2,1;2)", "F(4)", "G(3)"}) {
    auto rs = make(label);
    auto all = all_simple_systems(rs);
    // Depth-first traversal reaches the same set.
    std::set<std::vector<Weight>> dfs;
    std::function<void(const SimpleSystem&)> visit = [&](const SimpleSystem& s) {
      if (!dfs.insert(s.key()).second) return;
      for (auto it = s.simple().rbegin(); it != s.simple().rend(); ++it) visit(reflect(s, *it));
    };
    visit(all.back());
    CHECK_MESSAGE(dfs == keys(all), label);

    for (const auto& ss : all) {
      for (const auto& d : ss.simple()) {
        const auto cls = classify_simple_root(ss, d);
        auto r = reflect(ss, d);
        CHECK(reflect(r, wneg(d)).key() == ss.key());
        std::size_t common = 0;
        for (const auto& a : ss.positive()) common += r.is_positive(a);
        CHECK(common == ss.positive().size() - cls.delta_star.size());
        if (cls.type == SimpleRootType::II) {
          CHECK(r.simple() == odd_reflection_rule(ss, d));
          // rho shifts by +delta under an odd reflection.
          CHECK(r.rho() == wadd(ss.rho(), d));
        }
      }
    }
  }
}

TEST_CASE("phi prime values") {
  auto F3 = Field::create(3);
  auto g11 = distinguished_simple_system(make("gl(1|1)"));
  CHECK(phi_prime_eval(g11, F3, {{W({1, -1}), F3.zero()}}).v == 0);
  CHECK_THROWS_AS(phi_prime_eval(g11, F3, {}), RootSystemError);

  auto F9 = Field::create(3, 2);
  auto o12 = distinguished_simple_system(make("osp(1|2)"));
  const Elem x = F9.gen();
  CHECK(phi_prime_eval(o12, F9, {{W({2}), x}, {W({1}), F9.one()}}).v != 0);

  auto g21 = distinguished_simple_system(make("gl(2|1)"));
  CHECK(phi_prime_eval(g21, F3, {{W({1, -1, 0}), F3.one()}, {W({0, 1, -1}), F3.one()}, {W({1, 0, -1}), F3.one()}}).v == 0);
}

TEST_CASE("phi prime invariance across simple systems") {
  for (auto [label, p] : std::vector<std::pair<std::string, int>>{{"gl(2|1)", 3}, {"osp(1|2)", 3}, {"gl(2|2)", 5}, {"osp(3|2)", 5}, {"D(2,1;2)", 5}, {"G(3)", 5}, {"F(4)", 5}}) {
    auto rs = make(label);
    auto F = Field::create(p, 2);
    auto all = all_simple_systems(rs);
    SplitMix64 rng(42);
    std::vector<std::vector<Elem>> lams;
    for (int i = 0; i < 50; ++i) {
      std::vector<Elem> l(rs->dim());
      for (auto& e : l) e = Elem{static_cast<std::uint32_t>(rng.below(F.q()))};
      lams.push_back(l);
    }
    auto eval = [&](const SimpleSystem& ss, const std::vector<Elem>& l) {
      std::map<Weight, Elem> pr;
      for (const auto& a : ss.positive()) pr[a] = root_pairing(*rs, F, l, a);
      return phi_prime_eval(ss, F, pr);
    };
    for (const auto& ss : all) {
      std::optional<Elem> c;
      bool ok = true;
      for (const auto& l : lams) {
        const Elem a = eval(all.front(), l), b = eval(ss, l);
        if ((a.v == 0) != (b.v == 0)) ok = false;
        if (a.v == 0) continue;
        const Elem ratio = F.div(b, a);
        if (!c) c = ratio;
        if (*c != ratio) ok = false;
      }
      CHECK_MESSAGE(ok, label);
      if (c) CHECK((*c == F.one() || *c == F.neg(F.one())));
    }
  }
}
