#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "modsuper/envelope.hpp"

using namespace modsuper;

namespace {

std::shared_ptr<const LieSuperalgebra> make(const std::string& label, std::uint32_t p) {
  return std::make_shared<const LieSuperalgebra>(LieSuperalgebra::build(label, Field::create(p)));
}

std::size_t idx(const LieSuperalgebra& g, const std::string& name) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (g.basis()[i].name == name) return i;
  FAIL("no basis vector " << name);
  return 0;
}

PCharacter cartan_char(const LieSuperalgebra& g, std::vector<int> vals) {
  std::vector<Elem> v;
  for (int x : vals) v.push_back(g.field().from_int(x));
  return g.character_on_cartan(v);
}

AlgebraElement power(const DeformedAlgebra& U, const AlgebraElement& x, std::uint32_t n) {
  AlgebraElement r = U.one();
  for (std::uint32_t k = 0; k < n; ++k) r = U.multiply(r, x);
  return r;
}

}  // namespace

TEST_CASE("dimensions") {
  auto g = make("gl(1|1)", 3);
  CHECK(DeformedAlgebra(g, g->character_zero(), g->field().one()).dim() == 36);
  auto o = make("osp(1|2)", 3);
  CHECK(DeformedAlgebra(o, o->character_zero(), o->field().one()).dim() == 108);
  auto h = make("gl(2|1)", 3);
  CHECK(DeformedAlgebra(h, h->character_zero(), h->field().one()).dim() == 3888);
}

TEST_CASE("gl(1|1) odd anticommutator") {
  auto g = make("gl(1|1)", 5);
  const Field& F = g->field();
  DeformedAlgebra U(g, cartan_char(*g, {1, 2}), F.one());
  // Find the two odd root vectors.
  std::vector<std::size_t> odd;
  for (std::size_t i = 0; i < g->dim(); ++i)
    if (g->parity(i)) odd.push_back(i);
  REQUIRE(odd.size() == 2);
  const auto x = U.generator(odd[0]), y = U.generator(odd[1]);
  const auto anti = U.add(U.multiply(x, y), U.multiply(y, x));
  CHECK(anti == U.from_g(g->bracket(odd[0], odd[1])));
  CHECK(U.multiply(x, x).is_zero());
  // Cartan sum is central-ish: E11 + E22 bracket with odd is zero.
  CHECK(U.format(U.one()) == "1");
}

TEST_CASE("lambda = 0 relations") {
  for (const char* label : {"gl(1|1)", "osp(1|2)", "gl(2|1)"}) {
    auto g = make(label, 3);
    const Field& F = g->field();
    SplitMix64 rng(7);
    std::vector<Elem> vals;
    for (std::size_t k = 0; k < g->cartan().size(); ++k) vals.push_back(Elem{static_cast<std::uint32_t>(rng.below(3))});
    const auto xi = g->character_on_cartan(vals);
    DeformedAlgebra S(g, xi, F.zero());
    for (std::size_t i = 0; i < g->dim(); ++i) {
      const auto x = S.generator(i);
      if (g->parity(i)) {
        CHECK(S.multiply(x, x).is_zero());
      } else {
        const auto shifted = S.sub(x, S.scale(xi.values[i], S.one()));
        CHECK(power(S, shifted, F.p()).is_zero());
      }
    }
  }
}

TEST_CASE("associativity") {
  for (const char* label : {"gl(1|1)", "osp(1|2)", "gl(2|1)"}) {
    auto g = make(label, 3);
    const Field& F = g->field();
    SplitMix64 rng(11);
    for (Elem lam : {F.one(), F.zero(), F.from_int(2)}) {
      std::vector<Elem> vals;
      for (std::size_t k = 0; k < g->cartan().size(); ++k) vals.push_back(Elem{static_cast<std::uint32_t>(rng.below(3))});
      DeformedAlgebra U(g, g->character_on_cartan(vals), lam);
      int bad = 0;
      for (int t = 0; t < 70; ++t) {
        const auto a = U.random_element(rng), b = U.random_element(rng), c = U.random_element(rng);
        if (!(U.multiply(U.multiply(a, b), c) == U.multiply(a, U.multiply(b, c)))) ++bad;
      }
      CHECK_MESSAGE(bad == 0, label << " lambda=" << lam.v);
    }
  }
}

TEST_CASE("p-power relation at lambda = 1 for random even elements") {
  for (const char* label : {"gl(1|1)", "osp(1|2)", "gl(2|1)"}) {
    auto g = make(label, 3);
    const Field& F = g->field();
    SplitMix64 rng(3);
    std::vector<Elem> vals;
    for (std::size_t k = 0; k < g->cartan().size(); ++k) vals.push_back(F.from_int(static_cast<long long>(k) + 1));
    const auto chi = g->character_on_cartan(vals);
    DeformedAlgebra U(g, chi, F.one());
    for (int t = 0; t < 10; ++t) {
      Vec y(g->dim());
      for (std::size_t i = 0; i < g->dim(); ++i)
        if (g->parity(i) == 0) y[i] = Elem{static_cast<std::uint32_t>(rng.below(3))};
      const Elem cy = dot(F, chi.values, y);
      const auto lhs = power(U, U.from_g(y), F.p());
      const auto rhs = U.add(U.from_g(g->p_power(y)), U.scale(F.pow(cy, F.p()), U.one()));
      CHECK_MESSAGE(lhs == rhs, label);
    }
  }
}

TEST_CASE("supercommutativity at lambda = 0") {
  auto g = make("gl(2|1)", 3);
  const Field& F = g->field();
  DeformedAlgebra S(g, cartan_char(*g, {1, 0, 2}), F.zero());
  SplitMix64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto a = S.monomial(rng.below(S.dim()), F.one());
    const auto b = S.monomial(rng.below(S.dim()), F.one());
    const Elem s = (S.parity(a) & S.parity(b)) ? F.neg(F.one()) : F.one();
    CHECK(S.multiply(a, b) == S.scale(s, S.multiply(b, a)));
  }
}

TEST_CASE("theta_t is an isomorphism of the family") {
  for (const char* label : {"gl(1|1)", "osp(1|2)", "gl(2|1)"}) {
    auto g = make(label, 3);
    const Field& F = g->field();
    SplitMix64 rng(17);
    DeformedAlgebra U(g, cartan_char(*g, std::vector<int>(g->cartan().size(), 1)), F.one());
    for (Elem t : {F.one(), F.from_int(2)}) {
      const auto rep = theta_check(U, t, rng, 10);
      CHECK_MESSAGE(rep.ok(), label);
      CHECK(rep.checks > g->dim() * g->dim());
    }
  }
}

TEST_CASE("g-action is a superderivation") {
  for (const char* label : {"gl(1|1)", "osp(1|2)"}) {
    auto g = make(label, 3);
    const Field& F = g->field();
    for (Elem lam : {F.zero(), F.one()}) {
      DeformedAlgebra U(g, cartan_char(*g, std::vector<int>(g->cartan().size(), 1)), lam);
      SplitMix64 rng(23);
      for (int t = 0; t < 100; ++t) {
        const std::size_t b = rng.below(g->dim());
        const auto u = U.monomial(rng.below(U.dim()), F.one());
        const auto v = U.monomial(rng.below(U.dim()), F.one());
        const Elem s = (g->parity(b) & U.parity(u)) ? F.neg(F.one()) : F.one();
        const auto lhs = U.g_action(b, U.multiply(u, v));
        const auto rhs = U.add(U.multiply(U.g_action(b, u), v), U.scale(s, U.multiply(u, U.g_action(b, v))));
        CHECK(lhs == rhs);
      }
      // On generators the action is the bracket.
      for (std::size_t i = 0; i < g->dim(); ++i)
        for (std::size_t j = 0; j < g->dim(); ++j)
          CHECK(U.g_action(i, U.generator(j)) == U.from_g(g->bracket(i, j)));
    }
  }
}

TEST_CASE("commutator of generators at lambda = 1") {
  auto g = make("osp(1|2)", 5);
  const Field& F = g->field();
  DeformedAlgebra U(g, g->character_zero(), F.one());
  for (std::size_t i = 0; i < g->dim(); ++i)
    for (std::size_t j = 0; j < g->dim(); ++j) {
      const Elem s = (g->parity(i) & g->parity(j)) ? F.neg(F.one()) : F.one();
      const auto c = U.sub(U.multiply(U.generator(i), U.generator(j)), U.scale(s, U.multiply(U.generator(j), U.generator(i))));
      CHECK(c == U.from_g(g->bracket(i, j)));
    }
}

TEST_CASE("left multiplication matrices") {
  auto g = make("gl(1|1)", 3);
  DeformedAlgebra U(g, cartan_char(*g, {1, 0}), g->field().one());
  const Mat L = U.left_mult_matrix(0);
  const auto u = U.monomial(7, g->field().one());
  CHECK(U.from_vec(L.apply(U.to_vec(u))) == U.left_mul_generator(0, u));
  CHECK_THROWS_AS(DeformedAlgebra(make("gl(2|1)", 5), make("gl(2|1)", 5)->character_zero(), Field::create(5).one()).left_mult_matrix(0), AlgebraError);
}
