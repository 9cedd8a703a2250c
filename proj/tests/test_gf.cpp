#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "modsuper/gf.hpp"
#include "modsuper/rng.hpp"

using namespace modsuper;

namespace {

// Brute force: a monic polynomial of degree 2 or 3 is irreducible iff it has no root.
bool has_root(const std::vector<int>& f, int p) {
  for (int x = 0; x < p; ++x) {
    long long acc = 0;
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) acc = (acc * x + f[i]) % p;
    if (acc == 0) return true;
  }
  return false;
}

std::vector<int> smallest_rootless_quadratic(int p) {
  for (int n = 0; n < p * p; ++n) {
    std::vector<int> f{n % p, n / p, 1};
    if (!has_root(f, p)) return f;
  }
  return {};
}

}  // namespace

TEST_CASE("field creation and modulus choice") {
  auto f3 = Field::create(3);
  CHECK(f3.q() == 3);
  CHECK(f3.k() == 1);

  auto f9 = Field::create(3, 2);
  CHECK(f9.modulus() == smallest_rootless_quadratic(3));
  CHECK(f9.modulus() == std::vector<int>{1, 0, 1});

  auto f25 = Field::create(5, 2);
  CHECK(f25.modulus() == smallest_rootless_quadratic(5));
  CHECK(f25.modulus() == std::vector<int>{2, 0, 1});

  CHECK_THROWS_AS(Field::create(4), FieldError);
  CHECK_THROWS_AS(Field::create(2), FieldError);
  CHECK_THROWS_AS(Field::create(3, 0), FieldError);
  CHECK_THROWS_AS(Field::with_modulus(3, {2, 0, 1}), FieldError);  // x^2+2 = (x-1)(x+1)
}

TEST_CASE("basic arithmetic") {
  auto f3 = Field::create(3);
  FieldElement two(f3, 2);
  CHECK(two + two == FieldElement(f3, 1));
  CHECK(two.inv() == two);
  CHECK(arith(two, two, ArithOp::Add) == FieldElement(f3, 1));
  CHECK(arith(two, two, ArithOp::Inv) == two);
  CHECK_THROWS_AS(two / FieldElement(f3, 0), FieldError);

  auto f9 = Field::create(3, 2);
  FieldElement x(f9, f9.gen());
  CHECK(x * x == FieldElement(f9, 2));
  CHECK(x.pow(-1) * x == FieldElement(f9, 1));
  CHECK(x.pow(8) == FieldElement(f9, 1));

  CHECK_THROWS_AS(two + FieldElement(f9, 1), FieldError);
}

TEST_CASE("frobenius") {
  auto f3 = Field::create(3);
  CHECK(FieldElement(f3, 2).frobenius() == FieldElement(f3, 2));
  auto f9 = Field::create(3, 2);
  FieldElement g(f9, f9.gen());
  CHECK(g.frobenius() == g * g * g);
  SplitMix64 rng(7);
  for (int i = 0; i < 10; ++i) {
    FieldElement a(f9, Elem{static_cast<std::uint32_t>(rng.below(9))});
    CHECK(a.frobenius().frobenius() == a);
  }
}

TEST_CASE("field axioms on random samples") {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {3, 2}, {5, 2}, {3, 3}, {7, 2}, {3, 5}, {5, 5}}) {
    auto F = Field::create(p, k);
    SplitMix64 rng(static_cast<std::uint64_t>(p * 100 + k));
    for (int i = 0; i < 1000; ++i) {
      Elem a{static_cast<std::uint32_t>(rng.below(F.q()))};
      Elem b{static_cast<std::uint32_t>(rng.below(F.q()))};
      Elem c{static_cast<std::uint32_t>(rng.below(F.q()))};
      REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
      REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      REQUIRE(F.add(a, F.neg(a)) == F.zero());
      if (a.v != 0) REQUIRE(F.mul(a, F.inv(a)) == F.one());
      REQUIRE(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
      REQUIRE(F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b)));
    }
    Elem a{static_cast<std::uint32_t>(rng.below(F.q()))};
    Elem t = a;
    for (int i = 0; i < k; ++i) t = F.frobenius(t);
    CHECK(t == a);
  }
}

TEST_CASE("artin-schreier against exhaustive scan") {
  auto scan = [](const Field& F, Elem c) {
    std::vector<Elem> out;
    for (std::uint32_t t = 0; t < F.q(); ++t)
      if (F.sub(F.frobenius(Elem{t}), Elem{t}) == c) out.push_back(Elem{t});
    return out;
  };
  auto f3 = Field::create(3);
  auto r0 = artin_schreier_solve(f3, f3.zero());
  CHECK(r0.solutions == std::vector<Elem>{Elem{0}, Elem{1}, Elem{2}});
  auto r1 = artin_schreier_solve(f3, f3.one());
  CHECK(r1.solutions.empty());
  CHECK(r1.extension_required);

  for (auto [p, k] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {5, 2}, {5, 5}, {3, 6}}) {
    auto F = Field::create(p, k);
    SplitMix64 rng(11);
    int nonempty = 0;
    for (int i = 0; i < 40; ++i) {
      Elem c{static_cast<std::uint32_t>(rng.below(F.q()))};
      auto r = artin_schreier_solve(F, c);
      CHECK(r.solutions == scan(F, c));
      CHECK(r.extension_required == r.solutions.empty());
      if (!r.solutions.empty()) {
        ++nonempty;
        CHECK(r.solutions.size() == static_cast<std::size_t>(p));
        std::set<Elem> s(r.solutions.begin(), r.solutions.end());
        for (auto t : r.solutions) CHECK(s.count(F.add(t, F.one())) == 1);
      }
    }
    CHECK(nonempty > 0);
  }
  // c = 1 over GF(9): the scan decides; over GF(27) it must be solvable.
  auto f9 = Field::create(3, 2);
  CHECK(artin_schreier_solve(f9, f9.one()).solutions == scan(f9, f9.one()));
  auto f27 = Field::create(3, 3);
  CHECK(artin_schreier_solve(f27, f27.one()).solutions.size() == 3);
}

TEST_CASE("embedding of subfields") {
  auto f9 = Field::create(3, 2);
  auto f81 = Field::create(3, 4);
  SplitMix64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Elem a{static_cast<std::uint32_t>(rng.below(9))};
    Elem b{static_cast<std::uint32_t>(rng.below(9))};
    CHECK(f81.embed_from(f9, f9.mul(a, b)) == f81.mul(f81.embed_from(f9, a), f81.embed_from(f9, b)));
    CHECK(f81.embed_from(f9, f9.add(a, b)) == f81.add(f81.embed_from(f9, a), f81.embed_from(f9, b)));
  }
  CHECK_THROWS_AS(f9.embed_from(Field::create(3, 3), Elem{3}), FieldError);
}
