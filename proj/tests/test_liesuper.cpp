#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modsuper/liesuper.hpp"
#include "modsuper/rng.hpp"

using namespace modsuper;

namespace {

Weight W(std::initializer_list<Rational> c) { return Weight(c); }

std::size_t find_name(const LieSuperalgebra& g, const std::string& n) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (g.basis()[i].name == n) return i;
  FAIL("no basis vector " << n);
  return 0;
}

}  // namespace

TEST_CASE("gl(1|1) structure") {
  auto F = Field::create(3);
  auto g = LieSuperalgebra::build("gl(1|1)", F);
  CHECK(g.dim_even() == 2);
  CHECK(g.dim_odd() == 2);
  const auto e11 = find_name(g, "E11"), e22 = find_name(g, "E22");
  const auto e12 = find_name(g, "E12"), e21 = find_name(g, "E21");
  Vec expect = vadd(F, g.unit(e11), g.unit(e22));
  CHECK(g.bracket(e12, e21) == expect);
  CHECK(g.p_power(e11) == g.unit(e11));
  CHECK(g.validate().ok);
  // Coroot of the odd root is E11 + E22.
  CHECK(g.coroot(W({1, -1})) == expect);
}

TEST_CASE("admissibility and exceptional types") {
  auto F3 = Field::create(3);
  CHECK_THROWS_AS(LieSuperalgebra::build("sl(1|1)", F3), AlgebraError);
  CHECK_THROWS_AS(LieSuperalgebra::build("G(3)", Field::create(5)), AlgebraError);
  CHECK_THROWS_AS(LieSuperalgebra::build("F(4)", F3), AlgebraError);
  try {
    LieSuperalgebra::build("sl(1|1)", F3);
  } catch (const AlgebraError& e) {
    CHECK(std::string(e.what()).find("m - n") != std::string::npos);
  }
}

TEST_CASE("validation suite on every supported algebra") {
  for (auto [label, p] : std::vector<std::pair<std::string, int>>{
           {"gl(1|1)", 3}, {"gl(2|1)", 3}, {"gl(2|1)", 5}, {"sl(2|1)", 3}, {"sl(2|0)", 3}, {"gl(1|0)", 3},
           {"osp(1|2)", 3}, {"osp(1|2)", 5}, {"osp(2|2)", 3}, {"osp(3|2)", 3}, {"gl(1|2)", 5}, {"osp(1|4)", 3}}) {
    auto g = LieSuperalgebra::build(label, Field::create(p));
    auto rep = g.validate();
    CHECK_MESSAGE(rep.ok, label << " " << (rep.failures.empty() ? "" : rep.failures.front()));
    // Every root vector has its weight under the Cartan.
    for (const auto& rv : g.root_vectors()) {
      const auto vals = g.weight_on_cartan(rv.root);
      for (std::size_t k = 0; k < g.cartan().size(); ++k)
        CHECK(g.bracket(g.cartan()[k], rv.index) == vscale(g.field(), vals[k], g.unit(rv.index)));
    }
  }
  auto o = LieSuperalgebra::build("osp(1|2)", Field::create(5));
  CHECK(o.dim_even() == 3);
  CHECK(o.dim_odd() == 2);
  CHECK(LieSuperalgebra::build("osp(2|2)", Field::create(3)).dim() == 8);
}

TEST_CASE("coroots pair to two on non-isotropic roots") {
  for (auto label : {"gl(2|1)", "osp(1|2)", "osp(3|2)", "osp(2|2)"}) {
    auto g = LieSuperalgebra::build(label, Field::create(5));
    const Field& F = g.field();
    for (const auto& rv : g.root_vectors()) {
      const Vec H = g.coroot(rv.root);
      const auto vals = g.weight_on_cartan(rv.root);
      Elem a = F.zero();
      for (std::size_t k = 0; k < g.cartan().size(); ++k) a = F.add(a, F.mul(vals[k], H[g.cartan()[k]]));
      if (g.root_system()->is_isotropic(rv.root))
        CHECK(a.v == 0);
      else
        CHECK(a == F.from_int(2));
      // [X_a, X_-a] is proportional to H_a.
      const Vec br = g.bracket(rv.index, g.root_index(wneg(rv.root)));
      Echelon e(F, g.dim());
      e.insert(H);
      CHECK(e.contains(br));
      CHECK_FALSE(is_zero(br));
    }
  }
}

TEST_CASE("centralizer examples") {
  auto F3 = Field::create(3);
  auto g = LieSuperalgebra::build("gl(1|1)", F3);
  auto c0 = centralizer(g, g.character_zero());
  CHECK(c0.d0 == 0);
  CHECK(c0.d1 == 0);
  CHECK(c0.basis.size() == 4);
  auto chi = g.character_on_cartan({F3.one(), F3.zero()});
  auto c = centralizer(g, chi);
  CHECK(c.d0 == 0);
  CHECK(c.d1 == 2);

  auto o = LieSuperalgebra::build("osp(1|2)", F3);
  auto co = centralizer(o, o.character_on_cartan({F3.one()}));
  CHECK(co.d0 == 2);
  CHECK(co.d1 == 2);
  CHECK(co.basis.size() == 1);
}

TEST_CASE("characters from elements") {
  auto F3 = Field::create(3);
  auto o = LieSuperalgebra::build("osp(1|2)", F3);
  auto z = character_from_element(o, Vec(o.dim()));
  CHECK(is_zero(z.values));
  const auto x2 = o.root_index(W({2})), xm2 = o.root_index(W({-2}));
  auto chi = character_from_element(o, o.unit(x2));
  CHECK(chi.values[xm2].v != 0);
  CHECK(chi.values[o.cartan()[0]].v == 0);
  CHECK(classify_element(o, o.unit(x2)) == ElementKind::Nilpotent);
  CHECK_FALSE(is_standard(o, chi));
  CHECK_THROWS_AS(is_regular_semisimple(o, chi), AlgebraError);

  auto g = LieSuperalgebra::build("gl(1|1)", F3);
  CHECK(classify_element(g, g.unit(0)) == ElementKind::Semisimple);
  Vec mixed = vadd(F3, g.unit(0), Vec(g.dim()));
  CHECK(classify_element(g, mixed) == ElementKind::Semisimple);
  CHECK_THROWS_AS(character_from_element(g, g.unit(2)), AlgebraError);

  auto g21 = LieSuperalgebra::build("gl(2|1)", F3);
  Vec m(g21.dim());
  m[0] = F3.one();
  m[1] = F3.one();
  m[g21.root_index(W({1, -1, 0}))] = F3.one();
  CHECK(classify_element(g21, m) == ElementKind::Mixed);
}

TEST_CASE("regular semisimple detection") {
  auto F3 = Field::create(3);
  auto o = LieSuperalgebra::build("osp(1|2)", F3);
  CHECK_FALSE(is_regular_semisimple(o, o.character_zero()));
  CHECK(is_regular_semisimple(o, o.character_on_cartan({F3.one()})));
  auto g21 = LieSuperalgebra::build("gl(2|1)", F3);
  CHECK_FALSE(is_regular_semisimple(g21, g21.character_on_cartan({F3.one(), F3.one(), F3.zero()})));
  CHECK(is_regular_semisimple(g21, g21.character_on_cartan({F3.one(), F3.from_int(2), F3.zero()})));

  // A diagonal element with distinct generic entries gives a regular semisimple character.
  auto F = Field::create(7);
  auto g = LieSuperalgebra::build("gl(2|1)", F);
  Vec y(g.dim());
  y[0] = F.from_int(1);
  y[1] = F.from_int(3);
  y[2] = F.from_int(5);
  CHECK(classify_element(g, y) == ElementKind::Semisimple);
  CHECK(is_regular_semisimple(g, character_from_element(g, y)));
}

TEST_CASE("centralizer codimension is conjugation invariant") {
  auto F = Field::create(5);
  SplitMix64 rng(17);
  for (auto label : {"gl(2|1)", "osp(1|2)", "osp(2|2)"}) {
    auto g = LieSuperalgebra::build(label, F);
    for (int trial = 0; trial < 20; ++trial) {
      PCharacter chi{Vec(g.dim())};
      for (std::size_t i = 0; i < g.dim(); ++i)
        if (g.parity(i) == 0 && rng.below(2)) chi.values[i] = Elem{static_cast<std::uint32_t>(rng.below(5))};
      const auto c = centralizer(g, chi);
      for (const auto& rv : g.root_vectors()) {
        if (g.parity(rv.index) != 0) continue;
        const auto c2 = centralizer(g, conjugate_character(g, chi, vscale(F, F.from_int(1 + rng.below(4)), g.unit(rv.index))));
        CHECK(c.d0 == c2.d0);
        CHECK(c.d1 == c2.d1);
      }
      CHECK(c.d0 % 2 == 0);
    }
  }
}

TEST_CASE("extension of scalars") {
  auto F3 = Field::create(3);
  auto F9 = Field::create(3, 2);
  auto g = LieSuperalgebra::build("gl(2|1)", F3).extend(F9);
  CHECK(g.field() == F9);
  CHECK(g.validate().ok);
  CHECK(structure_constants(g).size() == structure_constants(LieSuperalgebra::build("gl(2|1)", F3)).size());
}
