#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "modsuper/kwverify.hpp"

using namespace modsuper;

namespace {

LieSuperalgebra make(const std::string& label, std::uint32_t p) { return LieSuperalgebra::build(label, Field::create(p)); }

PCharacter cartan_char(const LieSuperalgebra& g, std::vector<int> vals) {
  std::vector<Elem> v;
  for (int x : vals) v.push_back(g.field().from_int(x));
  return g.character_on_cartan(v);
}

Mat act(const BabyVerma& Z, const Vec& x) {
  const Field& F = Z.family().field();
  Mat M(F, Z.dim(), Z.dim());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i].v != 0) M = M + Z.action(i).scaled(x[i]);
  return M;
}

void check_module_relations(const BabyVerma& Z) {
  const auto& g = Z.family().g();
  const Field& F = Z.family().field();
  const auto& chi = Z.family().chi();
  for (std::size_t x = 0; x < g.dim(); ++x) {
    for (std::size_t y = 0; y < g.dim(); ++y) {
      const Elem s = (g.parity(x) & g.parity(y)) ? F.neg(F.one()) : F.one();
      CHECK(Z.action(x) * Z.action(y) - (Z.action(y) * Z.action(x)).scaled(s) == act(Z, g.bracket(x, y)));
    }
    if (g.parity(x) == 0) {
      const Mat lhs = Z.action(x).pow(F.p());
      const Mat rhs = act(Z, g.p_power(x)) + Mat::identity(F, Z.dim()).scaled(F.pow(chi.values[x], F.p()));
      CHECK(lhs == rhs);
    }
  }
}

}  // namespace

TEST_CASE("Lambda_chi") {
  auto o = make("osp(1|2)", 3);
  auto L0 = lambda_set(o, o.character_zero());
  CHECK(L0.k == 1);
  CHECK(L0.weights.size() == 3);
  auto L1 = lambda_set(o, cartan_char(o, {1}));
  CHECK(L1.k == 3);
  CHECK(L1.weights.size() == 3);
  for (const auto& w : L1.weights) {
    CHECK(in_lambda_set(*L1.g, L1.chi, w));
    // not in the prime field
    CHECK(L1.field().as_prime(w[0]) == std::nullopt);
  }
  auto g = make("gl(1|1)", 3);
  CHECK(lambda_set(g, g.character_zero()).weights.size() == 9);
  auto h = make("gl(2|1)", 5);
  auto Lh = lambda_set(h, cartan_char(h, {1, 2, 0}));
  CHECK(Lh.k == 5);
  CHECK(Lh.weights.size() == 125);
  CHECK_THROWS_AS(lambda_set(h, cartan_char(h, {1, 2, 0}), 4), AlgebraError);
  // root-vector support is rejected
  PCharacter bad = o.character_zero();
  bad.values[o.root_vectors().front().index] = o.field().one();
  CHECK_THROWS_AS(lambda_set(o, bad), AlgebraError);
}

TEST_CASE("character finder") {
  auto h = make("gl(2|1)", 3);
  auto r = find_semisimple_character(h, true);
  REQUIRE(r);
  CHECK(is_regular_semisimple(h, *r));
  auto n = find_semisimple_character(h, false);
  REQUIRE(n);
  CHECK(!is_regular_semisimple(h, *n));
  auto o = make("osp(1|2)", 5);
  CHECK(!find_semisimple_character(o, false));
  SplitMix64 rng(3);
  auto rr = find_semisimple_character(o, true, &rng);
  REQUIRE(rr);
  CHECK(is_regular_semisimple(o, *rr));
}

TEST_CASE("baby Verma structure") {
  for (auto [label, p, dim] : {std::tuple{"gl(1|1)", 3u, 2u}, std::tuple{"osp(1|2)", 5u, 10u}, std::tuple{"gl(2|1)", 3u, 12u},
                               std::tuple{"osp(1|2)", 3u, 6u}}) {
    auto g = make(label, p);
    for (bool regular : {false, true}) {
      PCharacter chi = g.character_zero();
      if (regular) chi = *find_semisimple_character(g, true);
      const auto L = lambda_set(g, chi);
      VermaFamily fam(L.g, L.g->simple_system(), L.chi);
      CHECK(fam.dim() == dim);
      for (std::size_t t = 0; t < std::min<std::size_t>(3, L.weights.size()); ++t) {
        const auto Z = fam.build(L.weights[t]);
        check_module_relations(Z);
        const Vec v = Z.highest_vector();
        for (const auto& a : fam.positive()) CHECK(is_zero(Z.root_action(a).apply(v)));
        for (std::size_t i = 0; i < L.g->cartan().size(); ++i)
          CHECK(Z.action(L.g->cartan()[i]).apply(v) == vscale(L.field(), L.weights[t][i], v));
        CHECK(!is_zero(Z.lowest_vector()));
        // raising the lowest vector lands on the highest weight line
        Vec w = Z.lowest_vector();
        for (std::size_t i = fam.positive().size(); i-- > 0;)
          for (int k = 0; k < fam.m_alpha(i); ++k) w = Z.root_action(fam.positive()[i]).apply(w);
        for (std::size_t i = 1; i < w.size(); ++i) CHECK(w[i].v == 0);
      }
    }
  }
  auto g = make("gl(1|1)", 3);
  auto L = lambda_set(g, g.character_zero());
  VermaFamily fam(L.g, L.g->simple_system(), L.chi);
  CHECK_THROWS_AS(fam.build({L.field().one()}), AlgebraError);
  auto o = make("osp(1|2)", 3);
  auto Lo = lambda_set(o, cartan_char(o, {1}));
  VermaFamily fo(Lo.g, Lo.g->simple_system(), Lo.chi);
  CHECK_THROWS_AS(fo.build({Lo.field().zero()}), AlgebraError);
}

TEST_CASE("gl(1|1) examples") {
  auto g = make("gl(1|1)", 3);
  const auto L = lambda_set(g, g.character_zero());
  VermaFamily fam(L.g, L.g->simple_system(), L.chi);
  const Field& F = L.field();
  const Weight beta = fam.positive().front();
  const Vec Hb = L.g->coroot(beta);
  for (const auto& lam : L.weights) {
    const auto Z = fam.build(lam);
    CHECK(Z.lowest_vector() == Vec{F.zero(), F.one()});
    Elem lh = F.zero();
    for (std::size_t i = 0; i < lam.size(); ++i) lh = F.add(lh, F.mul(lam[i], Hb[L.g->cartan()[i]]));
    CHECK(Z.phi_via_module() == lh);
    const auto o = is_irreducible_oracle(Z);
    CHECK(o.irreducible == (lh.v != 0));
    CHECK(head_standard(Z).dim == (lh.v != 0 ? 2u : 1u));
    CHECK(is_irreducible_criterion(fam, lam).irreducible == o.irreducible);
  }
  // rho pairs to zero with the isotropic root
  CHECK(fam.criterion_value({F.zero(), F.zero()}).v == 0);
}

TEST_CASE("oracle agrees with criterion, Phi proportional") {
  for (auto [label, p] : {std::pair{"gl(1|1)", 3u}, std::pair{"gl(1|1)", 5u}, std::pair{"osp(1|2)", 3u},
                          std::pair{"osp(1|2)", 5u}, std::pair{"gl(2|1)", 3u}}) {
    auto g = make(label, p);
    std::vector<PCharacter> chis = {g.character_zero(), *find_semisimple_character(g, true)};
    if (auto n = find_semisimple_character(g, false)) chis.push_back(*n);
    for (const auto& chi : chis) {
      const auto L = lambda_set(g, chi);
      VermaFamily fam(L.g, L.g->simple_system(), L.chi);
      const Field& F = L.field();
      std::optional<Elem> ratio;
      for (const auto& lam : L.weights) {
        const auto Z = fam.build(lam);
        const Elem pm = Z.phi_via_module();
        const Elem pc = fam.criterion_value(lam);
        CHECK((pm.v == 0) == (pc.v == 0));
        CHECK(is_irreducible_oracle(Z).irreducible == (pc.v != 0));
        if (pc.v != 0) {
          const Elem r = F.div(pm, pc);
          if (!ratio) ratio = r;
          CHECK(r == *ratio);
        }
      }
    }
  }
}

TEST_CASE("heads: standard and socle methods agree") {
  for (auto [label, p] : {std::pair{"gl(1|1)", 3u}, std::pair{"osp(1|2)", 3u}, std::pair{"gl(2|1)", 3u}}) {
    auto g = make(label, p);
    std::vector<PCharacter> chis = {g.character_zero()};
    if (auto n = find_semisimple_character(g, false)) chis.push_back(*n);
    for (const auto& chi : chis) {
      const auto L = lambda_set(g, chi);
      VermaFamily fam(L.g, L.g->simple_system(), L.chi);
      for (const auto& lam : L.weights) {
        const auto Z = fam.build(lam);
        const Head a = head_standard(Z), b = head_socle(Z);
        CHECK(a.dim == b.dim);
        CHECK((a.dim == Z.dim()) == is_irreducible_oracle(Z).irreducible);
      }
    }
  }
}

TEST_CASE("odd reflections: singular vectors and Phi across systems") {
  for (auto [label, p] : {std::pair{"gl(2|1)", 3u}, std::pair{"osp(1|2)", 3u}, std::pair{"gl(2|1)", 5u}}) {
    auto g = make(label, p);
    const auto systems = all_simple_systems(g.root_system());
    const std::vector<PCharacter> chis = {g.character_zero(), *find_semisimple_character(g, true)};
    for (const auto& chi : chis) {
      const auto L = lambda_set(g, chi);
      const Field& F = L.field();
      for (const auto& ss : systems) {
        VermaFamily fam(L.g, ss, L.chi);
        for (const auto& delta : ss.simple()) {
          const auto cls = classify_simple_root(ss, delta);
          const SimpleSystem rs = reflect(ss, delta);
          VermaFamily rfam(L.g, rs, L.chi);
          const Weight shift = wsub(ss.rho(), rs.rho());
          const Weight expect = cls.type == SimpleRootType::II ? wneg(delta) : delta;
          CHECK(shift == expect);
          const auto sv = L.g->weight_on_cartan(shift);
          std::optional<Elem> ratio;
          for (const auto& lam : L.weights) {
            const auto Z = fam.build(lam);
            // singular vector for the reflected positive system
            Vec w = Z.highest_vector();
            if (cls.type == SimpleRootType::I) {
              for (std::uint32_t k = 0; k + 1 < F.p(); ++k) w = Z.root_action(wneg(delta)).apply(w);
            } else if (cls.type == SimpleRootType::II) {
              w = Z.root_action(wneg(delta)).apply(w);
            } else {
              const Weight d2 = wscale(Rational(2), delta);
              for (std::uint32_t k = 0; k + 1 < F.p(); ++k) w = Z.root_action(wneg(d2)).apply(w);
              w = Z.root_action(wneg(delta)).apply(w);
            }
            CHECK(!is_zero(w));
            for (const auto& a : rs.positive()) CHECK(is_zero(Z.root_action(a).apply(w)));
            std::vector<Elem> lam2(lam.size());
            for (std::size_t i = 0; i < lam.size(); ++i) lam2[i] = F.add(lam[i], sv[i]);
            const Elem a = Z.phi_via_module();
            const Elem b = rfam.build(lam2).phi_via_module();
            CHECK((a.v == 0) == (b.v == 0));
            if (a.v != 0) {
              if (!ratio) ratio = F.div(b, a);
              CHECK(F.div(b, a) == *ratio);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("semisimplicity") {
  auto o = make("osp(1|2)", 3);
  const auto reg = semisimplicity_check(o, cartan_char(o, {1}));
  CHECK(reg.semisimple);
  CHECK(reg.regular_semisimple);
  CHECK(reg.accounted == 108);
  CHECK(reg.dim_u == 108);
  CHECK(reg.records.size() == 3);
  for (const auto& r : reg.records) CHECK(r.head_dim == 6);
  const auto zero = semisimplicity_check(o, o.character_zero());
  CHECK(!zero.semisimple);
  CHECK(zero.consistent());
  Weight two_delta;
  for (const auto& a : o.simple_system().positive())
    if (o.root_system()->is_even(a)) two_delta = a;
  const auto nil = semisimplicity_check(o, nilpotent_character(o, two_delta));
  CHECK(!nil.semisimple);
  CHECK(nil.consistent());
  auto g = make("gl(1|1)", 3);
  const auto r1 = semisimplicity_check(g, cartan_char(g, {1, 0}));
  CHECK(r1.semisimple);
  CHECK(r1.accounted == 36);
  const auto r2 = semisimplicity_check(g, cartan_char(g, {1, 2}));
  CHECK(!r2.semisimple);
  CHECK(r2.consistent());
}
